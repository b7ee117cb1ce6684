// verify.hpp -- the cross-module verification suite: named checks with
// measured values, tolerances, and anchor tags, serialized as JSON.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "painleve/connect.hpp"
#include "painleve/gl.hpp"
#include "painleve/hastings_mcleod.hpp"

namespace painleve {

struct CheckRecord {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;  // always measured <= tolerance
    std::string paper_anchor;
};

struct VerificationReport {
    std::vector<CheckRecord> checks;
    bool all_pass() const;
};

nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

// Anchor tags that must all appear in a complete report (coverage lock).
const std::vector<std::string>& enumerated_anchors();

struct VerifyParams {
    Grid1D hm_grid{-12.0, 8.0, 2001};
    Grid2D connect_grid{-12.0, 6.0, 0.0, 16.0, 361, 321};
    std::vector<double> epsilons{0.1, 0.05, 0.025};
    double chi = 0.5;
    double L = 2.5;
    int nodes_per_layer = 16;
    double x1_level = -11.0;   // rescaled-profile probe depth
    double t2_window = 4.0;
    BlowupWindow window;       // fixed comparison window for the blow-up chain

    void validate() const;
};

struct GLRun {
    GLProblem prob;
    Field2D u;
};

struct VerifyArtifacts {
    Field1D h;       // 1D Hastings-McLeod on hm_grid
    Field2D y;       // connecting solution on connect_grid
    Field1D h_ref;   // on the x1-axis of connect_grid
    std::vector<GLRun> gl;
};

// Solves everything the report needs. `progress`, when non-null, receives
// one line per stage.
VerifyArtifacts compute_verify_artifacts(const VerifyParams& params,
                                         std::ostream* progress = nullptr);

VerificationReport build_report(const VerifyParams& params, const VerifyArtifacts& art);

inline VerificationReport run_verify(const VerifyParams& params,
                                     std::ostream* progress = nullptr) {
    return build_report(params, compute_verify_artifacts(params, progress));
}

// Granular measurements shared by the report, the acceptance suite, and the
// corruption tests.
struct ConnectChecks {
    double axis_sup = 0.0;         // max |y(x1, 0)|
    double bounded_excess = 0.0;   // max (|y| - sqrt((-x1)^+/2))
    double airy_ratio = 0.0;       // max y/Ai(x1), x1 in [3, x1max-1]
    int airy_ratio_argmax_i2 = 0;  // monotonicity in x2 puts it on the top edge
    int mono_x1_violations = 0;    // forward diff >= +1e-10
    int mono_x2_violations = 0;    // forward diff <= -1e-10
    double ordering_excess = 0.0;  // max (y - h_ref)
    double min_value = 0.0;
    double top_edge_gap = 0.0;     // max |y(., x2max-h) - h_ref|
};

ConnectChecks run_connect_checks(const Field2D& y, const Field1D& h_ref);

// Default initial ansatz of the connecting solve; the solution must not have
// larger Painleve energy than this within the odd class.
Field2D connect_default_init(const Grid2D& grid, const Field1D& h_ref);

// sup over the window of |w_eps - y| with y sampled at the window nodes.
double blowup_discrepancy(const Field2D& w, const Field2D& y);

}  // namespace painleve
