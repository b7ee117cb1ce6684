// csv_io.hpp -- field CSV files, the rescale profile CSV, and the JSONL
// convergence log. Formats are bit-exact contracts: fixed headers, rows in
// the frozen node ordering, values printed with 17 significant digits.
#pragma once

#include <string>
#include <vector>

#include "painleve/grid.hpp"
#include "painleve/connect.hpp"
#include "painleve/solver_errors.hpp"

namespace painleve {

// 17-significant-digit decimal form; round-trips a double exactly.
std::string format_g17(double v);

// 1D: header "x,value"; 2D: header "x1,x2,value"; one row per node in the
// frozen ordering (i2 fastest for 2D).
void write_field_csv(const std::string& path, const Field1D& f);
void write_field_csv(const std::string& path, const Field2D& f);

Field1D read_field_csv_1d(const std::string& path);
Field2D read_field_csv_2d(const std::string& path);

// Header "t2,ytilde,tanh_ref".
void write_profile_csv(const std::string& path, const RescaledProfile& p);

// One JSON object per Newton step with keys iter, residual_sup, damping.
void write_jsonl_log(const std::string& path, const std::vector<NewtonStep>& steps);

}  // namespace painleve
