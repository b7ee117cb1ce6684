#include "painleve/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "painleve/special.hpp"

namespace painleve {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::vector<double> parse_row(const std::string& line, std::size_t cols,
                              const std::string& path) {
    std::vector<double> vals;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.size() != cols)
        throw std::runtime_error("malformed CSV row in " + path + ": " + line);
    return vals;
}

}  // namespace

void write_field_csv(const std::string& path, const Field1D& f) {
    auto out = open_out(path);
    out << "x,value\n";
    for (int i = 0; i < f.grid.n; ++i)
        out << format_g17(f.grid.x(i)) << ',' << format_g17(f.values[i]) << '\n';
}

void write_field_csv(const std::string& path, const Field2D& f) {
    auto out = open_out(path);
    out << "x1,x2,value\n";
    for (int i1 = 0; i1 < f.grid.n1; ++i1)
        for (int i2 = 0; i2 < f.grid.n2; ++i2)
            out << format_g17(f.grid.x1(i1)) << ',' << format_g17(f.grid.x2(i2)) << ','
                << format_g17(f.at(i1, i2)) << '\n';
}

Field1D read_field_csv_1d(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != "x,value")
        throw std::runtime_error("bad 1D field CSV header in " + path);
    std::vector<double> xs, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto row = parse_row(line, 2, path);
        xs.push_back(row[0]);
        vs.push_back(row[1]);
    }
    if (xs.size() < 3) throw std::runtime_error("too few rows in " + path);
    Grid1D g(xs.front(), xs.back(), static_cast<int>(xs.size()));
    return Field1D(g, std::move(vs));
}

Field2D read_field_csv_2d(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != "x1,x2,value")
        throw std::runtime_error("bad 2D field CSV header in " + path);
    std::vector<double> x1s, x2s, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto row = parse_row(line, 3, path);
        x1s.push_back(row[0]);
        x2s.push_back(row[1]);
        vs.push_back(row[2]);
    }
    // Rows are in the frozen ordering: i2 varies fastest.
    std::size_t n2 = 1;
    while (n2 < x2s.size() && x2s[n2] > x2s[n2 - 1]) ++n2;
    if (n2 < 3 || x1s.size() % n2 != 0)
        throw std::runtime_error("inconsistent 2D field CSV layout in " + path);
    const std::size_t n1 = x1s.size() / n2;
    Grid2D g(x1s.front(), x1s.back(), x2s.front(), x2s[n2 - 1],
             static_cast<int>(n1), static_cast<int>(n2));
    return Field2D(g, std::move(vs));
}

void write_profile_csv(const std::string& path, const RescaledProfile& p) {
    auto out = open_out(path);
    out << "t2,ytilde,tanh_ref\n";
    for (std::size_t j = 0; j < p.t2_samples.size(); ++j)
        out << format_g17(p.t2_samples[j]) << ',' << format_g17(p.values[j]) << ','
            << format_g17(heteroclinic(p.t2_samples[j])) << '\n';
}

void write_jsonl_log(const std::string& path, const std::vector<NewtonStep>& steps) {
    auto out = open_out(path);
    for (const auto& s : steps) {
        nlohmann::json obj{{"iter", s.iter},
                           {"residual_sup", s.residual_sup},
                           {"damping", s.damping}};
        out << obj.dump() << '\n';
    }
}

}  // namespace painleve
