#include "whls/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace whls {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

using nlohmann::json;

namespace {

json values_array(const std::vector<double>& v) {
    return json(v);
}

} // namespace

void to_json(json& j, const DerivedExponents& e) {
    j = json{{"theta1", e.theta1},
             {"theta2", e.theta2},
             {"M", e.M},
             {"hyperbola_lhs", e.hyperbola_lhs}};
}

void to_json(json& j, const Classification& c) {
    j = json{{"general_verdict", to_string(c.general_verdict)},
             {"radial_verdict", to_string(c.radial_verdict)},
             {"general_in_scope", c.general_in_scope},
             {"scalar_mode", c.scalar_mode},
             {"exponents_valid", c.exponents_valid}};
    if (c.exponents_valid) j["exponents"] = c.exponents;
}

void to_json(json& j, const BoundednessReport& r) {
    j = json{{"verdict", to_string(r.verdict)},
             {"c1_min", r.c1_min},
             {"c1_max", r.c1_max},
             {"c2_min", r.c2_min},
             {"c2_max", r.c2_max},
             {"c1_limit_zero", r.c1_limit_zero},
             {"c1_limit_inf", r.c1_limit_inf},
             {"c2_limit_zero", r.c2_limit_zero},
             {"c2_limit_inf", r.c2_limit_inf},
             {"radii", values_array(r.radii)},
             {"ratios_c1", values_array(r.ratios_c1)},
             {"ratios_c2", values_array(r.ratios_c2)}};
}

void to_json(json& j, const IdentityReport& r) {
    j = json{{"identity", r.identity_name},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"residual", r.residual}};
}

void to_json(json& j, const SystemIdentityReport& r) {
    j = json{{"pohozaev", r.pohozaev}, {"cross_energy", r.cross_energy}};
}

void to_json(json& j, const ExponentTrace& t) {
    j = json{{"a", values_array(t.a)},
             {"b", values_array(t.b)},
             {"verdict", to_string(t.verdict)}};
    if (t.verdict == TraceVerdict::ConvergesNegative) j["limit"] = t.limit;
}

void to_json(json& j, const BlowupTrace& t) {
    j = json{{"l", t.l},
             {"m", t.m},
             {"log_beta", values_array(t.log_beta)},
             {"log_a", values_array(t.log_a)},
             {"holds", t.holds},
             {"all_hold", t.all_hold}};
}

void to_json(json& j, const RadialFunction& f) {
    j = json{{"r", values_array(f.grid.r)},
             {"values", values_array(f.values)},
             {"head_exp", f.head_exp},
             {"tail_exp", f.tail_exp}};
}

void to_json(json& j, const SolveResult& r) {
    j = json{{"status", to_string(r.status)},
             {"iterations", r.iterations},
             {"residual_history", values_array(r.residual_history)},
             {"normalization_history", values_array(r.normalization_history)},
             {"u", r.u},
             {"v", r.v}};
}

std::string csv_trace(const ExponentTrace& t) {
    std::ostringstream out;
    out << "j,a_j,b_j\n";
    for (std::size_t j = 0; j < t.a.size(); ++j) {
        out << j << ',' << format_double(t.a[j]) << ','
            << (j < t.b.size() ? format_double(t.b[j]) : "") << '\n';
    }
    return out.str();
}

std::string csv_radial(const RadialFunction& f) {
    std::ostringstream out;
    out << "r,value\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        out << format_double(f.grid.r[i]) << ',' << format_double(f.values[i]) << '\n';
    return out.str();
}

std::string csv_radial_pair(const RadialFunction& u, const RadialFunction& v) {
    std::ostringstream out;
    out << "r,u,v\n";
    for (std::size_t i = 0; i < u.size(); ++i)
        out << format_double(u.grid.r[i]) << ',' << format_double(u.values[i]) << ','
            << format_double(v.values[i]) << '\n';
    return out.str();
}

std::string csv_ratios(const BoundednessReport& r) {
    std::ostringstream out;
    out << "r,c1,c2\n";
    for (std::size_t i = 0; i < r.radii.size(); ++i)
        out << format_double(r.radii[i]) << ',' << format_double(r.ratios_c1[i]) << ','
            << format_double(r.ratios_c2[i]) << '\n';
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw io_error("write failed: " + path);
}

} // namespace whls
