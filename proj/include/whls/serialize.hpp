#pragma once

#include <string>

#include <json.hpp>

#include "whls/candidate.hpp"
#include "whls/criteria.hpp"
#include "whls/grid.hpp"
#include "whls/nonexistence.hpp"
#include "whls/pohozaev.hpp"
#include "whls/solver.hpp"

namespace whls {

// Round-trip-safe decimal rendering (17 significant digits, '.' decimal).
std::string format_double(double x);

void to_json(nlohmann::json& j, const DerivedExponents& e);
void to_json(nlohmann::json& j, const Classification& c);
void to_json(nlohmann::json& j, const BoundednessReport& r);
void to_json(nlohmann::json& j, const IdentityReport& r);
void to_json(nlohmann::json& j, const SystemIdentityReport& r);
void to_json(nlohmann::json& j, const ExponentTrace& t);
void to_json(nlohmann::json& j, const BlowupTrace& t);
void to_json(nlohmann::json& j, const RadialFunction& f);
void to_json(nlohmann::json& j, const SolveResult& r);

// CSV tables. Each returns the full file contents including the header line.
std::string csv_trace(const ExponentTrace& t);                     // j,a_j,b_j
std::string csv_radial(const RadialFunction& f);                   // r,f
std::string csv_radial_pair(const RadialFunction& u, const RadialFunction& v); // r,u,v
std::string csv_ratios(const BoundednessReport& r);                // r,c1,c2

// Writes text to a file, throwing io_error on failure.
void write_text_file(const std::string& path, const std::string& text);

} // namespace whls
