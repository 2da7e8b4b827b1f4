#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "atl/claims.hpp"
#include "atl/elliptic_arakelov.hpp"
#include "atl/genus_bounds.hpp"
#include "atl/numerics.hpp"
#include "atl/torus_spectral.hpp"

// JSON and CSV forms of the records the command-line tool emits. Every JSON
// mapping round-trips exactly: doubles are written with shortest round-trip digits.
namespace atl {

using Json = nlohmann::json;

void to_json(Json& j, const Precision& p);
void from_json(const Json& j, Precision& p);

void to_json(Json& j, const ClaimRecord& r);
void from_json(const Json& j, ClaimRecord& r);
void to_json(Json& j, const ClaimSummary& s);
void from_json(const Json& j, ClaimSummary& s);
// {"precision", "claims", "summary", "warnings"}
void to_json(Json& j, const ClaimReport& r);
void from_json(const Json& j, ClaimReport& r);

void to_json(Json& j, const BoundBreakdown& b);
void from_json(const Json& j, BoundBreakdown& b);
// Flat: the breakdown fields plus paper_value, delta (null when absent) and annotation.
void to_json(Json& j, const TableRow& r);
void from_json(const Json& j, TableRow& r);

void to_json(Json& j, const EllipticSummary& s);
void from_json(const Json& j, EllipticSummary& s);
void to_json(Json& j, const DetComparison& d);
void from_json(const Json& j, DetComparison& d);

// 12 significant digits, '.' decimal point, independent of the global locale.
std::string format_number(double v);

// Header line followed by one line per row.
inline constexpr const char* kTableCsvHeader =
    "genus,heat_term,csel_lower,log_area_bound,a_g,e_g_refined,upper_exact,upper_simplified,"
    "paper_value,delta";
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

}  // namespace atl

namespace nlohmann {
template <>
struct adl_serializer<atl::UpperHalfPoint> {
  static void to_json(json& j, const atl::UpperHalfPoint& tau) {
    j = json{{"x", tau.x()}, {"y", tau.y()}};
  }
  static atl::UpperHalfPoint from_json(const json& j) {
    return {j.at("x").get<double>(), j.at("y").get<double>()};
  }
};
}  // namespace nlohmann
