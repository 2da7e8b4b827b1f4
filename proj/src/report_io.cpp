#include "atl/report_io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace atl {

namespace {

Json value_to_json(const ClaimValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return nullptr;
}

ClaimValue value_from_json(const Json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.get<double>();
  throw std::invalid_argument("claim value must be null, a number or a string");
}

Json optional_to_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<double> optional_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

void to_json(Json& j, const Precision& p) {
  j = Json{{"rel_tol", p.rel_tol},
           {"series_tail_tol", p.series_tail_tol},
           {"em_cutoff", p.em_cutoff},
           {"em_order", p.em_order},
           {"lattice_tail_tol", p.lattice_tail_tol}};
}

void from_json(const Json& j, Precision& p) {
  j.at("rel_tol").get_to(p.rel_tol);
  j.at("series_tail_tol").get_to(p.series_tail_tol);
  j.at("em_cutoff").get_to(p.em_cutoff);
  j.at("em_order").get_to(p.em_order);
  j.at("lattice_tail_tol").get_to(p.lattice_tail_tol);
}

void to_json(Json& j, const ClaimRecord& r) {
  j = Json{{"id", r.id},
           {"location", r.location},
           {"quote", r.quote},
           {"kind", to_string(r.kind)},
           {"claimed", value_to_json(r.claimed)},
           {"computed", value_to_json(r.computed)},
           {"delta", optional_to_json(r.delta)},
           {"status", to_string(r.status)},
           {"note", r.note}};
}

void from_json(const Json& j, ClaimRecord& r) {
  j.at("id").get_to(r.id);
  j.at("location").get_to(r.location);
  j.at("quote").get_to(r.quote);
  r.kind = claim_kind_from_string(j.at("kind").get<std::string>());
  r.claimed = value_from_json(j.at("claimed"));
  r.computed = value_from_json(j.at("computed"));
  r.delta = optional_from_json(j.at("delta"));
  r.status = claim_status_from_string(j.at("status").get<std::string>());
  r.note = j.value("note", std::string{});
}

void to_json(Json& j, const ClaimSummary& s) {
  j = Json{{"confirmed", s.confirmed},
           {"discrepant", s.discrepant},
           {"assumed", s.assumed},
           {"ambiguous", s.ambiguous},
           {"errored", s.errored}};
}

void from_json(const Json& j, ClaimSummary& s) {
  j.at("confirmed").get_to(s.confirmed);
  j.at("discrepant").get_to(s.discrepant);
  j.at("assumed").get_to(s.assumed);
  j.at("ambiguous").get_to(s.ambiguous);
  s.errored = j.value("errored", 0);
}

void to_json(Json& j, const ClaimReport& r) {
  j = Json{{"precision", r.precision},
           {"claims", r.records},
           {"summary", r.summary},
           {"warnings", r.warnings}};
}

void from_json(const Json& j, ClaimReport& r) {
  j.at("precision").get_to(r.precision);
  j.at("claims").get_to(r.records);
  j.at("summary").get_to(r.summary);
  r.warnings = j.value("warnings", std::vector<std::string>{});
}

void to_json(Json& j, const BoundBreakdown& b) {
  j = Json{{"genus", b.genus},
           {"form", to_string(b.form)},
           {"area_variant", to_string(b.area_variant)},
           {"heat_integral", b.heat_integral},
           {"heat_term", b.heat_term},
           {"csel_lower", b.csel_lower},
           {"metric_ratio_bound_exact", b.metric_ratio_bound_exact},
           {"metric_ratio_bound_simplified", b.metric_ratio_bound_simplified},
           {"log_area_bound", b.log_area_bound},
           {"a_g", b.a_g},
           {"wilms_lower", b.wilms_lower},
           {"e_g_simple", b.e_g_simple},
           {"e_g_refined", b.e_g_refined},
           {"upper_exact", b.upper_exact},
           {"upper_simplified", b.upper_simplified},
           {"upper", b.upper()}};
}

void from_json(const Json& j, BoundBreakdown& b) {
  j.at("genus").get_to(b.genus);
  b.form = bound_form_from_string(j.at("form").get<std::string>());
  b.area_variant = area_variant_from_string(j.at("area_variant").get<std::string>());
  j.at("heat_integral").get_to(b.heat_integral);
  j.at("heat_term").get_to(b.heat_term);
  j.at("csel_lower").get_to(b.csel_lower);
  j.at("metric_ratio_bound_exact").get_to(b.metric_ratio_bound_exact);
  j.at("metric_ratio_bound_simplified").get_to(b.metric_ratio_bound_simplified);
  j.at("log_area_bound").get_to(b.log_area_bound);
  j.at("a_g").get_to(b.a_g);
  j.at("wilms_lower").get_to(b.wilms_lower);
  j.at("e_g_simple").get_to(b.e_g_simple);
  j.at("e_g_refined").get_to(b.e_g_refined);
  j.at("upper_exact").get_to(b.upper_exact);
  j.at("upper_simplified").get_to(b.upper_simplified);
}

void to_json(Json& j, const TableRow& r) {
  j = r.bound;
  j["paper_value"] = optional_to_json(r.paper_value);
  j["delta"] = optional_to_json(r.delta);
  j["annotation"] = r.annotation;
}

void from_json(const Json& j, TableRow& r) {
  j.get_to(r.bound);
  r.paper_value = optional_from_json(j.at("paper_value"));
  r.delta = optional_from_json(j.at("delta"));
  j.at("annotation").get_to(r.annotation);
}

void to_json(Json& j, const EllipticSummary& s) {
  j = Json{{"tau", s.tau},
           {"arakelov_area", s.arakelov_area},
           {"arakelov_logdet", s.arakelov_logdet},
           {"d_ar", s.d_ar},
           {"upper_bound_log", s.upper_bound_log},
           {"upper_bound_log_statement", s.upper_bound_log_statement},
           {"slack", s.slack}};
}

void from_json(const Json& j, EllipticSummary& s) {
  s.tau = j.at("tau").get<UpperHalfPoint>();
  j.at("arakelov_area").get_to(s.arakelov_area);
  j.at("arakelov_logdet").get_to(s.arakelov_logdet);
  j.at("d_ar").get_to(s.d_ar);
  j.at("upper_bound_log").get_to(s.upper_bound_log);
  j.at("upper_bound_log_statement").get_to(s.upper_bound_log_statement);
  j.at("slack").get_to(s.slack);
}

void to_json(Json& j, const DetComparison& d) {
  j = Json{{"tau", d.tau},
           {"logdet_closed", d.logdet_closed},
           {"logdet_oracle", d.logdet_oracle},
           {"difference", d.difference}};
}

void from_json(const Json& j, DetComparison& d) {
  d.tau = j.at("tau").get<UpperHalfPoint>();
  j.at("logdet_closed").get_to(d.logdet_closed);
  j.at("logdet_oracle").get_to(d.logdet_oracle);
  j.at("difference").get_to(d.difference);
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << kTableCsvHeader << '\n';
  for (const TableRow& r : rows) {
    const BoundBreakdown& b = r.bound;
    out << b.genus << ',' << format_number(b.heat_term) << ',' << format_number(b.csel_lower)
        << ',' << format_number(b.log_area_bound) << ',' << format_number(b.a_g) << ','
        << format_number(b.e_g_refined) << ',' << format_number(b.upper_exact) << ','
        << format_number(b.upper_simplified) << ','
        << (r.paper_value ? format_number(*r.paper_value) : std::string{}) << ','
        << (r.delta ? format_number(*r.delta) : std::string{}) << '\n';
  }
}

}  // namespace atl
