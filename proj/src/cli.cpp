#include "atl/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "atl/claims.hpp"
#include "atl/elliptic_arakelov.hpp"
#include "atl/errors.hpp"
#include "atl/genus_bounds.hpp"
#include "atl/report_io.hpp"
#include "atl/torus_spectral.hpp"

namespace atl::cli {

namespace {

std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

void print_field(std::ostream& out, std::string_view name, double value) {
  out << name << " = " << format_number(value) << '\n';
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Opens `path` for writing, "-" meaning `fallback`.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path != "-") {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw DomainError("cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw DomainError("write to output file failed");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct BoundArgs {
  int genus = 0;
  std::string form = "exact";
  std::string area = "c36";
  bool json = false;
};

struct EllipticArgs {
  std::string tau;
  bool json = false;
};

struct TorusArgs {
  std::string tau;
  std::string method = "both";
  double tol = 1e-6;
  bool json = false;
};

struct TableArgs {
  int from = 2;
  int to = 10;
  std::string form = "exact";
  std::string area = "c36";
  std::string csv_path;
  std::string json_path;
};

struct ClaimsArgs {
  std::vector<std::string> only;
  std::string json_path;
  std::string allowlist_path;
  bool strict = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  if (a.genus < 2) {
    throw DomainError("bound requires --genus >= 2; use `atl elliptic --tau x,y` for genus one");
  }
  const BoundBreakdown b =
      upper_bound_logdet(a.genus, bound_form_from_string(a.form), area_variant_from_string(a.area));
  if (a.json) {
    write_json(out, Json(b));
    return kExitOk;
  }
  out << "genus = " << b.genus << '\n'
      << "form = " << to_string(b.form) << '\n'
      << "area_variant = " << to_string(b.area_variant) << '\n';
  print_field(out, "heat_integral", b.heat_integral);
  print_field(out, "heat_term", b.heat_term);
  print_field(out, "csel_lower", b.csel_lower);
  print_field(out, "metric_ratio_bound_exact", b.metric_ratio_bound_exact);
  print_field(out, "metric_ratio_bound_simplified", b.metric_ratio_bound_simplified);
  print_field(out, "log_area_bound", b.log_area_bound);
  print_field(out, "a_g", b.a_g);
  print_field(out, "wilms_lower", b.wilms_lower);
  print_field(out, "e_g_simple", b.e_g_simple);
  print_field(out, "e_g_refined", b.e_g_refined);
  print_field(out, "upper_exact", b.upper_exact);
  print_field(out, "upper_simplified", b.upper_simplified);
  print_field(out, "upper", b.upper());
  return kExitOk;
}

int cmd_elliptic(const EllipticArgs& a, const Precision& prec, std::ostream& out) {
  const EllipticSummary s = elliptic_summary(parse_tau(a.tau), prec);
  if (a.json) {
    write_json(out, Json(s));
    return kExitOk;
  }
  out << "tau = " << format_number(s.tau.x()) << " + " << format_number(s.tau.y()) << "i\n";
  print_field(out, "arakelov_area", s.arakelov_area);
  print_field(out, "arakelov_logdet", s.arakelov_logdet);
  print_field(out, "d_ar", s.d_ar);
  print_field(out, "upper_bound_log", s.upper_bound_log);
  print_field(out, "upper_bound_log_statement", s.upper_bound_log_statement);
  print_field(out, "slack", s.slack);
  return kExitOk;
}

int cmd_torus_det(const TorusArgs& a, const Precision& prec, std::ostream& out) {
  if (!(a.tol > 0.0)) throw DomainError("--tol must be positive");
  const UpperHalfPoint tau = parse_tau(a.tau);
  const bool closed = a.method == "closed" || a.method == "both";
  const bool oracle = a.method == "oracle" || a.method == "both";

  Json j{{"tau", tau}};
  DetComparison cmp{tau, 0.0, 0.0, 0.0};
  if (closed) cmp.logdet_closed = logdet_closed(tau, prec);
  if (oracle) cmp.logdet_oracle = logdet_oracle(FlatTorus(tau), prec);
  if (closed) j["logdet_closed"] = cmp.logdet_closed;
  if (oracle) j["logdet_oracle"] = cmp.logdet_oracle;

  int code = kExitOk;
  if (closed && oracle) {
    cmp.difference = cmp.logdet_oracle - cmp.logdet_closed;
    j["difference"] = cmp.difference;
    j["tolerance"] = a.tol;
    if (!(std::abs(cmp.difference) <= a.tol)) code = kExitAudit;
  }

  if (a.json) {
    write_json(out, j);
  } else {
    if (closed) print_field(out, "logdet_closed", cmp.logdet_closed);
    if (oracle) print_field(out, "logdet_oracle", cmp.logdet_oracle);
    if (closed && oracle) {
      print_field(out, "difference", cmp.difference);
      out << (code == kExitOk ? "agreement within " : "MISMATCH beyond ") << format_number(a.tol)
          << '\n';
    }
  }
  return code;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const auto rows =
      bound_table(a.from, a.to, bound_form_from_string(a.form), area_variant_from_string(a.area));
  if (!a.json_path.empty()) {
    OutputTarget target(a.json_path, out);
    write_json(target.stream(), Json(rows));
    target.close();
  }
  if (!a.csv_path.empty() || a.json_path.empty()) {
    OutputTarget target(a.csv_path.empty() ? "-" : a.csv_path, out);
    write_table_csv(target.stream(), rows);
    target.close();
  }
  return kExitOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string describe(const ClaimValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return "-";
}

int cmd_verify_claims(const ClaimsArgs& a, const Precision& prec, std::ostream& out,
                      std::ostream& err) {
  Allowlist allowlist = Allowlist::builtin();
  if (!a.allowlist_path.empty()) {
    try {
      allowlist = Allowlist::parse(read_file(a.allowlist_path));
    } catch (const std::invalid_argument& e) {
      throw DomainError(e.what());
    }
  }

  ClaimReport report;
  if (a.only.empty()) {
    report = run_all(prec, allowlist);
  } else {
    try {
      report = run_selected(a.only, prec, allowlist);
    } catch (const std::invalid_argument& e) {
      throw DomainError(e.what());
    }
  }

  if (!a.json_path.empty()) {
    OutputTarget target(a.json_path, out);
    write_json(target.stream(), Json(report));
    target.close();
  }
  if (a.json_path != "-") {
    for (const ClaimRecord& r : report.records) {
      out << r.id << "  " << to_string(r.status) << "  computed=" << describe(r.computed);
      if (r.delta) out << "  delta=" << format_number(*r.delta);
      if (r.status == ClaimStatus::discrepant && allowlist.contains(r.id)) out << "  (expected)";
      out << '\n';
    }
    const ClaimSummary& s = report.summary;
    out << "summary: confirmed=" << s.confirmed << " discrepant=" << s.discrepant
        << " assumed=" << s.assumed << " ambiguous=" << s.ambiguous << " errored=" << s.errored
        << '\n';
  }
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';

  if (!a.strict) return kExitOk;
  const int code = strict_exit_code(report, allowlist);
  if (code != kExitOk) err << "strict audit failed: unexpected DISCREPANT or ERRORED claims\n";
  return code;
}

}  // namespace

UpperHalfPoint parse_tau(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw DomainError("tau must be given as \"x,y\", got '" + std::string(text) + "'");
  }
  const auto x = parse_double(text.substr(0, comma));
  const auto y = parse_double(text.substr(comma + 1));
  if (!x || !y) throw DomainError("tau components are not decimal numbers: '" + std::string(text) + "'");
  if (!(*y > 0.0)) throw DomainError("tau must lie in the upper half-plane (y > 0)");
  return UpperHalfPoint(*x, *y);
}

Precision precision_from_env(const char* env_value) {
  Precision prec;
  if (env_value == nullptr || *env_value == '\0') return prec;
  const auto v = parse_double(env_value);
  if (!v || !(*v > 0.0) || *v >= 1.0) {
    throw DomainError("ATL_PRECISION must be a relative tolerance in (0, 1), got '" +
                      std::string(env_value) + "'");
  }
  prec.rel_tol = *v;
  return prec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective bounds and numeric audit for determinants of Arakelov Laplacians"};
  app.name("atl");
  app.require_subcommand(1);
  app.footer(
      "tau is written \"x,y\" for x + iy (y > 0).\n"
      "ATL_PRECISION=<rel_tol> overrides the default relative tolerance 1e-12.\n"
      "Exit codes: 0 ok, 1 strict audit failure or determinant mismatch, 2 usage or domain "
      "error, 3 numeric non-convergence.");

  BoundArgs bound;
  auto* sub_bound = app.add_subcommand("bound", "Upper bound for log det(Delta_Ar) at genus g >= 2");
  sub_bound->add_option("--genus", bound.genus, "Genus g")->required();
  sub_bound->add_option("--form", bound.form, "exact | simplified")
      ->check(CLI::IsMember({"exact", "simplified"}))
      ->capture_default_str();
  sub_bound->add_option("--area", bound.area, "Area constant: e4pi | c36")
      ->check(CLI::IsMember({"e4pi", "c36"}))
      ->capture_default_str();
  sub_bound->add_flag("--json", bound.json, "Emit JSON");

  EllipticArgs elliptic;
  auto* sub_elliptic = app.add_subcommand("elliptic", "Genus-one Arakelov quantities at tau");
  sub_elliptic->add_option("--tau", elliptic.tau, "Period \"x,y\"")->required();
  sub_elliptic->add_flag("--json", elliptic.json, "Emit JSON");

  TorusArgs torus;
  auto* sub_torus = app.add_subcommand("torus-det", "Flat-torus log-determinant, closed form vs spectral oracle");
  sub_torus->add_option("--tau", torus.tau, "Period \"x,y\"")->required();
  sub_torus->add_option("--method", torus.method, "closed | oracle | both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}))
      ->capture_default_str();
  sub_torus->add_option("--tol", torus.tol, "Allowed |oracle - closed| with --method both")
      ->capture_default_str();
  sub_torus->add_flag("--json", torus.json, "Emit JSON");

  TableArgs table;
  auto* sub_table = app.add_subcommand("table", "Bound table over a genus range (CSV on stdout by default)");
  sub_table->add_option("--from", table.from, "First genus (>= 2)")->capture_default_str();
  sub_table->add_option("--to", table.to, "Last genus")->capture_default_str();
  sub_table->add_option("--form", table.form, "exact | simplified")
      ->check(CLI::IsMember({"exact", "simplified"}))
      ->capture_default_str();
  sub_table->add_option("--area", table.area, "e4pi | c36")
      ->check(CLI::IsMember({"e4pi", "c36"}))
      ->capture_default_str();
  sub_table->add_option("--csv", table.csv_path, "Write CSV to PATH ('-' for stdout)");
  sub_table->add_option("--json", table.json_path, "Write JSON to PATH ('-' for stdout)");

  ClaimsArgs claims;
  auto* sub_claims = app.add_subcommand("verify-claims", "Recompute and classify every registered numeric claim");
  sub_claims->add_option("--only", claims.only, "Claim ids (comma separated or repeated)")
      ->delimiter(',');
  sub_claims->add_option("--json", claims.json_path, "Write the report as JSON to PATH ('-' for stdout)");
  sub_claims->add_option("--allowlist", claims.allowlist_path,
                         "Expected-discrepancy list replacing the shipped one");
  sub_claims->add_flag("--strict", claims.strict,
                       "Exit 1 on DISCREPANT claims outside the allowlist or any ERRORED claim");

  std::vector<const char*> argv;
  argv.push_back("atl");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Precision prec = precision_from_env(std::getenv("ATL_PRECISION"));
    if (sub_bound->parsed()) return cmd_bound(bound, out);
    if (sub_elliptic->parsed()) return cmd_elliptic(elliptic, prec, out);
    if (sub_torus->parsed()) return cmd_torus_det(torus, prec, out);
    if (sub_table->parsed()) return cmd_table(table, out);
    if (sub_claims->parsed()) return cmd_verify_claims(claims, prec, out, err);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace atl::cli
