#include "atl/claims.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "atl/elliptic_arakelov.hpp"
#include "atl/embedded_allowlist.hpp"
#include "atl/genus_bounds.hpp"
#include "atl/kernels/sweep.hpp"
#include "atl/torus_spectral.hpp"

namespace atl {

namespace {

using constants::log_two;
using constants::log_two_pi;
using constants::log_two_pi4;
using constants::pi;

std::string fixed(double v, int digits = 10) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

ClaimOutcome equality(double computed, double claimed, double tol, std::string note = {}) {
  const double delta = computed - claimed;
  return {computed, delta,
          std::abs(delta) <= tol ? ClaimStatus::confirmed : ClaimStatus::discrepant,
          std::move(note)};
}

ClaimOutcome predicate(ClaimValue computed, std::optional<double> delta, bool holds,
                       std::string note = {}) {
  return {std::move(computed), delta, holds ? ClaimStatus::confirmed : ClaimStatus::discrepant,
          std::move(note)};
}

ClaimOutcome assumed(std::string note) {
  return {std::monostate{}, std::nullopt, ClaimStatus::assumed, std::move(note)};
}

// 4 zeta'(-1) as printed in the corollary.
constexpr double kPrintedFourZetaPrime = -0.661685;
constexpr double kPrintedSlope = 1.933721640489272;
constexpr double kPrintedConstant = -3.6113717392987086 - 0.661685;

constexpr long kSweepFrom = 11;
constexpr long kSweepTo = 3580;

std::vector<Claim> make_registry() {
  std::vector<Claim> r;

  r.push_back({"CL-01", "proof of main theorem: heat-kernel integral",
               "\\int^{\\infty}_{1}\\frac{e^{-t/4}}{4\\pi t}dt\\le 0.0832<0.1",
               ClaimKind::inequality, std::string("I <= 0.0832 < 0.1"),
               [](const Precision&) {
                 const double i = heat_integral();
                 return predicate(i, i - 0.0832, i <= 0.0832 && 0.0832 < 0.1,
                                  "I = E1(1/4) / (4 pi)");
               }});

  r.push_back({"CL-02", "proof of main theorem: heat-kernel integral", "0.0832",
               ClaimKind::equality, 0.0832,
               [](const Precision&) { return equality(heat_integral(), 0.0832, 2e-4); }});

  r.push_back({"CL-03", "proof of main theorem: constant term of the metric comparison",
               "\\frac{1}{g-1}-0.33\\le 0.67\\le 1", ClaimKind::equality, -0.33,
               [](const Precision&) {
                 // 4 pi (1 - 1/g) I - log 4 increases to E1(1/4) - log 4 as g grows.
                 const double limit = exp_integral_e1(0.25) - std::log(4.0);
                 const auto bad = kernels::parallel::first_violation(2, 5000, [](long g) {
                   const int gi = static_cast<int>(g);
                   const double constant = heat_term(gi) - std::log(4.0);
                   return constant <= -0.33 && 1.0 / (gi - 1.0) - 0.33 <= 0.67;
                 });
                 ClaimOutcome out = equality(limit, -0.33, 0.02,
                                             "large-genus limit E1(1/4) - log 4; inequality "
                                             "checked for 2 <= g <= 5000");
                 if (bad) {
                   out.status = ClaimStatus::discrepant;
                   out.note += "; fails at g = " + std::to_string(*bad);
                 }
                 return out;
               }});

  r.push_back({"CL-04", "proof of main theorem: area bound",
               "e*4\\pi(g-1)* (1366(g-1))^{\\frac{4}{g(g-1)}}< 36 (g-1)(1366(g-1))^{\\frac{4}{g(g-1)}}",
               ClaimKind::inequality, std::string("4 pi e < 36"),
               [](const Precision&) {
                 const double c = 4.0 * pi * std::exp(1.0);
                 return predicate(c, c - 36.0, c < 36.0);
               }});

  r.push_back({"CL-05", "appendix: small-genus list, large-genus line", "0.5474277074g+1",
               ClaimKind::equality, 0.5474277074,
               [](const Precision&) { return equality(kappa(), 0.5474277074, 1e-8); }});

  r.push_back({"CL-06", "proof of main theorem: leading coefficient",
               "\\approx 1.7573-2.4505+2.07-\\frac{1}{6}+4\\zeta_{\\mathbb{Q}}'(-1)",
               ClaimKind::equality, std::string("1.7573, 2.4505, 2.07"),
               [](const Precision&) {
                 const std::array<double, 3> computed = {
                     log_two_pi4 / 3.0, 4.0 / 3.0 * log_two_pi, log_two_pi + log_two / 3.0};
                 const std::array<double, 3> claimed = {1.7573, 2.4505, 2.07};
                 double worst = 0.0;
                 for (std::size_t i = 0; i < 3; ++i) {
                   const double d = computed[i] - claimed[i];
                   if (std::abs(d) > std::abs(worst)) worst = d;
                 }
                 const double chain = claimed[0] - claimed[1] + claimed[2] - 1.0 / 6.0 +
                                      4.0 * zeta_prime_minus1();
                 ClaimOutcome out{fixed(computed[0], 6) + ", " + fixed(computed[1], 6) + ", " +
                                      fixed(computed[2], 6),
                                  worst,
                                  std::abs(worst) <= 2e-3 ? ClaimStatus::confirmed
                                                          : ClaimStatus::discrepant,
                                  "partial sums log(2pi^4)/3, (4/3)log 2pi, log 2pi + (1/3)log 2; "
                                  "printed chain evaluates to " +
                                      fixed(chain, 6) + " vs kappa " + fixed(kappa(), 6)};
                 if (std::abs(chain - kappa()) > 2e-3) out.status = ClaimStatus::discrepant;
                 return out;
               }});

  r.push_back({"CL-07", "proof of main theorem: leading coefficient", "< 1.21-0.67=0.56<1",
               ClaimKind::inequality, std::string("kappa < 0.56 < 1"),
               [](const Precision&) {
                 const double k = kappa();
                 return predicate(k, k - 0.56, k < 0.56 && 0.56 < 1.0);
               }});

  r.push_back({"CL-07-arith", "proof of main theorem: leading coefficient", "1.21-0.67=0.56",
               ClaimKind::equality, 0.56,
               [](const Precision&) {
                 return equality(1.21 - 0.67, 0.56, 5e-3,
                                 "printed difference evaluates to 0.54; kappa itself is " +
                                     fixed(kappa(), 6) + ", above 0.54");
               }});

  r.push_back({"CL-08", "proof of main theorem: refined E(g)", "E(g)<0.44g",
               ClaimKind::sweep, std::string("E_refined(g) < 0.44 g for 11 <= g <= 3580"),
               [](const Precision&) {
                 const auto bad = kernels::parallel::first_violation(
                     kSweepFrom, kSweepTo,
                     [](long g) { return e_of_g(static_cast<int>(g), EVariant::refined) < 0.44 * g; });
                 const double margin_at_11 = e_of_g(11, EVariant::refined) - 0.44 * 11;
                 return predicate(bad ? "first violation at g = " + std::to_string(*bad)
                                      : std::string("holds on 11..3580"),
                                  margin_at_11, !bad, "delta is E_refined(11) - 0.44*11");
               }});

  r.push_back({"CL-09", "main theorem and small-genus list", "-\\infty<\\log(\\det(\\Delta_{Ar}))<g",
               ClaimKind::sweep, std::string("0.56 g + E_refined(g) <= g for 11 <= g <= 3580"),
               [](const Precision&) {
                 const auto bad = kernels::parallel::first_violation(kSweepFrom, kSweepTo, [](long g) {
                   return upper_bound_logdet(static_cast<int>(g), BoundForm::simplified).upper_simplified <=
                          static_cast<double>(g);
                 });
                 const double margin_at_11 =
                     upper_bound_logdet(11, BoundForm::simplified).upper_simplified - 11.0;
                 return predicate(bad ? "first violation at g = " + std::to_string(*bad)
                                      : std::string("holds on 11..3580"),
                                  margin_at_11, !bad, "delta is upper_simplified(11) - 11");
               }});

  for (int g = 2; g <= 10; ++g) {
    const double published = *published_table_value(g);
    r.push_back({"CL-10.g" + std::to_string(g), "appendix: small-genus list",
                 "g=" + std::to_string(g) + ": " + fixed(published, g == 2 ? 8 : (g == 10 ? 4 : 5)),
                 ClaimKind::equality, published,
                 [g, published](const Precision&) {
                   const double upper = upper_bound_logdet(g, BoundForm::exact, AreaVariant::c36).upper_exact;
                   return equality(upper, published, 0.75,
                                   "recomputed as log(2pi^4)/3 g + a(g)/6 + log_area_bound(c36); "
                                   "generating formula of the list is not recoverable");
                 }});
  }

  r.push_back({"CL-11", "appendix: small-genus list, large-genus line",
               "g\\ge 3580: 0.5474277074g+1", ClaimKind::inequality,
               std::string("upper_exact(c36) <= 0.5474277074 g + 1 at g in {3580, 1e4, 1e5}"),
               [](const Precision&) {
                 double worst = -1e300;
                 for (int g : {3580, 10'000, 100'000}) {
                   const double excess =
                       upper_bound_logdet(g, BoundForm::exact, AreaVariant::c36).upper_exact -
                       asymptotic_line(g);
                   worst = std::max(worst, excess);
                 }
                 std::string thresholds;
                 for (auto reading : {AsymptoticReading::exact_c36, AsymptoticReading::exact_e4pi,
                                      AsymptoticReading::simplified}) {
                   const auto t = asymptotic_line_threshold(reading, 1'000'000);
                   if (!thresholds.empty()) thresholds += "; ";
                   thresholds += to_string(reading) + ": " +
                                 (t ? "holds from g = " + std::to_string(*t) : "never for g <= 1e6");
                 }
                 return predicate("max excess " + fixed(worst, 6), worst, worst <= 0.0,
                                  "minimal genus per reading -> " + thresholds);
               }});

  r.push_back({"CL-12", "corollary on h_F - h_Q: constant term",
               "C=-\\log(2\\pi)+4\\zeta'_{\\mathbb{Q}}(-1)-\\frac{1}{6}+\\frac{1}{3}\\log(2)\\approx "
               "-3.6113717392987086-0.661685\\ge -4.273",
               ClaimKind::equality, kPrintedConstant,
               [](const Precision&) {
                 const double digits = -2.0 * log_two_pi + log_two / 3.0 - 1.0 / 6.0;
                 return equality(fq_gap_constant(GapReading::as_stated), kPrintedConstant, 1e-3,
                                 "symbolic C evaluates to " + fixed(fq_gap_constant(GapReading::as_stated), 6) +
                                     "; printed -3.6113717392987086 equals -2 log 2pi + (1/3) log 2 - 1/6 = " +
                                     fixed(digits, 13) + ", i.e. one log 2pi too many");
               }});

  r.push_back({"CL-13", "corollary on h_F - h_Q: slope", "\\approx 1.933721640489272",
               ClaimKind::equality, kPrintedSlope,
               [](const Precision&) {
                 return equality(fq_gap_slope(GapReading::as_stated), kPrintedSlope, 1e-9,
                                 "exact zeta'(-1) used; see CL-13-rounded");
               }});

  r.push_back({"CL-13-rounded", "corollary on h_F - h_Q: slope", "\\approx 1.933721640489272",
               ClaimKind::equality, kPrintedSlope,
               [](const Precision&) {
                 const double slope = fq_gap_slope(GapReading::as_stated) -
                                      4.0 * zeta_prime_minus1() + kPrintedFourZetaPrime;
                 return equality(slope, kPrintedSlope, 1e-9,
                                 "slope with 4 zeta'(-1) replaced by the printed -0.661685");
               }});

  r.push_back({"CL-13-bound", "corollary on h_F - h_Q: slope", "\\approx 1.933721640489272\\ge 1.934",
               ClaimKind::inequality, std::string("slope >= 1.934"),
               [](const Precision&) {
                 const double slope = fq_gap_slope(GapReading::as_stated);
                 return predicate(slope, slope - 1.934, slope >= 1.934);
               }});

  r.push_back({"CL-14", "corollary on h_F - h_Q: evaluation at g = 1",
               "h_{F}(L)-h_{Q}(L)\\ge 1.934g-4.273> -2.334", ClaimKind::inequality,
               std::string("1.934 - 4.273 > -2.334"),
               [](const Precision&) {
                 const double at_one = 1.934 - 4.273;
                 return ClaimOutcome{at_one, at_one - (-2.334),
                                     at_one > -2.334 ? ClaimStatus::confirmed : ClaimStatus::discrepant,
                                     "derivation reading at g = 1: " +
                                         fixed(fq_gap_lower(1, GapReading::derivation), 6)};
               }});

  r.push_back({"CL-15", "appendix: genus zero",
               "\\exp(-4\\zeta'(-1)+7/6-4/3\\log[2])\\approx 2.46984", ClaimKind::equality, 2.46984,
               [](const Precision&) { return equality(genus0_det(), 2.46984, 1e-4); }});

  r.push_back({"CL-16", "corollary on h_F - h_Q: constant term", "-0.661685",
               ClaimKind::equality, kPrintedFourZetaPrime,
               [](const Precision&) {
                 return equality(4.0 * zeta_prime_minus1(), kPrintedFourZetaPrime, 1e-5);
               }});

  r.push_back({"CL-17", "appendix: elliptic curve, metric scaling", "Z(0)=-1",
               ClaimKind::equality, -1.0,
               [](const Precision& p) {
                 return equality(spectral_zeta(FlatTorus(UpperHalfPoint(0.0, 1.0)), 0.0, p), -1.0, 1e-6,
                                 "Mellin-continued spectral zeta of the unit square torus");
               }});

  r.push_back({"CL-18", "appendix: elliptic curve, flat determinant",
               "\\log(\\det(\\Delta))=\\log(y|\\eta(z)|^4)", ClaimKind::equality, 0.0,
               [](const Precision& p) {
                 double worst = 0.0;
                 for (double y : {1.0, 2.0}) {
                   const auto cmp = compare_logdet(UpperHalfPoint(0.0, y), p);
                   if (std::abs(cmp.difference) > std::abs(worst)) worst = cmp.difference;
                 }
                 return equality(worst, 0.0, 1e-6,
                                 "max |oracle - closed form| over tau in {i, 2i}");
               }});

  r.push_back({"CL-19", "appendix: elliptic curve, q-product corollary (proof)",
               "\\le 2\\log(y)-\\frac{\\pi y}{2}+\\frac{3}{\\pi y}", ClaimKind::sweep,
               std::string("6/(e^{2 pi y}-1) <= 3/(pi y) and log det_Ar <= bound on a tau grid"),
               [](const Precision& p) {
                 double min_slack = 1e300;
                 bool ok = true;
                 constexpr int ny = 200;
                 for (int i = 0; i < ny; ++i) {
                   const double y = 0.05 * std::pow(100.0 / 0.05, i / (ny - 1.0));
                   if (!(6.0 / std::expm1(2.0 * pi * y) <= 3.0 / (pi * y))) ok = false;
                   for (double x : {0.0, 0.25, 0.5}) {
                     const UpperHalfPoint tau(x, y);
                     const double slack = elliptic_upper_bound_log(tau) - arakelov_logdet(tau, p);
                     const auto qb = qprod_bound(tau, p);
                     if (!(slack > 0.0) || !(qb.lhs <= qb.rhs)) ok = false;
                     min_slack = std::min(min_slack, slack);
                   }
                 }
                 return predicate("min slack " + fixed(min_slack, 8), min_slack, ok,
                                  "200 log-spaced y in [0.05, 100], x in {0, 0.25, 0.5}");
               }});

  r.push_back({"CL-19-statement", "appendix: elliptic curve, q-product corollary (statement)",
               "2\\log(y)-\\frac{\\pi y}{2}+\\frac{6}{\\pi y}", ClaimKind::equality, 6.0,
               [](const Precision&) {
                 return equality(3.0, 6.0, 0.0,
                                 "the proof ends with 3/(pi y); the stated 6/(pi y) is weaker but "
                                 "does not match the derivation");
               }});

  r.push_back({"CL-20", "background: Faltings delta lower bound at g = 1",
               "\\delta_{Fal}(X)>-2g\\log(2\\pi^4)", ClaimKind::ambiguous,
               std::string("delta(tau) > -2 log(2 pi^4) for every tau, under both normalisations"),
               [](const Precision& p) {
                 double min_direct = 1e300;
                 double min_shifted = 1e300;
                 for (int ix = 0; ix <= 20; ++ix) {
                   const double x = -0.5 + ix / 20.0;
                   const double y0 = std::sqrt(1.0 - x * x);
                   for (int iy = 0; iy < 30; ++iy) {
                     const UpperHalfPoint tau(x, y0 + iy * 0.1);
                     min_direct = std::min(min_direct,
                                           faltings_delta_elliptic(tau, DeltaReading::direct, p));
                     min_shifted = std::min(min_shifted,
                                            faltings_delta_elliptic(tau, DeltaReading::shifted, p));
                   }
                 }
                 const double bound = wilms_lower(1);
                 const bool direct_ok = min_direct > bound;
                 const bool shifted_ok = min_shifted > bound;
                 ClaimStatus status = ClaimStatus::ambiguous;
                 if (direct_ok && shifted_ok) status = ClaimStatus::confirmed;
                 if (!direct_ok && !shifted_ok) status = ClaimStatus::discrepant;
                 const double at_i_direct =
                     faltings_delta_elliptic(UpperHalfPoint(0.0, 1.0), DeltaReading::direct, p);
                 return ClaimOutcome{
                     "min direct " + fixed(min_direct, 6) + ", min shifted " + fixed(min_shifted, 6),
                     min_direct - bound, status,
                     "threshold " + fixed(bound, 6) + "; direct reading at tau = i gives " +
                         fixed(at_i_direct, 6) + "; fundamental-domain grid 21 x 30"};
               }});

  r.push_back({"CL-21", "proof of main theorem: Selberg constant",
               "c_\\text{sel}\\ge -4\\log(1366(g-1))", ClaimKind::inequality,
               std::string("cited lower bound"),
               [](const Precision&) { return assumed("external input; used as stated"); }});
  r.push_back({"CL-21.jk", "background: Arakelov/hyperbolic metric comparison",
               "\\log(\\frac{\\mu_{Ar}(z)}{\\mu_{hyp}(z)})\\le 4\\pi(1-\\frac{1}{g})\\int^{\\infty}_{1}K_{H}(t,0)dt"
               "-\\frac{c_{sel}}{g(g-1)}+\\frac{1}{g-1}-\\log[4]",
               ClaimKind::inequality, std::string("cited inequality"),
               [](const Precision&) { return assumed("external input; heat kernel replaced by its majorant"); }});
  r.push_back({"CL-21.wilms", "background: Faltings delta lower bound",
               "\\delta_{Fal}(X)>-2g\\log(2\\pi^4)", ClaimKind::inequality,
               std::string("cited inequality"),
               [](const Precision&) { return assumed("external input; used as stated"); }});

  r.push_back({"CL-22", "proof of main theorem: simple E(g)", "E(g)\\le 2\\log(g)<0.44g",
               ClaimKind::sweep, std::string("E_simple(g) <= 2 log g < 0.44 g for g large enough"),
               [](const Precision&) {
                 constexpr long g_max = 1'000'000;
                 const auto last_bad = kernels::parallel::last_violation(2, g_max, [](long g) {
                   const double two_log = 2.0 * std::log(static_cast<double>(g));
                   return e_of_g(static_cast<int>(g), EVariant::simple) <= two_log &&
                          two_log < 0.44 * static_cast<double>(g);
                 });
                 const long from = last_bad ? *last_bad + 1 : 2;
                 const bool holds = from <= g_max;
                 return predicate(holds ? "holds for " + std::to_string(from) + " <= g <= 1e6"
                                        : std::string("fails at g = 1e6"),
                                  static_cast<double>(from), holds, "delta is the threshold genus");
               }});

  r.push_back({"CL-23", "appendix: small-genus list, middle regime",
               "10\\le g\\le 3580: \\le g", ClaimKind::inequality,
               std::string("bound at g = 10 is <= 10"),
               [](const Precision&) {
                 const double published = *published_table_value(10);
                 const auto b = upper_bound_logdet(10, BoundForm::exact, AreaVariant::c36);
                 return predicate(published, published - 10.0, published <= 10.0,
                                  "listed g = 10 value exceeds 10; recomputed exact(c36) " +
                                      fixed(b.upper_exact, 6) + ", simplified " +
                                      fixed(b.upper_simplified, 6));
               }});

  return r;
}

}  // namespace

Allowlist Allowlist::builtin() { return parse(detail::kEmbeddedAllowlist); }

Allowlist Allowlist::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("allowlist is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("expected_discrepant") ||
      !doc["expected_discrepant"].is_array()) {
    throw std::invalid_argument("allowlist needs an \"expected_discrepant\" array");
  }
  std::vector<std::string> patterns;
  for (const auto& item : doc["expected_discrepant"]) {
    if (!item.is_string()) throw std::invalid_argument("allowlist entries must be strings");
    patterns.push_back(item.get<std::string>());
  }
  return Allowlist(std::move(patterns));
}

bool Allowlist::contains(std::string_view id) const {
  return std::any_of(patterns_.begin(), patterns_.end(), [id](const std::string& p) {
    if (!p.empty() && p.back() == '*') {
      return id.substr(0, p.size() - 1) == std::string_view(p).substr(0, p.size() - 1);
    }
    return id == p;
  });
}

const std::vector<Claim>& builtin_registry() {
  static const std::vector<Claim> registry = make_registry();
  return registry;
}

const Claim* find_claim(std::string_view id) {
  for (const Claim& c : builtin_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ClaimRecord evaluate(const Claim& claim, const Precision& prec) {
  ClaimRecord rec{claim.id, claim.location, claim.quote, claim.kind, claim.claimed,
                  std::monostate{}, std::nullopt, ClaimStatus::errored, {}};
  try {
    prec.validate();
    ClaimOutcome out = claim.check(prec);
    rec.computed = std::move(out.computed);
    rec.delta = out.delta;
    rec.status = out.status;
    rec.note = std::move(out.note);
  } catch (const std::exception& e) {
    rec.status = ClaimStatus::errored;
    rec.note = e.what();
  }
  return rec;
}

namespace {

ClaimReport assemble(std::vector<const Claim*> selected, const Precision& prec,
                     const Allowlist& allowlist) {
  ClaimReport report;
  report.precision = prec;
  report.records.resize(selected.size());
  const long n = static_cast<long>(selected.size());
  // Claims are independent; each slot is written by exactly one iteration.
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    report.records[static_cast<std::size_t>(i)] = evaluate(*selected[static_cast<std::size_t>(i)], prec);
  }

  for (const ClaimRecord& rec : report.records) {
    switch (rec.status) {
      case ClaimStatus::confirmed: ++report.summary.confirmed; break;
      case ClaimStatus::discrepant: ++report.summary.discrepant; break;
      case ClaimStatus::assumed: ++report.summary.assumed; break;
      case ClaimStatus::ambiguous: ++report.summary.ambiguous; break;
      case ClaimStatus::errored: ++report.summary.errored; break;
    }
    if (rec.status == ClaimStatus::confirmed && allowlist.contains(rec.id)) {
      report.warnings.push_back(rec.id + " is CONFIRMED but listed as an expected discrepancy");
    }
  }
  for (const std::string& pattern : allowlist.patterns()) {
    const bool matched = std::any_of(
        builtin_registry().begin(), builtin_registry().end(),
        [&](const Claim& c) { return Allowlist({pattern}).contains(c.id); });
    if (!matched) report.warnings.push_back("allowlist entry " + pattern + " matches no claim");
  }
  return report;
}

}  // namespace

ClaimReport run_all(const Precision& prec, const Allowlist& allowlist) {
  std::vector<const Claim*> all;
  for (const Claim& c : builtin_registry()) all.push_back(&c);
  return assemble(std::move(all), prec, allowlist);
}

ClaimReport run_selected(std::span<const std::string> ids, const Precision& prec,
                         const Allowlist& allowlist) {
  for (const std::string& id : ids) {
    if (!find_claim(id)) throw std::invalid_argument("unknown claim id: " + id);
  }
  std::vector<const Claim*> chosen;
  for (const Claim& c : builtin_registry()) {
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) chosen.push_back(&c);
  }
  return assemble(std::move(chosen), prec, allowlist);
}

int strict_exit_code(const ClaimReport& report, const Allowlist& allowlist) {
  for (const ClaimRecord& rec : report.records) {
    if (rec.status == ClaimStatus::errored) return 1;
    if (rec.status == ClaimStatus::discrepant && !allowlist.contains(rec.id)) return 1;
  }
  return 0;
}

std::string to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::equality: return "equality";
    case ClaimKind::inequality: return "inequality";
    case ClaimKind::sweep: return "sweep";
    case ClaimKind::ambiguous: return "ambiguous";
  }
  return "unknown";
}

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::confirmed: return "CONFIRMED";
    case ClaimStatus::discrepant: return "DISCREPANT";
    case ClaimStatus::assumed: return "ASSUMED";
    case ClaimStatus::ambiguous: return "AMBIGUOUS";
    case ClaimStatus::errored: return "ERRORED";
  }
  return "UNKNOWN";
}

ClaimKind claim_kind_from_string(std::string_view s) {
  for (auto k : {ClaimKind::equality, ClaimKind::inequality, ClaimKind::sweep, ClaimKind::ambiguous}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown claim kind: " + std::string(s));
}

ClaimStatus claim_status_from_string(std::string_view s) {
  for (auto st : {ClaimStatus::confirmed, ClaimStatus::discrepant, ClaimStatus::assumed,
                  ClaimStatus::ambiguous, ClaimStatus::errored}) {
    if (to_string(st) == s) return st;
  }
  throw std::invalid_argument("unknown claim status: " + std::string(s));
}

}  // namespace atl
