#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Effective upper bound for log det(Delta_Ar) on a genus-g surface, g >= 2,
// assembled from the heat-kernel majorant, the Selberg-constant lower bound, the
// Arakelov/hyperbolic metric comparison, Gauss-Bonnet, the Faltings-delta lower
// bound and the delta/torsion relation. Every function throws DomainError
// outside its genus range.
namespace atl {

enum class RatioForm { exact, simplified };
enum class AreaVariant { e4pi, c36 };
enum class EVariant { simple, refined };
enum class BoundForm { exact, simplified };
enum class GapReading { as_stated, derivation };

// Literal slope used by the simplified bound 0.56 g + E(g).
inline constexpr double kSimplifiedSlope = 0.56;
// Unexplained additive constant of the refined E(g).
inline constexpr double kRefinedOffset = 2.1890125;

// int_1^inf e^{-t/4} / (4 pi t) dt = E1(1/4) / (4 pi)
double heat_integral();
// 4 pi (1 - 1/g) * heat_integral()
double heat_term(int g);
// -4 log(1366 (g - 1))
double csel_lower(int g);
// Upper bound for log(mu_Ar / mu_hyp).
double metric_ratio_bound(int g, RatioForm form);
double log_area_bound(int g, AreaVariant variant);

// K = -24 zeta'(-1) + 1 - 6 log 2 pi - 2 log 2
double k_const();
// a(g) = -8 g log 2 pi + (1 - g) K, g >= 0
double a_of_g(int g);
// -2 g log(2 pi^4), g >= 1
double wilms_lower(int g);
// Exact asymptotic slope log(2 pi^4)/3 - (4/3) log 2 pi - K/6.
double kappa();

double e_of_g(int g, EVariant variant);

struct BoundBreakdown {
  int genus = 2;
  double heat_integral = 0.0;
  double heat_term = 0.0;
  double csel_lower = 0.0;
  double metric_ratio_bound_exact = 0.0;
  double metric_ratio_bound_simplified = 0.0;
  double log_area_bound = 0.0;
  AreaVariant area_variant = AreaVariant::c36;
  double a_g = 0.0;
  double wilms_lower = 0.0;
  double e_g_simple = 0.0;
  double e_g_refined = 0.0;
  double upper_exact = 0.0;
  double upper_simplified = 0.0;
  BoundForm form = BoundForm::exact;

  // upper_exact or upper_simplified according to `form`.
  double upper() const { return form == BoundForm::exact ? upper_exact : upper_simplified; }

  friend bool operator==(const BoundBreakdown&, const BoundBreakdown&) = default;
};

BoundBreakdown upper_bound_logdet(int g, BoundForm form = BoundForm::exact,
                                  AreaVariant area = AreaVariant::c36);

// exp(-4 zeta'(-1) + 7/6 - (4/3) log 2), the genus-zero determinant.
double genus0_det();

// Lower bound for h_F - h_Q, as printed (slope_A g + C_A) or as the chain evaluates.
double fq_gap_lower(int g, GapReading reading);
double fq_gap_slope(GapReading reading);
double fq_gap_constant(GapReading reading);

// delta' + 4 g log 2 pi
double delta_conversion(double delta_prime, int g);
// -6 D_Ar + a(g)
double wentworth_delta(double d_ar, int g);

// Small-genus values listed alongside the bound (g = 2..10).
std::optional<double> published_table_value(int g);

struct TableRow {
  BoundBreakdown bound;
  std::optional<double> paper_value;
  std::optional<double> delta;  // bound.upper() - paper_value
  std::string annotation;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::vector<TableRow> bound_table(int g_from, int g_to, BoundForm form = BoundForm::exact,
                                  AreaVariant area = AreaVariant::c36);

// Candidate readings of the large-genus line "bounded above by kappa g + 1".
enum class AsymptoticReading { exact_c36, exact_e4pi, simplified };
// Smallest g in [2, g_max] from which the reading holds for every larger g up to
// g_max, or nullopt.
std::optional<long> asymptotic_line_threshold(AsymptoticReading reading, long g_max);
double asymptotic_line(long g);

std::string to_string(AreaVariant v);
std::string to_string(BoundForm f);
std::string to_string(RatioForm f);
std::string to_string(EVariant v);
std::string to_string(GapReading r);
std::string to_string(AsymptoticReading r);
// Inverses of to_string; throw std::invalid_argument for unknown names.
AreaVariant area_variant_from_string(std::string_view s);
BoundForm bound_form_from_string(std::string_view s);

}  // namespace atl
