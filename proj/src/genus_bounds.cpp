#include "atl/genus_bounds.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "atl/errors.hpp"
#include "atl/kernels/sweep.hpp"
#include "atl/numerics.hpp"

namespace atl {

namespace {

using constants::log_two;
using constants::log_two_pi;
using constants::log_two_pi4;
using constants::pi;

void require_genus(int g, int minimum) {
  if (g < minimum) {
    std::ostringstream os;
    os << "genus " << g << " out of range (requires g >= " << minimum << ")";
    throw DomainError(os.str());
  }
}

// (4 / (g (g - 1))) log(1366 (g - 1)), shared by the ratio and area bounds.
double selberg_excess(int g) {
  const double gm1 = static_cast<double>(g) - 1.0;
  return 4.0 / (static_cast<double>(g) * gm1) * std::log(1366.0 * gm1);
}

constexpr std::array<double, 9> kPublished = {
    18.01100181, 9.76363, 8.13548, 7.88854, 8.10036, 8.50296, 8.99605, 9.53577, 10.1007,
};

constexpr long kRegimeSplit = 3580;
constexpr double kPublishedSlope = 0.5474277074;

}  // namespace

double heat_integral() {
  static const double value = exp_integral_e1(0.25) / (4.0 * pi);
  return value;
}

double heat_term(int g) {
  require_genus(g, 2);
  return 4.0 * pi * (1.0 - 1.0 / g) * heat_integral();
}

double csel_lower(int g) {
  require_genus(g, 2);
  return -4.0 * std::log(1366.0 * (static_cast<double>(g) - 1.0));
}

double metric_ratio_bound(int g, RatioForm form) {
  require_genus(g, 2);
  const double gd = g;
  if (form == RatioForm::simplified) {
    return 1.0 + selberg_excess(g);
  }
  return heat_term(g) - csel_lower(g) / (gd * (gd - 1.0)) + 1.0 / (gd - 1.0) - std::log(4.0);
}

double log_area_bound(int g, AreaVariant variant) {
  require_genus(g, 2);
  const double lead = variant == AreaVariant::e4pi ? 1.0 + std::log(4.0 * pi) : std::log(36.0);
  return lead + std::log(static_cast<double>(g) - 1.0) + selberg_excess(g);
}

double k_const() {
  return -24.0 * zeta_prime_minus1() + 1.0 - 6.0 * log_two_pi - 2.0 * log_two;
}

double a_of_g(int g) {
  require_genus(g, 0);
  const double gd = g;
  return -8.0 * gd * log_two_pi + (1.0 - gd) * k_const();
}

double wilms_lower(int g) {
  require_genus(g, 1);
  return -2.0 * g * log_two_pi4;
}

double kappa() {
  return log_two_pi4 / 3.0 - 4.0 / 3.0 * log_two_pi - k_const() / 6.0;
}

double e_of_g(int g, EVariant variant) {
  require_genus(g, 2);
  const double gm1 = static_cast<double>(g) - 1.0;
  const double common = std::log(gm1) + selberg_excess(g) + k_const() / 6.0;
  if (variant == EVariant::simple) return std::log(36.0) + common;
  return 1.0 / gm1 + common + kRefinedOffset;
}

BoundBreakdown upper_bound_logdet(int g, BoundForm form, AreaVariant area) {
  require_genus(g, 2);
  BoundBreakdown b;
  b.genus = g;
  b.form = form;
  b.area_variant = area;
  b.heat_integral = heat_integral();
  b.heat_term = heat_term(g);
  b.csel_lower = csel_lower(g);
  b.metric_ratio_bound_exact = metric_ratio_bound(g, RatioForm::exact);
  b.metric_ratio_bound_simplified = metric_ratio_bound(g, RatioForm::simplified);
  b.log_area_bound = log_area_bound(g, area);
  b.a_g = a_of_g(g);
  b.wilms_lower = wilms_lower(g);
  b.e_g_simple = e_of_g(g, EVariant::simple);
  b.e_g_refined = e_of_g(g, EVariant::refined);
  b.upper_exact = log_two_pi4 / 3.0 * g + b.a_g / 6.0 + b.log_area_bound;
  b.upper_simplified = kSimplifiedSlope * g + b.e_g_refined;
  return b;
}

double genus0_det() {
  return std::exp(-4.0 * zeta_prime_minus1() + 7.0 / 6.0 - 4.0 / 3.0 * log_two);
}

double fq_gap_slope(GapReading reading) {
  const double zp4 = 4.0 * zeta_prime_minus1();
  if (reading == GapReading::as_stated) {
    return 4.0 / 3.0 * log_two_pi - log_two_pi4 / 3.0 + zp4 - 1.0 / 6.0 + log_two_pi +
           log_two / 3.0;
  }
  return -kappa();
}

double fq_gap_constant(GapReading reading) {
  if (reading == GapReading::as_stated) {
    return -log_two_pi + 4.0 * zeta_prime_minus1() - 1.0 / 6.0 + log_two / 3.0;
  }
  return -2.0 * log_two_pi - k_const() / 6.0;
}

double fq_gap_lower(int g, GapReading reading) {
  require_genus(g, 1);
  if (reading == GapReading::derivation) {
    // -2 log 2 pi - a(g)/6 - (g/3) log(2 pi^4), evaluated as written.
    return -2.0 * log_two_pi - a_of_g(g) / 6.0 - g / 3.0 * log_two_pi4;
  }
  return fq_gap_slope(reading) * g + fq_gap_constant(reading);
}

double delta_conversion(double delta_prime, int g) {
  require_genus(g, 0);
  return delta_prime + 4.0 * g * log_two_pi;
}

double wentworth_delta(double d_ar, int g) {
  require_genus(g, 1);
  return -6.0 * d_ar + a_of_g(g);
}

std::optional<double> published_table_value(int g) {
  if (g < 2 || g > 10) return std::nullopt;
  return kPublished[static_cast<std::size_t>(g - 2)];
}

std::vector<TableRow> bound_table(int g_from, int g_to, BoundForm form, AreaVariant area) {
  if (g_from < 2 || g_to < g_from) {
    std::ostringstream os;
    os << "invalid genus range [" << g_from << ", " << g_to << "] (requires 2 <= from <= to)";
    throw DomainError(os.str());
  }
  const long count = static_cast<long>(g_to) - g_from + 1;
  std::vector<TableRow> rows(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static) if (count >= 256)
  for (long i = 0; i < count; ++i) {
    const int g = g_from + static_cast<int>(i);
    TableRow& row = rows[static_cast<std::size_t>(i)];
    row.bound = upper_bound_logdet(g, form, area);
    row.paper_value = published_table_value(g);
    if (row.paper_value) row.delta = row.bound.upper() - *row.paper_value;

    std::string note;
    const double upper = row.bound.upper();
    if (g >= 10 && g <= kRegimeSplit) {
      note = upper <= g ? "regime 10<=g<=3580 (<= g): holds"
                        : "regime 10<=g<=3580 (<= g): violated";
    }
    if (g >= kRegimeSplit) {
      if (!note.empty()) note += "; ";
      note += upper <= kPublishedSlope * g + 1.0 ? "regime g>=3580 (<= 0.5474277074g+1): holds"
                                                 : "regime g>=3580 (<= 0.5474277074g+1): violated";
    }
    row.annotation = std::move(note);
  }
  return rows;
}

double asymptotic_line(long g) { return kPublishedSlope * static_cast<double>(g) + 1.0; }

std::optional<long> asymptotic_line_threshold(AsymptoticReading reading, long g_max) {
  auto holds = [reading](long g) {
    const int gi = static_cast<int>(g);
    double upper = 0.0;
    switch (reading) {
      case AsymptoticReading::exact_c36:
        upper = upper_bound_logdet(gi, BoundForm::exact, AreaVariant::c36).upper_exact;
        break;
      case AsymptoticReading::exact_e4pi:
        upper = upper_bound_logdet(gi, BoundForm::exact, AreaVariant::e4pi).upper_exact;
        break;
      case AsymptoticReading::simplified:
        upper = kSimplifiedSlope * gi + e_of_g(gi, EVariant::refined);
        break;
    }
    return upper <= asymptotic_line(g);
  };
  const auto last_bad = kernels::parallel::last_violation(2, g_max, holds);
  if (!last_bad) return 2;
  if (*last_bad == g_max) return std::nullopt;
  return *last_bad + 1;
}

std::string to_string(AreaVariant v) { return v == AreaVariant::e4pi ? "e4pi" : "c36"; }
std::string to_string(BoundForm f) { return f == BoundForm::exact ? "exact" : "simplified"; }
std::string to_string(RatioForm f) { return f == RatioForm::exact ? "exact" : "simplified"; }
std::string to_string(EVariant v) { return v == EVariant::simple ? "simple" : "refined"; }
std::string to_string(GapReading r) {
  return r == GapReading::as_stated ? "as_stated" : "derivation";
}
std::string to_string(AsymptoticReading r) {
  switch (r) {
    case AsymptoticReading::exact_c36: return "exact_c36";
    case AsymptoticReading::exact_e4pi: return "exact_e4pi";
    case AsymptoticReading::simplified: return "simplified";
  }
  return "unknown";
}

AreaVariant area_variant_from_string(std::string_view s) {
  if (s == "e4pi") return AreaVariant::e4pi;
  if (s == "c36") return AreaVariant::c36;
  throw std::invalid_argument("unknown area variant: " + std::string(s));
}

BoundForm bound_form_from_string(std::string_view s) {
  if (s == "exact") return BoundForm::exact;
  if (s == "simplified") return BoundForm::simplified;
  throw std::invalid_argument("unknown bound form: " + std::string(s));
}

}  // namespace atl
