#pragma once

#include "atl/numerics.hpp"

// Genus-one Arakelov quantities of the elliptic curve C / (Z + tau Z).
namespace atl {

// Area_Ar = 2 pi y |eta(tau)|^2 and its logarithm (stable for large y).
double arakelov_area(const UpperHalfPoint& tau, const Precision& prec = {});
double log_arakelov_area(const UpperHalfPoint& tau, const Precision& prec = {});

// log det(Delta_Ar) = log 2 pi + 2 log y + 6 log|eta(tau)|. Not modular invariant.
double arakelov_logdet(const UpperHalfPoint& tau, const Precision& prec = {});

// D_Ar = log(det Delta_Ar / Area_Ar) = log y + 4 log|eta(tau)|.
double d_ar_elliptic(const UpperHalfPoint& tau, const Precision& prec = {});

// log 2 pi + 2 log y - pi y / 2 + 3 / (pi y), the bound reached by the proof.
double elliptic_upper_bound_log(const UpperHalfPoint& tau);
// Same with 6 / (pi y), the constant printed in the statement of the corollary.
double elliptic_upper_bound_log_statement(const UpperHalfPoint& tau);

struct QProductBound {
  double lhs = 0.0;  // log|prod_{n>=1} (1 - q^n)|
  double rhs = 0.0;  // |q| / (1 - |q|)
};
QProductBound qprod_bound(const UpperHalfPoint& tau, const Precision& prec = {});

// delta_Fal vs delta' normalisation: `shifted` adds 4 g log 2 pi (g = 1).
enum class DeltaReading { direct, shifted };

double faltings_delta_elliptic(const UpperHalfPoint& tau, DeltaReading reading,
                               const Precision& prec = {});

// Everything `atl elliptic` prints for one tau.
struct EllipticSummary {
  UpperHalfPoint tau{0.0, 1.0};
  double arakelov_area = 0.0;
  double arakelov_logdet = 0.0;
  double d_ar = 0.0;
  double upper_bound_log = 0.0;
  double upper_bound_log_statement = 0.0;
  double slack = 0.0;  // upper_bound_log - arakelov_logdet

  friend bool operator==(const EllipticSummary&, const EllipticSummary&) = default;
};

EllipticSummary elliptic_summary(const UpperHalfPoint& tau, const Precision& prec = {});

}  // namespace atl
