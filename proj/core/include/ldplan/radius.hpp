#pragma once

#include <cstdint>

#include "ldplan/geometry.hpp"

namespace ldplan {

/// Volume of the d-dimensional Euclidean unit ball.
double unit_ball_volume(int d);

enum class RadiusRuleKind {
  kGammaPrm,  // gamma_prm * (log(n)/n)^(1/d), natural log
  kPower,     // multiplier * n^(-1/d) * loglog(max(n,3))
  kExplicit,  // fixed radius
};

struct RadiusRule {
  RadiusRuleKind kind = RadiusRuleKind::kGammaPrm;
  /// gamma_prm leading constant, power-rule multiplier, or the explicit value.
  double multiplier = 2.2;

  static RadiusRule gamma_prm(double leading = 2.2) {
    return {RadiusRuleKind::kGammaPrm, leading};
  }
  static RadiusRule power(double c) { return {RadiusRuleKind::kPower, c}; }
  static RadiusRule explicit_value(double r) {
    return {RadiusRuleKind::kExplicit, r};
  }
};

/// gamma_prm constant: leading * (1+1/d)^(1/d) * (1/zeta_d)^(1/d).
double gamma_prm_constant(int d, double leading = 2.2);

/// Connection radius for n samples in d dimensions. The angular metric
/// scales the result by sqrt(d)*pi (the torus diameter under l1/sqrt..).
/// Throws if the result is not positive.
double connection_radius(std::int64_t n, int d, const RadiusRule& rule,
                         Metric metric = Metric::kEuclidean);

/// k-nearest count k_n = ceil((1+eps) * n * zeta_d * r^d).
std::int64_t knn_count(std::int64_t n, int d, double r, double eps);

/// Factor 1 + 2*D_n/(r_n - 2*D_n) bounding returned cost over the best
/// strongly delta-clear cost. Throws when r_n <= 2*D_n (bound inapplicable).
double suboptimality_factor(double dispersion, double radius);

struct CertificationQuery {
  double psi = 2.0;     // > 1
  double delta0 = 0.1;  // > 0 clearance assumption
  double gamma = 1.0;   // dispersion constant: D_n <= gamma * n^(-1/d)
  int d = 2;
};

struct CertificationResult {
  std::int64_t n_required = 0;
  double factor_excess = 0.0;  // 1/(psi-1)
  double implied_radius = 0.0; // 2*psi*gamma*n^(-1/d) at n_required
};

/// Smallest n with 2*psi*gamma*n^(-1/d) < delta0; with that n and radius
/// r = 2*psi*gamma*n^(-1/d), the returned cost is certified within a
/// factor (1 + 1/(psi-1)) of the best delta0-clear cost.
CertificationResult certify_sample_count(const CertificationQuery& q);

}  // namespace ldplan
