#include "ldplan/radius.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ldplan {

double unit_ball_volume(int d) {
  if (d < 1) throw std::invalid_argument("unit_ball_volume: d must be >= 1");
  return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double gamma_prm_constant(int d, double leading) {
  const double inv_d = 1.0 / d;
  return leading * std::pow(1.0 + inv_d, inv_d) *
         std::pow(1.0 / unit_ball_volume(d), inv_d);
}

double connection_radius(std::int64_t n, int d, const RadiusRule& rule,
                         Metric metric) {
  if (n < 2) throw std::invalid_argument("connection_radius: n must be >= 2");
  if (d < 1) throw std::invalid_argument("connection_radius: d must be >= 1");

  double r = 0.0;
  switch (rule.kind) {
    case RadiusRuleKind::kGammaPrm:
      r = gamma_prm_constant(d, rule.multiplier) *
          std::pow(std::log(static_cast<double>(n)) / n, 1.0 / d);
      break;
    case RadiusRuleKind::kPower: {
      const double slow = std::log(std::log(static_cast<double>(std::max<std::int64_t>(n, 3))));
      r = rule.multiplier * std::pow(static_cast<double>(n), -1.0 / d) * slow;
      break;
    }
    case RadiusRuleKind::kExplicit:
      r = rule.multiplier;
      break;
  }
  if (metric == Metric::kAngularL1) {
    r *= std::sqrt(static_cast<double>(d)) * std::numbers::pi;
  }
  if (!(r > 0.0)) {
    throw std::invalid_argument("connection_radius: nonpositive radius");
  }
  return r;
}

std::int64_t knn_count(std::int64_t n, int d, double r, double eps) {
  const double k =
      (1.0 + eps) * static_cast<double>(n) * unit_ball_volume(d) * std::pow(r, d);
  return static_cast<std::int64_t>(std::ceil(k));
}

double suboptimality_factor(double dispersion, double radius) {
  if (dispersion < 0.0 || radius <= 0.0) {
    throw std::invalid_argument("suboptimality_factor: bad arguments");
  }
  if (radius <= 2.0 * dispersion) {
    throw std::invalid_argument(
        "suboptimality_factor: requires r > 2*dispersion");
  }
  return 1.0 + 2.0 * dispersion / (radius - 2.0 * dispersion);
}

CertificationResult certify_sample_count(const CertificationQuery& q) {
  if (!(q.psi > 1.0) || !(q.delta0 > 0.0) || !(q.gamma > 0.0) || q.d < 1) {
    throw std::invalid_argument("certify_sample_count: bad query");
  }
  const auto radius_at = [&](std::int64_t n) {
    return 2.0 * q.psi * q.gamma *
           std::pow(static_cast<double>(n), -1.0 / q.d);
  };
  const auto satisfied = [&](std::int64_t n) {
    return n >= 1 && radius_at(n) < q.delta0;
  };

  // closed form floor((2*psi*gamma/delta0)^d) + 1, then polish the integer
  // boundary so the returned n is minimal under the same floating predicate
  const double x = std::pow(2.0 * q.psi * q.gamma / q.delta0,
                            static_cast<double>(q.d));
  std::int64_t n = static_cast<std::int64_t>(std::floor(x)) + 1;
  if (n < 1) n = 1;
  while (!satisfied(n)) ++n;
  while (n > 1 && satisfied(n - 1)) --n;

  CertificationResult result;
  result.n_required = n;
  result.factor_excess = 1.0 / (q.psi - 1.0);
  result.implied_radius = radius_at(n);
  return result;
}

}  // namespace ldplan
