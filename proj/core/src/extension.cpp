#include "d2k/extension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "d2k/dihedral.hpp"
#include "d2k/errors.hpp"
#include "d2k/trig.hpp"

namespace d2k {

namespace {

using std::numbers::pi;

constexpr double kTriplePathTol = 1e-12;
constexpr double kBridgeTol = 1e-13;
constexpr double kControlThreshold = 0.1;
constexpr double kConfirmFraction = 0.9;

void require_valid(const ModelParams& p) {
  if (p.k < 1) throw ConfigError("ModelParams.k must be >= 1");
  if (!(p.r > 0.0)) throw ConfigError("ModelParams.r must be positive");
  if (!(p.omega >= 0.0)) throw ConfigError("ModelParams.omega must be non-negative");
}

/// Distance from phi to the nearest zero of cos(k phi) or sin(k phi),
/// valid for any positive real k.
double pole_grid_distance(double k, double phi) {
  return std::abs(std::remainder(2.0 * k * phi, pi)) / (2.0 * k);
}

void require_clear_of_poles(double k, double phi, double margin) {
  const double dist = pole_grid_distance(k, phi);
  if (dist < margin) throw NearPoleError(phi, dist, margin);
}

FockOperator exchange_operator() {
  return compose(creator(Mode::X), annihilator(Mode::Y)) +
         compose(creator(Mode::Y), annihilator(Mode::X));
}

std::string coupling_detail(const ModelParams& p, bool with_omega = false) {
  char buf[96];
  if (with_omega)
    std::snprintf(buf, sizeof buf, "a=%.6g,b=%.6g,omega=%.6g", p.a, p.b, p.omega);
  else
    std::snprintf(buf, sizeof buf, "a=%.6g,b=%.6g", p.a, p.b);
  return buf;
}

struct OperatorResiduals {
  long n_evaluated = 0;
  long n_skipped = 0;
  long n_large = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;
};

OperatorResiduals sweep_operator(int k, const AngularOperator::Evaluator& lhs,
                                 const AngularOperator::Evaluator& rhs, const SamplingPlan& plan,
                                 double margin, double large_threshold) {
  OperatorResiduals acc;
  for (const double phi : sample_angles(k, plan)) {
    if (grid_pole_distance(k, phi) < margin) {
      ++acc.n_skipped;
      continue;
    }
    FockOperator a, b;
    try {
      a = lhs(phi);
      b = rhs(phi);
    } catch (const NearPoleError&) {
      ++acc.n_skipped;
      continue;
    }
    ++acc.n_evaluated;
    if (!is_finite(a) || !is_finite(b)) {
      acc.max_abs = acc.max_rel = std::numeric_limits<double>::infinity();
      ++acc.n_large;
      continue;
    }
    const double rel = relative_residual(a, b);
    acc.max_abs = std::max(acc.max_abs, max_abs_diff(a, b));
    acc.max_rel = std::max(acc.max_rel, rel);
    if (rel > large_threshold) ++acc.n_large;
  }
  if (acc.n_evaluated < plan.n_samples - plan.n_samples / 2)
    throw DegenerateSamplingError("fewer than half the sample points survived pole rejection (k=" +
                                  std::to_string(k) + ")");
  return acc;
}

}  // namespace

FockOperator gamma_susy_matrix(double k, double a, double b, double r, double phi,
                               double pole_margin) {
  if (!(k > 0.0)) throw ConfigError("gamma_susy_matrix: k must be positive");
  require_clear_of_poles(k, phi, pole_margin);

  const double ck = std::cos(k * phi);
  const double sk = std::sin(k * phi);
  const double sec2 = 1.0 / (ck * ck);
  const double csc2 = 1.0 / (sk * sk);
  const double c_km2 = std::cos((k - 2.0) * phi);
  const double s_km2 = std::sin((k - 2.0) * phi);
  const double c2 = std::cos(2.0 * phi);
  const double s2 = std::sin(2.0 * phi);

  const FockOperator n_x = number(Mode::X);
  const FockOperator n_y = number(Mode::Y);
  const FockOperator xy = exchange_operator();

  const FockOperator a_block = (c_km2 * ck + 0.5 * k * (1.0 - c2)) * n_x -
                               (s_km2 * ck + 0.5 * k * s2) * xy +
                               (-c_km2 * ck + 0.5 * k * (1.0 + c2)) * n_y;
  const FockOperator b_block = (s_km2 * sk + 0.5 * k * (1.0 - c2)) * n_x +
                               (c_km2 * sk - 0.5 * k * s2) * xy +
                               (-s_km2 * sk + 0.5 * k * (1.0 + c2)) * n_y;
  return (2.0 * k / (r * r)) * (a * sec2 * a_block + b * csc2 * b_block);
}

AngularOperator gamma_susy(const ModelParams& p) {
  require_valid(p);
  return AngularOperator([p](double phi) {
    return gamma_susy_matrix(static_cast<double>(p.k), p.a, p.b, p.r, phi);
  });
}

AngularOperator gamma_tilde_rotated(const ModelParams& p) {
  require_valid(p);
  return AngularOperator([p](double phi) {
    require_clear_of_poles(p.k, phi, kDefaultPoleMargin);
    const DihedralParams dp{p.k};
    FockOperator acc;
    for (int i = 0; i < p.k; ++i) {
      const double t = phi + i * pi / p.k;
      const double sec2 = 1.0 / (std::cos(t) * std::cos(t));
      const double csc2 = 1.0 / (std::sin(t) * std::sin(t));
      const FockOperator b_a = rotated_annihilator(dp, p.k + 2 * i);
      const FockOperator b_b = rotated_annihilator(dp, 2 * i);
      acc += (p.a * sec2) * compose(adjoint(b_a), b_a);
      acc += (p.b * csc2) * compose(adjoint(b_b), b_b);
    }
    return (2.0 / (p.r * p.r)) * acc;
  });
}

AngularOperator gamma_tilde_expanded(const ModelParams& p) {
  require_valid(p);
  return AngularOperator([p](double phi) {
    require_clear_of_poles(p.k, phi, kDefaultPoleMargin);
    const FockOperator n_x = number(Mode::X);
    const FockOperator n_y = number(Mode::Y);
    const FockOperator xy = exchange_operator();
    FockOperator acc;
    for (int i = 0; i < p.k; ++i) {
      const double t = phi + i * pi / p.k;
      const double sec2 = 1.0 / (std::cos(t) * std::cos(t));
      const double csc2 = 1.0 / (std::sin(t) * std::sin(t));
      const double c = std::cos(2.0 * i * pi / p.k);
      const double s = std::sin(2.0 * i * pi / p.k);
      acc += (p.a * sec2) * ((c + 1.0) * n_x - s * xy + (1.0 - c) * n_y);
      acc += (p.b * csc2) * ((1.0 - c) * n_x + s * xy + (1.0 + c) * n_y);
    }
    return (1.0 / (p.r * p.r)) * acc;
  });
}

AngularOperator dihedral_difference(const ModelParams& p) {
  require_valid(p);
  return AngularOperator([p](double phi) {
    require_clear_of_poles(p.k, phi, kDefaultPoleMargin);
    const DihedralParams dp{p.k};
    const FockOperator one = FockOperator::identity();
    FockOperator acc;
    for (int i = 0; i < p.k; ++i) {
      const double t = phi + i * pi / p.k;
      const double sec2 = 1.0 / (std::cos(t) * std::cos(t));
      const double csc2 = 1.0 / (std::sin(t) * std::sin(t));
      acc += (p.a * sec2) * (one - reflection_closed(dp, p.k + 2 * i));
      acc += (p.b * csc2) * (one - reflection_closed(dp, 2 * i));
    }
    return (1.0 / (p.r * p.r)) * acc;
  });
}

FockOperator y_operator(const ModelParams& p) {
  require_valid(p);
  const double shift = p.k * (p.a + p.b) + 1.0;
  return (2.0 * p.omega) *
         (number(Mode::X) + number(Mode::Y) - shift * FockOperator::identity());
}

double equivalence_margin_floor(int k) { return pi / (40.0 * k); }

double exact_rewrite_margin_floor(int k) { return std::min(0.05, 0.32 / k); }

IdentityReport check_operator_equivalence(const std::string& check_id, const std::string& module,
                                          int k, const AngularOperator::Evaluator& lhs,
                                          const AngularOperator::Evaluator& rhs,
                                          const SamplingPlan& plan, double tolerance,
                                          double margin_floor, const std::string& detail) {
  const double margin = std::max(plan.pole_margin, margin_floor);
  const OperatorResiduals acc = sweep_operator(k, lhs, rhs, plan, margin, tolerance);

  IdentityReport rep;
  rep.check_id = check_id;
  rep.module = module;
  rep.detail = detail;
  rep.k = k;
  rep.n_evaluated = acc.n_evaluated;
  rep.n_skipped_near_pole = acc.n_skipped;
  rep.max_abs_residual = acc.max_abs;
  rep.max_rel_residual = acc.max_rel;
  rep.tolerance = tolerance;
  rep.kind = CheckKind::Asserted;
  rep.pass = acc.max_rel <= tolerance;
  return rep;
}

IdentityReport confirm_operator_failure(const std::string& check_id, const std::string& module,
                                        int k, const AngularOperator::Evaluator& lhs,
                                        const AngularOperator::Evaluator& rhs,
                                        const SamplingPlan& plan, double threshold,
                                        const std::string& detail) {
  const OperatorResiduals acc = sweep_operator(k, lhs, rhs, plan, plan.pole_margin, threshold);

  IdentityReport rep;
  rep.check_id = check_id;
  rep.module = module;
  rep.detail = detail;
  rep.k = k;
  rep.n_evaluated = acc.n_evaluated;
  rep.n_skipped_near_pole = acc.n_skipped;
  rep.n_large_residual = acc.n_large;
  rep.max_abs_residual = acc.max_abs;
  rep.max_rel_residual = acc.max_rel;
  rep.tolerance = threshold;
  rep.kind = CheckKind::ExpectedFailure;
  rep.pass = acc.n_evaluated > 0 &&
             acc.n_large >= static_cast<long>(std::ceil(kConfirmFraction * acc.n_evaluated));
  return rep;
}

IdentityReport verify_gamma_equivalence(const ModelParams& p, const SamplingPlan& plan,
                                        double tolerance) {
  require_valid(p);
  const auto tilde = gamma_tilde_rotated(p);
  const auto susy = gamma_susy(p);
  const auto lhs = [tilde](double phi) { return tilde.evaluate(phi); };
  const auto rhs = [susy](double phi) { return susy.evaluate(phi); };
  if (p.k % 2 == 0)
    return confirm_operator_failure("gamma_equivalence", "extension", p.k, lhs, rhs, plan,
                                    kControlThreshold, coupling_detail(p));
  return check_operator_equivalence("gamma_equivalence", "extension", p.k, lhs, rhs, plan,
                                    tolerance, equivalence_margin_floor(p.k),
                                    coupling_detail(p));
}

IdentityReport verify_triple_path(const ModelParams& p, const SamplingPlan& plan) {
  require_valid(p);
  const AngularOperator paths[3] = {gamma_tilde_rotated(p), gamma_tilde_expanded(p),
                                    dihedral_difference(p)};
  const double margin = std::max(plan.pole_margin, exact_rewrite_margin_floor(p.k));

  IdentityReport rep;
  rep.check_id = "triple_path";
  rep.module = "extension";
  rep.detail = coupling_detail(p);
  rep.k = p.k;
  rep.tolerance = kTriplePathTol;

  for (const double phi : sample_angles(p.k, plan)) {
    if (grid_pole_distance(p.k, phi) < margin) {
      ++rep.n_skipped_near_pole;
      continue;
    }
    ++rep.n_evaluated;
    FockOperator m[3];
    for (int i = 0; i < 3; ++i) m[i] = paths[i].evaluate(phi);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        rep.max_abs_residual = std::max(rep.max_abs_residual, max_abs_diff(m[i], m[j]));
        rep.max_rel_residual = std::max(rep.max_rel_residual, relative_residual(m[i], m[j]));
      }
    }
  }
  if (rep.n_evaluated < plan.n_samples - plan.n_samples / 2)
    throw DegenerateSamplingError("triple path: margin too large for k=" + std::to_string(p.k));
  rep.pass = rep.max_rel_residual <= rep.tolerance;
  return rep;
}

IdentityReport verify_susy_bridge(const ModelParams& p) {
  require_valid(p);
  const DihedralParams dp{p.k};
  const FockOperator one = FockOperator::identity();
  const FockOperator half_sum = 0.5 * ((one + power_R_closed(dp, p.k)) * inversion_I());
  const FockOperator lhs = (-2.0 * p.omega) * (half_sum + (p.k * (p.a + p.b)) * one);
  const FockOperator rhs = y_operator(p);

  IdentityReport rep;
  rep.check_id = "susy_bridge";
  rep.module = "extension";
  rep.detail = coupling_detail(p, /*with_omega=*/true);
  rep.k = p.k;
  rep.n_evaluated = 1;
  rep.max_abs_residual = max_abs_diff(lhs, rhs);
  rep.max_rel_residual = relative_residual(lhs, rhs);
  rep.tolerance = kBridgeTol;
  rep.pass = rep.max_rel_residual <= rep.tolerance;
  return rep;
}

}  // namespace d2k
