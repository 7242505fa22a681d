#include "d2k/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "d2k/errors.hpp"

namespace d2k {

namespace {

constexpr double kRelationTol = 1e-13;
constexpr double kClosedFormTol = 1e-12;
constexpr double kDeformedAlgebraTol = 1e-13;
constexpr double kDistinctThreshold = 0.1;

void require_valid(const DihedralParams& p) {
  if (p.k < 1) throw ConfigError("DihedralParams.k must be >= 1");
}

int reduce_mod(int i, int modulus) {
  const int r = i % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

FockOperator rotation_R(const DihedralParams& p) { return power_R_closed(p, 1); }

FockOperator inversion_I() { return FockOperator::diagonal({1.0, 1.0, -1.0, -1.0}); }

FockOperator power_R_closed(const DihedralParams& p, int i) {
  require_valid(p);
  i = reduce_mod(i, 2 * p.k);
  const double angle = static_cast<double>(i) * std::numbers::pi / p.k;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const FockOperator n_x = number(Mode::X);
  const FockOperator n_y = number(Mode::Y);
  const FockOperator hop = compose(creator(Mode::X), annihilator(Mode::Y)) -
                           compose(creator(Mode::Y), annihilator(Mode::X));
  return FockOperator::identity() + (c - 1.0) * (n_x + n_y) + s * hop +
         (2.0 * (1.0 - c)) * compose(n_x, n_y);
}

FockOperator reflection_closed(const DihedralParams& p, int i) {
  require_valid(p);
  i = reduce_mod(i, 2 * p.k);
  const double angle = static_cast<double>(i) * std::numbers::pi / p.k;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const FockOperator exchange = compose(creator(Mode::X), annihilator(Mode::Y)) +
                                compose(creator(Mode::Y), annihilator(Mode::X));
  return FockOperator::identity() + (c - 1.0) * number(Mode::X) - (c + 1.0) * number(Mode::Y) -
         s * exchange;
}

FockOperator rotated_annihilator(const DihedralParams& p, int i) {
  require_valid(p);
  i = reduce_mod(i, 2 * p.k);
  const double half = static_cast<double>(i) * std::numbers::pi / (2.0 * p.k);
  return std::sin(half) * annihilator(Mode::X) + std::cos(half) * annihilator(Mode::Y);
}

DihedralElement element(const DihedralParams& p, int i, bool reflected) {
  DihedralElement e;
  e.rotation_index = reduce_mod(i, 2 * p.k);
  e.reflected = reflected;
  e.matrix = reflected ? reflection_closed(p, i) : power_R_closed(p, i);
  return e;
}

std::vector<DihedralElement> all_elements(const DihedralParams& p) {
  require_valid(p);
  std::vector<DihedralElement> out;
  out.reserve(4 * p.k);
  for (int i = 0; i < 2 * p.k; ++i) out.push_back(element(p, i, false));
  for (int i = 0; i < 2 * p.k; ++i) out.push_back(element(p, i, true));
  return out;
}

std::vector<std::pair<std::string, double>> group_relation_residuals(const FockOperator& R,
                                                                     const FockOperator& I, int k) {
  const FockOperator one = FockOperator::identity();
  FockOperator r_pow = one;  // R^{2k} by repeated multiplication
  for (int i = 0; i < 2 * k; ++i) r_pow = r_pow * R;
  FockOperator r_prev = one;  // R^{2k-1}
  for (int i = 0; i < 2 * k - 1; ++i) r_prev = r_prev * R;

  std::vector<std::pair<std::string, double>> out;
  out.emplace_back("R^{2k} = 1", max_abs_diff(r_pow, one));
  out.emplace_back("I^2 = 1", max_abs_diff(I * I, one));
  out.emplace_back("I R = R^{2k-1} I", max_abs_diff(I * R, r_prev * I));
  out.emplace_back("adj(R) = R^{2k-1}", max_abs_diff(adjoint(R), r_prev));
  out.emplace_back("adj(I) = I", max_abs_diff(adjoint(I), I));
  return out;
}

IdentityReport verify_group_relations(const DihedralParams& p) {
  require_valid(p);
  IdentityReport rep;
  rep.check_id = "group_relations";
  rep.module = "dihedral";
  rep.k = p.k;
  rep.tolerance = kRelationTol;

  double worst = 0.0;
  for (const auto& [name, residual] : group_relation_residuals(rotation_R(p), inversion_I(), p.k)) {
    worst = std::max(worst, residual);
    ++rep.n_evaluated;
  }

  const auto elements = all_elements(p);
  const FockOperator one = FockOperator::identity();
  for (const auto& e : elements) {
    worst = std::max(worst, max_abs_diff(adjoint(e.matrix) * e.matrix, one));
    ++rep.n_evaluated;
  }

  double min_pairwise = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      min_pairwise = std::min(min_pairwise, max_abs_diff(elements[i].matrix, elements[j].matrix));
      ++rep.n_evaluated;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "min_pairwise_diff=%.6g", min_pairwise);
  rep.detail = buf;

  rep.max_abs_residual = worst;
  rep.max_rel_residual = worst;
  // Faithfulness is only asserted for k >= 2; the k = 1 value is recorded.
  rep.pass = worst <= rep.tolerance && (p.k < 2 || min_pairwise > kDistinctThreshold);
  return rep;
}

IdentityReport verify_reflection_ladder_form(const DihedralParams& p) {
  require_valid(p);
  IdentityReport rep;
  rep.check_id = "reflection_ladder";
  rep.module = "dihedral";
  rep.k = p.k;
  rep.tolerance = kClosedFormTol;

  const FockOperator one = FockOperator::identity();
  double worst = 0.0;
  for (int i = 0; i < 2 * p.k; ++i) {
    const FockOperator b_i = rotated_annihilator(p, i);
    const FockOperator ladder_form = one - 2.0 * compose(adjoint(b_i), b_i);
    worst = std::max(worst, max_abs_diff(reflection_closed(p, i), ladder_form));
    ++rep.n_evaluated;
  }
  rep.max_abs_residual = worst;
  rep.max_rel_residual = worst;
  rep.pass = worst <= rep.tolerance;
  return rep;
}

IdentityReport verify_rotated_anticommutators(const DihedralParams& p) {
  require_valid(p);
  IdentityReport rep;
  rep.check_id = "rotated_anticommutators";
  rep.module = "dihedral";
  rep.k = p.k;
  rep.tolerance = kDeformedAlgebraTol;

  const FockOperator zero = FockOperator::zero();
  double worst = 0.0;
  for (int i = 0; i < 2 * p.k; ++i) {
    const FockOperator b_i = rotated_annihilator(p, i);
    for (int j = 0; j < 2 * p.k; ++j) {
      const FockOperator b_j = rotated_annihilator(p, j);
      const double expected = std::cos((j - i) * std::numbers::pi / (2.0 * p.k));
      worst = std::max(worst, max_abs_diff(anticommutator(b_i, adjoint(b_j)),
                                           expected * FockOperator::identity()));
      worst = std::max(worst, max_abs_diff(anticommutator(b_i, b_j), zero));
      worst = std::max(worst, max_abs_diff(anticommutator(adjoint(b_i), adjoint(b_j)), zero));
      rep.n_evaluated += 3;
    }
  }
  rep.max_abs_residual = worst;
  rep.max_rel_residual = worst;
  rep.pass = worst <= rep.tolerance;
  return rep;
}

IdentityReport verify_closed_powers(const DihedralParams& p) {
  require_valid(p);
  IdentityReport rep;
  rep.check_id = "closed_power";
  rep.module = "dihedral";
  rep.k = p.k;
  rep.tolerance = kClosedFormTol;

  const FockOperator R = rotation_R(p);
  const FockOperator I = inversion_I();
  FockOperator iterated = FockOperator::identity();
  double worst = 0.0;
  for (int i = 0; i < 2 * p.k; ++i) {
    worst = std::max(worst, max_abs_diff(power_R_closed(p, i), iterated));
    worst = std::max(worst, max_abs_diff(reflection_closed(p, i), iterated * I));
    rep.n_evaluated += 2;
    iterated = iterated * R;
  }
  rep.max_abs_residual = worst;
  rep.max_rel_residual = worst;
  rep.pass = worst <= rep.tolerance;
  return rep;
}

}  // namespace d2k
