#include "d2k/fock.hpp"

#include <algorithm>
#include <cmath>

namespace d2k {

FockOperator FockOperator::identity() {
  FockOperator m;
  for (int i = 0; i < kFockDim; ++i) m.at(i, i) = 1.0;
  return m;
}

FockOperator FockOperator::diagonal(const std::array<double, kFockDim>& d) {
  FockOperator m;
  for (int i = 0; i < kFockDim; ++i) m.at(i, i) = d[i];
  return m;
}

FockOperator FockOperator::operator+(const FockOperator& other) const {
  FockOperator out;
  for (int i = 0; i < kFockDim * kFockDim; ++i) out.entries_[i] = entries_[i] + other.entries_[i];
  return out;
}

FockOperator FockOperator::operator-(const FockOperator& other) const {
  FockOperator out;
  for (int i = 0; i < kFockDim * kFockDim; ++i) out.entries_[i] = entries_[i] - other.entries_[i];
  return out;
}

FockOperator FockOperator::operator*(const FockOperator& other) const {
  FockOperator out;
  for (int r = 0; r < kFockDim; ++r) {
    for (int c = 0; c < kFockDim; ++c) {
      Complex acc = 0.0;
      for (int m = 0; m < kFockDim; ++m) acc += at(r, m) * other.at(m, c);
      out.at(r, c) = acc;
    }
  }
  return out;
}

FockOperator FockOperator::operator-() const {
  FockOperator out;
  for (int i = 0; i < kFockDim * kFockDim; ++i) out.entries_[i] = -entries_[i];
  return out;
}

FockOperator& FockOperator::operator+=(const FockOperator& other) {
  for (int i = 0; i < kFockDim * kFockDim; ++i) entries_[i] += other.entries_[i];
  return *this;
}

FockOperator operator*(Complex scale, const FockOperator& m) {
  FockOperator out;
  for (int i = 0; i < kFockDim * kFockDim; ++i) out.entries_[i] = scale * m.entries_[i];
  return out;
}

FockOperator operator*(double scale, const FockOperator& m) { return Complex(scale) * m; }

int basis_index(int n_x, int n_y) { return n_x + 2 * n_y; }

FockVector basis_state(int n_x, int n_y) {
  FockVector v{};
  v[basis_index(n_x, n_y)] = 1.0;
  return v;
}

FockVector apply(const FockOperator& op, const FockVector& v) {
  FockVector out{};
  for (int r = 0; r < kFockDim; ++r)
    for (int c = 0; c < kFockDim; ++c) out[r] += op.at(r, c) * v[c];
  return out;
}

FockOperator annihilator(Mode m, StringConvention c) {
  FockOperator out;
  for (int s = 0; s < kFockDim; ++s) {
    const int n_x = s & 1;
    const int n_y = (s >> 1) & 1;
    if (m == Mode::X && n_x == 1) {
      const double sign = (c == StringConvention::StringOnY) ? 1.0 : ((n_y == 1) ? -1.0 : 1.0);
      out.at(basis_index(0, n_y), s) = sign;
    } else if (m == Mode::Y && n_y == 1) {
      const double sign = (c == StringConvention::StringOnY) ? ((n_x == 1) ? -1.0 : 1.0) : 1.0;
      out.at(basis_index(n_x, 0), s) = sign;
    }
  }
  return out;
}

FockOperator creator(Mode m, StringConvention c) { return adjoint(annihilator(m, c)); }

FockOperator number(Mode m) {
  return m == Mode::X ? FockOperator::diagonal({0.0, 1.0, 0.0, 1.0})
                      : FockOperator::diagonal({0.0, 0.0, 1.0, 1.0});
}

FockOperator adjoint(const FockOperator& a) {
  FockOperator out;
  for (int r = 0; r < kFockDim; ++r)
    for (int c = 0; c < kFockDim; ++c) out.at(r, c) = std::conj(a.at(c, r));
  return out;
}

FockOperator compose(const FockOperator& a, const FockOperator& b) { return a * b; }

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

FockOperator anticommutator(const FockOperator& a, const FockOperator& b) { return a * b + b * a; }

double max_abs_diff(const FockOperator& a, const FockOperator& b) {
  double worst = 0.0;
  for (int r = 0; r < kFockDim; ++r)
    for (int c = 0; c < kFockDim; ++c) worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
  return worst;
}

double relative_residual(const FockOperator& a, const FockOperator& b) {
  double worst = 0.0;
  for (int r = 0; r < kFockDim; ++r) {
    for (int c = 0; c < kFockDim; ++c) {
      const double diff = std::abs(a.at(r, c) - b.at(r, c));
      const double floor = 1.0 + std::max(std::abs(a.at(r, c)), std::abs(b.at(r, c)));
      worst = std::max(worst, diff / floor);
    }
  }
  return worst;
}

double max_abs(const FockOperator& a) {
  double worst = 0.0;
  for (int r = 0; r < kFockDim; ++r)
    for (int c = 0; c < kFockDim; ++c) worst = std::max(worst, std::abs(a.at(r, c)));
  return worst;
}

double max_imag(const FockOperator& a) {
  double worst = 0.0;
  for (int r = 0; r < kFockDim; ++r)
    for (int c = 0; c < kFockDim; ++c) worst = std::max(worst, std::abs(a.at(r, c).imag()));
  return worst;
}

bool is_finite(const FockOperator& a) {
  for (int r = 0; r < kFockDim; ++r)
    for (int c = 0; c < kFockDim; ++c)
      if (!std::isfinite(a.at(r, c).real()) || !std::isfinite(a.at(r, c).imag())) return false;
  return true;
}

}  // namespace d2k
