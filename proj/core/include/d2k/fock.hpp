#pragma once

#include <array>
#include <complex>

namespace d2k {

using Complex = std::complex<double>;

/// Dimension of the Fock space of two fermionic modes.
inline constexpr int kFockDim = 4;

/// The two fermionic modes.
enum class Mode { X, Y };

/// Jordan-Wigner sign-string gauge. Some string is mandatory for the
/// cross-mode anticommutators to vanish; which mode carries it is a gauge
/// choice. The library convention is StringOnY: b_x is string-free and b_y
/// picks up the parity (-1)^{n_x}. StringOnX is the mirror gauge, exposed so
/// tests can confirm that every bilinear observable is gauge-invariant.
enum class StringConvention { StringOnY, StringOnX };

/// Dense 4x4 complex matrix acting on the two-mode fermionic Fock space.
///
/// Basis ordering is fixed: index = n_x + 2*n_y, i.e.
///   0 -> (0,0), 1 -> (1,0), 2 -> (0,1), 3 -> (1,1).
/// Number operators are diagonal in this ordering. Values are immutable in
/// spirit: all operations return new matrices, so concurrent use is safe.
class FockOperator {
 public:
  FockOperator() : entries_{} {}

  static FockOperator identity();
  static FockOperator zero() { return FockOperator{}; }
  /// Diagonal matrix with real entries in basis order.
  static FockOperator diagonal(const std::array<double, kFockDim>& d);

  Complex& at(int row, int col) { return entries_[row * kFockDim + col]; }
  const Complex& at(int row, int col) const { return entries_[row * kFockDim + col]; }

  FockOperator operator+(const FockOperator& other) const;
  FockOperator operator-(const FockOperator& other) const;
  FockOperator operator*(const FockOperator& other) const;
  FockOperator operator-() const;
  FockOperator& operator+=(const FockOperator& other);

  friend FockOperator operator*(Complex scale, const FockOperator& m);
  friend FockOperator operator*(double scale, const FockOperator& m);

 private:
  std::array<Complex, kFockDim * kFockDim> entries_;
};

/// State vector over the fixed basis.
using FockVector = std::array<Complex, kFockDim>;

int basis_index(int n_x, int n_y);
FockVector basis_state(int n_x, int n_y);
FockVector apply(const FockOperator& op, const FockVector& v);

/// Matrix of b_m in the fixed basis under the given string convention.
FockOperator annihilator(Mode m, StringConvention c = StringConvention::StringOnY);
/// adjoint(annihilator(m)).
FockOperator creator(Mode m, StringConvention c = StringConvention::StringOnY);
/// N_m = b+_m b_m; diagonal projector onto n_m = 1, string-independent.
FockOperator number(Mode m);

FockOperator adjoint(const FockOperator& a);
FockOperator compose(const FockOperator& a, const FockOperator& b);
FockOperator commutator(const FockOperator& a, const FockOperator& b);
FockOperator anticommutator(const FockOperator& a, const FockOperator& b);

/// Entrywise maximum absolute difference; the residual metric used by the
/// exact-rewriting checks.
double max_abs_diff(const FockOperator& a, const FockOperator& b);

/// Entrywise relative residual max_ij |a_ij - b_ij| / (1 + max(|a_ij|, |b_ij|)).
/// The +1 floor keeps the metric meaningful both near poles (large entries)
/// and near zeros.
double relative_residual(const FockOperator& a, const FockOperator& b);

double max_abs(const FockOperator& a);
/// Largest |imaginary part| over all entries.
double max_imag(const FockOperator& a);
bool is_finite(const FockOperator& a);

}  // namespace d2k
