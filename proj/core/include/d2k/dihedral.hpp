#pragma once

#include <string>
#include <utility>
#include <vector>

#include "d2k/fock.hpp"
#include "d2k/report.hpp"

namespace d2k {

/// Order parameter of the dihedral group D_{2k} (4k elements).
struct DihedralParams {
  int k = 1;
};

/// One group element R^i or R^i*I with its matrix realization.
struct DihedralElement {
  int rotation_index = 0;  ///< reduced modulo 2k
  bool reflected = false;
  FockOperator matrix;
};

/// The generator R: identity on the empty and doubly occupied states, a
/// rotation by pi/k on the singly occupied pair.
FockOperator rotation_R(const DihedralParams& p);

/// The reflection generator I = 1 - 2 N_y = diag(1, 1, -1, -1).
FockOperator inversion_I();

/// Closed form for R^i (same coefficient pattern as R with i*pi/k).
/// Indices outside [0, 2k) are reduced modulo 2k.
FockOperator power_R_closed(const DihedralParams& p, int i);

/// Closed form for R^i * I. Indices reduced modulo 2k.
FockOperator reflection_closed(const DihedralParams& p, int i);

/// Rotated annihilator b_i = sin(i*pi/2k) b_x + cos(i*pi/2k) b_y.
/// Indices reduced modulo 2k.
FockOperator rotated_annihilator(const DihedralParams& p, int i);

DihedralElement element(const DihedralParams& p, int i, bool reflected);
/// All 4k elements: rotations first (i = 0..2k-1), then reflections.
std::vector<DihedralElement> all_elements(const DihedralParams& p);

/// Named residuals of the defining relations and Hermiticity conditions for
/// candidate generator matrices. Exposed so tests can probe the harness with
/// perturbed generators; verify_group_relations binds the real ones.
std::vector<std::pair<std::string, double>> group_relation_residuals(const FockOperator& R,
                                                                     const FockOperator& I, int k);

/// Checks R^{2k} = 1, I^2 = 1, I R = R^{2k-1} I, R+ = R^{2k-1}, I+ = I,
/// unitarity of all 4k elements, and (for k >= 2) pairwise distinctness of
/// the element matrices. For k = 1 distinctness is recorded in `detail` but
/// not asserted.
IdentityReport verify_group_relations(const DihedralParams& p);

/// Checks R^i I = 1 - 2 b+_i b_i for every i in [0, 2k).
IdentityReport verify_reflection_ladder_form(const DihedralParams& p);

/// Checks the deformed algebra of the rotated operators over all index
/// pairs: {b_i, b+_j} = cos((j-i)pi/2k), {b_i, b_j} = {b+_i, b+_j} = 0.
IdentityReport verify_rotated_anticommutators(const DihedralParams& p);

/// Checks the closed forms against iterated multiplication: R^i by repeated
/// composition of R vs power_R_closed, and R^i * I vs reflection_closed.
IdentityReport verify_closed_powers(const DihedralParams& p);

}  // namespace d2k
