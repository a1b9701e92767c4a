#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weilhodge/hermform.hpp"
#include "weilhodge/matrix.hpp"
#include "weilhodge/qfield.hpp"
#include "weilhodge/wedge.hpp"

namespace weilhodge {

// Conjugate-linear maps on an E-space with basis (w_1..w_N) are stored as
// E0-matrices on the doubled coordinates (x; y) of x + sqrt(-e) y.

/// Doubled matrix of the E-linear map a.
Matrix<E0Element> doubled_linear(const Matrix<CMElement>& a, const E0Element& e);
/// Doubled matrix of w -> a conj(w).
Matrix<E0Element> doubled_conjugate_linear(const Matrix<CMElement>& a, const E0Element& e);
/// Doubled matrix of multiplication by sqrt(-e) on an N-dimensional E-space.
Matrix<E0Element> doubled_sqrt_minus_e(std::size_t n, const E0Element& e);

/// Sign of the permutation sorting (I, I^c) to (0, ..., D-1).
int koszul_sign(const std::vector<int>& subset, int D);

enum class PairingKind { WedgeTop, WedgePowerH };

struct PairingMatrix {
  PairingKind kind;
  /// gram(I, J) = pairing(e_I, e_J) in the lex basis of wedge^n_E U.
  Matrix<CMElement> gram;
};

/// (wedge, wedge^n h) with the top-degree identification e_1 ^ ... ^ e_2n -> 1.
std::pair<PairingMatrix, PairingMatrix> build_pairings(int n, const DiagonalHermitianForm& form);

/// tau_1(w) = (x -> x ^ w) as coordinates f_I = f(e_I); E-linear.
Matrix<E0Element> tau1_doubled(const PairingMatrix& wedge_top, const E0Element& e);
/// tau_2(w) = (x -> (wedge^n h)(x, w)); conjugate-linear.
Matrix<E0Element> tau2_doubled(const PairingMatrix& wedge_power_h, const E0Element& e);

struct StarOperator {
  int n = 0;
  /// Dimension C(2n, n) over E.
  std::size_t dim = 0;
  /// The E-matrix S with star(w) = S conj(w).
  Matrix<CMElement> semilinear_part;
  /// 2 dim x 2 dim matrix over E0 on doubled coordinates.
  Matrix<E0Element> doubled;
};

/// star = tau_1^{-1} o tau_2, so star(e_I) = s(I) (prod_{i in I} h_i) e_{I^c}.
StarOperator build_star(int n, const DiagonalHermitianForm& form);

struct StarSquareCheck {
  bool holds = false;
  /// (-1)^n disc(h).
  E0Element expected;
};

/// Exact matrix identity star o star = (-1)^n disc(h) Id.
StarSquareCheck verify_star_square(const StarOperator& star, int n, const DiagonalHermitianForm& form);

/// Conjugate-linearity star(sqrt(-e) w) = -sqrt(-e) star(w) on the doubled matrices.
bool star_is_conjugate_linear(const StarOperator& star, const E0Element& e);

struct RealForm {
  /// Columns: an E0-basis of W_0 in doubled coordinates.
  Matrix<E0Element> basis;
  E0Element witness;
  std::size_t dimension = 0;
  std::size_t expected_dimension = 0;
  /// W_0 + sqrt(-e) W_0 is all of wedge^n_E U and the sum is direct.
  bool spans = false;
};

/// W_0 = fixed space of the conjugate-linear involution c^{-1} star, where c
/// is the sigma_1-nonnegative square root of (-1)^n disc(h). Throws
/// CriterionFailed if that root does not exist in E0.
RealForm construct_real_form(const StarOperator& star, int n, const DiagonalHermitianForm& form);

struct QuaternionReport {
  /// i^2 = -e.
  E0Element i_square;
  /// j^2 = star o star.
  E0Element j_square;
  bool j_square_is_scalar = false;
  bool anticommute = false;
  /// (ij)^2 = -i^2 j^2.
  bool k_square_ok = false;
  bool split = false;
  /// c with star o star = Nm(c) = c^2, when the square test succeeds.
  std::optional<E0Element> witness;
};

/// Quaternion data (-e, star^2) of End(Res wedge^n_E U) and the square-test verdict.
QuaternionReport quaternion_split_report(int n, const DiagonalHermitianForm& form);

struct StarEquivarianceCheck {
  bool passed = false;
  int samples = 0;
  int failures = 0;
  std::uint64_t seed = 0;
  bool star_commutes = false;
  bool real_form_invariant = false;
};

/// For sampled X in su(U, h): star o rho(X) = rho(X) o star on wedge^n_E U,
/// and (when given) the real form W_0 is rho(X)-invariant.
StarEquivarianceCheck star_equivariance_check(const StarOperator& star, const DiagonalHermitianForm& form,
                                              const std::optional<RealForm>& real_form, int samples,
                                              std::uint64_t seed);

}  // namespace weilhodge
