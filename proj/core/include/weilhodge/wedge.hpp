#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weilhodge/hermform.hpp"
#include "weilhodge/matrix.hpp"
#include "weilhodge/qfield.hpp"
#include "weilhodge/rootweights.hpp"

namespace weilhodge {

/// Which field of the tower Q <= E0 <= E a wedge space is taken over.
enum class TowerField { Rationals, TotallyReal, CM };

/// wedge^l of a based space of dimension D. Basis: l-subsets of {0..D-1}
/// (0-based) in lex order.
class WedgeSpace {
 public:
  WedgeSpace(std::size_t base_dim, std::size_t degree, TowerField field = TowerField::Rationals);

  std::size_t base_dim() const { return base_dim_; }
  std::size_t degree() const { return degree_; }
  TowerField field() const { return field_; }
  std::size_t dimension() const { return subsets_.size(); }
  const std::vector<std::vector<int>>& basis() const { return subsets_; }
  const std::vector<int>& subset(std::size_t index) const { return subsets_[index]; }
  /// Index of a sorted subset; throws std::out_of_range if absent.
  std::size_t index_of(const std::vector<int>& subset) const;

 private:
  std::size_t base_dim_;
  std::size_t degree_;
  TowerField field_;
  std::vector<std::vector<int>> subsets_;
};

/// All l-subsets of {0..D-1} in lex order.
std::vector<std::vector<int>> lex_subsets(int D, int l);

/// Sorts `indices` in place and returns the sign of the sorting permutation,
/// or 0 if an index repeats.
int sort_with_sign(std::vector<int>& indices);

template <ExactField T>
using SparseVector = std::vector<std::pair<int, T>>;

template <ExactField T>
SparseVector<T> sparse_column(const Matrix<T>& a, std::size_t j) {
  SparseVector<T> out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!a(i, j).is_zero()) out.emplace_back(static_cast<int>(i), a(i, j));
  return out;
}

template <ExactField T>
SparseVector<T> unit_vector(int index) {
  return {{index, T(1)}};
}

namespace detail {

template <ExactField T>
void expand_wedge(const WedgeSpace& space, const std::vector<SparseVector<T>>& vectors, std::size_t slot,
                  std::vector<int>& chosen, const T& coeff, Matrix<T>& out, std::size_t col) {
  if (slot == vectors.size()) {
    std::vector<int> sorted = chosen;
    const int sign = sort_with_sign(sorted);
    if (sign == 0) return;
    T& target = out(space.index_of(sorted), col);
    if (sign > 0) {
      target += coeff;
    } else {
      target -= coeff;
    }
    return;
  }
  for (const auto& [index, value] : vectors[slot]) {
    if (std::find(chosen.begin(), chosen.end(), index) != chosen.end()) continue;
    chosen.push_back(index);
    expand_wedge(space, vectors, slot + 1, chosen, coeff * value, out, col);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Adds coeff * (v_1 ^ ... ^ v_l) to column `col` of `out`, in the lex basis.
template <ExactField T>
void accumulate_wedge(const WedgeSpace& space, const std::vector<SparseVector<T>>& vectors, const T& coeff,
                      Matrix<T>& out, std::size_t col) {
  if (vectors.size() != space.degree()) throw std::invalid_argument("accumulate_wedge: wrong number of factors");
  std::vector<int> chosen;
  chosen.reserve(vectors.size());
  detail::expand_wedge(space, vectors, 0, chosen, coeff, out, col);
}

/// Matrix of the derivation v_1^...^v_l -> sum_k v_1^..^(a v_k)^..^v_l.
template <ExactField T>
Matrix<T> induced_derivation(const Matrix<T>& a, std::size_t degree) {
  if (a.rows() != a.cols()) throw std::invalid_argument("induced_derivation: non-square matrix");
  const WedgeSpace space(a.rows(), degree);
  std::vector<SparseVector<T>> columns;
  for (std::size_t j = 0; j < a.cols(); ++j) columns.push_back(sparse_column(a, j));
  Matrix<T> out(space.dimension(), space.dimension());
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    const auto& subset = space.subset(col);
    for (std::size_t k = 0; k < degree; ++k) {
      std::vector<SparseVector<T>> vectors;
      for (std::size_t s = 0; s < degree; ++s) {
        vectors.push_back(s == k ? columns[static_cast<std::size_t>(subset[s])] : unit_vector<T>(subset[s]));
      }
      accumulate_wedge(space, vectors, T(1), out, col);
    }
  }
  return out;
}

/// Multiplication by phi (phi^2 = phi_square in F) on Res_{K/F} W for
/// K = F(phi), in the basis (e_1..e_D, phi e_1..phi e_D).
template <ExactField T>
class ScalarAction {
 public:
  ScalarAction(std::size_t base_dim, T phi_square) : base_dim_(base_dim), phi_square_(std::move(phi_square)) {
    if (phi_square_.is_zero()) throw std::invalid_argument("ScalarAction: phi^2 must be nonzero");
    matrix_ = Matrix<T>(2 * base_dim_, 2 * base_dim_);
    for (std::size_t k = 0; k < base_dim_; ++k) {
      matrix_(base_dim_ + k, k) = T(1);
      matrix_(k, base_dim_ + k) = phi_square_;
    }
    if (!(matrix_ * matrix_ == Matrix<T>::scalar(2 * base_dim_, phi_square_))) {
      throw std::logic_error("ScalarAction: J^2 != phi^2 Id");
    }
  }

  std::size_t base_dim() const { return base_dim_; }
  const T& phi_square() const { return phi_square_; }
  const Matrix<T>& matrix() const { return matrix_; }

 private:
  std::size_t base_dim_;
  T phi_square_;
  Matrix<T> matrix_;
};

/// i : Res_{K/F} wedge^l_K W -> wedge^l_F Res_{K/F} W.
/// Source basis (w_I, phi w_I) with I running over lex l-subsets of D; target
/// basis the lex l-subsets of 2D. On K-decomposable elements
///   i(v_1 ^_K ... ^_K v_l) = 2^{1-l} sum_{S even} phi^{-|S|} (phi on the slots in S),
/// which for l = 3 is 1/4 [v1^v2^v3 + phi^{-2}(three two-slot terms)].
template <ExactField T>
Matrix<T> restriction_injection(std::size_t base_dim, std::size_t degree, const ScalarAction<T>& scalar) {
  if (scalar.base_dim() != base_dim) throw std::invalid_argument("restriction_injection: dimension mismatch");
  if (degree == 0 || degree > base_dim) throw std::invalid_argument("restriction_injection: need 1 <= l <= D");
  const WedgeSpace source(base_dim, degree, TowerField::CM);
  const WedgeSpace target(2 * base_dim, degree);
  const std::size_t n_src = source.dimension();
  const Matrix<T>& J = scalar.matrix();
  std::vector<SparseVector<T>> phi_columns;
  for (std::size_t j = 0; j < J.cols(); ++j) phi_columns.push_back(sparse_column(J, j));

  T normalization(1);
  for (std::size_t k = 1; k < degree; ++k) normalization = normalization / T(2);
  const T inv_phi_square = T(1) / scalar.phi_square();

  Matrix<T> out(target.dimension(), 2 * n_src);
  for (std::size_t idx = 0; idx < n_src; ++idx) {
    const auto& subset = source.subset(idx);
    for (int variant = 0; variant < 2; ++variant) {
      // Slot vectors of the K-decomposable element: e_I, or phi e_{i1} ^ e_{i2} ^ ...
      std::vector<SparseVector<T>> base;
      for (std::size_t s = 0; s < degree; ++s) base.push_back(unit_vector<T>(subset[s]));
      if (variant == 1) base[0] = phi_columns[static_cast<std::size_t>(subset[0])];
      const std::size_t col = idx + static_cast<std::size_t>(variant) * n_src;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << degree); ++mask) {
        const int weight = __builtin_popcountll(mask);
        if (weight % 2 != 0) continue;
        std::vector<SparseVector<T>> vectors;
        for (std::size_t s = 0; s < degree; ++s) {
          if ((mask >> s) & 1U) {
            SparseVector<T> applied;
            for (const auto& [i, v] : base[s]) {
              for (const auto& [r, w] : phi_columns[static_cast<std::size_t>(i)]) applied.emplace_back(r, v * w);
            }
            vectors.push_back(std::move(applied));
          } else {
            vectors.push_back(base[s]);
          }
        }
        T coeff = normalization;
        for (int k = 0; k < weight / 2; ++k) coeff = coeff * inv_phi_square;
        accumulate_wedge(target, vectors, coeff, out, col);
      }
    }
  }
  return out;
}

/// phi_m on wedge^m_F Res_{K/F} W: the sum over the C(m,2) ways of applying
/// phi to exactly two slots.
template <ExactField T>
Matrix<T> phi_operator(std::size_t base_dim, std::size_t degree, const ScalarAction<T>& scalar) {
  if (scalar.base_dim() != base_dim) throw std::invalid_argument("phi_operator: dimension mismatch");
  const WedgeSpace space(2 * base_dim, degree);
  const Matrix<T>& J = scalar.matrix();
  std::vector<SparseVector<T>> phi_columns;
  for (std::size_t j = 0; j < J.cols(); ++j) phi_columns.push_back(sparse_column(J, j));
  Matrix<T> out(space.dimension(), space.dimension());
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    const auto& subset = space.subset(col);
    for (std::size_t a = 0; a < degree; ++a) {
      for (std::size_t b = a + 1; b < degree; ++b) {
        std::vector<SparseVector<T>> vectors;
        for (std::size_t s = 0; s < degree; ++s) {
          vectors.push_back(s == a || s == b ? phi_columns[static_cast<std::size_t>(subset[s])]
                                             : unit_vector<T>(subset[s]));
        }
        accumulate_wedge(space, vectors, T(1), out, col);
      }
    }
  }
  return out;
}

/// phi_m - C(m,2) phi^2 Id.
template <ExactField T>
Matrix<T> kernel_operator(std::size_t base_dim, std::size_t degree, const ScalarAction<T>& scalar) {
  const Matrix<T> phi = phi_operator(base_dim, degree, scalar);
  const T shift = T(static_cast<long>(binomial(static_cast<int>(degree), 2))) * scalar.phi_square();
  return phi - Matrix<T>::scalar(phi.rows(), shift);
}

struct KernelCheck {
  std::size_t ambient_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t expected_dim = 0;
  std::size_t injection_rank = 0;
  bool image_in_kernel = false;
  bool image_equals_kernel = false;
};

/// Computes ker(phi_m - C(m,2) phi^2 Id) exactly and compares it with the
/// image of restriction_injection.
template <ExactField T>
KernelCheck kernel_characterization_check(std::size_t base_dim, std::size_t degree, const ScalarAction<T>& scalar) {
  KernelCheck out;
  const Matrix<T> op = kernel_operator(base_dim, degree, scalar);
  out.ambient_dim = op.rows();
  out.kernel_dim = op.cols() - rank(op);
  out.expected_dim = 2 * binomial(static_cast<int>(base_dim), static_cast<int>(degree));
  const Matrix<T> inj = restriction_injection(base_dim, degree, scalar);
  out.injection_rank = rank(inj);
  out.image_in_kernel = (op * inj).is_zero();
  out.image_equals_kernel = out.image_in_kernel && out.injection_rank == out.kernel_dim;
  return out;
}

/// Res_{E/E0} of an E-matrix: x = A + phi B  ->  [[A, phi^2 B], [B, A]] with phi^2 = -e.
Matrix<E0Element> restrict_e_to_e0(const Matrix<CMElement>& a, const E0Element& e);

/// Res_{E0/Q} of an E0-matrix: A + sqrt(m) B  ->  [[A, m B], [B, A]].
Matrix<Rational> restrict_e0_to_q(const Matrix<E0Element>& a, long m);

/// Rational coordinates of a matrix whose entries all lie in Q; throws
/// std::invalid_argument otherwise.
Matrix<Rational> to_rational(const Matrix<E0Element>& a);

/// The two routes Res_{E0/Q} Res_{E/E0} and Res_{E/Q} agree on the
/// multiplication matrices of the basis elements of E (coordinates are
/// identical in the bases (1, phi, sqrt m, sqrt m phi)).
bool double_restriction_is_identity(const CMField& tower);

struct LieCheck {
  bool passed = false;
  int samples = 0;
  int failures = 0;
  std::uint64_t seed = 0;
  bool commutes_with_phi = false;
  bool preserves_kernel = false;
};

/// Samples X in su(U, h), lets it act by derivations on wedge^m_{E0} Res_{E/E0} U,
/// and checks exactly that this commutes with phi_m and preserves
/// ker(phi_m - C(m,2) phi^2 Id).
LieCheck lie_equivariance_check(std::size_t base_dim, std::size_t degree, const DiagonalHermitianForm& form,
                                int samples, std::uint64_t seed);

struct ChainCheck {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  bool injective = false;
};

/// Composite Res_{E/Q} wedge^n_E U -> Res_{E0/Q} wedge^n_{E0} Res_{E/E0} U
/// -> wedge^n_Q U', built from two quadratic restriction steps (one for d = 1).
ChainCheck subrepresentation_chain_check(int n, const CMField& tower);

}  // namespace weilhodge
