#pragma once

#include <vector>

#include "weilhodge/matrix.hpp"
#include "weilhodge/qfield.hpp"

namespace weilhodge {

struct Eigenspace {
  Embedding embedding;
  /// Columns span {v : a v = sigma(a) v} inside the E0-span of the Q-space.
  Matrix<E0Element> basis;
};

/// Splits a Q-space carrying an E0-action into the eigenspaces of the
/// generator (sqrt(m) for a real quadratic field, 1 for Q). `action` is the
/// Q-matrix of the generator. Throws InvalidAction if the action does not
/// satisfy the generator's minimal polynomial or the dimension is not a
/// multiple of the degree.
std::vector<Eigenspace> eigenspace_decompose(std::size_t space_dim, const Matrix<Rational>& action,
                                             const TotallyRealField& field);

/// Projectors onto the eigenspaces, in embedding order, as E0-matrices.
std::vector<Matrix<E0Element>> eigen_projectors(const Matrix<Rational>& action,
                                                const TotallyRealField& field);

/// Q-matrix of multiplication by sqrt(m) on Res_{E0/Q} of an E0-space of the
/// given dimension, in the basis (f_1..f_k, sqrt(m) f_1..sqrt(m) f_k).
Matrix<Rational> sqrt_m_action(std::size_t e0_dim, long m);

}  // namespace weilhodge
