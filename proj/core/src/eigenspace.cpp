#include "weilhodge/eigenspace.hpp"

#include <string>

#include "weilhodge/errors.hpp"

namespace weilhodge {

namespace {

Matrix<E0Element> lift(const Matrix<Rational>& a) {
  return a.map([](const Rational& x) { return E0Element(x); });
}

void check_action(std::size_t space_dim, const Matrix<Rational>& action, const TotallyRealField& field) {
  if (action.rows() != space_dim || action.cols() != space_dim) {
    throw InvalidAction("action matrix is " + std::to_string(action.rows()) + "x" +
                        std::to_string(action.cols()) + ", expected " + std::to_string(space_dim) +
                        "x" + std::to_string(space_dim));
  }
  if (space_dim % static_cast<std::size_t>(field.degree()) != 0) {
    throw InvalidAction("space dimension is not divisible by [E0:Q]");
  }
  const auto id = Matrix<Rational>::identity(space_dim);
  if (field.degree() == 1) {
    if (!(action == id)) throw InvalidAction("generator of Q must act as the identity");
    return;
  }
  if (!(action * action == Matrix<Rational>::scalar(space_dim, Rational(field.m())))) {
    throw InvalidAction("action does not satisfy x^2 = " + std::to_string(field.m()));
  }
}

}  // namespace

std::vector<Eigenspace> eigenspace_decompose(std::size_t space_dim, const Matrix<Rational>& action,
                                             const TotallyRealField& field) {
  check_action(space_dim, action, field);
  std::vector<Eigenspace> out;
  if (field.degree() == 1) {
    out.push_back({field.embeddings().front(), Matrix<E0Element>::identity(space_dim)});
    return out;
  }
  const Matrix<E0Element> a = lift(action);
  for (const Embedding& emb : field.embeddings()) {
    const E0Element eigenvalue(0, emb.sqrtm_sign, field.m());
    out.push_back({emb, nullspace(a - Matrix<E0Element>::scalar(space_dim, eigenvalue))});
  }
  return out;
}

std::vector<Matrix<E0Element>> eigen_projectors(const Matrix<Rational>& action,
                                                const TotallyRealField& field) {
  check_action(action.rows(), action, field);
  const std::size_t n = action.rows();
  if (field.degree() == 1) return {Matrix<E0Element>::identity(n)};
  // P_i = (Id + sigma_i(sqrt m)^{-1} A) / 2, with sqrt(m)^{-1} = sqrt(m)/m.
  const Matrix<E0Element> a = lift(action);
  std::vector<Matrix<E0Element>> out;
  for (const Embedding& emb : field.embeddings()) {
    const E0Element inv_root(0, Rational(emb.sqrtm_sign, field.m()), field.m());
    out.push_back((Matrix<E0Element>::identity(n) + a * inv_root) * E0Element(Rational(1, 2)));
  }
  return out;
}

Matrix<Rational> sqrt_m_action(std::size_t e0_dim, long m) {
  Matrix<Rational> out(2 * e0_dim, 2 * e0_dim);
  for (std::size_t k = 0; k < e0_dim; ++k) {
    out(e0_dim + k, k) = Rational(1);  // f_k -> sqrt(m) f_k
    out(k, e0_dim + k) = Rational(m);  // sqrt(m) f_k -> m f_k
  }
  return out;
}

}  // namespace weilhodge
