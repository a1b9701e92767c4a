#include "weilhodge/starform.hpp"

#include <algorithm>

#include "weilhodge/errors.hpp"

namespace weilhodge {

namespace {

Matrix<E0Element> real_part(const Matrix<CMElement>& a) {
  return a.map([](const CMElement& z) { return z.x(); });
}

Matrix<E0Element> imaginary_part(const Matrix<CMElement>& a) {
  return a.map([](const CMElement& z) { return z.y(); });
}

}  // namespace

Matrix<E0Element> doubled_linear(const Matrix<CMElement>& a, const E0Element& e) {
  return restrict_e_to_e0(a, e);
}

Matrix<E0Element> doubled_conjugate_linear(const Matrix<CMElement>& a, const E0Element& e) {
  // (A + phi B)(x - phi y) = (A x + e B y) + phi (B x - A y)
  const Matrix<E0Element> re = real_part(a);
  const Matrix<E0Element> im = imaginary_part(a);
  return block2x2(re, im * e, im, re * E0Element(-1));
}

Matrix<E0Element> doubled_sqrt_minus_e(std::size_t n, const E0Element& e) {
  Matrix<CMElement> phi(n, n);
  for (std::size_t i = 0; i < n; ++i) phi(i, i) = CMElement(0, 1, e);
  return doubled_linear(phi, e);
}

int koszul_sign(const std::vector<int>& subset, int D) {
  std::vector<int> order = subset;
  for (int k = 0; k < D; ++k) {
    if (std::find(subset.begin(), subset.end(), k) == subset.end()) order.push_back(k);
  }
  return sort_with_sign(order);
}

std::pair<PairingMatrix, PairingMatrix> build_pairings(int n, const DiagonalHermitianForm& form) {
  const int D = 2 * n;
  if (form.dimension() != static_cast<std::size_t>(D)) {
    throw std::invalid_argument("build_pairings: form must have 2n entries");
  }
  const WedgeSpace space(static_cast<std::size_t>(D), static_cast<std::size_t>(n), TowerField::CM);
  const std::size_t N = space.dimension();
  PairingMatrix top{PairingKind::WedgeTop, Matrix<CMElement>(N, N)};
  PairingMatrix power{PairingKind::WedgePowerH, Matrix<CMElement>(N, N)};
  for (std::size_t a = 0; a < N; ++a) {
    const auto& subset = space.subset(a);
    std::vector<int> complement;
    for (int k = 0; k < D; ++k)
      if (std::find(subset.begin(), subset.end(), k) == subset.end()) complement.push_back(k);
    top.gram(a, space.index_of(complement)) = CMElement(koszul_sign(subset, D));
    // det(h(e_i, e_j))_{i in I, j in J} is zero for I != J when h is diagonal.
    E0Element product(1);
    for (int i : subset) product *= form.entries[static_cast<std::size_t>(i)];
    power.gram(a, a) = CMElement(product);
  }
  return {std::move(top), std::move(power)};
}

Matrix<E0Element> tau1_doubled(const PairingMatrix& wedge_top, const E0Element& e) {
  return doubled_linear(wedge_top.gram, e);
}

Matrix<E0Element> tau2_doubled(const PairingMatrix& wedge_power_h, const E0Element& e) {
  return doubled_conjugate_linear(wedge_power_h.gram, e);
}

StarOperator build_star(int n, const DiagonalHermitianForm& form) {
  const auto [top, power] = build_pairings(n, form);
  StarOperator star;
  star.n = n;
  star.dim = top.gram.rows();
  // tau_1 has matrix G_top, tau_2 = G_h o conj, hence star = G_top^{-1} G_h o conj.
  star.semilinear_part = inverse(top.gram) * power.gram;
  star.doubled = doubled_conjugate_linear(star.semilinear_part, form.tower.e());
  return star;
}

StarSquareCheck verify_star_square(const StarOperator& star, int n, const DiagonalHermitianForm& form) {
  StarSquareCheck out;
  out.expected = discriminant(form);
  if (n % 2 != 0) out.expected = -out.expected;
  out.holds = star.doubled * star.doubled == Matrix<E0Element>::scalar(2 * star.dim, out.expected);
  return out;
}

bool star_is_conjugate_linear(const StarOperator& star, const E0Element& e) {
  const Matrix<E0Element> i = doubled_sqrt_minus_e(star.dim, e);
  return star.doubled * i == (i * star.doubled) * E0Element(-1);
}

RealForm construct_real_form(const StarOperator& star, int n, const DiagonalHermitianForm& form) {
  const RationalityVerdict verdict = rationality_criterion(form, n);
  if (!verdict.holds) {
    throw CriterionFailed("(-1)^n disc(h) is not a square in " + form.tower.base().name());
  }
  RealForm out;
  out.witness = *verdict.witness;
  out.expected_dimension = star.dim;
  // sigma = c^{-1} star; sigma^2 = Id since c is real and star^2 = c^2.
  const Matrix<E0Element> sigma = star.doubled * out.witness.inverse();
  out.basis = nullspace(sigma - Matrix<E0Element>::identity(sigma.rows()));
  out.dimension = out.basis.cols();
  const Matrix<E0Element> i = doubled_sqrt_minus_e(star.dim, form.tower.e());
  const Matrix<E0Element> both = hcat(out.basis, i * out.basis);
  out.spans = both.rows() == both.cols() && !determinant(both).is_zero();
  return out;
}

QuaternionReport quaternion_split_report(int n, const DiagonalHermitianForm& form) {
  const E0Element& e = form.tower.e();
  const StarOperator star = build_star(n, form);
  QuaternionReport out;
  out.i_square = -e;
  const Matrix<E0Element> i = doubled_sqrt_minus_e(star.dim, e);
  const Matrix<E0Element>& j = star.doubled;
  const Matrix<E0Element> jj = j * j;
  out.j_square = jj(0, 0);
  out.j_square_is_scalar = jj == Matrix<E0Element>::scalar(jj.rows(), out.j_square);
  out.anticommute = i * j == (j * i) * E0Element(-1);
  const Matrix<E0Element> k = i * j;
  out.k_square_ok = k * k == Matrix<E0Element>::scalar(k.rows(), -(out.i_square * out.j_square));
  out.witness = is_square_in_E0(out.j_square, form.tower.base());
  out.split = out.witness.has_value() && out.j_square_is_scalar;
  return out;
}

StarEquivarianceCheck star_equivariance_check(const StarOperator& star, const DiagonalHermitianForm& form,
                                              const std::optional<RealForm>& real_form, int samples,
                                              std::uint64_t seed) {
  const E0Element& e = form.tower.e();
  StarEquivarianceCheck out;
  out.seed = seed;
  out.star_commutes = true;
  out.real_form_invariant = true;
  std::optional<Matrix<E0Element>> fixed_op;
  if (real_form) {
    fixed_op = star.doubled * real_form->witness.inverse() - Matrix<E0Element>::identity(2 * star.dim);
  }
  SuSampler sampler(form, seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix<CMElement> x = sampler.next();
    const Matrix<E0Element> rho =
        doubled_linear(induced_derivation(x, static_cast<std::size_t>(star.n)), e);
    const bool commutes = rho * star.doubled == star.doubled * rho;
    bool invariant = true;
    if (fixed_op) invariant = (*fixed_op * (rho * real_form->basis)).is_zero();
    out.star_commutes = out.star_commutes && commutes;
    out.real_form_invariant = out.real_form_invariant && invariant;
    if (!commutes || !invariant) ++out.failures;
    ++out.samples;
  }
  out.passed = out.failures == 0;
  return out;
}

}  // namespace weilhodge
