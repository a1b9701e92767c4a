#include "weilhodge/wedge.hpp"

namespace weilhodge {

std::vector<std::vector<int>> lex_subsets(int D, int l) {
  std::vector<std::vector<int>> out;
  if (l < 0 || l > D) return out;
  std::vector<int> idx(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) idx[static_cast<std::size_t>(k)] = k;
  while (true) {
    out.push_back(idx);
    int pos = l - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == D - l + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k < l; ++k) idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
  }
  return out;
}

int sort_with_sign(std::vector<int>& indices) {
  int sign = +1;
  // Insertion sort; each adjacent swap flips the sign.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return sign;
}

WedgeSpace::WedgeSpace(std::size_t base_dim, std::size_t degree, TowerField field)
    : base_dim_(base_dim), degree_(degree), field_(field),
      subsets_(lex_subsets(static_cast<int>(base_dim), static_cast<int>(degree))) {}

std::size_t WedgeSpace::index_of(const std::vector<int>& subset) const {
  const auto it = std::lower_bound(subsets_.begin(), subsets_.end(), subset);
  if (it == subsets_.end() || *it != subset) throw std::out_of_range("subset is not a basis element");
  return static_cast<std::size_t>(it - subsets_.begin());
}

Matrix<E0Element> restrict_e_to_e0(const Matrix<CMElement>& a, const E0Element& e) {
  const Matrix<E0Element> re = a.map([](const CMElement& z) { return z.x(); });
  const Matrix<E0Element> im = a.map([](const CMElement& z) { return z.y(); });
  return block2x2(re, im * (-e), im, re);
}

Matrix<Rational> restrict_e0_to_q(const Matrix<E0Element>& a, long m) {
  const Matrix<Rational> re = a.map([](const E0Element& x) { return x.a(); });
  const Matrix<Rational> im = a.map([m](const E0Element& x) {
    if (!x.is_rational() && x.m() != m) throw std::invalid_argument("restrict_e0_to_q: entry outside E0");
    return x.b();
  });
  return block2x2(re, im * Rational(m), im, re);
}

Matrix<Rational> to_rational(const Matrix<E0Element>& a) {
  return a.map([](const E0Element& x) {
    if (!x.is_rational()) throw std::invalid_argument("to_rational: irrational entry");
    return x.a();
  });
}

bool double_restriction_is_identity(const CMField& tower) {
  const long m = tower.base().m();
  const E0Element& e = tower.e();
  const CMElement phi = CMElement::sqrt_minus_e(tower);

  // Q-basis of E: (1, phi) for d = 1, (1, phi, sqrt m, sqrt m phi) for d = 2.
  std::vector<CMElement> basis{CMElement(1), phi};
  if (m != 0) {
    const CMElement root(E0Element::sqrt_m(m));
    basis.push_back(root);
    basis.push_back(root * phi);
  }
  auto coordinates = [&](const CMElement& w) {
    std::vector<Rational> c{w.x().a(), w.y().a()};
    if (m != 0) {
      c.push_back(w.x().b());
      c.push_back(w.y().b());
    }
    return c;
  };

  for (const CMElement& z : basis) {
    Matrix<Rational> direct(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto c = coordinates(z * basis[k]);
      for (std::size_t r = 0; r < c.size(); ++r) direct(r, k) = c[r];
    }
    Matrix<CMElement> one_by_one(1, 1);
    one_by_one(0, 0) = z;
    const Matrix<E0Element> over_e0 = restrict_e_to_e0(one_by_one, e);
    const Matrix<Rational> twice = m != 0 ? restrict_e0_to_q(over_e0, m) : to_rational(over_e0);
    if (!(twice == direct)) return false;
  }
  return true;
}

LieCheck lie_equivariance_check(std::size_t base_dim, std::size_t degree, const DiagonalHermitianForm& form,
                                int samples, std::uint64_t seed) {
  if (form.dimension() != base_dim) {
    throw std::invalid_argument("lie_equivariance_check: D = " + std::to_string(base_dim) +
                                " but the form has dimension " + std::to_string(form.dimension()));
  }
  const E0Element& e = form.tower.e();
  const ScalarAction<E0Element> scalar(base_dim, -e);
  const Matrix<E0Element> phi = phi_operator(base_dim, degree, scalar);
  const Matrix<E0Element> op = kernel_operator(base_dim, degree, scalar);
  const Matrix<E0Element> kernel = nullspace(op);

  LieCheck out;
  out.seed = seed;
  out.commutes_with_phi = true;
  out.preserves_kernel = true;
  SuSampler sampler(form, seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix<CMElement> x = sampler.next();
    const Matrix<E0Element> rho = induced_derivation(restrict_e_to_e0(x, e), degree);
    const bool commutes = rho * phi == phi * rho;
    const bool preserves = (op * (rho * kernel)).is_zero();
    out.commutes_with_phi = out.commutes_with_phi && commutes;
    out.preserves_kernel = out.preserves_kernel && preserves;
    if (!commutes || !preserves) ++out.failures;
    ++out.samples;
  }
  out.passed = out.failures == 0;
  return out;
}

ChainCheck subrepresentation_chain_check(int n, const CMField& tower) {
  const auto D = static_cast<std::size_t>(2 * n);
  const auto l = static_cast<std::size_t>(n);
  Matrix<Rational> composite;
  if (tower.degree() == 1) {
    // E0 = Q: the second restriction step is the identity.
    if (!tower.e().is_rational()) throw std::invalid_argument("CM parameter must be rational over Q");
    composite = restriction_injection(D, l, ScalarAction<Rational>(D, -tower.e().a()));
  } else {
    const long m = tower.base().m();
    const Matrix<E0Element> first = restriction_injection(D, l, ScalarAction<E0Element>(D, -tower.e()));
    const Matrix<Rational> second = restriction_injection(2 * D, l, ScalarAction<Rational>(2 * D, Rational(m)));
    composite = second * restrict_e0_to_q(first, m);
  }
  ChainCheck out;
  out.rows = composite.rows();
  out.cols = composite.cols();
  out.rank = rank(composite);
  out.injective = out.rank == out.cols;
  return out;
}

}  // namespace weilhodge
