#include <doctest.h>

#include <vector>

#include "generators.hpp"
#include "weilhodge/errors.hpp"
#include "weilhodge/hermform.hpp"

using namespace weilhodge;

namespace {

const Embedding sigma1{1, +1};
const Embedding sigma2{2, -1};

CMField tower_q(long e) { return CMField(TotallyRealField::rationals(), E0Element(e)); }
CMField tower_quad(long m, long e) { return CMField(TotallyRealField::real_quadratic(m), E0Element(e)); }

// Signature counted from floating-point evaluation of each entry.
SignaturePair float_signature(const DiagonalHermitianForm& form, const Embedding& emb) {
  SignaturePair out{0, 0};
  for (const E0Element& x : form.entries) (x.approx(emb) > 0 ? out.first : out.second) += 1;
  return out;
}

// All lists satisfying the generalized Weil conditions, n <= 4, d <= 2.
std::vector<std::pair<int, std::vector<SignaturePair>>> weil_lists() {
  std::vector<std::pair<int, std::vector<SignaturePair>>> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back({n, {{n, n}}});
    for (int p = 1; p < n; ++p)
      if ((n - p) % 2 == 0) out.push_back({n, {{n, n}, {p, 2 * n - p}}});
  }
  return out;
}

// For any list (sorted or not), (-1)^n disc(h) works out to
// (-1)^(n + q_1) * m^k * sqrt(m)^(q_2 - q_1), a square exactly when every p_i = n mod 2.
bool parity_oracle(int n, const std::vector<SignaturePair>& pairs) {
  for (const auto& [p, q] : pairs)
    if ((p - n) % 2 != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("weil_violations") {
  CHECK(weil_violations(2, {{2, 2}}).empty());
  CHECK(weil_violations(3, {{3, 3}, {1, 5}}).empty());
  CHECK_FALSE(weil_violations(3, {{3, 3}, {2, 4}}).empty());
  CHECK(weil_violations(3, {{3, 3}, {2, 4}}).front().find("parity") != std::string::npos);
  CHECK(weil_violations(2, {{1, 3}}).front().find("first pair") != std::string::npos);
  CHECK(weil_violations(3, {{3, 3}, {3, 3}}).front().find("0 < p < q") != std::string::npos);
  CHECK_FALSE(weil_violations(3, {{3, 3}, {0, 6}}).empty());
}

TEST_CASE("SignatureSpec validation and ordering") {
  CHECK_THROWS_AS(SignatureSpec(3, {{3, 3}, {2, 4}}), InvalidSignature);
  CHECK_THROWS_AS(SignatureSpec(3, {{3, 3}, {2, 3}}, false), InvalidSignature);
  CHECK_THROWS_AS(SignatureSpec(3, {}, false), InvalidSignature);
  CHECK_THROWS_AS(SignatureSpec(0, {{0, 0}}, false), InvalidSignature);

  const SignatureSpec spec(3, {{1, 5}, {3, 3}}, false);
  CHECK_FALSE(spec.weil());
  CHECK(spec.pairs() == std::vector<SignaturePair>{{3, 3}, {1, 5}});
  CHECK(spec.permutation() == std::vector<std::size_t>{1, 0});
  CHECK(spec.input_pairs() == std::vector<SignaturePair>{{1, 5}, {3, 3}});
}

TEST_CASE("choose_deltas has the prescribed signs") {
  CHECK(choose_deltas(tower_q(1)) == std::vector<E0Element>{E0Element(1)});
  for (long m : {2L, 3L, 5L}) {
    const auto deltas = choose_deltas(tower_quad(m, 1));
    REQUIRE(deltas.size() == 2);
    CHECK(sign_at_embedding(deltas[0], sigma1) > 0);
    CHECK(sign_at_embedding(deltas[0], sigma2) < 0);
    CHECK(sign_at_embedding(deltas[1], sigma2) > 0);
    CHECK(sign_at_embedding(deltas[1], sigma1) < 0);
  }
}

TEST_CASE("build_form examples") {
  const auto f = build_form(SignatureSpec(2, {{2, 2}}), tower_q(1));
  CHECK(f.entries == std::vector<E0Element>{-1, -1, 1, 1});
  CHECK(discriminant(f) == E0Element(1));

  const auto g = build_form(SignatureSpec(3, {{3, 3}, {1, 5}}), tower_quad(2, 1));
  const E0Element r = E0Element::sqrt_m(2);
  CHECK(g.entries == std::vector<E0Element>{-1, -1, -1, r, r, 1});
  CHECK(signature_at(g, sigma1) == SignaturePair{3, 3});
  CHECK(signature_at(g, sigma2) == SignaturePair{1, 5});
  CHECK(discriminant(g) == E0Element(-2));

  CHECK_THROWS_AS(build_form(SignatureSpec(2, {{2, 2}}), tower_quad(2, 1)), InvalidSignature);
  CHECK_THROWS_AS(build_form(SignatureSpec(3, {{3, 3}, {1, 5}}), tower_q(1)), InvalidSignature);
}

TEST_CASE("signature_at rejects zero entries") {
  DiagonalHermitianForm f{{E0Element(1), E0Element(0)}, tower_q(1)};
  CHECK_THROWS_AS(signature_at(f, sigma1), ZeroDiagonalEntry);
}

TEST_CASE("signature prescription holds for every generalized-Weil list") {
  int checked = 0;
  for (const auto& [n, pairs] : weil_lists()) {
    const SignatureSpec spec(n, pairs);
    if (spec.degree() == 1) {
      for (long e : {1L, 3L}) {
        const auto form = build_form(spec, tower_q(e));
        CHECK(form.dimension() == static_cast<std::size_t>(2 * n));
        CHECK(float_signature(form, sigma1) == pairs[0]);
        ++checked;
      }
      continue;
    }
    for (long m : {2L, 3L, 5L}) {
      const auto form = build_form(spec, tower_quad(m, 1));
      CHECK(form.dimension() == static_cast<std::size_t>(2 * n));
      CHECK(float_signature(form, sigma1) == pairs[0]);
      CHECK(float_signature(form, sigma2) == pairs[1]);
      ++checked;
    }
  }
  CHECK(checked == 14);
}

TEST_CASE("override lists still realize their signatures") {
  for (int n = 1; n <= 4; ++n)
    for (int p1 = 0; p1 <= 2 * n; ++p1)
      for (int p2 = 0; p2 <= 2 * n; ++p2) {
        const SignatureSpec spec(n, {{p1, 2 * n - p1}, {p2, 2 * n - p2}}, false);
        const auto form = build_form(spec, tower_quad(3, 1));
        CHECK(float_signature(form, sigma1) == spec.pairs()[0]);
        CHECK(float_signature(form, sigma2) == spec.pairs()[1]);
      }
}

TEST_CASE("rationality criterion examples") {
  const auto f = build_form(SignatureSpec(2, {{2, 2}}), tower_q(1));
  const auto v = rationality_criterion(f, 2);
  CHECK(v.holds);
  CHECK(v.value == E0Element(1));
  CHECK(v.witness == E0Element(1));

  const auto g = build_form(SignatureSpec(3, {{3, 3}, {1, 5}}), tower_quad(2, 1));
  const auto w = rationality_criterion(g, 3);
  CHECK(w.holds);
  CHECK(w.value == E0Element(2));
  CHECK(w.witness == E0Element::sqrt_m(2));

  // Definite-like form diag(1, 1) over Q(i): (-1)^1 * 1 is not a square.
  const DiagonalHermitianForm h{{E0Element(1), E0Element(1)}, tower_q(1)};
  CHECK_FALSE(rationality_criterion(h, 1).holds);
  CHECK(rationality_criterion(h, 1).value == E0Element(-1));
}

TEST_CASE("rationality criterion agrees with the parity oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (int p1 = 0; p1 <= 2 * n; ++p1) {
      const std::vector<SignaturePair> single{{p1, 2 * n - p1}};
      for (long e : {1L, 3L}) {
        const auto form = build_form(SignatureSpec(n, single, false), tower_q(e));
        CHECK(rationality_criterion(form, n).holds == parity_oracle(n, single));
      }
      for (int p2 = 0; p2 <= 2 * n; ++p2) {
        const std::vector<SignaturePair> pairs{{p1, 2 * n - p1}, {p2, 2 * n - p2}};
        for (long m : {2L, 3L, 5L}) {
          const auto form = build_form(SignatureSpec(n, pairs, false), tower_quad(m, 1));
          const auto verdict = rationality_criterion(form, n);
          CHECK(verdict.holds == parity_oracle(n, pairs));
          if (verdict.holds) CHECK(*verdict.witness * *verdict.witness == verdict.value);
        }
      }
    }
  }
}

TEST_CASE("every generalized-Weil list satisfies the rationality criterion") {
  for (const auto& [n, pairs] : weil_lists()) {
    const SignatureSpec spec(n, pairs);
    const CMField tower = spec.degree() == 1 ? tower_q(3) : tower_quad(5, 1);
    CHECK(rationality_criterion(build_form(spec, tower), n).holds);
  }
}

TEST_CASE("rescaling an entry by a norm preserves signature and discriminant class") {
  testgen::Gen gen(12);
  const SignatureSpec spec(3, {{3, 3}, {1, 5}});
  const CMField tower = tower_quad(5, 1);
  const auto form = build_form(spec, tower);
  for (int k = 0; k < 100; ++k) {
    CMElement z = gen.cm(5, tower.e(), 6);
    if (z.is_zero()) continue;
    const auto index = static_cast<std::size_t>(gen.integer(0, 5));
    const auto scaled = rescale_entry_by_norm(form, index, z);
    CHECK(signature_at(scaled, sigma1) == signature_at(form, sigma1));
    CHECK(signature_at(scaled, sigma2) == signature_at(form, sigma2));
    // The ratio of representatives is x^2 + e y^2 with x, y recomputed here.
    const E0Element ratio = discriminant(scaled) / discriminant(form);
    CHECK(ratio == z.x() * z.x() + tower.e() * z.y() * z.y());
  }
}

TEST_CASE("su(U, h) sampler output lies in the algebra") {
  const auto form = build_form(SignatureSpec(3, {{3, 3}, {1, 5}}), tower_quad(2, 3));
  SuSampler sampler(form, 42);
  Matrix<CMElement> h(6, 6);
  for (std::size_t i = 0; i < 6; ++i) h(i, i) = CMElement(form.entries[i]);
  for (int k = 0; k < 20; ++k) {
    const auto x = sampler.next();
    CHECK_FALSE(x.is_zero());
    CHECK(in_special_unitary_algebra(x, form));
    // Independent recomputation of xbar^T H + H x and the trace.
    const auto xbar_t = x.transpose().map([](const CMElement& z) { return z.conjugate(); });
    CHECK((xbar_t * h + h * x).is_zero());
    CMElement tr(0);
    for (std::size_t i = 0; i < 6; ++i) tr += x(i, i);
    CHECK(tr.is_zero());
  }
  SuSampler again(form, 42);
  SuSampler fresh(form, 42);
  CHECK(again.next() == fresh.next());

  Matrix<CMElement> bad = Matrix<CMElement>::identity(6);
  CHECK_FALSE(in_special_unitary_algebra(bad, form));
}

TEST_CASE("su sampler on a rank-one space is always zero") {
  const DiagonalHermitianForm form{{E0Element(1)}, tower_q(1)};
  SuSampler sampler(form, 1);
  CHECK_THROWS_AS(sampler.next(), DegenerateSample);
}
