#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "generators.hpp"
#include "weilhodge/matrix.hpp"
#include "weilhodge/qfield.hpp"

using namespace weilhodge;

namespace {

// Leibniz expansion over all permutations.
template <typename T>
T leibniz(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest k with a nonzero k x k minor, by enumerating row/column subsets.
template <typename T>
std::size_t rank_by_minors(const Matrix<T>& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    for (unsigned rows = 0; rows < (1u << r); ++rows) {
      if (static_cast<std::size_t>(__builtin_popcount(rows)) != k) continue;
      for (unsigned cols = 0; cols < (1u << c); ++cols) {
        if (static_cast<std::size_t>(__builtin_popcount(cols)) != k) continue;
        Matrix<T> minor(k, k);
        std::size_t mi = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!(rows >> i & 1u)) continue;
          std::size_t mj = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cols >> j & 1u) minor(mi, mj++) = a(i, j);
          ++mi;
        }
        if (!leibniz(minor).is_zero()) return k;
      }
    }
  }
  return 0;
}

Matrix<Rational> random_rational(testgen::Gen& gen, std::size_t r, std::size_t c, long height, int zero_bias) {
  Matrix<Rational> out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (gen.integer(0, 9) >= zero_bias) out(i, j) = gen.rational(height);
  return out;
}

}  // namespace

TEST_CASE("determinant matches the Leibniz expansion over Q") {
  testgen::Gen gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const auto a = random_rational(gen, n, n, 6, trial % 7);
    CHECK(determinant(a) == leibniz(a));
  }
}

TEST_CASE("determinant matches the Leibniz expansion over E0 and E") {
  testgen::Gen gen(4);
  const E0Element e(Rational(3), Rational(1), 5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    Matrix<E0Element> a(n, n);
    Matrix<CMElement> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (gen.integer(0, 3) == 0) continue;
        a(i, j) = gen.e0(5, 5);
        b(i, j) = gen.cm(5, e, 4);
      }
    CHECK(determinant(a) == leibniz(a));
    CHECK(determinant(b) == leibniz(b));
  }
}

TEST_CASE("rank matches the largest nonvanishing minor") {
  testgen::Gen gen(8);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = static_cast<std::size_t>(gen.integer(1, 4));
    const auto c = static_cast<std::size_t>(gen.integer(1, 5));
    const auto k = static_cast<std::size_t>(gen.integer(1, 3));
    // Low-rank products exercise degenerate pivots.
    const auto a = random_rational(gen, r, k, 4, 3) * random_rational(gen, k, c, 4, 3);
    CHECK(rank(a) == rank_by_minors(a));
  }
}

TEST_CASE("nullspace has the complementary dimension and is annihilated") {
  testgen::Gen gen(9);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = static_cast<std::size_t>(gen.integer(1, 5));
    const auto c = static_cast<std::size_t>(gen.integer(1, 6));
    const auto k = static_cast<std::size_t>(gen.integer(1, 4));
    const auto a = random_rational(gen, r, k, 5, 2) * random_rational(gen, k, c, 5, 2);
    const auto ns = nullspace(a);
    CHECK(ns.rows() == c);
    CHECK(ns.cols() == c - rank(a));
    CHECK((a * ns).is_zero());
    CHECK(rank(ns) == ns.cols());
  }
}

TEST_CASE("inverse") {
  testgen::Gen gen(10);
  int inverted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const auto a = random_rational(gen, n, n, 7, 1);
    if (determinant(a).is_zero()) {
      CHECK_THROWS_AS(inverse(a), std::domain_error);
      continue;
    }
    ++inverted;
    CHECK(a * inverse(a) == Matrix<Rational>::identity(n));
    CHECK(inverse(a) * a == Matrix<Rational>::identity(n));
  }
  CHECK(inverted > 50);
}

TEST_CASE("small fixed examples") {
  Matrix<Rational> a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(0, 2) = 3;
  a(1, 0) = 2;
  a(1, 1) = 4;
  a(1, 2) = 6;
  CHECK(rank(a) == 1);
  const auto ns = nullspace(a);
  REQUIRE(ns.cols() == 2);
  // Free columns 1 and 2 with coordinate 1.
  CHECK(ns(0, 0) == Rational(-2));
  CHECK(ns(1, 0) == Rational(1));
  CHECK(ns(0, 1) == Rational(-3));
  CHECK(ns(2, 1) == Rational(1));
  CHECK(determinant(Matrix<Rational>(0, 0)) == Rational(1));
  CHECK_THROWS_AS(determinant(a), std::invalid_argument);
  CHECK(same_column_space(ns, ns * Rational(5)));
  CHECK_FALSE(same_column_space(ns, Matrix<Rational>::identity(3)));
}
