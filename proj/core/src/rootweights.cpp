#include "weilhodge/rootweights.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace weilhodge {

void DomainLabel::validate() const {
  if (n < 1 || p < 1 || p > 2 * n - 1) {
    throw std::invalid_argument("domain label (A_" + std::to_string(2 * n - 1) + ", alpha_" +
                                std::to_string(p) + ") needs n >= 1 and 1 <= p <= 2n - 1");
  }
}

WeightVector::WeightVector(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) return;
  const int low = *std::min_element(coords_.begin(), coords_.end());
  for (int& c : coords_) c -= low;
}

std::uint64_t HodgeVector::at(int a) const {
  if (a < 0 || a > weight) return 0;
  return numbers[static_cast<std::size_t>(weight - a)];
}

std::uint64_t HodgeVector::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t h : numbers) sum += h;
  return sum;
}

bool HodgeVector::is_symmetric() const {
  return std::equal(numbers.begin(), numbers.end(), numbers.rbegin());
}

bool HodgeVector::respects_support() const {
  for (int a = 0; a <= weight; ++a) {
    const int diff = a - (weight - a);
    const bool allowed = std::abs(diff) <= level && ((diff - level) % 2 == 0);
    if (!allowed && at(a) != 0) return false;
  }
  return true;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class acc;
  mpz_bin_uiui(acc.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!acc.fits_ulong_p()) {
    throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
  }
  return acc.get_ui();
}

Rational alpha_coefficient(int j, const DomainLabel& label) {
  label.validate();
  const int two_n = 2 * label.n;
  if (j < 1 || j > two_n) throw std::invalid_argument("L_j index out of range");
  if (j <= label.p) return Rational(two_n - label.p, two_n);
  return Rational(-label.p, two_n);
}

Rational fundamental_weight_coefficient(int k, const DomainLabel& label) {
  Rational sum(0);
  for (int j = 1; j <= k; ++j) sum += alpha_coefficient(j, label);
  return sum;
}

int vhs_level(const DomainLabel& label) {
  const Rational twice = Rational(2) * fundamental_weight_coefficient(label.n, label);
  if (!twice.is_integer()) throw std::logic_error("2 varpi_n(H_0) is not an integer");
  return static_cast<int>(twice.numerator().get_si());
}

std::vector<WeightEntry> enumerate_wedge_weights(const DomainLabel& label) {
  label.validate();
  const int two_n = 2 * label.n;
  std::vector<WeightEntry> out;
  out.reserve(binomial(two_n, label.n));
  std::vector<int> idx(static_cast<std::size_t>(label.n));
  for (int k = 0; k < label.n; ++k) idx[static_cast<std::size_t>(k)] = k + 1;
  while (true) {
    std::vector<int> coords(static_cast<std::size_t>(two_n), 0);
    int s = 0;
    for (int j : idx) {
      coords[static_cast<std::size_t>(j - 1)] = 1;
      if (j <= label.p) ++s;
    }
    out.push_back({WeightVector(coords), idx, 2 * s - label.p});
    // Next n-subset in lex order.
    int pos = label.n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == two_n - label.n + pos + 1) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k < label.n; ++k) {
      idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  return out;
}

HodgeVector hodge_numbers(const DomainLabel& label) {
  label.validate();
  HodgeVector out;
  out.weight = label.p;
  out.level = vhs_level(label);
  for (int s = label.p; s >= 0; --s) {
    out.numbers.push_back(binomial(label.p, s) * binomial(2 * label.n - label.p, label.n - s));
  }
  return out;
}

}  // namespace weilhodge
