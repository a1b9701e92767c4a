#pragma once

#include <cstdint>
#include <vector>

#include "weilhodge/rational.hpp"

namespace weilhodge {

/// The Hermitian symmetric domain (A_{2n-1}, alpha_p).
struct DomainLabel {
  int n = 1;
  int p = 1;

  /// Throws std::invalid_argument unless n >= 1 and 1 <= p <= 2n - 1.
  void validate() const;
};

/// Weight in the L-basis of A_{2n-1}, modulo the all-ones vector; the stored
/// representative has minimum coordinate 0.
class WeightVector {
 public:
  explicit WeightVector(std::vector<int> coords);

  const std::vector<int>& coords() const { return coords_; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<int> coords_;
};

/// h^{a, w-a} for a = w down to 0.
struct HodgeVector {
  int weight = 0;
  int level = 0;
  std::vector<std::uint64_t> numbers;

  /// h^{a, weight - a}; zero outside [0, weight].
  std::uint64_t at(int a) const;
  std::uint64_t total() const;
  bool is_symmetric() const;
  /// h^{a,b} = 0 unless |a - b| <= level and a - b = level (mod 2).
  bool respects_support() const;

  friend bool operator==(const HodgeVector&, const HodgeVector&) = default;
};

/// Throws std::overflow_error when the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Coefficient of alpha_p in L_j (1 <= j <= 2n).
Rational alpha_coefficient(int j, const DomainLabel& label);

/// Coefficient of alpha_p in the fundamental weight varpi_k = L_1 + ... + L_k.
Rational fundamental_weight_coefficient(int k, const DomainLabel& label);

/// Level of the VHS attached to wedge^n of the standard representation:
/// 2 varpi_n(H_0).
int vhs_level(const DomainLabel& label);

struct WeightEntry {
  WeightVector weight;
  /// Indices j_1 < ... < j_n (1-based) with xi = L_{j_1} + ... + L_{j_n}.
  std::vector<int> indices;
  /// 2 xi(H_0) = 2s - p, s = #{j_k <= p}.
  int twice_pairing;
};

/// All C(2n, n) weights of wedge^n of the standard representation, in lex
/// order of the index subsets, each of multiplicity one.
std::vector<WeightEntry> enumerate_wedge_weights(const DomainLabel& label);

/// Weight-p Hodge numbers h^{s, p-s} = C(p, s) C(2n - p, n - s).
HodgeVector hodge_numbers(const DomainLabel& label);

}  // namespace weilhodge
