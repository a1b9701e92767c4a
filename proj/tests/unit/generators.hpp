#pragma once

// Seeded generators for property tests. Modular reduction keeps sequences
// identical across standard libraries.

#include <cstdint>
#include <random>

#include "weilhodge/qfield.hpp"

namespace testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  weilhodge::Rational rational(long height) {
    return weilhodge::Rational(integer(-height, height), integer(1, height));
  }

  weilhodge::E0Element e0(long m, long height) {
    if (m == 0) return weilhodge::E0Element(rational(height));
    return weilhodge::E0Element(rational(height), rational(height), m);
  }

  weilhodge::CMElement cm(long m, const weilhodge::E0Element& e, long height) {
    return weilhodge::CMElement(e0(m, height), e0(m, height), e);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testgen
