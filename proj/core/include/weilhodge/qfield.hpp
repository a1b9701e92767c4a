#pragma once

#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weilhodge/rational.hpp"

namespace weilhodge {

/// A real embedding of E0. Index 1 is the fixed labeling sending sqrt(m) to
/// the positive real root.
struct Embedding {
  int index = 1;
  int sqrtm_sign = +1;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// The totally real base E0: either Q or Q(sqrt(m)) with m square-free, m >= 2.
class TotallyRealField {
 public:
  enum class Kind { RationalField, RealQuadratic };

  static TotallyRealField rationals() { return TotallyRealField(); }
  /// Throws std::invalid_argument unless m is square-free and m >= 2.
  static TotallyRealField real_quadratic(long m);

  Kind kind() const { return kind_; }
  /// 0 for Q.
  long m() const { return m_; }
  int degree() const { return kind_ == Kind::RationalField ? 1 : 2; }
  std::vector<Embedding> embeddings() const;
  std::string name() const;

  friend bool operator==(const TotallyRealField&, const TotallyRealField&) = default;

 private:
  TotallyRealField() = default;

  Kind kind_ = Kind::RationalField;
  long m_ = 0;
};

bool is_square_free(long m);

/// Element a + b*sqrt(m) of E0. Rational elements (b = 0) carry m = 0 and mix
/// freely with elements of any real quadratic field; mixing two different
/// nonzero m throws std::invalid_argument.
class E0Element {
 public:
  E0Element() = default;
  template <std::integral I>
  E0Element(I value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  E0Element(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  E0Element(Rational a, Rational b, long m);

  static E0Element sqrt_m(long m) { return E0Element(0, 1, m); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long m() const { return m_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  bool belongs_to(const TotallyRealField& field) const;

  /// Galois conjugate a - b*sqrt(m).
  E0Element galois_conjugate() const;
  /// Norm to Q: a^2 - m b^2.
  Rational norm_to_q() const;
  E0Element inverse() const;
  double approx(const Embedding& emb = {}) const;

  E0Element& operator+=(const E0Element& other);
  E0Element& operator-=(const E0Element& other);
  E0Element& operator*=(const E0Element& other);
  E0Element& operator/=(const E0Element& other);

  friend E0Element operator+(E0Element lhs, const E0Element& rhs) { return lhs += rhs; }
  friend E0Element operator-(E0Element lhs, const E0Element& rhs) { return lhs -= rhs; }
  friend E0Element operator*(E0Element lhs, const E0Element& rhs) { return lhs *= rhs; }
  friend E0Element operator/(E0Element lhs, const E0Element& rhs) { return lhs /= rhs; }
  E0Element operator-() const;

  friend bool operator==(const E0Element&, const E0Element&) = default;

 private:
  void normalize();

  Rational a_;
  Rational b_;
  long m_ = 0;
};

std::ostream& operator<<(std::ostream& os, const E0Element& x);

/// Exact sign of sigma(x) for a real embedding sigma.
int sign_at_embedding(const E0Element& x, const Embedding& emb);

/// Square root c with sigma_1(c) >= 0 when x is a square in the given field.
std::optional<E0Element> is_square_in_E0(const E0Element& x, const TotallyRealField& field);

/// The CM field E = E0(sqrt(-e)) with e totally positive.
class CMField {
 public:
  /// Throws std::invalid_argument if e is not a totally positive element of base.
  CMField(TotallyRealField base, E0Element e);

  const TotallyRealField& base() const { return base_; }
  const E0Element& e() const { return e_; }
  int degree() const { return base_.degree(); }
  std::string name() const;

  friend bool operator==(const CMField&, const CMField&) = default;

 private:
  TotallyRealField base_;
  E0Element e_;
};

/// Element x + y*sqrt(-e) of E, coordinates in E0. Elements with y = 0 carry
/// no e and mix with any CM field, as E0Element does for m.
class CMElement {
 public:
  CMElement() = default;
  template <std::integral I>
  CMElement(I value) : x_(value) {}  // NOLINT(google-explicit-constructor)
  CMElement(E0Element x) : x_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  CMElement(E0Element x, E0Element y, E0Element e);
  CMElement(E0Element x, E0Element y, const CMField& field) : CMElement(std::move(x), std::move(y), field.e()) {}

  static CMElement sqrt_minus_e(const CMField& field) { return CMElement(0, 1, field.e()); }

  const E0Element& x() const { return x_; }
  const E0Element& y() const { return y_; }
  const E0Element& e() const { return e_; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_in_base() const { return y_.is_zero(); }

  CMElement conjugate() const;
  CMElement inverse() const;

  CMElement& operator+=(const CMElement& other);
  CMElement& operator-=(const CMElement& other);
  CMElement& operator*=(const CMElement& other);
  CMElement& operator/=(const CMElement& other);

  friend CMElement operator+(CMElement lhs, const CMElement& rhs) { return lhs += rhs; }
  friend CMElement operator-(CMElement lhs, const CMElement& rhs) { return lhs -= rhs; }
  friend CMElement operator*(CMElement lhs, const CMElement& rhs) { return lhs *= rhs; }
  friend CMElement operator/(CMElement lhs, const CMElement& rhs) { return lhs /= rhs; }
  CMElement operator-() const;

  friend bool operator==(const CMElement&, const CMElement&) = default;

 private:
  void normalize();

  E0Element x_;
  E0Element y_;
  E0Element e_;
};

std::ostream& operator<<(std::ostream& os, const CMElement& z);

/// Nm_{E/E0}(z) = x^2 + e y^2.
E0Element norm_E_over_E0(const CMElement& z);

/// z + conj(z) = 2x.
E0Element trace_to_subfield(const CMElement& z);

}  // namespace weilhodge
