#include "weilhodge/qfield.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace weilhodge {

namespace {

long common_m(long lhs, long rhs) {
  if (lhs == 0) return rhs;
  if (rhs == 0 || lhs == rhs) return lhs;
  throw std::invalid_argument("arithmetic between elements of Q(sqrt(" + std::to_string(lhs) +
                              ")) and Q(sqrt(" + std::to_string(rhs) + "))");
}

E0Element common_e(const E0Element& lhs, const E0Element& rhs) {
  if (lhs.is_zero()) return rhs;
  if (rhs.is_zero() || lhs == rhs) return lhs;
  throw std::invalid_argument("arithmetic between elements of different CM fields");
}

}  // namespace

bool is_square_free(long m) {
  if (m < 2) return false;
  for (long k = 2; k * k <= m; ++k) {
    if (m % (k * k) == 0) return false;
  }
  return true;
}

TotallyRealField TotallyRealField::real_quadratic(long m) {
  if (!is_square_free(m)) {
    throw std::invalid_argument("m = " + std::to_string(m) + " is not a square-free integer >= 2");
  }
  TotallyRealField field;
  field.kind_ = Kind::RealQuadratic;
  field.m_ = m;
  return field;
}

std::vector<Embedding> TotallyRealField::embeddings() const {
  if (kind_ == Kind::RationalField) return {Embedding{1, +1}};
  return {Embedding{1, +1}, Embedding{2, -1}};
}

std::string TotallyRealField::name() const {
  if (kind_ == Kind::RationalField) return "Q";
  return "Q(sqrt(" + std::to_string(m_) + "))";
}

E0Element::E0Element(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (!b_.is_zero() && !is_square_free(m_)) {
    throw std::invalid_argument("E0Element: m = " + std::to_string(m) + " is not square-free >= 2");
  }
  normalize();
}

void E0Element::normalize() {
  if (b_.is_zero()) m_ = 0;
}

bool E0Element::belongs_to(const TotallyRealField& field) const {
  return m_ == 0 || m_ == field.m();
}

E0Element E0Element::galois_conjugate() const {
  E0Element out = *this;
  out.b_ = -b_;
  return out;
}

Rational E0Element::norm_to_q() const { return a_ * a_ - Rational(m_) * b_ * b_; }

E0Element E0Element::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in E0");
  const Rational n = norm_to_q();
  return E0Element(a_ / n, -b_ / n, m_);
}

double E0Element::approx(const Embedding& emb) const {
  return a_.approx() + emb.sqrtm_sign * b_.approx() * std::sqrt(static_cast<double>(m_));
}

E0Element& E0Element::operator+=(const E0Element& other) {
  m_ = common_m(m_, other.m_);
  a_ += other.a_;
  b_ += other.b_;
  normalize();
  return *this;
}

E0Element& E0Element::operator-=(const E0Element& other) {
  m_ = common_m(m_, other.m_);
  a_ -= other.a_;
  b_ -= other.b_;
  normalize();
  return *this;
}

E0Element& E0Element::operator*=(const E0Element& other) {
  const long m = common_m(m_, other.m_);
  if (b_.is_zero() && other.b_.is_zero()) {
    a_ *= other.a_;
    return *this;
  }
  Rational a = a_ * other.a_ + Rational(m) * b_ * other.b_;
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  m_ = m;
  normalize();
  return *this;
}

E0Element& E0Element::operator/=(const E0Element& other) {
  if (other.b_.is_zero()) {
    if (other.a_.is_zero()) throw std::domain_error("division by zero in E0");
    a_ /= other.a_;
    b_ /= other.a_;
    return *this;
  }
  return *this *= other.inverse();
}

E0Element E0Element::operator-() const {
  E0Element out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const E0Element& x) {
  if (x.is_rational()) return os << x.a();
  if (x.a().is_zero()) {
    if (x.b() == Rational(-1)) return os << "-sqrt(" << x.m() << ")";
    if (x.b() != Rational(1)) os << x.b() << "*";
    return os << "sqrt(" << x.m() << ")";
  }
  os << x.a() << (x.b().sign() > 0 ? " + " : " - ");
  const Rational b = x.b().abs();
  if (b != Rational(1)) os << b << "*";
  return os << "sqrt(" << x.m() << ")";
}

int sign_at_embedding(const E0Element& x, const Embedding& emb) {
  const int sa = x.a().sign();
  const int sb = emb.sqrtm_sign * x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 m. Equality is impossible for square-free m.
  const Rational lhs = x.a() * x.a();
  const Rational rhs = x.b() * x.b() * Rational(x.m());
  return lhs > rhs ? sa : sb;
}

std::optional<E0Element> is_square_in_E0(const E0Element& x, const TotallyRealField& field) {
  if (!x.belongs_to(field)) {
    throw std::invalid_argument("is_square_in_E0: element is not in " + field.name());
  }
  if (x.is_zero()) return E0Element(0);
  const long m = field.m();
  std::optional<E0Element> root;
  Rational r;
  if (x.is_rational()) {
    if (rational_sqrt(x.a(), r)) {
      root = E0Element(r);
    } else if (m != 0 && rational_sqrt(x.a() / Rational(m), r)) {
      root = E0Element(0, r, m);
    }
  } else {
    // (a' + b' sqrt m)^2 = a + b sqrt m  <=>  a'^2 + m b'^2 = a, 2 a' b' = b.
    // With t = a'^2: 4t^2 - 4at + m b^2 = 0, so t = (a +- sqrt(a^2 - m b^2)) / 2.
    Rational disc_root;
    if (rational_sqrt(x.norm_to_q(), disc_root)) {
      for (const Rational& t : {(x.a() + disc_root) / Rational(2), (x.a() - disc_root) / Rational(2)}) {
        Rational a_root;
        if (t.sign() > 0 && rational_sqrt(t, a_root)) {
          root = E0Element(a_root, x.b() / (Rational(2) * a_root), m);
          break;
        }
      }
    }
  }
  if (!root) return std::nullopt;
  if (sign_at_embedding(*root, Embedding{1, +1}) < 0) root = -*root;
  if (*root * *root != x) throw std::logic_error("is_square_in_E0: root check failed");
  return root;
}

CMField::CMField(TotallyRealField base, E0Element e) : base_(std::move(base)), e_(std::move(e)) {
  if (!e_.belongs_to(base_)) {
    throw std::invalid_argument("CM parameter e is not an element of " + base_.name());
  }
  for (const Embedding& emb : base_.embeddings()) {
    if (sign_at_embedding(e_, emb) <= 0) {
      throw std::invalid_argument("CM parameter e must be totally positive");
    }
  }
}

std::string CMField::name() const {
  std::ostringstream os;
  if (e_.is_rational()) {
    os << base_.name() << "(sqrt(-" << e_ << "))";
  } else {
    os << base_.name() << "(sqrt(-(" << e_ << ")))";
  }
  return os.str();
}

CMElement::CMElement(E0Element x, E0Element y, E0Element e)
    : x_(std::move(x)), y_(std::move(y)), e_(std::move(e)) {
  if (!y_.is_zero() && e_.is_zero()) {
    throw std::invalid_argument("CMElement with imaginary part needs a nonzero e");
  }
  normalize();
}

void CMElement::normalize() {
  if (y_.is_zero()) e_ = E0Element(0);
}

CMElement CMElement::conjugate() const {
  CMElement out = *this;
  out.y_ = -y_;
  return out;
}

CMElement CMElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in E");
  const E0Element n = norm_E_over_E0(*this);
  CMElement out = conjugate();
  out.x_ /= n;
  out.y_ /= n;
  return out;
}

CMElement& CMElement::operator+=(const CMElement& other) {
  e_ = common_e(e_, other.e_);
  x_ += other.x_;
  y_ += other.y_;
  normalize();
  return *this;
}

CMElement& CMElement::operator-=(const CMElement& other) {
  e_ = common_e(e_, other.e_);
  x_ -= other.x_;
  y_ -= other.y_;
  normalize();
  return *this;
}

CMElement& CMElement::operator*=(const CMElement& other) {
  E0Element e = common_e(e_, other.e_);
  if (y_.is_zero() && other.y_.is_zero()) {
    x_ *= other.x_;
    return *this;
  }
  E0Element x = x_ * other.x_ - e * y_ * other.y_;
  E0Element y = x_ * other.y_ + y_ * other.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  e_ = std::move(e);
  normalize();
  return *this;
}

CMElement& CMElement::operator/=(const CMElement& other) {
  if (other.y_.is_zero()) {
    if (other.x_.is_zero()) throw std::domain_error("division by zero in E");
    x_ /= other.x_;
    y_ /= other.x_;
    normalize();
    return *this;
  }
  return *this *= other.inverse();
}

CMElement CMElement::operator-() const {
  CMElement out = *this;
  out.x_ = -x_;
  out.y_ = -y_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const CMElement& z) {
  if (z.is_in_base()) return os << z.x();
  if (!z.x().is_zero()) os << "(" << z.x() << ") + ";
  return os << "(" << z.y() << ")*sqrt(-(" << z.e() << "))";
}

E0Element norm_E_over_E0(const CMElement& z) { return z.x() * z.x() + z.e() * z.y() * z.y(); }

E0Element trace_to_subfield(const CMElement& z) { return E0Element(2) * z.x(); }

}  // namespace weilhodge
