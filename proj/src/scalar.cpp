#include "hallforge/scalar.hpp"

#include <stdexcept>

namespace hallforge {

namespace {

// Returns s with s*s == q, or 0 when q is not a perfect square.
long perfect_sqrt(long q) {
  if (q < 0) return 0;
  mpz_class z(q);
  if (mpz_perfect_square_p(z.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r.get_si();
  }
  return 0;
}

}  // namespace

Scalar::Scalar(const mpq_class& a, const mpq_class& b, long q) : a_(a), b_(b), q_(q) {
  if (q <= 0) throw std::domain_error("Scalar: q must be positive");
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

void Scalar::normalize() {
  if (b_ == 0) {
    q_ = 0;
    return;
  }
  if (long s = perfect_sqrt(q_); s != 0) {
    a_ += b_ * s;
    b_ = 0;
    q_ = 0;
  }
}

long Scalar::merge_q(const Scalar& x, const Scalar& y) {
  if (x.q_ == 0) return y.q_;
  if (y.q_ == 0 || y.q_ == x.q_) return x.q_;
  throw std::domain_error("Scalar: mixing values over different q");
}

Scalar Scalar::v_pow(long k, long q) {
  if (q <= 0) throw std::domain_error("Scalar: q must be positive");
  mpz_class qz(q);
  auto int_pow = [&](long e) {  // q^e as an exact rational, e may be negative
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? mpq_class(p) : mpq_class(mpz_class(1), p);
  };
  if (k % 2 == 0) return Scalar(int_pow(k / 2));
  // k odd: q^{(k-1)/2} * sqrt(q); for negative odd k this is q^{(k-1)/2} with
  // (k-1)/2 rounded toward -inf, i.e. (k-1)/2 in exact integer division since
  // k-1 is even.
  long e = (k - 1) / 2;
  return Scalar(mpq_class(0), int_pow(e), q);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  mpq_class r(num, den);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  r.q_ = merge_q(*this, o);
  r.a_ = a_ + o.a_;
  r.b_ = b_ + o.b_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.q_ = merge_q(*this, o);
  r.a_ = a_ * o.a_ + b_ * o.b_ * r.q_;
  r.b_ = a_ * o.b_ + b_ * o.a_;
  r.normalize();
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  // 1/(a + b sqrt q) = (a - b sqrt q)/(a^2 - b^2 q); the denominator is
  // nonzero because sqrt(q) is irrational here (perfect squares are folded).
  mpq_class d = a_ * a_ - b_ * b_ * q_;
  Scalar r;
  r.q_ = q_;
  r.a_ = a_ / d;
  r.b_ = -b_ / d;
  r.normalize();
  return r;
}

std::string Scalar::rat_str(const mpq_class& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

std::string Scalar::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string s = rat_str(a_);
  s += " + ";
  s += rat_str(b_);
  s += "*sqrt(" + std::to_string(q_) + ")";
  return s;
}

}  // namespace hallforge
