#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hallforge {

/// Exact element of Q(sqrt(q)) for a fixed positive integer q, stored as
/// a + b*sqrt(q) with a, b rational in lowest terms.
///
/// Pure rationals (b == 0) carry no q and combine with values over any q.
/// When q is a perfect square the irrational part is folded into the
/// rational part at construction, so equality is plain componentwise
/// comparison everywhere.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), q_(0) {}
  Scalar(long n) : a_(n), b_(0), q_(0) {}
  explicit Scalar(const mpq_class& a) : a_(a), b_(0), q_(0) { a_.canonicalize(); }

  /// a + b*sqrt(q); folds if q is a perfect square.
  Scalar(const mpq_class& a, const mpq_class& b, long q);

  /// q^(k/2): the k-th power of v = sqrt(q). Negative k inverts exactly.
  static Scalar v_pow(long k, long q);
  static Scalar rational(long num, long den);

  const mpq_class& rat_part() const { return a_; }
  const mpq_class& irr_part() const { return b_; }
  long q() const { return q_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact inverse. Throws std::domain_error on zero.
  Scalar inv() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

  bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "p/r" or "p" when the denominator is 1.
  static std::string rat_str(const mpq_class& x);
  /// Human-readable "a + b*sqrt(q)".
  std::string str() const;

 private:
  void normalize();
  static long merge_q(const Scalar& x, const Scalar& y);

  mpq_class a_, b_;
  long q_;  // 0 while b_ == 0
};

}  // namespace hallforge
