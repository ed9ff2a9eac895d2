#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "flagvert/errors.hpp"

namespace fv {

enum class Backend { Exact, Float };

/// A field element under a pluggable backend: exact rational (GMP mpq) or
/// arbitrary-precision float (GMP mpf) with a precision configured in
/// decimal digits. Mixed-backend arithmetic promotes to float.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(long n) : v_(mpq_class(n)) {}
  Scalar(const mpq_class& q) : v_(canonical(q)) {}
  Scalar(const mpf_class& f) : v_(f) {}

  static Scalar exact(long num, long den = 1);
  static Scalar exact(const mpq_class& q) { return Scalar(q); }
  /// Rational value converted to a float of `digits` decimal digits.
  static Scalar floating(const mpq_class& q, int digits);

  bool is_exact() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  int sign() const;

  const mpq_class& rat() const;
  mpf_class flt(int digits = 30) const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar abs() const;
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const { return cmp(o) == 0; }
  bool operator!=(const Scalar& o) const { return cmp(o) != 0; }
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }
  bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
  bool operator>(const Scalar& o) const { return cmp(o) > 0; }
  bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }
  int cmp(const Scalar& o) const;

  /// Exact backend: "num/den"; float backend: decimal scientific notation.
  std::string str() const;
  /// Short scientific rendering for reports, valid for either backend.
  std::string sci() const;
  double to_double() const;

 private:
  static mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
  }
  std::variant<mpq_class, mpf_class> v_;
};

/// Float precision in bits for a decimal-digit request.
mp_bitcnt_t bits_for_digits(int digits);

}  // namespace fv
