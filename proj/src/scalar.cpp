#include "flagvert/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fv {

mp_bitcnt_t bits_for_digits(int digits) {
  if (digits < 1) digits = 1;
  return static_cast<mp_bitcnt_t>(digits * 3.3219280948873626) + 64;
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::floating(const mpq_class& q, int digits) {
  mpf_class f(q, bits_for_digits(digits));
  return Scalar(f);
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(v_));
  return sgn(std::get<mpf_class>(v_));
}

const mpq_class& Scalar::rat() const {
  if (!is_exact()) throw Error("rat() on float-backend Scalar");
  return std::get<mpq_class>(v_);
}

mpf_class Scalar::flt(int digits) const {
  if (is_exact()) return mpf_class(std::get<mpq_class>(v_), bits_for_digits(digits));
  return std::get<mpf_class>(v_);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  return Scalar(mpf_class(-std::get<mpf_class>(v_)));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_exact()) {
    mpq_class r;
    mpq_inv(r.get_mpq_t(), std::get<mpq_class>(v_).get_mpq_t());
    return Scalar(r);
  }
  const mpf_class& f = std::get<mpf_class>(v_);
  mpf_class r(0, f.get_prec());
  r = 1;
  r /= f;
  return Scalar(r);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar base = *this;
  Scalar acc = is_exact() ? Scalar(mpq_class(1)) : Scalar(mpf_class(1, std::get<mpf_class>(v_).get_prec()));
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

namespace {
// Promote to the wider precision when mixing float operands.
mpf_class as_f(const Scalar& s, mp_bitcnt_t prec) { return s.flt(static_cast<int>(prec / 3.32) + 1); }

template <class Op>
Scalar binop(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_exact() && b.is_exact()) {
    return Scalar(mpq_class(op(a.rat(), b.rat())));
  }
  mp_bitcnt_t pa = a.is_exact() ? 0 : a.flt().get_prec();
  mp_bitcnt_t pb = b.is_exact() ? 0 : b.flt().get_prec();
  mp_bitcnt_t prec = std::max(pa, pb);
  mpf_class fa = a.is_exact() ? mpf_class(a.rat(), prec) : a.flt();
  mpf_class fb = b.is_exact() ? mpf_class(b.rat(), prec) : b.flt();
  mpf_class r(0, prec);
  r = op(fa, fb);
  return Scalar(r);
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  return binop(a, b, [](const auto& x, const auto& y) { return x / y; });
}

int Scalar::cmp(const Scalar& o) const {
  if (is_exact() && o.is_exact()) return mpq_cmp(rat().get_mpq_t(), o.rat().get_mpq_t());
  Scalar d = *this - o;
  return d.sign();
}

std::string Scalar::str() const {
  if (is_exact()) return rat().get_str();
  return sci();
}

std::string Scalar::sci() const {
  if (sign() == 0) return "0";
  mpf_class f = flt(25);
  mp_exp_t e = 0;
  std::string digits = f.get_str(e, 10, 20);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits = digits.substr(1);
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string mant = digits.substr(0, 1);
  if (digits.size() > 1) mant += "." + digits.substr(1);
  return (neg ? std::string("-") : std::string()) + mant + "e" + std::to_string(e - 1);
}

double Scalar::to_double() const {
  if (is_exact()) {
    // mpq_get_d overflows silently for giant exponents; go through mpf.
    return mpf_class(rat(), 128).get_d();
  }
  return flt().get_d();
}

}  // namespace fv
