// Exact arithmetic primitives: overflow-checked 64-bit integers, rationals,
// and prime-factored products for formulas whose intermediates exceed 64 bits.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lie {

using i64 = long long;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline i64 add_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in add");
  return r;
}

inline i64 sub_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in sub");
  return r;
}

inline i64 mul_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in mul");
  return r;
}

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Rational number with canonical form: den > 0, gcd(num, den) = 1.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i64 g = gcd_i64(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    i64 g = gcd_i64(a.den, b.den);
    i64 bd = b.den / g;
    return Rat(add_ck(mul_ck(a.num, bd), mul_ck(b.num, a.den / g)), mul_ck(a.den, bd));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    i64 g1 = gcd_i64(a.num, b.den), g2 = gcd_i64(b.num, a.den);
    return Rat(mul_ck(a.num / g1, b.num / g2), mul_ck(a.den / g2, b.den / g1));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw ArithmeticError("rational division by zero");
    return a * Rat(b.den, b.num);
  }
  Rat operator-() const { return Rat(-num, den); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return mul_ck(a.num, b.den) < mul_ck(b.num, a.den);
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  i64 floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Product of small integers kept as a prime-exponent map, so quotients of
// astronomically large products (Weyl dimension formula) stay exact.
class FactoredProduct {
 public:
  void mul(i64 n) { absorb(n, +1); }
  void div(i64 n) { absorb(n, -1); }

  bool is_integer() const {
    for (auto& [p, e] : exps_)
      if (e < 0) return false;
    return true;
  }

  i64 value() const {
    if (sign_ == 0) return 0;
    if (!is_integer()) throw ArithmeticError("factored product is not an integer");
    i64 v = sign_;
    for (auto& [p, e] : exps_)
      for (i64 i = 0; i < e; ++i) v = mul_ck(v, p);
    return v;
  }

 private:
  void absorb(i64 n, int dir) {
    if (n == 0) {
      if (dir < 0) throw ArithmeticError("division by zero in factored product");
      sign_ = 0;
      return;
    }
    if (n < 0) {
      sign_ = -sign_;
      n = -n;
    }
    for (i64 p = 2; p * p <= n; ++p) {
      while (n % p == 0) {
        exps_[p] += dir;
        n /= p;
      }
    }
    if (n > 1) exps_[n] += dir;
  }

  int sign_ = 1;
  std::map<i64, i64> exps_;
};

}  // namespace lie
