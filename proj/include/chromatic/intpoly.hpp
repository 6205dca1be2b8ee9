#pragma once

// Exact integer polynomials in one variable t. Coefficients are 128-bit
// integers whose arithmetic throws on overflow; the counts that end up here
// grow combinatorially and must never wrap silently.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromatic/base.hpp"

namespace chromatic {

// Signed 128-bit integer with checked arithmetic.
class CheckedInt {
 public:
  constexpr CheckedInt() : v_(0) {}
  constexpr CheckedInt(long long v) : v_(v) {}  // implicit on purpose
  constexpr CheckedInt(int v) : v_(v) {}

  static constexpr CheckedInt from_raw(__int128 v) {
    CheckedInt r;
    r.v_ = v;
    return r;
  }

  static CheckedInt parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    bool neg = s.front() == '-';
    if (neg || s.front() == '+') s.remove_prefix(1);
    if (s.empty()) throw std::invalid_argument("sign without digits");
    CheckedInt r;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad digit in integer literal");
      r = r * 10 + CheckedInt(c - '0');
    }
    return neg ? -r : r;
  }

  CheckedInt operator+(CheckedInt o) const {
    CheckedInt r;
    if (__builtin_add_overflow(v_, o.v_, &r.v_)) throw_overflow("+");
    return r;
  }
  CheckedInt operator-(CheckedInt o) const {
    CheckedInt r;
    if (__builtin_sub_overflow(v_, o.v_, &r.v_)) throw_overflow("-");
    return r;
  }
  CheckedInt operator*(CheckedInt o) const {
    CheckedInt r;
    if (__builtin_mul_overflow(v_, o.v_, &r.v_)) throw_overflow("*");
    return r;
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  bool operator==(const CheckedInt&) const = default;
  auto operator<=>(const CheckedInt&) const = default;

  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : v_ > 0 ? 1 : 0; }
  CheckedInt abs() const { return v_ < 0 ? -*this : *this; }

  // Exact division; throws if the divisor does not divide evenly.
  CheckedInt exact_div(CheckedInt d) const {
    if (d.v_ == 0) throw std::invalid_argument("division by zero");
    if (v_ % d.v_ != 0)
      throw std::invalid_argument("inexact division: " + to_string() + " / " +
                                  d.to_string());
    return from_raw(v_ / d.v_);
  }

  bool fits_int64() const {
    return v_ >= (__int128)INT64_MIN && v_ <= (__int128)INT64_MAX;
  }
  long long to_int64() const {
    if (!fits_int64()) throw std::overflow_error("value exceeds 64 bits");
    return (long long)v_;
  }
  __int128 raw() const { return v_; }

  std::string to_string() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag =
        v_ < 0 ? -(unsigned __int128)v_ : (unsigned __int128)v_;
    std::string digits;
    while (mag > 0) {
      digits.push_back(char('0' + (int)(mag % 10)));
      mag /= 10;
    }
    if (v_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

 private:
  [[noreturn]] static void throw_overflow(const char* op) {
    throw std::overflow_error(std::string("128-bit overflow in '") + op + "'");
  }
  __int128 v_;
};

inline std::string to_string(CheckedInt v) { return v.to_string(); }

inline CheckedInt gcd(CheckedInt a, CheckedInt b) {
  __int128 x = a.abs().raw(), y = b.abs().raw();
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  return CheckedInt::from_raw(x);
}

// Dense univariate polynomial with exact integer coefficients. The
// coefficient vector stores a_0..a_d with a nonzero leading coefficient;
// the zero polynomial is the empty vector (degree -1).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<CheckedInt> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static IntPoly constant(CheckedInt c) { return IntPoly({c}); }
  static IntPoly variable() { return IntPoly({0, 1}); }
  static IntPoly monomial(int k, CheckedInt c = 1) {
    std::vector<CheckedInt> v(k + 1, CheckedInt(0));
    v[k] = c;
    return IntPoly(std::move(v));
  }

  // Monic product of (t - r) over the given roots; empty list gives 1.
  static IntPoly from_roots(const std::vector<long long>& roots) {
    IntPoly p = constant(1);
    for (long long r : roots)
      p = p * IntPoly({CheckedInt(-r), CheckedInt(1)});
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  CheckedInt coeff(int k) const {
    return (k >= 0 && k < (int)c_.size()) ? c_[k] : CheckedInt(0);
  }
  const std::vector<CheckedInt>& coeffs() const { return c_; }
  CheckedInt leading() const { return c_.empty() ? CheckedInt(0) : c_.back(); }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<CheckedInt> r(std::max(c_.size(), o.c_.size()), CheckedInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
  }
  IntPoly operator-(const IntPoly& o) const {
    std::vector<CheckedInt> r(std::max(c_.size(), o.c_.size()), CheckedInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
  }
  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<CheckedInt> r(c_.size() + o.c_.size() - 1, CheckedInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
  }
  IntPoly operator-() const { return IntPoly() - *this; }

  bool operator==(const IntPoly&) const = default;

  CheckedInt eval(CheckedInt t) const {
    CheckedInt acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  // Unique polynomial of degree < #points through the given points.
  // Throws std::invalid_argument on repeated abscissae or when the
  // interpolant has a non-integer coefficient (a miscounted input).
  static IntPoly interpolate(
      const std::vector<std::pair<long long, CheckedInt>>& points);

  // "t^4 - 4*t^3 + 5*t^2 - 2*t"
  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      CheckedInt a = c_[k];
      if (a.is_zero()) continue;
      if (out.empty())
        out += a.sign() < 0 ? "-" : "";
      else
        out += a.sign() < 0 ? " - " : " + ";
      CheckedInt mag = a.abs();
      if (k == 0) {
        out += mag.to_string();
      } else {
        if (mag != CheckedInt(1)) out += mag.to_string() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<CheckedInt> c_;
};

namespace detail {

// Reduced fraction used only while interpolating.
struct Rational {
  CheckedInt num{0}, den{1};

  void reduce() {
    if (den.sign() < 0) {
      num = -num;
      den = -den;
    }
    CheckedInt g = gcd(num, den);
    if (!g.is_zero() && g != CheckedInt(1)) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  Rational plus(const Rational& o) const {
    Rational r{num * o.den + o.num * den, den * o.den};
    r.reduce();
    return r;
  }
};

}  // namespace detail

inline IntPoly IntPoly::interpolate(
    const std::vector<std::pair<long long, CheckedInt>>& points) {
  const size_t k = points.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: repeated abscissa " +
                                    std::to_string(points[i].first));
  if (k == 0) return IntPoly();

  // Lagrange: sum of y_i * B_i / d_i with B_i = prod_{j!=i} (t - x_j).
  std::vector<detail::Rational> acc(k);
  for (size_t i = 0; i < k; ++i) {
    IntPoly basis = IntPoly::constant(1);
    CheckedInt denom = 1;
    for (size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      basis = basis * IntPoly({CheckedInt(-points[j].first), CheckedInt(1)});
      denom *= CheckedInt(points[i].first) - CheckedInt(points[j].first);
    }
    for (int d = 0; d <= basis.degree(); ++d) {
      detail::Rational term{points[i].second * basis.coeff(d), denom};
      term.reduce();
      acc[d] = acc[d].plus(term);
    }
  }
  std::vector<CheckedInt> coeffs(k, CheckedInt(0));
  for (size_t d = 0; d < k; ++d) {
    if (acc[d].den != CheckedInt(1))
      throw std::invalid_argument(
          "interpolate: non-integer coefficient at degree " +
          std::to_string(d));
    coeffs[d] = acc[d].num;
  }
  return IntPoly(std::move(coeffs));
}

struct LogConcavity {
  bool log_concave;
  bool signs_alternate;
};

// Reads |a_d|, |a_{d-1}|, ..., |a_0| and checks the log-concavity
// inequality at every interior index, zeros included. Sign alternation
// (strictly alternating from the leading coefficient, then possibly a run
// of zeros down to a_0) is reported separately.
inline LogConcavity check_log_concavity(const IntPoly& p) {
  if (p.is_zero()) return {true, true};
  const int d = p.degree();
  bool concave = true;
  for (int k = d - 1; k >= 1; --k) {
    CheckedInt mid = p.coeff(k).abs();
    if (mid * mid < p.coeff(k + 1).abs() * p.coeff(k - 1).abs()) {
      concave = false;
      break;
    }
  }
  bool alternate = true;
  int expected = p.leading().sign();
  bool zeros_from_here = false;
  for (int k = d; k >= 0; --k) {
    int s = p.coeff(k).sign();
    if (zeros_from_here) {
      if (s != 0) {
        alternate = false;
        break;
      }
      continue;
    }
    if (s == 0) {
      zeros_from_here = true;
    } else if (s != expected) {
      alternate = false;
      break;
    }
    expected = -expected;
  }
  return {concave, alternate};
}

inline bool is_log_concave(const IntPoly& p) {
  return check_log_concavity(p).log_concave;
}

}  // namespace chromatic
