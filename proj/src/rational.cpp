#include "kmaj/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace kmaj {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 uabs(int128 v) {
  return v < 0 ? uint128(-(v + 1)) + 1 : uint128(v);
}

uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr long long kMax = std::numeric_limits<long long>::max();
constexpr long long kMin = std::numeric_limits<long long>::min();

}  // namespace

// Builds the reduced form from 128-bit intermediates; the only place that
// range-checks back into 64 bits.
static Rational normalized(int128 num, int128 den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (num == 0) return Rational(0);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  uint128 g = gcd128(uabs(num), uint128(den));
  num /= int128(g);
  den /= int128(g);
  if (num > int128(kMax) || num < int128(kMin) || den > int128(kMax))
    throw std::overflow_error("rational: value exceeds 64-bit range");
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  int128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  uint128 g = gcd128(uabs(n), uint128(d));
  n /= int128(g);
  d /= int128(g);
  if (n > int128(kMax) || n < int128(kMin) || d > int128(kMax))
    throw std::overflow_error("rational: value exceeds 64-bit range");
  num_ = static_cast<long long>(n);
  den_ = static_cast<long long>(d);
}

Rational Rational::operator-() const {
  if (num_ == kMin) throw std::overflow_error("rational: value exceeds 64-bit range");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  int128 num = int128(a.num_) * b.den_ + int128(b.num_) * a.den_;
  int128 den = int128(a.den_) * b.den_;
  return normalized(num, den);
}

Rational operator-(const Rational& a, const Rational& b) {
  int128 num = int128(a.num_) * b.den_ - int128(b.num_) * a.den_;
  int128 den = int128(a.den_) * b.den_;
  return normalized(num, den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return normalized(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, long long positive) {
  if (positive <= 0)
    throw std::invalid_argument("rational: division requires a positive integer");
  return normalized(int128(a.num_), int128(a.den_) * positive);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int128 lhs = int128(a.num_) * b.den_;
  int128 rhs = int128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Rational Rational::parse(const std::string& text) {
  const char* first = text.data();
  const char* last = first + text.size();
  long long num = 0;
  auto res = std::from_chars(first, last, num);
  if (res.ec != std::errc{})
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  if (res.ptr == last) return Rational(num);
  if (*res.ptr != '/')
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  long long den = 0;
  auto res2 = std::from_chars(res.ptr + 1, last, den);
  if (res2.ec != std::errc{} || res2.ptr != last || den <= 0)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace kmaj
