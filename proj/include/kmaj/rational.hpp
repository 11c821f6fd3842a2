#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace kmaj {

// Exact rational with 64-bit numerator/denominator, always in lowest terms.
// Denominator is strictly positive; zero is stored as 0/1. All arithmetic
// runs through 128-bit intermediates and throws std::overflow_error if a
// reduced result leaves the 64-bit range. No floating point, ever.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : num_(value) {}
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  // exact division by a positive integer; throws std::invalid_argument otherwise
  friend Rational operator/(const Rational& a, long long positive);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q" with "/1" omitted, e.g. "3/2", "0", "-5/3"
  std::string str() const;
  // accepts an optionally signed integer or "x/y"; normalizes; rejects junk
  static Rational parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace kmaj
