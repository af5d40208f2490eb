#pragma once

#include <gmpxx.h>

#include <string>

namespace ic {

// Exact rational numbers. Thin veneer over GMP's mpq_class that pins the
// canonical form and centralizes the output formats used across the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational from_string(const std::string& s);  // "3" or "7/2"

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const;
  std::string num_str() const;
  std::string den_str() const;
  std::string to_string() const;  // "3" or "7/2"

  // Human-facing form: "3" for integers, "7/2 (3.5)" when the denominator
  // divides a power of ten, "10/3 (~3.333333)" otherwise.
  std::string display() const;

  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace ic
