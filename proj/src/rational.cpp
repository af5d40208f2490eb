#include "ic/rational.hpp"

#include "ic/error.hpp"

namespace ic {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error("rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw Error("rational: empty string");
  try {
    mpq_class v(s);
    v.canonicalize();
    if (v.get_den() == 0) throw Error("rational: zero denominator in '" + s + "'");
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw Error("rational: cannot parse '" + s + "'");
  }
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw Error("rational: division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

bool Rational::is_integer() const { return v_.get_den() == 1; }

std::string Rational::num_str() const { return v_.get_num().get_str(); }

std::string Rational::den_str() const { return v_.get_den().get_str(); }

std::string Rational::to_string() const {
  return is_integer() ? num_str() : num_str() + "/" + den_str();
}

std::string Rational::display() const {
  if (is_integer()) return num_str();

  const bool negative = v_ < 0;
  mpz_class n = abs(v_.get_num());
  mpz_class d = v_.get_den();

  // A denominator of the form 2^a 5^b means the decimal expansion ends.
  mpz_class stripped = d;
  int twos = 0, fives = 0;
  while (stripped % 2 == 0) {
    stripped /= 2;
    ++twos;
  }
  while (stripped % 5 == 0) {
    stripped /= 5;
    ++fives;
  }

  std::string dec;
  if (stripped == 1) {
    int e = std::max(twos, fives);
    mpz_class scaled = n;
    for (int j = 0; j < e - twos; ++j) scaled *= 2;
    for (int j = 0; j < e - fives; ++j) scaled *= 5;
    std::string digits = scaled.get_str();
    while (static_cast<int>(digits.size()) <= e) digits.insert(digits.begin(), '0');
    std::string frac = digits.substr(digits.size() - e);
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    dec = digits.substr(0, digits.size() - e) + "." + frac;
  } else {
    // Round to six decimal places, half away from zero.
    mpz_class t = (2 * n * 1000000 + d) / (2 * d);
    std::string digits = t.get_str();
    while (digits.size() <= 6) digits.insert(digits.begin(), '0');
    dec = "~" + digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
  }
  std::string sign = negative ? "-" : "";
  std::string body = dec[0] == '~' ? "~" + sign + dec.substr(1) : sign + dec;
  return to_string() + " (" + body + ")";
}

}  // namespace ic
