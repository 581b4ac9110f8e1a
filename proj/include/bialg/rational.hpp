#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bialg {

/// Thrown when a per-instance resource guard (coordinate count, degree cap)
/// would be exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed input files or element/instance schema violations.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Canonical form is maintained at all times:
/// denominator > 0 and gcd(|num|, den) = 1. Serializes as "p/q", or "p"
/// when the denominator is 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q" or "-p/q" (q may carry a sign; result is
  /// canonicalized). Rejects anything else.
  static Rational parse(std::string_view s);

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(-v_, already_canonical{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  const mpq_class& raw() const { return v_; }

 private:
  struct already_canonical {};
  Rational(mpq_class v, already_canonical) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw ParseError("rational: empty string");
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    if (t[0] == '-' || t[0] == '+') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string str(s);
  auto slash = str.find('/');
  if (slash == std::string::npos) {
    if (!digits(str)) throw ParseError("rational: bad integer '" + str + "'");
    return Rational(mpq_class(mpz_class(str, 10)));
  }
  std::string num = str.substr(0, slash), den = str.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("rational: bad fraction '" + str + "'");
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("rational: zero denominator in '" + str + "'");
  mpq_class q(mpz_class(num, 10), d);
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace bialg
