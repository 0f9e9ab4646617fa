#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relpack {

// Exact rational with canonical representation: lowest terms, positive
// denominator, zero stored as 0/1. All arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed
  Rational(long num, long den) : v_(num, den) { canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Accepts "p/q" or a bare integer.
  static Rational from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(text));
    return Rational(mpz_class(text.substr(0, slash)),
                    mpz_class(text.substr(slash + 1)));
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }

  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  long floor_long() const { return floor().get_si(); }

  // Always "p/q", lowest terms, e.g. "3/1", "-5/2".
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.v_ == 0) throw std::invalid_argument("division by zero rational");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

 private:
  explicit Rational(const mpq_class& v) : v_(v) {}
  void canonicalize() {
    if (v_.get_den() == 0) throw std::invalid_argument("zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

inline mpz_class lcm_of_denominators(std::span<const Rational> values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_class d = v.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace relpack
