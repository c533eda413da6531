// Exact rational scalar, backed by GMP. Always canonical: lowest terms,
// positive denominator. No floating point anywhere in the arithmetic.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace circhad {

class Rational {
  public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den) : value_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    // Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return value_ == 0; }
    bool is_negative() const { return value_ < 0; }

    // Renders "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }

    // Least non-negative residue of an integer rational. Requires
    // is_integer() and modulus > 0.
    mpz_class mod(const mpz_class& modulus) const;

    const mpq_class& raw() const { return value_; }

  private:
    mpq_class value_;  // gmp keeps this canonical across arithmetic
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace circhad
