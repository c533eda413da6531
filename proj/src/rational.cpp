#include "circhad/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace circhad {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

mpz_class Rational::mod(const mpz_class& modulus) const {
    if (!is_integer()) throw std::invalid_argument("Rational: mod of a non-integer");
    if (modulus <= 0) throw std::invalid_argument("Rational: non-positive modulus");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), value_.get_num().get_mpz_t(), modulus.get_mpz_t());
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace circhad
