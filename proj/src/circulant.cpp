#include "circhad/circulant.hpp"

#include <sstream>
#include <stdexcept>

#include "circhad/errors.hpp"

namespace circhad {

CirculantMatrix::CirculantMatrix(std::vector<Rational> first_row) : row_(std::move(first_row)) {
    if (row_.empty()) throw std::invalid_argument("circ: first row must be non-empty");
}

CirculantMatrix CirculantMatrix::from_signs(const SignVector& row) {
    validate_sign_vector(row);
    std::vector<Rational> r;
    r.reserve(row.size());
    for (auto e : row) r.emplace_back(static_cast<long>(e));
    return CirculantMatrix(std::move(r));
}

const Rational& CirculantMatrix::entry(std::size_t i, std::size_t j) const {
    const std::size_t n = row_.size();
    return row_[((j % n) + n - (i % n)) % n];
}

std::string CirculantMatrix::str() const {
    std::ostringstream out;
    out << "circ(";
    for (std::size_t i = 0; i < row_.size(); ++i) {
        if (i) out << ", ";
        out << row_[i].str();
    }
    out << ')';
    return out.str();
}

CirculantMatrix circ(std::vector<Rational> first_row) {
    return CirculantMatrix(std::move(first_row));
}

CirculantMatrix constant(ConstantKind kind, std::size_t n) {
    if (n == 0) throw std::invalid_argument("constant: order must be positive");
    std::vector<Rational> row(n, Rational(0));
    switch (kind) {
        case ConstantKind::Identity:
            row[0] = Rational(1);
            break;
        case ConstantKind::AllOnes:
            row.assign(n, Rational(1));
            break;
        case ConstantKind::Zero:
            break;
    }
    return CirculantMatrix(std::move(row));
}

CirculantMatrix mul(const CirculantMatrix& a, const CirculantMatrix& b) {
    const std::size_t n = a.order();
    if (b.order() != n)
        throw DimensionError("mul: orders differ (" + std::to_string(n) + " vs " +
                             std::to_string(b.order()) + ")");
    // First row of the product is the cyclic convolution of the first rows:
    // c[k] = sum_i a[i] * b[(k-i) mod n].
    const auto& ar = a.first_row();
    const auto& br = b.first_row();
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (ar[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t k = i + j < n ? i + j : i + j - n;
            c[k] += ar[i] * br[j];
        }
    }
    return CirculantMatrix(std::move(c));
}

CirculantMatrix linear_combine(const Rational& alpha, const CirculantMatrix& a,
                               const Rational& beta, const CirculantMatrix& b) {
    const std::size_t n = a.order();
    if (b.order() != n)
        throw DimensionError("linear_combine: orders differ (" + std::to_string(n) + " vs " +
                             std::to_string(b.order()) + ")");
    std::vector<Rational> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(alpha * a.first_row()[i] + beta * b.first_row()[i]);
    return CirculantMatrix(std::move(c));
}

CirculantMatrix conj_transpose(const CirculantMatrix& a) {
    const auto& r = a.first_row();
    std::vector<Rational> c;
    c.reserve(r.size());
    c.push_back(r[0]);
    for (std::size_t i = r.size(); i-- > 1;) c.push_back(r[i]);
    return CirculantMatrix(std::move(c));
}

Rational row_sum(const CirculantMatrix& a) {
    Rational s(0);
    for (const auto& e : a.first_row()) s += e;
    return s;
}

}  // namespace circhad
