// Exact-rational circulant matrices, stored as first rows. A circulant of
// order n is fully determined by its first row: entry (i,j) equals
// first_row[(j-i) mod n], each row being the previous one shifted right by
// one. All ring operations close over first rows, so nothing here ever
// materializes an n x n matrix; test oracles do that on their own.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circhad/rational.hpp"
#include "circhad/sign_vector.hpp"

namespace circhad {

class CirculantMatrix {
  public:
    // circ(a_1, ..., a_n). Throws std::invalid_argument on an empty row.
    explicit CirculantMatrix(std::vector<Rational> first_row);

    static CirculantMatrix from_signs(const SignVector& row);

    std::size_t order() const { return row_.size(); }
    const std::vector<Rational>& first_row() const { return row_; }

    // Entry (i, j), zero-based.
    const Rational& entry(std::size_t i, std::size_t j) const;

    // Debug rendering of the first row as exact fractions.
    std::string str() const;

    friend bool operator==(const CirculantMatrix& a, const CirculantMatrix& b) {
        return a.row_ == b.row_;
    }

  private:
    std::vector<Rational> row_;
};

enum class ConstantKind { Identity, AllOnes, Zero };

CirculantMatrix circ(std::vector<Rational> first_row);
// I, J or 0 of order n.
CirculantMatrix constant(ConstantKind kind, std::size_t n);

// Matrix product via cyclic convolution of the first rows; the product of
// two circulants is circulant. Throws DimensionError on order mismatch.
CirculantMatrix mul(const CirculantMatrix& a, const CirculantMatrix& b);

// alpha*A + beta*B, entrywise on first rows.
CirculantMatrix linear_combine(const Rational& alpha, const CirculantMatrix& a,
                               const Rational& beta, const CirculantMatrix& b);

// For a real circulant this is the transpose: circ(a_1, a_n, a_{n-1}, ..., a_2).
CirculantMatrix conj_transpose(const CirculantMatrix& a);

// Sum of the first row; every row of a circulant has the same sum.
Rational row_sum(const CirculantMatrix& a);

}  // namespace circhad
