// Hadamard and regularity predicates, the doubly stochastic matrix built
// from a circulant Hadamard row, and the catalog of the 10 known circulant
// Hadamard matrices.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circhad/circulant.hpp"
#include "circhad/sign_vector.hpp"

namespace circhad {

enum class SumSign : std::int8_t { Plus = +1, Minus = -1 };

// Decomposition of a row of a regular Hadamard matrix of order n = 4h^2:
// the row sum is sum_sign * 2h and the row has 2h^2 + h entries of one sign
// and 2h^2 - h of the other.
struct RegularProfile {
    std::uint32_t h = 0;
    SumSign sum_sign = SumSign::Plus;
    std::uint32_t positive_count = 0;
    std::uint32_t negative_count = 0;

    friend bool operator==(const RegularProfile&, const RegularProfile&) = default;
};

struct CatalogEntry {
    std::string name;  // "H1" ... "H10"
    SignVector row;
};

// True iff circ(row) * circ(row)^T == n*I, computed exactly.
bool is_hadamard(const SignVector& row);

// Present iff n = 4h^2 for some h >= 1 and the row sum and entry counts
// match the regular decomposition. Order 1 yields absent (the regularity
// statement starts at order 4).
std::optional<RegularProfile> regular_profile(const SignVector& row);

// Returns the row whose sum is positive: unchanged if it already has
// 2h^2 + h entries equal to +1, otherwise the entrywise negation.
// Order 1 is handled the same way (sum +1 wins). Throws PreconditionError
// when no profile exists at order >= 2.
SignVector normalize_sign(const SignVector& row);

// S = (circ(row) + J) / (n + sqrt(n)). Requires a normalized row (positive
// sum); entries come out in {0, 1/(2h^2+h)}. Order 1 uses divisor 2.
// Throws PreconditionError naming the failed regularity condition.
CirculantMatrix build_s(const SignVector& row);

// All entries >= 0 and every row and column sum exactly 1. Column sums are
// checked through the transpose rather than assumed from symmetry.
bool is_doubly_stochastic(const CirculantMatrix& m);

// The 10 known circulant Hadamard matrices: the order-1 pair and the eight
// order-4 rows.
const std::vector<CatalogEntry>& catalog();

}  // namespace circhad
