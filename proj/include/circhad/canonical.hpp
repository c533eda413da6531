// Orbit canonicalization for deduplicating search output. Rows compare
// lexicographically with -1 < +1; the canonical form is the least element
// of the orbit under the declared group.

#pragma once

#include <cstddef>
#include <vector>

#include "circhad/sign_vector.hpp"

namespace circhad {

// Group for circulant-Hadamard rows: cyclic shifts x global negation
// (orbit size divides 2n).
SignVector canonical_form(const SignVector& row);

// Group for Barker sequences: negation, reversal, alternating flip
// (orbit size divides 8).
SignVector barker_canonical_form(const SignVector& row);

// The full orbit under shifts x negation, deduplicated.
std::vector<SignVector> shift_negate_orbit(const SignVector& row);

// The full orbit under negation/reversal/alternating flip, deduplicated.
std::vector<SignVector> barker_orbit(const SignVector& row);

// Canonical form under shifts x negation x decimation (index maps i -> u*i
// mod n for units u); a coarser secondary grouping, reported alongside the
// primary counts but never used for them.
SignVector decimation_canonical_form(const SignVector& row);

}  // namespace circhad
