// ±1 rows: the first rows of candidate circulant matrices.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace circhad {

// Every entry is exactly -1 or +1; length >= 1.
using SignVector = std::vector<std::int8_t>;

// Throws std::invalid_argument unless row is non-empty with ±1 entries.
void validate_sign_vector(const SignVector& row);

// Accepts "1,-1,-1,-1" (commas, optional '+') or the compact "+---" form.
SignVector parse_sign_vector(const std::string& text);

// "[1, -1, -1, -1]"
std::string format_sign_vector(const SignVector& row);

SignVector negated(const SignVector& row);
SignVector reversed(const SignVector& row);
// Cyclic shift right by k: result[i] = row[(i - k) mod n].
SignVector shifted(const SignVector& row, std::size_t k);
// Multiplies entry i by (-1)^i.
SignVector alternating_flip(const SignVector& row);

}  // namespace circhad
