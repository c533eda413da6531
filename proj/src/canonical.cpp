#include "circhad/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace circhad {

namespace {

// -1 sorts before +1, so std::vector's lexicographic operator< is exactly
// the row ordering we canonicalize under.
void keep_min(SignVector& best, const SignVector& candidate) {
    if (candidate < best) best = candidate;
}

}  // namespace

SignVector canonical_form(const SignVector& row) {
    validate_sign_vector(row);
    SignVector best = row;
    for (std::size_t k = 0; k < row.size(); ++k) {
        const SignVector s = shifted(row, k);
        keep_min(best, s);
        keep_min(best, negated(s));
    }
    return best;
}

SignVector barker_canonical_form(const SignVector& row) {
    validate_sign_vector(row);
    SignVector best = row;
    for (const auto& r : {row, reversed(row)}) {
        for (const auto& a : {r, alternating_flip(r)}) {
            keep_min(best, a);
            keep_min(best, negated(a));
        }
    }
    return best;
}

std::vector<SignVector> shift_negate_orbit(const SignVector& row) {
    validate_sign_vector(row);
    std::set<SignVector> orbit;
    for (std::size_t k = 0; k < row.size(); ++k) {
        const SignVector s = shifted(row, k);
        orbit.insert(s);
        orbit.insert(negated(s));
    }
    return {orbit.begin(), orbit.end()};
}

std::vector<SignVector> barker_orbit(const SignVector& row) {
    validate_sign_vector(row);
    std::set<SignVector> orbit;
    for (const auto& r : {row, reversed(row)}) {
        for (const auto& a : {r, alternating_flip(r)}) {
            orbit.insert(a);
            orbit.insert(negated(a));
        }
    }
    return {orbit.begin(), orbit.end()};
}

SignVector decimation_canonical_form(const SignVector& row) {
    validate_sign_vector(row);
    const std::size_t n = row.size();
    SignVector best = canonical_form(row);
    for (std::size_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        SignVector image(n);
        for (std::size_t i = 0; i < n; ++i) image[i] = row[(u * i) % n];
        keep_min(best, canonical_form(image));
    }
    return best;
}

}  // namespace circhad
