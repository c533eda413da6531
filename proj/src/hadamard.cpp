#include "circhad/hadamard.hpp"

#include "circhad/errors.hpp"

namespace circhad {

namespace {

// floor(sqrt(v)) by integer Newton iteration.
std::uint64_t isqrt(std::uint64_t v) {
    if (v == 0) return 0;
    std::uint64_t x = v;
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + v / x) / 2;
    }
    return x;
}

}  // namespace

bool is_hadamard(const SignVector& row) {
    validate_sign_vector(row);
    const auto h = CirculantMatrix::from_signs(row);
    const auto product = mul(h, conj_transpose(h));
    std::vector<Rational> target(row.size(), Rational(0));
    target[0] = Rational(static_cast<long>(row.size()));
    return product == CirculantMatrix(std::move(target));
}

std::optional<RegularProfile> regular_profile(const SignVector& row) {
    validate_sign_vector(row);
    const std::size_t n = row.size();
    if (n % 4 != 0) return std::nullopt;
    const std::uint64_t h = isqrt(n / 4);
    if (4 * h * h != n || h == 0) return std::nullopt;

    long sum = 0;
    std::uint32_t positives = 0;
    for (auto e : row) {
        sum += e;
        if (e == 1) ++positives;
    }
    const std::uint32_t negatives = static_cast<std::uint32_t>(n) - positives;

    RegularProfile profile;
    profile.h = static_cast<std::uint32_t>(h);
    if (sum == 2 * static_cast<long>(h)) {
        profile.sum_sign = SumSign::Plus;
        if (positives != 2 * h * h + h || negatives != 2 * h * h - h) return std::nullopt;
    } else if (sum == -2 * static_cast<long>(h)) {
        profile.sum_sign = SumSign::Minus;
        if (positives != 2 * h * h - h || negatives != 2 * h * h + h) return std::nullopt;
    } else {
        return std::nullopt;
    }
    profile.positive_count = positives;
    profile.negative_count = negatives;
    return profile;
}

SignVector normalize_sign(const SignVector& row) {
    validate_sign_vector(row);
    if (row.size() == 1) return row[0] == 1 ? row : negated(row);
    const auto profile = regular_profile(row);
    if (!profile)
        throw PreconditionError("normalize_sign: no regular profile for row " +
                                format_sign_vector(row));
    return profile->sum_sign == SumSign::Plus ? row : negated(row);
}

CirculantMatrix build_s(const SignVector& row) {
    validate_sign_vector(row);
    const std::size_t n = row.size();
    const auto h_matrix = CirculantMatrix::from_signs(row);
    const auto j = constant(ConstantKind::AllOnes, n);

    if (n == 1) {
        // Order 1 sits outside the regularity statement; the divisor
        // n + sqrt(n) = 2 still applies.
        if (row[0] != 1)
            throw PreconditionError("build_s: row sum must be positive; normalize first");
        return linear_combine(Rational(1, 2), h_matrix, Rational(1, 2), j);
    }

    const auto profile = regular_profile(row);
    if (!profile) {
        const std::uint64_t r = isqrt(n / 4);
        if (n % 4 != 0 || 4 * r * r != n)
            throw PreconditionError("build_s: order " + std::to_string(n) +
                                    " is not of the form 4h^2");
        throw PreconditionError("build_s: row sum is not ±2h for order " + std::to_string(n));
    }
    if (profile->sum_sign != SumSign::Plus)
        throw PreconditionError(
            "build_s: row has 2h^2-h positive entries; apply normalize_sign first");

    // S = (H + J) / (2(2h^2+h))
    const long h = profile->h;
    const Rational divisor(1, 2 * (2 * h * h + h));
    return linear_combine(divisor, h_matrix, divisor, j);
}

bool is_doubly_stochastic(const CirculantMatrix& m) {
    for (const auto& e : m.first_row())
        if (e.is_negative()) return false;
    const Rational one(1);
    if (row_sum(m) != one) return false;
    return row_sum(conj_transpose(m)) == one;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"H1", {1}},
        {"H2", {-1}},
        {"H3", {1, -1, -1, -1}},
        {"H4", {-1, 1, 1, 1}},
        {"H5", {-1, 1, -1, -1}},
        {"H6", {1, -1, 1, 1}},
        {"H7", {-1, -1, 1, -1}},
        {"H8", {1, 1, -1, 1}},
        {"H9", {-1, -1, -1, 1}},
        {"H10", {1, 1, 1, -1}},
    };
    return entries;
}

}  // namespace circhad
