#include "circhad/autocorr.hpp"

namespace circhad {

AutocorrelationSpectrum pacf(const SignVector& row) {
    validate_sign_vector(row);
    const std::size_t n = row.size();
    AutocorrelationSpectrum spectrum{CorrelationKind::Periodic, std::vector<std::int64_t>(n, 0)};
    for (std::size_t k = 0; k < n; ++k) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = i + k < n ? i + k : i + k - n;
            sum += static_cast<std::int64_t>(row[i]) * row[j];
        }
        spectrum.values[k] = sum;
    }
    return spectrum;
}

AutocorrelationSpectrum apacf(const SignVector& row) {
    validate_sign_vector(row);
    const std::size_t n = row.size();
    AutocorrelationSpectrum spectrum{CorrelationKind::Aperiodic, std::vector<std::int64_t>(n, 0)};
    for (std::size_t k = 0; k < n; ++k) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + k < n; ++i)
            sum += static_cast<std::int64_t>(row[i]) * row[i + k];
        spectrum.values[k] = sum;
    }
    return spectrum;
}

bool pacf_vanishes_off_peak(const SignVector& row) {
    const auto spectrum = pacf(row);
    for (std::size_t k = 1; k < spectrum.values.size(); ++k)
        if (spectrum.values[k] != 0) return false;
    return true;
}

bool is_barker(const SignVector& row) {
    const auto spectrum = apacf(row);
    for (std::size_t k = 1; k < spectrum.values.size(); ++k) {
        const auto v = spectrum.values[k];
        if (v < -1 || v > 1) return false;
    }
    return true;
}

}  // namespace circhad
