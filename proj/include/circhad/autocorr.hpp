// Periodic and aperiodic autocorrelation of ±1 rows. circ(row) is Hadamard
// exactly when the periodic autocorrelation vanishes at every nonzero lag;
// a Barker sequence keeps every nonzero aperiodic value in {-1, 0, 1}.

#pragma once

#include <cstdint>
#include <vector>

#include "circhad/sign_vector.hpp"

namespace circhad {

enum class CorrelationKind { Periodic, Aperiodic };

struct AutocorrelationSpectrum {
    CorrelationKind kind = CorrelationKind::Periodic;
    std::vector<std::int64_t> values;  // indexed by lag 0 .. n-1
};

// value(k) = sum_i row[i] * row[(i+k) mod n]; value(0) = n and
// value(k) = value(n-k).
AutocorrelationSpectrum pacf(const SignVector& row);

// value(k) = sum_{i=0}^{n-1-k} row[i] * row[i+k]; value(0) = n.
AutocorrelationSpectrum apacf(const SignVector& row);

bool pacf_vanishes_off_peak(const SignVector& row);
bool is_barker(const SignVector& row);

}  // namespace circhad
