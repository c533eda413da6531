// Exhaustive search for circulant Hadamard first rows and Barker sequences
// at desk-scale orders. The regularity profile supplies theoretical
// pre-filters; candidate orders run a fixed-weight depth-first enumeration
// with partial-autocorrelation pruning, sharded over prefix blocks for
// parallel workers. Hot loops use machine words; every survivor is
// re-verified through the exact-rational core.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circhad/sign_vector.hpp"

namespace circhad {

inline constexpr std::size_t kMaxSearchOrder = 64;
inline constexpr const char* kCheckpointMagic = "CHSEARCH1";

enum class FilterStatus { ExcludedShape, ExcludedParity, Candidate };

struct FilterVerdict {
    std::uint32_t order = 0;
    FilterStatus status = FilterStatus::ExcludedShape;
    std::string reason;
};

enum class SearchMode { CirculantHadamard, Barker };

struct SearchCounters {
    std::uint64_t nodes_visited = 0;
    std::uint64_t pruned_by_weight = 0;
    std::uint64_t pruned_by_partial_pacf = 0;
};

struct SearchProgress {
    std::uint64_t nodes_visited = 0;
    std::uint64_t blocks_done = 0;
    std::uint64_t blocks_total = 0;
    std::uint64_t survivors_so_far = 0;
};

struct SearchOptions {
    std::uint32_t worker_count = 1;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    bool confirm_excluded_orders = false;
    std::uint64_t emit_progress_every = 0;  // node count; 0 = never
    std::string checkpoint_path;            // empty = no checkpointing
    std::function<void(const SearchProgress&)> on_progress;
};

struct SearchReport {
    std::uint32_t order = 0;
    SearchMode mode = SearchMode::CirculantHadamard;
    std::vector<SignVector> survivors;  // canonical forms, sorted
    std::uint64_t raw_count = 0;        // satisfying rows before canonicalization
    SearchCounters counters;
    std::uint64_t duration_ms = 0;
    std::optional<FilterVerdict> filter;
    bool empirical_confirmation = false;  // an unfiltered full enumeration ran
    std::string equivalence_group;
    std::uint64_t decimation_classes = 0;  // secondary grouping, informational
    bool complete = true;
};

// Thrown when node_budget runs out; carries the progress made so far.
struct PartialResultError : std::runtime_error {
    PartialResultError(std::string what, SearchReport progress)
        : std::runtime_error(std::move(what)), partial(std::move(progress)) {}
    SearchReport partial;
};

const char* to_string(FilterStatus s);
const char* to_string(SearchMode m);

// Classifies an order before any enumeration: candidate only when
// n = 4h^2 with h odd. Throws OutOfScopeError for n < 4 (the catalog
// settles orders 1-3).
FilterVerdict theoretical_filter(std::uint32_t n);

// Enumerates ±1 rows of length n whose circulant is Hadamard. For candidate
// orders this runs the fixed-weight pruned enumeration (weight 2h^2+h; the
// opposite class is its negation image). Excluded orders return an empty
// report carrying the filter verdict, plus a full 2^n confirmation sweep
// when options.confirm_excluded_orders is set.
SearchReport search_circulant_hadamard(std::uint32_t n, const SearchOptions& options = {});

// Enumerates ±1 rows of length n with every nonzero aperiodic
// autocorrelation in {-1, 0, 1}. First entry fixed to +1 by negation
// symmetry; pruning on partial aperiodic sums.
SearchReport search_barker(std::uint32_t n, const SearchOptions& options = {});

}  // namespace circhad
