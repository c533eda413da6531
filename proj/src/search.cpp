#include "circhad/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

#include "circhad/autocorr.hpp"
#include "circhad/canonical.hpp"
#include "circhad/errors.hpp"
#include "circhad/hadamard.hpp"

namespace circhad {

const char* to_string(FilterStatus s) {
    switch (s) {
        case FilterStatus::ExcludedShape: return "excluded-shape";
        case FilterStatus::ExcludedParity: return "excluded-parity";
        case FilterStatus::Candidate: return "candidate";
    }
    return "?";
}

const char* to_string(SearchMode m) {
    switch (m) {
        case SearchMode::CirculantHadamard: return "circulant-hadamard";
        case SearchMode::Barker: return "barker";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kFlushInterval = 256;  // nodes between shared-state syncs
constexpr std::uint32_t kMaxSplitDepth = 12;   // blocks_total = 2^split_depth

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

struct BlockResult {
    std::vector<SignVector> hits;
    SearchCounters counters;
};

// One search run. Configuration is fixed before workers start; the run
// state below it is shared. Blocks are claimed through next_claim and
// merged strictly in index order behind the writer mutex, so survivors,
// raw_count and the counters come out identical for any worker count.
struct Job {
    std::uint32_t n = 0;
    SearchMode mode = SearchMode::CirculantHadamard;
    int weight = -1;                 // required +1 count; -1 = unconstrained
    bool prune_partial = true;       // interior autocorrelation pruning
    bool negation_quotient = false;  // raw_count counts each hit's negation too
    std::uint32_t lead = 0;          // forced leading +1 entries (Barker)
    std::uint32_t split_depth = 0;
    std::uint64_t blocks_total = 1;
    SearchOptions options;

    std::atomic<std::uint64_t> next_claim{0};
    std::atomic<std::uint64_t> nodes_shared{0};
    std::atomic<bool> stop{false};

    std::mutex writer;
    std::vector<std::unique_ptr<BlockResult>> slots;
    std::uint64_t frontier = 0;  // blocks below this are merged
    std::vector<SignVector> merged_hits;
    SearchCounters merged;
    std::uint64_t checkpoint_stride = 1;
    std::uint64_t last_checkpoint = 0;
    std::uint64_t progress_mark = 0;
    std::exception_ptr failure;
};

void write_checkpoint_locked(const Job& job) {
    nlohmann::json doc;
    doc["magic"] = kCheckpointMagic;
    doc["order"] = job.n;
    doc["mode"] = to_string(job.mode);
    doc["next_range_start"] = job.frontier;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& hit : job.merged_hits) {
        nlohmann::json row = nlohmann::json::array();
        for (std::int8_t v : hit) row.push_back(static_cast<int>(v));
        rows.push_back(std::move(row));
    }
    doc["survivors_so_far"] = std::move(rows);
    doc["counters"] = {{"nodes_visited", job.merged.nodes_visited},
                       {"pruned_by_weight", job.merged.pruned_by_weight},
                       {"pruned_by_partial_pacf", job.merged.pruned_by_partial_pacf}};

    const std::string& path = job.options.checkpoint_path;
    const std::string tmp = path + ".tmp";
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("checkpoint " + tmp + ": cannot open for writing");
    out << doc.dump();
    out.close();
    if (!out) throw IoError("checkpoint " + tmp + ": write failed");
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw IoError("checkpoint " + path + ": rename from temporary failed");
}

struct CheckpointSeed {
    std::uint64_t next_range_start = 0;
    std::vector<SignVector> hits;
    SearchCounters counters;
};

std::optional<CheckpointSeed> load_checkpoint(const std::string& path, std::uint32_t n,
                                              SearchMode mode, std::uint64_t blocks_total) {
    std::ifstream in(path);
    if (!in) return std::nullopt;  // nothing saved yet; run fresh

    CheckpointSeed seed;
    std::string magic;
    std::uint32_t order = 0;
    std::string mode_name;
    try {
        nlohmann::json doc;
        in >> doc;
        magic = doc.at("magic").get<std::string>();
        order = doc.at("order").get<std::uint32_t>();
        mode_name = doc.at("mode").get<std::string>();
        seed.next_range_start = doc.at("next_range_start").get<std::uint64_t>();
        for (const auto& row : doc.at("survivors_so_far")) {
            SignVector hit;
            for (const auto& v : row) hit.push_back(static_cast<std::int8_t>(v.get<int>()));
            seed.hits.push_back(std::move(hit));
        }
        const auto& counters = doc.at("counters");
        seed.counters.nodes_visited = counters.at("nodes_visited").get<std::uint64_t>();
        seed.counters.pruned_by_weight = counters.at("pruned_by_weight").get<std::uint64_t>();
        seed.counters.pruned_by_partial_pacf =
            counters.at("pruned_by_partial_pacf").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("checkpoint " + path + ": unreadable: " + e.what());
    }

    if (magic != kCheckpointMagic)
        throw IoError("checkpoint " + path + ": bad magic \"" + magic + "\"");
    if (order != n || mode_name != to_string(mode))
        throw std::invalid_argument("checkpoint " + path + " records a different search (order " +
                                    std::to_string(order) + ", mode " + mode_name + ")");
    if (seed.next_range_start > blocks_total)
        throw std::invalid_argument("checkpoint " + path + ": next_range_start " +
                                    std::to_string(seed.next_range_start) + " exceeds " +
                                    std::to_string(blocks_total) + " blocks");
    for (const auto& hit : seed.hits) {
        validate_sign_vector(hit);
        if (hit.size() != n)
            throw std::invalid_argument("checkpoint " + path + ": saved row has length " +
                                        std::to_string(hit.size()));
    }
    return seed;
}

// Depth-first enumerator for one block. Entries below forced.size() are
// pinned to the block's prefix; the rest branch +1 then -1. Lag sums are
// maintained incrementally and pruning uses the exact feasibility window:
// a partial sum can still reach its target iff the undecided terms (each
// ±1) can bridge the gap.
struct Walker {
    Job* job = nullptr;
    std::vector<std::int8_t> forced;
    std::array<std::int8_t, kMaxSearchOrder> a{};
    std::array<int, kMaxSearchOrder> lag{};  // periodic: k <= n/2; aperiodic: k <= n-1
    int pos_count = 0;
    BlockResult out;
    std::uint64_t since_flush = 0;
    bool aborted = false;

    void flush() {
        const std::uint64_t total =
            job->nodes_shared.fetch_add(since_flush, std::memory_order_relaxed) + since_flush;
        since_flush = 0;
        if (job->stop.load(std::memory_order_relaxed)) {
            aborted = true;
            return;
        }
        if (job->options.node_budget && total >= job->options.node_budget) {
            job->stop.store(true, std::memory_order_relaxed);
            aborted = true;
            return;
        }
        if (job->options.emit_progress_every && job->options.on_progress) {
            const std::uint64_t mark = total / job->options.emit_progress_every;
            std::lock_guard<std::mutex> lock(job->writer);
            if (mark > job->progress_mark) {
                job->progress_mark = mark;
                job->options.on_progress(SearchProgress{total, job->frontier, job->blocks_total,
                                                        job->merged_hits.size()});
            }
        }
    }

    void apply(std::uint32_t t, std::int8_t v, int dir) {
        if (dir > 0) a[t] = v;
        if (job->mode == SearchMode::CirculantHadamard) {
            const std::uint32_t half = job->n / 2;
            for (std::uint32_t k = 1; k <= half; ++k) {
                int delta = 0;
                if (t >= k) delta += a[t - k] * v;
                if (t + k >= job->n) delta += v * a[t + k - job->n];
                lag[k] += dir * delta;
            }
        } else {
            for (std::uint32_t k = 1; k <= t; ++k) lag[k] += dir * (a[t - k] * v);
        }
        pos_count += dir * (v > 0 ? 1 : 0);
    }

    // depth entries are decided. Periodic lag k has n terms; (depth-k)+ of
    // the non-wrapping and (depth+k-n)+ of the wrapping ones are decided.
    bool feasible_periodic(std::uint32_t depth) const {
        const std::uint32_t half = job->n / 2;
        for (std::uint32_t k = 1; k <= half; ++k) {
            const std::uint32_t decided =
                (depth > k ? depth - k : 0) + (depth + k > job->n ? depth + k - job->n : 0);
            const int undecided = static_cast<int>(job->n - decided);
            if (lag[k] > undecided || -lag[k] > undecided) return false;
        }
        return true;
    }

    // Aperiodic lag k has n-k terms whose final sum shares their parity:
    // an even count must land on 0, an odd count may land on ±1.
    bool feasible_aperiodic(std::uint32_t depth) const {
        for (std::uint32_t k = 1; k < job->n; ++k) {
            const std::uint32_t terms = job->n - k;
            const std::uint32_t decided = depth > k ? depth - k : 0;
            const int reach = static_cast<int>(terms - decided) + (terms % 2 ? 1 : 0);
            if (lag[k] > reach || -lag[k] > reach) return false;
        }
        return true;
    }

    bool feasible(std::uint32_t depth) const {
        return job->mode == SearchMode::CirculantHadamard ? feasible_periodic(depth)
                                                          : feasible_aperiodic(depth);
    }

    void walk(std::uint32_t t) {
        if (t == job->n) {
            SignVector row(a.begin(), a.begin() + job->n);
            const bool genuine = job->mode == SearchMode::CirculantHadamard ? is_hadamard(row)
                                                                            : is_barker(row);
            if (!genuine)
                throw std::logic_error("search: fast-path survivor " + format_sign_vector(row) +
                                       " failed exact re-verification");
            out.hits.push_back(std::move(row));
            return;
        }
        const bool pinned = t < forced.size();
        for (int pick = 0; pick < (pinned ? 1 : 2); ++pick) {
            const std::int8_t v = pinned ? forced[t] : (pick == 0 ? std::int8_t{1} : std::int8_t{-1});
            if (job->weight >= 0) {
                const int pos_after = pos_count + (v > 0 ? 1 : 0);
                const int rest = static_cast<int>(job->n) - static_cast<int>(t) - 1;
                if (pos_after > job->weight || pos_after + rest < job->weight) {
                    ++out.counters.pruned_by_weight;
                    continue;
                }
            }
            ++out.counters.nodes_visited;
            if (++since_flush >= kFlushInterval) flush();
            if (aborted) return;
            apply(t, v, +1);
            if (!job->prune_partial && t + 1 < job->n) {
                walk(t + 1);  // unpruned sweep: feasibility checked at leaves only
            } else if (feasible(t + 1)) {
                walk(t + 1);
            } else if (job->prune_partial) {
                ++out.counters.pruned_by_partial_pacf;
            }
            apply(t, v, -1);
            if (aborted) return;
        }
    }
};

std::vector<std::int8_t> block_prefix(const Job& job, std::uint64_t block) {
    std::vector<std::int8_t> forced(job.lead + job.split_depth, std::int8_t{1});
    for (std::uint32_t j = 0; j < job.split_depth; ++j)
        forced[job.lead + j] =
            ((block >> (job.split_depth - 1 - j)) & 1u) ? std::int8_t{-1} : std::int8_t{1};
    return forced;
}

void advance_frontier_locked(Job& job) {
    bool advanced = false;
    while (job.frontier < job.blocks_total && job.slots[job.frontier]) {
        BlockResult& r = *job.slots[job.frontier];
        for (auto& hit : r.hits) job.merged_hits.push_back(std::move(hit));
        job.merged.nodes_visited += r.counters.nodes_visited;
        job.merged.pruned_by_weight += r.counters.pruned_by_weight;
        job.merged.pruned_by_partial_pacf += r.counters.pruned_by_partial_pacf;
        job.slots[job.frontier].reset();
        ++job.frontier;
        advanced = true;
    }
    if (advanced && !job.options.checkpoint_path.empty() &&
        (job.frontier == job.blocks_total ||
         job.frontier - job.last_checkpoint >= job.checkpoint_stride)) {
        write_checkpoint_locked(job);
        job.last_checkpoint = job.frontier;
    }
}

void worker_main(Job& job) {
    try {
        for (;;) {
            if (job.stop.load(std::memory_order_relaxed)) return;
            const std::uint64_t b = job.next_claim.fetch_add(1, std::memory_order_relaxed);
            if (b >= job.blocks_total) return;
            Walker w;
            w.job = &job;
            w.forced = block_prefix(job, b);
            w.walk(0);
            const bool incomplete = w.aborted;
            w.flush();  // fold the tail; blocks smaller than the flush
                        // interval only meet the budget check here
            if (incomplete) return;  // nothing to merge
            {
                std::lock_guard<std::mutex> lock(job.writer);
                job.slots[b] = std::make_unique<BlockResult>(std::move(w.out));
                advance_frontier_locked(job);
            }
            if (w.aborted) return;  // budget ran out at the block boundary
        }
    } catch (...) {
        std::lock_guard<std::mutex> lock(job.writer);
        if (!job.failure) job.failure = std::current_exception();
        job.stop.store(true, std::memory_order_relaxed);
    }
}

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - t0)
                                          .count());
}

SearchReport assemble_report(const Job& job, bool complete, bool empirical,
                             const std::optional<FilterVerdict>& filter,
                             std::chrono::steady_clock::time_point t0) {
    SearchReport report;
    report.order = job.n;
    report.mode = job.mode;
    report.raw_count = job.merged_hits.size() * (job.negation_quotient ? 2 : 1);
    report.counters = job.merged;
    std::set<SignVector> canon;
    for (const auto& hit : job.merged_hits)
        canon.insert(job.mode == SearchMode::CirculantHadamard ? canonical_form(hit)
                                                               : barker_canonical_form(hit));
    report.survivors.assign(canon.begin(), canon.end());
    if (job.mode == SearchMode::CirculantHadamard) {
        std::set<SignVector> secondary;
        for (const auto& s : report.survivors) secondary.insert(decimation_canonical_form(s));
        report.decimation_classes = secondary.size();
    }
    report.filter = filter;
    report.empirical_confirmation = empirical;
    report.equivalence_group = job.mode == SearchMode::CirculantHadamard
                                   ? "cyclic-shift*negation"
                                   : "negation*reversal*alternating-flip";
    report.complete = complete;
    report.duration_ms = elapsed_ms(t0);
    return report;
}

SearchReport run_job(std::uint32_t n, SearchMode mode, int weight, bool prune_partial,
                     bool negation_quotient, bool empirical,
                     const std::optional<FilterVerdict>& filter, const SearchOptions& options,
                     std::chrono::steady_clock::time_point t0) {
    Job job;
    job.n = n;
    job.mode = mode;
    job.weight = weight;
    job.prune_partial = prune_partial;
    job.negation_quotient = negation_quotient;
    job.lead = mode == SearchMode::Barker ? 1 : 0;
    job.split_depth = std::min(n - job.lead, kMaxSplitDepth);
    job.blocks_total = std::uint64_t{1} << job.split_depth;
    job.options = options;
    job.slots.resize(job.blocks_total);
    job.checkpoint_stride = std::max<std::uint64_t>(1, job.blocks_total / 64);

    if (!options.checkpoint_path.empty()) {
        if (auto seed = load_checkpoint(options.checkpoint_path, n, mode, job.blocks_total)) {
            job.frontier = seed->next_range_start;
            job.merged_hits = std::move(seed->hits);
            job.merged = seed->counters;
            job.next_claim.store(seed->next_range_start, std::memory_order_relaxed);
        }
    }

    const std::uint32_t workers =
        std::max<std::uint32_t>(1, std::min<std::uint32_t>(options.worker_count, 64));
    if (workers == 1) {
        worker_main(job);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t i = 0; i < workers; ++i) pool.emplace_back(worker_main, std::ref(job));
        for (auto& th : pool) th.join();
    }
    if (job.failure) std::rethrow_exception(job.failure);

    if (job.frontier < job.blocks_total) {
        if (!options.checkpoint_path.empty()) {
            std::lock_guard<std::mutex> lock(job.writer);
            write_checkpoint_locked(job);
        }
        SearchReport partial = assemble_report(job, false, empirical, filter, t0);
        throw PartialResultError(
            "search: node budget " + std::to_string(options.node_budget) + " exhausted after " +
                std::to_string(job.nodes_shared.load()) + " nodes (" +
                std::to_string(job.frontier) + " of " + std::to_string(job.blocks_total) +
                " blocks merged)",
            std::move(partial));
    }
    return assemble_report(job, true, empirical, filter, t0);
}

void validate_order(std::uint32_t n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": order must be positive");
    if (n > kMaxSearchOrder)
        throw OutOfScopeError(std::string(what) + ": order " + std::to_string(n) +
                              " exceeds the supported maximum " +
                              std::to_string(kMaxSearchOrder));
}

}  // namespace

FilterVerdict theoretical_filter(std::uint32_t n) {
    if (n < 4)
        throw OutOfScopeError("theoretical_filter: order " + std::to_string(n) +
                              " is below 4; the catalog settles orders 1-3");
    FilterVerdict verdict;
    verdict.order = n;
    const std::uint64_t root = isqrt(n);
    if (root * root != n || root % 2 != 0) {
        verdict.status = FilterStatus::ExcludedShape;
        verdict.reason = std::to_string(n) + " is not of the form 4h^2, which a regular "
                         "Hadamard matrix of order > 1 requires";
        return verdict;
    }
    const std::uint64_t h = root / 2;
    if (h % 2 == 0) {
        verdict.status = FilterStatus::ExcludedParity;
        verdict.reason = "n = 4h^2 with h = " + std::to_string(h) +
                         " even; a circulant instance forces h odd";
        return verdict;
    }
    verdict.status = FilterStatus::Candidate;
    verdict.reason =
        "n = 4h^2 with h = " + std::to_string(h) + " odd; no profile test excludes this order";
    return verdict;
}

SearchReport search_circulant_hadamard(std::uint32_t n, const SearchOptions& options) {
    validate_order(n, "search_circulant_hadamard");
    const auto t0 = std::chrono::steady_clock::now();

    std::optional<FilterVerdict> filter;
    int weight = -1;
    bool prune = false;
    bool empirical = true;
    bool quotient = false;
    if (n >= 4) {
        filter = theoretical_filter(n);
        if (filter->status == FilterStatus::Candidate) {
            const std::uint64_t h = isqrt(n) / 2;
            weight = static_cast<int>(2 * h * h + h);
            prune = true;
            empirical = false;
            quotient = true;
        } else if (!options.confirm_excluded_orders) {
            SearchReport report;
            report.order = n;
            report.mode = SearchMode::CirculantHadamard;
            report.filter = filter;
            report.equivalence_group = "cyclic-shift*negation";
            report.duration_ms = elapsed_ms(t0);
            return report;
        }
        // excluded order with confirmation requested: fall through to the
        // unpruned full sweep
    }
    return run_job(n, SearchMode::CirculantHadamard, weight, prune, quotient, empirical, filter,
                   options, t0);
}

SearchReport search_barker(std::uint32_t n, const SearchOptions& options) {
    validate_order(n, "search_barker");
    const auto t0 = std::chrono::steady_clock::now();
    return run_job(n, SearchMode::Barker, -1, true, true, true, std::nullopt, options, t0);
}

}  // namespace circhad
