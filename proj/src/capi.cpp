#include "circhad.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "circhad/audit.hpp"
#include "circhad/canonical.hpp"
#include "circhad/errors.hpp"
#include "circhad/hadamard.hpp"
#include "circhad/json_io.hpp"
#include "circhad/search.hpp"
#include "circhad/sign_vector.hpp"

struct ch_audit_report {
    circhad::AuditReport report;
};

struct ch_search_report {
    circhad::SearchReport report;
};

namespace {

thread_local std::string g_last_error = "no error";

ch_status fail(ch_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Exception-to-status boundary. DimensionError must precede its base
// invalid_argument; PartialResultError is handled by the search wrappers
// before it gets here.
template <typename Fn>
ch_status guard(Fn&& fn) {
    try {
        return fn();
    } catch (const circhad::DimensionError& e) {
        return fail(CH_ERR_DIMENSION, e.what());
    } catch (const circhad::PreconditionError& e) {
        return fail(CH_ERR_PRECONDITION, e.what());
    } catch (const circhad::OutOfScopeError& e) {
        return fail(CH_ERR_OUT_OF_SCOPE, e.what());
    } catch (const circhad::IoError& e) {
        return fail(CH_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CH_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(CH_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CH_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

circhad::SignVector row_from(const int8_t* row, size_t len) {
    if (row == nullptr) throw std::invalid_argument("row is NULL");
    circhad::SignVector out(row, row + len);
    circhad::validate_sign_vector(out);
    return out;
}

ch_status copy_row(const circhad::SignVector& row, int8_t* row_buf, size_t row_cap,
                   size_t* out_len) {
    if (row_buf == nullptr || out_len == nullptr)
        return fail(CH_ERR_INVALID_ARGUMENT, "output buffer is NULL");
    if (row_cap < row.size())
        return fail(CH_ERR_INVALID_ARGUMENT,
                    "row buffer holds " + std::to_string(row_cap) + " entries, need " +
                        std::to_string(row.size()));
    std::memcpy(row_buf, row.data(), row.size());
    *out_len = row.size();
    return CH_OK;
}

void fill_filter(const circhad::FilterVerdict& verdict, ch_filter_verdict* out) {
    out->order = verdict.order;
    switch (verdict.status) {
        case circhad::FilterStatus::ExcludedShape: out->status = CH_FILTER_EXCLUDED_SHAPE; break;
        case circhad::FilterStatus::ExcludedParity: out->status = CH_FILTER_EXCLUDED_PARITY; break;
        case circhad::FilterStatus::Candidate: out->status = CH_FILTER_CANDIDATE; break;
    }
    std::snprintf(out->reason, sizeof(out->reason), "%s", verdict.reason.c_str());
}

ch_status run_search(uint32_t order, const ch_search_options* options, ch_search_report** out,
                     bool barker) {
    if (out == nullptr) return fail(CH_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = nullptr;
    circhad::SearchOptions opts;
    if (options != nullptr) {
        opts.worker_count = options->worker_count ? options->worker_count : 1;
        opts.node_budget = options->node_budget;
        opts.confirm_excluded_orders = options->confirm_excluded_orders != 0;
        opts.emit_progress_every = options->emit_progress_every;
        if (options->checkpoint_path != nullptr) opts.checkpoint_path = options->checkpoint_path;
        if (options->progress != nullptr) {
            ch_progress_fn fn = options->progress;
            void* user_data = options->progress_user_data;
            opts.on_progress = [fn, user_data](const circhad::SearchProgress& p) {
                fn(p.nodes_visited, p.blocks_done, p.blocks_total, p.survivors_so_far, user_data);
            };
        }
    }
    return guard([&]() -> ch_status {
        try {
            auto report = barker ? circhad::search_barker(order, opts)
                                 : circhad::search_circulant_hadamard(order, opts);
            *out = new ch_search_report{std::move(report)};
            return CH_OK;
        } catch (const circhad::PartialResultError& e) {
            *out = new ch_search_report{e.partial};
            return fail(CH_ERR_RESOURCE_LIMIT, e.what());
        }
    });
}

}  // namespace

extern "C" {

const char* ch_status_message(ch_status status) {
    switch (status) {
        case CH_OK: return "ok";
        case CH_ERR_INVALID_ARGUMENT: return "invalid argument";
        case CH_ERR_DIMENSION: return "dimension mismatch";
        case CH_ERR_PRECONDITION: return "precondition violated";
        case CH_ERR_OUT_OF_SCOPE: return "out of scope";
        case CH_ERR_RESOURCE_LIMIT: return "resource limit reached";
        case CH_ERR_IO: return "i/o failure";
        case CH_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ch_last_error(void) { return g_last_error.c_str(); }

const char* ch_version(void) { return "1.0.0"; }

void ch_string_free(char* s) { std::free(s); }

ch_status ch_row_parse(const char* text, int8_t** out_row, size_t* out_len) {
    if (text == nullptr || out_row == nullptr || out_len == nullptr)
        return fail(CH_ERR_INVALID_ARGUMENT, "NULL argument");
    *out_row = nullptr;
    *out_len = 0;
    return guard([&]() -> ch_status {
        const circhad::SignVector row = circhad::parse_sign_vector(text);
        auto* buf = static_cast<int8_t*>(std::malloc(row.size()));
        if (buf == nullptr) return fail(CH_ERR_INTERNAL, "out of memory");
        std::memcpy(buf, row.data(), row.size());
        *out_row = buf;
        *out_len = row.size();
        return CH_OK;
    });
}

void ch_row_free(int8_t* row) { std::free(row); }

ch_status ch_verify_row(const int8_t* row, size_t len, ch_verify_result* out) {
    if (out == nullptr) return fail(CH_ERR_INVALID_ARGUMENT, "out is NULL");
    return guard([&]() -> ch_status {
        const circhad::SignVector r = row_from(row, len);
        std::memset(out, 0, sizeof(*out));
        out->is_hadamard = circhad::is_hadamard(r) ? 1 : 0;
        if (const auto profile = circhad::regular_profile(r)) {
            out->has_profile = 1;
            out->h = profile->h;
            out->sum_sign = profile->sum_sign == circhad::SumSign::Plus ? 1 : -1;
            out->positive_count = profile->positive_count;
            out->negative_count = profile->negative_count;
        }
        return CH_OK;
    });
}

size_t ch_catalog_size(void) { return circhad::catalog().size(); }

ch_status ch_catalog_entry(size_t index, char name_buf[8], int8_t* row_buf, size_t row_cap,
                           size_t* out_len) {
    if (name_buf == nullptr) return fail(CH_ERR_INVALID_ARGUMENT, "name buffer is NULL");
    return guard([&]() -> ch_status {
        const auto& entries = circhad::catalog();
        if (index >= entries.size())
            return fail(CH_ERR_INVALID_ARGUMENT,
                        "catalog index " + std::to_string(index) + " out of range");
        const auto& entry = entries[index];
        std::snprintf(name_buf, 8, "%s", entry.name.c_str());
        return copy_row(entry.row, row_buf, row_cap, out_len);
    });
}

ch_status ch_catalog_json(int indent, char** out_json) {
    if (out_json == nullptr) return fail(CH_ERR_INVALID_ARGUMENT, "out_json is NULL");
    return guard([&]() -> ch_status {
        *out_json = dup_string(circhad::catalog_to_json(indent));
        return *out_json ? CH_OK : fail(CH_ERR_INTERNAL, "out of memory");
    });
}

ch_status ch_audit_row(const int8_t* row, size_t len, int mode, ch_audit_report** out) {
    if (out == nullptr) return fail(CH_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = nullptr;
    if (mode != CH_AUDIT_MODE_STRICT && mode != CH_AUDIT_MODE_EXTENDED)
        return fail(CH_ERR_INVALID_ARGUMENT, "mode must be 0 (strict) or 1 (extended)");
    return guard([&]() -> ch_status {
        const circhad::SignVector r = row_from(row, len);
        auto report = circhad::full_audit(r, mode == CH_AUDIT_MODE_STRICT
                                                 ? circhad::CongruenceMode::Strict
                                                 : circhad::CongruenceMode::Extended);
        *out = new ch_audit_report{std::move(report)};
        return CH_OK;
    });
}

size_t ch_audit_report_step_count(const ch_audit_report* report) {
    return report ? report->report.steps.size() : 0;
}

ch_status ch_audit_report_step(const ch_audit_report* report, size_t index,
                               const char** out_step_id, const char** out_verdict,
                               const char** out_witness) {
    if (report == nullptr) return fail(CH_ERR_INVALID_ARGUMENT, "report is NULL");
    if (index >= report->report.steps.size())
        return fail(CH_ERR_INVALID_ARGUMENT,
                    "step index " + std::to_string(index) + " out of range");
    const auto& step = report->report.steps[index];
    if (out_step_id) *out_step_id = circhad::to_string(step.id);
    if (out_verdict) *out_verdict = circhad::to_string(step.verdict);
    if (out_witness) *out_witness = step.witness ? step.witness->c_str() : nullptr;
    return CH_OK;
}

const char* ch_audit_report_conclusion(const ch_audit_report* report) {
    return report ? report->report.conclusion.c_str() : "";
}

uint32_t ch_audit_report_h(const ch_audit_report* report) {
    return report ? report->report.h : 0;
}

ch_status ch_audit_report_json(const ch_audit_report* report, int indent, char** out_json) {
    if (report == nullptr || out_json == nullptr)
        return fail(CH_ERR_INVALID_ARGUMENT, "NULL argument");
    return guard([&]() -> ch_status {
        *out_json = dup_string(circhad::audit_report_to_json(report->report, indent));
        return *out_json ? CH_OK : fail(CH_ERR_INTERNAL, "out of memory");
    });
}

void ch_audit_report_free(ch_audit_report* report) { delete report; }

ch_status ch_theoretical_filter(uint32_t order, ch_filter_verdict* out) {
    if (out == nullptr) return fail(CH_ERR_INVALID_ARGUMENT, "out is NULL");
    return guard([&]() -> ch_status {
        fill_filter(circhad::theoretical_filter(order), out);
        return CH_OK;
    });
}

ch_status ch_search_hadamard(uint32_t order, const ch_search_options* options,
                             ch_search_report** out) {
    return run_search(order, options, out, false);
}

ch_status ch_search_barker(uint32_t length, const ch_search_options* options,
                           ch_search_report** out) {
    return run_search(length, options, out, true);
}

uint32_t ch_search_report_order(const ch_search_report* report) {
    return report ? report->report.order : 0;
}

const char* ch_search_report_mode(const ch_search_report* report) {
    return report ? circhad::to_string(report->report.mode) : "";
}

uint64_t ch_search_report_raw_count(const ch_search_report* report) {
    return report ? report->report.raw_count : 0;
}

size_t ch_search_report_survivor_count(const ch_search_report* report) {
    return report ? report->report.survivors.size() : 0;
}

ch_status ch_search_report_survivor(const ch_search_report* report, size_t index, int8_t* row_buf,
                                    size_t row_cap, size_t* out_len) {
    if (report == nullptr) return fail(CH_ERR_INVALID_ARGUMENT, "report is NULL");
    if (index >= report->report.survivors.size())
        return fail(CH_ERR_INVALID_ARGUMENT,
                    "survivor index " + std::to_string(index) + " out of range");
    return copy_row(report->report.survivors[index], row_buf, row_cap, out_len);
}

uint64_t ch_search_report_nodes_visited(const ch_search_report* report) {
    return report ? report->report.counters.nodes_visited : 0;
}

uint64_t ch_search_report_pruned_by_weight(const ch_search_report* report) {
    return report ? report->report.counters.pruned_by_weight : 0;
}

uint64_t ch_search_report_pruned_by_partial_pacf(const ch_search_report* report) {
    return report ? report->report.counters.pruned_by_partial_pacf : 0;
}

uint64_t ch_search_report_duration_ms(const ch_search_report* report) {
    return report ? report->report.duration_ms : 0;
}

int ch_search_report_complete(const ch_search_report* report) {
    return report && report->report.complete ? 1 : 0;
}

ch_status ch_search_report_filter(const ch_search_report* report, ch_filter_verdict* out) {
    if (report == nullptr || out == nullptr)
        return fail(CH_ERR_INVALID_ARGUMENT, "NULL argument");
    if (!report->report.filter)
        return fail(CH_ERR_OUT_OF_SCOPE, "report carries no filter verdict");
    fill_filter(*report->report.filter, out);
    return CH_OK;
}

ch_status ch_search_report_json(const ch_search_report* report, int with_metadata, int indent,
                                char** out_json) {
    if (report == nullptr || out_json == nullptr)
        return fail(CH_ERR_INVALID_ARGUMENT, "NULL argument");
    return guard([&]() -> ch_status {
        *out_json = dup_string(
            circhad::search_report_to_json(report->report, with_metadata != 0, indent));
        return *out_json ? CH_OK : fail(CH_ERR_INTERNAL, "out of memory");
    });
}

void ch_search_report_free(ch_search_report* report) { delete report; }

}  // extern "C"
