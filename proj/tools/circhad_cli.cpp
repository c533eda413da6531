// circhad: verify circulant Hadamard rows, audit the identity chain behind
// them, search for circulant Hadamard rows and Barker sequences, and export
// the catalog. All work happens behind the C API; this file only parses
// arguments and formats output. JSON goes to stdout and is bit-identical
// across identical invocations; durations and progress go to stderr.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "circhad.h"

namespace {

// CHL_LOG: 0/quiet, 1/info, 2/debug (default: quiet).
int log_level() {
    const char* v = std::getenv("CHL_LOG");
    if (v == nullptr || *v == '\0') return 0;
    const std::string s(v);
    if (s == "debug" || s == "2") return 2;
    if (s == "quiet" || s == "0") return 0;
    return 1;
}

void log_info(const std::string& line) {
    if (log_level() >= 1) std::fprintf(stderr, "circhad: %s\n", line.c_str());
}

int exit_code_for(ch_status status) {
    return status == CH_ERR_INVALID_ARGUMENT ? 2 : 1;
}

int report_failure(ch_status status) {
    std::fprintf(stderr, "circhad: error: %s (%s)\n", ch_last_error(),
                 ch_status_message(status));
    return exit_code_for(status);
}

std::string bracketed_row(const int8_t* row, size_t len) {
    std::string out = "[";
    for (size_t i = 0; i < len; ++i) {
        if (i) out += ", ";
        out += row[i] > 0 ? "1" : "-1";
    }
    return out + "]";
}

std::string compact_row(const int8_t* row, size_t len) {
    std::string out;
    for (size_t i = 0; i < len; ++i) out += row[i] > 0 ? '+' : '-';
    return out;
}

std::string json_row(const int8_t* row, size_t len) {
    std::string out = "[";
    for (size_t i = 0; i < len; ++i) {
        if (i) out += ",";
        out += row[i] > 0 ? "1" : "-1";
    }
    return out + "]";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct ParsedRow {
    std::vector<int8_t> entries;
};

// --row values parse through the C API; a malformed row is a usage error.
int parse_row_arg(const std::string& text, ParsedRow& out) {
    int8_t* row = nullptr;
    size_t len = 0;
    const ch_status st = ch_row_parse(text.c_str(), &row, &len);
    if (st != CH_OK) {
        std::fprintf(stderr, "circhad: bad --row value: %s\n", ch_last_error());
        return 2;
    }
    out.entries.assign(row, row + len);
    ch_row_free(row);
    return 0;
}

int cmd_verify(const std::string& row_text, const std::string& format) {
    ParsedRow row;
    if (int rc = parse_row_arg(row_text, row)) return rc;
    ch_verify_result result;
    const ch_status st = ch_verify_row(row.entries.data(), row.entries.size(), &result);
    if (st != CH_OK) return report_failure(st);

    if (format == "json") {
        std::string profile = "null";
        if (result.has_profile) {
            profile = "{\"h\":" + std::to_string(result.h) +
                      ",\"sum_sign\":" + std::to_string(result.sum_sign) +
                      ",\"positive_count\":" + std::to_string(result.positive_count) +
                      ",\"negative_count\":" + std::to_string(result.negative_count) + "}";
        }
        std::printf("{\"row\":%s,\"is_hadamard\":%s,\"profile\":%s}\n",
                    json_row(row.entries.data(), row.entries.size()).c_str(),
                    result.is_hadamard ? "true" : "false", profile.c_str());
    } else if (format == "csv") {
        std::printf("row,is_hadamard,h,sum_sign,positive_count,negative_count\n");
        if (result.has_profile) {
            std::printf("%s,%d,%u,%d,%u,%u\n",
                        compact_row(row.entries.data(), row.entries.size()).c_str(),
                        result.is_hadamard, result.h, result.sum_sign, result.positive_count,
                        result.negative_count);
        } else {
            std::printf("%s,%d,,,,\n",
                        compact_row(row.entries.data(), row.entries.size()).c_str(),
                        result.is_hadamard);
        }
    } else {
        std::printf("row: %s\n", bracketed_row(row.entries.data(), row.entries.size()).c_str());
        std::printf("is_hadamard: %s\n", result.is_hadamard ? "true" : "false");
        if (result.has_profile) {
            std::printf("profile: h=%u sum_sign=%+d positive_count=%u negative_count=%u\n",
                        result.h, result.sum_sign, result.positive_count,
                        result.negative_count);
        } else {
            std::printf("profile: none\n");
        }
    }
    return 0;
}

int cmd_audit(const std::string& row_text, const std::string& mode, const std::string& format) {
    ParsedRow row;
    if (int rc = parse_row_arg(row_text, row)) return rc;
    ch_audit_report* report = nullptr;
    const int mode_flag = mode == "extended" ? CH_AUDIT_MODE_EXTENDED : CH_AUDIT_MODE_STRICT;
    const ch_status st = ch_audit_row(row.entries.data(), row.entries.size(), mode_flag, &report);
    if (st != CH_OK) return report_failure(st);

    const size_t steps = ch_audit_report_step_count(report);
    if (format == "json") {
        char* json = nullptr;
        const ch_status jst = ch_audit_report_json(report, -1, &json);
        if (jst != CH_OK) {
            ch_audit_report_free(report);
            return report_failure(jst);
        }
        std::printf("%s\n", json);
        ch_string_free(json);
    } else if (format == "csv") {
        std::printf("step_id,verdict,witness\n");
        for (size_t i = 0; i < steps; ++i) {
            const char* id = nullptr;
            const char* verdict = nullptr;
            const char* witness = nullptr;
            ch_audit_report_step(report, i, &id, &verdict, &witness);
            std::printf("%s,%s,%s\n", id, verdict,
                        csv_field(witness ? witness : "").c_str());
        }
    } else {
        std::printf("row: %s\n", bracketed_row(row.entries.data(), row.entries.size()).c_str());
        std::printf("h: %u\n", ch_audit_report_h(report));
        std::printf("mode: %s\n", mode.c_str());
        for (size_t i = 0; i < steps; ++i) {
            const char* id = nullptr;
            const char* verdict = nullptr;
            const char* witness = nullptr;
            ch_audit_report_step(report, i, &id, &verdict, &witness);
            if (witness)
                std::printf("%-14s %s (%s)\n", id, verdict, witness);
            else
                std::printf("%-14s %s\n", id, verdict);
        }
        std::printf("conclusion: %s\n", ch_audit_report_conclusion(report));
    }
    ch_audit_report_free(report);
    return 0;
}

int cmd_catalog(const std::string& format) {
    if (format == "json") {
        char* json = nullptr;
        const ch_status st = ch_catalog_json(-1, &json);
        if (st != CH_OK) return report_failure(st);
        std::printf("%s\n", json);
        ch_string_free(json);
        return 0;
    }
    if (format == "csv") std::printf("name,order,row\n");
    const size_t count = ch_catalog_size();
    for (size_t i = 0; i < count; ++i) {
        char name[8];
        int8_t row[64];
        size_t len = 0;
        const ch_status st = ch_catalog_entry(i, name, row, sizeof(row), &len);
        if (st != CH_OK) return report_failure(st);
        if (format == "csv")
            std::printf("%s,%zu,%s\n", name, len, compact_row(row, len).c_str());
        else
            std::printf("%-4s order %zu  %s\n", name, len, bracketed_row(row, len).c_str());
    }
    return 0;
}

const char* filter_status_name(int status) {
    switch (status) {
        case CH_FILTER_EXCLUDED_SHAPE: return "excluded-shape";
        case CH_FILTER_EXCLUDED_PARITY: return "excluded-parity";
        case CH_FILTER_CANDIDATE: return "candidate";
    }
    return "?";
}

int cmd_filter(uint32_t order, const std::string& format) {
    ch_filter_verdict verdict;
    const ch_status st = ch_theoretical_filter(order, &verdict);
    if (st != CH_OK) return report_failure(st);
    if (format == "json") {
        std::printf("{\"order\":%u,\"status\":\"%s\",\"reason\":\"%s\"}\n", verdict.order,
                    filter_status_name(verdict.status), json_escape(verdict.reason).c_str());
    } else if (format == "csv") {
        std::printf("order,status,reason\n%u,%s,%s\n", verdict.order,
                    filter_status_name(verdict.status), csv_field(verdict.reason).c_str());
    } else {
        std::printf("order %u: %s (%s)\n", verdict.order, filter_status_name(verdict.status),
                    verdict.reason);
    }
    return 0;
}

extern "C" void cli_progress(uint64_t nodes, uint64_t blocks_done, uint64_t blocks_total,
                             uint64_t survivors, void*) {
    std::fprintf(stderr, "circhad: progress nodes=%" PRIu64 " blocks=%" PRIu64 "/%" PRIu64
                         " survivors=%" PRIu64 "\n",
                 nodes, blocks_done, blocks_total, survivors);
}

struct SearchArgs {
    uint32_t order = 0;
    uint32_t workers = 1;
    uint64_t node_budget = 0;
    uint64_t progress_every = 0;
    bool confirm_excluded = false;
    std::string checkpoint;
};

int emit_search_report(const ch_search_report* report, const std::string& format) {
    if (format == "json") {
        char* json = nullptr;
        const ch_status st = ch_search_report_json(report, 0, -1, &json);
        if (st != CH_OK) return report_failure(st);
        std::printf("%s\n", json);
        ch_string_free(json);
        // the certificate body is timing-free; duration lands on stderr
        std::fprintf(stderr, "{\"duration_ms\":%" PRIu64 "}\n",
                     ch_search_report_duration_ms(report));
        return 0;
    }

    const size_t survivors = ch_search_report_survivor_count(report);
    if (format == "csv") {
        std::printf("order,mode,survivor\n");
        for (size_t i = 0; i < survivors; ++i) {
            int8_t row[64];
            size_t len = 0;
            if (ch_search_report_survivor(report, i, row, sizeof(row), &len) == CH_OK)
                std::printf("%u,%s,%s\n", ch_search_report_order(report),
                            ch_search_report_mode(report), compact_row(row, len).c_str());
        }
        std::fprintf(stderr, "circhad: raw_count=%" PRIu64 " survivors=%zu duration_ms=%" PRIu64
                             "\n",
                     ch_search_report_raw_count(report), survivors,
                     ch_search_report_duration_ms(report));
        return 0;
    }

    std::printf("order: %u\n", ch_search_report_order(report));
    std::printf("mode: %s\n", ch_search_report_mode(report));
    ch_filter_verdict verdict;
    if (ch_search_report_filter(report, &verdict) == CH_OK)
        std::printf("filter: %s (%s)\n", filter_status_name(verdict.status), verdict.reason);
    std::printf("raw_count: %" PRIu64 "\n", ch_search_report_raw_count(report));
    std::printf("survivors: %zu\n", survivors);
    for (size_t i = 0; i < survivors; ++i) {
        int8_t row[64];
        size_t len = 0;
        if (ch_search_report_survivor(report, i, row, sizeof(row), &len) == CH_OK)
            std::printf("  %s\n", bracketed_row(row, len).c_str());
    }
    std::printf("nodes_visited: %" PRIu64 "\n", ch_search_report_nodes_visited(report));
    std::printf("pruned_by_weight: %" PRIu64 "\n", ch_search_report_pruned_by_weight(report));
    std::printf("pruned_by_partial_pacf: %" PRIu64 "\n",
                ch_search_report_pruned_by_partial_pacf(report));
    std::printf("complete: %s\n", ch_search_report_complete(report) ? "true" : "false");
    std::printf("duration_ms: %" PRIu64 "\n", ch_search_report_duration_ms(report));
    return 0;
}

int cmd_search(const SearchArgs& args, const std::string& format, bool barker) {
    ch_search_options opts;
    std::memset(&opts, 0, sizeof(opts));
    opts.worker_count = args.workers;
    opts.node_budget = args.node_budget;
    opts.confirm_excluded_orders = args.confirm_excluded ? 1 : 0;
    opts.emit_progress_every = args.progress_every;
    opts.checkpoint_path = args.checkpoint.empty() ? nullptr : args.checkpoint.c_str();
    if (args.progress_every > 0 || log_level() >= 2) {
        opts.progress = cli_progress;
        if (opts.emit_progress_every == 0) opts.emit_progress_every = 1u << 20;
    }
    log_info("searching " + std::string(barker ? "barker length " : "order ") +
             std::to_string(args.order) + " with " + std::to_string(args.workers) + " worker(s)");

    ch_search_report* report = nullptr;
    const ch_status st = barker ? ch_search_barker(args.order, &opts, &report)
                                : ch_search_hadamard(args.order, &opts, &report);
    if (st != CH_OK && st != CH_ERR_RESOURCE_LIMIT) return report_failure(st);

    const int rc = emit_search_report(report, format);
    ch_search_report_free(report);
    if (rc != 0) return rc;
    if (st == CH_ERR_RESOURCE_LIMIT) {
        std::fprintf(stderr, "circhad: partial result: %s\n", ch_last_error());
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant Hadamard toolkit"};
    app.require_subcommand(1);

    std::string format = "human";
    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "json", "csv"}))
            ->capture_default_str();
    };

    std::string row_text;
    std::string mode = "strict";
    SearchArgs search_args;
    SearchArgs barker_args;
    uint32_t filter_order = 0;

    CLI::App* verify = app.add_subcommand("verify", "check a row for the Hadamard property");
    verify->add_option("--row", row_text, "row as 1,-1,... or +-- compact form")->required();
    add_format(verify);

    CLI::App* audit = app.add_subcommand("audit", "replay the identity chain on a row");
    audit->add_option("--row", row_text, "row as 1,-1,... or +-- compact form")->required();
    audit->add_option("--mode", mode, "congruence mode")
        ->check(CLI::IsMember({"strict", "extended"}))
        ->capture_default_str();
    add_format(audit);

    CLI::App* search = app.add_subcommand("search", "search circulant Hadamard rows of an order");
    search->add_option("--order", search_args.order, "order to search")->required();
    search->add_option("--workers", search_args.workers, "parallel workers");
    search->add_flag("--confirm-excluded", search_args.confirm_excluded,
                     "run the full 2^n sweep even when the filter excludes the order");
    search->add_option("--checkpoint", search_args.checkpoint, "checkpoint file to write/resume");
    search->add_option("--node-budget", search_args.node_budget,
                       "abort with a partial result after this many nodes (0 = unlimited)");
    search->add_option("--progress-every", search_args.progress_every,
                       "emit a progress line to stderr every N nodes");
    add_format(search);

    CLI::App* barker = app.add_subcommand("barker", "search Barker sequences of a length");
    barker->add_option("--length", barker_args.order, "length to search")->required();
    barker->add_option("--workers", barker_args.workers, "parallel workers");
    barker->add_option("--checkpoint", barker_args.checkpoint, "checkpoint file to write/resume");
    barker->add_option("--node-budget", barker_args.node_budget,
                       "abort with a partial result after this many nodes (0 = unlimited)");
    barker->add_option("--progress-every", barker_args.progress_every,
                       "emit a progress line to stderr every N nodes");
    add_format(barker);

    CLI::App* catalog = app.add_subcommand("catalog", "list the known circulant Hadamard rows");
    add_format(catalog);

    CLI::App* filter = app.add_subcommand("filter", "classify an order before searching");
    filter->add_option("--order", filter_order, "order to classify")->required();
    add_format(filter);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "circhad: %s\n", e.what());
        std::fprintf(stderr, "%s", app.help().c_str());
        return 2;
    }

    if (verify->parsed()) return cmd_verify(row_text, format);
    if (audit->parsed()) return cmd_audit(row_text, mode, format);
    if (search->parsed()) return cmd_search(search_args, format, false);
    if (barker->parsed()) return cmd_search(barker_args, format, true);
    if (catalog->parsed()) return cmd_catalog(format);
    if (filter->parsed()) return cmd_filter(filter_order, format);
    std::fprintf(stderr, "%s", app.help().c_str());
    return 2;
}
