#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

#include "circhad.h"

namespace {

std::vector<int8_t> parse(const char* text) {
    int8_t* row = nullptr;
    size_t len = 0;
    REQUIRE(ch_row_parse(text, &row, &len) == CH_OK);
    std::vector<int8_t> out(row, row + len);
    ch_row_free(row);
    return out;
}

}  // namespace

TEST_CASE("version and status strings") {
    CHECK(std::string(ch_version()) == "1.0.0");
    CHECK(ch_status_message(CH_OK) != nullptr);
    CHECK(ch_status_message(CH_ERR_RESOURCE_LIMIT) != nullptr);
    CHECK(ch_last_error() != nullptr);
    ch_string_free(nullptr);
    ch_row_free(nullptr);
}

TEST_CASE("row parsing accepts both syntaxes") {
    CHECK(parse("1,-1,-1,-1") == std::vector<int8_t>{1, -1, -1, -1});
    CHECK(parse("+1,-1,+1,+1") == std::vector<int8_t>{1, -1, 1, 1});
    CHECK(parse("+---") == std::vector<int8_t>{1, -1, -1, -1});
    CHECK(parse("-") == std::vector<int8_t>{-1});

    int8_t* row = nullptr;
    size_t len = 0;
    CHECK(ch_row_parse("1,2,3", &row, &len) == CH_ERR_INVALID_ARGUMENT);
    CHECK(ch_row_parse("", &row, &len) == CH_ERR_INVALID_ARGUMENT);
    CHECK(ch_row_parse("+-x", &row, &len) == CH_ERR_INVALID_ARGUMENT);
    CHECK(ch_row_parse(nullptr, &row, &len) == CH_ERR_INVALID_ARGUMENT);
    CHECK(std::string(ch_last_error()).size() > 0);
}

TEST_CASE("verify reports the hadamard property and the profile") {
    const auto row = parse("1,-1,-1,-1");
    ch_verify_result result;
    REQUIRE(ch_verify_row(row.data(), row.size(), &result) == CH_OK);
    CHECK(result.is_hadamard == 1);
    CHECK(result.has_profile == 1);
    CHECK(result.h == 1);
    CHECK(result.sum_sign == -1);
    CHECK(result.positive_count == 1);
    CHECK(result.negative_count == 3);

    const auto flat = parse("1,1,1,1");
    REQUIRE(ch_verify_row(flat.data(), flat.size(), &result) == CH_OK);
    CHECK(result.is_hadamard == 0);
    CHECK(result.has_profile == 0);

    const auto one = parse("+");
    REQUIRE(ch_verify_row(one.data(), one.size(), &result) == CH_OK);
    CHECK(result.is_hadamard == 1);
    CHECK(result.has_profile == 0);

    int8_t bad[2] = {1, 2};
    CHECK(ch_verify_row(bad, 2, &result) == CH_ERR_INVALID_ARGUMENT);
    CHECK(ch_verify_row(nullptr, 4, &result) == CH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("catalog access") {
    REQUIRE(ch_catalog_size() == 10);
    char name[8];
    int8_t row[8];
    size_t len = 0;
    REQUIRE(ch_catalog_entry(0, name, row, 8, &len) == CH_OK);
    CHECK(std::string(name) == "H1");
    CHECK(len == 1);
    CHECK(row[0] == 1);
    REQUIRE(ch_catalog_entry(2, name, row, 8, &len) == CH_OK);
    CHECK(std::string(name) == "H3");
    CHECK(len == 4);
    CHECK(row[0] == 1);
    CHECK(row[1] == -1);
    REQUIRE(ch_catalog_entry(9, name, row, 8, &len) == CH_OK);
    CHECK(std::string(name) == "H10");

    CHECK(ch_catalog_entry(10, name, row, 8, &len) == CH_ERR_INVALID_ARGUMENT);
    CHECK(ch_catalog_entry(2, name, row, 2, &len) == CH_ERR_INVALID_ARGUMENT);

    char* json = nullptr;
    REQUIRE(ch_catalog_json(-1, &json) == CH_OK);
    REQUIRE(json != nullptr);
    const std::string text(json);
    ch_string_free(json);
    CHECK(text.find("\"H1\"") != std::string::npos);
    CHECK(text.find("\"H10\"") != std::string::npos);
    CHECK(text.find('\n') == std::string::npos);
}

TEST_CASE("audit of a genuine row") {
    const auto row = parse("1,-1,-1,-1");
    ch_audit_report* report = nullptr;
    REQUIRE(ch_audit_row(row.data(), row.size(), CH_AUDIT_MODE_STRICT, &report) == CH_OK);
    REQUIRE(report != nullptr);
    CHECK(ch_audit_report_step_count(report) == 12);
    CHECK(ch_audit_report_h(report) == 1);

    const char* step_id = nullptr;
    const char* verdict = nullptr;
    const char* witness = nullptr;
    REQUIRE(ch_audit_report_step(report, 0, &step_id, &verdict, &witness) == CH_OK);
    CHECK(std::string(step_id) == "acheS");
    CHECK(std::string(verdict) == "holds-exactly");
    CHECK(witness == nullptr);
    REQUIRE(ch_audit_report_step(report, 8, &step_id, &verdict, &witness) == CH_OK);
    CHECK(std::string(step_id) == "C3-integrality");
    CHECK(std::string(verdict) == "integrality-satisfied");
    CHECK(ch_audit_report_step(report, 12, &step_id, &verdict, &witness) ==
          CH_ERR_INVALID_ARGUMENT);

    CHECK(ch_audit_report_conclusion(report) != nullptr);
    CHECK(std::string(ch_audit_report_conclusion(report)).find("hold") != std::string::npos);

    char* json_a = nullptr;
    char* json_b = nullptr;
    REQUIRE(ch_audit_report_json(report, -1, &json_a) == CH_OK);
    REQUIRE(ch_audit_report_json(report, -1, &json_b) == CH_OK);
    CHECK(std::string(json_a) == std::string(json_b));
    CHECK(std::string(json_a).find("\"input_row\"") != std::string::npos);
    ch_string_free(json_a);
    ch_string_free(json_b);
    ch_audit_report_free(report);
}

TEST_CASE("audit rejects bad inputs") {
    const auto flat = parse("1,1,1,1");
    ch_audit_report* report = nullptr;
    CHECK(ch_audit_row(flat.data(), flat.size(), CH_AUDIT_MODE_STRICT, &report) ==
          CH_ERR_PRECONDITION);
    CHECK(report == nullptr);
    CHECK(std::string(ch_last_error()).size() > 0);

    const auto row = parse("1,-1,-1,-1");
    CHECK(ch_audit_row(row.data(), row.size(), 7, &report) == CH_ERR_INVALID_ARGUMENT);
    CHECK(ch_audit_row(nullptr, 4, CH_AUDIT_MODE_STRICT, &report) == CH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("theoretical filter codes") {
    ch_filter_verdict verdict;
    REQUIRE(ch_theoretical_filter(4, &verdict) == CH_OK);
    CHECK(verdict.status == CH_FILTER_CANDIDATE);
    CHECK(verdict.order == 4);
    REQUIRE(ch_theoretical_filter(8, &verdict) == CH_OK);
    CHECK(verdict.status == CH_FILTER_EXCLUDED_SHAPE);
    REQUIRE(ch_theoretical_filter(16, &verdict) == CH_OK);
    CHECK(verdict.status == CH_FILTER_EXCLUDED_PARITY);
    REQUIRE(ch_theoretical_filter(36, &verdict) == CH_OK);
    CHECK(verdict.status == CH_FILTER_CANDIDATE);
    CHECK(std::strlen(verdict.reason) > 0);
    CHECK(ch_theoretical_filter(2, &verdict) == CH_ERR_OUT_OF_SCOPE);
}

TEST_CASE("search at order 4 through the C surface") {
    ch_search_report* report = nullptr;
    REQUIRE(ch_search_hadamard(4, nullptr, &report) == CH_OK);
    REQUIRE(report != nullptr);
    CHECK(ch_search_report_order(report) == 4);
    CHECK(std::string(ch_search_report_mode(report)) == "circulant-hadamard");
    CHECK(ch_search_report_raw_count(report) == 8);
    CHECK(ch_search_report_complete(report) == 1);
    REQUIRE(ch_search_report_survivor_count(report) == 1);

    int8_t row[8];
    size_t len = 0;
    REQUIRE(ch_search_report_survivor(report, 0, row, 8, &len) == CH_OK);
    REQUIRE(len == 4);
    CHECK(row[0] == -1);
    CHECK(row[3] == 1);
    CHECK(ch_search_report_survivor(report, 1, row, 8, &len) == CH_ERR_INVALID_ARGUMENT);
    CHECK(ch_search_report_nodes_visited(report) > 0);

    ch_filter_verdict verdict;
    REQUIRE(ch_search_report_filter(report, &verdict) == CH_OK);
    CHECK(verdict.status == CH_FILTER_CANDIDATE);

    char* json_a = nullptr;
    char* json_b = nullptr;
    REQUIRE(ch_search_report_json(report, 0, -1, &json_a) == CH_OK);
    REQUIRE(ch_search_report_json(report, 0, -1, &json_b) == CH_OK);
    CHECK(std::string(json_a) == std::string(json_b));
    CHECK(std::string(json_a).find("duration_ms") == std::string::npos);
    char* json_meta = nullptr;
    REQUIRE(ch_search_report_json(report, 1, -1, &json_meta) == CH_OK);
    CHECK(std::string(json_meta).find("duration_ms") != std::string::npos);
    ch_string_free(json_a);
    ch_string_free(json_b);
    ch_string_free(json_meta);
    ch_search_report_free(report);
}

TEST_CASE("barker search reports carry no filter") {
    ch_search_report* report = nullptr;
    REQUIRE(ch_search_barker(7, nullptr, &report) == CH_OK);
    CHECK(std::string(ch_search_report_mode(report)) == "barker");
    CHECK(ch_search_report_raw_count(report) > 0);
    ch_filter_verdict verdict;
    CHECK(ch_search_report_filter(report, &verdict) == CH_ERR_OUT_OF_SCOPE);
    ch_search_report_free(report);
}

TEST_CASE("budget exhaustion returns the partial report") {
    ch_search_options options;
    std::memset(&options, 0, sizeof(options));
    options.confirm_excluded_orders = 1;
    options.node_budget = 20000;
    ch_search_report* report = nullptr;
    REQUIRE(ch_search_hadamard(16, &options, &report) == CH_ERR_RESOURCE_LIMIT);
    REQUIRE(report != nullptr);
    CHECK(ch_search_report_complete(report) == 0);
    CHECK(ch_search_report_nodes_visited(report) > 0);
    CHECK(ch_search_report_raw_count(report) == 0);
    CHECK(std::string(ch_last_error()).find("node budget") != std::string::npos);
    ch_search_report_free(report);
}

TEST_CASE("progress callbacks cross the C boundary") {
    struct Tally {
        uint64_t calls = 0;
        uint64_t last_nodes = 0;
    } tally;
    ch_search_options options;
    std::memset(&options, 0, sizeof(options));
    options.confirm_excluded_orders = 1;
    options.emit_progress_every = 8192;
    options.progress = [](uint64_t nodes, uint64_t, uint64_t, uint64_t, void* user) {
        auto* t = static_cast<Tally*>(user);
        ++t->calls;
        t->last_nodes = nodes;
    };
    options.progress_user_data = &tally;
    ch_search_report* report = nullptr;
    REQUIRE(ch_search_hadamard(16, &options, &report) == CH_OK);
    CHECK(tally.calls > 0);
    CHECK(tally.last_nodes > 0);
    ch_search_report_free(report);
}

TEST_CASE("search argument failures") {
    ch_search_report* report = nullptr;
    CHECK(ch_search_hadamard(0, nullptr, &report) == CH_ERR_INVALID_ARGUMENT);
    CHECK(report == nullptr);
    CHECK(ch_search_hadamard(65, nullptr, &report) == CH_ERR_OUT_OF_SCOPE);
    CHECK(ch_search_hadamard(4, nullptr, nullptr) == CH_ERR_INVALID_ARGUMENT);
}
