#include "circhad/json_io.hpp"

#include "json.hpp"

namespace circhad {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json row_to_json(const SignVector& row) {
    ordered_json out = ordered_json::array();
    for (std::int8_t v : row) out.push_back(static_cast<int>(v));
    return out;
}

ordered_json rational_row_to_json(const std::vector<Rational>& row) {
    ordered_json out = ordered_json::array();
    for (const auto& r : row) out.push_back(r.str());
    return out;
}

const char* to_string(CongruenceMode mode) {
    return mode == CongruenceMode::Strict ? "strict" : "extended";
}

}  // namespace

std::string audit_report_to_json(const AuditReport& report, int indent) {
    ordered_json doc;
    doc["input_row"] = row_to_json(report.input_row);
    doc["h"] = report.h;
    doc["mode"] = to_string(report.mode);
    if (report.synthetic_s) doc["synthetic_s"] = rational_row_to_json(*report.synthetic_s);
    ordered_json steps = ordered_json::array();
    for (const auto& step : report.steps) {
        ordered_json entry;
        entry["step_id"] = circhad::to_string(step.id);
        entry["verdict"] = circhad::to_string(step.verdict);
        if (step.witness) entry["witness"] = *step.witness;
        steps.push_back(std::move(entry));
    }
    doc["steps"] = std::move(steps);
    doc["conclusion"] = report.conclusion;
    return doc.dump(indent);
}

std::string search_report_to_json(const SearchReport& report, bool with_metadata, int indent) {
    ordered_json doc;
    doc["order"] = report.order;
    doc["mode"] = to_string(report.mode);
    ordered_json survivors = ordered_json::array();
    for (const auto& row : report.survivors) survivors.push_back(row_to_json(row));
    doc["survivors"] = std::move(survivors);
    doc["raw_count"] = report.raw_count;
    doc["counters"] = {{"nodes_visited", report.counters.nodes_visited},
                       {"pruned_by_weight", report.counters.pruned_by_weight},
                       {"pruned_by_partial_pacf", report.counters.pruned_by_partial_pacf}};
    if (report.filter) {
        doc["filter"] = {{"order", report.filter->order},
                         {"status", to_string(report.filter->status)},
                         {"reason", report.filter->reason}};
    }
    doc["empirical_confirmation"] = report.empirical_confirmation;
    doc["equivalence_group"] = report.equivalence_group;
    doc["decimation_classes"] = report.decimation_classes;
    doc["complete"] = report.complete;
    if (with_metadata) doc["duration_ms"] = report.duration_ms;
    return doc.dump(indent);
}

std::string catalog_to_json(int indent) {
    ordered_json doc = ordered_json::array();
    for (const auto& entry : catalog()) {
        ordered_json item;
        item["name"] = entry.name;
        item["order"] = entry.row.size();
        item["first_row"] = row_to_json(entry.row);
        doc.push_back(std::move(item));
    }
    return doc.dump(indent);
}

}  // namespace circhad
