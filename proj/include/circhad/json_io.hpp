// JSON renderings of reports and the catalog. Key order is fixed so that
// identical inputs serialize byte-identically; wall-clock metadata is kept
// out of certificate bodies and only appears when explicitly requested.

#pragma once

#include <string>

#include "circhad/audit.hpp"
#include "circhad/hadamard.hpp"
#include "circhad/search.hpp"

namespace circhad {

// {input_row, h, mode, steps: [{step_id, verdict, witness?}], conclusion}.
// Exact rationals render as "p/q" strings.
std::string audit_report_to_json(const AuditReport& report, int indent = -1);

// Certificate {order, mode, survivors, raw_count, counters, filter?,
// empirical_confirmation, equivalence_group, decimation_classes, complete};
// with_metadata additionally emits duration_ms.
std::string search_report_to_json(const SearchReport& report, bool with_metadata,
                                  int indent = -1);

// [{name, order, first_row}, ...] for the 10 catalog entries.
std::string catalog_to_json(int indent = -1);

}  // namespace circhad
