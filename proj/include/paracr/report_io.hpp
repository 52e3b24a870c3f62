// Text and JSON renderings of classification reports and tables.

#ifndef PARACR_REPORT_IO_HPP_
#define PARACR_REPORT_IO_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "paracr/classify.hpp"

namespace paracr {

inline constexpr int kSchemaVersion = 1;

enum class Format { text, json };

// Throws InputError for anything but "text" or "json".
Format parse_format(std::string_view name);

using Json = nlohmann::ordered_json;

Json report_to_json(const ClassificationReport& report);
// Inverse of report_to_json; throws InputError on malformed input.
ClassificationReport report_from_json(const Json& j);
Json table_to_json(const ClassificationTable& table);

// {"schema_version": 1, "reports": [...]}
Json reports_document(const std::vector<ClassificationReport>& reports);
// {"schema_version": 1, "tables": [...]}
Json tables_document(const std::vector<ClassificationTable>& tables);
std::vector<ClassificationReport> reports_from_document(const Json& doc);

// Full per-report block: verdicts, witnesses and one row per decomposition.
void write_report_text(std::ostream& out, const ClassificationReport& report);
// One line per report.
void write_enumeration_text(std::ostream& out, const std::vector<ClassificationReport>& reports);
// Exception-list layout: the non-admissible sets, then the admissible sets
// lacking an alternate decomposition, then the para-CR sets.
void write_table_text(std::ostream& out, const ClassificationTable& table);

void emit_reports(std::ostream& out, const std::vector<ClassificationReport>& reports,
                  Format format, bool detailed);
void emit_tables(std::ostream& out, const std::vector<ClassificationTable>& tables,
                 Format format);

} // namespace paracr

#endif
