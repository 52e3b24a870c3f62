#include "paracr/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "paracr/error.hpp"

namespace paracr {

Format parse_format(std::string_view name) {
  if (name == "text")
    return Format::text;
  if (name == "json")
    return Format::json;
  fail("unsupported format '" + std::string(name) + "' (expected text or json)");
}

namespace {

Json set_json(const VertexSet& s) { return Json(s.to_vector()); }

Json root_json(const std::optional<Root>& r) {
  if (!r)
    return nullptr;
  return Json(std::vector<int>(r->coeffs().begin(), r->coeffs().end()));
}

VertexSet set_from(const Json& j) {
  if (!j.is_array())
    fail("expected an array of vertex indices");
  return VertexSet(j.get<std::vector<int>>());
}

std::optional<Root> root_from(const Json& j) {
  if (j.is_null())
    return std::nullopt;
  return Root(j.get<std::vector<int>>());
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(std::string("missing field '") + key + "'");
  return *it;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string sets_line(const std::vector<VertexSet>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i)
      s += ", ";
    s += sets[i].str();
  }
  return s;
}

std::string form_label(const std::optional<std::string>& real_form) {
  return real_form ? *real_form : "complex";
}

} // namespace

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["algebra"] = r.algebra.str();
  j["real_form"] = r.real_form ? Json(*r.real_form) : Json(nullptr);
  j["pi1"] = set_json(r.pi1);
  j["admissible"] = r.admissibility.admissible;
  j["admissibility_reason"] = to_string(r.admissibility.reason);
  j["admissibility_witness"] = root_json(r.admissibility.witness);
  j["depth"] = r.depth;
  j["component_count"] = r.component_count;
  j["real_component_count"] =
      r.real_component_count ? Json(*r.real_component_count) : Json(nullptr);
  j["g_minus1_dimension"] = r.g_minus1_dimension;
  j["flags"] = {{"fundamental", r.flags.fundamental},
                {"effective", r.flags.effective},
                {"nondegenerate", r.flags.nondegenerate}};
  j["decompositions_examined"] = r.decompositions_examined;
  j["alternate_exists"] = r.alternate_exists;
  j["paracr_exists"] = r.paracr_exists;
  Json decs = Json::array();
  for (const DecompositionVerdict& d : r.decompositions) {
    Json dj;
    dj["plus"] = set_json(d.dec.plus);
    dj["minus"] = set_json(d.dec.minus);
    dj["alternate"] = d.alternate;
    dj["plus_abelian"] = d.plus.abelian;
    dj["plus_witness"] = root_json(d.plus.witness);
    dj["minus_abelian"] = d.minus.abelian;
    dj["minus_witness"] = root_json(d.minus.witness);
    dj["plus_dimension"] = d.plus_dimension;
    dj["minus_dimension"] = d.minus_dimension;
    dj["equal_dimensions"] = d.equal_dimensions();
    dj["paracr"] = d.paracr;
    decs.push_back(std::move(dj));
  }
  j["decompositions"] = std::move(decs);
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  try {
    ClassificationReport r;
    r.algebra = AlgebraType::parse(field(j, "algebra").get<std::string>());
    if (const Json& rf = field(j, "real_form"); !rf.is_null())
      r.real_form = rf.get<std::string>();
    r.pi1 = set_from(field(j, "pi1"));
    r.admissibility.admissible = field(j, "admissible").get<bool>();
    r.admissibility.reason =
        admissibility_reason_from_string(field(j, "admissibility_reason").get<std::string>());
    r.admissibility.witness = root_from(field(j, "admissibility_witness"));
    r.depth = field(j, "depth").get<int>();
    r.component_count = field(j, "component_count").get<int>();
    if (const Json& rc = field(j, "real_component_count"); !rc.is_null())
      r.real_component_count = rc.get<int>();
    r.g_minus1_dimension = field(j, "g_minus1_dimension").get<int>();
    const Json& flags = field(j, "flags");
    r.flags.fundamental = field(flags, "fundamental").get<bool>();
    r.flags.effective = field(flags, "effective").get<bool>();
    r.flags.nondegenerate = field(flags, "nondegenerate").get<bool>();
    r.decompositions_examined = field(j, "decompositions_examined").get<int>();
    r.alternate_exists = field(j, "alternate_exists").get<bool>();
    r.paracr_exists = field(j, "paracr_exists").get<bool>();
    for (const Json& dj : field(j, "decompositions")) {
      DecompositionVerdict d;
      d.dec.plus = set_from(field(dj, "plus"));
      d.dec.minus = set_from(field(dj, "minus"));
      d.alternate = field(dj, "alternate").get<bool>();
      d.plus.abelian = field(dj, "plus_abelian").get<bool>();
      d.plus.witness = root_from(field(dj, "plus_witness"));
      d.minus.abelian = field(dj, "minus_abelian").get<bool>();
      d.minus.witness = root_from(field(dj, "minus_witness"));
      d.plus_dimension = field(dj, "plus_dimension").get<int>();
      d.minus_dimension = field(dj, "minus_dimension").get<int>();
      d.paracr = field(dj, "paracr").get<bool>();
      r.decompositions.push_back(std::move(d));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed report: ") + e.what());
  }
}

Json table_to_json(const ClassificationTable& t) {
  auto sets = [](const std::vector<VertexSet>& v) {
    Json a = Json::array();
    for (const VertexSet& s : v)
      a.push_back(set_json(s));
    return a;
  };
  Json j;
  j["algebra"] = t.algebra.str();
  j["real_form"] = t.real_form ? Json(*t.real_form) : Json(nullptr);
  j["subsets"] = t.subsets;
  j["non_admissible"] = sets(t.non_admissible);
  j["admissible"] = sets(t.admissible);
  j["admissible_without_alternate"] = sets(t.admissible_without_alternate);
  j["paracr"] = sets(t.paracr);
  return j;
}

Json reports_document(const std::vector<ClassificationReport>& reports) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["reports"] = Json::array();
  for (const ClassificationReport& r : reports)
    doc["reports"].push_back(report_to_json(r));
  return doc;
}

Json tables_document(const std::vector<ClassificationTable>& tables) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tables"] = Json::array();
  for (const ClassificationTable& t : tables)
    doc["tables"].push_back(table_to_json(t));
  return doc;
}

std::vector<ClassificationReport> reports_from_document(const Json& doc) {
  if (!doc.is_object() || field(doc, "schema_version") != kSchemaVersion)
    fail("unsupported report document (expected schema_version " +
         std::to_string(kSchemaVersion) + ")");
  std::vector<ClassificationReport> out;
  for (const Json& j : field(doc, "reports"))
    out.push_back(report_from_json(j));
  return out;
}

void write_report_text(std::ostream& out, const ClassificationReport& r) {
  auto row = [&](const std::string& key, const std::string& value) {
    out << "  " << std::left << std::setw(22) << key << value << "\n";
  };
  out << r.algebra.str() << " (" << form_label(r.real_form) << ")  Pi^1 = " << r.pi1.str()
      << "\n";
  std::string adm = yes_no(r.admissibility.admissible);
  if (r.admissibility.reason == AdmissibilityReason::size)
    adm += " (fewer than two simple roots)";
  else if (r.admissibility.witness)
    adm += " (witness " + r.admissibility.witness->str() + ")";
  row("admissible", adm);
  row("depth", std::to_string(r.depth));
  row("components", std::to_string(r.component_count));
  if (r.real_component_count)
    row("real components", std::to_string(*r.real_component_count));
  row("dim g^-1", std::to_string(r.g_minus1_dimension));
  std::string flags;
  flags += r.flags.fundamental ? "fundamental" : "not-fundamental";
  flags += r.flags.effective ? " effective" : " not-effective";
  flags += r.flags.nondegenerate ? " nondegenerate" : " degenerate";
  row("flags", flags);
  row("decompositions", std::to_string(r.decompositions_examined) + " examined");
  row("alternate exists", yes_no(r.alternate_exists));
  row("para-CR", yes_no(r.paracr_exists));
  if (r.decompositions.empty())
    return;
  auto abel = [](const AbelianVerdict& v) {
    return v.abelian ? std::string("yes") : "no " + v.witness->str();
  };
  out << "  " << std::left << std::setw(14) << "plus" << std::setw(14) << "minus"
      << std::setw(11) << "alternate" << std::setw(26) << "plus abelian" << std::setw(26)
      << "minus abelian" << std::setw(8) << "dims" << "para-CR\n";
  for (const DecompositionVerdict& d : r.decompositions) {
    out << "  " << std::left << std::setw(14) << d.dec.plus.str() << std::setw(14)
        << d.dec.minus.str() << std::setw(11) << yes_no(d.alternate) << std::setw(26)
        << abel(d.plus) << std::setw(26) << abel(d.minus) << std::setw(8)
        << (std::to_string(d.plus_dimension) + "+" + std::to_string(d.minus_dimension))
        << yes_no(d.paracr) << "\n";
  }
}

void write_enumeration_text(std::ostream& out, const std::vector<ClassificationReport>& reports) {
  for (const ClassificationReport& r : reports) {
    out << std::left << std::setw(20) << r.pi1.str() << std::setw(16)
        << (r.admissibility.admissible ? "admissible" : "not-admissible") << "depth "
        << std::setw(4) << r.depth << "para-CR " << yes_no(r.paracr_exists);
    if (!r.admissibility.admissible && r.admissibility.witness)
      out << "  witness " << r.admissibility.witness->str();
    for (const DecompositionVerdict& d : r.decompositions)
      if (d.paracr) {
        out << "  plus " << d.dec.plus.str() << " minus " << d.dec.minus.str();
        break;
      }
    out << "\n";
  }
}

void write_table_text(std::ostream& out, const ClassificationTable& t) {
  out << t.algebra.str() << " (" << form_label(t.real_form) << "): " << t.subsets
      << " subsets Pi^1 with at least two elements\n";
  if (t.non_admissible.empty())
    out << "  admissible in all cases\n";
  else if (t.admissible.empty())
    out << "  admissible in no case\n";
  else if (t.non_admissible.size() <= t.admissible.size())
    out << "  admissible in all cases except the following " << t.non_admissible.size()
        << ":\n    " << sets_line(t.non_admissible) << "\n";
  else
    out << "  admissible only in the following " << t.admissible.size() << " cases:\n    "
        << sets_line(t.admissible) << "\n";
  if (t.admissible_without_alternate.empty())
    out << "  every admissible Pi^1 has an alternate decomposition\n";
  else
    out << "  admissible without an alternate decomposition ("
        << t.admissible_without_alternate.size() << "):\n    "
        << sets_line(t.admissible_without_alternate) << "\n";
  out << "  para-CR decompositions exist for " << t.paracr.size() << " of "
      << t.admissible.size() << " admissible sets\n";
}

void emit_reports(std::ostream& out, const std::vector<ClassificationReport>& reports,
                  Format format, bool detailed) {
  if (format == Format::json) {
    out << reports_document(reports).dump(2) << "\n";
    return;
  }
  if (detailed) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i)
        out << "\n";
      write_report_text(out, reports[i]);
    }
  } else {
    write_enumeration_text(out, reports);
  }
}

void emit_tables(std::ostream& out, const std::vector<ClassificationTable>& tables,
                 Format format) {
  if (format == Format::json) {
    out << tables_document(tables).dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i)
      out << "\n";
    write_table_text(out, tables[i]);
  }
}

} // namespace paracr
