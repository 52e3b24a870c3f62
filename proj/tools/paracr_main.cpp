// paracr: classify fundamental gradations, admissible subsets and para-CR
// decompositions of simple Lie algebras and their real forms.
//
//   paracr --input doc.txt
//   paracr --algebra E6 --pi1 1,4,6
//   paracr --algebra A3 --realform "su(2,2)" --pi1 1,2,3 --split "plus {1,3} minus {2}"
//   paracr --tables E6 --format json
//
// Exit status: 0 done, 1 negative verdict under --assert-paracr, 2 input error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "paracr/classify.hpp"
#include "paracr/report_io.hpp"
#include "paracr/spec_doc.hpp"

namespace {

using namespace paracr;

std::string braced(std::string s) {
  if (s.empty() || s.front() != '{')
    s = "{" + s + "}";
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "E6" -> {E6}; "B" -> {B2, ..., B<max_rank>}.
std::vector<AlgebraType> table_targets(const std::string& name, int max_rank) {
  if (name.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (std::string_view("ABCDEFG").find(c) == std::string_view::npos)
      fail("unknown Lie algebra family '" + name + "'");
    const auto f = static_cast<Family>(c);
    std::vector<AlgebraType> out;
    for (int r = 1; r <= max_rank; ++r) {
      AlgebraType t{f, r};
      try {
        t.validate();
      } catch (const InputError&) {
        continue;
      }
      out.push_back(t);
    }
    return out;
  }
  return {AlgebraType::parse(name)};
}

struct Options {
  std::string input;
  std::string algebra, realform, satake, pi1, split, mode;
  std::string format = "text";
  std::string tables;
  std::string catalog_path;
  int max_rank = 8;
  int workers = 1;
  bool all_decompositions = false;
  bool assert_paracr = false;
  bool list_forms = false;
};

int run(const Options& opt) {
  const Format format = parse_format(opt.format);
  SatakeCatalog custom;
  const SatakeCatalog* catalog = &SatakeCatalog::bundled();
  if (!opt.catalog_path.empty()) {
    custom = SatakeCatalog::parse(read_file(opt.catalog_path));
    catalog = &custom;
  }

  if (opt.list_forms) {
    for (const SatakeDiagram& sd : catalog->forms())
      std::cout << sd.algebra().str() << "\t" << sd.name() << "\n";
    return 0;
  }

  EnumerateOptions eo;
  eo.all_decompositions = opt.all_decompositions;
  eo.max_rank = opt.max_rank;
  eo.workers = opt.workers;

  if (!opt.tables.empty()) {
    std::vector<ClassificationTable> tables;
    for (const AlgebraType& t : table_targets(opt.tables, opt.max_rank)) {
      const SatakeDiagram* sd = opt.realform.empty() ? nullptr : &catalog->lookup(opt.realform);
      tables.push_back(summarize(t, sd, enumerate(t, sd, eo)));
    }
    emit_tables(std::cout, tables, format);
    return 0;
  }

  std::string text;
  if (!opt.input.empty()) {
    text = read_file(opt.input);
  } else {
    if (opt.algebra.empty())
      fail("either --input, --algebra or --tables is required");
    text += "algebra " + opt.algebra + "\n";
    if (!opt.realform.empty())
      text += "realform " + opt.realform + "\n";
    if (!opt.satake.empty())
      text += "satake " + opt.satake + "\n";
    if (!opt.pi1.empty())
      text += "pi1 " + braced(opt.pi1) + "\n";
    if (!opt.split.empty())
      text += "split " + opt.split + "\n";
    text += "mode " + (opt.mode.empty() ? std::string(opt.pi1.empty() ? "enumerate" : "classify")
                                        : opt.mode) + "\n";
  }
  const SpecDocument doc = parse_spec(text, *catalog);
  const SatakeDiagram* sd = doc.real_form ? &*doc.real_form : nullptr;

  switch (doc.mode) {
  case Mode::classify: {
    ClassifyRequest req{doc.algebra, doc.real_form, *doc.pi1, doc.decomposition};
    std::vector<ClassificationReport> reports{classify(req)};
    emit_reports(std::cout, reports, format, true);
    return (opt.assert_paracr && !reports.front().paracr_exists) ? 1 : 0;
  }
  case Mode::enumerate: {
    const auto reports = enumerate(doc.algebra, sd, eo);
    emit_reports(std::cout, reports, format, false);
    const bool any = std::any_of(reports.begin(), reports.end(),
                                 [](const ClassificationReport& r) { return r.paracr_exists; });
    return (opt.assert_paracr && !any) ? 1 : 0;
  }
  case Mode::tables: {
    std::vector<ClassificationTable> tables{summarize(doc.algebra, sd, enumerate(doc.algebra, sd, eo))};
    emit_tables(std::cout, tables, format);
    return 0;
  }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible subsets and para-CR decompositions of graded simple Lie algebras"};
  Options opt;
  app.add_option("--input", opt.input, "Input document")->check(CLI::ExistingFile);
  app.add_option("--algebra", opt.algebra, "Algebra, e.g. E6 or B3");
  app.add_option("--realform", opt.realform, "Real form name from the Satake catalog");
  app.add_option("--satake", opt.satake, "Inline diagram: \"black {..} arrows {(i,j),..}\"");
  app.add_option("--pi1", opt.pi1, "Label-one vertices, e.g. 1,4,6");
  app.add_option("--split", opt.split, "Decomposition: \"plus {..} minus {..}\"");
  app.add_option("--mode", opt.mode, "classify, enumerate or tables")
      ->check(CLI::IsMember({"classify", "enumerate", "tables"}));
  app.add_option("--format", opt.format, "text or json");
  app.add_option("--max-rank", opt.max_rank, "Largest rank accepted for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", opt.workers, "Enumeration threads")->check(CLI::PositiveNumber);
  app.add_flag("--all-decompositions", opt.all_decompositions,
               "Keep every decomposition in enumeration reports");
  app.add_flag("--assert-paracr", opt.assert_paracr,
               "Exit with status 1 unless a para-CR decomposition exists");
  app.add_option("--tables", opt.tables, "Regenerate the admissibility tables of an algebra "
                                         "(E6) or family (B)");
  app.add_option("--satake-catalog", opt.catalog_path, "Satake catalog file (default: bundled)")
      ->check(CLI::ExistingFile);
  app.add_flag("--list-forms", opt.list_forms, "List the catalog real forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run(opt);
  } catch (const paracr::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
