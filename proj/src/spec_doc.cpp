#include "paracr/spec_doc.hpp"

#include <map>
#include <sstream>

namespace paracr {

std::string to_string(Mode m) {
  switch (m) {
  case Mode::classify: return "classify";
  case Mode::enumerate: return "enumerate";
  case Mode::tables: return "tables";
  }
  return "?";
}

namespace {

using dsl::ParseError;
using dsl::Scanner;
using dsl::Statement;

void check_range(const Statement& st, const VertexSet& s, int rank, const char* what) {
  if (s.max() > rank)
    throw ParseError(st.line, st.column,
                     std::string(what) + ": index " + std::to_string(s.max()) +
                         " out of range 1.." + std::to_string(rank));
}

} // namespace

SpecDocument parse_spec(std::string_view text, const SatakeCatalog& catalog) {
  std::map<std::string, Statement> seen;
  std::optional<Statement> satake_st;
  std::vector<std::pair<int, int>> arrows;
  VertexSet black;

  SpecDocument doc;
  std::optional<Statement> algebra_st, pi1_st, split_st, realform_st;
  for (const Statement& st : dsl::split_statements(text)) {
    Scanner sc(st);
    const bool is_form = st.keyword == "realform" || st.keyword == "satake";
    const std::string slot = is_form ? "realform/satake" : st.keyword;
    if (auto it = seen.find(slot); it != seen.end())
      throw ParseError(st.line, 1,
                       "duplicate '" + st.keyword + "' statement (first on line " +
                           std::to_string(it->second.line) + ")");
    if (st.keyword == "algebra") {
      try {
        doc.algebra = AlgebraType::parse(st.argument);
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        sc.error(e.what());
      }
      algebra_st = st;
    } else if (st.keyword == "realform") {
      if (st.argument.empty())
        sc.error("expected a real form name");
      realform_st = st;
    } else if (st.keyword == "satake") {
      sc.expect_word("black");
      black = sc.read_set();
      sc.expect_word("arrows");
      arrows = sc.read_pairs();
      sc.expect_end();
      satake_st = st;
    } else if (st.keyword == "pi1") {
      doc.pi1 = sc.read_set();
      sc.expect_end();
      pi1_st = st;
    } else if (st.keyword == "split") {
      Decomposition d;
      sc.expect_word("plus");
      d.plus = sc.read_set();
      sc.expect_word("minus");
      d.minus = sc.read_set();
      sc.expect_end();
      doc.decomposition = d;
      split_st = st;
    } else if (st.keyword == "mode") {
      if (sc.accept_word("classify"))
        doc.mode = Mode::classify;
      else if (sc.accept_word("enumerate"))
        doc.mode = Mode::enumerate;
      else if (sc.accept_word("tables"))
        doc.mode = Mode::tables;
      else
        sc.error("expected classify, enumerate or tables");
      sc.expect_end();
    } else {
      throw ParseError(st.line, 1, "unknown keyword '" + st.keyword + "'");
    }
    seen.emplace(slot, st);
  }

  if (!algebra_st)
    throw ParseError(1, 1, "missing 'algebra' statement");
  const int rank = doc.algebra.rank;

  if (realform_st) {
    try {
      doc.real_form = catalog.lookup(realform_st->argument);
    } catch (const InputError& e) {
      throw ParseError(realform_st->line, realform_st->column, e.what());
    }
    doc.real_form_name = doc.real_form->name();
    if (doc.real_form->algebra() != doc.algebra)
      throw ParseError(realform_st->line, realform_st->column,
                       "real form " + doc.real_form->name() + " is a form of " +
                           doc.real_form->algebra().str() + ", not " + doc.algebra.str());
  } else if (satake_st) {
    check_range(*satake_st, black, rank, "satake");
    std::vector<ArrowPair> pairs;
    for (auto [a, b] : arrows) {
      if (a > rank || b > rank || a < 1 || b < 1)
        throw ParseError(satake_st->line, satake_st->column,
                         "satake: arrow (" + std::to_string(a) + "," + std::to_string(b) +
                             ") out of range 1.." + std::to_string(rank));
      pairs.push_back({a, b});
    }
    try {
      doc.real_form = SatakeDiagram(doc.algebra, black, pairs);
    } catch (const InputError& e) {
      throw ParseError(satake_st->line, satake_st->column, e.what());
    }
  }

  if (pi1_st) {
    check_range(*pi1_st, *doc.pi1, rank, "pi1");
    if (doc.real_form) {
      if (VertexSet b = *doc.pi1 & doc.real_form->black(); !b.empty())
        throw ParseError(pi1_st->line, pi1_st->column,
                         "pi1: vertex " + std::to_string(b.min()) + " is black");
      if (auto v = check_real_type(*doc.real_form, LabelVector::of_subset(rank, *doc.pi1)); !v.ok)
        throw ParseError(pi1_st->line, pi1_st->column, "pi1: not of real type: " + v.message());
    }
  }
  if (split_st) {
    const Decomposition& d = *doc.decomposition;
    if (!pi1_st)
      throw ParseError(split_st->line, 1, "'split' requires a 'pi1' statement");
    try {
      validate_decomposition(d);
    } catch (const InputError& e) {
      throw ParseError(split_st->line, split_st->column, e.what());
    }
    if (d.pi1() != *doc.pi1)
      throw ParseError(split_st->line, split_st->column,
                       "split: plus and minus must partition pi1 " + doc.pi1->str());
    const SatakeDiagram* sd = doc.real_form ? &*doc.real_form : nullptr;
    if (!respects_arrows(sd, d))
      throw ParseError(split_st->line, split_st->column,
                       "split: vertices joined by an arrow must lie in the same part");
  }
  if (doc.mode == Mode::classify && !doc.pi1)
    throw ParseError(algebra_st->line, 1, "mode classify requires a 'pi1' statement");
  return doc;
}

std::string print_spec(const SpecDocument& doc) {
  std::ostringstream out;
  out << "algebra " << doc.algebra.str() << "\n";
  if (doc.real_form_name) {
    out << "realform " << *doc.real_form_name << "\n";
  } else if (doc.real_form) {
    out << "satake black " << doc.real_form->black().str() << " arrows {";
    bool first = true;
    for (const ArrowPair& p : doc.real_form->arrows()) {
      out << (first ? "" : ",") << p.str();
      first = false;
    }
    out << "}\n";
  }
  if (doc.pi1)
    out << "pi1 " << doc.pi1->str() << "\n";
  if (doc.decomposition)
    out << "split plus " << doc.decomposition->plus.str() << " minus "
        << doc.decomposition->minus.str() << "\n";
  out << "mode " << to_string(doc.mode) << "\n";
  return out.str();
}

} // namespace paracr
