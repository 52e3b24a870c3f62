#include "paracr/satake.hpp"

#include <algorithm>
#include <cctype>

#include "paracr/dsl.hpp"
#include "paracr/error.hpp"

namespace paracr {

namespace detail {
std::string_view bundled_catalog_text(); // generated from data/satake_catalog.txt
}

SatakeDiagram::SatakeDiagram(AlgebraType algebra, VertexSet black, std::vector<ArrowPair> arrows,
                             std::string name)
    : algebra_(algebra), black_(black), arrows_(std::move(arrows)), name_(std::move(name)) {
  algebra_.validate();
  const int l = algebra_.rank;
  if (black_.max() > l)
    fail("black vertex " + std::to_string(black_.max()) + " out of range 1.." + std::to_string(l));
  VertexSet used;
  for (ArrowPair& p : arrows_) {
    if (p.first > p.second)
      std::swap(p.first, p.second);
    if (p.first < 1 || p.second > l)
      fail("arrow " + p.str() + " has a vertex out of range 1.." + std::to_string(l));
    if (p.first == p.second)
      fail("arrow " + p.str() + " joins a vertex to itself");
    if (black_.contains(p.first) || black_.contains(p.second))
      fail("arrow " + p.str() + " touches a black vertex");
    if (used.contains(p.first) || used.contains(p.second))
      fail("arrow " + p.str() + " reuses a vertex already joined by another arrow");
    used = used | p.vertices();
  }
  std::sort(arrows_.begin(), arrows_.end());
}

SatakeDiagram SatakeDiagram::split(AlgebraType algebra) {
  return SatakeDiagram(algebra, {}, {}, "split " + algebra.str());
}

VertexSet SatakeDiagram::white() const { return VertexSet::range(1, algebra_.rank) - black_; }

std::optional<int> SatakeDiagram::partner(int vertex) const {
  for (const ArrowPair& p : arrows_) {
    if (p.first == vertex)
      return p.second;
    if (p.second == vertex)
      return p.first;
  }
  return std::nullopt;
}

VertexSet SatakeDiagram::arrow_closure(const VertexSet& s) const {
  VertexSet out = s;
  for (const ArrowPair& p : arrows_)
    if (s.intersects(p.vertices()))
      out = out | p.vertices();
  return out;
}

std::string RealTypeVerdict::message() const {
  if (black_vertex)
    return "black vertex " + std::to_string(*black_vertex) + " has a nonzero label";
  if (pair)
    return "vertices of arrow " + pair->str() + " have different labels";
  return "real type";
}

RealTypeVerdict check_real_type(const SatakeDiagram& sd, const LabelVector& labels) {
  if (labels.size() != sd.algebra().rank)
    fail("label vector of length " + std::to_string(labels.size()) + " for diagram of " +
         sd.algebra().str());
  RealTypeVerdict v;
  for (int b : sd.black().to_vector())
    if (labels.at(b) != 0) {
      v.ok = false;
      v.black_vertex = b;
      return v;
    }
  for (const ArrowPair& p : sd.arrows())
    if (labels.at(p.first) != labels.at(p.second)) {
      v.ok = false;
      v.pair = p;
      return v;
    }
  return v;
}

RealComponentSet real_components(const SatakeDiagram& sd, const Gradation& g) {
  if (!g.labels().is_zero_one())
    fail("real components require a 0/1 label vector");
  if (auto v = check_real_type(sd, g.labels()); !v.ok)
    fail("label vector is not of real type: " + v.message());
  RealComponentSet out;
  const VertexSet pi1 = g.pi1();
  for (int v : pi1.to_vector())
    if (!sd.partner(v))
      out.singles.insert(v);
  for (const ArrowPair& p : sd.arrows())
    if (p.vertices().subset_of(pi1))
      out.pairs.push_back(p);
  return out;
}

namespace {

std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_')
      out += c;
  return out;
}

struct Entry {
  std::string name;
  int line = 0;
  std::optional<AlgebraType> algebra;
  std::optional<VertexSet> black;
  std::vector<ArrowPair> arrows;
};

} // namespace

SatakeCatalog SatakeCatalog::parse(std::string_view text) {
  SatakeCatalog cat;
  std::optional<Entry> cur;
  auto flush = [&]() {
    if (!cur)
      return;
    if (!cur->algebra)
      throw dsl::ParseError(cur->line, 1, "real form '" + cur->name + "' has no algebra");
    if (!cur->black)
      throw dsl::ParseError(cur->line, 1, "real form '" + cur->name + "' has no satake line");
    try {
      cat.forms_.emplace_back(*cur->algebra, *cur->black, cur->arrows, cur->name);
    } catch (const dsl::ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw dsl::ParseError(cur->line, 1, "real form '" + cur->name + "': " + e.what());
    }
    cur.reset();
  };
  for (const dsl::Statement& st : dsl::split_statements(text)) {
    dsl::Scanner sc(st);
    if (st.keyword == "realform") {
      flush();
      if (st.argument.empty())
        sc.error("expected a real form name");
      if (cat.find(st.argument))
        sc.error("duplicate real form '" + st.argument + "'");
      cur = Entry{st.argument, st.line, {}, {}, {}};
      continue;
    }
    if (!cur)
      sc.error("'" + st.keyword + "' outside a realform entry");
    if (st.keyword == "algebra") {
      try {
        cur->algebra = AlgebraType::parse(st.argument);
      } catch (const InputError& e) {
        sc.error(e.what());
      }
    } else if (st.keyword == "satake") {
      sc.expect_word("black");
      cur->black = sc.read_set();
      sc.expect_word("arrows");
      cur->arrows.clear();
      for (auto [a, b] : sc.read_pairs())
        cur->arrows.push_back({a, b});
      sc.expect_end();
    } else {
      throw dsl::ParseError(st.line, 1, "unknown catalog keyword '" + st.keyword + "'");
    }
  }
  flush();
  return cat;
}

std::string_view SatakeCatalog::bundled_text() { return detail::bundled_catalog_text(); }

const SatakeCatalog& SatakeCatalog::bundled() {
  static const SatakeCatalog cat = parse(bundled_text());
  return cat;
}

const SatakeDiagram* SatakeCatalog::find(std::string_view name) const {
  const std::string key = normalize(name);
  for (const SatakeDiagram& sd : forms_)
    if (normalize(sd.name()) == key)
      return &sd;
  return nullptr;
}

const SatakeDiagram& SatakeCatalog::lookup(std::string_view name) const {
  if (const SatakeDiagram* sd = find(name))
    return *sd;
  std::string msg = "unknown real form '" + std::string(name) + "'; available:";
  for (const SatakeDiagram& sd : forms_)
    msg += " " + sd.name() + ";";
  msg.pop_back();
  fail(msg);
}

std::vector<std::string> SatakeCatalog::names() const {
  std::vector<std::string> out;
  for (const SatakeDiagram& sd : forms_)
    out.push_back(sd.name());
  return out;
}

std::vector<const SatakeDiagram*> SatakeCatalog::forms_for(const AlgebraType& algebra) const {
  std::vector<const SatakeDiagram*> out;
  for (const SatakeDiagram& sd : forms_)
    if (sd.algebra() == algebra)
      out.push_back(&sd);
  return out;
}

} // namespace paracr
