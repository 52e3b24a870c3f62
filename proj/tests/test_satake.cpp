#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "paracr/dsl.hpp"
#include "paracr/error.hpp"
#include "paracr/satake.hpp"

using namespace paracr;

namespace {

const SatakeCatalog& cat() { return SatakeCatalog::bundled(); }

// All 0/1 label vectors of real type for sd: unions of white singles and
// whole arrow pairs.
std::vector<VertexSet> real_type_subsets(const SatakeDiagram& sd) {
  std::vector<VertexSet> units;
  for (int v : sd.white().to_vector())
    if (!sd.partner(v))
      units.push_back(VertexSet{v});
  for (const ArrowPair& p : sd.arrows())
    units.push_back(p.vertices());
  std::vector<VertexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << units.size()); ++m) {
    VertexSet s;
    for (std::size_t i = 0; i < units.size(); ++i)
      if ((m >> i) & 1)
        s = s | units[i];
    out.push_back(s);
  }
  return out;
}

} // namespace

TEST_CASE("catalog contains the required real forms") {
  for (const AlgebraType& t : oracle::all_algebras(8)) {
    const SatakeDiagram* sd = cat().find("split " + t.str());
    REQUIRE_MESSAGE(sd != nullptr, t.str());
    CHECK(sd->is_split());
    CHECK(sd->algebra() == t);
  }
  for (const char* name : {"su(2,2)", "su(3,3)", "su(1,4)", "sl(4,R)", "so(3,5)", "so(4,6)",
                           "sp(3,R)", "so*(8)", "so*(10)", "E6 I", "E6 II", "E6 III", "E6 IV"})
    CHECK_MESSAGE(cat().find(name) != nullptr, name);
  // Name matching ignores spaces and underscores.
  CHECK(cat().find("E6_III") == cat().find("E6 III"));
  CHECK(cat().find("splitA3") == cat().find("split A3"));
}

TEST_CASE("catalog examples") {
  const SatakeDiagram& a3 = cat().lookup("split A3");
  CHECK(a3.black().empty());
  CHECK(a3.arrows().empty());

  const SatakeDiagram& su22 = cat().lookup("su(2,2)");
  CHECK(su22.algebra() == AlgebraType{Family::A, 3});
  CHECK(su22.black().empty());
  REQUIRE(su22.arrows().size() == 1);
  CHECK(su22.arrows()[0] == ArrowPair{1, 3});
  CHECK_FALSE(su22.partner(2));
  CHECK(*su22.partner(3) == 1);

  const SatakeDiagram& e6ii = cat().lookup("E6 II");
  CHECK(e6ii.black().empty());
  CHECK(e6ii.arrows() == std::vector<ArrowPair>{{1, 6}, {3, 5}});
  const SatakeDiagram& e6iii = cat().lookup("E6 III");
  CHECK(e6iii.black() == VertexSet{3, 4, 5});
  CHECK(e6iii.arrows() == std::vector<ArrowPair>{{1, 6}});

  const SatakeDiagram& so46 = cat().lookup("so(4,6)");
  CHECK(so46.black().empty());
  CHECK(so46.arrows() == std::vector<ArrowPair>{{4, 5}});
}

TEST_CASE("unknown real form lists the available names") {
  try {
    cat().lookup("su(9,9)");
    FAIL("expected an error");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("unknown real form 'su(9,9)'") != std::string::npos);
    CHECK(msg.find("su(2,2)") != std::string::npos);
    CHECK(msg.find("E6 III") != std::string::npos);
  }
}

TEST_CASE("diagram invariants") {
  const AlgebraType a5{Family::A, 5};
  CHECK_THROWS_AS(SatakeDiagram(a5, VertexSet{2}, {{2, 4}}), InputError);
  CHECK_THROWS_AS(SatakeDiagram(a5, VertexSet{}, {{3, 3}}), InputError);
  CHECK_THROWS_AS(SatakeDiagram(a5, VertexSet{}, {{1, 5}, {1, 4}}), InputError);
  CHECK_THROWS_AS(SatakeDiagram(a5, VertexSet{6}, {}), InputError);
  CHECK_THROWS_AS(SatakeDiagram(a5, VertexSet{}, {{1, 7}}), InputError);
  const SatakeDiagram ok(a5, VertexSet{3}, {{2, 4}, {1, 5}});
  CHECK(ok.arrows() == std::vector<ArrowPair>{{1, 5}, {2, 4}});
  CHECK(ok.white() == VertexSet{1, 2, 4, 5});
  CHECK(ok.arrow_closure(VertexSet{1, 2}) == VertexSet{1, 2, 4, 5});
}

TEST_CASE("every catalog diagram satisfies the invariants") {
  for (const SatakeDiagram& sd : cat().forms()) {
    CAPTURE(sd.name());
    VertexSet used;
    for (const ArrowPair& p : sd.arrows()) {
      CHECK(p.first < p.second);
      CHECK_FALSE(sd.black().contains(p.first));
      CHECK_FALSE(sd.black().contains(p.second));
      CHECK_FALSE(used.intersects(p.vertices()));
      used = used | p.vertices();
    }
    CHECK(sd.black().subset_of(root_system(sd.algebra()).all_vertices()));
  }
}

TEST_CASE("catalog parse errors carry line numbers") {
  try {
    SatakeCatalog::parse("realform x\nalgebra A3\nsatake black {2} arrows {(1,2)}\n");
    FAIL("expected an error");
  } catch (const dsl::ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("touches a black vertex") != std::string::npos);
  }
  try {
    SatakeCatalog::parse("# header\nalgebra A3\n");
    FAIL("expected an error");
  } catch (const dsl::ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(SatakeCatalog::parse("realform x\nalgebra A3\n"), dsl::ParseError);
}

TEST_CASE("check_real_type examples") {
  const SatakeDiagram split = SatakeDiagram::split(AlgebraType{Family::A, 3});
  CHECK(check_real_type(split, LabelVector({1, 0, 2})).ok);

  const RealTypeVerdict pair = check_real_type(cat().lookup("su(2,2)"), LabelVector({1, 0, 0}));
  CHECK_FALSE(pair.ok);
  REQUIRE(pair.pair);
  CHECK(*pair.pair == ArrowPair{1, 3});

  const SatakeDiagram black2(AlgebraType{Family::A, 3}, VertexSet{2}, {});
  const RealTypeVerdict black = check_real_type(black2, LabelVector({0, 1, 0}));
  CHECK_FALSE(black.ok);
  REQUIRE(black.black_vertex);
  CHECK(*black.black_vertex == 2);
  CHECK_FALSE(black.message().empty());
}

TEST_CASE("real_components examples") {
  const SatakeDiagram split = SatakeDiagram::split(AlgebraType{Family::A, 3});
  const RootSystem& a3 = root_system(AlgebraType{Family::A, 3});
  const RealComponentSet s = real_components(split, make_fundamental_gradation(a3, VertexSet{1, 3}));
  CHECK(s.singles == VertexSet{1, 3});
  CHECK(s.pairs.empty());
  CHECK(s.count() == 2);

  const SatakeDiagram& su22 = cat().lookup("su(2,2)");
  const RealComponentSet r = real_components(su22, make_fundamental_gradation(a3, VertexSet{1, 2, 3}));
  CHECK(r.singles == VertexSet{2});
  CHECK(r.pairs == std::vector<ArrowPair>{{1, 3}});
  CHECK(r.count() == 2);

  const RealComponentSet e = real_components(su22, make_gradation(a3, LabelVector({0, 0, 0})));
  CHECK(e.count() == 0);

  CHECK_THROWS_AS(real_components(su22, make_fundamental_gradation(a3, VertexSet{1})), InputError);
  CHECK_THROWS_AS(real_components(split, make_gradation(a3, LabelVector({2, 0, 0}))), InputError);
}

TEST_CASE("real-type monotonicity and component counts over the catalog") {
  for (const SatakeDiagram& sd : cat().forms()) {
    CAPTURE(sd.name());
    const RootSystem& rs = root_system(sd.algebra());
    for (const VertexSet& pi1 : real_type_subsets(sd)) {
      const LabelVector labels = LabelVector::of_subset(rs.rank(), pi1);
      REQUIRE(check_real_type(sd, labels).ok);
      // Zeroing any unpaired vertex or whole arrow pair keeps real type.
      for (int v : pi1.to_vector()) {
        VertexSet smaller = pi1;
        smaller.erase(v);
        if (auto p = sd.partner(v))
          smaller.erase(*p);
        CHECK(check_real_type(sd, LabelVector::of_subset(rs.rank(), smaller)).ok);
      }
      const RealComponentSet c = real_components(sd, make_fundamental_gradation(rs, pi1));
      CHECK(c.singles.size() + 2 * static_cast<int>(c.pairs.size()) == pi1.size());
      VertexSet covered = c.singles;
      for (const ArrowPair& p : c.pairs)
        covered = covered | p.vertices();
      CHECK(covered == pi1);
    }
  }
}
