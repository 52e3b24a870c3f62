#include <doctest.h>

#include <algorithm>
#include <set>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "paracr/error.hpp"
#include "paracr/rootsys.hpp"

using namespace paracr;

namespace {

std::set<std::vector<int>> coeff_set(std::span<const Root> roots) {
  std::set<std::vector<int>> out;
  for (const Root& r : roots)
    out.insert(std::vector<int>(r.coeffs().begin(), r.coeffs().end()));
  return out;
}

} // namespace

TEST_CASE("AlgebraType parsing and rank constraints") {
  CHECK(AlgebraType::parse("E6") == AlgebraType{Family::E, 6});
  CHECK(AlgebraType::parse("e_7") == AlgebraType{Family::E, 7});
  CHECK(AlgebraType::parse("B3").str() == "B3");
  for (const char* bad : {"A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "H2", "", "A", "Ax"})
    CHECK_THROWS_AS(AlgebraType::parse(bad), InputError);
  CHECK_THROWS_AS(build_root_system(AlgebraType{Family::D, 3}), InputError);
}

TEST_CASE("A2 roots") {
  const RootSystem& rs = root_system(AlgebraType{Family::A, 2});
  CHECK(rs.roots().size() == 6);
  CHECK(coeff_set(rs.positive_roots()) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("G2 and E8 root counts") {
  // Frozen from the string oracle and |R| = dim g - rank.
  const RootSystem& g2 = root_system(AlgebraType{Family::G, 2});
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.roots().size() == 12);
  const RootSystem& e8 = root_system(AlgebraType{Family::E, 8});
  CHECK(e8.positive_roots().size() == 120);
  CHECK(e8.roots().size() == 240);
}

TEST_CASE("is_root examples") {
  const RootSystem& a2 = root_system(AlgebraType{Family::A, 2});
  CHECK(a2.is_root(std::vector<int>{1, 1}));
  CHECK_FALSE(a2.is_root(std::vector<int>{2, 1}));
  CHECK_FALSE(a2.is_root(std::vector<int>{0, 0}));
  const RootSystem& g2 = root_system(AlgebraType{Family::G, 2});
  CHECK(g2.is_root(std::vector<int>{3, 2}));
  CHECK(g2.is_root(std::vector<int>{-3, -1}));
  CHECK_THROWS_AS(a2.is_root(std::vector<int>{1, 1, 0}), InputError);
}

TEST_CASE("Dynkin marks") {
  for (int l = 1; l <= 8; ++l)
    CHECK(dynkin_marks(root_system(AlgebraType{Family::A, l})) == std::vector<int>(l, 1));
  CHECK(dynkin_marks(root_system(AlgebraType{Family::B, 3})) == std::vector<int>{1, 2, 2});
  CHECK(dynkin_marks(root_system(AlgebraType{Family::G, 2})) == std::vector<int>{3, 2});
  CHECK(dynkin_marks(root_system(AlgebraType{Family::C, 4}))[3] == 1);
  // Frozen from the string oracle's highest root.
  CHECK(dynkin_marks(root_system(AlgebraType{Family::F, 4})) == std::vector<int>{2, 3, 4, 2});
  CHECK(dynkin_marks(root_system(AlgebraType{Family::E, 6})) ==
        std::vector<int>{1, 2, 2, 3, 2, 1});
  CHECK(dynkin_marks(root_system(AlgebraType{Family::E, 7})) ==
        std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  CHECK(dynkin_marks(root_system(AlgebraType{Family::E, 8})) ==
        std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("positive roots agree with the root-string oracle for every algebra of rank <= 8") {
  for (const AlgebraType& t : oracle::all_algebras(8)) {
    CAPTURE(t.str());
    const RootSystem& rs = root_system(t);
    CHECK(coeff_set(rs.positive_roots()) == oracle::positive_roots_by_strings(t));
    CHECK(static_cast<int>(rs.roots().size()) == oracle::lie_algebra_dimension(t) - t.rank);
  }
}

TEST_CASE("root system invariants") {
  for (const AlgebraType& t : oracle::all_algebras(8)) {
    CAPTURE(t.str());
    const RootSystem& rs = root_system(t);
    CHECK(std::is_sorted(rs.roots().begin(), rs.roots().end()));
    int positive = 0;
    for (const Root& a : rs.roots()) {
      CHECK(rs.is_root(-a));
      CHECK_FALSE(a.is_zero());
      const bool nonneg = std::all_of(a.coeffs().begin(), a.coeffs().end(), [](int c) { return c >= 0; });
      const bool nonpos = std::all_of(a.coeffs().begin(), a.coeffs().end(), [](int c) { return c <= 0; });
      CHECK((nonneg || nonpos));
      positive += nonneg;
      for (int i = 0; i < t.rank; ++i)
        CHECK(rs.highest_root().coeffs()[i] >= a.coeffs()[i]);
    }
    CHECK(positive == static_cast<int>(rs.positive_roots().size()));
    CHECK(2 * positive == static_cast<int>(rs.roots().size()));
    // Sum of marks = height of the highest root (all-ones label vector).
    int sum = 0;
    for (int m : rs.marks()) {
      CHECK(m >= 1);
      sum += m;
    }
    CHECK(rs.highest_root().height() == sum);
  }
}

TEST_CASE("sums of roots are single-signed when they are roots") {
  for (const AlgebraType& t : oracle::all_algebras(6)) {
    const RootSystem& rs = root_system(t);
    for (const Root& a : rs.roots())
      for (const Root& b : rs.roots()) {
        const Root s = a + b;
        if (s.is_zero() || !rs.is_root(s))
          continue;
        const bool nonneg = std::all_of(s.coeffs().begin(), s.coeffs().end(), [](int c) { return c >= 0; });
        const bool nonpos = std::all_of(s.coeffs().begin(), s.coeffs().end(), [](int c) { return c <= 0; });
        CHECK((nonneg || nonpos));
      }
  }
}

TEST_CASE("Bourbaki diagram shapes") {
  const RootSystem& d5 = root_system(AlgebraType{Family::D, 5});
  CHECK(d5.neighbours(3) == VertexSet{2, 4, 5});
  CHECK_FALSE(d5.adjacent(4, 5));
  const RootSystem& e6 = root_system(AlgebraType{Family::E, 6});
  CHECK(e6.neighbours(4) == VertexSet{2, 3, 5});
  CHECK(e6.neighbours(1) == VertexSet{3});
  const auto comps = e6.components(VertexSet{1, 2, 3, 5, 6});
  CHECK(comps.size() == 3);
}

TEST_CASE("cached root systems are shared across threads") {
  const AlgebraType t{Family::E, 7};
  std::vector<const RootSystem*> seen(8, nullptr);
  {
    std::vector<std::jthread> threads;
    for (int i = 0; i < 8; ++i)
      threads.emplace_back([&, i] { seen[i] = &root_system(t); });
  }
  for (const RootSystem* p : seen)
    CHECK(p == seen.front());
  CHECK(seen.front()->roots().size() == 126);
}
