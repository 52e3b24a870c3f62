// Satake diagrams of real forms: black vertices and the arrow involution on
// white vertices, the real-type test for label vectors, and the real
// irreducible components of g^-1.

#ifndef PARACR_SATAKE_HPP_
#define PARACR_SATAKE_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paracr/grading.hpp"
#include "paracr/rootsys.hpp"
#include "paracr/vertex_set.hpp"

namespace paracr {

struct ArrowPair {
  int first = 0;  // first < second
  int second = 0;
  VertexSet vertices() const { return VertexSet{first, second}; }
  std::string str() const {
    return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
  }
  friend auto operator<=>(const ArrowPair&, const ArrowPair&) = default;
};

class SatakeDiagram {
public:
  // Validates: vertices in range, arrows join distinct white vertices, each
  // vertex in at most one arrow.  Throws InputError otherwise.
  SatakeDiagram(AlgebraType algebra, VertexSet black, std::vector<ArrowPair> arrows,
                std::string name = {});
  // All-white, arrow-free diagram.
  static SatakeDiagram split(AlgebraType algebra);

  const AlgebraType& algebra() const { return algebra_; }
  const VertexSet& black() const { return black_; }
  VertexSet white() const;
  // Sorted by first vertex.
  const std::vector<ArrowPair>& arrows() const { return arrows_; }
  const std::string& name() const { return name_; }
  std::optional<int> partner(int vertex) const;
  bool is_split() const { return black_.empty() && arrows_.empty(); }
  // Smallest set of vertices closed under the arrow involution that contains s.
  VertexSet arrow_closure(const VertexSet& s) const;

  friend bool operator==(const SatakeDiagram& a, const SatakeDiagram& b) {
    return a.algebra_ == b.algebra_ && a.black_ == b.black_ && a.arrows_ == b.arrows_;
  }

private:
  AlgebraType algebra_;
  VertexSet black_;
  std::vector<ArrowPair> arrows_;
  std::string name_;
};

struct RealTypeVerdict {
  bool ok = true;
  std::optional<int> black_vertex;   // black vertex with a nonzero label
  std::optional<ArrowPair> pair;     // arrow pair with unequal labels
  std::string message() const;
};

// Real type: every black vertex has label 0 and arrow-joined vertices share
// a label.  The first violation found (black vertices first, ascending) is
// reported.
RealTypeVerdict check_real_type(const SatakeDiagram& sd, const LabelVector& labels);

struct RealComponentSet {
  VertexSet singles;             // label-1 vertices without an arrow
  std::vector<ArrowPair> pairs;  // arrow pairs with both labels 1
  int count() const { return singles.size() + static_cast<int>(pairs.size()); }
};

// Throws InputError if the labels of g are not of real type for sd, or g is
// not a 0/1 gradation.
RealComponentSet real_components(const SatakeDiagram& sd, const Gradation& g);

class SatakeCatalog {
public:
  // Entries in the statement syntax:
  //   realform <name>
  //   algebra <type>
  //   satake black {...} arrows {(i,j),...}
  // Throws dsl::ParseError.
  static SatakeCatalog parse(std::string_view text);
  // The catalog compiled into the library.
  static const SatakeCatalog& bundled();
  static std::string_view bundled_text();

  // Throws InputError naming the available forms if absent.
  const SatakeDiagram& lookup(std::string_view name) const;
  const SatakeDiagram* find(std::string_view name) const;
  const std::vector<SatakeDiagram>& forms() const { return forms_; }
  std::vector<std::string> names() const;
  std::vector<const SatakeDiagram*> forms_for(const AlgebraType& algebra) const;

private:
  std::vector<SatakeDiagram> forms_;
};

} // namespace paracr

#endif
