// Root systems of the simple complex Lie algebras A_l ... G_2.
//
// Roots are integer coefficient vectors over the simple roots, numbered as in
// Bourbaki.  Everything is exact integer arithmetic.

#ifndef PARACR_ROOTSYS_HPP_
#define PARACR_ROOTSYS_HPP_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paracr/vertex_set.hpp"

namespace paracr {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct AlgebraType {
  Family family = Family::A;
  int rank = 1;

  // Throws InputError unless the rank is allowed for the family
  // (A>=1, B>=2, C>=3, D>=4, E in {6,7,8}, F=4, G=2).
  void validate() const;
  // "E6", "B3", ...
  std::string str() const;
  // Parses "E6" / "e6" / "E_6"; validates.
  static AlgebraType parse(std::string_view text);

  friend auto operator<=>(const AlgebraType&, const AlgebraType&) = default;
};

// Coefficient vector of a root in the simple-root basis.
class Root {
public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}
  // The simple root alpha_vertex (1-based) of a rank-`rank` system.
  static Root simple(int rank, int vertex);

  std::span<const int> coeffs() const { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  // Coefficient of alpha_vertex, 1-based.
  int at(int vertex) const { return coeffs_.at(vertex - 1); }
  int height() const;
  bool is_positive() const;
  bool is_zero() const;
  // Sum of the coefficients over the given vertices.
  int mass(const VertexSet& vertices) const;
  VertexSet support() const;

  // "(1,2,2,3,2,1)"
  std::string str() const;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b) { return a + (-b); }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

private:
  std::vector<int> coeffs_;
};

using CartanMatrix = std::vector<std::vector<int>>;

// Entry (i, j) is <alpha_i^vee, alpha_j>, 0-based; Bourbaki numbering.
CartanMatrix cartan_matrix(const AlgebraType& algebra);

class RootSystem {
public:
  explicit RootSystem(AlgebraType algebra);

  const AlgebraType& algebra() const { return algebra_; }
  int rank() const { return algebra_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }

  // All roots, sorted lexicographically by coefficient vector.
  std::span<const Root> roots() const { return roots_; }
  // Positive roots, sorted lexicographically.
  std::span<const Root> positive_roots() const { return positive_; }
  const Root& highest_root() const { return highest_; }
  // Dynkin marks (m_1, ..., m_l): the coefficients of the highest root.
  const std::vector<int>& marks() const { return marks_; }

  bool is_root(const Root& v) const;
  // Throws InputError if v.size() != rank.
  bool is_root(std::span<const int> v) const;
  // Position of a root in roots(), or -1.
  int index_of(const Root& v) const;

  // Vertices joined by an edge of the Dynkin diagram (1-based).
  bool adjacent(int i, int j) const;
  VertexSet neighbours(int vertex) const;
  VertexSet all_vertices() const { return VertexSet::range(1, rank()); }
  // Connected components of the diagram restricted to `vertices`.
  std::vector<VertexSet> components(const VertexSet& vertices) const;

private:
  AlgebraType algebra_;
  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  Root highest_;
  std::vector<int> marks_;
};

RootSystem build_root_system(const AlgebraType& algebra);
// Process-wide cache; the reference stays valid for the program lifetime.
const RootSystem& root_system(const AlgebraType& algebra);

inline std::vector<int> dynkin_marks(const RootSystem& rs) { return rs.marks(); }

} // namespace paracr

#endif
