// Gradations of a simple complex Lie algebra defined by label vectors.

#ifndef PARACR_GRADING_HPP_
#define PARACR_GRADING_HPP_

#include <map>
#include <span>
#include <vector>

#include "paracr/rootsys.hpp"
#include "paracr/vertex_set.hpp"

namespace paracr {

class LabelVector {
public:
  LabelVector() = default;
  // Throws InputError on a negative label.
  explicit LabelVector(std::vector<int> labels);
  // The 0/1 vector of `pi1` on a rank-`rank` diagram.
  static LabelVector of_subset(int rank, const VertexSet& pi1);

  int size() const { return static_cast<int>(labels_.size()); }
  int at(int vertex) const { return labels_.at(vertex - 1); }
  std::span<const int> values() const { return labels_; }
  // All labels in {0, 1}.
  bool is_zero_one() const;
  // Vertices with the given label.
  VertexSet with_label(int label) const;

  friend bool operator==(const LabelVector&, const LabelVector&) = default;

private:
  std::vector<int> labels_;
};

// The gradation g = sum g^i induced by a label vector.  Grading spaces are
// represented by their root sets; the Cartan subalgebra sits in degree 0.
// Holds a pointer to the root system, which must outlive it (the instances
// returned by root_system() live for the whole program).
class Gradation {
public:
  // Throws InputError if labels.size() != rs.rank().
  Gradation(const RootSystem& rs, LabelVector labels);

  const RootSystem& root_system() const { return *rs_; }
  const LabelVector& labels() const { return labels_; }
  // d(alpha) = sum k_i d_i.
  int degree(const Root& root) const;
  // Degree of rs.roots()[i].
  int degree_at(int i) const { return degrees_[i]; }
  // max |d(alpha)| over all roots.
  int depth() const { return depth_; }
  // R^i, sorted; empty for degrees with no roots.
  const std::vector<Root>& level(int degree) const;
  const std::map<int, std::vector<Root>>& level_sets() const { return levels_; }
  // Pi^1: vertices with label 1.
  VertexSet pi1() const { return labels_.with_label(1); }
  // Pi^0: vertices with label 0.
  VertexSet pi0() const { return labels_.with_label(0); }

private:
  const RootSystem* rs_;
  LabelVector labels_;
  std::vector<int> degrees_;
  std::map<int, std::vector<Root>> levels_;
  int depth_ = 0;
};

Gradation make_gradation(const RootSystem& rs, const LabelVector& labels);
// The fundamental gradation of `pi1`; throws InputError if pi1 is not a
// subset of the vertices of rs.
Gradation make_fundamental_gradation(const RootSystem& rs, const VertexSet& pi1);

// Depth of the fundamental gradation of pi1 as the sum of the Dynkin marks
// over pi1.  Throws InputError for an empty or out-of-range pi1.
int depth_by_marks(const RootSystem& rs, const VertexSet& pi1);

struct GradationFlags {
  bool fundamental = false;
  bool effective = false;
  bool nondegenerate = false;
  friend bool operator==(const GradationFlags&, const GradationFlags&) = default;
};

// fundamental: labels in {0,1} and Pi^1 nonempty.
// effective: Pi^1 nonempty (simple algebra).
// nondegenerate: fundamental, and either depth >= 2 or every root of R^-1
// has a partner in R^-1 whose sum is a root.
GradationFlags gradation_flags(const Gradation& g);

// Effectiveness of a gradation of a semisimple algebra given factor-wise:
// every simple factor needs a nonzero negative part.
bool effective(std::span<const Gradation> factors);

struct IrreducibleComponent {
  int vertex = 0;              // gamma = alpha_vertex in Pi^1
  Root lowest_weight;          // gamma
  std::vector<Root> root_set;  // R(gamma), sorted
  int dimension() const { return static_cast<int>(root_set.size()); }
};

// R(gamma) for gamma in Pi^1: the degree-one roots whose Pi^1 part is exactly
// gamma, i.e. gamma plus a nonnegative combination of Pi^0.
std::vector<Root> component_roots(const Gradation& g, int vertex);

// Irreducible g^0-submodules of g^1, one per vertex of Pi^1, in vertex order.
// Throws InputError if g is not fundamental.
std::vector<IrreducibleComponent> irreducible_components(const Gradation& g);

} // namespace paracr

#endif
