#include "paracr/grading.hpp"

#include <algorithm>
#include <cstdlib>

#include "paracr/error.hpp"

namespace paracr {

LabelVector::LabelVector(std::vector<int> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] < 0)
      fail("label d_" + std::to_string(i + 1) + " = " + std::to_string(labels_[i]) +
           " is negative");
}

LabelVector LabelVector::of_subset(int rank, const VertexSet& pi1) {
  if (pi1.max() > rank)
    fail("vertex " + std::to_string(pi1.max()) + " out of range 1.." + std::to_string(rank));
  std::vector<int> labels(rank, 0);
  for (int v : pi1.to_vector())
    labels[v - 1] = 1;
  return LabelVector(std::move(labels));
}

bool LabelVector::is_zero_one() const {
  return std::all_of(labels_.begin(), labels_.end(), [](int d) { return d == 0 || d == 1; });
}

VertexSet LabelVector::with_label(int label) const {
  VertexSet s;
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label)
      s.insert(i + 1);
  return s;
}

Gradation::Gradation(const RootSystem& rs, LabelVector labels)
    : rs_(&rs), labels_(std::move(labels)) {
  if (labels_.size() != rs.rank())
    fail("label vector of length " + std::to_string(labels_.size()) + " for a rank-" +
         std::to_string(rs.rank()) + " algebra");
  degrees_.reserve(rs.roots().size());
  for (const Root& r : rs.roots()) {
    int d = degree(r);
    degrees_.push_back(d);
    levels_[d].push_back(r);
    depth_ = std::max(depth_, std::abs(d));
  }
}

int Gradation::degree(const Root& root) const {
  int d = 0;
  for (int i = 0; i < root.size(); ++i)
    d += root.coeffs()[i] * labels_.values()[i];
  return d;
}

const std::vector<Root>& Gradation::level(int degree) const {
  static const std::vector<Root> empty;
  auto it = levels_.find(degree);
  return it == levels_.end() ? empty : it->second;
}

Gradation make_gradation(const RootSystem& rs, const LabelVector& labels) {
  return Gradation(rs, labels);
}

Gradation make_fundamental_gradation(const RootSystem& rs, const VertexSet& pi1) {
  return Gradation(rs, LabelVector::of_subset(rs.rank(), pi1));
}

int depth_by_marks(const RootSystem& rs, const VertexSet& pi1) {
  if (pi1.empty())
    fail("empty Pi^1 defines no gradation of positive depth");
  if (pi1.max() > rs.rank())
    fail("vertex " + std::to_string(pi1.max()) + " out of range 1.." + std::to_string(rs.rank()));
  int k = 0;
  for (int v : pi1.to_vector())
    k += rs.marks()[v - 1];
  return k;
}

GradationFlags gradation_flags(const Gradation& g) {
  GradationFlags f;
  const VertexSet nonzero = g.root_system().all_vertices() - g.pi0();
  f.effective = !nonzero.empty();
  f.fundamental = g.labels().is_zero_one() && !g.pi1().empty();
  if (!f.fundamental)
    return f;
  if (g.depth() >= 2) {
    f.nondegenerate = true;
    return f;
  }
  const RootSystem& rs = g.root_system();
  const auto& minus1 = g.level(-1);
  f.nondegenerate = !minus1.empty() &&
                    std::all_of(minus1.begin(), minus1.end(), [&](const Root& b) {
                      return std::any_of(minus1.begin(), minus1.end(), [&](const Root& c) {
                        Root s = b + c;
                        return s.is_zero() || rs.is_root(s);
                      });
                    });
  return f;
}

bool effective(std::span<const Gradation> factors) {
  return std::all_of(factors.begin(), factors.end(),
                     [](const Gradation& g) { return gradation_flags(g).effective; });
}

std::vector<Root> component_roots(const Gradation& g, int vertex) {
  if (g.labels().at(vertex) != 1)
    fail("vertex " + std::to_string(vertex) + " is not in Pi^1");
  const VertexSet pi1 = g.pi1();
  std::vector<Root> out;
  for (const Root& r : g.level(1))
    if (r.at(vertex) == 1 && r.mass(pi1) == 1)
      out.push_back(r);
  return out;
}

std::vector<IrreducibleComponent> irreducible_components(const Gradation& g) {
  if (!gradation_flags(g).fundamental)
    fail("irreducible components require a fundamental gradation (labels in {0,1}, "
         "Pi^1 nonempty)");
  std::vector<IrreducibleComponent> out;
  const int l = g.root_system().rank();
  for (int v : g.pi1().to_vector())
    out.push_back({v, Root::simple(l, v), component_roots(g, v)});
  return out;
}

} // namespace paracr
