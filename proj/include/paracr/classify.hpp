// Admissibility of Pi^1, the Abelian test on parts of a decomposition,
// alternate decompositions, and the para-CR verdicts built from them.

#ifndef PARACR_CLASSIFY_HPP_
#define PARACR_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "paracr/grading.hpp"
#include "paracr/rootsys.hpp"
#include "paracr/satake.hpp"
#include "paracr/vertex_set.hpp"

namespace paracr {

enum class AdmissibilityReason { ok, size, root };

std::string to_string(AdmissibilityReason r);
AdmissibilityReason admissibility_reason_from_string(const std::string& s);

struct AdmissibilityVerdict {
  bool admissible = false;
  AdmissibilityReason reason = AdmissibilityReason::size;
  // Lexicographically least root 2*alpha + (Pi^0 part), alpha in Pi^1.
  std::optional<Root> witness;
  friend bool operator==(const AdmissibilityVerdict&, const AdmissibilityVerdict&) = default;
};

// Pi^1 is the label-one set of g, which must be a 0/1 gradation.
// Not admissible with reason `size` when |Pi^1| < 2, reason `root` when some
// root has coefficient 2 at one vertex of Pi^1 and 0 at the others.
AdmissibilityVerdict check_admissible(const Gradation& g);

struct AbelianVerdict {
  bool abelian = true;
  // Lexicographically least root of the form alpha + alpha' + (Pi^0 part),
  // alpha, alpha' in the part.
  std::optional<Root> witness;
  friend bool operator==(const AbelianVerdict&, const AbelianVerdict&) = default;
};

// Whether the sum of g^1 components R(gamma), gamma in `part`, is an Abelian
// subalgebra.  Throws InputError unless part is a subset of Pi^1.
AbelianVerdict check_abelian_part(const Gradation& g, const VertexSet& part);

struct Decomposition {
  VertexSet plus;
  VertexSet minus;
  VertexSet pi1() const { return plus | minus; }
  Decomposition swapped() const { return {minus, plus}; }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Throws InputError unless plus and minus are disjoint and nonempty.
void validate_decomposition(const Decomposition& dec);

// Arrow-equivalent vertices lie in the same part (always true without a diagram).
bool respects_arrows(const SatakeDiagram* sd, const Decomposition& dec);

// Alternate: respects arrows, and each connected component of the diagram
// with the plus vertices deleted holds at most one minus vertex, and vice versa.
bool is_alternate(const RootSystem& rs, const SatakeDiagram* sd, const Decomposition& dec);

// Splits of pi1 into two nonempty parts that keep arrow pairs together.
// Without `include_swapped` only splits whose plus part holds the smallest
// vertex of pi1 are produced.  Order: by plus part (size, then lexicographic).
std::vector<Decomposition> decompositions(const VertexSet& pi1, const SatakeDiagram* sd,
                                          bool include_swapped = false);

struct DecompositionVerdict {
  Decomposition dec;
  bool alternate = false;
  AbelianVerdict plus;
  AbelianVerdict minus;
  int plus_dimension = 0;   // dim g^-1_+ (complex dimension = real dimension)
  int minus_dimension = 0;
  bool paracr = false;      // admissible and both parts Abelian
  bool equal_dimensions() const { return plus_dimension == minus_dimension; }
  friend bool operator==(const DecompositionVerdict&, const DecompositionVerdict&) = default;
};

struct ClassificationReport {
  AlgebraType algebra;
  std::optional<std::string> real_form;  // catalog name or "custom"
  VertexSet pi1;
  AdmissibilityVerdict admissibility;
  int depth = 0;
  int component_count = 0;               // complex: |Pi^1|
  std::optional<int> real_component_count;
  int g_minus1_dimension = 0;            // |R^1|
  GradationFlags flags;
  std::vector<DecompositionVerdict> decompositions;
  int decompositions_examined = 0;
  bool alternate_exists = false;
  bool paracr_exists = false;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ClassifyRequest {
  AlgebraType algebra;
  std::optional<SatakeDiagram> real_form;
  VertexSet pi1;
  std::optional<Decomposition> decomposition;
};

// Classifies one Pi^1.  With a decomposition, only that split is examined;
// otherwise every split (unordered) is.  Throws InputError on a real-type
// violation, a black vertex in Pi^1 or a decomposition not covering Pi^1.
// Throws std::logic_error if a split contradicts
// "alternate and admissible <=> both parts Abelian".
ClassificationReport classify(const ClassifyRequest& request);

struct EnumerateOptions {
  bool all_decompositions = false;  // keep every split in the reports
  int max_rank = 8;
  int workers = 1;
  int min_size = 2;                 // smallest |Pi^1| enumerated
};

// Every Pi^1 of white vertices, closed under arrows, with |Pi^1| >= min_size,
// in VertexSet order.  Without all_decompositions a report keeps only its
// first para-CR split (if any).  Throws InputError if rank > max_rank.
std::vector<ClassificationReport> enumerate(const AlgebraType& algebra,
                                            const SatakeDiagram* real_form,
                                            const EnumerateOptions& options = {});

struct ClassificationTable {
  AlgebraType algebra;
  std::optional<std::string> real_form;
  int subsets = 0;
  std::vector<VertexSet> non_admissible;
  std::vector<VertexSet> admissible;
  std::vector<VertexSet> admissible_without_alternate;
  std::vector<VertexSet> paracr;
};

ClassificationTable summarize(const AlgebraType& algebra, const SatakeDiagram* real_form,
                              const std::vector<ClassificationReport>& reports);

} // namespace paracr

#endif
