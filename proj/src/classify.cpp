#include "paracr/classify.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "paracr/error.hpp"

namespace paracr {

std::string to_string(AdmissibilityReason r) {
  switch (r) {
  case AdmissibilityReason::ok: return "ok";
  case AdmissibilityReason::size: return "size";
  case AdmissibilityReason::root: return "root";
  }
  return "?";
}

AdmissibilityReason admissibility_reason_from_string(const std::string& s) {
  if (s == "ok")
    return AdmissibilityReason::ok;
  if (s == "size")
    return AdmissibilityReason::size;
  if (s == "root")
    return AdmissibilityReason::root;
  fail("unknown admissibility reason '" + s + "'");
}

namespace {

void require_zero_one(const Gradation& g) {
  if (!g.labels().is_zero_one())
    fail("expected the 0/1 gradation of a subset Pi^1");
}

void require_in_range(const RootSystem& rs, const VertexSet& s, const char* what) {
  if (s.max() > rs.rank())
    fail(std::string(what) + " vertex " + std::to_string(s.max()) + " out of range 1.." +
         std::to_string(rs.rank()));
}

int module_dimension(const Gradation& g, const VertexSet& part) {
  int dim = 0;
  for (int v : part.to_vector())
    dim += static_cast<int>(component_roots(g, v).size());
  return dim;
}

} // namespace

AdmissibilityVerdict check_admissible(const Gradation& g) {
  require_zero_one(g);
  const VertexSet pi1 = g.pi1();
  AdmissibilityVerdict v;
  if (pi1.size() < 2) {
    v.reason = AdmissibilityReason::size;
    return v;
  }
  for (const Root& r : g.root_system().positive_roots()) {
    if (r.mass(pi1) != 2)
      continue;
    for (int a : pi1.to_vector())
      if (r.at(a) == 2) {
        v.reason = AdmissibilityReason::root;
        v.witness = r;
        return v;
      }
  }
  v.admissible = true;
  v.reason = AdmissibilityReason::ok;
  return v;
}

AbelianVerdict check_abelian_part(const Gradation& g, const VertexSet& part) {
  require_zero_one(g);
  const VertexSet pi1 = g.pi1();
  if (!part.subset_of(pi1))
    fail("part " + part.str() + " is not contained in Pi^1 = " + pi1.str());
  AbelianVerdict v;
  for (const Root& r : g.root_system().positive_roots())
    if (r.mass(pi1) == 2 && r.mass(part) == 2) {
      v.abelian = false;
      v.witness = r;
      break;
    }
  return v;
}

void validate_decomposition(const Decomposition& dec) {
  if (dec.plus.empty() || dec.minus.empty())
    fail("both parts of a decomposition must be nonempty");
  if (dec.plus.intersects(dec.minus))
    fail("parts " + dec.plus.str() + " and " + dec.minus.str() + " overlap");
}

bool respects_arrows(const SatakeDiagram* sd, const Decomposition& dec) {
  if (!sd)
    return true;
  for (const ArrowPair& p : sd->arrows()) {
    const VertexSet pair = p.vertices();
    if (pair.intersects(dec.plus) && pair.intersects(dec.minus))
      return false;
  }
  return true;
}

namespace {

// Every component of the diagram minus `removed` meets `counted` at most once.
bool separated(const RootSystem& rs, const VertexSet& removed, const VertexSet& counted) {
  for (const VertexSet& comp : rs.components(rs.all_vertices() - removed))
    if ((comp & counted).size() > 1)
      return false;
  return true;
}

} // namespace

bool is_alternate(const RootSystem& rs, const SatakeDiagram* sd, const Decomposition& dec) {
  return respects_arrows(sd, dec) && separated(rs, dec.plus, dec.minus) &&
         separated(rs, dec.minus, dec.plus);
}

std::vector<Decomposition> decompositions(const VertexSet& pi1, const SatakeDiagram* sd,
                                          bool include_swapped) {
  std::vector<VertexSet> units;
  VertexSet seen;
  for (int v : pi1.to_vector()) {
    if (seen.contains(v))
      continue;
    VertexSet unit{v};
    if (sd)
      if (auto p = sd->partner(v); p && pi1.contains(*p))
        unit.insert(*p);
    seen = seen | unit;
    units.push_back(unit);
  }
  std::vector<Decomposition> out;
  const int n = static_cast<int>(units.size());
  if (n < 2)
    return out;
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) {
    if (!include_swapped && !(m & 1u))
      continue;
    Decomposition d;
    for (int i = 0; i < n; ++i) {
      VertexSet& part = ((m >> i) & 1u) ? d.plus : d.minus;
      part = part | units[i];
    }
    out.push_back(d);
  }
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) { return a.plus < b.plus; });
  return out;
}

ClassificationReport classify(const ClassifyRequest& request) {
  request.algebra.validate();
  const RootSystem& rs = root_system(request.algebra);
  const VertexSet pi1 = request.pi1;
  require_in_range(rs, pi1, "Pi^1");
  const SatakeDiagram* sd = request.real_form ? &*request.real_form : nullptr;

  const LabelVector labels = LabelVector::of_subset(rs.rank(), pi1);
  if (sd) {
    if (sd->algebra() != request.algebra)
      fail("real form " + sd->name() + " is a form of " + sd->algebra().str() + ", not " +
           request.algebra.str());
    if (VertexSet black = pi1 & sd->black(); !black.empty())
      fail("Pi^1 contains black vertex " + std::to_string(black.min()));
    if (auto v = check_real_type(*sd, labels); !v.ok)
      fail("Pi^1 = " + pi1.str() + " is not of real type: " + v.message());
  }

  const Gradation g(rs, labels);
  ClassificationReport rep;
  rep.algebra = request.algebra;
  if (sd)
    rep.real_form = sd->name().empty() ? "custom" : sd->name();
  rep.pi1 = pi1;
  rep.admissibility = check_admissible(g);
  rep.depth = g.depth();
  if (!pi1.empty() && depth_by_marks(rs, pi1) != rep.depth)
    throw std::logic_error("depth " + std::to_string(rep.depth) + " of " + pi1.str() +
                           " differs from the Dynkin mark sum");
  rep.flags = gradation_flags(g);
  if (!pi1.empty())
    rep.component_count = static_cast<int>(irreducible_components(g).size());
  if (sd)
    rep.real_component_count = real_components(*sd, g).count();
  rep.g_minus1_dimension = static_cast<int>(g.level(-1).size());

  std::vector<Decomposition> splits;
  if (request.decomposition) {
    const Decomposition& d = *request.decomposition;
    validate_decomposition(d);
    if (d.pi1() != pi1)
      fail("decomposition " + d.plus.str() + " | " + d.minus.str() + " does not cover Pi^1 = " +
           pi1.str());
    if (!respects_arrows(sd, d))
      fail("decomposition separates vertices joined by an arrow");
    splits.push_back(d);
  } else {
    splits = decompositions(pi1, sd);
  }

  for (const Decomposition& d : splits) {
    DecompositionVerdict dv;
    dv.dec = d;
    dv.alternate = is_alternate(rs, sd, d);
    dv.plus = check_abelian_part(g, d.plus);
    dv.minus = check_abelian_part(g, d.minus);
    dv.plus_dimension = module_dimension(g, d.plus);
    dv.minus_dimension = module_dimension(g, d.minus);
    const bool both_abelian = dv.plus.abelian && dv.minus.abelian;
    dv.paracr = rep.admissibility.admissible && both_abelian;
    if ((dv.alternate && rep.admissibility.admissible) != both_abelian)
      throw std::logic_error(request.algebra.str() + " Pi^1 = " + pi1.str() + " split " +
                             d.plus.str() + " | " + d.minus.str() +
                             ": alternate/admissible verdict disagrees with the Abelian test");
    rep.alternate_exists = rep.alternate_exists || dv.alternate;
    rep.paracr_exists = rep.paracr_exists || dv.paracr;
    rep.decompositions.push_back(std::move(dv));
  }
  rep.decompositions_examined = static_cast<int>(splits.size());
  return rep;
}

std::vector<ClassificationReport> enumerate(const AlgebraType& algebra,
                                            const SatakeDiagram* real_form,
                                            const EnumerateOptions& options) {
  algebra.validate();
  if (algebra.rank > options.max_rank)
    fail("rank " + std::to_string(algebra.rank) + " of " + algebra.str() +
         " exceeds the enumeration bound " + std::to_string(options.max_rank) +
         "; raise it with --max-rank");
  if (real_form && real_form->algebra() != algebra)
    fail("real form " + real_form->name() + " does not belong to " + algebra.str());
  const RootSystem& rs = root_system(algebra);

  const VertexSet white = real_form ? real_form->white() : rs.all_vertices();
  std::vector<VertexSet> subsets;
  const std::uint64_t w = white.mask();
  for (std::uint64_t m = w;; m = (m - 1) & w) {
    VertexSet s = VertexSet::from_mask(m);
    if (s.size() >= options.min_size && (!real_form || real_form->arrow_closure(s) == s))
      subsets.push_back(s);
    if (m == 0)
      break;
  }
  std::sort(subsets.begin(), subsets.end());

  std::vector<ClassificationReport> out(subsets.size());
  std::vector<std::exception_ptr> errors(subsets.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < subsets.size(); i += stride) try {
      ClassifyRequest req{algebra, {}, subsets[i], {}};
      if (real_form)
        req.real_form = *real_form;
      ClassificationReport rep = classify(req);
      if (!options.all_decompositions) {
        auto it = std::find_if(rep.decompositions.begin(), rep.decompositions.end(),
                               [](const DecompositionVerdict& d) { return d.paracr; });
        std::vector<DecompositionVerdict> kept;
        if (it != rep.decompositions.end())
          kept.push_back(*it);
        rep.decompositions = std::move(kept);
      }
      out[i] = std::move(rep);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(workers));
  }
  // Report the first failure in enumeration order, independent of scheduling.
  for (const std::exception_ptr& e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

ClassificationTable summarize(const AlgebraType& algebra, const SatakeDiagram* real_form,
                              const std::vector<ClassificationReport>& reports) {
  ClassificationTable t;
  t.algebra = algebra;
  if (real_form)
    t.real_form = real_form->name();
  t.subsets = static_cast<int>(reports.size());
  for (const ClassificationReport& r : reports) {
    if (!r.admissibility.admissible) {
      t.non_admissible.push_back(r.pi1);
      continue;
    }
    t.admissible.push_back(r.pi1);
    if (!r.alternate_exists)
      t.admissible_without_alternate.push_back(r.pi1);
    if (r.paracr_exists)
      t.paracr.push_back(r.pi1);
  }
  return t;
}

} // namespace paracr
