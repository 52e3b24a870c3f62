#include "paracr/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "paracr/error.hpp"

namespace paracr {

void AlgebraType::validate() const {
  bool ok = false;
  switch (family) {
  case Family::A: ok = rank >= 1; break;
  case Family::B: ok = rank >= 2; break;
  case Family::C: ok = rank >= 3; break;
  case Family::D: ok = rank >= 4; break;
  case Family::E: ok = rank >= 6 && rank <= 8; break;
  case Family::F: ok = rank == 4; break;
  case Family::G: ok = rank == 2; break;
  default:
    fail("unknown Lie algebra family");
  }
  if (!ok)
    fail("invalid rank " + std::to_string(rank) + " for family " +
         std::string(1, static_cast<char>(family)) +
         " (allowed: A>=1, B>=2, C>=3, D>=4, E6-E8, F4, G2)");
  if (rank > VertexSet::kMaxVertex)
    fail("rank " + std::to_string(rank) + " exceeds the supported maximum");
}

std::string AlgebraType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

AlgebraType AlgebraType::parse(std::string_view text) {
  if (text.empty())
    fail("empty algebra name");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
    fail("unknown Lie algebra family '" + std::string(1, text[0]) + "'");
  std::string_view digits = text.substr(1);
  if (!digits.empty() && digits.front() == '_')
    digits.remove_prefix(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail("malformed algebra name '" + std::string(text) + "', expected e.g. E6 or B3");
  AlgebraType t{static_cast<Family>(f), std::stoi(std::string(digits))};
  t.validate();
  return t;
}

Root Root::simple(int rank, int vertex) {
  std::vector<int> c(rank, 0);
  c.at(vertex - 1) = 1;
  return Root(std::move(c));
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int k) { return k >= 0; });
}

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int k) { return k == 0; });
}

int Root::mass(const VertexSet& vertices) const {
  int m = 0;
  for (int v : vertices.to_vector())
    if (v <= size())
      m += coeffs_[v - 1];
  return m;
}

VertexSet Root::support() const {
  VertexSet s;
  for (int i = 0; i < size(); ++i)
    if (coeffs_[i] != 0)
      s.insert(i + 1);
  return s;
}

std::string Root::str() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(coeffs_[i]);
  }
  return s + ")";
}

Root Root::operator-() const {
  std::vector<int> c = coeffs_;
  for (int& k : c)
    k = -k;
  return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("root length mismatch");
  std::vector<int> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeffs_[i] + b.coeffs_[i];
  return Root(std::move(c));
}

namespace {

void link(CartanMatrix& m, int i, int j) { // simply-laced edge, 1-based
  m[i - 1][j - 1] = -1;
  m[j - 1][i - 1] = -1;
}

} // namespace

CartanMatrix cartan_matrix(const AlgebraType& algebra) {
  algebra.validate();
  const int l = algebra.rank;
  CartanMatrix m(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    m[i][i] = 2;
  switch (algebra.family) {
  case Family::A:
    for (int i = 1; i < l; ++i)
      link(m, i, i + 1);
    break;
  case Family::B: // alpha_l short
    for (int i = 1; i < l; ++i)
      link(m, i, i + 1);
    m[l - 1][l - 2] = -2;
    break;
  case Family::C: // alpha_l long
    for (int i = 1; i < l; ++i)
      link(m, i, i + 1);
    m[l - 2][l - 1] = -2;
    break;
  case Family::D:
    for (int i = 1; i < l - 1; ++i)
      link(m, i, i + 1);
    link(m, l - 2, l);
    break;
  case Family::E:
    link(m, 1, 3);
    link(m, 2, 4);
    for (int i = 3; i < l; ++i)
      link(m, i, i + 1);
    break;
  case Family::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
    link(m, 1, 2);
    link(m, 2, 3);
    link(m, 3, 4);
    m[2][1] = -2;
    break;
  case Family::G: // alpha_1 short, alpha_2 long
    m[0][1] = -3;
    m[1][0] = -1;
    break;
  }
  return m;
}

RootSystem::RootSystem(AlgebraType algebra)
    : algebra_(algebra), cartan_(cartan_matrix(algebra)) {
  const int l = rank();
  // Closure of the simple roots under the simple reflections
  // s_i(b) = b - <alpha_i^vee, b> alpha_i.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int v = 1; v <= l; ++v) {
    Root r = Root::simple(l, v);
    if (seen.insert(r).second)
      queue.push_back(r);
  }
  while (!queue.empty()) {
    Root b = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      int pairing = 0;
      for (int j = 0; j < l; ++j)
        pairing += cartan_[i][j] * b.coeffs()[j];
      if (pairing == 0)
        continue;
      std::vector<int> c(b.coeffs().begin(), b.coeffs().end());
      c[i] -= pairing;
      Root image(std::move(c));
      if (seen.insert(image).second)
        queue.push_back(std::move(image));
    }
  }
  roots_.assign(seen.begin(), seen.end());
  for (const Root& r : roots_)
    if (r.is_positive())
      positive_.push_back(r);

  highest_ = *std::max_element(positive_.begin(), positive_.end(),
                               [](const Root& a, const Root& b) { return a.height() < b.height(); });
  marks_.assign(highest_.coeffs().begin(), highest_.coeffs().end());
}

bool RootSystem::is_root(const Root& v) const { return index_of(v) >= 0; }

bool RootSystem::is_root(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != rank())
    fail("vector of length " + std::to_string(v.size()) + " tested against a rank-" +
         std::to_string(rank()) + " root system");
  return is_root(Root(std::vector<int>(v.begin(), v.end())));
}

int RootSystem::index_of(const Root& v) const {
  if (v.size() != rank())
    return -1;
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v);
  if (it == roots_.end() || *it != v)
    return -1;
  return static_cast<int>(it - roots_.begin());
}

bool RootSystem::adjacent(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > rank() || j > rank())
    return false;
  return cartan_[i - 1][j - 1] != 0;
}

VertexSet RootSystem::neighbours(int vertex) const {
  VertexSet s;
  for (int j = 1; j <= rank(); ++j)
    if (adjacent(vertex, j))
      s.insert(j);
  return s;
}

std::vector<VertexSet> RootSystem::components(const VertexSet& vertices) const {
  std::vector<VertexSet> out;
  VertexSet left = vertices & all_vertices();
  while (!left.empty()) {
    VertexSet comp{left.min()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.to_vector())
        next = next | (neighbours(v) & left);
      frontier = next - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

RootSystem build_root_system(const AlgebraType& algebra) { return RootSystem(algebra); }

const RootSystem& root_system(const AlgebraType& algebra) {
  static std::mutex mutex;
  static std::map<AlgebraType, std::unique_ptr<const RootSystem>> cache;
  algebra.validate();
  std::lock_guard lock(mutex);
  auto& slot = cache[algebra];
  if (!slot)
    slot = std::make_unique<const RootSystem>(algebra);
  return *slot;
}

} // namespace paracr
