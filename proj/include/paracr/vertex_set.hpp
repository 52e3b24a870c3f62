// Sets of Dynkin diagram vertices, indexed 1..rank as in Bourbaki numbering.

#ifndef PARACR_VERTEX_SET_HPP_
#define PARACR_VERTEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace paracr {

class VertexSet {
public:
  static constexpr int kMaxVertex = 64;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices)
      insert(v);
  }
  explicit VertexSet(const std::vector<int>& vertices) {
    for (int v : vertices)
      insert(v);
  }

  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    s.mask_ = mask;
    return s;
  }
  // {first, ..., last}; empty when first > last.
  static VertexSet range(int first, int last) {
    VertexSet s;
    for (int v = first; v <= last; ++v)
      s.insert(v);
    return s;
  }

  std::uint64_t mask() const { return mask_; }
  bool contains(int v) const {
    return v >= 1 && v <= kMaxVertex && ((mask_ >> (v - 1)) & 1u);
  }
  void insert(int v) {
    check(v);
    mask_ |= std::uint64_t{1} << (v - 1);
  }
  void erase(int v) {
    check(v);
    mask_ &= ~(std::uint64_t{1} << (v - 1));
  }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  // Largest vertex, 0 for the empty set.
  int max() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
  int min() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

  bool subset_of(const VertexSet& other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(const VertexSet& other) const { return (mask_ & other.mask_) != 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  // "{1,4,6}"
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_vector()) {
      if (!first)
        s += ',';
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return from_mask(a.mask_ | b.mask_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return from_mask(a.mask_ & b.mask_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend bool operator==(VertexSet a, VertexSet b) { return a.mask_ == b.mask_; }
  // Size first, then lexicographic on the sorted vertex list; the order used
  // for every listing the library produces.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0)
      return c;
    return a.to_vector() <=> b.to_vector();
  }

private:
  static void check(int v) {
    if (v < 1 || v > kMaxVertex)
      throw std::out_of_range("vertex index " + std::to_string(v) + " outside 1.." +
                              std::to_string(kMaxVertex));
  }

  std::uint64_t mask_ = 0;
};

} // namespace paracr

#endif
