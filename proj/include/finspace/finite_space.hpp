#pragma once

// Finite T0-spaces, stored as partial orders over indexed, labeled elements.
//
// A finite T0-space is the same thing as a finite poset: the minimal open set
// U_x of a point is its down-set {y | y <= x}, and the closure of {x} is its
// up-set {y | y >= x}. Both are precomputed as bit rows, so every order query
// is a bit test.

#include "finspace/bits.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace finspace {

using Element = std::size_t;

/// A set of elements of some parent space. The parent is identified only by
/// its size; operations that take a subset check the size matches.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(Bits members) : members_(std::move(members)) {}

  std::size_t parent_size() const noexcept { return members_.size(); }
  std::size_t size() const noexcept { return members_.count(); }
  bool empty() const noexcept { return members_.none(); }
  bool contains(Element x) const { return x < members_.size() && members_.test(x); }
  const Bits& bits() const noexcept { return members_; }
  std::vector<Element> elements() const { return bit_indices(members_); }

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;

 private:
  Bits members_;
};

class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Builds the order generated by `covers`, each pair (x, y) meaning x < y.
  /// Throws Error on duplicate/unknown labels or a cycle.
  static FiniteSpace from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::string, std::string>>& covers);

  /// Builds the order from an arbitrary relation given as down-set rows
  /// (`below[i]` holds the j with j <= i); the reflexive-transitive closure
  /// is taken and antisymmetry checked.
  static FiniteSpace from_relation(std::vector<std::string> labels, std::vector<Bits> below);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string& label(Element x) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  Element index_of(std::string_view label) const;  // throws on unknown label

  bool leq(Element x, Element y) const { return down_[y].test(x); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// U_x as bits: {y | y <= x}.
  const Bits& down_bits(Element x) const { return down_[check(x)]; }
  /// Closure of {x} as bits: {y | y >= x}.
  const Bits& up_bits(Element x) const { return up_[check(x)]; }

  Bits all() const { return full_bits(size()); }

  /// Longest chain ending at x (minimal elements have height 0).
  std::vector<std::size_t> heights() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b);

 private:
  Element check(Element x) const;
  void index_labels();

  std::vector<std::string> labels_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  std::unordered_map<std::string, Element> index_;
};

/// U_x = {y | y <= x}.
ElementSubset minimal_open(const FiniteSpace& space, Element x);
/// closure({x}) = {y | y >= x}.
ElementSubset closure(const FiniteSpace& space, Element x);

FiniteSpace opposite(const FiniteSpace& space);

/// Induced order on `subset`; labels carry over. Throws on an empty subset.
FiniteSpace subspace(const FiniteSpace& space, const ElementSubset& subset);
/// Same as subspace() but also accepts the empty set.
FiniteSpace restrict_to(const FiniteSpace& space, const Bits& mask);

/// Cover relation (x, y) with x < y and nothing strictly between.
std::vector<std::pair<Element, Element>> hasse_edges(const FiniteSpace& space);

/// Deterministic topological order: x < y implies x comes first, ties by index.
std::vector<Element> linear_extension(const FiniteSpace& space);

/// An order isomorphism `a -> b` (result[i] is the image of element i of a),
/// or nullopt.
std::optional<std::vector<Element>> is_isomorphic(const FiniteSpace& a, const FiniteSpace& b);

/// Isomorphism-invariant hash: height profile plus sorted degree signatures.
std::size_t fingerprint(const FiniteSpace& space);

/// Renames every element through `rename` (must stay injective).
template <typename F>
FiniteSpace relabel(const FiniteSpace& space, F&& rename) {
  std::vector<std::string> labels;
  std::vector<Bits> below;
  labels.reserve(space.size());
  for (Element x = 0; x < space.size(); ++x) {
    labels.push_back(rename(space.label(x)));
    below.push_back(space.down_bits(x));
  }
  return FiniteSpace::from_relation(std::move(labels), std::move(below));
}

}  // namespace finspace
