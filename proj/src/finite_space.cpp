#include "finspace/finite_space.hpp"

#include "finspace/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <tuple>

namespace finspace {

namespace {

bool valid_label(const std::string& label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' || c == '{' || c == '}' ||
           c == ',';
  });
}

}  // namespace

FiniteSpace FiniteSpace::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::string, std::string>>& covers) {
  FiniteSpace tmp;
  tmp.labels_ = labels;
  tmp.index_labels();
  std::vector<Bits> below(labels.size(), Bits(labels.size()));
  for (const auto& [lo, hi] : covers) {
    auto a = tmp.find(lo);
    auto b = tmp.find(hi);
    if (!a) throw Error("unknown label in cover: " + lo);
    if (!b) throw Error("unknown label in cover: " + hi);
    below[*b].set(*a);
  }
  return from_relation(std::move(labels), std::move(below));
}

FiniteSpace FiniteSpace::from_relation(std::vector<std::string> labels, std::vector<Bits> below) {
  const std::size_t n = labels.size();
  if (below.size() != n) throw Error("relation size does not match label count");
  FiniteSpace space;
  space.labels_ = std::move(labels);
  space.index_labels();
  for (Element i = 0; i < n; ++i) {
    if (below[i].size() != n) throw Error("relation row has wrong width");
    below[i].set(i);
  }
  // Warshall: whenever k <= i, everything below k is below i.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (i != k && below[i].test(k)) below[i] |= below[k];
  for (Element i = 0; i < n; ++i)
    for (auto j = below[i].find_first(); j != Bits::npos; j = below[i].find_next(j))
      if (j != i && below[j].test(i))
        throw Error("cycle detected between " + space.labels_[i] + " and " + space.labels_[j] +
                    " (not a T0 order)");
  space.up_.assign(n, Bits(n));
  for (Element i = 0; i < n; ++i)
    for (auto j = below[i].find_first(); j != Bits::npos; j = below[i].find_next(j))
      space.up_[j].set(i);
  space.down_ = std::move(below);
  return space;
}

void FiniteSpace::index_labels() {
  index_.clear();
  index_.reserve(labels_.size());
  for (Element i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i])) throw Error("invalid label '" + labels_[i] + "'");
    if (!index_.emplace(labels_[i], i).second) throw Error("duplicate label: " + labels_[i]);
  }
}

Element FiniteSpace::check(Element x) const {
  if (x >= size()) throw Error("element index " + std::to_string(x) + " out of range");
  return x;
}

const std::string& FiniteSpace::label(Element x) const { return labels_[check(x)]; }

std::optional<Element> FiniteSpace::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element FiniteSpace::index_of(std::string_view label) const {
  auto x = find(label);
  if (!x) throw Error("unknown element: " + std::string(label));
  return *x;
}

std::vector<std::size_t> FiniteSpace::heights() const {
  std::vector<std::size_t> h(size(), 0);
  for (Element x : linear_extension(*this))
    for (auto y = down_[x].find_first(); y != Bits::npos; y = down_[x].find_next(y))
      if (y != x) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> map(a.size());
  for (Element i = 0; i < a.size(); ++i) {
    auto j = b.find(a.label(i));
    if (!j) return false;
    map[i] = *j;
  }
  for (Element i = 0; i < a.size(); ++i)
    for (Element j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(map[i], map[j])) return false;
  return true;
}

ElementSubset minimal_open(const FiniteSpace& space, Element x) {
  return ElementSubset(space.down_bits(x));
}

ElementSubset closure(const FiniteSpace& space, Element x) { return ElementSubset(space.up_bits(x)); }

FiniteSpace opposite(const FiniteSpace& space) {
  std::vector<Bits> below;
  below.reserve(space.size());
  for (Element x = 0; x < space.size(); ++x) below.push_back(space.up_bits(x));
  return FiniteSpace::from_relation(space.labels(), std::move(below));
}

FiniteSpace restrict_to(const FiniteSpace& space, const Bits& mask) {
  if (mask.size() != space.size()) throw Error("subset belongs to a different space");
  const auto keep = bit_indices(mask);
  std::vector<std::string> labels;
  std::vector<Bits> below;
  labels.reserve(keep.size());
  for (Element x : keep) {
    labels.push_back(space.label(x));
    Bits row(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (space.leq(keep[j], x)) row.set(j);
    below.push_back(std::move(row));
  }
  return FiniteSpace::from_relation(std::move(labels), std::move(below));
}

FiniteSpace subspace(const FiniteSpace& space, const ElementSubset& subset) {
  if (subset.empty()) throw Error("subspace of the empty set");
  return restrict_to(space, subset.bits());
}

std::vector<std::pair<Element, Element>> hasse_edges(const FiniteSpace& space) {
  std::vector<std::pair<Element, Element>> edges;
  for (Element y = 0; y < space.size(); ++y) {
    Bits strict = space.down_bits(y);
    strict.reset(y);
    for (auto x = strict.find_first(); x != Bits::npos; x = strict.find_next(x)) {
      // x is covered by y iff no z with x < z < y.
      Bits between = strict & space.up_bits(x);
      between.reset(x);
      if (between.none()) edges.emplace_back(x, y);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Element> linear_extension(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> pending(n);
  for (Element x = 0; x < n; ++x) pending[x] = space.down_bits(x).count() - 1;
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n; ++x)
    if (pending[x] == 0) ready.push(x);
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    order.push_back(x);
    const Bits& above = space.up_bits(x);
    for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y))
      if (y != x && --pending[y] == 0) ready.push(y);
  }
  return order;
}

namespace {

// (height, up-degree, down-degree) per element.
using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteSpace& space) {
  auto h = space.heights();
  std::vector<Signature> sig(space.size());
  for (Element x = 0; x < space.size(); ++x)
    sig[x] = {h[x], space.up_bits(x).count() - 1, space.down_bits(x).count() - 1};
  return sig;
}

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto sa = signatures(a);
  auto sb = signatures(b);
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  // Assign the most constrained elements first: rarest signature class.
  std::map<Signature, std::vector<Element>> classes_b;
  for (Element y = 0; y < n; ++y) classes_b[sb[y]].push_back(y);
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
    return classes_b[sa[x]].size() < classes_b[sa[y]].size();
  });

  std::vector<Element> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const Element x = order[depth];
    for (Element y : classes_b[sa[x]]) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Element u = order[d];
        const Element v = image[u];
        ok = a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
    }
    image[x] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::size_t fingerprint(const FiniteSpace& space) {
  auto sig = signatures(space);
  std::sort(sig.begin(), sig.end());
  std::size_t h = std::hash<std::size_t>{}(space.size());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& [height, up, down] : sig) {
    mix(height);
    mix(up);
    mix(down);
  }
  return h;
}

}  // namespace finspace
