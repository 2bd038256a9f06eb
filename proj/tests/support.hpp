#pragma once

// Random generators and brute-force oracles shared by the tests.

#include "finspace/continuous_map.hpp"
#include "finspace/finite_space.hpp"
#include "finspace/homotopy.hpp"
#include "finspace/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace finspace;
using Rng = std::mt19937;

inline std::vector<std::string> names(std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// A random poset whose order is unrelated to the element indices.
inline FiniteSpace random_poset(Rng& rng, std::size_t n, double p = 0.35, const std::string& prefix = "e") {
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<Bits> below(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rank[j] < rank[i] && coin(rng)) below[i].set(j);
  return FiniteSpace::from_relation(names(n, prefix), std::move(below));
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random complex on up to `vertices` vertices with at most `max_simplices`.
inline SimplicialComplex random_complex(Rng& rng, std::size_t vertices, std::size_t max_simplices,
                                        const std::string& prefix = "v") {
  for (;;) {
    std::vector<std::vector<std::string>> facets;
    std::size_t count = uniform(rng, 1, 4);
    for (std::size_t f = 0; f < count; ++f) {
      std::vector<std::size_t> vs(vertices);
      std::iota(vs.begin(), vs.end(), 0);
      std::shuffle(vs.begin(), vs.end(), rng);
      vs.resize(uniform(rng, 1, std::min<std::size_t>(3, vertices)));
      std::vector<std::string> facet;
      for (auto v : vs) facet.push_back(prefix + std::to_string(v));
      facets.push_back(facet);
    }
    auto k = SimplicialComplex::from_facets(facets);
    if (k.size() <= max_simplices) return k;
  }
}

/// A random continuous map, built along a linear extension of the domain.
inline std::optional<ContinuousMap> random_map(Rng& rng, const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<Element> image(x.size());
  for (Element a : linear_extension(x)) {
    Bits allowed = y.all();
    for (Element b = 0; b < x.size(); ++b)
      if (x.less(b, a)) allowed &= y.up_bits(image[b]);
    auto choices = bit_indices(allowed);
    if (choices.empty()) return std::nullopt;
    image[a] = choices[uniform(rng, 0, choices.size() - 1)];
  }
  return ContinuousMap(x, y, image);
}

/// Every poset on n points up to isomorphism (natural labelings only).
inline std::vector<FiniteSpace> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<FiniteSpace> out;
  std::vector<std::size_t> prints;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<Bits> below(n, Bits(n));
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) below[pairs[e].second].set(pairs[e].first);
    // Keep only transitively closed relations so each order appears once.
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if (below[b].test(a))
          for (std::size_t c = 0; c < n && closed; ++c)
            if (below[c].test(b) && !below[c].test(a)) closed = false;
    if (!closed) continue;
    auto s = FiniteSpace::from_relation(names(n), below);
    auto fp = fingerprint(s);
    bool seen = false;
    for (std::size_t i = 0; i < out.size() && !seen; ++i)
      seen = prints[i] == fp && is_isomorphic(out[i], s).has_value();
    if (!seen) {
      out.push_back(s);
      prints.push_back(fp);
    }
  }
  return out;
}

/// Every continuous map x -> y, by brute force over all functions.
inline std::vector<std::vector<Element>> all_maps(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> f(x.size(), 0);
  for (;;) {
    bool ok = true;
    for (Element a = 0; a < x.size() && ok; ++a)
      for (Element b = 0; b < x.size() && ok; ++b)
        if (x.leq(a, b) && !y.leq(f[a], f[b])) ok = false;
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == y.size()) f[i++] = 0;
    if (i == f.size()) break;
    if (x.size() == 0) break;
  }
  return out;
}

/// Connected components of the comparability graph on all maps x -> y;
/// returns the component id of each map in all_maps order.
inline std::vector<std::size_t> map_components(const FiniteSpace& y, const std::vector<std::vector<Element>>& maps) {
  std::vector<std::size_t> parent(maps.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  auto leq = [&](const auto& f, const auto& g) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!y.leq(f[i], g[i])) return false;
    return true;
  };
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j)
      if (leq(maps[i], maps[j]) || leq(maps[j], maps[i])) parent[find(i)] = find(j);
  std::vector<std::size_t> out(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) out[i] = find(i);
  return out;
}

/// Contractibility by definition: the identity is homotopic to a constant
/// map. Homotopy classes of maps between finite spaces are the components of
/// the comparability graph, so this is a brute-force oracle (tiny spaces only).
inline bool contractible_oracle(const FiniteSpace& x) {
  if (x.size() == 0) return false;
  auto maps = all_maps(x, x);
  auto comp = map_components(x, maps);
  std::size_t id_index = 0, const_index = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    bool id = true, constant = true;
    for (Element a = 0; a < x.size(); ++a) {
      id = id && maps[i][a] == a;
      constant = constant && maps[i][a] == 0;
    }
    if (id) id_index = i;
    if (constant) const_index = i;
  }
  return comp[id_index] == comp[const_index];
}

}  // namespace testing
