#pragma once

// Finite abstract simplicial complexes with every simplex materialized,
// elementary collapses, barycentric subdivision, cones and contiguity.

#include "finspace/homotopy.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace finspace {

using Vertex = std::uint32_t;
/// Sorted, duplicate-free vertex indices.
using Simplex = std::vector<Vertex>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `facets` (given by vertex label). Every label in
  /// `vertex_labels` becomes a 0-simplex; labels only seen in facets are
  /// appended in order of appearance. Throws on an empty facet.
  static SimplicialComplex from_facets(std::vector<std::string> vertex_labels,
                                       const std::vector<std::vector<std::string>>& facets);
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

  /// `simplices` must already be closed under nonempty faces and cover every
  /// vertex; throws Error otherwise.
  static SimplicialComplex from_simplices(std::vector<std::string> vertex_labels, std::vector<Simplex> simplices);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }

  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
  const std::string& vertex_label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find_vertex(std::string_view label) const;

  /// Simplices ordered by dimension, then lexicographically.
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  const Simplex& simplex(std::size_t i) const { return simplices_.at(i); }
  std::optional<std::size_t> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  /// Label-based lookup; nullopt if a label is unknown.
  std::optional<Simplex> to_simplex(const std::vector<std::string>& labels) const;
  std::vector<std::string> to_labels(const Simplex& s) const;
  /// Vertex labels in index order joined by '.', e.g. "a.b.c".
  std::string simplex_label(const Simplex& s) const;

  int dimension() const;
  /// Number of simplices per dimension.
  std::vector<std::size_t> f_vector() const;
  std::vector<Simplex> facets() const;

  /// Simplices properly containing `s`.
  std::vector<std::size_t> cofaces(const Simplex& s) const;

  /// Labeled equality: same vertex labels and same simplices as label sets.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  void index_labels();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> lookup_;
};

/// Same vertex order and same simplex list (stricter than ==, needed when
/// vertex indices are compared).
bool identical(const SimplicialComplex& a, const SimplicialComplex& b);

std::string join_labels(const std::vector<std::string>& labels, char sep = '.');

long long euler_characteristic(const SimplicialComplex& k);

// --- elementary collapses ----------------------------------------------------

/// A free pair {S, aS}: aS is the only simplex properly containing S.
struct FreePair {
  Simplex face;
  Vertex apex;
};

/// All free pairs, ordered by face (dimension, then lexicographic).
std::vector<FreePair> free_pairs(const SimplicialComplex& k);

/// Why {S, aS} is not an elementary collapse pair, or empty when it is.
std::string collapse_pair_problem(const SimplicialComplex& k, const Simplex& face);

struct SimplicialMove {
  MoveDirection direction = MoveDirection::remove;
  std::vector<std::string> face;  // S, by vertex label
  std::string apex;               // a

  friend bool operator==(const SimplicialMove&, const SimplicialMove&) = default;
};

struct SimplicialMoveCertificate {
  SimplicialComplex start;
  std::vector<SimplicialMove> moves;
};

/// Removes {S, aS}. Throws Error when S is not free.
std::pair<SimplicialComplex, SimplicialMove> elementary_collapse(const SimplicialComplex& k, const Simplex& face);

/// Applies one move; throws Error with the reason when it does not validate.
SimplicialComplex apply_move(const SimplicialComplex& k, const SimplicialMove& move);

struct SimplicialCertificateCheck {
  bool valid = true;
  std::optional<std::size_t> failed_index;
  std::string message;
  SimplicialComplex final_complex;
  std::vector<SimplicialComplex> trace;
};

SimplicialCertificateCheck verify_simplicial_certificate(const SimplicialMoveCertificate& certificate,
                                                         bool keep_trace = false);

struct SimplicialSearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<SimplicialMoveCertificate> certificate;
  std::size_t nodes = 0;
};

/// DFS over free-pair removals towards a complex isomorphic to `target`
/// (a single vertex when absent). Visited states are remembered exactly.
SimplicialSearchResult collapse_sequence_search(const SimplicialComplex& k,
                                                const std::optional<SimplicialComplex>& target,
                                                std::size_t budget = kDefaultSearchBudget);

// --- constructions -------------------------------------------------------------

/// K': one vertex per simplex (labeled by simplex_label), simplices = chains.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// aL. Throws if `apex` is already a vertex of L.
SimplicialComplex cone(const std::string& apex, const SimplicialComplex& base);

/// Vertex bijection a -> b mapping simplices onto simplices, or nullopt.
std::optional<std::vector<Vertex>> is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

// --- simplicial maps ------------------------------------------------------------

class SimplicialMap {
 public:
  /// Throws Error unless every simplex maps onto a simplex of `codomain`.
  SimplicialMap(std::shared_ptr<const SimplicialComplex> domain, std::shared_ptr<const SimplicialComplex> codomain,
                std::vector<Vertex> vertex_image);

  const SimplicialComplex& domain() const noexcept { return *domain_; }
  const SimplicialComplex& codomain() const noexcept { return *codomain_; }
  const std::shared_ptr<const SimplicialComplex>& domain_ptr() const noexcept { return domain_; }
  const std::shared_ptr<const SimplicialComplex>& codomain_ptr() const noexcept { return codomain_; }
  Vertex operator()(Vertex v) const { return image_.at(v); }
  const std::vector<Vertex>& vertex_images() const noexcept { return image_; }
  Simplex apply(const Simplex& s) const;

  friend bool operator==(const SimplicialMap& f, const SimplicialMap& g);

 private:
  std::shared_ptr<const SimplicialComplex> domain_;
  std::shared_ptr<const SimplicialComplex> codomain_;
  std::vector<Vertex> image_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// phi(S) ∪ psi(S) is a simplex for every simplex S. Throws on signature mismatch.
bool is_contiguous(const SimplicialMap& phi, const SimplicialMap& psi);

}  // namespace finspace
