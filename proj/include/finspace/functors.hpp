#pragma once

// The order complex K(X) and face poset X(K), subdivisions, the bridge space
// B(X), the mapping-cylinder certificates, and the translations of single
// collapses between finite spaces and simplicial complexes.

#include "finspace/continuous_map.hpp"
#include "finspace/homotopy.hpp"
#include "finspace/simplicial_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finspace {

/// K(X): vertex i is element i, simplices are the nonempty chains.
SimplicialComplex order_complex(const FiniteSpace& space);

/// X(K): element i is simplex i of K, ordered by inclusion, labeled by
/// simplex_label ("a.b.c").
FiniteSpace face_poset(const SimplicialComplex& complex);

/// K(f), agreeing with f on vertices.
SimplicialMap induced_simplicial(const ContinuousMap& f);
/// X(phi): S -> phi(S).
ContinuousMap induced_continuous(const SimplicialMap& phi);

/// All nonempty chains of `space`, each as ascending element indices.
std::vector<std::vector<Element>> chains(const FiniteSpace& space, const Bits& within);

/// X' computed directly from the chains of X; equal to X(K(X)) as labeled
/// posets (chains are labeled by their elements in index order joined by '.').
FiniteSpace space_subdivision(const FiniteSpace& space);

/// h: X' -> X, C -> max(C).
ContinuousMap h_map(const FiniteSpace& space);

struct BridgeResult {
  FiniteSpace bridge;             // B(X) on X' ⊔ X
  SpaceMoveCertificate expand;    // X  ↗ B(X)
  SpaceMoveCertificate collapse;  // B(X) ↘ X'
};

/// B(X) = B(h) with its two certificates.
BridgeResult bridge_space(const FiniteSpace& space);

struct CylinderCertificates {
  FiniteSpace cylinder;
  SpaceMoveCertificate expand;  // Y ↗ B(f)
  std::optional<SpaceMoveCertificate> collapse;  // B(f) ↘ X, when f is distinguished
  std::optional<Element> refused_at;  // codomain point with non-contractible preimage
};

/// Y ↗ B(f) always; B(f) ↘ X only when requested and f is distinguished.
CylinderCertificates cylinder_certificates(const ContinuousMap& f, bool want_collapse = true, unsigned jobs = 1);

/// The removals of the codomain points of B(f) in linear-extension order,
/// built without checking that f is distinguished.
SpaceMoveCertificate cylinder_collapse_moves(const ContinuousMap& f);

/// L ↗ L ∪ {S, aS : S in T}, ordered by #S. Throws Error naming the violated
/// hypothesis (S already in L, a in S, or a missing face).
SimplicialMoveCertificate expand_cone_pairs(const SimplicialComplex& base,
                                            const std::vector<std::vector<std::string>>& faces,
                                            const std::string& apex);

/// K(X \ {x}) ↗ K(X) for a weak point x, built from a beat-point dismantling
/// of U_x \ {x} (or of the closure side via X^op). Throws if x is not weak.
SimplicialMoveCertificate translate_space_collapse(const FiniteSpace& space, Element x);

/// X(K) ↘ X(K \ {S, aS}) in exactly two moves: S (an up beat point), then aS
/// (down-weak, its remaining down-set is the cone X(a∂S)). Throws if {S, aS}
/// is not an elementary collapse pair.
SpaceMoveCertificate translate_simplicial_collapse(const SimplicialComplex& complex,
                                                   const std::vector<std::string>& face,
                                                   const std::string& apex);

}  // namespace finspace
