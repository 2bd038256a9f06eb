#pragma once

// Generator-level evidence that a map belongs to the class generated by
// distinguished maps: homeomorphisms, homotopy equivalences, distinguished
// and op-distinguished maps, inclusions of collapsed subspaces, and
// composites of these. Each kind carries witnesses that can be replayed.

#include "finspace/continuous_map.hpp"
#include "finspace/homotopy.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace finspace {

enum class MembershipKind {
  homeomorphism,
  homotopy_equivalence,
  distinguished,
  op_distinguished,
  expansion_inclusion,
  composite,
};

std::string_view to_string(MembershipKind kind);

struct MembershipEvidence {
  MembershipKind kind;
  ContinuousMap subject;
  /// homeomorphism: the inverse; homotopy_equivalence: a homotopy inverse.
  std::optional<ContinuousMap> inverse;
  /// homotopy_equivalence: fences g∘f ≃ 1_X and f∘g ≃ 1_Y.
  std::vector<ContinuousMap> fence_domain;
  std::vector<ContinuousMap> fence_codomain;
  /// (op-)distinguished: one core certificate per codomain point, reducing
  /// the preimage of U_y (or of the closure of y) to a single point.
  std::vector<SpaceMoveCertificate> preimage_cores;
  /// expansion_inclusion: the codomain collapsing onto the image.
  std::optional<SpaceMoveCertificate> collapse;
  /// composite: subject = parts.back() ∘ ... ∘ parts.front().
  std::vector<MembershipEvidence> parts;
};

/// Tries the kinds in the order listed in MembershipKind (composite aside)
/// and returns the first that applies. `fence_budget` bounds the fence
/// searches of the homotopy-equivalence case.
std::optional<MembershipEvidence> membership_evidence(const ContinuousMap& f, unsigned jobs = 1,
                                                      std::size_t fence_budget = 100'000);

/// Chains evidence for f_1, ..., f_n (each codomain the next domain).
MembershipEvidence compose_evidence(std::vector<MembershipEvidence> parts);

/// Replays the witnesses against the definitions.
bool verify_membership(const MembershipEvidence& evidence);

}  // namespace finspace
