#pragma once

// Beat points, cores, weak points and elementary collapses/expansions of
// finite spaces, plus move certificates and their replay.

#include "finspace/continuous_map.hpp"
#include "finspace/finite_space.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace finspace {

/// Which condition justifies a point move. The beat variants are the
/// stronger special cases of the corresponding weak ones.
enum class WeakSide { down_weak, up_weak, beat_down, beat_up };

std::string_view to_string(WeakSide side);
std::optional<WeakSide> parse_side(std::string_view text);

enum class MoveDirection { remove, add };

struct SpaceMove {
  MoveDirection direction = MoveDirection::remove;
  std::string label;
  WeakSide side = WeakSide::down_weak;
  /// Strict down-set / up-set of the point (labels). Required for `add`;
  /// recorded for `remove` so the move can be inverted.
  std::vector<std::string> down;
  std::vector<std::string> up;

  friend bool operator==(const SpaceMove&, const SpaceMove&) = default;
};

struct SpaceMoveCertificate {
  FiniteSpace start;
  std::vector<SpaceMove> moves;
};

// --- point classification -------------------------------------------------

/// The strict up-set of x has a minimum.
bool is_up_beat(const FiniteSpace& space, Element x);
/// The strict down-set of x has a maximum.
bool is_down_beat(const FiniteSpace& space, Element x);

/// Same tests inside the subspace `mask` (x must be in mask).
bool is_up_beat(const FiniteSpace& space, const Bits& mask, Element x);
bool is_down_beat(const FiniteSpace& space, const Bits& mask, Element x);

struct WeakPointReport {
  bool down_weak = false;
  bool up_weak = false;
  bool down_beat = false;
  bool up_beat = false;

  bool weak() const noexcept { return down_weak || up_weak; }
  /// beat-down, beat-up, down-weak, up-weak in that order of preference.
  std::optional<WeakSide> preferred_side() const noexcept;
  bool satisfies(WeakSide side) const noexcept;
};

WeakPointReport is_weak_point(const FiniteSpace& space, Element x);
WeakPointReport is_weak_point(const FiniteSpace& space, const Bits& mask, Element x);

// --- cores and contractibility --------------------------------------------

struct BeatRemoval {
  Element element;
  WeakSide side;  // beat_down or beat_up
  Element witness;  // the max of the strict down-set / min of the strict up-set
};

/// Removes beat points of the subspace `mask` until none remain. Points are
/// scanned in `order` (ascending index when empty), sweeping repeatedly.
Bits core_mask(const FiniteSpace& space, Bits mask, std::vector<BeatRemoval>* removals = nullptr,
               std::span<const Element> order = {});

struct CoreResult {
  FiniteSpace core;
  SpaceMoveCertificate certificate;
};

CoreResult core(const FiniteSpace& space, std::span<const Element> order = {});

/// Exact: the core is a single point. The empty space is not contractible.
bool is_contractible(const FiniteSpace& space);
bool is_contractible(const FiniteSpace& space, const Bits& mask);

/// Retraction X -> core(X) composed of the beat-point retractions
/// (x goes to its witness). The codomain is `core(space).core`.
ContinuousMap core_retraction(const FiniteSpace& space);

// --- elementary moves ------------------------------------------------------

/// Removes a weak point; throws Error if x is not weak.
std::pair<FiniteSpace, SpaceMove> remove_weak_point(const FiniteSpace& space, Element x);

/// Adds a point with strict down-set `down` and strict up-set `up`; throws
/// Error if the attachment is not a valid order or the new point would not be
/// weak. The new element is appended at the end.
FiniteSpace add_weak_point(const FiniteSpace& space, const ElementSubset& down, const ElementSubset& up,
                           const std::string& label);

// --- collapse search --------------------------------------------------------

enum class SearchStatus { found, exhausted, budget_exceeded };

struct CollapseSearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<SpaceMoveCertificate> certificate;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultSearchBudget = 100'000;

/// Depth-first search for weak-point removals from `space` down to a space
/// isomorphic to `target` (a single point when absent). Beat points are tried
/// before other weak points, each group by ascending index. Visited states
/// are deduplicated up to isomorphism. `exhausted` is a conclusive no.
CollapseSearchResult collapse_search(const FiniteSpace& space, const std::optional<FiniteSpace>& target,
                                     std::size_t budget = kDefaultSearchBudget);

struct HomotopyEvidence {
  CoreResult first;
  CoreResult second;
  std::vector<Element> core_isomorphism;  // first.core -> second.core
};

/// X ≃ Y iff their cores are homeomorphic.
std::optional<HomotopyEvidence> homotopy_equivalent(const FiniteSpace& a, const FiniteSpace& b);

// --- replay ------------------------------------------------------------------

struct CertificateCheck {
  bool valid = true;
  std::optional<std::size_t> failed_index;
  std::string message;
  FiniteSpace final_space;
  /// The space after each successfully applied move (only when requested).
  std::vector<FiniteSpace> trace;
};

/// Replays every move against the definitions from scratch, without using the
/// search/core machinery above.
CertificateCheck verify_space_certificate(const SpaceMoveCertificate& certificate, bool keep_trace = false);

}  // namespace finspace
