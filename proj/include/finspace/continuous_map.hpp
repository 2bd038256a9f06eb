#pragma once

// Continuous maps between finite T0-spaces (= order-preserving maps), their
// pointwise order, homotopy fences, distinguished maps and the
// non-Hausdorff mapping cylinder.

#include "finspace/finite_space.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace finspace {

class ContinuousMap {
 public:
  /// Throws Error if `image` has the wrong length, points outside the
  /// codomain, or is not order-preserving.
  ContinuousMap(std::shared_ptr<const FiniteSpace> domain, std::shared_ptr<const FiniteSpace> codomain,
                std::vector<Element> image);
  ContinuousMap(FiniteSpace domain, FiniteSpace codomain, std::vector<Element> image);

  static ContinuousMap identity(std::shared_ptr<const FiniteSpace> space);
  /// Inclusion of `sub` into `super`, matching elements by label.
  static ContinuousMap inclusion(std::shared_ptr<const FiniteSpace> sub,
                                 std::shared_ptr<const FiniteSpace> super);

  const FiniteSpace& domain() const noexcept { return *domain_; }
  const FiniteSpace& codomain() const noexcept { return *codomain_; }
  const std::shared_ptr<const FiniteSpace>& domain_ptr() const noexcept { return domain_; }
  const std::shared_ptr<const FiniteSpace>& codomain_ptr() const noexcept { return codomain_; }

  Element operator()(Element x) const { return image_.at(x); }
  const std::vector<Element>& images() const noexcept { return image_; }

  /// {x | f(x) in subset of the codomain}.
  Bits preimage(const Bits& target) const;

  friend bool operator==(const ContinuousMap& f, const ContinuousMap& g);

 private:
  std::shared_ptr<const FiniteSpace> domain_;
  std::shared_ptr<const FiniteSpace> codomain_;
  std::vector<Element> image_;
};

bool same_space(const FiniteSpace& a, const FiniteSpace& b);
bool same_signature(const ContinuousMap& f, const ContinuousMap& g);

/// g o f. Throws if cod(f) != dom(g).
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

/// f <= g pointwise. Throws on signature mismatch.
bool pointwise_leq(const ContinuousMap& f, const ContinuousMap& g);

/// The same point map viewed as X^op -> Y^op.
ContinuousMap opposite(const ContinuousMap& f);

enum class FenceStatus { found, not_homotopic, inconclusive };

struct FenceResult {
  FenceStatus status = FenceStatus::inconclusive;
  /// h_0 = f, ..., h_k = g with consecutive maps comparable; empty unless found.
  std::vector<ContinuousMap> fence;
  std::size_t explored = 0;
};

/// Searches for a comparability fence from f to g.
///
/// Maps comparable with f are reached by changing one point at a time to a
/// comparable value, which explores exactly the path component of f in the
/// space of maps. When that component is exhausted without meeting g the
/// answer is a conclusive `not_homotopic`; hitting `budget` visited maps
/// gives `inconclusive`. The returned fence is shortened greedily so that a
/// comparable pair yields a fence of length 1.
FenceResult fence_homotopic(const ContinuousMap& f, const ContinuousMap& g,
                            std::size_t budget = 1'000'000);

/// Replays a fence: endpoints match and consecutive maps are comparable.
bool verify_fence(const ContinuousMap& f, const ContinuousMap& g, const std::vector<ContinuousMap>& fence);

struct DistinguishedReport {
  bool distinguished = true;
  /// Per codomain element y: is f^-1(U_y) (or f^-1(closure y)) contractible.
  std::vector<bool> contractible;
  /// First failing y in a linear extension of the codomain.
  std::optional<Element> first_failure;
};

/// f^-1(U_y) contractible for every y. `jobs` > 1 checks points in parallel.
DistinguishedReport is_distinguished(const ContinuousMap& f, unsigned jobs = 1);
/// f^-1(closure(y)) contractible for every y, i.e. f^op is distinguished.
DistinguishedReport is_op_distinguished(const ContinuousMap& f, unsigned jobs = 1);

/// Non-Hausdorff mapping cylinder B(f) on X ⊔ Y: domain elements labeled
/// `L:<label>` (indices 0..|X|-1), codomain elements `R:<label>` after them,
/// and a <= b across the gap iff f(a) <= b.
FiniteSpace mapping_cylinder(const ContinuousMap& f);

std::string cylinder_label(bool domain_side, const std::string& label);

}  // namespace finspace
