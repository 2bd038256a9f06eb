#include "finspace/membership.hpp"

#include "finspace/error.hpp"

#include <memory>

namespace finspace {

std::string_view to_string(MembershipKind kind) {
  switch (kind) {
    case MembershipKind::homeomorphism: return "homeomorphism";
    case MembershipKind::homotopy_equivalence: return "homotopy-equivalence";
    case MembershipKind::distinguished: return "distinguished";
    case MembershipKind::op_distinguished: return "op-distinguished";
    case MembershipKind::expansion_inclusion: return "expansion-inclusion";
    case MembershipKind::composite: return "composite";
  }
  return "?";
}

namespace {

std::optional<ContinuousMap> inverse_of(const ContinuousMap& f) {
  const auto n = f.domain().size();
  if (n != f.codomain().size()) return std::nullopt;
  std::vector<Element> inv(n, n);
  for (Element x = 0; x < n; ++x) {
    if (inv[f(x)] != n) return std::nullopt;
    inv[f(x)] = x;
  }
  try {
    return ContinuousMap(f.codomain_ptr(), f.domain_ptr(), std::move(inv));
  } catch (const Error&) {
    return std::nullopt;  // bijective but the inverse is not order-preserving
  }
}

bool is_identity(const ContinuousMap& f) {
  if (!same_space(f.domain(), f.codomain())) return false;
  for (Element x = 0; x < f.domain().size(); ++x)
    if (f(x) != x) return false;
  return true;
}

Bits preimage_side(const ContinuousMap& f, Element y, bool op) {
  return f.preimage(op ? f.codomain().up_bits(y) : f.codomain().down_bits(y));
}

std::vector<SpaceMoveCertificate> preimage_cores(const ContinuousMap& f, bool op) {
  std::vector<SpaceMoveCertificate> out;
  for (Element y = 0; y < f.codomain().size(); ++y) {
    Bits pre = preimage_side(f, y, op);
    if (pre.none()) return {};
    auto c = core(restrict_to(f.domain(), pre));
    if (c.core.size() != 1) return {};
    out.push_back(std::move(c.certificate));
  }
  return out;
}

std::optional<MembershipEvidence> homotopy_equivalence(const ContinuousMap& f, std::size_t budget) {
  auto rx = core_retraction(f.domain());
  auto ry = core_retraction(f.codomain());
  auto ix = ContinuousMap::inclusion(rx.codomain_ptr(), f.domain_ptr());
  auto iy = ContinuousMap::inclusion(ry.codomain_ptr(), f.codomain_ptr());
  // Between minimal spaces, homotopy equivalences are homeomorphisms.
  auto on_cores = inverse_of(compose(ry, compose(f, ix)));
  if (!on_cores) return std::nullopt;
  auto g = compose(ix, compose(*on_cores, ry));
  auto gf = fence_homotopic(compose(g, f), ContinuousMap::identity(f.domain_ptr()), budget);
  auto fg = fence_homotopic(compose(f, g), ContinuousMap::identity(f.codomain_ptr()), budget);
  if (gf.status != FenceStatus::found || fg.status != FenceStatus::found) return std::nullopt;
  MembershipEvidence e{MembershipKind::homotopy_equivalence, f, g, gf.fence, fg.fence, {}, {}, {}};
  return e;
}

// Removes weak points outside the image, first available each time.
std::optional<SpaceMoveCertificate> collapse_onto_image(const ContinuousMap& f) {
  const auto& y = f.codomain();
  Bits image(y.size());
  for (Element x = 0; x < f.domain().size(); ++x) image.set(f(x));
  SpaceMoveCertificate cert{y, {}};
  FiniteSpace current = y;
  while (current.size() > image.count()) {
    bool moved = false;
    for (Element p = 0; p < current.size() && !moved; ++p) {
      if (image.test(y.index_of(current.label(p))) || !is_weak_point(current, p).weak()) continue;
      auto [next, move] = remove_weak_point(current, p);
      cert.moves.push_back(std::move(move));
      current = std::move(next);
      moved = true;
    }
    if (!moved) return std::nullopt;
  }
  return cert;
}

bool is_embedding(const ContinuousMap& f) {
  const auto& x = f.domain();
  for (Element a = 0; a < x.size(); ++a)
    for (Element b = 0; b < x.size(); ++b) {
      if (a != b && f(a) == f(b)) return false;
      if (x.leq(a, b) != f.codomain().leq(f(a), f(b))) return false;
    }
  return true;
}

bool verify_preimage_cores(const MembershipEvidence& e, bool op) {
  const auto& f = e.subject;
  if (e.preimage_cores.size() != f.codomain().size()) return false;
  for (Element y = 0; y < f.codomain().size(); ++y) {
    const auto& cert = e.preimage_cores[y];
    Bits pre = preimage_side(f, y, op);
    if (pre.none() || !(cert.start == restrict_to(f.domain(), pre))) return false;
    auto check = verify_space_certificate(cert);
    if (!check.valid || check.final_space.size() != 1) return false;
    for (const auto& m : cert.moves)
      if (m.direction != MoveDirection::remove) return false;
  }
  return true;
}

}  // namespace

std::optional<MembershipEvidence> membership_evidence(const ContinuousMap& f, unsigned jobs,
                                                      std::size_t fence_budget) {
  if (auto inv = inverse_of(f))
    return MembershipEvidence{MembershipKind::homeomorphism, f, *inv, {}, {}, {}, {}, {}};
  if (is_distinguished(f, jobs).distinguished)
    return MembershipEvidence{MembershipKind::distinguished, f, {}, {}, {}, preimage_cores(f, false), {}, {}};
  if (is_op_distinguished(f, jobs).distinguished)
    return MembershipEvidence{MembershipKind::op_distinguished, f, {}, {}, {}, preimage_cores(f, true), {}, {}};
  if (is_embedding(f))
    if (auto c = collapse_onto_image(f))
      return MembershipEvidence{MembershipKind::expansion_inclusion, f, {}, {}, {}, {}, std::move(c), {}};
  return homotopy_equivalence(f, fence_budget);
}

MembershipEvidence compose_evidence(std::vector<MembershipEvidence> parts) {
  if (parts.empty()) throw Error("composite evidence needs at least one part");
  ContinuousMap total = parts.front().subject;
  for (std::size_t i = 1; i < parts.size(); ++i) total = compose(parts[i].subject, total);
  return MembershipEvidence{MembershipKind::composite, std::move(total), {}, {}, {}, {}, {}, std::move(parts)};
}

bool verify_membership(const MembershipEvidence& e) {
  const auto& f = e.subject;
  switch (e.kind) {
    case MembershipKind::homeomorphism: {
      if (!e.inverse) return false;
      return is_identity(compose(*e.inverse, f)) && is_identity(compose(f, *e.inverse));
    }
    case MembershipKind::homotopy_equivalence: {
      if (!e.inverse) return false;
      const auto& g = *e.inverse;
      if (!same_space(g.domain(), f.codomain()) || !same_space(g.codomain(), f.domain())) return false;
      return verify_fence(compose(g, f), ContinuousMap::identity(f.domain_ptr()), e.fence_domain) &&
             verify_fence(compose(f, g), ContinuousMap::identity(f.codomain_ptr()), e.fence_codomain);
    }
    case MembershipKind::distinguished: return verify_preimage_cores(e, false);
    case MembershipKind::op_distinguished: return verify_preimage_cores(e, true);
    case MembershipKind::expansion_inclusion: {
      if (!e.collapse || !is_embedding(f) || !(e.collapse->start == f.codomain())) return false;
      auto check = verify_space_certificate(*e.collapse);
      if (!check.valid) return false;
      for (const auto& m : e.collapse->moves)
        if (m.direction != MoveDirection::remove) return false;
      Bits image(f.codomain().size());
      for (Element x = 0; x < f.domain().size(); ++x) image.set(f(x));
      return check.final_space == restrict_to(f.codomain(), image);
    }
    case MembershipKind::composite: {
      if (e.parts.empty()) return false;
      ContinuousMap total = e.parts.front().subject;
      for (std::size_t i = 1; i < e.parts.size(); ++i) {
        if (!same_space(e.parts[i].subject.domain(), total.codomain())) return false;
        total = compose(e.parts[i].subject, total);
      }
      if (!same_signature(total, f) || !(total.images() == f.images())) return false;
      for (const auto& p : e.parts)
        if (!verify_membership(p)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace finspace
