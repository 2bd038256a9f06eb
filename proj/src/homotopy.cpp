#include "finspace/homotopy.hpp"

#include "finspace/error.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace finspace {

std::string_view to_string(WeakSide side) {
  switch (side) {
    case WeakSide::down_weak: return "down-weak";
    case WeakSide::up_weak: return "up-weak";
    case WeakSide::beat_down: return "beat-down";
    case WeakSide::beat_up: return "beat-up";
  }
  return "?";
}

std::optional<WeakSide> parse_side(std::string_view text) {
  if (text == "down-weak") return WeakSide::down_weak;
  if (text == "up-weak") return WeakSide::up_weak;
  if (text == "beat-down") return WeakSide::beat_down;
  if (text == "beat-up") return WeakSide::beat_up;
  return std::nullopt;
}

namespace {

// Element of `set` that contains all of `set` in its down-set (or up-set).
std::optional<Element> extremum(const FiniteSpace& space, const Bits& set, bool maximum) {
  for (auto m = set.find_first(); m != Bits::npos; m = set.find_next(m))
    if (set.is_subset_of(maximum ? space.down_bits(m) : space.up_bits(m))) return m;
  return std::nullopt;
}

Bits strict_down(const FiniteSpace& space, const Bits& mask, Element x) {
  Bits s = space.down_bits(x) & mask;
  s.reset(x);
  return s;
}

Bits strict_up(const FiniteSpace& space, const Bits& mask, Element x) {
  Bits s = space.up_bits(x) & mask;
  s.reset(x);
  return s;
}

std::vector<std::string> labels_of(const FiniteSpace& space, const Bits& set) {
  std::vector<std::string> out;
  for (auto e = set.find_first(); e != Bits::npos; e = set.find_next(e)) out.push_back(space.label(e));
  return out;
}

}  // namespace

bool is_up_beat(const FiniteSpace& space, const Bits& mask, Element x) {
  Bits s = strict_up(space, mask, x);
  return s.any() && extremum(space, s, false).has_value();
}

bool is_down_beat(const FiniteSpace& space, const Bits& mask, Element x) {
  Bits s = strict_down(space, mask, x);
  return s.any() && extremum(space, s, true).has_value();
}

bool is_up_beat(const FiniteSpace& space, Element x) { return is_up_beat(space, space.all(), x); }
bool is_down_beat(const FiniteSpace& space, Element x) { return is_down_beat(space, space.all(), x); }

std::optional<WeakSide> WeakPointReport::preferred_side() const noexcept {
  if (down_beat) return WeakSide::beat_down;
  if (up_beat) return WeakSide::beat_up;
  if (down_weak) return WeakSide::down_weak;
  if (up_weak) return WeakSide::up_weak;
  return std::nullopt;
}

bool WeakPointReport::satisfies(WeakSide side) const noexcept {
  switch (side) {
    case WeakSide::down_weak: return down_weak;
    case WeakSide::up_weak: return up_weak;
    case WeakSide::beat_down: return down_beat;
    case WeakSide::beat_up: return up_beat;
  }
  return false;
}

WeakPointReport is_weak_point(const FiniteSpace& space, const Bits& mask, Element x) {
  if (x >= space.size() || !mask.test(x)) throw Error("element is not in the space");
  WeakPointReport r;
  r.down_beat = is_down_beat(space, mask, x);
  r.up_beat = is_up_beat(space, mask, x);
  r.down_weak = r.down_beat || is_contractible(space, strict_down(space, mask, x));
  r.up_weak = r.up_beat || is_contractible(space, strict_up(space, mask, x));
  return r;
}

WeakPointReport is_weak_point(const FiniteSpace& space, Element x) {
  return is_weak_point(space, space.all(), x);
}

Bits core_mask(const FiniteSpace& space, Bits mask, std::vector<BeatRemoval>* removals,
               std::span<const Element> order) {
  std::vector<Element> default_order;
  if (order.empty()) {
    default_order.resize(space.size());
    for (Element x = 0; x < space.size(); ++x) default_order[x] = x;
    order = default_order;
  }
  bool changed = true;
  while (changed && mask.count() > 1) {
    changed = false;
    for (Element x : order) {
      if (!mask.test(x) || mask.count() == 1) continue;
      Bits down = strict_down(space, mask, x);
      std::optional<Element> witness;
      WeakSide side = WeakSide::beat_down;
      if (down.any()) witness = extremum(space, down, true);
      if (!witness) {
        Bits up = strict_up(space, mask, x);
        if (up.any()) witness = extremum(space, up, false);
        side = WeakSide::beat_up;
      }
      if (!witness) continue;
      if (removals) removals->push_back({x, side, *witness});
      mask.reset(x);
      changed = true;
    }
  }
  return mask;
}

CoreResult core(const FiniteSpace& space, std::span<const Element> order) {
  std::vector<BeatRemoval> removals;
  Bits mask = core_mask(space, space.all(), &removals, order);
  CoreResult result;
  result.certificate.start = space;
  Bits current = space.all();
  for (const auto& r : removals) {
    SpaceMove move;
    move.direction = MoveDirection::remove;
    move.label = space.label(r.element);
    move.side = r.side;
    move.down = labels_of(space, strict_down(space, current, r.element));
    move.up = labels_of(space, strict_up(space, current, r.element));
    result.certificate.moves.push_back(std::move(move));
    current.reset(r.element);
  }
  result.core = restrict_to(space, mask);
  return result;
}

bool is_contractible(const FiniteSpace& space, const Bits& mask) {
  if (mask.none()) return false;
  return core_mask(space, mask).count() == 1;
}

bool is_contractible(const FiniteSpace& space) { return is_contractible(space, space.all()); }

ContinuousMap core_retraction(const FiniteSpace& space) {
  std::vector<BeatRemoval> removals;
  Bits mask = core_mask(space, space.all(), &removals);
  auto target = std::make_shared<const FiniteSpace>(restrict_to(space, mask));
  std::vector<std::optional<Element>> witness(space.size());
  for (const auto& r : removals) witness[r.element] = r.witness;
  std::vector<Element> image(space.size());
  for (Element x = 0; x < space.size(); ++x) {
    Element y = x;
    while (witness[y]) y = *witness[y];
    image[x] = target->index_of(space.label(y));
  }
  return ContinuousMap(std::make_shared<const FiniteSpace>(space), std::move(target), std::move(image));
}

std::pair<FiniteSpace, SpaceMove> remove_weak_point(const FiniteSpace& space, Element x) {
  auto report = is_weak_point(space, x);
  auto side = report.preferred_side();
  if (!side) throw Error(space.label(x) + " is not a weak point");
  Bits rest = space.all();
  rest.reset(x);
  SpaceMove move{MoveDirection::remove, space.label(x), *side,
                 labels_of(space, strict_down(space, space.all(), x)),
                 labels_of(space, strict_up(space, space.all(), x))};
  return {restrict_to(space, rest), std::move(move)};
}

FiniteSpace add_weak_point(const FiniteSpace& space, const ElementSubset& down, const ElementSubset& up,
                           const std::string& label) {
  const std::size_t n = space.size();
  if (down.parent_size() != n || up.parent_size() != n) throw Error("attachment sets belong to another space");
  if ((down.bits() & up.bits()).any()) throw Error("invalid attachment: down-set and up-set overlap");
  for (Element d : down.elements()) {
    if (!space.down_bits(d).is_subset_of(down.bits())) throw Error("invalid attachment: not a down-set");
    if (!up.bits().is_subset_of(space.up_bits(d)))
      throw Error("invalid attachment: " + space.label(d) + " is not below every point of the up-set");
  }
  for (Element u : up.elements())
    if (!space.up_bits(u).is_subset_of(up.bits())) throw Error("invalid attachment: not an up-set");

  std::vector<std::string> labels = space.labels();
  labels.push_back(label);
  std::vector<Bits> below;
  below.reserve(n + 1);
  for (Element x = 0; x < n; ++x) {
    Bits row = space.down_bits(x);
    row.push_back(up.contains(x));
    below.push_back(std::move(row));
  }
  Bits row = down.bits();
  row.push_back(true);
  below.push_back(std::move(row));
  FiniteSpace result = FiniteSpace::from_relation(std::move(labels), std::move(below));
  if (!is_weak_point(result, n).weak()) throw Error("added point " + label + " would not be a weak point");
  return result;
}

namespace {

class CollapseSearch {
 public:
  CollapseSearch(const FiniteSpace& space, const std::optional<FiniteSpace>& target, std::size_t budget)
      : space_(space), target_(target), budget_(budget) {}

  CollapseSearchResult run() {
    CollapseSearchResult result;
    Bits start = space_.all();
    remember(start);
    bool found = dfs(start);
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::found;
      SpaceMoveCertificate cert;
      cert.start = space_;
      cert.moves = path_;
      result.certificate = std::move(cert);
    } else {
      result.status = truncated_ ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
    }
    return result;
  }

 private:
  std::size_t target_size() const { return target_ ? target_->size() : 1; }

  bool at_target(const Bits& mask) const {
    if (!target_) return mask.count() == 1;
    return is_isomorphic(restrict_to(space_, mask), *target_).has_value();
  }

  // True when the state was new.
  bool remember(const Bits& mask) {
    FiniteSpace state = restrict_to(space_, mask);
    auto& bucket = visited_[fingerprint(state)];
    for (const auto& other : bucket)
      if (is_isomorphic(state, other)) return false;
    bucket.push_back(std::move(state));
    return true;
  }

  bool dfs(const Bits& mask) {
    if (++nodes_ > budget_) {
      truncated_ = true;
      return false;
    }
    const std::size_t size = mask.count();
    if (size == target_size()) return at_target(mask);
    if (size < target_size()) return false;

    std::vector<std::pair<Element, WeakSide>> beats, weaks;
    for (auto x = mask.find_first(); x != Bits::npos; x = mask.find_next(x)) {
      auto side = is_weak_point(space_, mask, x).preferred_side();
      if (!side) continue;
      if (*side == WeakSide::beat_down || *side == WeakSide::beat_up)
        beats.emplace_back(x, *side);
      else
        weaks.emplace_back(x, *side);
    }
    beats.insert(beats.end(), weaks.begin(), weaks.end());
    for (const auto& [x, side] : beats) {
      Bits next = mask;
      next.reset(x);
      if (!remember(next)) continue;
      path_.push_back({MoveDirection::remove, space_.label(x), side,
                       labels_of(space_, strict_down(space_, mask, x)),
                       labels_of(space_, strict_up(space_, mask, x))});
      if (dfs(next)) return true;
      path_.pop_back();
      if (truncated_) return false;
    }
    return false;
  }

  const FiniteSpace& space_;
  const std::optional<FiniteSpace>& target_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool truncated_ = false;
  std::vector<SpaceMove> path_;
  std::unordered_map<std::size_t, std::vector<FiniteSpace>> visited_;
};

}  // namespace

CollapseSearchResult collapse_search(const FiniteSpace& space, const std::optional<FiniteSpace>& target,
                                     std::size_t budget) {
  if (space.empty()) return {};
  return CollapseSearch(space, target, budget).run();
}

std::optional<HomotopyEvidence> homotopy_equivalent(const FiniteSpace& a, const FiniteSpace& b) {
  HomotopyEvidence evidence{core(a), core(b), {}};
  auto iso = is_isomorphic(evidence.first.core, evidence.second.core);
  if (!iso) return std::nullopt;
  evidence.core_isomorphism = std::move(*iso);
  return evidence;
}

// ---------------------------------------------------------------------------
// Replay. Deliberately written against materialized spaces with brute-force
// loops so it shares no logic with the mask-based routines above.

namespace {

std::vector<Element> strictly_below(const FiniteSpace& s, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < s.size(); ++y)
    if (y != x && s.leq(y, x)) out.push_back(y);
  return out;
}

std::vector<Element> strictly_above(const FiniteSpace& s, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < s.size(); ++y)
    if (y != x && s.leq(x, y)) out.push_back(y);
  return out;
}

bool has_maximum(const FiniteSpace& s, const std::vector<Element>& set) {
  for (Element m : set)
    if (std::all_of(set.begin(), set.end(), [&](Element z) { return s.leq(z, m); })) return true;
  return false;
}

bool has_minimum(const FiniteSpace& s, const std::vector<Element>& set) {
  for (Element m : set)
    if (std::all_of(set.begin(), set.end(), [&](Element z) { return s.leq(m, z); })) return true;
  return false;
}

FiniteSpace without(const FiniteSpace& s, Element x) {
  Bits keep(s.size());
  keep.set();
  keep.reset(x);
  return restrict_to(s, keep);
}

FiniteSpace induced(const FiniteSpace& s, const std::vector<Element>& elems) {
  Bits keep(s.size());
  for (Element e : elems) keep.set(e);
  return restrict_to(s, keep);
}

// Contractible iff repeatedly deleting beat points reaches one point.
bool reference_contractible(FiniteSpace s) {
  if (s.empty()) return false;
  while (s.size() > 1) {
    std::optional<Element> beat;
    for (Element x = 0; x < s.size() && !beat; ++x) {
      auto lo = strictly_below(s, x);
      auto hi = strictly_above(s, x);
      if ((!lo.empty() && has_maximum(s, lo)) || (!hi.empty() && has_minimum(s, hi))) beat = x;
    }
    if (!beat) return false;
    s = without(s, *beat);
  }
  return true;
}

std::string check_side(const FiniteSpace& s, Element x, WeakSide side) {
  auto lo = strictly_below(s, x);
  auto hi = strictly_above(s, x);
  switch (side) {
    case WeakSide::beat_down:
      if (lo.empty() || !has_maximum(s, lo)) return "strict down-set has no maximum";
      return {};
    case WeakSide::beat_up:
      if (hi.empty() || !has_minimum(s, hi)) return "strict up-set has no minimum";
      return {};
    case WeakSide::down_weak:
      if (!reference_contractible(induced(s, lo))) return "U_x minus x is not contractible";
      return {};
    case WeakSide::up_weak:
      if (!reference_contractible(induced(s, hi))) return "closure of x minus x is not contractible";
      return {};
  }
  return "unknown side";
}

}  // namespace

CertificateCheck verify_space_certificate(const SpaceMoveCertificate& certificate, bool keep_trace) {
  CertificateCheck check;
  FiniteSpace cur = certificate.start;
  auto fail = [&](std::size_t i, std::string why) {
    check.valid = false;
    check.failed_index = i;
    check.message = "move " + std::to_string(i) + " (" + certificate.moves[i].label + "): " + why;
    check.final_space = cur;
    return check;
  };
  for (std::size_t i = 0; i < certificate.moves.size(); ++i) {
    const SpaceMove& move = certificate.moves[i];
    if (move.direction == MoveDirection::remove) {
      auto x = cur.find(move.label);
      if (!x) return fail(i, "no such point");
      if (auto why = check_side(cur, *x, move.side); !why.empty()) return fail(i, why);
      cur = without(cur, *x);
    } else {
      if (cur.find(move.label)) return fail(i, "point already present");
      const std::size_t n = cur.size();
      std::vector<Element> lo, hi;
      for (const auto& l : move.down) {
        auto e = cur.find(l);
        if (!e) return fail(i, "unknown point in down-set: " + l);
        lo.push_back(*e);
      }
      for (const auto& l : move.up) {
        auto e = cur.find(l);
        if (!e) return fail(i, "unknown point in up-set: " + l);
        hi.push_back(*e);
      }
      std::vector<std::string> labels = cur.labels();
      labels.push_back(move.label);
      std::vector<Bits> below(n + 1, Bits(n + 1));
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (cur.leq(b, a)) below[a].set(b);
      for (Element d : lo) below[n].set(d);
      for (Element u : hi) below[u].set(n);
      FiniteSpace next;
      try {
        next = FiniteSpace::from_relation(std::move(labels), std::move(below));
      } catch (const Error& e) {
        return fail(i, std::string("invalid attachment: ") + e.what());
      }
      // The closure must not have enlarged the declared sets or the old order.
      auto got_lo = strictly_below(next, n);
      auto got_hi = strictly_above(next, n);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      lo.erase(std::unique(lo.begin(), lo.end()), lo.end());
      hi.erase(std::unique(hi.begin(), hi.end()), hi.end());
      if (got_lo != lo || got_hi != hi) return fail(i, "invalid attachment: sets are not a down-set/up-set pair");
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (next.leq(a, b) != cur.leq(a, b)) return fail(i, "invalid attachment: changes the existing order");
      if (auto why = check_side(next, n, move.side); !why.empty()) return fail(i, why);
      cur = std::move(next);
    }
    if (keep_trace) check.trace.push_back(cur);
  }
  check.final_space = std::move(cur);
  return check;
}

}  // namespace finspace
