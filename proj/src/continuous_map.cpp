#include "finspace/continuous_map.hpp"

#include "finspace/error.hpp"
#include "finspace/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>

namespace finspace {

ContinuousMap::ContinuousMap(std::shared_ptr<const FiniteSpace> domain,
                             std::shared_ptr<const FiniteSpace> codomain, std::vector<Element> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (!domain_ || !codomain_) throw Error("map needs a domain and a codomain");
  if (image_.size() != domain_->size()) throw Error("map image has wrong length");
  for (Element x = 0; x < image_.size(); ++x)
    if (image_[x] >= codomain_->size())
      throw Error("image of " + domain_->label(x) + " is outside the codomain");
  for (Element x = 0; x < image_.size(); ++x) {
    const Bits& above = domain_->up_bits(x);
    for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y))
      if (!codomain_->leq(image_[x], image_[y]))
        throw Error("map is not order-preserving: " + domain_->label(x) + " <= " + domain_->label(y) +
                    " but " + codomain_->label(image_[x]) + " is not <= " + codomain_->label(image_[y]));
  }
}

ContinuousMap::ContinuousMap(FiniteSpace domain, FiniteSpace codomain, std::vector<Element> image)
    : ContinuousMap(std::make_shared<const FiniteSpace>(std::move(domain)),
                    std::make_shared<const FiniteSpace>(std::move(codomain)), std::move(image)) {}

ContinuousMap ContinuousMap::identity(std::shared_ptr<const FiniteSpace> space) {
  std::vector<Element> image(space->size());
  for (Element x = 0; x < image.size(); ++x) image[x] = x;
  return ContinuousMap(space, space, std::move(image));
}

ContinuousMap ContinuousMap::inclusion(std::shared_ptr<const FiniteSpace> sub,
                                       std::shared_ptr<const FiniteSpace> super) {
  std::vector<Element> image;
  image.reserve(sub->size());
  for (const auto& label : sub->labels()) image.push_back(super->index_of(label));
  return ContinuousMap(std::move(sub), std::move(super), std::move(image));
}

Bits ContinuousMap::preimage(const Bits& target) const {
  Bits out(image_.size());
  for (Element x = 0; x < image_.size(); ++x)
    if (target.test(image_[x])) out.set(x);
  return out;
}

bool same_space(const FiniteSpace& a, const FiniteSpace& b) {
  if (&a == &b) return true;
  if (a.labels() != b.labels()) return false;
  for (Element x = 0; x < a.size(); ++x)
    if (a.down_bits(x) != b.down_bits(x)) return false;
  return true;
}

bool same_signature(const ContinuousMap& f, const ContinuousMap& g) {
  return same_space(f.domain(), g.domain()) && same_space(f.codomain(), g.codomain());
}

bool operator==(const ContinuousMap& f, const ContinuousMap& g) {
  return same_signature(f, g) && f.images() == g.images();
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  if (!same_space(f.codomain(), g.domain())) throw Error("compose: codomain of f is not the domain of g");
  std::vector<Element> image(f.domain().size());
  for (Element x = 0; x < image.size(); ++x) image[x] = g(f(x));
  return ContinuousMap(f.domain_ptr(), g.codomain_ptr(), std::move(image));
}

bool pointwise_leq(const ContinuousMap& f, const ContinuousMap& g) {
  if (!same_signature(f, g)) throw Error("pointwise_leq: maps have different signatures");
  for (Element x = 0; x < f.domain().size(); ++x)
    if (!f.codomain().leq(f(x), g(x))) return false;
  return true;
}

ContinuousMap opposite(const ContinuousMap& f) {
  return ContinuousMap(opposite(f.domain()), opposite(f.codomain()), f.images());
}

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = v.size();
    for (Element e : v) h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool comparable_images(const FiniteSpace& cod, const std::vector<Element>& a, const std::vector<Element>& b) {
  bool le = true, ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    le = le && cod.leq(a[i], b[i]);
    ge = ge && cod.leq(b[i], a[i]);
  }
  return le || ge;
}

}  // namespace

FenceResult fence_homotopic(const ContinuousMap& f, const ContinuousMap& g, std::size_t budget) {
  if (!same_signature(f, g)) throw Error("fence_homotopic: maps have different signatures");
  FenceResult result;
  const FiniteSpace& dom = f.domain();
  const FiniteSpace& cod = f.codomain();
  if (f.images() == g.images()) {
    result.status = FenceStatus::found;
    result.fence.push_back(f);
    result.explored = 1;
    return result;
  }
  if (pointwise_leq(f, g) || pointwise_leq(g, f)) {
    result.status = FenceStatus::found;
    result.fence = {f, g};
    result.explored = 1;
    return result;
  }

  std::vector<std::vector<Element>> states{f.images()};
  std::vector<std::size_t> parent{0};
  std::unordered_map<std::vector<Element>, std::size_t, ImageHash> seen{{f.images(), 0}};
  std::deque<std::size_t> queue{0};
  std::optional<std::size_t> hit;
  bool truncated = false;

  while (!queue.empty() && !hit) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (Element x = 0; x < dom.size() && !hit; ++x) {
      const Element fx = states[cur][x];
      Bits candidates = cod.down_bits(fx) | cod.up_bits(fx);
      candidates.reset(fx);
      for (auto y = candidates.find_first(); y != Bits::npos && !hit; y = candidates.find_next(y)) {
        bool continuous = true;
        const Bits& below = dom.down_bits(x);
        for (auto z = below.find_first(); z != Bits::npos && continuous; z = below.find_next(z))
          if (z != x) continuous = cod.leq(states[cur][z], y);
        const Bits& above = dom.up_bits(x);
        for (auto z = above.find_first(); z != Bits::npos && continuous; z = above.find_next(z))
          if (z != x) continuous = cod.leq(y, states[cur][z]);
        if (!continuous) continue;
        auto next = states[cur];
        next[x] = y;
        if (seen.count(next)) continue;
        if (states.size() >= budget) {
          truncated = true;
          continue;
        }
        seen.emplace(next, states.size());
        states.push_back(std::move(next));
        parent.push_back(cur);
        if (states.back() == g.images()) hit = states.size() - 1;
        queue.push_back(states.size() - 1);
      }
    }
  }
  result.explored = states.size();
  if (!hit) {
    result.status = truncated ? FenceStatus::inconclusive : FenceStatus::not_homotopic;
    return result;
  }

  std::vector<std::size_t> path;
  for (std::size_t s = *hit; s != 0; s = parent[s]) path.push_back(s);
  path.push_back(0);
  std::reverse(path.begin(), path.end());

  // Greedy shortening: jump to the furthest state comparable with the current one.
  std::vector<std::size_t> shortened{path.front()};
  std::size_t at = 0;
  while (at + 1 < path.size()) {
    std::size_t jump = at + 1;
    for (std::size_t j = path.size() - 1; j > at + 1; --j)
      if (comparable_images(cod, states[path[at]], states[path[j]])) {
        jump = j;
        break;
      }
    shortened.push_back(path[jump]);
    at = jump;
  }
  for (std::size_t s : shortened)
    result.fence.emplace_back(f.domain_ptr(), f.codomain_ptr(), states[s]);
  result.status = FenceStatus::found;
  return result;
}

bool verify_fence(const ContinuousMap& f, const ContinuousMap& g, const std::vector<ContinuousMap>& fence) {
  if (fence.empty()) return false;
  if (!(fence.front() == f) || !(fence.back() == g)) return false;
  for (std::size_t i = 0; i + 1 < fence.size(); ++i) {
    if (!same_signature(fence[i], fence[i + 1])) return false;
    if (!pointwise_leq(fence[i], fence[i + 1]) && !pointwise_leq(fence[i + 1], fence[i])) return false;
  }
  return true;
}

namespace {

DistinguishedReport distinguished_impl(const ContinuousMap& f, bool use_closure, unsigned jobs) {
  const FiniteSpace& cod = f.codomain();
  const std::size_t m = cod.size();
  std::vector<char> ok(m, 0);
  auto check = [&](Element y) {
    const Bits& target = use_closure ? cod.up_bits(y) : cod.down_bits(y);
    ok[y] = is_contractible(f.domain(), f.preimage(target)) ? 1 : 0;
  };
  if (jobs <= 1 || m < 2) {
    for (Element y = 0; y < m; ++y) check(y);
  } else {
    std::vector<std::thread> workers;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(m));
    for (unsigned w = 0; w < n; ++w)
      workers.emplace_back([&, w] {
        for (Element y = w; y < m; y += n) check(y);
      });
    for (auto& t : workers) t.join();
  }
  DistinguishedReport report;
  report.contractible.assign(ok.begin(), ok.end());
  auto order = linear_extension(cod);
  if (use_closure) std::reverse(order.begin(), order.end());
  for (Element y : order)
    if (!ok[y]) {
      report.distinguished = false;
      report.first_failure = y;
      break;
    }
  return report;
}

}  // namespace

DistinguishedReport is_distinguished(const ContinuousMap& f, unsigned jobs) {
  return distinguished_impl(f, false, jobs);
}

DistinguishedReport is_op_distinguished(const ContinuousMap& f, unsigned jobs) {
  return distinguished_impl(f, true, jobs);
}

std::string cylinder_label(bool domain_side, const std::string& label) {
  return (domain_side ? "L:" : "R:") + label;
}

FiniteSpace mapping_cylinder(const ContinuousMap& f) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  const std::size_t n = x.size(), m = y.size();
  std::vector<std::string> labels;
  std::vector<Bits> below(n + m, Bits(n + m));
  for (Element a = 0; a < n; ++a) {
    labels.push_back(cylinder_label(true, x.label(a)));
    for (Element b = 0; b < n; ++b)
      if (x.leq(b, a)) below[a].set(b);
  }
  for (Element a = 0; a < m; ++a) {
    labels.push_back(cylinder_label(false, y.label(a)));
    for (Element b = 0; b < m; ++b)
      if (y.leq(b, a)) below[n + a].set(n + b);
    for (Element b = 0; b < n; ++b)
      if (y.leq(f(b), a)) below[n + a].set(b);
  }
  return FiniteSpace::from_relation(std::move(labels), std::move(below));
}

}  // namespace finspace
