#include "finspace/continuous_map.hpp"
#include "finspace/corpus.hpp"
#include "finspace/error.hpp"
#include "finspace/functors.hpp"
#include "finspace/membership.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace finspace;
using testing::Rng;

namespace {

std::shared_ptr<const FiniteSpace> share(FiniteSpace s) { return std::make_shared<const FiniteSpace>(std::move(s)); }

FiniteSpace chain(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> covers;
  auto labels = testing::names(n, "c");
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return FiniteSpace::from_covers(labels, covers);
}

}  // namespace

TEST_CASE("continuity is checked on construction") {
  auto c = share(chain(2));
  CHECK_NOTHROW(ContinuousMap(c, c, {0, 1}));
  CHECK_THROWS_WITH_AS(ContinuousMap(c, c, {1, 0}), doctest::Contains("c0"), Error);
  CHECK_THROWS_AS(ContinuousMap(c, c, {0}), Error);
  CHECK_THROWS_AS(ContinuousMap(c, c, {0, 2}), Error);
}

TEST_CASE("composition with identities and signature checks") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    auto x = testing::random_poset(rng, 5, 0.4, "x");
    auto y = testing::random_poset(rng, 4, 0.4, "y");
    auto z = testing::random_poset(rng, 4, 0.4, "z");
    auto f = testing::random_map(rng, x, y);
    auto g = testing::random_map(rng, y, z);
    if (!f || !g) continue;
    CHECK(compose(*f, ContinuousMap::identity(f->domain_ptr())) == *f);
    CHECK(compose(ContinuousMap::identity(f->codomain_ptr()), *f) == *f);
    auto gf = compose(*g, *f);
    for (Element a = 0; a < x.size(); ++a)
      for (Element b = 0; b < x.size(); ++b)
        if (x.leq(a, b)) CHECK(z.leq(gf(a), gf(b)));
    CHECK_THROWS_AS(compose(*f, *g), Error);
  }
}

TEST_CASE("pointwise order") {
  auto c = share(chain(3));
  auto p = share(FiniteSpace::from_covers({"p"}, {}));
  ContinuousMap bottom(p, c, {0}), top(p, c, {2});
  CHECK(pointwise_leq(bottom, bottom));
  CHECK(pointwise_leq(bottom, top));
  CHECK_FALSE(pointwise_leq(top, bottom));
  CHECK_THROWS_AS(pointwise_leq(bottom, ContinuousMap::identity(c)), Error);
}

TEST_CASE("pointwise order: 1 <= f on a cone's face poset") {
  auto base = SimplicialComplex::from_facets({{"u", "v"}, {"v", "w"}});
  auto k = cone("a", base);
  auto xk = share(face_poset(k));
  std::vector<Element> image(xk->size());
  for (Element s = 0; s < xk->size(); ++s) {
    auto labels = k.to_labels(k.simplex(s));
    if (std::find(labels.begin(), labels.end(), "a") == labels.end()) labels.push_back("a");
    image[s] = *k.find(*k.to_simplex(labels));
  }
  ContinuousMap f(xk, xk, image);
  CHECK(pointwise_leq(ContinuousMap::identity(xk), f));
}

TEST_CASE("fences: length 0, length 1 in a mapping cylinder") {
  auto f = sierpinski_map();
  auto same = fence_homotopic(f, f);
  REQUIRE(same.status == FenceStatus::found);
  CHECK(same.fence.size() == 1);

  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    auto x = testing::random_poset(rng, 4, 0.4, "x");
    auto y = testing::random_poset(rng, 4, 0.4, "y");
    auto g = testing::random_map(rng, x, y);
    if (!g) continue;
    auto b = share(mapping_cylinder(*g));
    auto ix = ContinuousMap(g->domain_ptr(), b, [&] {
      std::vector<Element> v(x.size());
      std::iota(v.begin(), v.end(), 0);
      return v;
    }());
    auto iy = ContinuousMap(g->codomain_ptr(), b, [&] {
      std::vector<Element> v(y.size());
      std::iota(v.begin(), v.end(), x.size());
      return v;
    }());
    auto iyf = compose(iy, *g);
    CHECK(pointwise_leq(ix, iyf));
    auto r = fence_homotopic(ix, iyf);
    REQUIRE(r.status == FenceStatus::found);
    CHECK(r.fence.size() == 2);
    CHECK(verify_fence(ix, iyf, r.fence));
  }
}

TEST_CASE("fence oracle: agreement with components of the full mapping space") {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    auto x = testing::random_poset(rng, testing::uniform(rng, 1, 4), 0.4, "x");
    auto y = testing::random_poset(rng, testing::uniform(rng, 1, 5), 0.4, "y");
    auto maps = testing::all_maps(x, y);
    auto comp = testing::map_components(y, maps);
    for (int t = 0; t < 5; ++t) {
      auto a = testing::uniform(rng, 0, maps.size() - 1), b = testing::uniform(rng, 0, maps.size() - 1);
      ContinuousMap f(x, y, maps[a]), g(x, y, maps[b]);
      auto r = fence_homotopic(f, g);
      REQUIRE(r.status != FenceStatus::inconclusive);
      CHECK((r.status == FenceStatus::found) == (comp[a] == comp[b]));
      if (r.status == FenceStatus::found) CHECK(verify_fence(f, g, r.fence));
    }
  }
}

TEST_CASE("fences: constant maps into a connected space are homotopic") {
  Rng rng(24);
  int tried = 0;
  while (tried < 20) {
    auto y = testing::random_poset(rng, 5, 0.5, "y");
    // connected: the comparability graph has one component
    std::vector<bool> seen(y.size());
    std::vector<Element> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (Element b = 0; b < y.size(); ++b)
        if (!seen[b] && y.comparable(a, b)) seen[b] = true, stack.push_back(b);
    }
    if (std::count(seen.begin(), seen.end(), true) != static_cast<long>(y.size())) continue;
    ++tried;
    auto x = testing::random_poset(rng, 3, 0.5, "x");
    ContinuousMap f(x, y, {0, 0, 0}), g(x, y, {4, 4, 4});
    auto r = fence_homotopic(f, g);
    REQUIRE(r.status == FenceStatus::found);
    CHECK(verify_fence(f, g, r.fence));
  }
}

TEST_CASE("fences: reversal and concatenation replay") {
  Rng rng(25);
  for (int i = 0; i < 30; ++i) {
    auto x = testing::random_poset(rng, 3, 0.4, "x");
    auto y = testing::random_poset(rng, 5, 0.5, "y");
    auto maps = testing::all_maps(x, y);
    ContinuousMap f(x, y, maps[testing::uniform(rng, 0, maps.size() - 1)]);
    ContinuousMap g(x, y, maps[testing::uniform(rng, 0, maps.size() - 1)]);
    ContinuousMap h(x, y, maps[testing::uniform(rng, 0, maps.size() - 1)]);
    auto fg = fence_homotopic(f, g), gh = fence_homotopic(g, h);
    if (fg.status != FenceStatus::found || gh.status != FenceStatus::found) continue;
    auto rev = fg.fence;
    std::reverse(rev.begin(), rev.end());
    CHECK(verify_fence(g, f, rev));
    auto cat = fg.fence;
    cat.insert(cat.end(), gh.fence.begin() + 1, gh.fence.end());
    CHECK(verify_fence(f, h, cat));
    if (g.images() != h.images()) CHECK_FALSE(verify_fence(f, h, fg.fence));
  }
}

TEST_CASE("distinguished maps") {
  auto f = sierpinski_map();
  auto r = is_distinguished(f);
  CHECK_FALSE(r.distinguished);
  REQUIRE(r.first_failure);
  CHECK(f.codomain().label(*r.first_failure) == "0");
  CHECK(r.contractible[f.codomain().index_of("1")]);
  // Both closures have contractible preimages: {a} and a space with a maximum.
  CHECK(is_op_distinguished(f).distinguished);

  Rng rng(26);
  for (int i = 0; i < 30; ++i) {
    auto x = testing::random_poset(rng, 6, 0.4);
    CHECK(is_distinguished(h_map(x)).distinguished);
    CHECK(is_distinguished(h_map(x), 4).distinguished);
    // a homeomorphism: X to a relabeled copy
    auto copy = relabel(x, [](const std::string& s) { return "h" + s; });
    std::vector<Element> id(x.size());
    std::iota(id.begin(), id.end(), 0);
    ContinuousMap homeo(x, copy, id);
    CHECK(is_distinguished(homeo).distinguished);
    CHECK(is_op_distinguished(homeo).distinguished);
  }
}

TEST_CASE("property: op-distinguished means the opposite map is distinguished") {
  Rng rng(27);
  for (int i = 0; i < 60; ++i) {
    auto x = testing::random_poset(rng, 6, 0.4, "x");
    auto y = testing::random_poset(rng, 5, 0.4, "y");
    auto f = testing::random_map(rng, x, y);
    if (!f) continue;
    CHECK(is_op_distinguished(*f).distinguished == is_distinguished(opposite(*f)).distinguished);
    CHECK(is_distinguished(*f, 1).contractible == is_distinguished(*f, 3).contractible);
  }
}

TEST_CASE("mapping cylinder") {
  auto p = share(FiniteSpace::from_covers({"p"}, {}));
  auto b = mapping_cylinder(ContinuousMap::identity(p));
  CHECK(b.size() == 2);
  CHECK(b.less(b.index_of("L:p"), b.index_of("R:p")));

  Rng rng(28);
  for (int i = 0; i < 40; ++i) {
    auto x = testing::random_poset(rng, 5, 0.4, "x");
    auto y = testing::random_poset(rng, 4, 0.4, "y");
    auto f = testing::random_map(rng, x, y);
    if (!f) continue;
    auto cyl = mapping_cylinder(*f);
    CHECK(cyl.size() == x.size() + y.size());
    for (Element a = 0; a < x.size(); ++a)
      for (Element c = 0; c < x.size(); ++c) CHECK(cyl.leq(a, c) == x.leq(a, c));
    for (Element a = 0; a < y.size(); ++a)
      for (Element c = 0; c < y.size(); ++c) CHECK(cyl.leq(x.size() + a, x.size() + c) == y.leq(a, c));
    for (Element a = 0; a < x.size(); ++a)
      for (Element c = 0; c < y.size(); ++c) {
        CHECK(cyl.leq(a, x.size() + c) == y.leq((*f)(a), c));
        CHECK_FALSE(cyl.leq(x.size() + c, a));
      }
  }
}

TEST_CASE("membership evidence") {
  Rng rng(29);
  auto x = testing::random_poset(rng, 5, 0.4);
  auto copy = relabel(x, [](const std::string& s) { return "h" + s; });
  std::vector<Element> id(x.size());
  std::iota(id.begin(), id.end(), 0);
  auto homeo = membership_evidence(ContinuousMap(x, copy, id));
  REQUIRE(homeo);
  CHECK(homeo->kind == MembershipKind::homeomorphism);
  CHECK(verify_membership(*homeo));

  auto h = membership_evidence(h_map(x));
  REQUIRE(h);
  CHECK(h->kind == MembershipKind::distinguished);
  CHECK(verify_membership(*h));

  auto s = membership_evidence(sierpinski_map());
  REQUIRE(s);
  CHECK(s->kind == MembershipKind::op_distinguished);
  CHECK(verify_membership(*s));

  // The inclusion of W minus x into W: the Wallet collapses onto it.
  auto w = std::make_shared<const FiniteSpace>(wallet());
  Bits rest = w->all();
  rest.reset(w->index_of("x"));
  auto sub = std::make_shared<const FiniteSpace>(restrict_to(*w, rest));
  auto incl = ContinuousMap::inclusion(sub, w);
  auto e = membership_evidence(incl);
  REQUIRE(e);
  CHECK(verify_membership(*e));

  // A retraction onto the core is a homotopy equivalence.
  auto big = testing::random_poset(rng, 6, 0.5);
  auto r = membership_evidence(core_retraction(big));
  REQUIRE(r);
  CHECK(verify_membership(*r));

  auto comp = compose_evidence({*h, *homeo});
  CHECK_THROWS(compose_evidence({*homeo, *h}));
  (void)comp;
}

TEST_CASE("membership evidence: composites and tampering") {
  Rng rng(30);
  auto x = testing::random_poset(rng, 5, 0.4);
  auto hx = h_map(x);
  auto e1 = *membership_evidence(hx);
  auto copy = relabel(x, [](const std::string& s) { return "h" + s; });
  std::vector<Element> id(x.size());
  std::iota(id.begin(), id.end(), 0);
  auto e2 = *membership_evidence(ContinuousMap(x, copy, id));
  auto both = compose_evidence({e1, e2});
  CHECK(both.kind == MembershipKind::composite);
  CHECK(verify_membership(both));

  auto bad = e1;
  bad.preimage_cores.pop_back();
  CHECK_FALSE(verify_membership(bad));
  auto wrong = both;
  wrong.parts.pop_back();
  CHECK_FALSE(verify_membership(wrong));
  // Sierpinski evidence claimed as distinguished does not replay.
  auto s = *membership_evidence(sierpinski_map());
  s.kind = MembershipKind::distinguished;
  CHECK_FALSE(verify_membership(s));
}
