#include "finspace/corpus.hpp"
#include "finspace/error.hpp"
#include "finspace/finite_space.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace finspace;
using testing::Rng;

namespace {

std::set<std::string> label_set(const FiniteSpace& s, const ElementSubset& sub) {
  std::set<std::string> out;
  for (auto e : sub.elements()) out.insert(s.label(e));
  return out;
}

// Isomorphism by trying every bijection.
bool brute_isomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Element i = 0; i < a.size() && ok; ++i)
      for (Element j = 0; j < a.size() && ok; ++j) ok = a.leq(i, j) == b.leq(p[i], p[j]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("four-point example: open sets and Hasse diagram") {
  auto s = four_point();
  CHECK(label_set(s, minimal_open(s, s.index_of("c"))) == std::set<std::string>{"c", "d"});
  CHECK(label_set(s, minimal_open(s, s.index_of("d"))) == std::set<std::string>{"d"});
  CHECK(label_set(s, closure(s, s.index_of("d"))) == std::set<std::string>{"a", "b", "c", "d"});
  CHECK(label_set(s, minimal_open(s, s.index_of("a"))) == std::set<std::string>{"a", "c", "d"});
  CHECK(hasse_edges(s).size() == 3);
}

TEST_CASE("from_covers: trivial cases and errors") {
  auto p = FiniteSpace::from_covers({"p"}, {});
  CHECK(p.size() == 1);
  CHECK(p.leq(0, 0));
  CHECK_THROWS_WITH_AS(FiniteSpace::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), doctest::Contains("cycle"),
                       Error);
  CHECK_THROWS_AS(FiniteSpace::from_covers({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(FiniteSpace::from_covers({"a"}, {{"a", "z"}}), Error);
}

TEST_CASE("chain: Hasse edges are the transitive reduction") {
  auto s = FiniteSpace::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto edges = hasse_edges(s);
  REQUIRE(edges.size() == 2);
  CHECK(s.leq(s.index_of("a"), s.index_of("c")));
  for (auto [x, y] : edges) CHECK_FALSE((s.label(x) == "a" && s.label(y) == "c"));
}

TEST_CASE("minimal open sets of the Wallet") {
  auto w = wallet();
  auto x = w.index_of("x");
  CHECK(label_set(w, minimal_open(w, x)) == std::set<std::string>{"x", "m2", "m4", "c1", "c2", "c3"});
  Bits rest = w.all();
  rest.reset(x);
  CHECK(subspace(w, ElementSubset(rest)).size() == 10);
  Bits ux = w.down_bits(x);
  ux.reset(x);
  auto u = subspace(w, ElementSubset(ux));
  CHECK(u.size() == 5);
  CHECK(subspace(w, ElementSubset(w.all())) == w);
  CHECK_THROWS_AS(subspace(w, ElementSubset(Bits(w.size()))), Error);
  CHECK_THROWS(minimal_open(w, 11));
}

TEST_CASE("opposite: SD3 and involution") {
  auto op = opposite(sd3());
  std::size_t maximal = 0;
  for (Element x = 0; x < op.size(); ++x) maximal += op.up_bits(x).count() == 1;
  CHECK(maximal == 3);
  auto chain = FiniteSpace::from_covers({"a", "b"}, {{"a", "b"}});
  CHECK(opposite(chain).leq(1, 0));
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    auto s = testing::random_poset(rng, 7);
    CHECK(opposite(opposite(s)) == s);
  }
}

TEST_CASE("property: closure is the minimal open set of the opposite") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto s = testing::random_poset(rng, 8);
    auto op = opposite(s);
    for (Element x = 0; x < s.size(); ++x) CHECK(closure(s, x) == minimal_open(op, x));
  }
}

TEST_CASE("property: basis and preorder correspondence") {
  Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    auto s = testing::random_poset(rng, 8, 0.4);
    for (Element x = 0; x < s.size(); ++x)
      for (Element y = 0; y < s.size(); ++y) {
        CHECK(minimal_open(s, x).contains(y) == s.leq(y, x));
        if (s.leq(y, x)) CHECK((s.down_bits(y) & ~s.down_bits(x)).none());
      }
  }
}

TEST_CASE("property: from_covers(hasse_edges(X)) = X and reduction is idempotent") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    auto s = testing::random_poset(rng, 8, 0.4);
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [x, y] : hasse_edges(s)) covers.emplace_back(s.label(x), s.label(y));
    auto back = FiniteSpace::from_covers(s.labels(), covers);
    CHECK(back == s);
    CHECK(hasse_edges(back) == hasse_edges(s));
    // Every cover is a strict relation with nothing between.
    for (auto [x, y] : hasse_edges(s)) {
      CHECK(s.less(x, y));
      for (Element z = 0; z < s.size(); ++z) CHECK_FALSE((s.less(x, z) && s.less(z, y)));
    }
  }
}

TEST_CASE("linear extension respects the order") {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    auto s = testing::random_poset(rng, 9);
    auto order = linear_extension(s);
    std::vector<std::size_t> pos(s.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    for (Element x = 0; x < s.size(); ++x)
      for (Element y = 0; y < s.size(); ++y)
        if (s.less(x, y)) CHECK(pos[x] < pos[y]);
  }
}

TEST_CASE("isomorphism: examples") {
  auto w = wallet();
  auto id = is_isomorphic(w, w);
  REQUIRE(id);
  CHECK_FALSE(is_isomorphic(sd3(), opposite(sd3())));
}

TEST_CASE("isomorphism oracle: unlabeled poset counts 1, 2, 5, 16, 63") {
  const std::vector<std::size_t> expected = {1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(testing::all_posets(n).size() == expected[n - 1]);
}

TEST_CASE("property: isomorphism agrees with brute force and is a valid bijection") {
  Rng rng(15);
  for (int i = 0; i < 150; ++i) {
    auto n = testing::uniform(rng, 1, 6);
    auto a = testing::random_poset(rng, n, 0.4);
    auto b = testing::random_poset(rng, n, 0.4);
    auto iso = is_isomorphic(a, b);
    CHECK(iso.has_value() == brute_isomorphic(a, b));
    CHECK(iso.has_value() == is_isomorphic(b, a).has_value());
    if (iso) {
      std::set<Element> image(iso->begin(), iso->end());
      CHECK(image.size() == n);
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) CHECK(a.leq(x, y) == b.leq((*iso)[x], (*iso)[y]));
    }
  }
}

TEST_CASE("property: isomorphism is invariant under relabeling and reindexing") {
  Rng rng(16);
  for (int i = 0; i < 60; ++i) {
    auto s = testing::random_poset(rng, 10, 0.3);
    std::vector<Element> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels(s.size());
    std::vector<Bits> below(s.size(), Bits(s.size()));
    for (Element x = 0; x < s.size(); ++x) {
      labels[perm[x]] = "q" + s.label(x);
      for (Element y = 0; y < s.size(); ++y)
        if (s.leq(y, x)) below[perm[x]].set(perm[y]);
    }
    auto t = FiniteSpace::from_relation(labels, below);
    CHECK(is_isomorphic(s, t).has_value());
    CHECK(fingerprint(s) == fingerprint(t));
  }
}
