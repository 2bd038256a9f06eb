#include "finspace/corpus.hpp"

#include "finspace/error.hpp"
#include "finspace/functors.hpp"
#include "finspace/homology.hpp"
#include "finspace/homotopy.hpp"
#include "finspace/io.hpp"

#include <array>
#include <functional>
#include <map>

namespace finspace {

FiniteSpace wallet() {
  return FiniteSpace::from_covers({"t1", "t2", "x", "t4", "m1", "m2", "m3", "m4", "c1", "c2", "c3"},
                                  {{"m1", "t1"}, {"m2", "t1"}, {"m1", "t2"}, {"m3", "t2"},
                                   {"m2", "x"},  {"m4", "x"},  {"m3", "t4"}, {"m4", "t4"},
                                   {"c1", "m1"}, {"c2", "m1"}, {"c1", "m2"}, {"c2", "m2"},
                                   {"c2", "m3"}, {"c3", "m3"}, {"c2", "m4"}, {"c3", "m4"}});
}

FiniteSpace sd3() {
  std::vector<std::pair<std::string, std::string>> covers;
  for (const char* a : {"a1", "a2"})
    for (const char* b : {"b1", "b2", "b3"}) covers.emplace_back(b, a);
  return FiniteSpace::from_covers({"a1", "a2", "b1", "b2", "b3"}, covers);
}

FiniteSpace four_point() {
  return FiniteSpace::from_covers({"a", "b", "c", "d"}, {{"c", "a"}, {"c", "b"}, {"d", "c"}});
}

ContinuousMap sierpinski_map() {
  auto dom = FiniteSpace::from_covers({"a", "b", "c"}, {{"b", "a"}, {"c", "a"}});
  auto cod = FiniteSpace::from_covers({"0", "1"}, {{"0", "1"}});
  return ContinuousMap(std::move(dom), std::move(cod), {1, 0, 0});
}

// The dunce hat: a triangle whose three sides are all glued along the same
// edge, with the orientations a->b, a->b, b->a. The boundary of the disk is
// subdivided into 9 points labeled 1 2 3 1 2 3 1 3 2 (each side becomes the
// path 1-2-3 after gluing), with 5 interior points 4..8.
SimplicialComplex dunce_hat() {
  const std::vector<std::string> name = {"1", "2", "3", "1", "2", "3", "1", "3", "2",
                                         "4", "5", "6", "7", "8"};
  const std::vector<std::array<int, 3>> disk = {
      {0, 1, 12}, {0, 8, 9},   {0, 9, 12},  {1, 2, 12},  {2, 3, 10},  {2, 10, 12},
      {3, 4, 10}, {4, 5, 13},  {4, 10, 13}, {5, 6, 13},  {6, 7, 11},  {6, 11, 13},
      {7, 8, 11}, {8, 9, 11},  {9, 11, 13}, {9, 12, 13}, {10, 12, 13}};
  std::vector<std::vector<std::string>> facets;
  for (const auto& t : disk) facets.push_back({name[t[0]], name[t[1]], name[t[2]]});
  return SimplicialComplex::from_facets({"1", "2", "3", "4", "5", "6", "7", "8"}, facets);
}

namespace {

SimplicialComplex disk() {
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < 6; ++i) facets.push_back({"o", "p" + std::to_string(i), "p" + std::to_string((i + 1) % 6)});
  return SimplicialComplex::from_facets(facets);
}

struct Check {
  std::string line;
  std::function<bool(const CorpusObject&)> holds;
};

const FiniteSpace& space_of(const CorpusObject& o) { return std::get<FiniteSpace>(o); }
const SimplicialComplex& complex_of(const CorpusObject& o) { return std::get<SimplicialComplex>(o); }

bool no_beat_points(const FiniteSpace& s) {
  for (Element x = 0; x < s.size(); ++x)
    if (is_up_beat(s, x) || is_down_beat(s, x)) return false;
  return true;
}

bool no_weak_points(const FiniteSpace& s) {
  for (Element x = 0; x < s.size(); ++x)
    if (is_weak_point(s, x).weak()) return false;
  return true;
}

Bits without(const FiniteSpace& s, const std::string& label) {
  Bits m = s.all();
  m.reset(s.index_of(label));
  return m;
}

struct Recipe {
  std::string description;
  std::function<CorpusObject()> build;
  std::vector<Check> checks;
};

const std::map<std::string, Recipe>& recipes() {
  static const std::map<std::string, Recipe> table = [] {
    std::map<std::string, Recipe> t;
    t["wallet"] = {
        "the Wallet: homotopically trivial, minimal, collapsible through x",
        [] { return CorpusObject(wallet()); },
        {{"11 points", [](auto& o) { return space_of(o).size() == 11; }},
         {"no beat points (minimal finite space)", [](auto& o) { return no_beat_points(space_of(o)); }},
         {"U_x has 6 points", [](auto& o) { auto& s = space_of(o); return minimal_open(s, s.index_of("x")).size() == 6; }},
         {"x is down-weak", [](auto& o) { auto& s = space_of(o); return is_weak_point(s, s.index_of("x")).down_weak; }},
         {"U_x minus x has 5 points and is contractible",
          [](auto& o) {
            auto& s = space_of(o);
            Bits u = s.down_bits(s.index_of("x"));
            u.reset(s.index_of("x"));
            return u.count() == 5 && is_contractible(s, u);
          }},
         {"W minus x is contractible", [](auto& o) { auto& s = space_of(o); return is_contractible(s, without(s, "x")); }},
         {"reduced homology of K(W) is trivial", [](auto& o) { return reduced_homology_space(space_of(o)).trivial(); }}}};
    t["wallet-ux"] = {
        "U_x minus x inside the Wallet",
        [] {
          auto w = wallet();
          Bits u = w.down_bits(w.index_of("x"));
          u.reset(w.index_of("x"));
          return CorpusObject(restrict_to(w, u));
        },
        {{"5 points", [](auto& o) { return space_of(o).size() == 5; }},
         {"contractible", [](auto& o) { return is_contractible(space_of(o)); }}}};
    t["wallet-minus-x"] = {
        "the Wallet with x removed",
        [] {
          auto w = wallet();
          return CorpusObject(restrict_to(w, without(w, "x")));
        },
        {{"10 points", [](auto& o) { return space_of(o).size() == 10; }},
         {"contractible", [](auto& o) { return is_contractible(space_of(o)); }}}};
    t["sd3"] = {
        "SD3: two points over three, no weak points",
        [] { return CorpusObject(sd3()); },
        {{"no beat points", [](auto& o) { return no_beat_points(space_of(o)); }},
         {"no weak points", [](auto& o) { return no_weak_points(space_of(o)); }},
         {"chi(K) = -1", [](auto& o) { return euler_characteristic(order_complex(space_of(o))) == -1; }}}};
    t["sd3-op"] = {
        "the opposite of SD3",
        [] { return CorpusObject(opposite(sd3())); },
        {{"no weak points", [](auto& o) { return no_weak_points(space_of(o)); }},
         {"not isomorphic to SD3", [](auto& o) { return !is_isomorphic(space_of(o), sd3()); }}}};
    t["four-point"] = {
        "four points: a and b over c, c over d",
        [] { return CorpusObject(four_point()); },
        {{"U_c = {c,d}",
          [](auto& o) {
            auto& s = space_of(o);
            auto u = minimal_open(s, s.index_of("c"));
            return u.size() == 2 && u.contains(s.index_of("d"));
          }},
         {"d is the minimum", [](auto& o) { auto& s = space_of(o); return closure(s, s.index_of("d")).size() == 4; }}}};
    t["sierpinski-dom"] = {"three points: a over b and c",
                           [] { return CorpusObject(sierpinski_map().domain()); },
                           {}};
    t["sierpinski-cod"] = {"the Sierpinski space 0 < 1",
                           [] { return CorpusObject(sierpinski_map().codomain()); },
                           {}};
    t["sierpinski-map"] = {
        "a continuous map that is not distinguished: a -> 1, b, c -> 0",
        [] { return CorpusObject(sierpinski_map()); },
        {{"not distinguished, first failure at 0",
          [](auto& o) {
            const auto& f = std::get<ContinuousMap>(o);
            auto r = is_distinguished(f);
            return !r.distinguished && r.first_failure && f.codomain().label(*r.first_failure) == "0";
          }}}};
    t["dunce"] = {
        "an 8-vertex triangulation of the dunce hat",
        [] { return CorpusObject(dunce_hat()); },
        {{"f-vector (8, 24, 17)",
          [](auto& o) { return complex_of(o).f_vector() == std::vector<std::size_t>{8, 24, 17}; }},
         {"chi = 1", [](auto& o) { return euler_characteristic(complex_of(o)) == 1; }},
         {"reduced homology is trivial", [](auto& o) { return reduced_homology(complex_of(o)).trivial(); }},
         {"no free faces", [](auto& o) { return free_pairs(complex_of(o)).empty(); }}}};
    t["disk"] = {
        "a hexagon coned to its centre",
        [] { return CorpusObject(disk()); },
        {{"chi = 1", [](auto& o) { return euler_characteristic(complex_of(o)) == 1; }},
         {"has free faces", [](auto& o) { return !free_pairs(complex_of(o)).empty(); }}}};
    return t;
  }();
  return table;
}

const Recipe& recipe(const std::string& name) {
  auto it = recipes().find(name);
  if (it == recipes().end()) throw Error("unknown example: " + name);
  return it->second;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, r] : recipes()) out.push_back(name);
  return out;
}

CorpusEntry corpus_entry(const std::string& name) {
  const Recipe& r = recipe(name);
  CorpusEntry entry{name, r.description, r.build(), {}};
  for (const auto& check : r.checks) {
    if (!check.holds(entry.object)) throw Error(name + ": manifest check failed: " + check.line);
    entry.manifest.push_back(check.line);
  }
  return entry;
}

std::string corpus_text(const std::string& name) {
  auto entry = corpus_entry(name);
  if (auto* s = std::get_if<FiniteSpace>(&entry.object)) return format_poset(*s);
  if (auto* k = std::get_if<SimplicialComplex>(&entry.object)) return format_complex(*k);
  auto base = name.substr(0, name.rfind('-'));
  return format_map(std::get<ContinuousMap>(entry.object), "example:" + base + "-dom", "example:" + base + "-cod");
}

}  // namespace finspace
