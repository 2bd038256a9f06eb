#include "finspace/simplicial_complex.hpp"

#include "finspace/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace finspace {

namespace {

bool by_dimension(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Proper nonempty faces of codimension one.
std::vector<Simplex> boundary_faces(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) f.push_back(s[j]);
    out.push_back(std::move(f));
  }
  return out;
}

Simplex normalized(Simplex s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

std::string join_labels(const std::vector<std::string>& labels, char sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += labels[i];
  }
  return out;
}

void SimplicialComplex::index_labels() {
  vertex_index_.clear();
  for (Vertex v = 0; v < labels_.size(); ++v) {
    const auto& l = labels_[v];
    if (l.empty() || l.find_first_of(" \t\r\n#{},") != std::string::npos)
      throw Error("invalid vertex label '" + l + "'");
    if (!vertex_index_.emplace(l, v).second) throw Error("duplicate vertex label: " + l);
  }
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertex_labels,
                                                    std::vector<Simplex> simplices) {
  SimplicialComplex k;
  k.labels_ = std::move(vertex_labels);
  k.index_labels();
  for (auto& s : simplices) {
    if (s.empty()) throw Error("empty simplex");
    auto n = normalized(s);
    if (n.size() != s.size()) throw Error("simplex with repeated vertex");
    if (n.back() >= k.labels_.size()) throw Error("simplex vertex out of range");
    s = std::move(n);
  }
  std::sort(simplices.begin(), simplices.end(), by_dimension);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  k.simplices_ = std::move(simplices);
  for (std::size_t i = 0; i < k.simplices_.size(); ++i) k.lookup_.emplace(k.simplices_[i], i);
  for (Vertex v = 0; v < k.labels_.size(); ++v)
    if (!k.lookup_.count(Simplex{v})) throw Error("vertex " + k.labels_[v] + " is not a 0-simplex");
  for (const auto& s : k.simplices_)
    for (const auto& f : boundary_faces(s))
      if (!k.lookup_.count(f)) throw Error("not closed under faces: missing " + k.simplex_label(f));
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_labels,
                                                 const std::vector<std::vector<std::string>>& facets) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < vertex_labels.size(); ++v) index.emplace(vertex_labels[v], v);
  std::set<Simplex> all;
  for (Vertex v = 0; v < vertex_labels.size(); ++v) all.insert(Simplex{v});
  for (const auto& facet : facets) {
    if (facet.empty()) throw Error("empty facet");
    Simplex s;
    for (const auto& l : facet) {
      auto [it, fresh] = index.emplace(l, static_cast<Vertex>(vertex_labels.size()));
      if (fresh) vertex_labels.push_back(l);
      s.push_back(it->second);
    }
    auto n = normalized(s);
    if (n.size() != s.size()) throw Error("facet with repeated vertex");
    if (n.size() > 24) throw Error("facet too large to close");
    const std::size_t d = n.size();
    for (std::uint32_t m = 1; m < (1u << d); ++m) {
      Simplex f;
      for (std::size_t i = 0; i < d; ++i)
        if (m & (1u << i)) f.push_back(n[i]);
      all.insert(std::move(f));
    }
  }
  return from_simplices(std::move(vertex_labels), std::vector<Simplex>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
  return from_facets({}, facets);
}

std::optional<Vertex> SimplicialComplex::find_vertex(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Simplex> SimplicialComplex::to_simplex(const std::vector<std::string>& labels) const {
  Simplex s;
  for (const auto& l : labels) {
    auto v = find_vertex(l);
    if (!v) return std::nullopt;
    s.push_back(*v);
  }
  return normalized(std::move(s));
}

std::vector<std::string> SimplicialComplex::to_labels(const Simplex& s) const {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(labels_.at(v));
  return out;
}

std::string SimplicialComplex::simplex_label(const Simplex& s) const { return join_labels(to_labels(s)); }

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(dimension() + 1, 0);
  for (const auto& s : simplices_) ++f[s.size() - 1];
  return f;
}

std::vector<std::size_t> SimplicialComplex::cofaces(const Simplex& s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    const auto& t = simplices_[i];
    if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) out.push_back(i);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (cofaces(s).empty()) out.push_back(s);
  return out;
}

namespace {

std::set<std::vector<std::string>> labeled_simplices(const SimplicialComplex& k) {
  std::set<std::vector<std::string>> out;
  for (const auto& s : k.simplices()) {
    auto l = k.to_labels(s);
    std::sort(l.begin(), l.end());
    out.insert(std::move(l));
  }
  return out;
}

}  // namespace

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.size() != b.size() || a.vertex_count() != b.vertex_count()) return false;
  return labeled_simplices(a) == labeled_simplices(b);
}

bool identical(const SimplicialComplex& a, const SimplicialComplex& b) {
  return &a == &b || (a.vertex_labels() == b.vertex_labels() && a.simplices() == b.simplices());
}

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (const auto& s : k.simplices()) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

// --- collapses ------------------------------------------------------------------

std::string collapse_pair_problem(const SimplicialComplex& k, const Simplex& face) {
  if (!k.contains(face)) return "face is not a simplex of the complex";
  auto co = k.cofaces(face);
  if (co.empty()) return "face " + k.simplex_label(face) + " has no proper coface";
  if (co.size() > 1) return "face " + k.simplex_label(face) + " has " + std::to_string(co.size()) + " proper cofaces";
  const auto& top = k.simplex(co.front());
  if (top.size() != face.size() + 1) return "coface is not one dimension higher";
  if (!k.cofaces(top).empty()) return "coface is not maximal";
  return {};
}

std::vector<FreePair> free_pairs(const SimplicialComplex& k) {
  const auto& all = k.simplices();
  std::vector<std::size_t> up_count(all.size(), 0);
  std::vector<std::size_t> last_up(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& f : boundary_faces(all[i])) {
      auto j = *k.find(f);
      ++up_count[j];
      last_up[j] = i;
    }
  std::vector<FreePair> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (up_count[i] != 1 || up_count[last_up[i]] != 0) continue;
    const auto& top = all[last_up[i]];
    Vertex apex = 0;
    for (Vertex v : top)
      if (!std::binary_search(all[i].begin(), all[i].end(), v)) apex = v;
    out.push_back({all[i], apex});
  }
  return out;
}

SimplicialComplex apply_move(const SimplicialComplex& k, const SimplicialMove& move) {
  std::vector<std::string> face = move.face;
  std::sort(face.begin(), face.end());
  if (face.empty()) throw Error("empty face");
  if (std::adjacent_find(face.begin(), face.end()) != face.end()) throw Error("face repeats a vertex");
  if (std::find(face.begin(), face.end(), move.apex) != face.end()) throw Error("apex lies in the face");

  if (move.direction == MoveDirection::remove) {
    auto s = k.to_simplex(move.face);
    if (!s) throw Error("face is not a simplex of the complex");
    auto problem = collapse_pair_problem(k, *s);
    if (!problem.empty()) throw Error(problem);
    auto top = k.simplex(k.cofaces(*s).front());
    auto a = k.find_vertex(move.apex);
    if (!a || !std::binary_search(top.begin(), top.end(), *a)) throw Error("coface is not apex * face");
    return elementary_collapse(k, *s).first;
  }

  // Elementary expansion: every face of aS other than S and aS is present,
  // while S and aS are not.
  auto apex = k.find_vertex(move.apex);
  if (!apex) throw Error("apex " + move.apex + " is not a vertex");
  std::vector<std::string> labels = k.vertex_labels();
  std::vector<Simplex> simplices = k.simplices();
  Simplex s;
  for (const auto& l : move.face) {
    auto v = k.find_vertex(l);
    if (!v) {
      if (move.face.size() != 1) throw Error("face vertex " + l + " is not a vertex");
      labels.push_back(l);
      v = static_cast<Vertex>(labels.size() - 1);
      s.push_back(*v);
      continue;
    }
    s.push_back(*v);
  }
  s = normalized(std::move(s));
  if (k.contains(s)) throw Error("face " + join_labels(move.face) + " is already present");
  Simplex top = s;
  top.push_back(*apex);
  top = normalized(std::move(top));
  for (const auto& f : boundary_faces(s))
    if (!k.contains(f)) throw Error("missing boundary face of S");
  for (const auto& f : boundary_faces(top))
    if (f != s && !k.contains(f)) throw Error("missing face of aS outside S");
  simplices.push_back(s);
  simplices.push_back(top);
  return SimplicialComplex::from_simplices(std::move(labels), std::move(simplices));
}

std::pair<SimplicialComplex, SimplicialMove> elementary_collapse(const SimplicialComplex& k, const Simplex& face) {
  auto problem = collapse_pair_problem(k, face);
  if (!problem.empty()) throw Error("not an elementary collapse: " + problem);
  const auto top = k.simplex(k.cofaces(face).front());
  Vertex apex = 0;
  for (Vertex v : top)
    if (!std::binary_search(face.begin(), face.end(), v)) apex = v;

  std::vector<std::string> labels;
  std::vector<Vertex> remap(k.vertex_count(), 0);
  const bool drop_vertex = face.size() == 1;
  for (Vertex v = 0; v < k.vertex_count(); ++v) {
    if (drop_vertex && v == face.front()) continue;
    remap[v] = static_cast<Vertex>(labels.size());
    labels.push_back(k.vertex_label(v));
  }
  std::vector<Simplex> rest;
  for (const auto& s : k.simplices()) {
    if (s == face || s == top) continue;
    Simplex t;
    for (Vertex v : s) t.push_back(remap[v]);
    rest.push_back(std::move(t));
  }
  SimplicialMove move{MoveDirection::remove, k.to_labels(face), k.vertex_label(apex)};
  return {SimplicialComplex::from_simplices(std::move(labels), std::move(rest)), std::move(move)};
}

SimplicialCertificateCheck verify_simplicial_certificate(const SimplicialMoveCertificate& certificate,
                                                         bool keep_trace) {
  SimplicialCertificateCheck check;
  SimplicialComplex cur = certificate.start;
  for (std::size_t i = 0; i < certificate.moves.size(); ++i) {
    const auto& move = certificate.moves[i];
    try {
      SimplicialComplex next = apply_move(cur, move);
      if (euler_characteristic(next) != euler_characteristic(cur)) throw Error("Euler characteristic changed");
      cur = std::move(next);
    } catch (const Error& e) {
      check.valid = false;
      check.failed_index = i;
      check.message = "move " + std::to_string(i) + " ({" + join_labels(move.face, ',') + "}, " + move.apex +
                      "): " + e.what();
      check.final_complex = std::move(cur);
      return check;
    }
    if (keep_trace) check.trace.push_back(cur);
  }
  check.final_complex = std::move(cur);
  return check;
}

namespace {

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::vector<Bits::block_type> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    std::size_t h = b.size();
    for (auto w : blocks) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

SimplicialComplex restrict_complex(const SimplicialComplex& k, const Bits& alive) {
  std::vector<bool> used(k.vertex_count(), false);
  for (auto i = alive.find_first(); i != Bits::npos; i = alive.find_next(i))
    for (Vertex v : k.simplex(i)) used[v] = true;
  std::vector<std::string> labels;
  std::vector<Vertex> remap(k.vertex_count(), 0);
  for (Vertex v = 0; v < k.vertex_count(); ++v)
    if (used[v]) {
      remap[v] = static_cast<Vertex>(labels.size());
      labels.push_back(k.vertex_label(v));
    }
  std::vector<Simplex> simplices;
  for (auto i = alive.find_first(); i != Bits::npos; i = alive.find_next(i)) {
    Simplex t;
    for (Vertex v : k.simplex(i)) t.push_back(remap[v]);
    simplices.push_back(std::move(t));
  }
  return SimplicialComplex::from_simplices(std::move(labels), std::move(simplices));
}

}  // namespace

SimplicialSearchResult collapse_sequence_search(const SimplicialComplex& k,
                                                const std::optional<SimplicialComplex>& target,
                                                std::size_t budget) {
  SimplicialSearchResult result;
  const auto& all = k.simplices();
  const std::size_t n = all.size();
  if (n == 0) return result;
  // Immediate cofaces of each simplex.
  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& f : boundary_faces(all[i])) up[*k.find(f)].push_back(i);

  const std::size_t goal = target ? target->size() : 1;
  std::unordered_set<Bits, BitsHash> visited;
  std::vector<SimplicialMove> path;
  bool truncated = false;

  std::function<bool(const Bits&)> dfs = [&](const Bits& alive) -> bool {
    if (++result.nodes > budget) {
      truncated = true;
      return false;
    }
    const std::size_t size = alive.count();
    if (size == goal) return !target || is_isomorphic(restrict_complex(k, alive), *target).has_value();
    if (size < goal) return false;
    for (auto i = alive.find_first(); i != Bits::npos; i = alive.find_next(i)) {
      std::size_t live_up = 0, top = 0;
      for (std::size_t j : up[i])
        if (alive.test(j)) {
          ++live_up;
          top = j;
        }
      if (live_up != 1) continue;
      if (std::any_of(up[top].begin(), up[top].end(), [&](std::size_t j) { return alive.test(j); })) continue;
      Bits next = alive;
      next.reset(i);
      next.reset(top);
      if (!visited.insert(next).second) continue;
      Vertex apex = 0;
      for (Vertex v : all[top])
        if (!std::binary_search(all[i].begin(), all[i].end(), v)) apex = v;
      path.push_back({MoveDirection::remove, k.to_labels(all[i]), k.vertex_label(apex)});
      if (dfs(next)) return true;
      path.pop_back();
      if (truncated) return false;
    }
    return false;
  };

  Bits start(n);
  start.set();
  visited.insert(start);
  if (dfs(start)) {
    result.status = SearchStatus::found;
    result.certificate = SimplicialMoveCertificate{k, path};
  } else {
    result.status = truncated ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
  }
  return result;
}

// --- constructions ---------------------------------------------------------------

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  const auto& all = k.simplices();
  const std::size_t n = all.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : all) labels.push_back(k.simplex_label(s));
  // Proper cofaces by subset test; they always have a larger index.
  std::vector<std::vector<Vertex>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (all[j].size() > all[i].size() && std::includes(all[j].begin(), all[j].end(), all[i].begin(), all[i].end()))
        above[i].push_back(static_cast<Vertex>(j));
  std::vector<Simplex> chains;
  Simplex chain;
  std::function<void(Vertex)> grow = [&](Vertex last) {
    chains.push_back(chain);
    for (Vertex next : above[last]) {
      chain.push_back(next);
      grow(next);
      chain.pop_back();
    }
  };
  for (Vertex i = 0; i < n; ++i) {
    chain = {i};
    grow(i);
  }
  return SimplicialComplex::from_simplices(std::move(labels), std::move(chains));
}

SimplicialComplex cone(const std::string& apex, const SimplicialComplex& base) {
  if (base.find_vertex(apex)) throw Error("cone apex " + apex + " is already a vertex");
  std::vector<std::string> labels = base.vertex_labels();
  labels.push_back(apex);
  const Vertex a = static_cast<Vertex>(labels.size() - 1);
  std::vector<Simplex> simplices = base.simplices();
  simplices.push_back({a});
  for (const auto& s : base.simplices()) {
    Simplex t = s;
    t.push_back(a);
    simplices.push_back(std::move(t));
  }
  return SimplicialComplex::from_simplices(std::move(labels), std::move(simplices));
}

std::optional<std::vector<Vertex>> is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.f_vector() != b.f_vector()) return std::nullopt;
  auto profile = [](const SimplicialComplex& k) {
    std::vector<std::vector<std::size_t>> p(k.vertex_count(), std::vector<std::size_t>(k.dimension() + 1, 0));
    for (const auto& s : k.simplices())
      for (Vertex v : s) ++p[v][s.size() - 1];
    return p;
  };
  auto pa = profile(a), pb = profile(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  auto adjacent = [](const SimplicialComplex& k, Vertex u, Vertex v) {
    return k.contains(u < v ? Simplex{u, v} : Simplex{v, u});
  };
  std::vector<Vertex> image(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(Vertex)> extend = [&](Vertex x) -> bool {
    if (x == n) {
      for (const auto& s : a.simplices()) {
        Simplex t;
        for (Vertex v : s) t.push_back(image[v]);
        std::sort(t.begin(), t.end());
        if (!b.contains(t)) return false;
      }
      return true;
    }
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || pa[x] != pb[y]) continue;
      bool ok = true;
      for (Vertex u = 0; u < x && ok; ++u) ok = adjacent(a, u, x) == adjacent(b, image[u], y);
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

// --- simplicial maps --------------------------------------------------------------

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialComplex> domain,
                             std::shared_ptr<const SimplicialComplex> codomain, std::vector<Vertex> vertex_image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(vertex_image)) {
  if (!domain_ || !codomain_) throw Error("simplicial map needs a domain and a codomain");
  if (image_.size() != domain_->vertex_count()) throw Error("vertex image has wrong length");
  for (Vertex v : image_)
    if (v >= codomain_->vertex_count()) throw Error("vertex image outside the codomain");
  for (const auto& s : domain_->simplices())
    if (!codomain_->contains(apply(s)))
      throw Error("image of " + domain_->simplex_label(s) + " is not a simplex");
}

Simplex SimplicialMap::apply(const Simplex& s) const {
  Simplex t;
  for (Vertex v : s) t.push_back(image_.at(v));
  return normalized(std::move(t));
}

bool operator==(const SimplicialMap& f, const SimplicialMap& g) {
  return identical(f.domain(), g.domain()) && identical(f.codomain(), g.codomain()) &&
         f.vertex_images() == g.vertex_images();
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!identical(f.codomain(), g.domain())) throw Error("compose: codomain of f is not the domain of g");
  std::vector<Vertex> image(f.domain().vertex_count());
  for (Vertex v = 0; v < image.size(); ++v) image[v] = g(f(v));
  return SimplicialMap(f.domain_ptr(), g.codomain_ptr(), std::move(image));
}

bool is_contiguous(const SimplicialMap& phi, const SimplicialMap& psi) {
  if (!identical(phi.domain(), psi.domain()) || !identical(phi.codomain(), psi.codomain()))
    throw Error("is_contiguous: maps have different signatures");
  for (const auto& s : phi.domain().simplices()) {
    Simplex u = phi.apply(s);
    Simplex w = psi.apply(s);
    u.insert(u.end(), w.begin(), w.end());
    if (!phi.codomain().contains(normalized(std::move(u)))) return false;
  }
  return true;
}

}  // namespace finspace
