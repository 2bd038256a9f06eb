#include "finspace/functors.hpp"

#include "finspace/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace finspace {

std::vector<std::vector<Element>> chains(const FiniteSpace& space, const Bits& within) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> chain;
  // Extend only with larger indices comparable to everything so far.
  std::function<void(const Bits&)> grow = [&](const Bits& candidates) {
    out.push_back(chain);
    for (auto y = candidates.find_next(chain.back()); y != Bits::npos; y = candidates.find_next(y)) {
      chain.push_back(y);
      grow(candidates & (space.down_bits(y) | space.up_bits(y)));
      chain.pop_back();
    }
  };
  for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) {
    chain = {x};
    grow(within & (space.down_bits(x) | space.up_bits(x)));
  }
  return out;
}

SimplicialComplex order_complex(const FiniteSpace& space) {
  std::vector<Simplex> simplices;
  for (const auto& c : chains(space, space.all())) simplices.emplace_back(c.begin(), c.end());
  return SimplicialComplex::from_simplices(space.labels(), std::move(simplices));
}

FiniteSpace face_poset(const SimplicialComplex& complex) {
  const auto& all = complex.simplices();
  std::vector<std::string> labels;
  std::vector<Bits> below(all.size(), Bits(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    labels.push_back(complex.simplex_label(all[i]));
    const auto& s = all[i];
    const std::size_t d = s.size();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << d); ++m) {
      Simplex f;
      for (std::size_t j = 0; j < d; ++j)
        if (m & (std::uint64_t{1} << j)) f.push_back(s[j]);
      below[i].set(*complex.find(f));
    }
  }
  return FiniteSpace::from_relation(std::move(labels), std::move(below));
}

SimplicialMap induced_simplicial(const ContinuousMap& f) {
  auto dom = std::make_shared<const SimplicialComplex>(order_complex(f.domain()));
  auto cod = std::make_shared<const SimplicialComplex>(order_complex(f.codomain()));
  std::vector<Vertex> image(f.images().begin(), f.images().end());
  return SimplicialMap(std::move(dom), std::move(cod), std::move(image));
}

ContinuousMap induced_continuous(const SimplicialMap& phi) {
  auto dom = std::make_shared<const FiniteSpace>(face_poset(phi.domain()));
  auto cod = std::make_shared<const FiniteSpace>(face_poset(phi.codomain()));
  std::vector<Element> image;
  for (const auto& s : phi.domain().simplices()) image.push_back(*phi.codomain().find(phi.apply(s)));
  return ContinuousMap(std::move(dom), std::move(cod), std::move(image));
}

namespace {

std::string chain_label(const FiniteSpace& space, const std::vector<Element>& chain) {
  std::vector<std::string> parts;
  for (Element e : chain) parts.push_back(space.label(e));
  return join_labels(parts);
}

}  // namespace

FiniteSpace space_subdivision(const FiniteSpace& space) {
  auto all = chains(space, space.all());
  std::vector<std::string> labels;
  std::vector<Bits> below(all.size(), Bits(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    labels.push_back(chain_label(space, all[i]));
    for (std::size_t j = 0; j < all.size(); ++j)
      if (std::includes(all[i].begin(), all[i].end(), all[j].begin(), all[j].end())) below[i].set(j);
  }
  return FiniteSpace::from_relation(std::move(labels), std::move(below));
}

ContinuousMap h_map(const FiniteSpace& space) {
  auto sub = std::make_shared<const FiniteSpace>(space_subdivision(space));
  auto base = std::make_shared<const FiniteSpace>(space);
  auto all = chains(space, space.all());
  std::vector<Element> image(sub->size());
  for (const auto& c : all) {
    Element top = c.front();
    for (Element e : c)
      if (space.leq(top, e)) top = e;
    image[sub->index_of(chain_label(space, c))] = top;
  }
  return ContinuousMap(std::move(sub), std::move(base), std::move(image));
}

namespace {

std::vector<std::string> labels_in(const FiniteSpace& space, const Bits& set) {
  std::vector<std::string> out;
  for (auto e = set.find_first(); e != Bits::npos; e = set.find_next(e)) out.push_back(space.label(e));
  return out;
}

}  // namespace

SpaceMoveCertificate cylinder_collapse_moves(const ContinuousMap& f) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  const std::size_t n = x.size();
  SpaceMoveCertificate cert;
  cert.start = mapping_cylinder(f);
  const FiniteSpace& b = cert.start;
  Bits alive = b.all();
  for (Element yi : linear_extension(y)) {
    const Element e = n + yi;
    Bits down = b.down_bits(e) & alive;
    down.reset(e);
    Bits up = b.up_bits(e) & alive;
    up.reset(e);
    cert.moves.push_back({MoveDirection::remove, b.label(e), WeakSide::down_weak, labels_in(b, down), labels_in(b, up)});
    alive.reset(e);
  }
  return cert;
}

CylinderCertificates cylinder_certificates(const ContinuousMap& f, bool want_collapse, unsigned jobs) {
  const FiniteSpace& x = f.domain();
  const std::size_t n = x.size();
  CylinderCertificates out;
  out.cylinder = mapping_cylinder(f);
  const FiniteSpace& b = out.cylinder;

  Bits codomain_part(b.size());
  for (Element e = n; e < b.size(); ++e) codomain_part.set(e);
  out.expand.start = restrict_to(b, codomain_part);
  Bits alive = codomain_part;
  for (Element xi : linear_extension(x)) {
    // Everything below x_i in X is already present; above it lies exactly
    // the closure of f(x_i) in Y.
    Bits down = b.down_bits(xi) & alive;
    Bits up = b.up_bits(xi) & alive;
    out.expand.moves.push_back({MoveDirection::add, b.label(xi), WeakSide::up_weak, labels_in(b, down), labels_in(b, up)});
    alive.set(xi);
  }

  if (want_collapse) {
    auto report = is_distinguished(f, jobs);
    if (report.distinguished)
      out.collapse = cylinder_collapse_moves(f);
    else
      out.refused_at = report.first_failure;
  }
  return out;
}

BridgeResult bridge_space(const FiniteSpace& space) {
  auto cyl = cylinder_certificates(h_map(space), true);
  if (!cyl.collapse) throw std::logic_error("h: X' -> X must be distinguished");
  return {std::move(cyl.cylinder), std::move(cyl.expand), std::move(*cyl.collapse)};
}

SimplicialMoveCertificate expand_cone_pairs(const SimplicialComplex& base,
                                            const std::vector<std::vector<std::string>>& faces,
                                            const std::string& apex) {
  using LabelSet = std::vector<std::string>;
  auto sorted = [](LabelSet s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  std::set<LabelSet> result;
  for (const auto& s : base.simplices()) result.insert(sorted(base.to_labels(s)));
  if (!base.find_vertex(apex)) throw Error("expand_cone_pairs: apex " + apex + " is not a vertex of L");

  std::vector<LabelSet> order(faces.begin(), faces.end());
  std::stable_sort(order.begin(), order.end(), [](const LabelSet& a, const LabelSet& b) { return a.size() < b.size(); });
  std::set<LabelSet> added;
  for (const auto& face : order) {
    LabelSet s = sorted(face);
    if (s.empty()) throw Error("expand_cone_pairs: empty simplex in T");
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("expand_cone_pairs: repeated vertex");
    if (std::binary_search(s.begin(), s.end(), apex))
      throw Error("expand_cone_pairs: apex " + apex + " lies in " + join_labels(face));
    if (result.count(s)) throw Error("expand_cone_pairs: " + join_labels(face) + " is already in L");
    LabelSet top = s;
    top.push_back(apex);
    top = sorted(top);
    if (result.count(top)) throw Error("expand_cone_pairs: a*" + join_labels(face) + " is already in L");
    result.insert(s);
    result.insert(top);
    added.insert(s);
  }
  // Every proper face of each new simplex must end up in the complex.
  for (const auto& s : added) {
    LabelSet top = s;
    top.push_back(apex);
    top = sorted(top);
    for (const LabelSet* t : std::array<const LabelSet*, 2>{&s, &top})
      for (std::size_t i = 0; t->size() > 1 && i < t->size(); ++i) {
        LabelSet f = *t;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        if (!result.count(f))
          throw Error("expand_cone_pairs: face " + join_labels(f) + " of " + join_labels(*t) + " is missing");
      }
  }
  SimplicialMoveCertificate cert{base, {}};
  for (const auto& face : order) cert.moves.push_back({MoveDirection::add, sorted(face), apex});
  return cert;
}

SimplicialMoveCertificate translate_space_collapse(const FiniteSpace& space, Element x) {
  const auto report = is_weak_point(space, x);
  if (!report.weak()) throw Error(space.label(x) + " is not a weak point");
  // The up-weak case is the down-weak case for X^op; K(X^op) = K(X).
  const FiniteSpace work = report.down_weak ? space : opposite(space);

  Bits link = work.down_bits(x);
  link.reset(x);
  std::vector<BeatRemoval> removals;
  const Bits last = core_mask(work, link, &removals);
  if (last.count() != 1) throw std::logic_error("U_x \\ {x} did not dismantle to a point");

  // Dismantling X_n = U_x\{x} ⊋ ... ⊋ X_1 = {x_1}; x_i is a beat point of X_i
  // with witness y_i, and removals were recorded from x_n down to x_2.
  const Element x1 = last.find_first();
  const Bits above = work.up_bits(x);  // closure of x, x included

  Bits rest = space.all();
  rest.reset(x);
  SimplicialComplex current = order_complex(restrict_to(space, rest));
  SimplicialMoveCertificate cert{current, {}};

  auto to_labels = [&](const std::vector<Element>& chain) {
    std::vector<std::string> out;
    for (Element e : chain) out.push_back(space.label(e));
    return out;
  };
  auto extend = [&](const std::vector<std::vector<std::string>>& faces, Element apex) {
    auto step = expand_cone_pairs(current, faces, space.label(apex));
    for (auto& move : step.moves) {
      current = apply_move(current, move);
      cert.moves.push_back(std::move(move));
    }
  };

  Bits present = above;
  present.set(x1);
  {
    std::vector<std::vector<std::string>> faces;
    for (const auto& c : chains(work, above))
      if (std::binary_search(c.begin(), c.end(), x)) faces.push_back(to_labels(c));
    extend(faces, x1);
  }
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    const Element xi = it->element;
    const Element yi = it->witness;
    present.set(xi);
    std::vector<std::vector<std::string>> faces;
    for (const auto& c : chains(work, present)) {
      const bool has_x = std::binary_search(c.begin(), c.end(), x);
      const bool has_xi = std::binary_search(c.begin(), c.end(), xi);
      const bool has_yi = std::binary_search(c.begin(), c.end(), yi);
      if (has_x && has_xi && !has_yi) faces.push_back(to_labels(c));
    }
    extend(faces, yi);
  }
  if (!(current == order_complex(space))) throw std::logic_error("translated expansion does not reach K(X)");
  return cert;
}

SpaceMoveCertificate translate_simplicial_collapse(const SimplicialComplex& complex,
                                                   const std::vector<std::string>& face,
                                                   const std::string& apex) {
  auto s = complex.to_simplex(face);
  if (!s || s->size() != face.size()) throw Error("face " + join_labels(face) + " is not a simplex");
  auto problem = collapse_pair_problem(complex, *s);
  if (!problem.empty()) throw Error("not an elementary collapse pair: " + problem);
  const Simplex top = complex.simplex(complex.cofaces(*s).front());
  auto a = complex.find_vertex(apex);
  if (!a || !std::binary_search(top.begin(), top.end(), *a) || std::binary_search(s->begin(), s->end(), *a))
    throw Error("the coface of " + join_labels(face) + " is not " + apex + " * face");

  SpaceMoveCertificate cert;
  cert.start = face_poset(complex);
  const FiniteSpace& x = cert.start;
  const Element se = *complex.find(*s);
  const Element te = *complex.find(top);
  Bits alive = x.all();
  auto strict = [&](const Bits& set, Element e) {
    Bits r = set & alive;
    r.reset(e);
    return labels_in(x, r);
  };
  cert.moves.push_back({MoveDirection::remove, x.label(se), WeakSide::beat_up, strict(x.down_bits(se), se),
                        strict(x.up_bits(se), se)});
  alive.reset(se);
  cert.moves.push_back({MoveDirection::remove, x.label(te), WeakSide::down_weak, strict(x.down_bits(te), te),
                        strict(x.up_bits(te), te)});
  return cert;
}

}  // namespace finspace
