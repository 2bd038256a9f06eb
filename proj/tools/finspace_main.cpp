// finspace: command-line front end.
//
// Exit codes: 0 success / valid, 1 definite negative, 2 inconclusive (budget),
// 3 input error.

#include "finspace/corpus.hpp"
#include "finspace/error.hpp"
#include "finspace/functors.hpp"
#include "finspace/homology.hpp"
#include "finspace/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace finspace;

namespace {

constexpr int kOk = 0, kNo = 1, kInconclusive = 2, kInputError = 3;

struct InputError : Error {
  using Error::Error;
};

std::string read_path(const std::string& path, const fs::path& base = {}) {
  if (path.rfind("example:", 0) == 0) return corpus_text(path.substr(8));
  fs::path p = path;
  if (p.is_relative() && !base.empty()) p = base / p;
  std::ifstream in(p);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Loads a file and remembers its directory for relative references inside it.
struct Source {
  std::string name;
  std::string text;
  Resolver resolve;
};

Source load(const std::string& path) {
  fs::path base = path.rfind("example:", 0) == 0 ? fs::path{} : fs::path(path).parent_path();
  return {path, read_path(path), [base](const std::string& p) { return read_path(p, base); }};
}

template <typename F>
auto parsing(const Source& src, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw InputError(src.name + ": " + e.what());
  }
}

FiniteSpace load_poset(const std::string& path) {
  auto src = load(path);
  if (sniff(src.text) != ObjectKind::poset) throw InputError(path + ": not a poset");
  return parsing(src, [&] { return parse_poset(src.text); });
}

SimplicialComplex load_complex(const std::string& path) {
  auto src = load(path);
  if (sniff(src.text) != ObjectKind::complex) throw InputError(path + ": not a simplicial complex");
  return parsing(src, [&] { return parse_complex(src.text); });
}

using Shape = std::variant<FiniteSpace, SimplicialComplex>;

Shape load_shape(const std::string& path) {
  auto src = load(path);
  switch (sniff(src.text)) {
    case ObjectKind::poset: return parsing(src, [&] { return Shape(parse_poset(src.text)); });
    case ObjectKind::complex: return parsing(src, [&] { return Shape(parse_complex(src.text)); });
    default: throw InputError(path + ": expected a poset or a simplicial complex");
  }
}

std::vector<std::string> split_face(std::string text) {
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');)
    if (!part.empty()) out.push_back(part);
  if (out.empty()) throw InputError("empty face");
  return out;
}

int search_exit(SearchStatus status, std::size_t nodes) {
  if (status == SearchStatus::exhausted) {
    std::cout << "no collapse: search space exhausted after " << nodes << " states\n";
    return kNo;
  }
  std::cout << "inconclusive: budget exhausted after " << nodes << " states\n";
  return kInconclusive;
}

std::string describe(const WeakPointReport& r) {
  std::vector<std::string> tags;
  if (r.down_beat) tags.emplace_back("beat-down");
  if (r.up_beat) tags.emplace_back("beat-up");
  if (r.down_weak) tags.emplace_back("down-weak");
  if (r.up_weak) tags.emplace_back("up-weak");
  return tags.empty() ? "none" : join_labels(tags, ' ');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple homotopy theory of finite spaces and simplicial complexes"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for per-point checks")->check(CLI::Range(1u, 256u));

  std::string input, second;
  std::string target, point, face, apex;
  std::size_t budget = kDefaultSearchBudget;
  bool want_collapse = false, both_sides = false, reduced = false, certificate = false;

  auto* c_core = app.add_subcommand("core", "Core of a space (beat points removed)");
  c_core->add_option("poset", input)->required();
  c_core->add_flag("--certificate", certificate, "Print the removal certificate instead of the core");

  auto* c_weak = app.add_subcommand("weak-points", "Classify every point");
  c_weak->add_option("poset", input)->required();

  auto* c_collapse = app.add_subcommand("collapse", "Search for a collapse to a point or a target");
  c_collapse->add_option("input", input, "poset or complex")->required();
  c_collapse->add_option("--target", target, "Target object (default: a point)");
  c_collapse->add_option("--budget", budget, "Maximum number of visited states");

  auto* c_k = app.add_subcommand("k", "Order complex K(X)");
  c_k->add_option("poset", input)->required();
  auto* c_x = app.add_subcommand("x", "Face poset X(K)");
  c_x->add_option("complex", input)->required();
  auto* c_sub = app.add_subcommand("subdivide", "X' for a poset, K' for a complex");
  c_sub->add_option("input", input)->required();

  auto* c_bridge = app.add_subcommand("bridge", "B(X) with certificates X ↗ B(X) ↘ X'");
  c_bridge->add_option("poset", input)->required();

  auto* c_cyl = app.add_subcommand("cylinder", "Mapping cylinder certificates of a map");
  c_cyl->add_option("map", input)->required();
  c_cyl->add_flag("--collapse", want_collapse, "Also collapse B(f) onto the domain");

  auto* c_tr = app.add_subcommand("translate-collapse", "Translate one collapse across K and X");
  c_tr->add_option("input", input)->required();
  auto* o_point = c_tr->add_option("--point", point, "Weak point of a poset");
  auto* o_pair = c_tr->add_option("--pair", face, "Free face S of a complex (a,b)");
  c_tr->add_option("apex", apex, "Apex a of the free pair");
  o_point->excludes(o_pair);
  c_tr->add_flag("--emit-both-sides", both_sides, "Print the source-level move as well");

  auto* c_verify = app.add_subcommand("verify", "Replay a certificate");
  c_verify->add_option("certificate", input)->required();

  auto* c_hom = app.add_subcommand("homology", "Integral homology");
  c_hom->add_option("input", input)->required();
  c_hom->add_flag("--reduced", reduced, "Reduced homology");

  auto* c_iso = app.add_subcommand("iso", "Isomorphism test");
  c_iso->add_option("a", input)->required();
  c_iso->add_option("b", second)->required();

  auto* c_dot = app.add_subcommand("dot", "Graphviz output (Hasse diagram or 1-skeleton)");
  c_dot->add_option("input", input)->required();

  auto* c_example = app.add_subcommand("example", "Print a built-in example (no name: list them)");
  c_example->add_option("name", input);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (c_core->parsed()) {
      auto result = core(load_poset(input));
      std::cout << (certificate ? format_certificate(result.certificate) : format_poset(result.core));
      return kOk;
    }
    if (c_weak->parsed()) {
      auto s = load_poset(input);
      for (Element x = 0; x < s.size(); ++x) std::cout << s.label(x) << ' ' << describe(is_weak_point(s, x)) << '\n';
      return kOk;
    }
    if (c_collapse->parsed()) {
      auto shape = load_shape(input);
      if (auto* s = std::get_if<FiniteSpace>(&shape)) {
        std::optional<FiniteSpace> t;
        if (!target.empty()) t = load_poset(target);
        auto r = collapse_search(*s, t, budget);
        if (r.status != SearchStatus::found) return search_exit(r.status, r.nodes);
        std::cout << format_certificate(*r.certificate);
        return kOk;
      }
      std::optional<SimplicialComplex> t;
      if (!target.empty()) t = load_complex(target);
      auto r = collapse_sequence_search(std::get<SimplicialComplex>(shape), t, budget);
      if (r.status != SearchStatus::found) return search_exit(r.status, r.nodes);
      std::cout << format_certificate(*r.certificate);
      return kOk;
    }
    if (c_k->parsed()) {
      std::cout << format_complex(order_complex(load_poset(input)));
      return kOk;
    }
    if (c_x->parsed()) {
      std::cout << format_poset(face_poset(load_complex(input)));
      return kOk;
    }
    if (c_sub->parsed()) {
      auto shape = load_shape(input);
      if (auto* s = std::get_if<FiniteSpace>(&shape))
        std::cout << format_poset(space_subdivision(*s));
      else
        std::cout << format_complex(barycentric_subdivision(std::get<SimplicialComplex>(shape)));
      return kOk;
    }
    if (c_bridge->parsed()) {
      auto b = bridge_space(load_poset(input));
      std::cout << "# B(X)\n" << format_poset(b.bridge) << "\n# X expands to B(X)\n" << format_certificate(b.expand)
                << "\n# B(X) collapses to X'\n" << format_certificate(b.collapse);
      return kOk;
    }
    if (c_cyl->parsed()) {
      auto src = load(input);
      if (sniff(src.text) != ObjectKind::map) throw InputError(input + ": not a map");
      auto f = parsing(src, [&] { return parse_map(src.text, src.resolve); });
      auto cyl = cylinder_certificates(f, want_collapse, jobs);
      std::cout << "# Y expands to B(f)\n" << format_certificate(cyl.expand);
      if (!want_collapse) return kOk;
      if (cyl.refused_at) {
        std::cout << "# collapse refused: f is not distinguished, the preimage of U_"
                  << f.codomain().label(*cyl.refused_at) << " is not contractible\n";
        std::cerr << "not distinguished at " << f.codomain().label(*cyl.refused_at) << '\n';
        return kNo;
      }
      std::cout << "\n# B(f) collapses to X\n" << format_certificate(*cyl.collapse);
      return kOk;
    }
    if (c_tr->parsed()) {
      if (!point.empty()) {
        auto s = load_poset(input);
        auto x = s.find(point);
        if (!x) throw InputError("unknown point " + point);
        auto report = is_weak_point(s, *x);
        if (!report.weak()) {
          std::cout << point << " is not a weak point\n";
          return kNo;
        }
        auto cert = translate_space_collapse(s, *x);
        if (both_sides) {
          auto [rest, move] = remove_weak_point(s, *x);
          std::cout << "# space level\n" << format_certificate(SpaceMoveCertificate{s, {move}})
                    << "\n# simplicial level\n";
        }
        std::cout << format_certificate(cert);
        return kOk;
      }
      if (face.empty() || apex.empty()) throw InputError("translate-collapse needs --point <x> or --pair <S> <a>");
      auto k = load_complex(input);
      auto labels = split_face(face);
      auto s = k.to_simplex(labels);
      if (!s) throw InputError("{" + join_labels(labels, ',') + "} is not a simplex");
      if (auto problem = collapse_pair_problem(k, *s); !problem.empty()) {
        std::cout << "not a free pair: " << problem << '\n';
        return kNo;
      }
      auto cert = translate_simplicial_collapse(k, labels, apex);
      if (both_sides) {
        auto [rest, move] = elementary_collapse(k, *s);
        std::cout << "# simplicial level\n" << format_certificate(SimplicialMoveCertificate{k, {move}})
                  << "\n# space level\n";
      }
      std::cout << format_certificate(cert);
      return kOk;
    }
    if (c_verify->parsed()) {
      auto src = load(input);
      auto cert = parsing(src, [&] { return parse_certificate(src.text, src.resolve); });
      auto report = [](bool valid, std::optional<std::size_t> at, const std::string& msg, std::size_t n) {
        if (valid) {
          std::cout << "valid: " << n << " moves\n";
          return kOk;
        }
        std::cout << "invalid at move " << (at ? *at + 1 : 0) << ": " << msg << '\n';
        return kNo;
      };
      if (auto* sc = std::get_if<SpaceMoveCertificate>(&cert)) {
        auto c = verify_space_certificate(*sc);
        return report(c.valid, c.failed_index, c.message, sc->moves.size());
      }
      const auto& kc = std::get<SimplicialMoveCertificate>(cert);
      auto c = verify_simplicial_certificate(kc);
      return report(c.valid, c.failed_index, c.message, kc.moves.size());
    }
    if (c_hom->parsed()) {
      auto shape = load_shape(input);
      SimplicialComplex k = std::holds_alternative<FiniteSpace>(shape) ? order_complex(std::get<FiniteSpace>(shape))
                                                                       : std::get<SimplicialComplex>(shape);
      std::cout << format_report(reduced ? reduced_homology(k) : homology(k));
      return kOk;
    }
    if (c_iso->parsed()) {
      auto a = load_shape(input), b = load_shape(second);
      if (a.index() != b.index()) throw InputError("iso: both inputs must be posets or both complexes");
      std::optional<std::vector<std::size_t>> iso;
      std::vector<std::string> la, lb;
      if (auto* s = std::get_if<FiniteSpace>(&a)) {
        iso = is_isomorphic(*s, std::get<FiniteSpace>(b));
        la = s->labels();
        lb = std::get<FiniteSpace>(b).labels();
      } else {
        const auto& ka = std::get<SimplicialComplex>(a);
        const auto& kb = std::get<SimplicialComplex>(b);
        if (auto v = is_isomorphic(ka, kb)) iso = std::vector<std::size_t>(v->begin(), v->end());
        la = ka.vertex_labels();
        lb = kb.vertex_labels();
      }
      if (!iso) {
        std::cout << "not isomorphic\n";
        return kNo;
      }
      for (std::size_t i = 0; i < la.size(); ++i) std::cout << la[i] << " -> " << lb[(*iso)[i]] << '\n';
      return kOk;
    }
    if (c_dot->parsed()) {
      auto shape = load_shape(input);
      if (auto* s = std::get_if<FiniteSpace>(&shape))
        std::cout << dot_hasse(*s);
      else
        std::cout << dot_skeleton(std::get<SimplicialComplex>(shape));
      return kOk;
    }
    if (c_example->parsed()) {
      if (input.empty()) {
        for (const auto& name : corpus_names()) std::cout << name << '\n';
        return kOk;
      }
      std::cout << corpus_text(input);
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
