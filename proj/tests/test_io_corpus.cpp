#include "finspace/corpus.hpp"
#include "finspace/error.hpp"
#include "finspace/functors.hpp"
#include "finspace/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace finspace;
using testing::Rng;

namespace {

Resolver files(std::map<std::string, std::string> table) {
  return [table](const std::string& path) {
    if (path.rfind("example:", 0) == 0) return corpus_text(path.substr(8));
    auto it = table.find(path);
    if (it == table.end()) throw Error("no such file: " + path);
    return it->second;
  };
}

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("poset text format") {
  auto s = parse_poset("# the four-point space\nelements: a b c d\ncover: c a\ncover: c b  # trailing\n\ncover: d c\n");
  CHECK(s == four_point());
  CHECK(parse_poset(format_poset(s)) == s);
  CHECK(format_poset(s) == format_poset(parse_poset(format_poset(s))));
  CHECK(error_line([] { parse_poset("elements: a b\ncover: a z\n"); }) == 2);
  CHECK(error_line([] { parse_poset("elements: a a\n"); }) == 1);
  CHECK(error_line([] { parse_poset("elements: a b\n\nvertex: a\n"); }) == 3);
  CHECK(error_line([] { parse_poset("elements: a b\ncover: a\n"); }) == 2);
  CHECK_THROWS_WITH_AS(parse_poset("elements: a b\ncover: a b\ncover: b a\n"), doctest::Contains("cycle"), ParseError);
  Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    auto r = testing::random_poset(rng, 9);
    CHECK(parse_poset(format_poset(r)) == r);
  }
}

TEST_CASE("complex text format") {
  auto k = parse_complex("vertices: a b c d\nfacet: a b c\nfacet: c d\n");
  CHECK(k.f_vector() == std::vector<std::size_t>{4, 4, 1});
  CHECK(identical(parse_complex(format_complex(k)), k));
  CHECK(identical(parse_complex(format_complex(dunce_hat())), dunce_hat()));
  CHECK(error_line([] { parse_complex("vertices: a\nfacet:\n"); }) == 2);
  CHECK(error_line([] { parse_complex("vertices: a\nfacet: a\ncover: a b\n"); }) == 3);
}

TEST_CASE("map text format") {
  auto resolve = files({{"x.poset", "elements: a b c\ncover: b a\ncover: c a\n"},
                        {"y.poset", "elements: 0 1\ncover: 0 1\n"}});
  auto f = parse_map("dom: x.poset\ncod: y.poset\nsend: a 1\nsend: b 0\nsend: c 0\n", resolve);
  CHECK(f == sierpinski_map());
  auto again = parse_map(format_map(f, "x.poset", "y.poset"), resolve);
  CHECK(again == f);
  CHECK_THROWS_WITH_AS(parse_map("dom: x.poset\ncod: y.poset\nsend: a 0\nsend: b 1\nsend: c 0\n", resolve),
                       doctest::Contains("b"), ParseError);
  CHECK(error_line([&] { parse_map("dom: x.poset\ncod: y.poset\nsend: a 1\nsend: a 0\n", resolve); }) == 4);
  CHECK(error_line([&] { parse_map("dom: x.poset\ncod: y.poset\nsend: q 1\n", resolve); }) == 3);
  CHECK(error_line([&] { parse_map("dom: nope.poset\n", resolve); }) == 1);
  CHECK_THROWS_AS(parse_map("dom: x.poset\ncod: y.poset\nsend: a 1\n", resolve), ParseError);
  // The corpus map refers to its spaces by example name.
  CHECK(parse_map(corpus_text("sierpinski-map"), resolve) == sierpinski_map());
}

TEST_CASE("sniffing") {
  CHECK(sniff("# hi\nelements: a\n") == ObjectKind::poset);
  CHECK(sniff("vertices: a\n") == ObjectKind::complex);
  CHECK(sniff("dom: x\n") == ObjectKind::map);
  CHECK(sniff("start: inline\n") == ObjectKind::certificate);
  CHECK(sniff("hello\n") == ObjectKind::unknown);
  CHECK(sniff("") == ObjectKind::unknown);
}

TEST_CASE("certificate round trips") {
  auto w = wallet();
  auto search = collapse_search(w, std::nullopt);
  REQUIRE(search.certificate);
  auto text = format_certificate(*search.certificate);
  auto back = std::get<SpaceMoveCertificate>(parse_certificate(text, files({})));
  CHECK(back.start == w);
  // Removals are written as label and side; the sets come back from replay.
  REQUIRE(back.moves.size() == search.certificate->moves.size());
  for (std::size_t i = 0; i < back.moves.size(); ++i) {
    CHECK(back.moves[i].label == search.certificate->moves[i].label);
    CHECK(back.moves[i].side == search.certificate->moves[i].side);
  }
  CHECK(verify_space_certificate(back).valid);

  auto b = bridge_space(four_point());
  auto eb = std::get<SpaceMoveCertificate>(parse_certificate(format_certificate(b.expand), files({})));
  CHECK(eb.moves == b.expand.moves);
  CHECK(verify_space_certificate(eb).valid);

  auto k = translate_space_collapse(w, w.index_of("x"));
  auto kt = std::get<SimplicialMoveCertificate>(parse_certificate(format_certificate(k), files({})));
  CHECK(kt.moves == k.moves);
  CHECK(kt.start == k.start);
  CHECK(verify_simplicial_certificate(kt).valid);

  auto by_file = parse_certificate("start: w.poset\nremove x down-weak\n", files({{"w.poset", format_poset(w)}}));
  CHECK(verify_space_certificate(std::get<SpaceMoveCertificate>(by_file)).valid);
  auto by_example = parse_certificate("start: example:dunce\nremove {1} 2\n", files({}));
  CHECK_FALSE(verify_simplicial_certificate(std::get<SimplicialMoveCertificate>(by_example)).valid);

  CHECK(error_line([] { parse_certificate("start: inline\nelements: a\nremove a sideways\n", files({})); }) == 3);
  CHECK(error_line([] { parse_certificate("start: inline\nelements: a\nadd b up-weak down={a}\n", files({})); }) == 3);
  CHECK(error_line([] { parse_certificate("start: inline\nelements: a\nflip a\n", files({})); }) == 3);
  CHECK_THROWS_AS(parse_certificate("elements: a\n", files({})), ParseError);
}

TEST_CASE("DOT output") {
  auto dot = dot_hasse(four_point());
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("\"c\" -> \"d\"") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"c\"") != std::string::npos);
  // tops are ranked first
  CHECK(dot.find("\"a\";") < dot.find("\"c\";"));
  CHECK(dot.find("\"c\";") < dot.find("\"d\";"));
  CHECK(dot == dot_hasse(four_point()));
  auto sk = dot_skeleton(SimplicialComplex::from_facets({{"a", "b", "c"}}));
  CHECK(sk.find("graph") == 0);
  CHECK(sk.find("\"a\" -- \"b\"") != std::string::npos);
}

TEST_CASE("corpus entries validate their manifests") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(corpus_entry(name));
    CHECK(corpus_text(name) == corpus_text(name));
  }
  auto w = corpus_entry("wallet");
  CHECK(w.manifest.size() >= 3);
  CHECK_THROWS_WITH_AS(corpus_entry("nope"), doctest::Contains("unknown example"), Error);
  CHECK(parse_poset(corpus_text("wallet")) == wallet());
  CHECK(identical(parse_complex(corpus_text("dunce")), dunce_hat()));
  CHECK(parse_poset(corpus_text("wallet-minus-x")).size() == 10);
  CHECK(parse_poset(corpus_text("wallet-ux")).size() == 5);
}
