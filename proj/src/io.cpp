#include "finspace/io.hpp"

#include "finspace/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace finspace {

namespace {

struct Line {
  std::size_t number = 0;
  std::string keyword;              // first token
  std::vector<std::string> tokens;  // the rest
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    Line l;
    l.number = number;
    if (!(in >> l.keyword)) continue;
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

std::vector<std::string> parse_braced(const std::string& token, std::size_t line) {
  if (token.size() < 2 || token.front() != '{' || token.back() != '}')
    throw ParseError(line, "expected {a,b,...}, got '" + token + "'");
  std::vector<std::string> out;
  std::string body = token.substr(1, token.size() - 2);
  std::size_t pos = 0;
  while (!body.empty() && pos <= body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    std::string part = body.substr(pos, comma - pos);
    if (part.empty()) throw ParseError(line, "empty entry in '" + token + "'");
    out.push_back(part);
    pos = comma + 1;
  }
  return out;
}

std::string braced(const std::vector<std::string>& labels) { return "{" + join_labels(labels, ',') + "}"; }

FiniteSpace poset_from_lines(const std::vector<Line>& lines) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::size_t> declared;
  for (const auto& l : lines) {
    if (l.keyword == "elements:") {
      for (const auto& t : l.tokens) {
        if (!declared.emplace(t, l.number).second) throw ParseError(l.number, "duplicate label: " + t);
        labels.push_back(t);
      }
    } else if (l.keyword == "cover:") {
      if (l.tokens.size() != 2) throw ParseError(l.number, "cover needs exactly two labels");
      for (const auto& t : l.tokens)
        if (!declared.count(t)) throw ParseError(l.number, "unknown label in cover: " + t);
      covers.emplace_back(l.tokens[0], l.tokens[1]);
    } else {
      throw ParseError(l.number, "unexpected '" + l.keyword + "' in poset");
    }
  }
  try {
    return FiniteSpace::from_covers(std::move(labels), covers);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

SimplicialComplex complex_from_lines(const std::vector<Line>& lines) {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  for (const auto& l : lines) {
    if (l.keyword == "vertices:") {
      vertices.insert(vertices.end(), l.tokens.begin(), l.tokens.end());
    } else if (l.keyword == "facet:") {
      if (l.tokens.empty()) throw ParseError(l.number, "empty facet");
      facets.push_back(l.tokens);
    } else {
      throw ParseError(l.number, "unexpected '" + l.keyword + "' in complex");
    }
  }
  try {
    return SimplicialComplex::from_facets(std::move(vertices), facets);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

FiniteSpace parse_poset(std::string_view text) { return poset_from_lines(split_lines(text)); }

std::string format_poset(const FiniteSpace& space) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& l : space.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& [x, y] : hasse_edges(space)) out << "cover: " << space.label(x) << ' ' << space.label(y) << '\n';
  return out.str();
}

SimplicialComplex parse_complex(std::string_view text) { return complex_from_lines(split_lines(text)); }

std::string format_complex(const SimplicialComplex& complex) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& l : complex.vertex_labels()) out << ' ' << l;
  out << '\n';
  for (const auto& f : complex.facets()) {
    out << "facet:";
    for (const auto& l : complex.to_labels(f)) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

ContinuousMap parse_map(std::string_view text, const Resolver& resolve) {
  std::optional<FiniteSpace> dom, cod;
  std::vector<std::pair<std::string, std::size_t>> sends_from;
  std::vector<std::pair<std::string, std::string>> sends;
  std::vector<std::size_t> send_lines;
  for (const auto& l : split_lines(text)) {
    if (l.keyword == "dom:" || l.keyword == "cod:") {
      if (l.tokens.size() != 1) throw ParseError(l.number, l.keyword + " needs one file name");
      FiniteSpace s;
      try {
        s = parse_poset(resolve(l.tokens[0]));
      } catch (const ParseError& e) {
        throw ParseError(l.number, l.tokens[0] + ": " + e.what());
      } catch (const Error& e) {
        throw ParseError(l.number, e.what());
      }
      (l.keyword == "dom:" ? dom : cod) = std::move(s);
    } else if (l.keyword == "send:") {
      if (l.tokens.size() != 2) throw ParseError(l.number, "send needs exactly two labels");
      sends.emplace_back(l.tokens[0], l.tokens[1]);
      send_lines.push_back(l.number);
    } else {
      throw ParseError(l.number, "unexpected '" + l.keyword + "' in map");
    }
  }
  if (!dom || !cod) throw ParseError(0, "map needs both dom: and cod:");
  std::vector<std::optional<Element>> image(dom->size());
  for (std::size_t i = 0; i < sends.size(); ++i) {
    auto x = dom->find(sends[i].first);
    auto y = cod->find(sends[i].second);
    if (!x) throw ParseError(send_lines[i], "unknown domain point " + sends[i].first);
    if (!y) throw ParseError(send_lines[i], "unknown codomain point " + sends[i].second);
    if (image[*x]) throw ParseError(send_lines[i], sends[i].first + " is sent twice");
    image[*x] = *y;
  }
  std::vector<Element> values;
  for (Element x = 0; x < image.size(); ++x) {
    if (!image[x]) throw ParseError(0, "no image given for " + dom->label(x));
    values.push_back(*image[x]);
  }
  try {
    return ContinuousMap(std::move(*dom), std::move(*cod), std::move(values));
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_map(const ContinuousMap& f, const std::string& dom_name, const std::string& cod_name) {
  std::ostringstream out;
  out << "dom: " << dom_name << "\ncod: " << cod_name << '\n';
  for (Element x = 0; x < f.domain().size(); ++x)
    out << "send: " << f.domain().label(x) << ' ' << f.codomain().label(f(x)) << '\n';
  return out.str();
}

ObjectKind sniff(std::string_view text) {
  for (const auto& l : split_lines(text)) {
    if (l.keyword == "elements:" || l.keyword == "cover:") return ObjectKind::poset;
    if (l.keyword == "vertices:" || l.keyword == "facet:") return ObjectKind::complex;
    if (l.keyword == "dom:" || l.keyword == "cod:" || l.keyword == "send:") return ObjectKind::map;
    if (l.keyword == "start:") return ObjectKind::certificate;
    return ObjectKind::unknown;
  }
  return ObjectKind::unknown;
}

Certificate parse_certificate(std::string_view text, const Resolver& resolve) {
  auto lines = split_lines(text);
  if (lines.empty() || lines.front().keyword != "start:" || lines.front().tokens.size() != 1)
    throw ParseError(lines.empty() ? 0 : lines.front().number, "certificate must begin with 'start: <file>|inline'");
  std::size_t i = 1;
  std::vector<Line> block;
  std::string start_text;
  if (lines.front().tokens[0] == "inline") {
    while (i < lines.size() && lines[i].keyword != "remove" && lines[i].keyword != "add") block.push_back(lines[i++]);
  } else {
    try {
      start_text = resolve(lines.front().tokens[0]);
    } catch (const Error& e) {
      throw ParseError(lines.front().number, e.what());
    }
    block = split_lines(start_text);
  }
  bool simplicial = false;
  if (!block.empty()) simplicial = block.front().keyword == "vertices:" || block.front().keyword == "facet:";

  auto direction = [](const Line& l) {
    if (l.keyword == "remove") return MoveDirection::remove;
    if (l.keyword == "add") return MoveDirection::add;
    throw ParseError(l.number, "expected 'remove' or 'add', got '" + l.keyword + "'");
  };

  if (simplicial) {
    SimplicialMoveCertificate cert;
    cert.start = complex_from_lines(block);
    for (; i < lines.size(); ++i) {
      const auto& l = lines[i];
      SimplicialMove m;
      m.direction = direction(l);
      if (l.tokens.size() != 2) throw ParseError(l.number, "simplicial move needs a face and an apex");
      m.face = parse_braced(l.tokens[0], l.number);
      m.apex = l.tokens[1];
      cert.moves.push_back(std::move(m));
    }
    return cert;
  }

  SpaceMoveCertificate cert;
  cert.start = poset_from_lines(block);
  for (; i < lines.size(); ++i) {
    const auto& l = lines[i];
    SpaceMove m;
    m.direction = direction(l);
    if (l.tokens.size() < 2) throw ParseError(l.number, "move needs a label and a side");
    m.label = l.tokens[0];
    auto side = parse_side(l.tokens[1]);
    if (!side) throw ParseError(l.number, "unknown side '" + l.tokens[1] + "'");
    m.side = *side;
    if (m.direction == MoveDirection::add) {
      if (l.tokens.size() != 4 || l.tokens[2].rfind("down=", 0) != 0 || l.tokens[3].rfind("up=", 0) != 0)
        throw ParseError(l.number, "add needs down={...} up={...}");
      m.down = parse_braced(l.tokens[2].substr(5), l.number);
      m.up = parse_braced(l.tokens[3].substr(3), l.number);
    } else if (l.tokens.size() != 2) {
      throw ParseError(l.number, "remove takes a label and a side");
    }
    cert.moves.push_back(std::move(m));
  }
  return cert;
}

std::string format_certificate(const SpaceMoveCertificate& certificate) {
  std::ostringstream out;
  out << "start: inline\n" << format_poset(certificate.start);
  for (const auto& m : certificate.moves) {
    if (m.direction == MoveDirection::remove)
      out << "remove " << m.label << ' ' << to_string(m.side) << '\n';
    else
      out << "add " << m.label << ' ' << to_string(m.side) << " down=" << braced(m.down) << " up=" << braced(m.up)
          << '\n';
  }
  return out.str();
}

std::string format_certificate(const SimplicialMoveCertificate& certificate) {
  std::ostringstream out;
  out << "start: inline\n" << format_complex(certificate.start);
  for (const auto& m : certificate.moves)
    out << (m.direction == MoveDirection::remove ? "remove " : "add ") << braced(m.face) << ' ' << m.apex << '\n';
  return out.str();
}

std::string dot_hasse(const FiniteSpace& space) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  auto h = space.heights();
  std::size_t top = 0;
  for (auto v : h) top = std::max(top, v);
  for (std::size_t level = top + 1; level-- > 0;) {
    out << "  { rank=same;";
    for (Element x = 0; x < space.size(); ++x)
      if (h[x] == level) out << " \"" << space.label(x) << "\";";
    out << " }\n";
  }
  for (const auto& [x, y] : hasse_edges(space))
    out << "  \"" << space.label(y) << "\" -> \"" << space.label(x) << "\" [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string dot_skeleton(const SimplicialComplex& complex) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (const auto& s : complex.simplices()) {
    if (s.size() == 1) out << "  \"" << complex.vertex_label(s[0]) << "\";\n";
    if (s.size() == 2)
      out << "  \"" << complex.vertex_label(s[0]) << "\" -- \"" << complex.vertex_label(s[1]) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace finspace
