#pragma once

// Line-oriented text formats:
//
//   .poset   elements: a b c      cover: x y   (x < y, nothing in between)
//   .cplx    vertices: a b c      facet: a b c
//   .map     dom: <file>  cod: <file>  send: x y
//   certificates
//            start: <file> | start: inline (followed by a .poset/.cplx block)
//            remove <label> <side>
//            add <label> <side> down={a,b} up={c}
//            remove {a,b} c          (simplicial: face, then apex)
//            add {a} b
//
// `#` starts a comment. Parse failures throw ParseError with the line number.

#include "finspace/continuous_map.hpp"
#include "finspace/homotopy.hpp"
#include "finspace/simplicial_complex.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <variant>

namespace finspace {

/// Maps a path named inside a file (`dom:`, `start:`) to that file's text.
using Resolver = std::function<std::string(const std::string& path)>;

FiniteSpace parse_poset(std::string_view text);
std::string format_poset(const FiniteSpace& space);

SimplicialComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& complex);

ContinuousMap parse_map(std::string_view text, const Resolver& resolve);
/// Writes `dom:`/`cod:` with the given names.
std::string format_map(const ContinuousMap& f, const std::string& dom_name, const std::string& cod_name);

enum class ObjectKind { poset, complex, map, certificate, unknown };

/// Classifies a text by its first keyword.
ObjectKind sniff(std::string_view text);

using Certificate = std::variant<SpaceMoveCertificate, SimplicialMoveCertificate>;

Certificate parse_certificate(std::string_view text, const Resolver& resolve);
/// Always writes the start object inline, so the output is self-contained.
std::string format_certificate(const SpaceMoveCertificate& certificate);
std::string format_certificate(const SimplicialMoveCertificate& certificate);

std::string dot_hasse(const FiniteSpace& space);
std::string dot_skeleton(const SimplicialComplex& complex);

}  // namespace finspace
