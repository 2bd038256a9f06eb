#pragma once

// Built-in examples. Every entry is rebuilt and re-validated against its
// manifest when loaded, so a transcription slip fails loudly.

#include "finspace/continuous_map.hpp"
#include "finspace/finite_space.hpp"
#include "finspace/simplicial_complex.hpp"

#include <string>
#include <variant>
#include <vector>

namespace finspace {

using CorpusObject = std::variant<FiniteSpace, SimplicialComplex, ContinuousMap>;

struct CorpusEntry {
  std::string name;
  std::string description;
  CorpusObject object;
  std::vector<std::string> manifest;  // properties checked at load time
};

std::vector<std::string> corpus_names();

/// Builds and validates an entry. Throws Error("<name>: <manifest line>")
/// when a property fails, or on an unknown name.
CorpusEntry corpus_entry(const std::string& name);

/// The entry in its text format. Maps refer to `example:<name>-dom/-cod`.
std::string corpus_text(const std::string& name);

FiniteSpace wallet();
FiniteSpace sd3();
FiniteSpace four_point();
ContinuousMap sierpinski_map();
SimplicialComplex dunce_hat();

}  // namespace finspace
