#pragma once

// Integral simplicial homology via Smith normal form. Used as an independent
// oracle for moves that should preserve the weak homotopy type.

#include "finspace/finite_space.hpp"
#include "finspace/simplicial_complex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace finspace {

using BigInt = boost::multiprecision::cpp_int;

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyReport {
  bool reduced = false;
  std::vector<HomologyGroup> groups;  // H_0 .. H_dim

  /// True when every group is zero.
  bool trivial() const;
  /// Sum of (-1)^d betti_d; for an unreduced report this equals chi(K).
  long long euler_characteristic() const;

  friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

/// Invariant factors of an integer matrix (nonzero diagonal of its Smith
/// normal form). Entries are given column-wise as (row, value) pairs.
std::vector<BigInt> smith_invariants(std::size_t rows,
                                     const std::vector<std::vector<std::pair<std::size_t, long long>>>& columns);

/// Throws Error on an empty complex.
HomologyReport homology(const SimplicialComplex& complex);
HomologyReport reduced_homology(const SimplicialComplex& complex);

/// Homology of the order complex K(X).
HomologyReport homology_space(const FiniteSpace& space);
HomologyReport reduced_homology_space(const FiniteSpace& space);

/// One `H_d = Z^b ⊕ Z/t ⊕ ...` line per dimension (`H_d = 0` when trivial).
std::string format_report(const HomologyReport& report);

}  // namespace finspace
