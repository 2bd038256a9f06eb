#include "finspace/homology.hpp"

#include "finspace/error.hpp"
#include "finspace/functors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace finspace {

namespace {

struct Overflow {};

// a - q * b, exact or throwing Overflow.
long long mul_sub(long long a, long long q, long long b) {
  long long prod = 0, out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}

BigInt mul_sub(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

long long magnitude(long long v) {
  if (v == std::numeric_limits<long long>::min()) throw Overflow{};
  return v < 0 ? -v : v;
}
BigInt magnitude(const BigInt& v) { return abs(v); }

// Sparse elimination to a diagonal form by unimodular row and column operations.
template <typename Int>
class Diagonalizer {
 public:
  Diagonalizer(std::size_t rows, const std::vector<std::vector<std::pair<std::size_t, long long>>>& columns)
      : rows_(rows), cols_(columns.size()) {
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [r, v] : columns[c])
        if (v != 0) {
          rows_[r][c] = Int(v);
          cols_[c].insert(r);
        }
  }

  std::vector<Int> run() {
    std::vector<Int> diagonal;
    while (auto start = global_pivot()) {
      auto [r, c] = *start;
      for (;;) {
        if (clear_column(r, c)) {
          r = min_in_column(c);
          continue;
        }
        if (clear_row(r, c)) {
          c = min_in_row(r);
          continue;
        }
        break;
      }
      diagonal.push_back(magnitude(rows_[r][c]));
      cols_[c].clear();
      rows_[r].clear();
    }
    return diagonal;
  }

 private:
  using Pos = std::pair<std::size_t, std::size_t>;

  // Smallest magnitude overall; among units, the sparsest row.
  std::optional<Pos> global_pivot() const {
    std::optional<Pos> best;
    Int best_mag = 0;
    std::size_t best_fill = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        Int m = magnitude(v);
        std::size_t fill = rows_[r].size() + cols_[c].size();
        if (!best || m < best_mag || (m == best_mag && fill < best_fill)) {
          best = Pos{r, c};
          best_mag = m;
          best_fill = fill;
        }
      }
    return best;
  }

  std::size_t min_in_column(std::size_t c) const {
    std::size_t best = *cols_[c].begin();
    for (std::size_t r : cols_[c])
      if (magnitude(rows_[r].at(c)) < magnitude(rows_[best].at(c))) best = r;
    return best;
  }

  std::size_t min_in_row(std::size_t r) const {
    std::size_t best = rows_[r].begin()->first;
    for (const auto& [c, v] : rows_[r])
      if (magnitude(v) < magnitude(rows_[r].at(best))) best = c;
    return best;
  }

  void set(std::size_t r, std::size_t c, Int v) {
    if (v == 0) {
      rows_[r].erase(c);
      cols_[c].erase(r);
    } else {
      rows_[r][c] = std::move(v);
      cols_[c].insert(r);
    }
  }

  // row_target -= q * row_source
  void row_op(std::size_t target, std::size_t source, const Int& q) {
    for (const auto& [c, v] : std::vector<std::pair<std::size_t, Int>>(rows_[source].begin(), rows_[source].end())) {
      auto it = rows_[target].find(c);
      set(target, c, mul_sub(it == rows_[target].end() ? Int(0) : it->second, q, v));
    }
  }

  // Returns true when a nonzero remainder is left in column c.
  bool clear_column(std::size_t r, std::size_t c) {
    const Int p = rows_[r][c];
    bool dirty = false;
    for (std::size_t r2 : std::vector<std::size_t>(cols_[c].begin(), cols_[c].end())) {
      if (r2 == r) continue;
      Int q = rows_[r2][c] / p;
      if (q != 0) row_op(r2, r, q);
      if (rows_[r2].count(c)) dirty = true;
    }
    return dirty;
  }

  // Column c holds only row r here, so column ops touch row r alone.
  bool clear_row(std::size_t r, std::size_t c) {
    const Int p = rows_[r][c];
    bool dirty = false;
    for (const auto& [c2, v] : std::vector<std::pair<std::size_t, Int>>(rows_[r].begin(), rows_[r].end())) {
      if (c2 == c) continue;
      Int q = v / p;
      set(r, c2, mul_sub(v, q, p));
      if (rows_[r].count(c2)) dirty = true;
    }
    return dirty;
  }

  std::vector<std::map<std::size_t, Int>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

std::vector<BigInt> to_invariants(std::vector<BigInt> diag) {
  std::erase_if(diag, [](const BigInt& d) { return d == 1; });
  // Pairwise (gcd, lcm) turns any diagonal into a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::erase_if(diag, [](const BigInt& d) { return d == 1; });
  return diag;
}

}  // namespace

std::vector<BigInt> smith_invariants(std::size_t rows,
                                     const std::vector<std::vector<std::pair<std::size_t, long long>>>& columns) {
  std::vector<BigInt> diag;
  try {
    for (long long d : Diagonalizer<long long>(rows, columns).run()) diag.emplace_back(d);
  } catch (const Overflow&) {
    diag = Diagonalizer<BigInt>(rows, columns).run();
  }
  // Keep the rank visible: units are returned as 1s ahead of the chain.
  // Normalizing can turn non-units into units (2, 3 -> 1, 6), so count after.
  const std::size_t rank = diag.size();
  auto chain = to_invariants(std::move(diag));
  std::vector<BigInt> out(rank - chain.size(), BigInt(1));
  for (auto& d : chain) out.push_back(std::move(d));
  return out;
}

bool HomologyReport::trivial() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const HomologyGroup& g) { return g.betti == 0 && g.torsion.empty(); });
}

long long HomologyReport::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < groups.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[d].betti);
  return chi;
}

HomologyReport homology(const SimplicialComplex& complex) {
  if (complex.empty()) throw Error("homology of the empty complex");
  const auto& all = complex.simplices();
  const int top = complex.dimension();
  // Position of each simplex within its dimension.
  std::vector<std::size_t> count(top + 1, 0), local(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) local[i] = count[all[i].size() - 1]++;

  // rank and invariant factors of the boundary map C_d -> C_{d-1}, d >= 1.
  std::vector<std::size_t> rank(top + 2, 0);
  std::vector<std::vector<BigInt>> torsion(top + 2);
  for (int d = 1; d <= top; ++d) {
    std::vector<std::vector<std::pair<std::size_t, long long>>> columns;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& s = all[i];
      if (static_cast<int>(s.size()) != d + 1) continue;
      std::vector<std::pair<std::size_t, long long>> col;
      for (std::size_t j = 0; j < s.size(); ++j) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
        col.emplace_back(local[*complex.find(f)], j % 2 == 0 ? 1 : -1);
      }
      columns.push_back(std::move(col));
    }
    auto inv = smith_invariants(count[d - 1], columns);
    rank[d] = inv.size();
    for (auto& t : inv)
      if (t > 1) torsion[d].push_back(t);
  }

  HomologyReport report;
  for (int d = 0; d <= top; ++d) {
    HomologyGroup g;
    g.betti = count[d] - rank[d] - rank[d + 1];
    g.torsion = torsion[d + 1];
    report.groups.push_back(std::move(g));
  }
  return report;
}

HomologyReport reduced_homology(const SimplicialComplex& complex) {
  HomologyReport report = homology(complex);
  report.reduced = true;
  report.groups[0].betti -= 1;
  return report;
}

HomologyReport homology_space(const FiniteSpace& space) { return homology(order_complex(space)); }
HomologyReport reduced_homology_space(const FiniteSpace& space) { return reduced_homology(order_complex(space)); }

std::string format_report(const HomologyReport& report) {
  std::ostringstream out;
  for (std::size_t d = 0; d < report.groups.size(); ++d) {
    const auto& g = report.groups[d];
    out << (report.reduced ? "~H_" : "H_") << d << " = ";
    std::vector<std::string> parts;
    if (g.betti == 1) parts.push_back("Z");
    if (g.betti > 1) parts.push_back("Z^" + std::to_string(g.betti));
    for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
    if (parts.empty()) out << "0";
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " ⊕ " : "") << parts[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace finspace
