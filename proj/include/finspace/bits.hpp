#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace finspace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<std::size_t> bit_indices(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

inline Bits full_bits(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

}  // namespace finspace
