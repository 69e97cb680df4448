#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ordfactor {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

template <class Fn>
void for_each_bit(const Bitset& bits, Fn&& fn) {
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) fn(i);
}

std::vector<std::size_t> to_indices(const Bitset& bits);
Bitset from_indices(std::size_t size, std::span<const std::size_t> indices);

}  // namespace ordfactor
