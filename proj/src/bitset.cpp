#include "ordfactor/bitset.hpp"

namespace ordfactor {

std::vector<std::size_t> to_indices(const Bitset& bits) {
  std::vector<std::size_t> out;
  out.reserve(bits.count());
  for_each_bit(bits, [&](std::size_t i) { out.push_back(i); });
  return out;
}

Bitset from_indices(std::size_t size, std::span<const std::size_t> indices) {
  Bitset bits(size);
  for (auto i : indices) bits.set(i);
  return bits;
}

}  // namespace ordfactor
