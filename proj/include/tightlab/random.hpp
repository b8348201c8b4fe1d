#ifndef TIGHTLAB_RANDOM_HPP
#define TIGHTLAB_RANDOM_HPP

#include <cstdint>
#include <initializer_list>

namespace tl {

/// splitmix64 finaliser.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-sensitive hash of a key tuple; the counter-based PRNG behind every
/// seeded generator in the library.
inline std::uint64_t counter_hash(std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t key : keys) h = mix64(h ^ mix64(key));
  return h;
}

}  // namespace tl

#endif
