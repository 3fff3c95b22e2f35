#pragma once

#include <cstdint>
#include <random>

namespace rqnn {

using Rng = std::mt19937_64;

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for the stream labelled (a, b) under a master seed. Every
// consumer that needs an independent stream derives one through this rule
// (e.g. label = (trial, 0) in sweeps, (time step, component) in noisy
// trajectory runs), so results do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return mix64(mix64(mix64(master) ^ a) ^ b);
}

}  // namespace rqnn
