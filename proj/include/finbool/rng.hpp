#pragma once

#include <cstdint>

namespace finbool {

// Counter-based deterministic generator.  Draw i from seed s is
//
//   out(s, i) = mix(s + (i+1) * 0x9E3779B97F4A7C15)
//
// where mix is the splitmix64 finalizer
//
//   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
//
// with all arithmetic modulo 2^64.  below(n) reduces a draw modulo n.
// substream(j) reseeds with out(s, j), giving per-trial streams that do not
// depend on how many draws earlier trials consumed.  The scheme is spelled
// out so runs can be reproduced outside this codebase.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::uint64_t i) const { return mix(seed_ + (i + 1) * kGamma); }

  std::uint64_t next() { return at(counter_++); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  bool coin() { return next() & 1; }

  Rng substream(std::uint64_t index) const { return Rng(at(index)); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace finbool
