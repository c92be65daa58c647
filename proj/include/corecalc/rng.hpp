#ifndef CORECALC_RNG_HPP
#define CORECALC_RNG_HPP

#include <cstdint>

namespace corecalc {

// Deterministic splitmix64 generator. The whole artifact derives every
// random choice from one of these so that a fixed seed reproduces runs
// byte for byte, independent of the standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) {
    // rejection sampling keeps the distribution exact
    std::uint64_t limit = bound * (~0ULL / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Child generator with a decorrelated stream; used to give independent
  // rounds/retries their own reproducible randomness.
  Rng derive(std::uint64_t index) const {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL * (index + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace corecalc

#endif  // CORECALC_RNG_HPP
