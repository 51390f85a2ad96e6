#include "lexcontrast/random.h"

namespace lexcontrast {

uint64_t UniformIndex(Rng &rng, uint64_t n) {
  // Rejection sampling over the largest multiple of n.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % n;
}

uint64_t HashString(std::string_view text) {
  uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

Rng DerivedRng(uint64_t seed, std::string_view a, std::string_view b) {
  const uint64_t ha = HashString(a);
  const uint64_t hb = HashString(b);
  std::seed_seq sequence{static_cast<uint32_t>(seed),
                         static_cast<uint32_t>(seed >> 32),
                         static_cast<uint32_t>(ha),
                         static_cast<uint32_t>(ha >> 32),
                         static_cast<uint32_t>(hb),
                         static_cast<uint32_t>(hb >> 32)};
  return Rng(sequence);
}

}  // namespace lexcontrast
