#ifndef LEXCONTRAST_RANDOM_H_
#define LEXCONTRAST_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace lexcontrast {

// std::mt19937_64 output is fixed by the standard but the standard
// distributions are not, so bounded draws and shuffles are done here to
// keep seeded output identical across standard libraries.
using Rng = std::mt19937_64;

// Uniform integer in [0, n). n must be positive.
uint64_t UniformIndex(Rng &rng, uint64_t n);

// Fisher-Yates shuffle driven by UniformIndex.
template <typename T>
void Shuffle(std::vector<T> &items, Rng &rng) {
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(UniformIndex(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

// 64-bit FNV-1a.
uint64_t HashString(std::string_view text);

// Generator for one item of a batch, derived from the batch seed and the
// item's identity rather than its position.
Rng DerivedRng(uint64_t seed, std::string_view a, std::string_view b);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_RANDOM_H_
