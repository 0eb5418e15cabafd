#include "hardimer/rng.hpp"

#include <vector>

#include "hardimer/error.hpp"

namespace hardimer {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  return splitmix64(seed + chunk * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error("uniform_below: bound must be positive");
  // Accept draws below the largest multiple of `bound` representable in 64 bits.
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= limit) return x % bound;
  }
}

BigInt uniform_below(Rng& rng, const BigInt& bound) {
  if (bound <= 0) throw Error("uniform_below: bound must be positive");
  if (mpz_fits_ulong_p(bound.get_mpz_t()) && sizeof(unsigned long) == 8) {
    return BigInt(static_cast<unsigned long>(uniform_below(rng, std::uint64_t{bound.get_ui()})));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t limbs = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - (limbs - 1) * 64);
  const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  std::vector<std::uint64_t> words(limbs);
  BigInt candidate;
  for (;;) {
    for (std::size_t i = 0; i < limbs; ++i) words[i] = rng();
    words[limbs - 1] &= top_mask;
    // Least significant word first, native endianness within each word.
    mpz_import(candidate.get_mpz_t(), limbs, -1, sizeof(std::uint64_t), 0, 0, words.data());
    if (candidate < bound) return candidate;
  }
}

}  // namespace hardimer
