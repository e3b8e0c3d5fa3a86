#pragma once

#include <cstdint>
#include <vector>

#include "primehit/common.hpp"

namespace primehit {

// Primality bitmap over [0, limit] with cumulative prime counts stored at a
// fixed checkpoint stride, so pi(x) costs one table lookup plus a popcount
// over at most one stride of bits. Immutable after construction; safe for
// unrestricted shared reads.
class SieveTable {
public:
  static constexpr std::uint64_t kDefaultSegmentBits = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kCheckpointStride = std::uint64_t{1} << 16;
  static constexpr std::uint64_t kDefaultMaxBytes = std::uint64_t{1} << 30;

  std::uint64_t limit() const { return limit_; }

  bool is_prime(std::uint64_t n) const; // n <= limit
  // Unchecked bitmap probe for hot loops; caller guarantees n <= limit.
  bool is_prime_unchecked(std::uint64_t n) const {
    return (bits_[n >> 6] >> (n & 63)) & 1u;
  }

  // pi(x): number of primes p <= x. Requires x <= limit.
  std::uint64_t prime_pi(std::uint64_t x) const;

  // Number of primes p with k < p <= k + m. Requires k + m <= limit, m >= 1.
  std::uint64_t count_primes_in_window(std::uint64_t k, std::uint64_t m) const;

  std::uint64_t prime_count() const { return limit_ > 0 ? prime_pi(limit_) : 0; }

  const std::vector<std::uint64_t>& words() const { return bits_; }

private:
  friend SieveTable build_sieve(std::uint64_t, std::uint64_t, std::uint64_t);

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> bits_;        // bit n set <=> n prime
  std::vector<std::uint64_t> checkpoints_; // checkpoints_[i] = #primes < i*stride
};

// Segmented sieve of Eratosthenes over [0, limit]. Memory beyond the result
// bitmap is O(sqrt(limit) + segment). Throws capacity_error when the bitmap
// would exceed max_bytes.
SieveTable build_sieve(std::uint64_t limit,
                       std::uint64_t segment_bits = SieveTable::kDefaultSegmentBits,
                       std::uint64_t max_bytes = SieveTable::kDefaultMaxBytes);

} // namespace primehit
