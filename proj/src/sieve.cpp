#include "primehit/sieve.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace primehit {

namespace {

// Small odd base primes up to sqrt(limit), by plain sieving.
std::vector<std::uint64_t> base_primes(std::uint64_t root) {
  std::vector<char> mark(root + 1, 1);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!mark[i]) continue;
    if (i * i <= root)
      for (std::uint64_t j = i * i; j <= root; j += 2 * i) mark[j] = 0;
    primes.push_back(i);
  }
  return primes;
}

} // namespace

bool SieveTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("SieveTable::is_prime: n exceeds sieve limit");
  return is_prime_unchecked(n);
}

std::uint64_t SieveTable::prime_pi(std::uint64_t x) const {
  if (x > limit_) throw std::out_of_range("SieveTable::prime_pi: x exceeds sieve limit");
  std::uint64_t block = x / kCheckpointStride;
  std::uint64_t count = checkpoints_[block];
  std::uint64_t w = (block * kCheckpointStride) >> 6;
  std::uint64_t last = x >> 6;
  for (; w < last; ++w) count += static_cast<std::uint64_t>(std::popcount(bits_[w]));
  std::uint64_t tail_bits = (x & 63) + 1; // bits [0, x&63] of the last word
  std::uint64_t mask = tail_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << tail_bits) - 1);
  count += static_cast<std::uint64_t>(std::popcount(bits_[last] & mask));
  return count;
}

std::uint64_t SieveTable::count_primes_in_window(std::uint64_t k, std::uint64_t m) const {
  if (m < 1) throw std::invalid_argument("count_primes_in_window: m must be >= 1");
  if (k + m > limit_)
    throw std::out_of_range("count_primes_in_window: k + m exceeds sieve limit");
  return prime_pi(k + m) - prime_pi(k);
}

SieveTable build_sieve(std::uint64_t limit, std::uint64_t segment_bits,
                       std::uint64_t max_bytes) {
  if (segment_bits < 64) segment_bits = 64;
  std::uint64_t nwords = (limit >> 6) + 1;
  if (nwords * 8 > max_bytes)
    throw capacity_error("build_sieve: bitmap for limit " + std::to_string(limit) +
                         " exceeds memory budget");

  SieveTable t;
  t.limit_ = limit;
  t.bits_.assign(nwords, ~std::uint64_t{0});

  // Evens are composite except 2; 0 and 1 are not prime.
  constexpr std::uint64_t odd_positions = 0xAAAAAAAAAAAAAAAAull;
  for (auto& w : t.bits_) w &= odd_positions;
  t.bits_[0] &= ~std::uint64_t{0b10};
  if (limit >= 2) t.bits_[0] |= std::uint64_t{1} << 2;

  std::uint64_t root = isqrt_u64(limit);
  auto primes = base_primes(root);

  for (std::uint64_t lo = 0; lo <= limit; lo += segment_bits) {
    std::uint64_t hi = std::min(limit, lo + segment_bits - 1);
    for (std::uint64_t p : primes) {
      std::uint64_t start = p * p;
      if (start > hi) break;
      if (start < lo) {
        std::uint64_t q = (lo + p - 1) / p;
        if ((q & 1) == 0) ++q; // odd multiples only
        start = q * p;
        if (start < p * p) start = p * p;
      }
      for (std::uint64_t n = start; n <= hi; n += 2 * p)
        t.bits_[n >> 6] &= ~(std::uint64_t{1} << (n & 63));
    }
  }

  // Cumulative checkpoints every kCheckpointStride integers.
  std::uint64_t nblocks = limit / SieveTable::kCheckpointStride + 1;
  t.checkpoints_.assign(nblocks + 1, 0);
  std::uint64_t acc = 0;
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    t.checkpoints_[b] = acc;
    std::uint64_t w0 = (b * SieveTable::kCheckpointStride) >> 6;
    std::uint64_t w1 = std::min<std::uint64_t>(nwords, ((b + 1) * SieveTable::kCheckpointStride) >> 6);
    for (std::uint64_t w = w0; w < w1; ++w)
      acc += static_cast<std::uint64_t>(std::popcount(t.bits_[w]));
  }
  t.checkpoints_[nblocks] = acc;
  return t;
}

} // namespace primehit
