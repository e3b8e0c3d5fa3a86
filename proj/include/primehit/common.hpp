#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace primehit {

// Thrown when an operation would exceed a configured memory budget or the
// range covered by a sieve / target set.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Compensated (Kahan) accumulator for long probability sums.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// Exact integer square root: largest r with r*r <= n.
inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

} // namespace primehit
