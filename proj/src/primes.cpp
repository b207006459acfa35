#include "liss/primes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace liss {

std::vector<std::uint8_t> prime_table(std::uint64_t limit) {
  std::vector<std::uint8_t> flags(limit + 1, 1);
  flags[0] = 0;
  if (limit >= 1) flags[1] = 0;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!flags[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) flags[j] = 0;
  }
  return flags;
}

PrimeSequence first_n_primes(std::size_t n) {
  if (n > kMaxPrimeCount) {
    throw std::invalid_argument("first_n_primes: n=" + std::to_string(n) +
                                " exceeds cap " +
                                std::to_string(kMaxPrimeCount));
  }
  PrimeSequence seq;
  if (n == 0) return seq;
  seq.values.reserve(n);

  // p_n < n(ln n + ln ln n) for n >= 6; fixed bound covers the rest.
  std::uint64_t bound = 12;
  if (n >= 6) {
    const double nd = static_cast<double>(n);
    bound = static_cast<std::uint64_t>(
        std::ceil(nd * (std::log(nd) + std::log(std::log(nd)))));
  }

  const std::vector<std::uint8_t> flags = prime_table(bound);
  for (std::uint64_t v = 2; v <= bound && seq.values.size() < n; ++v) {
    if (flags[v]) seq.values.push_back(v);
  }
  return seq;
}

AlternatingSplit split_alternating(const PrimeSequence& p) {
  AlternatingSplit split;
  split.odd_indexed.values.reserve((p.count() + 1) / 2);
  split.even_indexed.values.reserve(p.count() / 2);
  for (std::size_t i = 0; i < p.count(); ++i) {
    ((i % 2 == 0) ? split.odd_indexed : split.even_indexed)
        .values.push_back(p[i]);
  }
  return split;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace liss
