// primes.hpp - prime generation, primality, and alternating prime classes
#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace liss {

// Hard cap on how many primes first_n_primes will generate.
inline constexpr std::size_t kMaxPrimeCount = 1'000'000;

// Ordered sequence of the first N primes, strictly increasing, values[0]=2.
struct PrimeSequence {
  std::vector<std::uint64_t> values;

  std::size_t count() const { return values.size(); }
  bool empty() const { return values.empty(); }
  std::uint64_t operator[](std::size_t i) const { return values[i]; }
  std::uint64_t last() const { return values.back(); }
};

// The two interleaved prime subsequences: odd_indexed holds the 1st, 3rd,
// 5th, ... primes (2, 5, 11, ...), even_indexed the 2nd, 4th, 6th, ...
// (3, 7, 13, ...). Interleaving them restores the original sequence.
struct AlternatingSplit {
  PrimeSequence odd_indexed;
  PrimeSequence even_indexed;
};

// First n primes in increasing order. Throws std::invalid_argument when
// n exceeds kMaxPrimeCount.
PrimeSequence first_n_primes(std::size_t n);

AlternatingSplit split_alternating(const PrimeSequence& p);

// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

// Sieve flags for 0..limit inclusive; flags[i] != 0 iff i is prime.
std::vector<std::uint8_t> prime_table(std::uint64_t limit);

}  // namespace liss
