#pragma once

#include <cstdint>

#include "extbinom/exact.hpp"
#include "extbinom/weights.hpp"

namespace extbinom {

/// A residue class representative: 0 <= value < modulus, modulus >= 2.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

// Throws NotPrime unless p is prime.
void require_prime(std::uint64_t p);

// <p, n>_f mod p: f(r) when n = p*r, 0 otherwise.
Residue prime_row(std::uint64_t p, std::uint64_t n, const WeightSpec& f);

// <p^m, n>_f mod p (modulus p, not p^m): f(r) when n = p^m * r, else 0.
Residue prime_power_row(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                        const WeightSpec& f);

// <k, n>_f mod 2 by halving k and n.
Residue parity(std::uint64_t k, std::uint64_t n, const WeightSpec& f);

struct LucasOptions {
  Budget budget = default_budget();
  // Largest column of an inner coefficient row allowed for unbounded support.
  std::uint64_t column_cap = 10'000;
};

/// <k, n>_f mod p as the sum over digit tuples (s_0..s_r) with
/// sum s_i p^i = n of prod <k_i, s_i>_f, k_i the base-p digits of k.
Residue lucas_mod(std::uint64_t k, std::uint64_t n, const WeightSpec& f,
                  std::uint64_t p, const LucasOptions& options = {});

struct GranvilleOptions {
  // Largest column of a base-case row allowed for unbounded support.
  std::uint64_t column_cap = 10'000;
};

struct GranvilleStats {
  std::uint64_t max_depth = 0;
  std::uint64_t memo_entries = 0;
};

/// <k, n>_f mod p by recursing on (k/p, n/p - m), memoized on (k, n).
/// Fast path: k and n may be as large as 2^64 - 1 for finite support.
Residue granville_mod(std::uint64_t k, std::uint64_t n, const WeightSpec& f,
                      std::uint64_t p, const GranvilleOptions& options = {},
                      GranvilleStats* stats = nullptr);

/// g(r) = <p, r*p>_f for r <= S, as a Table spec. Needs finite support.
WeightSpec babbage_weight(const WeightSpec& f, std::uint64_t p);

}  // namespace extbinom
