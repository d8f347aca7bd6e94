#pragma once

#include <cstdint>
#include <vector>

namespace psub {

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Largest power of p dividing n (the p-part); 1 if p does not divide n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

bool is_prime_power(std::uint64_t n);  // n = p^k with k >= 1

// Multiplicative order of a modulo m (gcd(a, m) = 1).
unsigned multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace psub
