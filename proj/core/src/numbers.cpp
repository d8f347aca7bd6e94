#include "psub/numbers.hpp"

#include <cassert>

namespace psub {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1;
}

unsigned multiplicative_order(std::uint64_t a, std::uint64_t m) {
  assert(m > 1);
  a %= m;
  std::uint64_t x = a % m;
  unsigned k = 1;
  while (x != 1) {
    x = (x * a) % m;
    ++k;
    assert(k <= m);
  }
  return k;
}

}  // namespace psub
