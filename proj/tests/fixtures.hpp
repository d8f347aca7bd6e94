#pragma once

// Small hand-rolled groups for the unit tests that exercise layers below
// the catalog (which has its own constructors and tests).

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "psub/group.hpp"
#include "psub/permutation.hpp"

namespace fixtures {

inline psub::FiniteGroup make_group(unsigned degree,
                                    std::initializer_list<const char*> gens,
                                    const char* name = "") {
  std::vector<psub::Permutation> ps;
  for (const char* s : gens) ps.push_back(psub::parse_permutation(s, degree));
  return psub::FiniteGroup(degree, std::move(ps), name);
}

inline psub::FiniteGroup s3() { return make_group(3, {"(1 2)", "(1 2 3)"}, "s3"); }
inline psub::FiniteGroup s4() {
  return make_group(4, {"(1 2)", "(1 2 3 4)"}, "s4");
}
inline psub::FiniteGroup a4() {
  return make_group(4, {"(1 2 3)", "(2 3 4)"}, "a4");
}
inline psub::FiniteGroup a5() {
  return make_group(5, {"(1 2 3 4 5)", "(1 2 3)"}, "a5");
}
inline psub::FiniteGroup q8() {
  return make_group(8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"}, "q8");
}
inline psub::FiniteGroup cyclic(unsigned n) {
  std::vector<std::uint32_t> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return psub::FiniteGroup(n, {psub::Permutation(std::move(img))}, "cyclic");
}

// splitmix64: tiny deterministic rng for property-style tests.
struct rng64 {
  std::uint64_t state;
  explicit rng64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline psub::Permutation random_permutation(unsigned degree, rng64& rng) {
  std::vector<std::uint32_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = i;
  for (unsigned i = degree; i > 1; --i) {
    const auto j = static_cast<unsigned>(rng.below(i));
    std::swap(img[i - 1], img[j]);
  }
  return psub::Permutation(std::move(img));
}

}  // namespace fixtures
