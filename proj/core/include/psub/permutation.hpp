#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace psub {

// A bijection on {0, ..., degree-1}. Points act on the right throughout:
// a.then(b) applies a first, then b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(unsigned degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);  // validates

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;

  // Apply *this first, then other.
  Permutation then(const Permutation& other) const;
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    return a.then(b);
  }

  Permutation inverse() const;

  // Disjoint cycles of length >= 2, each starting at its smallest point,
  // ordered by smallest point. 0-based.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  std::uint64_t order() const;  // lcm of cycle lengths

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct permutation_hash {
  std::size_t operator()(const Permutation& p) const;
};

// Disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
// Points may be separated by spaces or commas; "()" is the identity.
Permutation parse_permutation(std::string_view text, unsigned degree);

// Canonical formatter: cycles as produced by Permutation::cycles(), 1-based,
// space-separated; identity formats as "()".
std::string format_cycles(const Permutation& p);

}  // namespace psub
