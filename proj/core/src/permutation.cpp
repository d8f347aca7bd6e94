#include "psub/permutation.hpp"

#include <cassert>
#include <numeric>

#include "psub/errors.hpp"

namespace psub {

Permutation::Permutation(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw invalid_permutation("image list is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  if (degree() != other.degree())
    throw invalid_permutation("degree mismatch in composition");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = other.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
  return r;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::uint32_t> cyc;
    std::uint32_t p = start;
    do {
      seen[p] = true;
      cyc.push_back(p);
      p = images_[p];
    } while (p != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto& cyc : cycles())
    ord = std::lcm(ord, static_cast<std::uint64_t>(cyc.size()));
  return ord;
}

std::size_t permutation_hash::operator()(const Permutation& p) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation parse_permutation(std::string_view text, unsigned degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };

  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw parse_error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw parse_error("expected point number in cycle");
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 1u << 30) throw parse_error("point number out of range");
        ++i;
      }
      if (v < 1 || v > degree) throw parse_error("point exceeds degree");
      const auto pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt]) throw parse_error("repeated point in cycle notation");
      used[pt] = true;
      cyc.push_back(pt);
    }
    saw_cycle = true;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      images[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  if (!saw_cycle) throw parse_error("empty permutation text");
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  const auto cycs = p.cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out;
}

}  // namespace psub
