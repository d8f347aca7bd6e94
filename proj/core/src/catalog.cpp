#include "psub/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "psub/errors.hpp"
#include "psub/numbers.hpp"

namespace psub {

namespace {

using json = nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size()) throw invalid_parameter("bad integer: " + s);
    return v;
  } catch (const std::exception&) {
    throw invalid_parameter("bad integer: " + s);
  }
}

}  // namespace

GroupDescriptor parse_descriptor(const std::string& text) {
  GroupDescriptor d;
  d.text = text;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string{} : text.substr(colon + 1);

  if (head == "builtin") {
    d.kind = GroupDescriptor::Kind::builtin;
    d.head = rest;
    if (rest.empty()) throw unknown_builtin("empty builtin name");
    return d;
  }
  if (head == "file") {
    d.kind = GroupDescriptor::Kind::file;
    d.path = rest;
    if (rest.empty()) throw invalid_parameter("file descriptor needs a path");
    return d;
  }
  if (head == "family") {
    d.kind = GroupDescriptor::Kind::family;
    d.head = rest;
    if (rest != "order400")
      throw unknown_builtin("unknown family: " + rest);
    return d;
  }
  if (head == "direct") {
    d.kind = GroupDescriptor::Kind::parametric;
    d.head = "direct";
    d.factors = split(rest, ';');
    if (d.factors.size() < 2)
      throw invalid_parameter("direct product needs at least two factors");
    return d;
  }
  if (head == "gens") {
    d.kind = GroupDescriptor::Kind::explicit_generators;
    const auto second = rest.find(':');
    if (second == std::string::npos)
      throw invalid_parameter("gens descriptor needs degree and generators");
    d.degree = static_cast<unsigned>(parse_int(rest.substr(0, second)));
    for (auto& s : split(rest.substr(second + 1), ','))
      d.generator_strings.push_back(s);
    return d;
  }
  if (head == "affine") {
    d.kind = GroupDescriptor::Kind::parametric;
    d.head = "affine";
    const auto second = rest.find(':');
    if (second == std::string::npos)
      throw invalid_parameter("affine descriptor needs p,k and matrices");
    for (auto& s : split(rest.substr(0, second), ','))
      d.params.push_back(parse_int(s));
    json m;
    try {
      m = json::parse(rest.substr(second + 1));
    } catch (const json::exception& e) {
      throw invalid_parameter(std::string("bad matrix JSON: ") + e.what());
    }
    if (!m.is_array() || m.empty())
      throw invalid_parameter("matrix JSON must be a nonempty array");
    auto flatten = [](const json& rows) {
      std::vector<std::int64_t> flat;
      for (const auto& row : rows) {
        if (!row.is_array()) throw invalid_parameter("bad matrix rows");
        for (const auto& e : row) flat.push_back(e.get<std::int64_t>());
      }
      return flat;
    };
    if (m[0].is_array() && !m[0].empty() && m[0][0].is_array()) {
      for (const auto& one : m) d.matrices.push_back(flatten(one));
    } else {
      d.matrices.push_back(flatten(m));
    }
    return d;
  }

  d.kind = GroupDescriptor::Kind::parametric;
  d.head = head;
  if (!rest.empty())
    for (auto& s : split(rest, ',')) d.params.push_back(parse_int(s));
  return d;
}

namespace {

FiniteGroup make(unsigned degree, std::vector<Permutation> gens,
                 std::string name, const Limits& limits) {
  return FiniteGroup(degree, std::move(gens), std::move(name),
                     limits.max_elements);
}

Permutation cycle_perm(unsigned degree, const std::vector<std::uint32_t>& pts) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(std::move(img));
}

FiniteGroup build_sym(unsigned n, const std::string& name,
                      const Limits& limits) {
  if (n < 1) throw invalid_parameter("sym needs n >= 1");
  if (n == 1) return make(1, {Permutation(1)}, name, limits);
  std::vector<Permutation> gens{cycle_perm(n, {0, 1})};
  if (n > 2) {
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    gens.push_back(cycle_perm(n, all));
  }
  return make(n, std::move(gens), name, limits);
}

FiniteGroup build_alt(unsigned n, const std::string& name,
                      const Limits& limits) {
  if (n < 1) throw invalid_parameter("alt needs n >= 1");
  if (n <= 2) return make(n, {Permutation(n)}, name, limits);
  std::vector<Permutation> gens{cycle_perm(n, {0, 1, 2})};
  if (n > 3) {
    std::vector<std::uint32_t> pts;
    if (n % 2 == 1) {
      pts.resize(n);
      std::iota(pts.begin(), pts.end(), 0u);
    } else {
      pts.resize(n - 1);
      std::iota(pts.begin(), pts.end(), 1u);
    }
    gens.push_back(cycle_perm(n, pts));
  }
  return make(n, std::move(gens), name, limits);
}

FiniteGroup build_cyclic(unsigned n, const std::string& name,
                         const Limits& limits) {
  if (n < 1) throw invalid_parameter("cyclic needs n >= 1");
  std::vector<std::uint32_t> pts(n);
  std::iota(pts.begin(), pts.end(), 0u);
  return make(n, {cycle_perm(n, pts)}, name, limits);
}

FiniteGroup build_dihedral(unsigned order, const std::string& name,
                           const Limits& limits) {
  if (order < 4 || order % 2 != 0)
    throw invalid_parameter("dihedral order must be even and >= 4");
  const unsigned n = order / 2;
  std::vector<std::uint32_t> rot(n);
  std::iota(rot.begin(), rot.end(), 0u);
  std::vector<std::uint32_t> refl(n);
  for (unsigned i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return make(n, {cycle_perm(n, rot), Permutation(std::move(refl))}, name,
              limits);
}

FiniteGroup build_elem_abelian(std::uint64_t p, unsigned k,
                               const std::string& name, const Limits& limits) {
  if (!is_prime(p)) throw invalid_parameter("elem_abelian needs a prime p");
  if (k < 1) throw invalid_parameter("elem_abelian needs k >= 1");
  const auto degree = static_cast<unsigned>(p * k);
  std::vector<Permutation> gens;
  for (unsigned block = 0; block < k; ++block) {
    std::vector<std::uint32_t> pts(p);
    std::iota(pts.begin(), pts.end(),
              static_cast<std::uint32_t>(block * p));
    gens.push_back(cycle_perm(degree, pts));
  }
  return make(degree, std::move(gens), name, limits);
}

FiniteGroup build_direct(const std::vector<FiniteGroup>& factors,
                         const std::string& name, const Limits& limits) {
  unsigned degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  unsigned offset = 0;
  for (const auto& f : factors) {
    for (const auto& p : f.generators()) {
      std::vector<std::uint32_t> img(degree);
      std::iota(img.begin(), img.end(), 0u);
      for (unsigned i = 0; i < f.degree(); ++i) img[offset + i] = offset + p(i);
      gens.push_back(Permutation(std::move(img)));
    }
    offset += f.degree();
  }
  return make(degree, std::move(gens), name, limits);
}

// k x k matrices over F_p, row-major.
struct MatrixModP {
  std::uint64_t p;
  unsigned k;
  std::vector<std::uint64_t> a;  // k*k entries

  std::uint64_t& at(unsigned r, unsigned c) { return a[r * k + c]; }
  std::uint64_t at(unsigned r, unsigned c) const { return a[r * k + c]; }
};

std::uint64_t det_mod_p(MatrixModP m) {
  std::uint64_t det = 1;
  for (unsigned col = 0; col < m.k; ++col) {
    unsigned pivot = col;
    while (pivot < m.k && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.k) return 0;
    if (pivot != col) {
      for (unsigned c = 0; c < m.k; ++c)
        std::swap(m.at(pivot, c), m.at(col, c));
      det = (det * (m.p - 1)) % m.p;
    }
    det = (det * m.at(col, col)) % m.p;
    // inverse of the pivot
    std::uint64_t inv = 1, base = m.at(col, col), e = m.p - 2;
    while (e) {
      if (e & 1) inv = (inv * base) % m.p;
      base = (base * base) % m.p;
      e >>= 1;
    }
    for (unsigned r = col + 1; r < m.k; ++r) {
      const auto f = (m.at(r, col) * inv) % m.p;
      for (unsigned c = col; c < m.k; ++c)
        m.at(r, c) = (m.at(r, c) + (m.p - f) * m.at(col, c)) % m.p;
    }
  }
  return det;
}

// E_{p^k} acted on by the given invertible matrices: translations first,
// then the linear maps, acting on the p^k vectors of F_p^k.
FiniteGroup build_affine(std::uint64_t p, unsigned k,
                         const std::vector<MatrixModP>& mats,
                         const std::string& name, const Limits& limits) {
  if (!is_prime(p)) throw invalid_parameter("affine needs a prime p");
  if (k < 1) throw invalid_parameter("affine needs k >= 1");
  std::uint64_t degree64 = 1;
  for (unsigned i = 0; i < k; ++i) {
    degree64 *= p;
    if (degree64 > 1u << 20) throw invalid_parameter("affine degree too big");
  }
  const auto degree = static_cast<unsigned>(degree64);

  auto vec_of = [&](std::uint32_t idx) {
    std::vector<std::uint64_t> v(k);
    for (unsigned i = 0; i < k; ++i) {
      v[i] = idx % p;
      idx = static_cast<std::uint32_t>(idx / p);
    }
    return v;
  };
  auto idx_of = [&](const std::vector<std::uint64_t>& v) {
    std::uint64_t idx = 0;
    for (unsigned i = k; i-- > 0;) idx = idx * p + v[i];
    return static_cast<std::uint32_t>(idx);
  };

  std::vector<Permutation> gens;
  for (unsigned t = 0; t < k; ++t) {
    std::vector<std::uint32_t> img(degree);
    for (std::uint32_t x = 0; x < degree; ++x) {
      auto v = vec_of(x);
      v[t] = (v[t] + 1) % p;
      img[x] = idx_of(v);
    }
    gens.push_back(Permutation(std::move(img)));
  }
  for (const auto& m : mats) {
    if (m.p != p || m.k != k)
      throw invalid_parameter("matrix shape mismatch in affine");
    if (det_mod_p(m) == 0) throw not_invertible("affine matrix is singular");
    std::vector<std::uint32_t> img(degree);
    for (std::uint32_t x = 0; x < degree; ++x) {
      const auto v = vec_of(x);
      std::vector<std::uint64_t> w(k, 0);
      for (unsigned r = 0; r < k; ++r)
        for (unsigned c = 0; c < k; ++c)
          w[r] = (w[r] + m.at(r, c) * v[c]) % p;
      img[x] = idx_of(w);
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return make(degree, std::move(gens), name, limits);
}

FiniteGroup build_sl2(std::uint64_t p, const std::string& name,
                      const Limits& limits) {
  if (!is_prime(p)) throw invalid_parameter("sl2 needs a prime p");
  const auto degree = static_cast<unsigned>(p * p - 1);
  auto idx_of = [&](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint32_t>(x * p + y - 1);  // (0,0) excluded
  };
  auto apply = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c,
                   std::uint64_t d) {
    std::vector<std::uint32_t> img(degree);
    for (std::uint64_t x = 0; x < p; ++x)
      for (std::uint64_t y = 0; y < p; ++y) {
        if (x == 0 && y == 0) continue;
        img[idx_of(x, y)] = idx_of((a * x + b * y) % p, (c * x + d * y) % p);
      }
    return Permutation(std::move(img));
  };
  return make(degree, {apply(1, 1, 0, 1), apply(1, 0, 1, 1)}, name, limits);
}

FiniteGroup build_psl2(std::uint64_t p, const std::string& name,
                       const Limits& limits) {
  if (!is_prime(p)) throw invalid_parameter("psl2 needs a prime p");
  // projective line: points 0..p-1 are [x:1], point p is [1:0]
  const auto degree = static_cast<unsigned>(p + 1);
  auto apply = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c,
                   std::uint64_t d) {
    std::vector<std::uint32_t> img(degree);
    for (std::uint64_t x = 0; x < p; ++x) {
      const auto num = (a * x + b) % p;
      const auto den = (c * x + d) % p;
      if (den == 0) {
        img[x] = static_cast<std::uint32_t>(p);
      } else {
        std::uint64_t inv = 1, base = den, e = p - 2;
        while (e) {
          if (e & 1) inv = (inv * base) % p;
          base = (base * base) % p;
          e >>= 1;
        }
        img[x] = static_cast<std::uint32_t>((num * inv) % p);
      }
    }
    img[p] = c == 0 ? static_cast<std::uint32_t>(p) : [&] {
      std::uint64_t inv = 1, base = c, e = p - 2;
      while (e) {
        if (e & 1) inv = (inv * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
      return static_cast<std::uint32_t>((a * inv) % p);
    }();
    return Permutation(std::move(img));
  };
  return make(degree, {apply(1, 1, 0, 1), apply(1, 0, 1, 1)}, name, limits);
}

MatrixModP matrix_from_flat(std::uint64_t p, unsigned k,
                            const std::vector<std::int64_t>& flat) {
  if (flat.size() != static_cast<std::size_t>(k) * k)
    throw invalid_parameter("matrix needs k*k entries");
  MatrixModP m{p, k, {}};
  m.a.resize(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] < 0 || static_cast<std::uint64_t>(flat[i]) >= p)
      throw invalid_parameter("matrix entries must satisfy 0 <= e < p");
    m.a[i] = static_cast<std::uint64_t>(flat[i]);
  }
  return m;
}

FiniteGroup build_fixture(const std::string& name, const Limits& limits) {
  if (name == "a4") return build_alt(4, "a4", limits);
  if (name == "a5") return build_alt(5, "a5", limits);
  if (name == "s4") return build_sym(4, "s4", limits);
  if (name == "d8") return build_dihedral(8, "d8", limits);
  if (name == "q8")
    return make(8,
                {parse_permutation("(1 2 4 7)(3 6 8 5)", 8),
                 parse_permutation("(1 3 4 8)(2 5 7 6)", 8)},
                "q8", limits);
  if (name == "e25_z3")
    return build_affine(5, 2, {matrix_from_flat(5, 2, {0, 4, 1, 4})},
                        "e25_z3", limits);
  if (name == "e49_s3")
    return build_affine(7, 2,
                        {matrix_from_flat(7, 2, {0, 1, 1, 0}),
                         matrix_from_flat(7, 2, {2, 0, 0, 4})},
                        "e49_s3", limits);
  throw unknown_builtin("unknown builtin: " + name);
}

void expect_params(const GroupDescriptor& d, std::size_t n) {
  if (d.params.size() != n)
    throw invalid_parameter("descriptor " + d.text + " expects " +
                            std::to_string(n) + " parameter(s)");
}

}  // namespace

FiniteGroup build_group(const GroupDescriptor& d, const Limits& limits) {
  switch (d.kind) {
    case GroupDescriptor::Kind::builtin:
      return build_fixture(d.head, limits);
    case GroupDescriptor::Kind::file:
      return load_group(d.path, limits);
    case GroupDescriptor::Kind::family:
      throw invalid_parameter(
          "family descriptors expand to several groups; use corpus()");
    case GroupDescriptor::Kind::explicit_generators: {
      std::vector<Permutation> gens;
      for (const auto& s : d.generator_strings)
        gens.push_back(parse_permutation(s, d.degree));
      return make(d.degree, std::move(gens), d.text, limits);
    }
    case GroupDescriptor::Kind::parametric:
      break;
  }

  if (d.head == "sym") {
    expect_params(d, 1);
    return build_sym(static_cast<unsigned>(d.params[0]), d.text, limits);
  }
  if (d.head == "alt") {
    expect_params(d, 1);
    return build_alt(static_cast<unsigned>(d.params[0]), d.text, limits);
  }
  if (d.head == "cyclic") {
    expect_params(d, 1);
    return build_cyclic(static_cast<unsigned>(d.params[0]), d.text, limits);
  }
  if (d.head == "dihedral") {
    expect_params(d, 1);
    return build_dihedral(static_cast<unsigned>(d.params[0]), d.text, limits);
  }
  if (d.head == "elem_abelian") {
    expect_params(d, 2);
    return build_elem_abelian(static_cast<std::uint64_t>(d.params[0]),
                              static_cast<unsigned>(d.params[1]), d.text,
                              limits);
  }
  if (d.head == "affine") {
    expect_params(d, 2);
    const auto p = static_cast<std::uint64_t>(d.params[0]);
    const auto k = static_cast<unsigned>(d.params[1]);
    std::vector<MatrixModP> mats;
    for (const auto& flat : d.matrices)
      mats.push_back(matrix_from_flat(p, k, flat));
    return build_affine(p, k, mats, d.text, limits);
  }
  if (d.head == "sl2") {
    expect_params(d, 1);
    return build_sl2(static_cast<std::uint64_t>(d.params[0]), d.text, limits);
  }
  if (d.head == "psl2") {
    expect_params(d, 1);
    return build_psl2(static_cast<std::uint64_t>(d.params[0]), d.text,
                      limits);
  }
  if (d.head == "direct") {
    std::vector<FiniteGroup> factors;
    for (const auto& f : d.factors)
      factors.push_back(build_group(parse_descriptor(f), limits));
    return build_direct(factors, d.text, limits);
  }
  throw unknown_builtin("unknown descriptor: " + d.text);
}

FiniteGroup build_group(const std::string& descriptor, const Limits& limits) {
  return build_group(parse_descriptor(descriptor), limits);
}

FiniteGroup group_from_json(const std::string& json_text,
                            const Limits& limits) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad group JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("group JSON must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "degree" && key != "generators" && key != "name")
      throw parse_error("unknown field in group JSON: " + key);
  if (!j.contains("degree") || !j["degree"].is_number_integer() ||
      j["degree"].get<std::int64_t>() < 1)
    throw parse_error("group JSON needs integer degree >= 1");
  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty())
    throw parse_error("group JSON needs a nonempty generators array");
  const auto degree = j["degree"].get<unsigned>();
  std::vector<Permutation> gens;
  for (const auto& s : j["generators"]) {
    if (!s.is_string()) throw parse_error("generators must be strings");
    gens.push_back(parse_permutation(s.get<std::string>(), degree));
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw parse_error("name must be a string");
    name = j["name"].get<std::string>();
  }
  return FiniteGroup(degree, std::move(gens), std::move(name),
                     limits.max_elements);
}

std::string group_to_json(const FiniteGroup& g) {
  json j;
  j["degree"] = g.degree();
  j["generators"] = json::array();
  for (const auto& p : g.generators())
    j["generators"].push_back(format_cycles(p));
  if (!g.name().empty()) j["name"] = g.name();
  return j.dump() + "\n";
}

FiniteGroup load_group(const std::string& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_json(buf.str(), limits);
}

void save_group(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << group_to_json(g);
  if (!out) throw io_error("failed writing " + path);
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << ";eo=";
  for (const auto& [o, c] : element_orders) os << o << ":" << c << ",";
  os << ";cc=";
  for (auto c : conjugacy_class_sizes) os << c << ",";
  os << ";so=";
  if (subgroup_orders)
    for (const auto& [o, c] : *subgroup_orders) os << o << ":" << c << ",";
  else
    os << "absent";
  os << ";z=" << center_order << ";ds=";
  for (auto o : derived_series_orders) os << o << ",";
  return os.str();
}

Fingerprint fingerprint(const FiniteGroup& g, const Limits& limits) {
  Fingerprint f;
  f.order = g.order();

  std::map<std::uint64_t, std::uint64_t> histo;
  for (std::uint32_t i = 0; i < g.order(); ++i) histo[g.element_order(i)]++;
  f.element_orders.assign(histo.begin(), histo.end());

  // element conjugacy classes: orbits under generator conjugation
  std::vector<char> seen(g.order(), 0);
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> orbit{i};
    seen[i] = 1;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const auto j = g.conj_by_generator(k)[orbit[qi]];
        if (!seen[j]) {
          seen[j] = 1;
          orbit.push_back(j);
        }
      }
    f.conjugacy_class_sizes.push_back(orbit.size());
  }
  std::sort(f.conjugacy_class_sizes.begin(), f.conjugacy_class_sizes.end());

  try {
    const auto lat = build_lattice(g, {}, limits.max_lattice_nodes);
    std::map<std::uint64_t, std::uint64_t> sub_histo;
    for (std::uint32_t i = 0; i < lat.size(); ++i)
      sub_histo[lat.node(i).order]++;
    f.subgroup_orders.emplace(sub_histo.begin(), sub_histo.end());
  } catch (const cap_exceeded&) {
    // marked absent
  }

  f.center_order = center(g).order();
  for (const auto& h : derived_series(g))
    f.derived_series_orders.push_back(h.order());
  return f;
}

namespace {

// GL(2,5), enumerated as packed matrices (a,b,c,d) in lexicographic order.
struct Gl25 {
  struct Mat {
    std::uint8_t a, b, c, d;
    bool operator==(const Mat&) const = default;
  };
  std::vector<Mat> mats;
  std::map<std::array<std::uint8_t, 4>, std::uint16_t> index;

  Gl25() {
    for (std::uint8_t a = 0; a < 5; ++a)
      for (std::uint8_t b = 0; b < 5; ++b)
        for (std::uint8_t c = 0; c < 5; ++c)
          for (std::uint8_t d = 0; d < 5; ++d) {
            if ((a * d + 5 * 5 - b * c) % 5 == 0) continue;
            index[{a, b, c, d}] = static_cast<std::uint16_t>(mats.size());
            mats.push_back(Mat{a, b, c, d});
          }
    assert(mats.size() == 480);
  }

  std::uint16_t mul(std::uint16_t x, std::uint16_t y) const {
    const auto& m = mats[x];
    const auto& n = mats[y];
    return index.at({static_cast<std::uint8_t>((m.a * n.a + m.b * n.c) % 5),
                     static_cast<std::uint8_t>((m.a * n.b + m.b * n.d) % 5),
                     static_cast<std::uint8_t>((m.c * n.a + m.d * n.c) % 5),
                     static_cast<std::uint8_t>((m.c * n.b + m.d * n.d) % 5)});
  }

  std::uint16_t inv(std::uint16_t x) const {
    const auto& m = mats[x];
    // adjugate / det
    const int det = (m.a * m.d + 25 - m.b * m.c) % 5;
    int dinv = 1;
    for (int e = 0; e < 3; ++e) dinv = (dinv * det) % 5;  // det^3 = det^-1
    auto norm = [&](int v) {
      return static_cast<std::uint8_t>(((v % 5) + 5) % 5);
    };
    return index.at({norm(m.d * dinv), norm(-m.b * dinv), norm(-m.c * dinv),
                     norm(m.a * dinv)});
  }

  unsigned order_of(std::uint16_t x) const {
    unsigned o = 1;
    auto cur = x;
    const auto id = index.at({1, 0, 0, 1});
    while (cur != id) {
      cur = mul(cur, x);
      ++o;
    }
    return o;
  }
};

using MatSet = std::vector<std::uint16_t>;  // sorted element indices

MatSet mat_closure(const Gl25& gl, std::uint16_t x, std::uint16_t y) {
  std::vector<char> in(gl.mats.size(), 0);
  const auto id = gl.index.at({1, 0, 0, 1});
  std::vector<std::uint16_t> queue{id};
  in[id] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (auto gidx : {x, y}) {
      const auto next = gl.mul(queue[qi], gidx);
      if (!in[next]) {
        in[next] = 1;
        queue.push_back(next);
        if (queue.size() > 16) return {};  // only order-16 subgroups wanted
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

Order400Result search_order400_family(const Limits& limits) {
  const Gl25 gl;
  std::vector<std::uint16_t> order4;
  for (std::uint16_t i = 0; i < gl.mats.size(); ++i)
    if (gl.order_of(i) == 4) order4.push_back(i);

  // subgroups of order 16 generated by two order-4 elements
  std::map<MatSet, std::pair<std::uint16_t, std::uint16_t>> subgroups;
  for (std::size_t i = 0; i < order4.size(); ++i)
    for (std::size_t j = i + 1; j < order4.size(); ++j) {
      auto set = mat_closure(gl, order4[i], order4[j]);
      if (set.size() != 16) continue;
      subgroups.emplace(std::move(set),
                        std::make_pair(order4[i], order4[j]));
    }

  // deduplicate under GL(2,5)-conjugacy: canonical form = least conjugate
  std::map<MatSet, std::pair<std::uint16_t, std::uint16_t>> classes;
  for (const auto& [set, gens] : subgroups) {
    MatSet best = set;
    for (std::uint16_t g = 0; g < gl.mats.size(); ++g) {
      MatSet conj;
      conj.reserve(set.size());
      const auto gi = gl.inv(g);
      for (auto x : set) conj.push_back(gl.mul(gl.mul(gi, x), g));
      std::sort(conj.begin(), conj.end());
      if (conj < best) best = std::move(conj);
    }
    classes.emplace(std::move(best), gens);  // keeps the first gens seen
  }

  Order400Result result;
  std::vector<Order400Member> members;
  for (const auto& [set, gens] : classes) {
    const auto& m1 = gl.mats[gens.first];
    const auto& m2 = gl.mats[gens.second];
    std::ostringstream name;
    name << "affine:5,2:[[[" << int(m1.a) << "," << int(m1.b) << "],["
         << int(m1.c) << "," << int(m1.d) << "]],[[" << int(m2.a) << ","
         << int(m2.b) << "],[" << int(m2.c) << "," << int(m2.d) << "]]]";
    const auto g = build_group(name.str(), limits);
    assert(g.order() == 400);
    const auto lat = build_lattice(g, {}, limits.max_lattice_nodes);
    if (!minimal_non_supersolvable(g, lat, limits).value) continue;
    Order400Member member{g, fingerprint(g, limits),
                          classify_group(g, limits), {}};
    const auto syl2 = sylow_subgroup(g, 2);
    std::map<std::uint64_t, std::uint64_t> histo;
    syl2.members.for_each_set([&](std::size_t i) {
      histo[g.element_order(static_cast<std::uint32_t>(i))]++;
    });
    member.sylow2_element_orders.assign(histo.begin(), histo.end());
    members.push_back(std::move(member));
  }

  std::sort(members.begin(), members.end(),
            [](const Order400Member& a, const Order400Member& b) {
              return a.fingerprint.to_string() < b.fingerprint.to_string();
            });
  std::vector<std::string> distinct;
  for (const auto& m : members) {
    const auto s = m.fingerprint.to_string();
    if (distinct.empty() || distinct.back() != s) distinct.push_back(s);
  }
  result.members = std::move(members);
  result.fingerprint_classes = distinct.size();
  return result;
}

CorpusSpec default_corpus_spec() {
  CorpusSpec spec;
  spec.descriptors = {
      "builtin:a4",    "builtin:a5",     "builtin:s4",     "builtin:q8",
      "builtin:d8",    "builtin:e25_z3", "builtin:e49_s3", "sl2:13",
      "psl2:13",       "family:order400",
  };
  for (unsigned n = 2; n <= 64; ++n)
    spec.descriptors.push_back("cyclic:" + std::to_string(n));
  for (unsigned m = 4; m <= 64; m += 2)
    spec.descriptors.push_back("dihedral:" + std::to_string(m));
  for (const auto& [p, kmax] :
       std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {3, 3}, {5, 2},
                                                  {7, 2}})
    for (unsigned k = 2; k <= kmax; ++k)
      spec.descriptors.push_back("elem_abelian:" + std::to_string(p) + "," +
                                 std::to_string(k));
  spec.descriptors.insert(spec.descriptors.end(),
                          {
                              "direct:builtin:a4;cyclic:2",
                              "direct:builtin:a4;cyclic:5",
                              "direct:builtin:s4;cyclic:3",
                              "direct:builtin:q8;cyclic:3",
                              "direct:builtin:a4;builtin:a4",
                              "direct:builtin:e25_z3;cyclic:2",
                              "direct:builtin:a5;cyclic:2",
                          });
  return spec;
}

CorpusSpec load_corpus_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad corpus spec JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("corpus spec must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "seed" && key != "descriptors" && key != "random")
      throw parse_error("unknown field in corpus spec: " + key);
  CorpusSpec spec;
  spec.descriptors.clear();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (!j.contains("descriptors") || !j["descriptors"].is_array())
    throw parse_error("corpus spec needs a descriptors array");
  for (const auto& d : j["descriptors"])
    spec.descriptors.push_back(d.get<std::string>());
  if (j.contains("random")) {
    const auto& r = j["random"];
    for (const auto& [key, value] : r.items())
      if (key != "max_degree" && key != "max_generators" &&
          key != "count_per_degree")
        throw parse_error("unknown field in corpus spec random: " + key);
    if (r.contains("max_degree"))
      spec.random.max_degree = r["max_degree"].get<unsigned>();
    if (r.contains("max_generators"))
      spec.random.max_generators = r["max_generators"].get<unsigned>();
    if (r.contains("count_per_degree"))
      spec.random.count_per_degree = r["count_per_degree"].get<unsigned>();
  }
  return spec;
}

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

Permutation random_perm(unsigned degree, SplitMix& rng) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (unsigned i = degree; i > 1; --i)
    std::swap(img[i - 1], img[rng.next() % i]);
  return Permutation(std::move(img));
}

}  // namespace

Corpus corpus(const CorpusSpec& spec, const Limits& limits) {
  Corpus out;
  auto add = [&](const std::string& label, FiniteGroup g) {
    try {
      g.order();  // materialize, so caps surface here
      out.groups.push_back(CorpusEntry{label, std::move(g)});
    } catch (const cap_exceeded& e) {
      out.skipped.push_back(label + ": " + e.what());
    }
  };

  for (const auto& text : spec.descriptors) {
    const auto d = parse_descriptor(text);
    if (d.kind == GroupDescriptor::Kind::family) {
      const auto family = search_order400_family(limits);
      // one representative per fingerprint class, canonical order
      std::vector<std::string> seen;
      unsigned idx = 0;
      for (const auto& m : family.members) {
        const auto s = m.fingerprint.to_string();
        if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
        seen.push_back(s);
        add("order400:" + std::to_string(++idx), m.group);
      }
      continue;
    }
    try {
      add(text, build_group(d, limits));
    } catch (const cap_exceeded& e) {
      out.skipped.push_back(text + ": " + e.what());
    }
  }

  // seeded random 2- or 3-generated subgroups of sym(n)
  for (unsigned n = 4; n <= spec.random.max_degree; ++n) {
    for (unsigned c = 0; c < spec.random.count_per_degree; ++c) {
      SplitMix rng{spec.seed ^ (0x5eedULL + n * 1009 + c)};
      const unsigned gens =
          spec.random.max_generators >= 3 ? 2 + rng.next() % 2 : 2;
      std::vector<Permutation> ps;
      for (unsigned i = 0; i < gens; ++i) ps.push_back(random_perm(n, rng));
      const std::string label =
          "rand:sym" + std::to_string(n) + "#" + std::to_string(c);
      add(label, FiniteGroup(n, std::move(ps), label, limits.max_elements));
    }
  }
  return out;
}

}  // namespace psub
