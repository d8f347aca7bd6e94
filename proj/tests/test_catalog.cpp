#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "psub/catalog.hpp"
#include "psub/classify.hpp"
#include "psub/errors.hpp"

using namespace psub;

TEST_CASE("constructor orders match the counting formulas") {
  CHECK(build_group("sym:1").order() == 1);
  CHECK(build_group("sym:4").order() == 24);
  CHECK(build_group("sym:6").order() == 720);
  CHECK(build_group("alt:3").order() == 3);
  CHECK(build_group("alt:4").order() == 12);
  CHECK(build_group("alt:6").order() == 360);
  CHECK(build_group("cyclic:1").order() == 1);
  CHECK(build_group("cyclic:15").order() == 15);
  CHECK(build_group("dihedral:8").order() == 8);
  CHECK(build_group("dihedral:14").order() == 14);
  CHECK(build_group("elem_abelian:3,3").order() == 27);
  CHECK(build_group("direct:cyclic:3;cyclic:5").order() == 15);
  CHECK(build_group("direct:sym:3;sym:3").order() == 36);

  // |sl2(p)| = p(p-1)(p+1), |psl2(p)| = |sl2(p)| / gcd(2, p-1)
  CHECK(build_group("sl2:3").order() == 24);
  CHECK(build_group("sl2:5").order() == 120);
  CHECK(build_group("psl2:5").order() == 60);
  CHECK(build_group("psl2:7").order() == 168);
}

TEST_CASE("elem_abelian(5,2): order 25, every nontrivial element of order 5") {
  const auto g = build_group("elem_abelian:5,2");
  CHECK(g.order() == 25);
  for (std::uint32_t i = 1; i < g.order(); ++i)
    CHECK(g.element_order(i) == 5);
}

TEST_CASE("sl2(13) acts on the 168 nonzero vectors with order 2184") {
  const auto g = build_group("sl2:13");
  CHECK(g.degree() == 168);
  CHECK(g.order() == 2184);  // 13 * 12 * 14
  CHECK(center(g).order() == 2);
}

TEST_CASE("psl2(13): degree 14, order 1092") {
  const auto g = build_group("psl2:13");
  CHECK(g.degree() == 14);
  CHECK(g.order() == 1092);
}

TEST_CASE("e25_z3 is the Schmidt fixture of order 75") {
  const auto g = build_group("builtin:e25_z3");
  CHECK(g.order() == 75);
  CHECK_FALSE(is_supersolvable(g).value);
  CHECK(is_schmidt(g, build_lattice(g)).has_value());
}

TEST_CASE("e49_s3: order 294, irreducible S3 action, orders 14 and 21") {
  const auto g = build_group("builtin:e49_s3");
  REQUIRE(g.order() == 294);

  // the linear part <s, r> is S3: order 6, non-abelian
  const auto s3part = subgroup_generated_by(
      g, {g.generators()[2], g.generators()[3]});
  CHECK(s3part.order() == 6);
  CHECK(g.generators()[2].then(g.generators()[3]) !=
        g.generators()[3].then(g.generators()[2]));

  // irreducibility: each translation generates all of E49 as a normal
  // subgroup, i.e. E49 is a minimal normal subgroup
  const auto t = g.index_of(g.generators()[0]);
  const auto closure = normal_closure(g, std::vector<std::uint32_t>{t});
  CHECK(closure.order() == 49);
  bool has14 = false, has21 = false;
  const auto lat = build_lattice(g);
  for (std::uint32_t i = 0; i < lat.size(); ++i) {
    if (lat.node(i).order == 14) has14 = true;
    if (lat.node(i).order == 21) has21 = true;
  }
  CHECK(has14);
  CHECK(has21);
}

TEST_CASE("gens descriptor") {
  const auto g = build_group("gens:3:(1 2),(1 2 3)");
  CHECK(g.order() == 6);
}

TEST_CASE("descriptor errors") {
  CHECK_THROWS_AS(build_group("builtin:nope"), unknown_builtin);
  CHECK_THROWS_AS(build_group("wat:3"), unknown_builtin);
  CHECK_THROWS_AS(build_group("cyclic:0"), invalid_parameter);
  CHECK_THROWS_AS(build_group("dihedral:7"), invalid_parameter);
  CHECK_THROWS_AS(build_group("elem_abelian:4,2"), invalid_parameter);
  CHECK_THROWS_AS(build_group("sl2:4"), invalid_parameter);
  CHECK_THROWS_AS(build_group("affine:5,2:[[1,0],[0,0]]"), not_invertible);
  CHECK_THROWS_AS(build_group("affine:5,2:[[1,0]]"), invalid_parameter);
  CHECK_THROWS_AS(build_group("affine:5,2:oops"), invalid_parameter);
}

TEST_CASE("group JSON round trip") {
  const auto g = group_from_json(
      R"j({"degree":3, "generators":["(1 2)","(1 2 3)"]})j");
  CHECK(g.order() == 6);

  CHECK_THROWS_AS(group_from_json(R"j({"degree":3,"generators":["(1 4)"]})j"),
                  parse_error);
  CHECK_THROWS_AS(group_from_json(R"j({"degree":3,"generators":[]})j"),
                  parse_error);
  CHECK_THROWS_AS(
      group_from_json(R"j({"degree":3,"generators":["(1 2)"],"xx":1})j"),
      parse_error);
  CHECK_THROWS_AS(group_from_json("not json"), parse_error);

  const std::string path = "roundtrip_test_group.json";
  const auto s4 = build_group("sym:4");
  save_group(s4, path);
  const auto loaded = load_group(path);
  CHECK(loaded.order() == 24);
  CHECK(loaded.generators() == s4.generators());
  // canonical file: save(load(f)) is byte-identical
  std::ifstream in(path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const std::string path2 = "roundtrip_test_group2.json";
  save_group(loaded, path2);
  std::ifstream in2(path2, std::ios::binary);
  std::string bytes2((std::istreambuf_iterator<char>(in2)),
                     std::istreambuf_iterator<char>());
  CHECK(bytes == bytes2);
  std::remove(path.c_str());
  std::remove(path2.c_str());

  CHECK_THROWS_AS(load_group("does_not_exist.json"), io_error);
}

TEST_CASE("fingerprints separate and identify") {
  CHECK_FALSE(fingerprint(build_group("cyclic:4")) ==
              fingerprint(build_group("elem_abelian:2,2")));
  CHECK(fingerprint(build_group("sym:3")) ==
        fingerprint(build_group("dihedral:6")));

  // relabeled copies have equal fingerprints
  fixtures::rng64 rng(41);
  const auto g = build_group("builtin:a4");
  for (int t = 0; t < 5; ++t) {
    const auto sigma = fixtures::random_permutation(4, rng);
    std::vector<Permutation> conj_gens;
    for (const auto& p : g.generators())
      conj_gens.push_back(sigma.inverse().then(p).then(sigma));
    const FiniteGroup relabeled(4, conj_gens, "a4-relabeled");
    CHECK(fingerprint(relabeled) == fingerprint(g));
  }
}

TEST_CASE("default corpus spec lists the required fixtures") {
  const auto spec = default_corpus_spec();
  auto has = [&](const std::string& s) {
    return std::find(spec.descriptors.begin(), spec.descriptors.end(), s) !=
           spec.descriptors.end();
  };
  CHECK(has("builtin:a5"));
  CHECK(has("builtin:a4"));
  CHECK(has("builtin:q8"));
  CHECK(has("builtin:d8"));
  CHECK(has("builtin:e25_z3"));
  CHECK(has("builtin:e49_s3"));
  CHECK(has("sl2:13"));
  CHECK(has("psl2:13"));
  CHECK(has("family:order400"));
  CHECK(has("cyclic:64"));
  CHECK(has("dihedral:64"));
  CHECK(has("elem_abelian:2,6"));
}

TEST_CASE("corpus generation is deterministic and records skips") {
  CorpusSpec spec;
  spec.seed = 0xC0FFEE;
  spec.descriptors = {"builtin:a4", "cyclic:6", "direct:cyclic:2;cyclic:3"};
  spec.random.max_degree = 6;
  spec.random.count_per_degree = 2;

  const auto c1 = corpus(spec);
  const auto c2 = corpus(spec);
  REQUIRE(c1.groups.size() == c2.groups.size());
  for (std::size_t i = 0; i < c1.groups.size(); ++i) {
    CHECK(c1.groups[i].label == c2.groups[i].label);
    CHECK(c1.groups[i].group.generators() == c2.groups[i].group.generators());
    for (std::uint32_t e = 0; e < c1.groups[i].group.order(); ++e)
      CHECK(c1.groups[i].group.element(e) == c2.groups[i].group.element(e));
  }
  CHECK(c1.skipped == c2.skipped);

  // a tiny element cap forces recorded skips (S5/S6-sized randoms)
  Limits tiny;
  tiny.max_elements = 30;
  const auto c3 = corpus(spec, tiny);
  CHECK_FALSE(c3.skipped.empty());
  CHECK(c3.groups.size() + c3.skipped.size() ==
        c1.groups.size() + c1.skipped.size());
}

TEST_CASE("corpus spec file parsing") {
  const std::string path = "corpus_spec_test.json";
  {
    std::ofstream out(path);
    out << R"({"seed": 7, "descriptors": ["builtin:a4"], )"
        << R"("random": {"max_degree": 4, "count_per_degree": 1}})";
  }
  const auto spec = load_corpus_spec(path);
  CHECK(spec.seed == 7);
  REQUIRE(spec.descriptors.size() == 1);
  CHECK(spec.descriptors[0] == "builtin:a4");
  CHECK(spec.random.max_degree == 4);
  CHECK(spec.random.count_per_degree == 1);
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << R"({"descriptors": [], "bogus": 1})";
  }
  CHECK_THROWS_AS(load_corpus_spec(path), parse_error);
  std::remove(path.c_str());
}
