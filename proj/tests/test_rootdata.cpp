#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "repring/errors.hpp"
#include "repring/rootdata.hpp"
#include "repring/smith.hpp"

using namespace repring;

namespace {

Weight random_weight(std::mt19937_64& rng, int rank, Int lo, Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  Weight w(rank);
  for (auto& v : w) v = dist(rng);
  return w;
}

Int smith_det(const SemisimpleType& t) {
  Int det = 1;
  for (Int d : smith_normal_form(cartan_matrix(t)).diagonal) det *= d;
  return det;
}

}  // namespace

TEST_CASE("simple type validation and aliases") {
  CHECK(make_simple_type(Series::B, 1) == SimpleType{Series::A, 1});
  CHECK(make_simple_type(Series::C, 1) == SimpleType{Series::A, 1});
  CHECK_THROWS_AS(make_simple_type(Series::D, 2), DomainError);
  CHECK_THROWS_AS(make_simple_type(Series::E, 9), DomainError);
  CHECK_THROWS_AS(make_simple_type(Series::F, 3), DomainError);
  CHECK_THROWS_AS(parse_simple_type("A0"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("H3"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("A"), DomainError);
  CHECK(parse_simple_type("e7") == SimpleType{Series::E, 7});
  CHECK(parse_simple_type("B1") == SimpleType{Series::A, 1});
  CHECK(parse_semisimple_type("D4xA1").name() == "D4xA1");
  CHECK(parse_semisimple_type("D4xA1").rank() == 5);
  CHECK_THROWS_AS(parse_semisimple_type("A2x"), DomainError);
  CHECK_THROWS_AS(parse_semisimple_type(""), DomainError);
}

TEST_CASE("cartan matrix entries") {
  CHECK(cartan_matrix(parse_semisimple_type("A2")) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(parse_semisimple_type("B2")) == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(cartan_matrix(parse_semisimple_type("C2")) == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(cartan_matrix(parse_semisimple_type("G2")) == IntMatrix{{2, -1}, {-3, 2}});

  // B and C are transposes of each other
  IntMatrix b = cartan_matrix(parse_semisimple_type("B4"));
  IntMatrix c = cartan_matrix(parse_semisimple_type("C4"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(b[i][j] == c[j][i]);

  // block-diagonal assembly
  IntMatrix p = cartan_matrix(parse_semisimple_type("A1xA2"));
  CHECK(p == IntMatrix{{2, 0, 0}, {0, 2, -1}, {0, -1, 2}});
}

TEST_CASE("cartan determinants via the Smith diagonal") {
  CHECK(smith_det(parse_semisimple_type("G2")) == 1);
  CHECK(smith_det(parse_semisimple_type("F4")) == 1);
  CHECK(smith_det(parse_semisimple_type("E8")) == 1);
  CHECK(smith_det(parse_semisimple_type("D4")) == 4);
  CHECK(smith_det(parse_semisimple_type("A3")) == 4);
  CHECK(smith_det(parse_semisimple_type("E6")) == 3);
  CHECK(smith_det(parse_semisimple_type("E7")) == 2);
}

TEST_CASE("positive root counts") {
  auto count = [](const char* name) {
    return make_root_datum(parse_semisimple_type(name)).positive_roots.size();
  };
  CHECK(count("A3") == 6);
  CHECK(count("B4") == 16);
  CHECK(count("C4") == 16);
  CHECK(count("D4") == 12);
  CHECK(count("G2") == 6);
  CHECK(count("F4") == 24);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
  CHECK(count("A2xB2") == 7);
}

TEST_CASE("simple reflection on A2") {
  RootDatum rd = make_root_datum("A2");
  CHECK(simple_reflection(rd, 0, {1, 0}) == Weight{-1, 1});
  CHECK(simple_reflection(rd, 0, {-1, 1}) == Weight{1, 0});
  CHECK(simple_reflection(rd, 1, {1, 0}) == Weight{1, 0});
  CHECK_THROWS_AS(simple_reflection(rd, 2, {1, 0}), DomainError);
  CHECK_THROWS_AS(simple_reflection(rd, -1, {1, 0}), DomainError);
}

TEST_CASE("simple reflections are involutions") {
  std::mt19937_64 rng(7);
  for (const char* name : {"A2", "B3", "G2", "D4", "A1xC2"}) {
    RootDatum rd = make_root_datum(name);
    for (int trial = 0; trial < 40; ++trial) {
      Weight w = random_weight(rng, rd.rank, -4, 4);
      for (int i = 0; i < rd.rank; ++i)
        CHECK(simple_reflection(rd, i, simple_reflection(rd, i, w)) == w);
    }
  }
}

TEST_CASE("weyl orbit examples") {
  RootDatum a2 = make_root_datum("A2");
  // graded-lex ascending: (0,-1), (-1,1), (1,0)
  CHECK(weyl_orbit(a2, {1, 0}) ==
        std::vector<Weight>{{0, -1}, {-1, 1}, {1, 0}});
  CHECK(weyl_orbit(a2, {0, 0}) == std::vector<Weight>{{0, 0}});
  RootDatum a1 = make_root_datum("A1");
  CHECK(weyl_orbit(a1, {2}) == std::vector<Weight>{{-2}, {2}});
}

TEST_CASE("orbit properties: one dominant element, size divides |W|") {
  std::mt19937_64 rng(11);
  for (const char* name : {"A2", "B2", "G2", "A1xA1", "B3"}) {
    RootDatum rd = make_root_datum(name);
    Int w_order = weyl_group_order(rd);
    CHECK(w_order == weyl_order_formula(rd.type));
    for (int trial = 0; trial < 25; ++trial) {
      Weight w = random_weight(rng, rd.rank, -3, 3);
      auto orbit = weyl_orbit(rd, w);
      int dominants = 0;
      for (const auto& v : orbit)
        if (is_dominant(v)) ++dominants;
      CHECK(dominants == 1);
      CHECK(w_order % static_cast<Int>(orbit.size()) == 0);
    }
  }
}

TEST_CASE("dominant representative") {
  RootDatum a2 = make_root_datum("A2");
  CHECK(dominant_representative(a2, {-1, 1}) == Weight{1, 0});
  CHECK(dominant_representative(a2, {2, 1}) == Weight{2, 1});
  RootDatum a1 = make_root_datum("A1");
  CHECK(dominant_representative(a1, {-2}) == Weight{2});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Weight w = random_weight(rng, 2, -5, 5);
    Weight d = dominant_representative(a2, w);
    CHECK(is_dominant(d));
    auto orbit = weyl_orbit(a2, w);
    CHECK(std::find(orbit.begin(), orbit.end(), d) != orbit.end());
  }
}

TEST_CASE("weyl group orders") {
  CHECK(weyl_group_order(make_root_datum("A2")) == 6);
  CHECK(weyl_group_order(make_root_datum("G2")) == 12);
  CHECK(weyl_group_order(make_root_datum("A1xA1")) == 4);
  CHECK(weyl_group_order(make_root_datum("B3")) == 48);
  CHECK(weyl_group_order(make_root_datum("D4")) == 192);
  CHECK(weyl_order_formula(parse_semisimple_type("E8")) == 696729600);
  CHECK_THROWS_AS(weyl_orbit(make_root_datum("A5xA4"), Weight(9, 1), OrbitLimits{8}),
                  DomainError);
}

TEST_CASE("dominance order") {
  RootDatum a2 = make_root_datum("A2");
  CHECK(dominance_leq(a2, {1, 1}, {3, 0}));
  CHECK(dominance_leq(a2, {1, 1}, {1, 1}));
  CHECK_FALSE(dominance_leq(a2, {1, 0}, {0, 1}));
  CHECK_FALSE(dominance_leq(a2, {3, 0}, {1, 1}));

  // partial-order axioms on sampled dominant weights
  std::mt19937_64 rng(5);
  for (const char* name : {"A2", "B2", "G2"}) {
    RootDatum rd = make_root_datum(name);
    std::vector<Weight> sample;
    for (int t = 0; t < 12; ++t) sample.push_back(random_weight(rng, rd.rank, 0, 4));
    for (const auto& x : sample)
      for (const auto& y : sample) {
        if (dominance_leq(rd, x, y) && dominance_leq(rd, y, x)) CHECK(x == y);
        for (const auto& z : sample)
          if (dominance_leq(rd, x, y) && dominance_leq(rd, y, z))
            CHECK(dominance_leq(rd, x, z));
      }
  }
}

TEST_CASE("signed root set is stable under every simple reflection") {
  for (const char* name : {"B3", "G2", "A2", "D4"}) {
    RootDatum rd = make_root_datum(name);
    std::set<Weight> signed_roots;
    for (const auto& a : rd.positive_roots) {
      signed_roots.insert(a);
      signed_roots.insert(weight_scale(-1, a));
    }
    for (const auto& a : signed_roots)
      for (int i = 0; i < rd.rank; ++i)
        CHECK(signed_roots.count(simple_reflection(rd, i, a)) == 1);
  }
}

TEST_CASE("symmetrizer and inner product") {
  for (const char* name : {"A2", "B3", "C3", "G2", "F4", "B2xG2"}) {
    RootDatum rd = make_root_datum(name);
    for (int i = 0; i < rd.rank; ++i)
      for (int j = 0; j < rd.rank; ++j)
        CHECK(rd.cartan[i][j] * rd.symmetrizer[j] == rd.cartan[j][i] * rd.symmetrizer[i]);
    // (alpha_i, alpha_i) = 2 d_i and the defining pairing <w_i, a_j^v> = delta_ij
    for (int i = 0; i < rd.rank; ++i) {
      Weight alpha(rd.cartan[i]);
      CHECK(weight_inner_product(rd, alpha, alpha) == Rational(2 * rd.symmetrizer[i]));
      for (int j = 0; j < rd.rank; ++j) {
        Weight wj(rd.rank, 0);
        wj[j] = 1;
        CHECK(weight_inner_product(rd, wj, alpha) ==
              (i == j ? Rational(rd.symmetrizer[i]) : Rational(0)));
      }
    }
  }
}
