#include <doctest.h>

#include <random>

#include "repring/centerlattice.hpp"
#include "repring/errors.hpp"
#include "repring/paper_checks.hpp"

using namespace repring;

namespace {

TorusPoint pt(std::vector<Rational> exps) { return TorusPoint{std::move(exps)}; }

Rational half() { return Rational(1, 2); }

}  // namespace

TEST_CASE("smith normal form reconstructs U*A*V = diag") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> dist(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 4);
    IntMatrix a(n, std::vector<Int>(m));
    for (auto& row : a)
      for (auto& v : row) v = dist(rng);
    auto snf = smith_normal_form(a);
    IntMatrix prod = matrix_product(matrix_product(snf.left, a), snf.right);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(prod[i][j] == (i == j && i < static_cast<int>(snf.diagonal.size())
                                 ? snf.diagonal[i]
                                 : 0));
    for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i)
      if (snf.diagonal[i] != 0)
        CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
  }
}

TEST_CASE("fundamental groups per series") {
  for (int r = 1; r <= 8; ++r)
    CHECK(fundamental_group(parse_semisimple_type("A" + std::to_string(r)))
              .invariant_factors == std::vector<Int>{r + 1});
  for (int r = 4; r <= 8; r += 2)
    CHECK(fundamental_group(parse_semisimple_type("D" + std::to_string(r)))
              .invariant_factors == std::vector<Int>{2, 2});
  for (int r = 3; r <= 7; r += 2)
    CHECK(fundamental_group(parse_semisimple_type("D" + std::to_string(r)))
              .invariant_factors == std::vector<Int>{4});
  for (const char* name : {"E8", "F4", "G2"})
    CHECK(fundamental_group(parse_semisimple_type(name)).trivial());
  CHECK(fundamental_group(parse_semisimple_type("B5")).invariant_factors ==
        std::vector<Int>{2});
  CHECK(fundamental_group(parse_semisimple_type("E6")).invariant_factors ==
        std::vector<Int>{3});
  CHECK(fundamental_group(parse_semisimple_type("E7")).invariant_factors ==
        std::vector<Int>{2});
  CHECK(fundamental_group(parse_semisimple_type("A2xA1")).order() == 6);
}

TEST_CASE("center subgroup equals the closed form for every simple type") {
  for (const SimpleType& t : simple_types_up_to_rank(8)) {
    CenterSubgroup computed = center_subgroup(t);
    CenterSubgroup table = center_closed_form(t);
    CHECK_MESSAGE(computed.elements == table.elements, t.name());
    CHECK(computed.order() == fundamental_group(SemisimpleType{{t}}).order());
  }
}

TEST_CASE("center examples") {
  // B_r: generated by (1,...,1,-1)
  for (int r = 2; r <= 5; ++r) {
    CenterSubgroup c = center_subgroup(make_simple_type(Series::B, r));
    std::vector<Rational> gen(r, Rational(0));
    gen[r - 1] = half();
    CHECK(c.generators == std::vector<TorusPoint>{pt(gen)});
  }
  // E7: {(1,s,1,1,s,1,s) : s^2 = 1}
  CenterSubgroup e7 = center_subgroup(make_simple_type(Series::E, 7));
  CHECK(e7.order() == 2);
  CHECK(e7.generators ==
        std::vector<TorusPoint>{pt({Rational(0), half(), Rational(0), Rational(0), half(),
                                    Rational(0), half()})});
  // D_r odd: cyclic of order 4 generated by (s^2,...,s^2,s,s^-1), s of order 4
  CenterSubgroup d5 = center_subgroup(make_simple_type(Series::D, 5));
  CHECK(d5.order() == 4);
  CHECK(d5.generators.size() == 1);
  TorusPoint g = d5.generators[0];
  CHECK(torus_order(g) == 4);
  CHECK(d5.contains(pt({half(), Rational(0), half(), Rational(1, 4), Rational(3, 4)})));
  // A2: {(s, s^2) : s^3 = 1}
  CenterSubgroup a2 = center_subgroup(make_simple_type(Series::A, 2));
  CHECK(a2.elements == std::vector<TorusPoint>{pt({Rational(0), Rational(0)}),
                                               pt({Rational(1, 3), Rational(2, 3)}),
                                               pt({Rational(2, 3), Rational(1, 3)})});
}

TEST_CASE("pairing") {
  TorusPoint c = pt({Rational(1, 3), Rational(2, 3)});
  CHECK(pairing(c, {1, 0}) == Rational(1, 3));
  CHECK(pairing(c, {0, 0}) == Rational(0));
  CHECK(pairing(c, {1, 1}) == Rational(0));  // adjoint weight is center-trivial
  CHECK_THROWS_AS(pairing(c, {1, 0, 0}), DomainError);

  // bilinearity mod 1
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Int> dist(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    Weight a{dist(rng), dist(rng)}, b{dist(rng), dist(rng)};
    Weight sum{a[0] + b[0], a[1] + b[1]};
    CHECK(pairing(c, sum) == (pairing(c, a) + pairing(c, b)).mod1());
  }
}

TEST_CASE("roots are center-trivial for every simple type") {
  for (const SimpleType& t : simple_types_up_to_rank(8)) {
    RootDatum rd = make_root_datum(SemisimpleType{{t}});
    CenterSubgroup c = center_subgroup(t);
    for (const auto& el : c.elements)
      for (int i = 0; i < rd.rank; ++i)
        CHECK(pairing(el, Weight(rd.cartan[i])) == Rational(0));
  }
}

TEST_CASE("subgroup enumeration") {
  CenterSubgroup d4 = center_subgroup(make_simple_type(Series::D, 4));
  auto subs_d4 = subgroups(d4);
  CHECK(subs_d4.size() == 5);  // Klein four group
  for (const auto& s : subs_d4) CHECK(d4.order() % s.order() == 0);

  CHECK(subgroups(trivial_center_subgroup(parse_semisimple_type("G2"))).size() == 1);
  CHECK(subgroups(center_subgroup(make_simple_type(Series::A, 1))).size() == 2);
  auto subs_a3 = subgroups(center_subgroup(make_simple_type(Series::A, 3)));
  CHECK(subs_a3.size() == 3);  // Z/4: trivial, Z/2, full

  // deterministic canonical output
  auto again = subgroups(d4);
  CHECK(again == subs_d4);
}

TEST_CASE("character lattice congruences") {
  // PGL3: m1 + 2 m2 = 0 (mod 3)
  CharacterLattice pgl3 = character_lattice(center_subgroup(make_simple_type(Series::A, 2)));
  REQUIRE(pgl3.congruences.size() == 1);
  CHECK(pgl3.congruences[0].coeffs == Weight{1, 2});
  CHECK(pgl3.congruences[0].modulus == 3);
  CHECK(pgl3.contains({1, 1}));
  CHECK_FALSE(pgl3.contains({1, 0}));
  CHECK(pgl3.contains({-1, 2}));  // lattice, not monoid: negatives allowed

  CHECK(character_lattice(trivial_center_subgroup(parse_semisimple_type("B3")))
            .congruences.empty());

  // SO_{2r}: m_{r-1} + m_r = 0 (mod 2), from the generator (1,...,1,-1,-1)
  for (int r = 4; r <= 6; ++r) {
    CenterSubgroup full = center_subgroup(make_simple_type(Series::D, r));
    std::vector<Rational> gen(r, Rational(0));
    gen[r - 2] = half();
    gen[r - 1] = half();
    CenterSubgroup so = make_center_subgroup(parse_semisimple_type("D" + std::to_string(r)),
                                             {pt(gen)});
    CharacterLattice lat = character_lattice(so);
    REQUIRE(lat.congruences.size() == 1);
    Weight coeffs(r, 0);
    coeffs[r - 2] = coeffs[r - 1] = 1;
    CHECK(lat.congruences[0].coeffs == coeffs);
    CHECK(lat.congruences[0].modulus == 2);
  }
}

TEST_CASE("adjoint character lattice is the root lattice") {
  for (const char* name : {"A2", "B2", "A3", "G2"}) {
    SemisimpleType type = parse_semisimple_type(name);
    RootDatum rd = make_root_datum(type);
    CharacterLattice lat = character_lattice(center_subgroup(type));
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<Int> dist(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
      Weight w(rd.rank);
      for (auto& v : w) v = dist(rng);
      // root lattice membership: (C^T)^{-1} w integral
      bool in_root_lattice = true;
      for (int i = 0; i < rd.rank && in_root_lattice; ++i) {
        Rational k(0);
        for (int j = 0; j < rd.rank; ++j)
          k += rd.inv_cartan_transpose[i][j] * Rational(w[j]);
        if (!k.is_integer()) in_root_lattice = false;
      }
      CHECK(lat.contains(w) == in_root_lattice);
    }
  }
}

TEST_CASE("nested subgroups reverse the lattice inclusion") {
  for (const char* name : {"D4", "A3", "A5"}) {
    CenterSubgroup full = center_subgroup(parse_semisimple_type(name));
    auto subs = subgroups(full);
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<Int> dist(-6, 6);
    for (const auto& z1 : subs)
      for (const auto& z2 : subs) {
        bool nested = true;  // z1 subset of z2?
        for (const auto& el : z1.elements)
          if (!z2.contains(el)) nested = false;
        if (!nested) continue;
        CharacterLattice l1 = character_lattice(z1);
        CharacterLattice l2 = character_lattice(z2);
        for (int trial = 0; trial < 40; ++trial) {
          Weight w(full.ambient.rank());
          for (auto& v : w) v = dist(rng);
          if (l2.contains(w)) CHECK(l1.contains(w));
        }
      }
  }
}

TEST_CASE("make_center_subgroup validates the center system") {
  CHECK_THROWS_AS(make_center_subgroup(parse_semisimple_type("A2"),
                                       {pt({Rational(1, 5), Rational(0)})}),
                  DomainError);
  CHECK_THROWS_AS(make_center_subgroup(parse_semisimple_type("A2"),
                                       {pt({Rational(1, 3)})}),
                  DomainError);
  // the full center closure from a single generator
  CenterSubgroup c = make_center_subgroup(parse_semisimple_type("A2"),
                                          {pt({Rational(1, 3), Rational(2, 3)})});
  CHECK(c.order() == 3);
}

TEST_CASE("cross-section existence predicate") {
  CenterSubgroup trivial = trivial_center_subgroup(parse_semisimple_type("A1"));
  CenterSubgroup pgl2 = center_subgroup(parse_semisimple_type("A1"));
  CenterSubgroup pgl3 = center_subgroup(parse_semisimple_type("A2"));
  CHECK(cross_section_exists(trivial, 0));
  CHECK(cross_section_exists(trivial, 2));
  CHECK(cross_section_exists(trivial, 7));
  CHECK_FALSE(cross_section_exists(pgl2, 0));
  CHECK(cross_section_exists(pgl2, 2));
  CHECK_FALSE(cross_section_exists(pgl2, 3));
  CHECK(cross_section_exists(pgl3, 3));
  CHECK_FALSE(cross_section_exists(pgl3, 2));
  CHECK_THROWS_AS(cross_section_exists(pgl2, 4), DomainError);
  CHECK_THROWS_AS(cross_section_exists(pgl2, -1), DomainError);
}
