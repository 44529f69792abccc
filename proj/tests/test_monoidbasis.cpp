#include <doctest.h>

#include <algorithm>
#include <random>

#include "repring/errors.hpp"
#include "repring/groupspec.hpp"
#include "repring/monoidbasis.hpp"
#include "repring/paper_checks.hpp"

using namespace repring;

namespace {

CongruenceMonoid monoid_of(const std::string& type, const CenterSubgroup& z) {
  return dominant_monoid(make_root_datum(type), z);
}

CongruenceMonoid adjoint_monoid(const std::string& type) {
  return monoid_of(type, center_subgroup(parse_semisimple_type(type)));
}

HilbertBasis basis_of(std::vector<Weight> elements) {
  std::sort(elements.begin(), elements.end(), weight_graded_lex_less);
  return HilbertBasis{std::move(elements)};
}

}  // namespace

TEST_CASE("dominant monoid membership") {
  CongruenceMonoid pgl3 = adjoint_monoid("A2");
  CHECK(membership(pgl3, {1, 1}));
  CHECK_FALSE(membership(pgl3, {1, 0}));
  CHECK(membership(pgl3, {0, 0}));
  CHECK(membership(pgl3, {3, 0}));
  CHECK_FALSE(membership(pgl3, {-3, 0}));  // monoid, unlike the lattice
  CHECK(membership_violation(pgl3, {1, 0}).find("mod 3") != std::string::npos);
  CHECK(membership_violation(pgl3, {1, 1}).empty());

  CongruenceMonoid sl3 = monoid_of("A2", trivial_center_subgroup(parse_semisimple_type("A2")));
  CHECK(membership(sl3, {5, 0}));
  CHECK(membership(sl3, {0, 1}));

  // SO5 = B2 adjoint: m2 even
  CongruenceMonoid so5 = adjoint_monoid("B2");
  CHECK(membership(so5, {3, 0}));
  CHECK(membership(so5, {1, 2}));
  CHECK_FALSE(membership(so5, {0, 1}));

  CHECK_THROWS_AS(dominant_monoid(make_root_datum("A2"),
                                  center_subgroup(parse_semisimple_type("A3"))),
                  DomainError);
}

TEST_CASE("monoid exponent") {
  CHECK(monoid_exponent(adjoint_monoid("A2")) == 3);
  CHECK(monoid_exponent(adjoint_monoid("D5")) == 4);
  CHECK(monoid_exponent(monoid_of("A5", trivial_center_subgroup(
                                            parse_semisimple_type("A5")))) == 1);
}

TEST_CASE("hilbert basis worked examples") {
  CHECK(hilbert_basis(adjoint_monoid("A2")) == basis_of({{1, 1}, {3, 0}, {0, 3}}));
  // free monoid: the unit vectors
  CHECK(hilbert_basis(monoid_of("A3", trivial_center_subgroup(parse_semisimple_type("A3")))) ==
        basis_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  // SO5
  CHECK(hilbert_basis(adjoint_monoid("B2")) == basis_of({{1, 0}, {0, 2}}));
  // PGL2
  CHECK(hilbert_basis(adjoint_monoid("A1")) == basis_of({{2}}));
  // PSp6: evens w2, odd pairs from {1,3}
  CHECK(hilbert_basis(adjoint_monoid("C3")) ==
        basis_of({{0, 1, 0}, {2, 0, 0}, {0, 0, 2}, {1, 0, 1}}));
}

TEST_CASE("hilbert basis oracle agreement on the worked examples") {
  CHECK(hilbert_basis_oracle(adjoint_monoid("A2"), 6) ==
        basis_of({{1, 1}, {3, 0}, {0, 3}}));
  CHECK(hilbert_basis_oracle(monoid_of("A2", trivial_center_subgroup(
                                                 parse_semisimple_type("A2"))),
                             3) == basis_of({{1, 0}, {0, 1}}));
  // half-spin D4: evens {2,4}, odd pairs from {1,3}
  GroupSpec halfspin = parse_group_spec("D4 halfspin");
  CongruenceMonoid hs = monoid_of("D4", center_of(halfspin));
  HilbertBasis expected = basis_of(
      {{0, 1, 0, 0}, {0, 0, 0, 1}, {2, 0, 0, 0}, {0, 0, 2, 0}, {1, 0, 1, 0}});
  CHECK(hilbert_basis(hs) == expected);
  CHECK(hilbert_basis_oracle(hs, 2) == expected);
  CHECK(hilbert_basis_oracle(hs, 4) == expected);

  CHECK_THROWS_AS(hilbert_basis_oracle(adjoint_monoid("A2"), 2), DomainError);
}

TEST_CASE("hilbert basis equals oracle on random subgroups") {
  std::mt19937_64 rng(41);
  std::vector<SimpleType> types = simple_types_up_to_rank(4);
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleType& t = types[rng() % types.size()];
    auto subs = subgroups(center_subgroup(t));
    const CenterSubgroup& z = subs[rng() % subs.size()];
    CongruenceMonoid d = dominant_monoid(make_root_datum(SemisimpleType{{t}}), z);
    CHECK_MESSAGE(hilbert_basis(d) == hilbert_basis_oracle(d, monoid_exponent(d)),
                  t.name() << " |Z|=" << z.order());
  }
}

TEST_CASE("minimality: no basis element is a combination of the others") {
  for (const char* name : {"A2", "A3", "B3", "C3", "D4"}) {
    CongruenceMonoid d = adjoint_monoid(name);
    auto basis = hilbert_basis(d).elements;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Weight> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      CHECK_FALSE(monoid_combination(others, basis[i]).has_value());
    }
  }
}

TEST_CASE("generation: every monoid element in the doubled box decomposes") {
  for (const char* name : {"A2", "B2", "C3"}) {
    RootDatum rd = make_root_datum(name);
    CongruenceMonoid d = adjoint_monoid(name);
    auto basis = hilbert_basis(d).elements;
    Int bound = 2 * monoid_exponent(d);
    Weight m(rd.rank, 0);
    auto scan = [&](auto&& self, int pos) -> void {
      if (pos == rd.rank) {
        if (!membership(d, m)) return;
        auto combo = monoid_combination(basis, m);
        REQUIRE(combo.has_value());
        Weight sum(rd.rank, 0);
        for (std::size_t g = 0; g < basis.size(); ++g)
          for (int i = 0; i < rd.rank; ++i) sum[i] += (*combo)[g] * basis[g][i];
        CHECK(sum == m);
        return;
      }
      for (Int v = 0; v <= bound; ++v) {
        m[pos] = v;
        self(self, pos + 1);
      }
      m[pos] = 0;
    };
    scan(scan, 0);
  }
}

TEST_CASE("products: blockwise subgroups give the union of factor bases") {
  SemisimpleType prod = parse_semisimple_type("A1xA1");
  RootDatum rd = make_root_datum(prod);
  CenterSubgroup full = center_subgroup(prod);  // Z/2 x Z/2, blockwise
  CHECK(hilbert_basis(dominant_monoid(rd, full)) == basis_of({{2, 0}, {0, 2}}));

  // diagonal subgroup does not split; H is strictly larger
  CenterSubgroup diag = make_center_subgroup(
      prod, {TorusPoint{{Rational(1, 2), Rational(1, 2)}}});
  CongruenceMonoid d = dominant_monoid(rd, diag);
  HilbertBasis expected = basis_of({{2, 0}, {0, 2}, {1, 1}});
  CHECK(hilbert_basis(d) == expected);
  CHECK(hilbert_basis_oracle(d, 2) == expected);

  // larger blockwise product: union of embedded factor bases
  SemisimpleType big = parse_semisimple_type("A2xB2");
  RootDatum rd_big = make_root_datum(big);
  CenterSubgroup full_big = center_subgroup(big);
  CHECK(hilbert_basis(dominant_monoid(rd_big, full_big)) ==
        basis_of({{1, 1, 0, 0}, {3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}));
}

TEST_CASE("quotient reports") {
  {
    QuotientReport r = quotient_report(make_root_datum("B2"),
                                       center_subgroup(parse_semisimple_type("B2")));
    CHECK(r.smooth);
    CHECK(r.theorem_smooth);
    CHECK(r.tangent_dim == 2);
    CHECK(r.invariant_monomials == r.basis.elements);
    CHECK(r.classification_note.find("agree") != std::string::npos);
  }
  {
    GroupSpec so8 = parse_group_spec("D4 so");
    QuotientReport r = quotient_report(make_root_datum("D4"), center_of(so8));
    CHECK_FALSE(r.smooth);
    CHECK_FALSE(r.theorem_smooth);
    CHECK(r.tangent_dim == 5);
  }
  {
    QuotientReport r = quotient_report(make_root_datum("A2"),
                                       center_subgroup(parse_semisimple_type("A2")));
    CHECK_FALSE(r.smooth);
    CHECK(r.tangent_dim == 3);
  }
}

TEST_CASE("smoothness matches the classification for all small types") {
  for (const SimpleType& t : simple_types_up_to_rank(5))
    for (const CenterSubgroup& z : subgroups(center_subgroup(t)))
      CHECK_MESSAGE(smoothness_matches_theorem(t, z),
                    t.name() << " |Z|=" << z.order());
}

TEST_CASE("spec examples for the smoothness cross-check") {
  CHECK(smoothness_matches_theorem(make_simple_type(Series::B, 3),
                                   center_subgroup(make_simple_type(Series::B, 3))));
  CHECK(smoothness_matches_theorem(make_simple_type(Series::A, 2),
                                   center_subgroup(make_simple_type(Series::A, 2))));
  CHECK(smoothness_matches_theorem(
      make_simple_type(Series::A, 1),
      trivial_center_subgroup(parse_semisimple_type("A1"))));
  // PSp4 = SO5 is smooth although the series letter is C
  RootDatum c2 = make_root_datum("C2");
  QuotientReport r = quotient_report(c2, center_subgroup(parse_semisimple_type("C2")));
  CHECK(r.smooth);
  CHECK(r.theorem_smooth);
}
