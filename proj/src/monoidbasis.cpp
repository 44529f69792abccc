#include "repring/monoidbasis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "repring/errors.hpp"

namespace repring {

CongruenceMonoid dominant_monoid(const RootDatum& rd, const CenterSubgroup& z) {
  if (rd.rank != z.ambient.rank())
    throw DomainError("rank mismatch between root datum and center subgroup");
  return CongruenceMonoid{rd.rank, character_lattice(z)};
}

bool membership(const CongruenceMonoid& d, const Weight& m) {
  if (static_cast<int>(m.size()) != d.rank) return false;
  if (!is_dominant(m)) return false;
  return d.lattice.contains(m);
}

std::string membership_violation(const CongruenceMonoid& d, const Weight& m) {
  if (static_cast<int>(m.size()) != d.rank)
    return "weight has " + std::to_string(m.size()) + " entries; rank is " +
           std::to_string(d.rank);
  if (!is_dominant(m)) return "weight " + weight_str(m) + " is not dominant";
  for (const auto& cong : d.lattice.congruences) {
    Int acc = 0;
    for (int i = 0; i < d.rank; ++i) acc += cong.coeffs[i] * m[i];
    Int res = ((acc % cong.modulus) + cong.modulus) % cong.modulus;
    if (res != 0) {
      std::string s = "weight " + weight_str(m) + " violates the congruence ";
      for (int i = 0; i < d.rank; ++i) {
        if (i) s += "+";
        s += std::to_string(cong.coeffs[i]) + "*m" + std::to_string(i + 1);
      }
      s += " = 0 (mod " + std::to_string(cong.modulus) + "); residue " + std::to_string(res);
      return s;
    }
  }
  return "";
}

Int monoid_exponent(const CongruenceMonoid& d) {
  Int e = 1;
  for (const auto& cong : d.lattice.congruences) e = std::lcm(e, cong.modulus);
  return e;
}

namespace {

bool componentwise_leq(const Weight& a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Walks [0,limit]^r degree by degree (lex ascending within a degree) and
// hands every congruence-satisfying point to `visit`. Congruence partial
// sums are carried down the recursion so the leaf test is O(#congruences).
template <typename Visit>
void graded_scan(const CongruenceMonoid& d, Int limit, Visit visit) {
  const int r = d.rank;
  const auto& congs = d.lattice.congruences;
  const std::size_t nc = congs.size();
  Weight cur(r, 0);
  std::vector<Int> partial(nc, 0);

  auto shift = [&](int pos, Int times) {
    for (std::size_t c = 0; c < nc; ++c) {
      Int m = congs[c].modulus;
      partial[c] = ((partial[c] + times * congs[c].coeffs[pos]) % m + m) % m;
    }
  };

  auto rec = [&](auto&& self, int pos, Int remaining) -> void {
    if (pos == r - 1) {
      if (remaining > limit) return;
      for (std::size_t c = 0; c < nc; ++c)
        if ((partial[c] + remaining * congs[c].coeffs[pos]) % congs[c].modulus != 0) return;
      cur[pos] = remaining;
      visit(cur);
      return;
    }
    Int max_rest = limit * (r - 1 - pos);
    Int lo = remaining > max_rest ? remaining - max_rest : 0;
    Int hi = std::min(limit, remaining);
    if (lo > hi) return;
    shift(pos, lo);
    for (Int v = lo;;) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
      if (++v > hi) break;
      shift(pos, 1);
    }
    shift(pos, -hi);
  };

  for (Int deg = 1; deg <= limit * r; ++deg) rec(rec, 0, deg);
}

void assert_box_bound(const CongruenceMonoid& d, Int e) {
  for (int i = 0; i < d.rank; ++i) {
    Weight unit(d.rank, 0);
    unit[i] = e;
    if (!d.lattice.contains(unit))
      throw InternalError("box bound " + std::to_string(e) +
                          " is not a valid exponent for coordinate " + std::to_string(i));
  }
}

}  // namespace

HilbertBasis hilbert_basis(const CongruenceMonoid& d) {
  if (d.rank == 0) return {};
  const Int e = monoid_exponent(d);
  assert_box_bound(d, e);
  HilbertBasis basis;
  graded_scan(d, e, [&](const Weight& m) {
    for (const auto& h : basis.elements)
      if (componentwise_leq(h, m)) return;  // decomposes as h + (m - h)
    basis.elements.push_back(m);
  });
  return basis;
}

HilbertBasis hilbert_basis_oracle(const CongruenceMonoid& d, Int bound) {
  if (d.rank == 0) return {};
  const Int e = monoid_exponent(d);
  if (bound < e)
    throw DomainError("oracle bound " + std::to_string(bound) +
                      " below the monoid exponent " + std::to_string(e));
  assert_box_bound(d, e);

  std::vector<Weight> points;  // graded order, zero excluded
  std::unordered_set<Weight, WeightHash> member;
  graded_scan(d, bound, [&](const Weight& m) {
    points.push_back(m);
    member.insert(m);
  });

  std::vector<Int> degree(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    degree[i] = std::accumulate(points[i].begin(), points[i].end(), Int(0));

  HilbertBasis basis;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Weight& m = points[i];
    bool decomposable = false;
    for (std::size_t j = 0; j < points.size() && 2 * degree[j] <= degree[i]; ++j) {
      const Weight& a = points[j];
      if (!componentwise_leq(a, m)) continue;
      Weight rest = weight_sub(m, a);
      if (std::all_of(rest.begin(), rest.end(), [](Int v) { return v == 0; })) continue;
      if (member.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) basis.elements.push_back(m);
  }
  return basis;
}

std::optional<std::vector<Int>> monoid_combination(const std::vector<Weight>& generators,
                                                   const Weight& target) {
  std::map<Weight, std::optional<std::vector<Int>>> memo;
  auto solve = [&](auto&& self, const Weight& t) -> std::optional<std::vector<Int>> {
    if (std::all_of(t.begin(), t.end(), [](Int v) { return v == 0; }))
      return std::vector<Int>(generators.size(), 0);
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    std::optional<std::vector<Int>> result;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (!componentwise_leq(generators[g], t)) continue;
      auto rest = self(self, weight_sub(t, generators[g]));
      if (rest) {
        (*rest)[g] += 1;
        result = std::move(rest);
        break;
      }
    }
    memo.emplace(t, result);
    return result;
  };
  if (!is_dominant(target)) return std::nullopt;
  return solve(solve, target);
}

bool theorem_classification_smooth(const SemisimpleType& type, const CenterSubgroup& z) {
  // Split z into its per-factor pieces; the quotient is a direct product of
  // simple groups exactly when the order factors blockwise.
  int rank = type.rank();
  Int split_order = 1;
  int off = 0;
  std::vector<std::vector<TorusPoint>> factor_pieces;
  for (const auto& f : type.factors) {
    std::vector<TorusPoint> piece;
    for (const auto& el : z.elements) {
      bool supported_here = true;
      for (int i = 0; i < rank && supported_here; ++i)
        if (!el.exps[i].is_zero() && (i < off || i >= off + f.rank)) supported_here = false;
      if (supported_here) piece.push_back(el);
    }
    split_order *= static_cast<Int>(piece.size());
    factor_pieces.push_back(std::move(piece));
    off += f.rank;
  }
  if (split_order != z.order()) return false;  // not a direct product of simple groups

  for (std::size_t k = 0; k < type.factors.size(); ++k) {
    const SimpleType& f = type.factors[k];
    Int piece_order = static_cast<Int>(factor_pieces[k].size());
    if (piece_order == 1) continue;  // simply connected factor
    Int full = fundamental_group(SemisimpleType{{f}}).order();
    bool odd_so = piece_order == full &&
                  (f.series == Series::B || (f.series == Series::A && f.rank == 1) ||
                   (f.series == Series::C && f.rank == 2));
    if (!odd_so) return false;
  }
  return true;
}

QuotientReport quotient_report(const RootDatum& rd, const CenterSubgroup& z) {
  QuotientReport report;
  report.group = rd.type;
  report.subgroup_order = z.order();
  CongruenceMonoid d = dominant_monoid(rd, z);
  report.basis = hilbert_basis(d);
  report.tangent_dim = static_cast<Int>(report.basis.elements.size());
  report.smooth = report.tangent_dim == rd.rank;
  report.theorem_smooth = theorem_classification_smooth(rd.type, z);
  report.invariant_monomials = report.basis.elements;
  std::string verdict = report.smooth ? "smooth" : "singular";
  std::string cls = report.theorem_smooth
                        ? "product of simply connected or odd special orthogonal factors"
                        : "not a product of simply connected or odd special orthogonal factors";
  report.classification_note =
      "tangent dimension " + std::to_string(report.tangent_dim) + " vs rank " +
      std::to_string(rd.rank) + ": " + verdict + "; classification: " + cls + "; verdicts " +
      (report.smooth == report.theorem_smooth ? "agree" : "DISAGREE");
  return report;
}

bool smoothness_matches_theorem(const SimpleType& t, const CenterSubgroup& z) {
  RootDatum rd = make_root_datum(SemisimpleType{{t}});
  CongruenceMonoid d = dominant_monoid(rd, z);
  bool monoid_smooth =
      static_cast<Int>(hilbert_basis(d).elements.size()) == rd.rank;
  return monoid_smooth == theorem_classification_smooth(rd.type, z);
}

}  // namespace repring
