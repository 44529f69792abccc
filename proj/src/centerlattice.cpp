#include "repring/centerlattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "repring/errors.hpp"

namespace repring {

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (Int d : invariant_factors) o *= d;
  return o;
}

FiniteAbelianGroup fundamental_group(const SemisimpleType& type) {
  auto snf = smith_normal_form(cartan_matrix(type));
  FiniteAbelianGroup g;
  for (Int d : snf.diagonal) {
    if (d == 0) throw InternalError("Cartan matrix singular");
    if (d > 1) g.invariant_factors.push_back(d);
  }
  return g;
}

bool torus_point_less(const TorusPoint& a, const TorusPoint& b) {
  return std::lexicographical_compare(a.exps.begin(), a.exps.end(),
                                      b.exps.begin(), b.exps.end());
}

TorusPoint torus_identity(int rank) {
  return TorusPoint{std::vector<Rational>(static_cast<std::size_t>(rank), Rational(0))};
}

TorusPoint torus_add(const TorusPoint& a, const TorusPoint& b) {
  if (a.exps.size() != b.exps.size()) throw DomainError("torus point length mismatch");
  TorusPoint out = a;
  for (std::size_t i = 0; i < out.exps.size(); ++i)
    out.exps[i] = (out.exps[i] + b.exps[i]).mod1();
  return out;
}

TorusPoint torus_neg(const TorusPoint& a) {
  TorusPoint out = a;
  for (auto& v : out.exps) v = (-v).mod1();
  return out;
}

Int torus_order(const TorusPoint& a) {
  Int o = 1;
  for (const auto& v : a.exps) o = std::lcm(o, v.den());
  return o;
}

bool torus_is_identity(const TorusPoint& a) {
  return std::all_of(a.exps.begin(), a.exps.end(),
                     [](const Rational& v) { return v.is_zero(); });
}

std::string torus_str(const TorusPoint& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (i) s += ',';
    s += a.exps[i].str();
  }
  return s + ")";
}

Rational pairing(const TorusPoint& c, const Weight& lambda) {
  if (c.exps.size() != lambda.size()) throw DomainError("pairing length mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] != 0) acc += Rational(lambda[i]) * c.exps[i];
  return acc.mod1();
}

Int CenterSubgroup::exponent() const {
  Int e = 1;
  for (const auto& p : elements) e = std::lcm(e, torus_order(p));
  return e;
}

bool CenterSubgroup::contains(const TorusPoint& p) const {
  return std::binary_search(elements.begin(), elements.end(), p, torus_point_less);
}

namespace {

std::vector<TorusPoint> close_under_addition(int rank,
                                             const std::vector<TorusPoint>& gens) {
  std::set<std::vector<Rational>> seen;
  std::deque<TorusPoint> queue;
  TorusPoint id = torus_identity(rank);
  seen.insert(id.exps);
  queue.push_back(id);
  std::vector<TorusPoint> out;
  while (!queue.empty()) {
    TorusPoint p = queue.front();
    queue.pop_front();
    out.push_back(p);
    for (const auto& g : gens) {
      TorusPoint q = torus_add(p, g);
      if (seen.insert(q.exps).second) queue.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), torus_point_less);
  return out;
}

// Canonical generating list: repeatedly adjoin the element of maximal order
// outside the current span (lex-smallest on ties). A cyclic subgroup of
// maximal order is a direct summand, so this stays minimal for the groups
// arising here.
std::vector<TorusPoint> canonical_generators(int rank,
                                             const std::vector<TorusPoint>& elements) {
  std::vector<TorusPoint> gens;
  std::vector<TorusPoint> span = close_under_addition(rank, {});
  while (span.size() < elements.size()) {
    const TorusPoint* best = nullptr;
    Int best_order = 0;
    for (const auto& el : elements) {
      if (std::binary_search(span.begin(), span.end(), el, torus_point_less)) continue;
      Int order = torus_order(el);
      if (!best || order > best_order) {
        best = &el;
        best_order = order;
      }
    }
    if (!best) throw InternalError("span cannot reach the full element set");
    gens.push_back(*best);
    span = close_under_addition(rank, gens);
  }
  return gens;
}

void validate_in_center(const SemisimpleType& ambient, const TorusPoint& p) {
  IntMatrix c = cartan_matrix(ambient);
  int r = static_cast<int>(c.size());
  if (static_cast<int>(p.exps.size()) != r)
    throw DomainError("torus point length does not match rank");
  for (int i = 0; i < r; ++i) {
    Rational acc(0);
    for (int j = 0; j < r; ++j)
      if (c[i][j] != 0) acc += Rational(c[i][j]) * p.exps[j];
    if (!acc.mod1().is_zero())
      throw DomainError("point " + torus_str(p) + " does not solve the center system of " +
                        ambient.name());
  }
}

}  // namespace

CenterSubgroup make_center_subgroup(const SemisimpleType& ambient,
                                    const std::vector<TorusPoint>& gens) {
  int r = ambient.rank();
  std::vector<TorusPoint> normalized;
  for (const auto& g : gens) {
    TorusPoint p = g;
    for (auto& v : p.exps) v = v.mod1();
    validate_in_center(ambient, p);
    normalized.push_back(std::move(p));
  }
  CenterSubgroup out;
  out.ambient = ambient;
  out.elements = close_under_addition(r, normalized);
  out.generators = canonical_generators(r, out.elements);
  return out;
}

CenterSubgroup trivial_center_subgroup(const SemisimpleType& ambient) {
  return make_center_subgroup(ambient, {});
}

std::vector<TorusPoint> solve_center_system(const IntMatrix& cartan) {
  auto snf = smith_normal_form(cartan);
  int r = static_cast<int>(cartan.size());
  // C q in Z^r  <=>  diag * (right^{-1} q) in Z^r, so the solution group is
  // generated by the columns of `right` divided by the diagonal entries.
  std::vector<TorusPoint> gens;
  for (int i = 0; i < r; ++i) {
    Int d = snf.diagonal[i];
    if (d == 0) throw DomainError("center system of a singular matrix");
    if (d <= 1) continue;
    TorusPoint g = torus_identity(r);
    for (int j = 0; j < r; ++j) g.exps[j] = Rational(snf.right[j][i], d).mod1();
    gens.push_back(std::move(g));
  }
  return close_under_addition(r, gens);
}

CenterSubgroup center_subgroup(const SimpleType& t) {
  std::vector<TorusPoint> elements = solve_center_system(cartan_matrix(SemisimpleType{{t}}));
  CenterSubgroup out = make_center_subgroup(SemisimpleType{{t}}, elements);
  if (out.order() != fundamental_group(SemisimpleType{{t}}).order())
    throw InternalError("center order does not match the fundamental group for " + t.name());
  return out;
}

CenterSubgroup center_subgroup(const SemisimpleType& t) {
  std::vector<TorusPoint> gens;
  int rank = t.rank();
  int off = 0;
  for (const auto& f : t.factors) {
    CenterSubgroup fc = center_subgroup(f);
    for (const auto& g : fc.generators) {
      TorusPoint e = torus_identity(rank);
      for (int i = 0; i < f.rank; ++i) e.exps[off + i] = g.exps[i];
      gens.push_back(std::move(e));
    }
    off += f.rank;
  }
  return make_center_subgroup(t, gens);
}

CenterSubgroup center_closed_form(const SimpleType& t) {
  int r = t.rank;
  std::vector<TorusPoint> gens;
  auto push = [&](const std::vector<Rational>& exps) {
    gens.push_back(TorusPoint{exps});
  };
  switch (t.series) {
    case Series::A: {
      // (s, s^2, ..., s^r), s of order r+1
      std::vector<Rational> g(r);
      for (int j = 0; j < r; ++j) g[j] = Rational(j + 1, r + 1).mod1();
      push(g);
      break;
    }
    case Series::B: {
      // generated by (1, ..., 1, -1)
      std::vector<Rational> g(r, Rational(0));
      g[r - 1] = Rational(1, 2);
      push(g);
      break;
    }
    case Series::C: {
      // (s, 1, s, 1, ...), s^2 = 1
      std::vector<Rational> g(r, Rational(0));
      for (int j = 0; j < r; j += 2) g[j] = Rational(1, 2);
      push(g);
      break;
    }
    case Series::D: {
      if (r % 2 == 1) {
        // (s^2, 1, ..., s^2, s, s^-1), s of order 4
        std::vector<Rational> g(r, Rational(0));
        for (int j = 0; j < r - 2; j += 2) g[j] = Rational(1, 2);
        g[r - 2] = Rational(1, 4);
        g[r - 1] = Rational(3, 4);
        push(g);
      } else {
        // (s, 1, ..., s, 1, st, t), s^2 = t^2 = 1
        std::vector<Rational> gs(r, Rational(0));
        for (int j = 0; j < r - 2; j += 2) gs[j] = Rational(1, 2);
        gs[r - 2] = Rational(1, 2);
        push(gs);
        std::vector<Rational> gt(r, Rational(0));
        gt[r - 2] = Rational(1, 2);
        gt[r - 1] = Rational(1, 2);
        push(gt);
      }
      break;
    }
    case Series::E: {
      if (r == 6)
        push({Rational(1, 3), Rational(0), Rational(2, 3), Rational(0), Rational(1, 3),
              Rational(2, 3)});
      else if (r == 7)
        push({Rational(0), Rational(1, 2), Rational(0), Rational(0), Rational(1, 2),
              Rational(0), Rational(1, 2)});
      // E8 has trivial center
      break;
    }
    case Series::F:
    case Series::G:
      break;  // trivial
  }
  return make_center_subgroup(SemisimpleType{{t}}, gens);
}

std::vector<CenterSubgroup> subgroups(const CenterSubgroup& c, Int max_order) {
  if (c.order() > max_order)
    throw DomainError("subgroup enumeration guard exceeded (order " +
                      std::to_string(c.order()) + ")");
  int rank = c.ambient.rank();
  std::set<std::vector<std::vector<Rational>>> seen;
  std::deque<std::vector<TorusPoint>> queue;
  auto key_of = [](const std::vector<TorusPoint>& els) {
    std::vector<std::vector<Rational>> k;
    k.reserve(els.size());
    for (const auto& e : els) k.push_back(e.exps);
    return k;
  };
  std::vector<TorusPoint> triv = close_under_addition(rank, {});
  seen.insert(key_of(triv));
  queue.push_back(triv);
  std::vector<std::vector<TorusPoint>> found{triv};
  while (!queue.empty()) {
    std::vector<TorusPoint> s = queue.front();
    queue.pop_front();
    for (const auto& g : c.elements) {
      if (std::binary_search(s.begin(), s.end(), g, torus_point_less)) continue;
      std::vector<TorusPoint> gens = s;
      gens.push_back(g);
      std::vector<TorusPoint> bigger = close_under_addition(rank, gens);
      if (seen.insert(key_of(bigger)).second) {
        queue.push_back(bigger);
        found.push_back(bigger);
      }
    }
  }
  std::vector<CenterSubgroup> out;
  out.reserve(found.size());
  for (auto& els : found) {
    CenterSubgroup s;
    s.ambient = c.ambient;
    s.elements = std::move(els);
    s.generators = canonical_generators(rank, s.elements);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [&](const CenterSubgroup& a, const CenterSubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return key_of(a.elements) < key_of(b.elements);
  });
  return out;
}

bool CharacterLattice::contains(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank) throw DomainError("weight length mismatch");
  for (const auto& cong : congruences) {
    Int acc = 0;
    for (int i = 0; i < rank; ++i)
      acc = (acc + (w[i] % cong.modulus) * cong.coeffs[i]) % cong.modulus;
    if (acc % cong.modulus != 0) return false;
  }
  return true;
}

CharacterLattice character_lattice(const CenterSubgroup& z) {
  CharacterLattice out;
  out.rank = z.ambient.rank();
  for (const auto& g : z.generators) {
    Congruence cong;
    cong.modulus = torus_order(g);
    cong.coeffs.resize(out.rank);
    for (int i = 0; i < out.rank; ++i) {
      Rational scaled = g.exps[i] * Rational(cong.modulus);
      if (!scaled.is_integer())
        throw InternalError("generator order does not clear denominators");
      cong.coeffs[i] = ((scaled.num() % cong.modulus) + cong.modulus) % cong.modulus;
    }
    out.congruences.push_back(std::move(cong));
  }
  return out;
}

namespace {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

bool cross_section_exists(const CenterSubgroup& z, Int characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw DomainError("characteristic must be 0 or a prime");
  if (z.trivial()) return true;
  return characteristic > 0 && z.order() % characteristic == 0;
}

}  // namespace repring
