#include "repring/charring.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "repring/errors.hpp"

namespace repring {

namespace {

void drop_zeros(std::map<Weight, Int, GradedLexLess>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
}

}  // namespace

SymElement sym_add(const SymElement& a, const SymElement& b) {
  SymElement out = a;
  for (const auto& [w, c] : b.coeffs) out.coeffs[w] += c;
  drop_zeros(out.coeffs);
  return out;
}

SymElement sym_sub(const SymElement& a, const SymElement& b) {
  SymElement out = a;
  for (const auto& [w, c] : b.coeffs) out.coeffs[w] -= c;
  drop_zeros(out.coeffs);
  return out;
}

SymElement sym_scale(Int c, const SymElement& a) {
  SymElement out;
  if (c == 0) return out;
  for (const auto& [w, v] : a.coeffs) out.coeffs[w] = c * v;
  return out;
}

std::string sym_str(const SymElement& x) {
  if (x.coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = x.coeffs.rbegin(); it != x.coeffs.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + " ";
    s += "S" + weight_str(it->first);
  }
  return s;
}

std::string rep_str(const RepElement& x) {
  if (x.mults.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = x.mults.rbegin(); it != x.mults.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + " ";
    s += "E" + weight_str(it->first);
  }
  return s;
}

SymElement orbit_sum(const RootDatum& rd, const Weight& mu) {
  if (static_cast<int>(mu.size()) != rd.rank)
    throw DomainError("weight length does not match rank");
  if (!is_dominant(mu)) throw DomainError("orbit_sum requires a dominant weight");
  SymElement out;
  out.coeffs[mu] = 1;
  return out;
}

std::map<Weight, Int, GradedLexLess> weight_multiplicities(const RootDatum& rd,
                                                           const Weight& lambda,
                                                           const CharLimits& limits) {
  if (rd.rank > limits.max_rank)
    throw DomainError("character rank guard exceeded (rank " + std::to_string(rd.rank) + ")");
  if (static_cast<int>(lambda.size()) != rd.rank)
    throw DomainError("weight length does not match rank");
  if (!is_dominant(lambda)) throw DomainError("character of a non-dominant weight");

  const int r = rd.rank;
  // Dominant mu <= lambda live at lambda - C^T k with k in a finite box.
  Weight kmax(r, 0);
  for (int i = 0; i < r; ++i) {
    Rational b(0);
    for (int j = 0; j < r; ++j)
      b += rd.inv_cartan_transpose[i][j] * Rational(lambda[j]);
    kmax[i] = std::max<Int>(0, b.floor());
  }

  struct Candidate {
    Int depth;
    Weight k;
    Weight mu;
  };
  std::vector<Candidate> candidates;
  Weight k(r, 0);
  auto enumerate = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      Weight mu = lambda;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) mu[j] -= k[i] * rd.cartan[i][j];
      if (is_dominant(mu)) {
        Int depth = std::accumulate(k.begin(), k.end(), Int(0));
        candidates.push_back({depth, k, std::move(mu)});
        if (candidates.size() > limits.max_expanded)
          throw DomainError("character expansion guard exceeded");
      }
      return;
    }
    for (Int v = 0; v <= kmax[pos]; ++v) {
      k[pos] = v;
      self(self, pos + 1);
    }
    k[pos] = 0;
  };
  enumerate(enumerate, 0);
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return weight_graded_lex_less(a.mu, b.mu);
  });

  // Integer linear forms (x, alpha) = sum_k x_k * d_k * (alpha in root coords)_k.
  const std::size_t nroots = rd.positive_roots.size();
  std::vector<Weight> root_form(nroots, Weight(r, 0));
  for (std::size_t t = 0; t < nroots; ++t)
    for (int i = 0; i < r; ++i)
      root_form[t][i] = rd.symmetrizer[i] * rd.positive_root_coords[t][i];

  std::map<Weight, Int, GradedLexLess> mult;
  for (const auto& cand : candidates) {
    if (cand.depth == 0) {
      mult[cand.mu] = 1;
      continue;
    }
    const Weight& mu = cand.mu;
    Int numerator = 0;
    for (std::size_t t = 0; t < nroots; ++t) {
      const Weight& alpha = rd.positive_roots[t];
      const Weight& alpha_rc = rd.positive_root_coords[t];
      Weight nu = mu;
      Weight knu = cand.k;
      for (Int j = 1;; ++j) {
        bool inside = true;
        for (int i = 0; i < r; ++i) {
          knu[i] -= alpha_rc[i];
          if (knu[i] < 0) inside = false;
        }
        if (!inside) break;
        for (int i = 0; i < r; ++i) nu[i] += alpha[i];
        auto it = mult.find(dominant_representative(rd, nu));
        if (it == mult.end()) continue;
        Int form = 0;
        for (int i = 0; i < r; ++i) form += nu[i] * root_form[t][i];
        numerator += it->second * form;
      }
    }
    // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = sum k_i (lambda+mu+2rho)_i d_i
    Int denominator = 0;
    for (int i = 0; i < r; ++i)
      denominator += cand.k[i] * (lambda[i] + mu[i] + 2) * rd.symmetrizer[i];
    if (denominator <= 0) throw InternalError("Freudenthal denominator not positive");
    if ((2 * numerator) % denominator != 0)
      throw InternalError("Freudenthal recursion produced a non-integer multiplicity");
    Int m = (2 * numerator) / denominator;
    if (m < 1) throw InternalError("Freudenthal multiplicity below 1 at a dominant weight");
    mult[mu] = m;
  }
  return mult;
}

SymElement irreducible_character(const RootDatum& rd, const Weight& lambda,
                                 const CharLimits& limits, CharCache* cache) {
  if (cache) {
    auto it = cache->characters.find(lambda);
    if (it != cache->characters.end()) return it->second;
  }
  SymElement out;
  out.coeffs = weight_multiplicities(rd, lambda, limits);
  if (cache) cache->characters.emplace(lambda, out);
  return out;
}

namespace {

using Expansion = std::unordered_map<Weight, Int, WeightHash>;

Expansion expand_full_support(const RootDatum& rd, const SymElement& x,
                              const CharLimits& limits) {
  OrbitLimits ol{limits.max_rank, limits.max_expanded};
  Expansion out;
  for (const auto& [mu, c] : x.coeffs) {
    for (auto& w : weyl_orbit(rd, mu, ol)) out.emplace(std::move(w), c);
    if (out.size() > limits.max_expanded)
      throw DomainError("product expansion guard exceeded");
  }
  return out;
}

}  // namespace

SymElement multiply(const RootDatum& rd, const SymElement& x, const SymElement& y,
                    const CharLimits& limits) {
  SymElement out;
  if (x.is_zero() || y.is_zero()) return out;
  Expansion ex = expand_full_support(rd, x, limits);
  Expansion ey = expand_full_support(rd, y, limits);
  if (ex.size() > ey.size()) std::swap(ex, ey);  // commutative; convolve small into large
  Expansion acc;
  Weight s(rd.rank, 0);
  for (const auto& [w1, c1] : ex)
    for (const auto& [w2, c2] : ey) {
      bool dominant = true;
      for (int i = 0; i < rd.rank; ++i) {
        s[i] = w1[i] + w2[i];
        if (s[i] < 0) dominant = false;
      }
      if (dominant) acc[s] += c1 * c2;  // only dominant coefficients are collected
    }
  for (const auto& [w, c] : acc)
    if (c != 0) out.coeffs[w] = c;
  return out;
}

bool is_sharp(const RootDatum& rd, const SymElement& x, const Weight& top) {
  auto it = x.coeffs.find(top);
  if (it == x.coeffs.end() || it->second != 1) return false;
  for (const auto& [w, c] : x.coeffs) {
    if (w == top) continue;
    if (!dominance_leq(rd, w, top)) return false;
  }
  return true;
}

RepElement decompose_into_irreducibles(const RootDatum& rd, SymElement x,
                                       const CharLimits& limits, CharCache* cache) {
  CharCache local;
  if (!cache) cache = &local;
  RepElement out;
  std::size_t guard = 0;
  while (!x.is_zero()) {
    if (++guard > 1'000'000) throw InternalError("triangular decomposition did not terminate");
    const Weight* top = nullptr;
    Int n = 0;
    for (auto it = x.coeffs.rbegin(); it != x.coeffs.rend(); ++it) {
      bool below = false;
      for (const auto& [other, c] : x.coeffs) {
        if (other == it->first) continue;
        if (dominance_leq(rd, it->first, other)) {
          below = true;
          break;
        }
      }
      if (!below) {
        top = &it->first;
        n = it->second;
        break;
      }
    }
    if (!top) throw InternalError("support without a maximal element");
    Weight head = *top;
    out.mults[head] += n;
    x = sym_sub(x, sym_scale(n, irreducible_character(rd, head, limits, cache)));
  }
  drop_zeros(out.mults);
  return out;
}

Int orbit_size(const RootDatum& rd, const Weight& mu, const CharLimits& limits) {
  OrbitLimits ol{limits.max_rank, limits.max_expanded};
  return static_cast<Int>(weyl_orbit(rd, mu, ol).size());
}

Int irreducible_dimension(const RootDatum& rd, const Weight& lambda, const CharLimits& limits,
                          CharCache* cache) {
  SymElement ch = irreducible_character(rd, lambda, limits, cache);
  Int dim = 0;
  for (const auto& [mu, m] : ch.coeffs) dim += m * orbit_size(rd, mu, limits);
  return dim;
}

Int rep_dimension(const RootDatum& rd, const RepElement& rep, const CharLimits& limits,
                  CharCache* cache) {
  Int dim = 0;
  for (const auto& [lam, n] : rep.mults)
    dim += n * irreducible_dimension(rd, lam, limits, cache);
  return dim;
}

std::string GeneratorPolynomial::str() const {
  if (terms.empty()) return "0";
  std::vector<const std::pair<const std::vector<Int>, Int>*> order;
  for (const auto& t : terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return weight_graded_lex_less(b->first, a->first);  // graded-lex descending
  });
  std::string s;
  bool first = true;
  for (const auto* t : order) {
    Int c = t->second;
    if (c == 0) continue;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Int a = c < 0 ? -c : c;
    std::string mono;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Int e = t->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += " ";
      std::string var = "X_{";
      for (std::size_t j = 0; j < generators[i].size(); ++j) {
        if (j) var += ',';
        var += std::to_string(generators[i][j]);
      }
      var += "}";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + " ";
      s += mono;
    }
  }
  return s.empty() ? "0" : s;
}

SymElement evaluate_polynomial(const RootDatum& rd, const GeneratorPolynomial& p,
                               const CharLimits& limits, CharCache* cache) {
  CharCache local;
  if (!cache) cache = &local;
  SymElement total;
  for (const auto& [exps, c] : p.terms) {
    SymElement mono = orbit_sum(rd, Weight(rd.rank, 0));  // the constant 1
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      for (Int t = 0; t < exps[i]; ++t)
        mono = multiply(rd, mono, irreducible_character(rd, p.generators[i], limits, cache),
                        limits);
    total = sym_add(total, sym_scale(c, mono));
  }
  return total;
}

GeneratorPolynomial express_in_hilbert_generators(const RootDatum& rd,
                                                  const CenterSubgroup& z,
                                                  const Weight& lambda,
                                                  const CharLimits& limits,
                                                  CharCache* cache) {
  CharCache local;
  if (!cache) cache = &local;
  CongruenceMonoid d = dominant_monoid(rd, z);
  if (std::string why = membership_violation(d, lambda); !why.empty())
    throw DomainError(why);
  const std::vector<Weight> gens = hilbert_basis(d).elements;

  std::map<Weight, GeneratorPolynomial, GradedLexLess> memo;
  auto rec = [&](auto&& self, const Weight& mu) -> const GeneratorPolynomial& {
    auto found = memo.find(mu);
    if (found != memo.end()) return found->second;
    GeneratorPolynomial p;
    p.generators = gens;
    if (std::all_of(mu.begin(), mu.end(), [](Int v) { return v == 0; })) {
      p.terms[std::vector<Int>(gens.size(), 0)] = 1;
      return memo.emplace(mu, std::move(p)).first->second;
    }
    auto exps = monoid_combination(gens, mu);
    if (!exps)
      throw InternalError("Hilbert basis does not express " + weight_str(mu));
    SymElement mono = orbit_sum(rd, Weight(rd.rank, 0));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (Int t = 0; t < (*exps)[i]; ++t)
        mono = multiply(rd, mono, irreducible_character(rd, gens[i], limits, cache), limits);
    if (!is_sharp(rd, mono, mu))
      throw InternalError("sharp monomial check failed at " + weight_str(mu));
    SymElement defect = sym_sub(mono, irreducible_character(rd, mu, limits, cache));
    RepElement lower = decompose_into_irreducibles(rd, defect, limits, cache);
    p.terms[*exps] = 1;
    for (const auto& [nu, n] : lower.mults) {
      if (!(dominance_leq(rd, nu, mu) && nu != mu))
        throw InternalError("defect term not strictly below " + weight_str(mu));
      const GeneratorPolynomial& sub = self(self, nu);
      for (const auto& [se, sc] : sub.terms) p.terms[se] -= n * sc;
    }
    for (auto it = p.terms.begin(); it != p.terms.end();)
      it = it->second == 0 ? p.terms.erase(it) : std::next(it);
    return memo.emplace(mu, std::move(p)).first->second;
  };

  GeneratorPolynomial result = rec(rec, lambda);
  SymElement check = evaluate_polynomial(rd, result, limits, cache);
  if (!(check == irreducible_character(rd, lambda, limits, cache)))
    throw InternalError("generator certificate failed substitution check");
  return result;
}

std::vector<Weight> adjoint_weights(const RootDatum& rd) {
  std::vector<Weight> out;
  out.reserve(2 * rd.positive_roots.size() + rd.rank);
  for (const auto& a : rd.positive_roots) {
    out.push_back(a);
    out.push_back(weight_scale(-1, a));
  }
  for (int i = 0; i < rd.rank; ++i) out.push_back(Weight(rd.rank, 0));
  return out;
}

std::vector<Rational> killing_spectrum(const std::vector<Weight>& weights,
                                       const TorusPoint& z) {
  std::vector<Rational> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(pairing(z, w));
  std::sort(out.begin(), out.end());
  return out;
}

TorusPoint torus_reflection(const RootDatum& rd, int i, const TorusPoint& z) {
  if (i < 0 || i >= rd.rank) throw DomainError("reflection index out of range");
  TorusPoint out = z;
  Rational pivot(0);
  for (int k = 0; k < rd.rank; ++k)
    if (rd.cartan[i][k] != 0) pivot += Rational(rd.cartan[i][k]) * z.exps[k];
  out.exps[i] = (z.exps[i] - pivot).mod1();
  return out;
}

namespace {

TorusPoint normalized(const TorusPoint& z) {
  TorusPoint out = z;
  for (auto& v : out.exps) v = v.mod1();
  return out;
}

bool orbit_reaches(const RootDatum& rd, const TorusPoint& start,
                   const std::set<std::vector<Rational>>& targets,
                   const OrbitLimits& limits) {
  if (rd.rank > limits.max_rank)
    throw DomainError("Weyl conjugacy rank guard exceeded");
  if (weyl_order_formula(rd.type) > static_cast<Int>(limits.max_elements))
    throw DomainError("Weyl conjugacy group-order guard exceeded");
  std::set<std::vector<Rational>> seen{start.exps};
  std::deque<TorusPoint> queue{start};
  if (targets.count(start.exps)) return true;
  while (!queue.empty()) {
    TorusPoint p = queue.front();
    queue.pop_front();
    for (int i = 0; i < rd.rank; ++i) {
      TorusPoint q = torus_reflection(rd, i, p);
      if (seen.insert(q.exps).second) {
        if (targets.count(q.exps)) return true;
        queue.push_back(std::move(q));
      }
    }
  }
  return false;
}

}  // namespace

bool w_conjugate(const RootDatum& rd, const TorusPoint& z1, const TorusPoint& z2,
                 const OrbitLimits& limits) {
  if (static_cast<int>(z1.exps.size()) != rd.rank ||
      static_cast<int>(z2.exps.size()) != rd.rank)
    throw DomainError("torus point length does not match rank");
  std::set<std::vector<Rational>> targets{normalized(z2).exps};
  return orbit_reaches(rd, normalized(z1), targets, limits);
}

bool w_conjugate_mod(const RootDatum& rd, const CenterSubgroup& z, const TorusPoint& z1,
                     const TorusPoint& z2, const OrbitLimits& limits) {
  std::set<std::vector<Rational>> targets;
  for (const auto& c : z.elements) targets.insert(torus_add(normalized(z2), c).exps);
  return orbit_reaches(rd, normalized(z1), targets, limits);
}

namespace {

// Lift a tuple of root values to torus exponents: solve C q = a.
TorusPoint lift_root_values(const RootDatum& rd, const std::vector<Rational>& a) {
  TorusPoint q = torus_identity(rd.rank);
  for (int i = 0; i < rd.rank; ++i) {
    Rational acc(0);
    for (int j = 0; j < rd.rank; ++j)
      acc += rd.inv_cartan_transpose[j][i] * a[j];  // C^{-1} = (invCT)^T
    q.exps[i] = acc.mod1();
  }
  return q;
}

}  // namespace

CounterexampleReport grothendieck_counterexample(CounterexampleKind kind,
                                                 std::optional<Rational> a,
                                                 std::optional<Rational> b) {
  CounterexampleReport report;
  report.kind = kind;
  if (kind == CounterexampleKind::Pgl3) {
    Rational u = a.value_or(Rational(1, 7)).mod1();
    Rational v = b.value_or(Rational(2, 7)).mod1();
    report.group = parse_semisimple_type("A2");
    RootDatum rd = make_root_datum(report.group);
    std::vector<Rational> values = {u, (-u).mod1(), v, (-v).mod1(), (u + v).mod1(),
                                    (-(u + v)).mod1()};
    std::set<Rational> distinct(values.begin(), values.end());
    report.inputs_valid = distinct.size() == values.size();
    if (!report.inputs_valid)
      throw DomainError("the six root values u, u^-1, v, v^-1, uv, (uv)^-1 must be "
                        "pairwise distinct");
    report.z1 = lift_root_values(rd, {u, v});
    report.z2 = lift_root_values(rd, {v, u});
    std::vector<Weight> ad = adjoint_weights(rd);
    report.spectrum1 = killing_spectrum(ad, report.z1);
    report.spectrum2 = killing_spectrum(ad, report.z2);
    report.spectra_equal = report.spectrum1 == report.spectrum2;
    report.conjugate = w_conjugate_mod(rd, center_subgroup(report.group), report.z1,
                                       report.z2);
  } else {
    Rational av = a.value_or(Rational(1, 5)).mod1();
    Rational bv = b.value_or(Rational(2, 5)).mod1();
    report.group = parse_semisimple_type("A1xA1");
    RootDatum rd = make_root_datum(report.group);
    RootDatum factor = make_root_datum(parse_semisimple_type("A1"));
    TorusPoint pa{{(av / Rational(2)).mod1()}};
    TorusPoint pb{{(bv / Rational(2)).mod1()}};
    CenterSubgroup factor_center = center_subgroup(parse_semisimple_type("A1"));
    report.inputs_valid = !w_conjugate_mod(factor, factor_center, pa, pb);
    if (!report.inputs_valid)
      throw DomainError("the two torus elements lie in the same Weyl orbit; the product "
                        "counterexample needs distinct orbits");
    report.z1 = TorusPoint{{pa.exps[0], pb.exps[0]}};
    report.z2 = TorusPoint{{pb.exps[0], pa.exps[0]}};
    std::vector<Weight> ad = adjoint_weights(rd);
    report.spectrum1 = killing_spectrum(ad, report.z1);
    report.spectrum2 = killing_spectrum(ad, report.z2);
    report.spectra_equal = report.spectrum1 == report.spectrum2;
    report.conjugate = w_conjugate_mod(rd, center_subgroup(report.group), report.z1,
                                       report.z2);
  }
  if (!report.verified())
    throw InternalError("counterexample self-check failed");
  return report;
}

namespace {

bool small_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Sparse bivariate polynomial over F_p.
struct Fp2Poly {
  Int p = 2;
  std::map<std::pair<Int, Int>, Int> c;  // (deg_x, deg_y) -> coeff in [1, p)

  void put(Int dx, Int dy, Int v) {
    v %= p;
    if (v < 0) v += p;
    auto key = std::make_pair(dx, dy);
    Int next = (c.count(key) ? c[key] + v : v) % p;
    if (next == 0)
      c.erase(key);
    else
      c[key] = next;
  }
};

Fp2Poly fp_const(Int p, Int v) {
  Fp2Poly out;
  out.p = p;
  out.put(0, 0, v);
  return out;
}

Fp2Poly fp_monomial(Int p, Int dx, Int dy) {
  Fp2Poly out;
  out.p = p;
  out.put(dx, dy, 1);
  return out;
}

Fp2Poly fp_add(const Fp2Poly& a, const Fp2Poly& b) {
  Fp2Poly out = a;
  for (const auto& [k, v] : b.c) out.put(k.first, k.second, v);
  return out;
}

Fp2Poly fp_sub(const Fp2Poly& a, const Fp2Poly& b) {
  Fp2Poly out = a;
  for (const auto& [k, v] : b.c) out.put(k.first, k.second, -v);
  return out;
}

Fp2Poly fp_mul(const Fp2Poly& a, const Fp2Poly& b) {
  Fp2Poly out;
  out.p = a.p;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c)
      out.put(ka.first + kb.first, ka.second + kb.second, va * vb);
  return out;
}

bool fp_equal(const Fp2Poly& a, const Fp2Poly& b) { return a.c == b.c; }

}  // namespace

bool verify_sl3_crosssection_image(Int p, Int d) {
  if (!small_prime(p)) throw DomainError("p must be a prime");
  if (d < 1) throw DomainError("d must be positive");
  Int q = 1;
  for (Int i = 0; i < d; ++i) {
    q *= p;
    if (q > 4096) throw DomainError("p^d guard exceeded");
  }

  Fp2Poly x = fp_monomial(p, 1, 0);   // a1
  Fp2Poly y = fp_monomial(p, 0, 1);   // a2
  Fp2Poly xq = fp_monomial(p, q, 0);  // a1^(p^d)
  Fp2Poly one = fp_const(p, 1);
  Fp2Poly zero = fp_const(p, 0);
  Fp2Poly f = fp_sub(xq, x);

  std::array<std::array<Fp2Poly, 3>, 3> m = {{{x, y, one}, {one, f, zero}, {zero, one, zero}}};

  auto minor2 = [&](int r1, int r2, int c1, int c2) {
    return fp_sub(fp_mul(m[r1][c1], m[r2][c2]), fp_mul(m[r1][c2], m[r2][c1]));
  };

  Fp2Poly trace = fp_add(fp_add(m[0][0], m[1][1]), m[2][2]);
  Fp2Poly minors = fp_add(fp_add(minor2(0, 1, 0, 1), minor2(0, 2, 0, 2)), minor2(1, 2, 1, 2));
  Fp2Poly det =
      fp_add(fp_sub(fp_mul(m[0][0], minor2(1, 2, 1, 2)), fp_mul(m[0][1], minor2(1, 2, 0, 2))),
             fp_mul(m[0][2], minor2(1, 2, 0, 1)));

  Fp2Poly expected_trace = xq;
  Fp2Poly expected_minors = fp_sub(fp_mul(x, fp_sub(xq, x)), y);

  return fp_equal(det, one) && fp_equal(trace, expected_trace) &&
         fp_equal(minors, expected_minors);
}

}  // namespace repring
