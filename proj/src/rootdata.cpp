#include "repring/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "repring/errors.hpp"

namespace repring {

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

SimpleType make_simple_type(Series series, int rank) {
  switch (series) {
    case Series::A:
      if (rank < 1) throw DomainError("A requires rank >= 1");
      break;
    case Series::B:
      if (rank == 1) return {Series::A, 1};  // B1 := A1
      if (rank < 2) throw DomainError("B requires rank >= 2");
      break;
    case Series::C:
      if (rank == 1) return {Series::A, 1};  // C1 := A1
      if (rank < 2) throw DomainError("C requires rank >= 2");
      break;
    case Series::D:
      if (rank < 3) throw DomainError("D requires rank >= 3");
      break;
    case Series::E:
      if (rank < 6 || rank > 8) throw DomainError("E requires rank in {6,7,8}");
      break;
    case Series::F:
      if (rank != 4) throw DomainError("F requires rank 4");
      break;
    case Series::G:
      if (rank != 2) throw DomainError("G requires rank 2");
      break;
  }
  return {series, rank};
}

SimpleType parse_simple_type(const std::string& token) {
  if (token.empty()) throw DomainError("empty type token");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  if (c < 'A' || c > 'G')
    throw DomainError("bad series letter '" + std::string(1, token[0]) + "' in '" + token + "'");
  if (token.size() < 2)
    throw DomainError("missing rank in type token '" + token + "'");
  for (std::size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw DomainError("bad rank digits in type token '" + token + "'");
  int rank = std::stoi(token.substr(1));
  return make_simple_type(static_cast<Series>(c), rank);
}

int SemisimpleType::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string SemisimpleType::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += 'x';
    s += factors[i].name();
  }
  return s;
}

SemisimpleType parse_semisimple_type(const std::string& text) {
  SemisimpleType out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find_first_of("xX*", pos);
    std::string token = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (token.empty())
      throw DomainError("empty factor at position " + std::to_string(pos) + " in '" + text + "'");
    out.factors.push_back(parse_simple_type(token));
    if (next == std::string::npos) {
      pos = text.size();
    } else {
      pos = next + 1;
      if (pos >= text.size())
        throw DomainError("trailing factor separator in '" + text + "'");
    }
  }
  if (out.factors.empty()) throw DomainError("empty type string");
  return out;
}

namespace {

IntMatrix simple_cartan(const SimpleType& t) {
  int r = t.rank;
  IntMatrix c(r, std::vector<Int>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 2][r - 1] = -2;  // alpha_r is the short root
      break;
    case Series::C:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 1][r - 2] = -2;  // alpha_r is the long root
      break;
    case Series::D:
      for (int i = 0; i + 2 < r - 1; ++i) link(i, i + 1);
      link(r - 3, r - 2);
      link(r - 3, r - 1);
      break;
    case Series::E:
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      if (r >= 7) link(5, 6);
      if (r >= 8) link(6, 7);
      break;
    case Series::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;  // alpha_3, alpha_4 are short
      break;
    case Series::G:
      c[0][1] = -1;
      c[1][0] = -3;  // alpha_1 short, alpha_2 long
      break;
  }
  return c;
}

// d_i > 0 with c[i][j]*d[j] == c[j][i]*d[i], integral and primitive per factor.
std::vector<Int> factor_symmetrizer(const IntMatrix& c) {
  int r = static_cast<int>(c.size());
  std::vector<Rational> d(r, Rational(0));
  d[0] = 1;
  // The Dynkin diagram of a simple factor is connected; propagate.
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      if (j == i || c[i][j] == 0 || !d[j].is_zero()) continue;
      d[j] = d[i] * Rational(c[j][i], c[i][j]);
      queue.push_back(j);
    }
  }
  Int mult = 1;
  for (const auto& v : d) {
    if (v.is_zero()) throw InternalError("symmetrizer: diagram not connected");
    mult = std::lcm(mult, v.den());
  }
  std::vector<Int> out(r);
  Int g = 0;
  for (int i = 0; i < r; ++i) {
    Rational scaled = d[i] * Rational(mult);
    if (!scaled.is_integer()) throw InternalError("symmetrizer scaling not integral");
    out[i] = scaled.num();
    g = std::gcd(g, out[i]);
  }
  for (auto& v : out) v /= g;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (c[i][j] * out[j] != c[j][i] * out[i])
        throw InternalError("symmetrizer does not symmetrize the Cartan matrix");
  return out;
}

std::vector<std::vector<Rational>> invert_transpose(const IntMatrix& c) {
  int r = static_cast<int>(c.size());
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(2 * r, Rational(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = Rational(c[j][i]);  // transpose
    m[i][r + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int pivot = -1;
    for (int i = col; i < r; ++i)
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw InternalError("Cartan matrix singular");
    std::swap(m[col], m[pivot]);
    Rational inv = Rational(1) / m[col][col];
    for (int j = col; j < 2 * r; ++j) m[col][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (int j = col; j < 2 * r; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rational>> out(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i][j] = m[i][r + j];
  return out;
}

// Positive roots of one simple factor: closure of the simple roots under
// simple reflections, kept while the simple-root coordinates stay >= 0.
void factor_positive_roots(const IntMatrix& c, std::vector<Weight>& fw_out,
                           std::vector<Weight>& rc_out) {
  int r = static_cast<int>(c.size());
  std::unordered_set<Weight, WeightHash> seen;
  std::deque<std::pair<Weight, Weight>> queue;
  for (int i = 0; i < r; ++i) {
    Weight fw(c[i]);
    Weight rc(r, 0);
    rc[i] = 1;
    seen.insert(rc);
    queue.emplace_back(std::move(fw), std::move(rc));
  }
  while (!queue.empty()) {
    auto [fw, rc] = queue.front();
    queue.pop_front();
    fw_out.push_back(fw);
    rc_out.push_back(rc);
    for (int i = 0; i < r; ++i) {
      Int coef = fw[i];
      if (coef == 0) continue;
      Weight nrc = rc;
      nrc[i] -= coef;
      if (std::any_of(nrc.begin(), nrc.end(), [](Int v) { return v < 0; })) continue;
      if (!seen.insert(nrc).second) continue;
      Weight nfw = fw;
      for (int j = 0; j < r; ++j) nfw[j] -= coef * c[i][j];
      queue.emplace_back(std::move(nfw), std::move(nrc));
    }
  }
}

}  // namespace

IntMatrix cartan_matrix(const SemisimpleType& type) {
  if (type.factors.empty()) throw DomainError("semisimple type needs at least one factor");
  int r = type.rank();
  IntMatrix c(r, std::vector<Int>(r, 0));
  int off = 0;
  for (const auto& f : type.factors) {
    IntMatrix fc = simple_cartan(f);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) c[off + i][off + j] = fc[i][j];
    off += f.rank;
  }
  return c;
}

RootDatum make_root_datum(const SemisimpleType& type) {
  RootDatum rd;
  rd.type = type;
  rd.rank = type.rank();
  rd.cartan = cartan_matrix(type);
  rd.rho.assign(rd.rank, 1);
  rd.symmetrizer.assign(rd.rank, 0);
  int off = 0;
  for (const auto& f : type.factors) {
    rd.blocks.emplace_back(off, f.rank);
    IntMatrix fc = simple_cartan(f);
    auto d = factor_symmetrizer(fc);
    for (int i = 0; i < f.rank; ++i) rd.symmetrizer[off + i] = d[i];
    std::vector<Weight> fw, rc;
    factor_positive_roots(fc, fw, rc);
    if (static_cast<Int>(fw.size()) != known_positive_root_count(f))
      throw InternalError("positive root count mismatch for " + f.name());
    for (std::size_t k = 0; k < fw.size(); ++k) {
      Weight gfw(rd.rank, 0), grc(rd.rank, 0);
      for (int i = 0; i < f.rank; ++i) {
        gfw[off + i] = fw[k][i];
        grc[off + i] = rc[k][i];
      }
      rd.positive_roots.push_back(std::move(gfw));
      rd.positive_root_coords.push_back(std::move(grc));
    }
    off += f.rank;
  }
  // canonical order, coordinates permuted in lockstep
  std::vector<std::size_t> idx(rd.positive_roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return weight_graded_lex_less(rd.positive_roots[a], rd.positive_roots[b]);
  });
  std::vector<Weight> fw2, rc2;
  fw2.reserve(idx.size());
  rc2.reserve(idx.size());
  for (auto k : idx) {
    fw2.push_back(rd.positive_roots[k]);
    rc2.push_back(rd.positive_root_coords[k]);
  }
  rd.positive_roots = std::move(fw2);
  rd.positive_root_coords = std::move(rc2);
  rd.inv_cartan_transpose = invert_transpose(rd.cartan);
  return rd;
}

RootDatum make_root_datum(const std::string& text) {
  return make_root_datum(parse_semisimple_type(text));
}

Int known_positive_root_count(const SimpleType& t) {
  Int r = t.rank;
  switch (t.series) {
    case Series::A: return r * (r + 1) / 2;
    case Series::B:
    case Series::C: return r * r;
    case Series::D: return r * (r - 1);
    case Series::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
  }
  throw InternalError("unknown series");
}

Int weyl_order_formula(const SemisimpleType& t) {
  Int total = 1;
  for (const auto& f : t.factors) {
    Int r = f.rank;
    Int v = 1;
    switch (f.series) {
      case Series::A:
        for (Int i = 2; i <= r + 1; ++i) v *= i;
        break;
      case Series::B:
      case Series::C:
        for (Int i = 2; i <= r; ++i) v *= i;
        v <<= r;
        break;
      case Series::D:
        for (Int i = 2; i <= r; ++i) v *= i;
        v <<= (r - 1);
        break;
      case Series::E:
        v = r == 6 ? 51840 : (r == 7 ? 2903040 : 696729600);
        break;
      case Series::F:
        v = 1152;
        break;
      case Series::G:
        v = 12;
        break;
    }
    total *= v;
  }
  return total;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](Int v) { return v >= 0; });
}

bool weight_graded_lex_less(const Weight& a, const Weight& b) {
  Int sa = std::accumulate(a.begin(), a.end(), Int(0));
  Int sb = std::accumulate(b.begin(), b.end(), Int(0));
  if (sa != sb) return sa < sb;
  return a < b;
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Weight weight_scale(Int c, const Weight& a) {
  Weight out(a);
  for (auto& v : out) v *= c;
  return out;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

Weight simple_reflection(const RootDatum& rd, int i, const Weight& lambda) {
  if (i < 0 || i >= rd.rank) throw DomainError("reflection index out of range");
  if (static_cast<int>(lambda.size()) != rd.rank)
    throw DomainError("weight length does not match rank");
  Weight out = lambda;
  Int coef = lambda[i];
  if (coef == 0) return out;
  for (int j = 0; j < rd.rank; ++j) out[j] -= coef * rd.cartan[i][j];
  return out;
}

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& lambda,
                               const OrbitLimits& limits) {
  if (rd.rank > limits.max_rank)
    throw DomainError("orbit rank guard exceeded (rank " + std::to_string(rd.rank) +
                      " > " + std::to_string(limits.max_rank) + ")");
  if (static_cast<int>(lambda.size()) != rd.rank)
    throw DomainError("weight length does not match rank");
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rd.rank; ++i) {
      if (w[i] == 0) continue;
      Weight next = simple_reflection(rd, i, w);
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_elements)
          throw DomainError("orbit size guard exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), weight_graded_lex_less);
  return out;
}

Weight dominant_representative(const RootDatum& rd, const Weight& lambda) {
  Weight w = lambda;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rd.rank; ++i)
      if (w[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return w;
    w = simple_reflection(rd, neg, w);
  }
}

Int weyl_group_order(const RootDatum& rd, const OrbitLimits& limits) {
  return static_cast<Int>(weyl_orbit(rd, rd.rho, limits).size());
}

bool dominance_leq(const RootDatum& rd, const Weight& lo, const Weight& hi) {
  if (static_cast<int>(lo.size()) != rd.rank || static_cast<int>(hi.size()) != rd.rank)
    throw DomainError("weight length does not match rank");
  for (int i = 0; i < rd.rank; ++i) {
    Rational k(0);
    for (int j = 0; j < rd.rank; ++j)
      k += rd.inv_cartan_transpose[i][j] * Rational(hi[j] - lo[j]);
    if (!k.is_integer() || k.num() < 0) return false;
  }
  return true;
}

Rational weight_inner_product(const RootDatum& rd, const Weight& a, const Weight& b) {
  Rational out(0);
  for (int k = 0; k < rd.rank; ++k) {
    if (a[k] == 0) continue;
    Rational ck(0);
    for (int j = 0; j < rd.rank; ++j)
      ck += rd.inv_cartan_transpose[k][j] * Rational(b[j]);
    out += Rational(a[k] * rd.symmetrizer[k]) * ck;
  }
  return out;
}

}  // namespace repring
