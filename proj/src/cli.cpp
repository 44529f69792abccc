#include "repring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "repring/charring.hpp"
#include "repring/errors.hpp"
#include "repring/groupspec.hpp"
#include "repring/monoidbasis.hpp"
#include "repring/paper_checks.hpp"

namespace repring::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Context {
  bool json_output = false;
  int max_rank = 0;  // 0 = library defaults
  long long seed = 0;
};

CharLimits char_limits(const Context& ctx) {
  CharLimits limits;
  if (ctx.max_rank > 0) limits.max_rank = ctx.max_rank;
  return limits;
}

json json_weight(const Weight& w) {
  json a = json::array();
  for (Int v : w) a.push_back(v);
  return a;
}

json json_weights(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(json_weight(w));
  return a;
}

json json_torus(const TorusPoint& p) {
  json a = json::array();
  for (const auto& v : p.exps) a.push_back(v.str());
  return a;
}

json json_rationals(const std::vector<Rational>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(v.str());
  return a;
}

json json_congruences(const CharacterLattice& lattice) {
  json a = json::array();
  for (const auto& c : lattice.congruences) {
    json entry;
    entry["coeffs"] = json_weight(c.coeffs);
    entry["modulus"] = c.modulus;
    a.push_back(entry);
  }
  return a;
}

const char* isogeny_name(GroupSpec::Isogeny iso) {
  switch (iso) {
    case GroupSpec::Isogeny::SimplyConnected: return "sc";
    case GroupSpec::Isogeny::Adjoint: return "adjoint";
    case GroupSpec::Isogeny::SpecialOrthogonal: return "so";
    case GroupSpec::Isogeny::HalfSpin: return "halfspin";
    case GroupSpec::Isogeny::Explicit: return "explicit";
  }
  return "?";
}

json group_block(const GroupSpec& spec, const CenterSubgroup& z) {
  json g;
  g["type"] = spec.type.name();
  g["rank"] = spec.type.rank();
  g["isogeny"] = isogeny_name(spec.isogeny);
  g["subgroup_order"] = z.order();
  json gens = json::array();
  for (const auto& p : z.generators) gens.push_back(json_torus(p));
  g["subgroup_generators"] = gens;
  return g;
}

json doc_header(const std::string& command) {
  json doc;
  doc["version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

void emit(const Context& ctx, const json& doc, const std::string& table,
          std::ostream& out) {
  if (ctx.json_output)
    out << doc.dump(2) << "\n";
  else
    out << table;
}

std::string join_spec(const std::vector<std::string>& words) {
  std::string s;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) s += ' ';
    s += words[i];
  }
  return s;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_info(const Context& ctx, const std::string& spec_text, std::ostream& out) {
  GroupSpec spec = parse_group_spec(spec_text);
  CenterSubgroup z = center_of(spec);
  RootDatum rd = make_root_datum(spec.type);
  FiniteAbelianGroup fg = fundamental_group(spec.type);
  CharacterLattice lattice = character_lattice(z);
  QuotientReport report = quotient_report(rd, z);

  json doc = doc_header("info");
  doc["group"] = group_block(spec, z);
  doc["fundamental_group"] = json_weight(fg.invariant_factors);
  json center = json::array();
  for (const auto& p : center_subgroup(spec.type).elements) center.push_back(json_torus(p));
  doc["center_elements"] = center;
  doc["character_lattice"] = json_congruences(lattice);
  doc["hilbert_basis"] = json_weights(report.basis.elements);
  doc["tangent_dim"] = report.tangent_dim;
  doc["smooth"] = report.smooth;
  doc["theorem_smooth"] = report.theorem_smooth;
  doc["verdicts_agree"] = report.smooth == report.theorem_smooth;
  doc["classification_note"] = report.classification_note;

  std::ostringstream t;
  t << "group           " << spec.str() << "\n";
  t << "rank            " << spec.type.rank() << "\n";
  t << "fundamental grp ";
  if (fg.trivial())
    t << "trivial\n";
  else {
    for (std::size_t i = 0; i < fg.invariant_factors.size(); ++i)
      t << (i ? " x " : "") << "Z/" << fg.invariant_factors[i];
    t << "\n";
  }
  t << "|Z|             " << z.order() << "\n";
  t << "congruences     ";
  if (lattice.congruences.empty())
    t << "none (full weight lattice)\n";
  else {
    for (std::size_t i = 0; i < lattice.congruences.size(); ++i) {
      const auto& c = lattice.congruences[i];
      if (i) t << "; ";
      for (int j = 0; j < lattice.rank; ++j) {
        if (j) t << "+";
        t << c.coeffs[j] << "*m" << j + 1;
      }
      t << " = 0 mod " << c.modulus;
    }
    t << "\n";
  }
  t << "hilbert basis   ";
  for (std::size_t i = 0; i < report.basis.elements.size(); ++i)
    t << (i ? " " : "") << weight_str(report.basis.elements[i]);
  t << "\n";
  t << "tangent dim     " << report.tangent_dim << "\n";
  t << "smooth          " << (report.smooth ? "yes" : "no") << "\n";
  t << "classification  " << report.classification_note << "\n";
  emit(ctx, doc, t.str(), out);
  return 0;
}

int cmd_center(const Context& ctx, const std::string& type_text, std::ostream& out) {
  SemisimpleType type = parse_semisimple_type(type_text);
  CenterSubgroup center = center_subgroup(type);
  FiniteAbelianGroup fg = fundamental_group(type);
  bool matches_table = true;
  if (type.factors.size() == 1)
    matches_table = center.elements == center_closed_form(type.factors[0]).elements;

  json doc = doc_header("center");
  doc["type"] = type.name();
  doc["rank"] = type.rank();
  doc["fundamental_group"] = json_weight(fg.invariant_factors);
  doc["order"] = center.order();
  doc["exponent"] = center.exponent();
  json gens = json::array();
  for (const auto& p : center.generators) gens.push_back(json_torus(p));
  doc["generators"] = gens;
  json els = json::array();
  for (const auto& p : center.elements) els.push_back(json_torus(p));
  doc["elements"] = els;
  doc["matches_closed_form"] = matches_table;

  std::ostringstream t;
  t << "type            " << type.name() << "\n";
  t << "center order    " << center.order() << "\n";
  t << "generators      ";
  for (std::size_t i = 0; i < center.generators.size(); ++i)
    t << (i ? " " : "") << torus_str(center.generators[i]);
  if (center.generators.empty()) t << "(trivial)";
  t << "\n";
  t << "elements        ";
  for (std::size_t i = 0; i < center.elements.size(); ++i)
    t << (i ? " " : "") << torus_str(center.elements[i]);
  t << "\n";
  t << "closed form ok  " << (matches_table ? "yes" : "no") << "\n";
  emit(ctx, doc, t.str(), out);
  return 0;
}

int cmd_hilbert(const Context& ctx, const std::string& spec_text, std::ostream& out) {
  GroupSpec spec = parse_group_spec(spec_text);
  CenterSubgroup z = center_of(spec);
  RootDatum rd = make_root_datum(spec.type);
  CongruenceMonoid d = dominant_monoid(rd, z);
  HilbertBasis basis = hilbert_basis(d);

  json doc = doc_header("hilbert");
  doc["group"] = group_block(spec, z);
  doc["character_lattice"] = json_congruences(d.lattice);
  doc["exponent"] = monoid_exponent(d);
  doc["hilbert_basis"] = json_weights(basis.elements);
  doc["count"] = basis.elements.size();

  std::ostringstream t;
  t << "group           " << spec.str() << "\n";
  t << "exponent        " << monoid_exponent(d) << "\n";
  t << "basis (" << basis.elements.size() << ")      ";
  for (std::size_t i = 0; i < basis.elements.size(); ++i)
    t << (i ? " " : "") << weight_str(basis.elements[i]);
  t << "\n";
  emit(ctx, doc, t.str(), out);
  return 0;
}

int cmd_tensor(const Context& ctx, const std::string& spec_text, const std::string& lhs_text,
               const std::string& rhs_text, std::ostream& out) {
  GroupSpec spec = parse_group_spec(spec_text);
  CenterSubgroup z = center_of(spec);
  RootDatum rd = make_root_datum(spec.type);
  CongruenceMonoid d = dominant_monoid(rd, z);
  Weight lhs = parse_weight(lhs_text, rd.rank);
  Weight rhs = parse_weight(rhs_text, rd.rank);
  for (const Weight* w : {&lhs, &rhs})
    if (std::string why = membership_violation(d, *w); !why.empty()) throw DomainError(why);

  CharLimits limits = char_limits(ctx);
  CharCache cache;
  SymElement product = multiply(rd, irreducible_character(rd, lhs, limits, &cache),
                                irreducible_character(rd, rhs, limits, &cache), limits);
  RepElement decomposition = decompose_into_irreducibles(rd, product, limits, &cache);
  Int dim_lhs = irreducible_dimension(rd, lhs, limits, &cache);
  Int dim_rhs = irreducible_dimension(rd, rhs, limits, &cache);
  Int dim_product = rep_dimension(rd, decomposition, limits, &cache);
  if (dim_product != dim_lhs * dim_rhs)
    throw InternalError("tensor dimensions do not match");

  json doc = doc_header("tensor");
  doc["group"] = group_block(spec, z);
  doc["lhs"] = json_weight(lhs);
  doc["rhs"] = json_weight(rhs);
  json terms = json::array();
  for (const auto& [w, n] : decomposition.mults) {
    json term;
    term["weight"] = json_weight(w);
    term["multiplicity"] = n;
    terms.push_back(term);
  }
  doc["decomposition"] = terms;
  doc["dimensions"] = json{{"lhs", dim_lhs}, {"rhs", dim_rhs}, {"product", dim_product}};

  std::ostringstream t;
  t << "group           " << spec.str() << "\n";
  t << "E" << weight_str(lhs) << " (x) E" << weight_str(rhs) << " = " << rep_str(decomposition)
    << "\n";
  t << "dimensions      " << dim_lhs << " * " << dim_rhs << " = " << dim_product << "\n";
  emit(ctx, doc, t.str(), out);
  return 0;
}

int cmd_express(const Context& ctx, const std::string& spec_text, const std::string& weight_text,
                std::ostream& out) {
  GroupSpec spec = parse_group_spec(spec_text);
  CenterSubgroup z = center_of(spec);
  RootDatum rd = make_root_datum(spec.type);
  Weight lambda = parse_weight(weight_text, rd.rank);
  CharLimits limits = char_limits(ctx);
  CharCache cache;
  GeneratorPolynomial poly = express_in_hilbert_generators(rd, z, lambda, limits, &cache);

  json doc = doc_header("express");
  doc["group"] = group_block(spec, z);
  doc["lambda"] = json_weight(lambda);
  doc["generators"] = json_weights(poly.generators);
  doc["certificate"] = poly.str();
  json terms = json::array();
  for (const auto& [exps, c] : poly.terms) {
    json term;
    term["exponents"] = json_weight(exps);
    term["coefficient"] = c;
    terms.push_back(term);
  }
  doc["terms"] = terms;
  doc["verified"] = true;  // express_in_hilbert_generators verifies by substitution

  std::ostringstream t;
  t << "group           " << spec.str() << "\n";
  t << "ch E" << weight_str(lambda) << " = " << poly.str() << "\n";
  t << "generators      ";
  for (std::size_t i = 0; i < poly.generators.size(); ++i)
    t << (i ? " " : "") << weight_str(poly.generators[i]);
  t << "\n";
  t << "verified        yes\n";
  emit(ctx, doc, t.str(), out);
  return 0;
}

int cmd_counterexample(const Context& ctx, const std::string& kind_text,
                       const std::string& a_text, const std::string& b_text,
                       std::ostream& out) {
  CounterexampleKind kind;
  if (kind_text == "pgl3")
    kind = CounterexampleKind::Pgl3;
  else if (kind_text == "product")
    kind = CounterexampleKind::Product;
  else
    throw DomainError("counterexample kind must be 'pgl3' or 'product'");
  std::optional<Rational> a, b;
  if (!a_text.empty()) a = parse_rational(a_text);
  if (!b_text.empty()) b = parse_rational(b_text);
  CounterexampleReport rep = grothendieck_counterexample(kind, a, b);

  json doc = doc_header("counterexample");
  doc["kind"] = kind_text;
  doc["group"] = rep.group.name() + " adjoint";
  doc["z1"] = json_torus(rep.z1);
  doc["z2"] = json_torus(rep.z2);
  doc["spectrum"] = json_rationals(rep.spectrum1);
  doc["spectra_equal"] = rep.spectra_equal;
  doc["w_conjugate"] = rep.conjugate;
  doc["inputs_valid"] = rep.inputs_valid;
  doc["verified"] = rep.verified();

  std::ostringstream t;
  t << "group           " << rep.group.name() << " adjoint\n";
  t << "z1              " << torus_str(rep.z1) << "\n";
  t << "z2              " << torus_str(rep.z2) << "\n";
  t << "adjoint spectrum exponents ";
  for (std::size_t i = 0; i < rep.spectrum1.size(); ++i)
    t << (i ? " " : "") << rep.spectrum1[i].str();
  t << "\n";
  t << "spectra equal   " << (rep.spectra_equal ? "yes" : "no") << "\n";
  t << "W-conjugate     " << (rep.conjugate ? "yes" : "no") << "\n";
  t << "verified        " << (rep.verified() ? "yes" : "no") << "\n";
  emit(ctx, doc, t.str(), out);
  return 0;
}

int cmd_paper_suite(const Context& ctx, bool corrupt_cartan, std::ostream& out) {
  std::vector<PaperCheck> checks = run_paper_checks(corrupt_cartan);
  bool all = true;
  json doc = doc_header("paper-suite");
  json items = json::array();
  std::ostringstream t;
  for (const auto& c : checks) {
    all = all && c.passed;
    json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["detail"] = c.detail;
    items.push_back(item);
    t << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) t << " - " << c.detail;
    t << "\n";
  }
  doc["checks"] = items;
  doc["all_passed"] = all;
  t << (all ? "all checks passed" : "SOME CHECKS FAILED") << " (" << checks.size()
    << " items)\n";
  emit(ctx, doc, t.str(), out);
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with dominant-weight monoids, centers, and "
               "representation rings of semisimple groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  app.add_flag("--json", ctx.json_output, "emit machine-readable JSON");
  app.add_option("--max-rank", ctx.max_rank,
                 "override the rank guard for orbit-expanding operations");
  app.add_option("--seed", ctx.seed,
                 "seed for randomized property sampling (paper checks are deterministic)");

  std::vector<std::string> info_spec, hilbert_spec, tensor_args, express_args;
  std::string center_type;
  std::string ce_kind = "pgl3", ce_a, ce_b;
  bool corrupt_cartan = false;

  auto* info = app.add_subcommand("info", "center, lattice, and quotient report for a group");
  info->add_option("group", info_spec, "group spec, e.g. \"E7 adjoint\"")->required();

  auto* center = app.add_subcommand("center", "center of the simply connected group");
  center->add_option("type", center_type, "semisimple type, e.g. D5 or A2xA1")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the dominant-weight monoid");
  hilbert->add_option("group", hilbert_spec, "group spec")->required();

  auto* tensor = app.add_subcommand("tensor", "decompose a tensor product of irreducibles");
  tensor->add_option("args", tensor_args, "group spec tokens, then two weights")->required();

  auto* express = app.add_subcommand("express", "write ch E(lambda) in the Hilbert generators");
  express->add_option("args", express_args, "group spec tokens, then a weight")->required();

  auto* ce = app.add_subcommand("counterexample",
                                "Killing-coefficient counterexample report");
  ce->add_option("kind", ce_kind, "pgl3 or product");
  ce->add_option("--a", ce_a, "first parameter (rational, e.g. 1/7)");
  ce->add_option("--b", ce_b, "second parameter (rational)");

  auto* suite = app.add_subcommand("paper-suite", "run every reproduction check");
  suite->add_flag("--corrupt-cartan", corrupt_cartan,
                  "negative control: corrupt the A2 Cartan matrix")
      ->group("");  // hidden test hook

  std::vector<const char*> argv;
  argv.push_back("repring");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(info)) return cmd_info(ctx, join_spec(info_spec), out);
    if (app.got_subcommand(center)) return cmd_center(ctx, center_type, out);
    if (app.got_subcommand(hilbert)) return cmd_hilbert(ctx, join_spec(hilbert_spec), out);
    if (app.got_subcommand(tensor)) {
      if (tensor_args.size() < 3)
        throw DomainError("tensor needs a group spec and two weights");
      std::string rhs = tensor_args.back();
      std::string lhs = tensor_args[tensor_args.size() - 2];
      std::vector<std::string> spec(tensor_args.begin(), tensor_args.end() - 2);
      return cmd_tensor(ctx, join_spec(spec), lhs, rhs, out);
    }
    if (app.got_subcommand(express)) {
      if (express_args.size() < 2)
        throw DomainError("express needs a group spec and a weight");
      std::string lambda = express_args.back();
      std::vector<std::string> spec(express_args.begin(), express_args.end() - 1);
      return cmd_express(ctx, join_spec(spec), lambda, out);
    }
    if (app.got_subcommand(ce)) return cmd_counterexample(ctx, ce_kind, ce_a, ce_b, out);
    if (app.got_subcommand(suite)) return cmd_paper_suite(ctx, corrupt_cartan, out);
    throw DomainError("no subcommand given");
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace repring::cli
