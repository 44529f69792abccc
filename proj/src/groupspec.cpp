#include "repring/groupspec.hpp"

#include <algorithm>
#include <sstream>

#include "repring/errors.hpp"

namespace repring {

std::string GroupSpec::str() const {
  std::string s = type.name();
  switch (isogeny) {
    case Isogeny::SimplyConnected:
      s += " sc";
      break;
    case Isogeny::Adjoint:
      s += " adjoint";
      break;
    case Isogeny::SpecialOrthogonal:
      s += " so";
      break;
    case Isogeny::HalfSpin:
      s += " halfspin";
      break;
    case Isogeny::Explicit: {
      s += " z=";
      for (std::size_t g = 0; g < explicit_generators.size(); ++g) {
        if (g) s += ';';
        const auto& exps = explicit_generators[g].exps;
        for (std::size_t i = 0; i < exps.size(); ++i) {
          if (i) s += ',';
          s += exps[i].str();
        }
      }
      break;
    }
  }
  return s;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  std::istringstream in(text);
  std::string type_token, iso_token, extra;
  if (!(in >> type_token))
    throw DomainError("empty group spec");
  GroupSpec spec;
  spec.type = parse_semisimple_type(type_token);
  if (in >> iso_token) {
    if (iso_token == "sc") {
      spec.isogeny = GroupSpec::Isogeny::SimplyConnected;
    } else if (iso_token == "adjoint") {
      spec.isogeny = GroupSpec::Isogeny::Adjoint;
    } else if (iso_token == "so") {
      spec.isogeny = GroupSpec::Isogeny::SpecialOrthogonal;
    } else if (iso_token == "halfspin") {
      spec.isogeny = GroupSpec::Isogeny::HalfSpin;
    } else if (iso_token.rfind("z=", 0) == 0) {
      spec.isogeny = GroupSpec::Isogeny::Explicit;
      std::string body = iso_token.substr(2);
      if (body.empty())
        throw DomainError("empty generator list after 'z=' in '" + text + "'");
      for (const std::string& tuple : split(body, ';')) {
        TorusPoint p;
        for (const std::string& entry : split(tuple, ','))
          p.exps.push_back(parse_rational(entry).mod1());
        if (static_cast<int>(p.exps.size()) != spec.type.rank())
          throw DomainError("generator '" + tuple + "' has " +
                            std::to_string(p.exps.size()) + " entries; rank is " +
                            std::to_string(spec.type.rank()));
        spec.explicit_generators.push_back(std::move(p));
      }
    } else {
      throw DomainError("unknown isogeny selector '" + iso_token + "' at position " +
                        std::to_string(text.find(iso_token)) + " in '" + text + "'");
    }
  }
  if (in >> extra)
    throw DomainError("unexpected token '" + extra + "' at position " +
                      std::to_string(text.find(extra)) + " in '" + text + "'");

  if (spec.isogeny == GroupSpec::Isogeny::SpecialOrthogonal ||
      spec.isogeny == GroupSpec::Isogeny::HalfSpin) {
    if (spec.type.factors.size() != 1)
      throw DomainError("named quotient '" + iso_token + "' needs a single simple factor");
    const SimpleType& f = spec.type.factors[0];
    if (spec.isogeny == GroupSpec::Isogeny::SpecialOrthogonal) {
      bool ok = f.series == Series::B || f.series == Series::D ||
                (f.series == Series::A && f.rank == 1);  // B1 = A1
      if (!ok) throw DomainError("'so' is defined for types B and D only");
    } else {
      if (f.series != Series::D || f.rank % 2 != 0)
        throw DomainError("'halfspin' is defined for type D with even rank only");
    }
  }
  return spec;
}

CenterSubgroup center_of(const GroupSpec& spec) {
  switch (spec.isogeny) {
    case GroupSpec::Isogeny::SimplyConnected:
      return trivial_center_subgroup(spec.type);
    case GroupSpec::Isogeny::Adjoint:
      return center_subgroup(spec.type);
    case GroupSpec::Isogeny::Explicit:
      return make_center_subgroup(spec.type, spec.explicit_generators);
    case GroupSpec::Isogeny::SpecialOrthogonal: {
      const SimpleType& f = spec.type.factors[0];
      if (f.series != Series::D) return center_subgroup(spec.type);  // SO_{2r+1}: adjoint
      // SO_{2r}: the kernel of w_1 on the center
      CenterSubgroup full = center_subgroup(spec.type);
      Weight w1(spec.type.rank(), 0);
      w1[0] = 1;
      std::vector<TorusPoint> kept;
      for (const auto& el : full.elements)
        if (pairing(el, w1).is_zero()) kept.push_back(el);
      return make_center_subgroup(spec.type, kept);
    }
    case GroupSpec::Isogeny::HalfSpin: {
      CenterSubgroup full = center_subgroup(spec.type);
      Weight wr(spec.type.rank(), 0);
      wr[spec.type.rank() - 1] = 1;
      std::vector<TorusPoint> kept;
      for (const auto& el : full.elements)
        if (pairing(el, wr).is_zero()) kept.push_back(el);
      return make_center_subgroup(spec.type, kept);
    }
  }
  throw InternalError("unhandled isogeny selector");
}

Weight parse_weight(const std::string& text, int rank) {
  Weight w;
  for (const std::string& entry : split(text, ',')) {
    if (entry.empty() ||
        entry.find_first_not_of("-0123456789") != std::string::npos)
      throw DomainError("bad weight entry '" + entry + "' in '" + text + "'");
    w.push_back(std::stoll(entry));
  }
  if (static_cast<int>(w.size()) != rank)
    throw DomainError("weight '" + text + "' has " + std::to_string(w.size()) +
                      " entries; rank is " + std::to_string(rank));
  return w;
}

}  // namespace repring
