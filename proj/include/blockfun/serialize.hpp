#pragma once

#include <sstream>

#include <json.hpp>

#include "blockfun/multiplicity.hpp"

namespace blockfun {

using nlohmann::json;

inline Family family_from_name(const std::string& s) {
  if (s == "dihedral") return Family::dihedral;
  if (s == "quaternion") return Family::quaternion;
  if (s == "semidihedral") return Family::semidihedral;
  if (s == "cyclic") return Family::cyclic;
  if (s == "klein_four") return Family::klein_four;
  throw std::invalid_argument("unknown family: " + s);
}

inline FusionLabel fusion_label_from_name(const std::string& s) {
  if (s == "F00") return FusionLabel::F00;
  if (s == "F01") return FusionLabel::F01;
  if (s == "F10") return FusionLabel::F10;
  if (s == "F11") return FusionLabel::F11;
  throw std::invalid_argument("unknown fusion label: " + s);
}

inline IsoTag iso_tag_from_name(const std::string& s) {
  for (IsoTag t : {IsoTag::trivial, IsoTag::cyclic, IsoTag::klein_four, IsoTag::dihedral,
                   IsoTag::quaternion, IsoTag::semidihedral, IsoTag::other})
    if (s == iso_tag_name(t)) return t;
  throw std::invalid_argument("unknown iso type: " + s);
}

inline const char* module_kind_name(SimpleModuleLabel::Kind k) {
  switch (k) {
    case SimpleModuleLabel::abelian_character: return "abelian_character";
    case SimpleModuleLabel::s3_trivial: return "s3_trivial";
    case SimpleModuleLabel::s3_sign: return "s3_sign";
    case SimpleModuleLabel::s3_std2: return "s3_std2";
  }
  return "?";
}

inline SimpleModuleLabel::Kind module_kind_from_name(const std::string& s) {
  if (s == "abelian_character") return SimpleModuleLabel::abelian_character;
  if (s == "s3_trivial") return SimpleModuleLabel::s3_trivial;
  if (s == "s3_sign") return SimpleModuleLabel::s3_sign;
  if (s == "s3_std2") return SimpleModuleLabel::s3_std2;
  throw std::invalid_argument("unknown module kind: " + s);
}

inline json label_to_json(const SimpleFunctorLabel& lab) {
  json v;
  v["kind"] = module_kind_name(lab.module.kind);
  v["exponents"] = lab.module.exponents;
  return json{{"L", {{"type", iso_tag_name(lab.pair.L.tag)}, {"order", lab.pair.L.order}}},
              {"u", u_part_name(lab.pair.u)},
              {"V", v}};
}

inline SimpleFunctorLabel label_from_json(const json& j) {
  SimpleFunctorLabel lab;
  lab.pair.L.tag = iso_tag_from_name(j.at("L").at("type").get<std::string>());
  lab.pair.L.order = j.at("L").at("order").get<int>();
  std::string u = j.at("u").get<std::string>();
  if (u != "1" && u != "u0") throw std::invalid_argument("bad u part: " + u);
  lab.pair.u = u == "1" ? UPart::one : UPart::u0;
  lab.module.kind = module_kind_from_name(j.at("V").at("kind").get<std::string>());
  lab.module.exponents = j.at("V").at("exponents").get<std::vector<int>>();
  lab.module.dim = lab.module.kind == SimpleModuleLabel::s3_std2 ? 2 : 1;
  return lab;
}

inline json table_to_json(const DecompositionTable& t) {
  json entries = json::array();
  for (const auto& [lab, m] : t.entries) {
    json e = label_to_json(lab);
    e["m"] = m;
    entries.push_back(std::move(e));
  }
  return json{{"family", family_name(t.family.tag)},
              {"n", t.family.n},
              {"fusion", fusion_label_name(t.label)},
              {"entries", std::move(entries)}};
}

inline DecompositionTable table_from_json(const json& j) {
  DecompositionTable t;
  t.family.tag = family_from_name(j.at("family").get<std::string>());
  t.family.n = j.at("n").get<int>();
  t.label = fusion_label_from_name(j.at("fusion").get<std::string>());
  for (const json& e : j.at("entries"))
    t.entries[label_from_json(e)] = e.at("m").get<long>();
  return t;
}

inline std::string table_to_csv(const DecompositionTable& t) {
  std::ostringstream os;
  os << "family,n,fusion,L_type,L_order,u,V_kind,V_exponents,m\n";
  for (const auto& [lab, m] : t.entries) {
    os << family_name(t.family.tag) << ',' << t.family.n << ','
       << fusion_label_name(t.label) << ',' << iso_tag_name(lab.pair.L.tag) << ','
       << lab.pair.L.order << ',' << u_part_name(lab.pair.u) << ','
       << module_kind_name(lab.module.kind) << ',';
    for (size_t i = 0; i < lab.module.exponents.size(); ++i)
      os << (i ? ";" : "") << lab.module.exponents[i];
    os << ',' << m << '\n';
  }
  return os.str();
}

/// Human-readable table, grouped by L.
inline std::string table_to_text(const DecompositionTable& t) {
  std::ostringstream os;
  os << "decomposition " << family_name(t.family.tag) << " n=" << t.family.n
     << " fusion=" << fusion_label_name(t.label) << "\n";
  IsoType current{IsoTag::other, -1};
  for (const auto& [lab, m] : t.entries) {
    if (!(lab.pair.L == current)) {
      current = lab.pair.L;
      os << "L = " << iso_tag_name(current.tag) << " of order " << current.order << "\n";
    }
    os << "  m(u=" << u_part_name(lab.pair.u) << ", V=" << lab.module.str()
       << ") = " << m << "\n";
  }
  return os.str();
}

}  // namespace blockfun
