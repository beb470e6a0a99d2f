#pragma once

#include <iostream>

#include <CLI11.hpp>

#include "blockfun/oracle.hpp"

namespace blockfun {

struct BlockSpec {
  FamilyId family{Family::dihedral, 3};
  std::optional<FusionLabel> fusion;
};

/// Parses "family:n" or "family:n:label" and validates family constraints.
inline BlockSpec parse_block_spec(const std::string& text, bool need_fusion) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(':', pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() != (need_fusion ? 3u : 2u))
    throw std::invalid_argument("spec must be family:n" +
                                std::string(need_fusion ? ":label" : "") + ", got '" +
                                text + "'");
  BlockSpec spec;
  spec.family.tag = family_from_name(parts[0]);
  if (spec.family.tag != Family::dihedral && spec.family.tag != Family::quaternion &&
      spec.family.tag != Family::semidihedral)
    throw std::invalid_argument("family must be dihedral, quaternion or semidihedral");
  try {
    spec.family.n = std::stoi(parts[1]);
  } catch (...) {
    throw std::invalid_argument("bad group order exponent '" + parts[1] + "'");
  }
  if (spec.family.tag == Family::quaternion && spec.family.n == 3)
    throw std::invalid_argument(
        "quaternion:3 (Q8 defect) is deferred to prior work and not supported");
  spec.family.validate();
  if (need_fusion) {
    spec.fusion = fusion_label_from_name(parts[2]);
    if (*spec.fusion == FusionLabel::F10 && spec.family.tag != Family::semidihedral)
      throw std::invalid_argument(
          "fusion label F10 exists only for the semidihedral family");
  }
  return spec;
}

namespace cli_detail {

inline void require_aut_range(const FamilyId& f) {
  if (f.order() > kMaxAutOrder)
    throw std::invalid_argument("group order " + std::to_string(f.order()) +
                                " exceeds the automorphism engine cap of 256 (n <= 8)");
}

inline json taxonomy_json(const BlockSpec& spec) {
  auto data = make_group_data(spec.family);
  const SubgroupClasses& sc = data->classes;
  json classes = json::array();
  for (size_t c = 0; c < sc.classes.size(); ++c) {
    const Subgroup& rep = sc.subgroups[sc.rep[c]];
    IsoType t = iso_type(rep);
    int norm_class = sc.class_of[sc.id_of(normalizer(data->group, rep))];
    classes.push_back({{"label", data->tax[c].str()},
                       {"order", rep.order()},
                       {"iso", iso_tag_name(t.tag)},
                       {"class_size", sc.classes[c].size()},
                       {"normalizer", data->tax[norm_class].str()}});
  }
  return json{{"family", family_name(spec.family.tag)},
              {"n", spec.family.n},
              {"classes", std::move(classes)}};
}

inline json fusion_json(const BlockSpec& spec) {
  auto data = make_group_data(spec.family);
  FusionSystem fs = build_fusion(spec.family, *spec.fusion, data);
  json classes = json::array();
  for (size_t c = 0; c < fs.f_classes.size(); ++c) {
    IsoType t = iso_type(fs.subgroup(fs.f_rep[c]));
    std::set<std::string> members;
    for (int id : fs.f_classes[c]) members.insert(data->tax[data->classes.class_of[id]].str());
    classes.push_back({{"iso", iso_tag_name(t.tag)},
                       {"order", t.order},
                       {"subgroups", fs.f_classes[c].size()},
                       {"out_f", out_f(fs, fs.f_rep[c]).out_order},
                       {"members", std::vector<std::string>(members.begin(), members.end())}});
  }
  return json{{"family", family_name(spec.family.tag)},
              {"n", spec.family.n},
              {"fusion", fusion_label_name(*spec.fusion)},
              {"f_classes", std::move(classes)}};
}

inline int cmd_verify(int max_n, const std::string& golden_path, std::ostream& out) {
  GoldenTable golden = load_golden(golden_path);
  PairCache cache;
  bool all_ok = true;
  auto note = [&](const std::string& line, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << line << "\n";
    if (!ok) all_ok = false;
  };

  struct FamRange {
    Family tag;
    int n_min;
  };
  for (FamRange fr : {FamRange{Family::dihedral, 3}, FamRange{Family::quaternion, 4},
                      FamRange{Family::semidihedral, 4}}) {
    for (int n = fr.n_min; n <= max_n; ++n) {
      FamilyId f{fr.tag, n};
      if (f.order() > kMaxAutOrder) continue;
      auto data = make_group_data(f);

      for (std::string err : check_automorphism_structure(f))
        note("structure " + err, false);
      for (std::string err : check_taxonomy(f))
        note("taxonomy " + err, false);
      note("structure+taxonomy " + std::string(family_name(f.tag)) + ":" +
               std::to_string(n),
           true);

      std::vector<FusionLabel> labels = fusion_labels_for(f.tag);
      std::vector<DecompositionTable> tables;
      std::vector<FusionSystem> systems;
      for (FusionLabel l : labels) {
        GoldenCellReport rep = verify_golden_cell(golden, f, l, data, cache);
        std::string cell = std::string(family_name(f.tag)) + ":" + std::to_string(n) +
                           ":" + fusion_label_name(l);
        for (const GoldenMismatch& mm : rep.mismatches)
          note("golden " + cell + " row " + mm.row_id + " at " + mm.label.str() +
                   ": expected " + std::to_string(mm.expected) + ", got " +
                   std::to_string(mm.actual),
               false);
        for (const std::string& err : rep.coverage_errors)
          note("golden " + cell + " " + err, false);
        if (rep.ok()) note("golden " + cell, true);
        systems.push_back(build_fusion(f, l, data));
        tables.push_back(decompose(systems.back(), cache));
      }
      bool matrix_ok = true;
      for (size_t a = 0; a < labels.size(); ++a)
        for (size_t b = 0; b < labels.size(); ++b)
          if (functorially_equivalent(tables[a], tables[b]) !=
              fusion_isomorphic(systems[a], systems[b]))
            matrix_ok = false;
      note("equivalence-matrix " + std::string(family_name(f.tag)) + ":" +
               std::to_string(n),
           matrix_ok);
    }
  }
  out << (all_ok ? "verify: all checks passed\n" : "verify: MISMATCHES FOUND\n");
  return all_ok ? 0 : 1;
}

}  // namespace cli_detail

/// Command-line entry point; returns the process exit code.
/// 0 = success / equivalent, 1 = not equivalent or verification mismatch,
/// 2 = usage error.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  CLI::App app{"block functor decomposition tables for dihedral, quaternion and "
               "semidihedral 2-groups"};
  app.require_subcommand(1);

  std::string spec_text, spec_b_text, format = "text";
  int max_n = 8;
  std::string golden_path = default_golden_path();

  CLI::App* c_tax = app.add_subcommand("taxonomy", "subgroup classes of a family group");
  c_tax->add_option("spec", spec_text, "family:n")->required();
  c_tax->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* c_fus = app.add_subcommand("fusion", "F-isomorphism classes and Out_F");
  c_fus->add_option("spec", spec_text, "family:n:label")->required();
  c_fus->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* c_dec = app.add_subcommand("decompose", "decomposition table of the block functor");
  c_dec->add_option("spec", spec_text, "family:n:label")->required();
  c_dec->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

  CLI::App* c_eq = app.add_subcommand("equivalent", "decide functorial equivalence of two blocks");
  c_eq->add_option("specA", spec_text, "family:n:label")->required();
  c_eq->add_option("specB", spec_b_text, "family:n:label")->required();

  CLI::App* c_ver = app.add_subcommand("verify", "golden tables + structural oracles");
  c_ver->add_option("--max-n", max_n, "largest order exponent (default 8)")
      ->check(CLI::Range(3, 8));
  c_ver->add_option("--golden", golden_path, "golden table file");

  std::vector<const char*> argv;
  argv.push_back("blockfun");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_tax->parsed()) {
      BlockSpec spec = parse_block_spec(spec_text, false);
      json j = cli_detail::taxonomy_json(spec);
      if (format == "json") {
        out << j.dump(2) << "\n";
      } else {
        out << "subgroup classes of " << family_name(spec.family.tag) << " n="
            << spec.family.n << "\n";
        for (const json& c : j["classes"])
          out << "  " << c["label"].get<std::string>() << ": order "
              << c["order"].get<int>() << ", " << c["iso"].get<std::string>()
              << ", class size " << c["class_size"].get<int>() << ", N = "
              << c["normalizer"].get<std::string>() << "\n";
      }
      return 0;
    }
    if (c_fus->parsed()) {
      BlockSpec spec = parse_block_spec(spec_text, true);
      cli_detail::require_aut_range(spec.family);
      json j = cli_detail::fusion_json(spec);
      if (format == "json") {
        out << j.dump(2) << "\n";
      } else {
        out << "F-classes of " << family_name(spec.family.tag) << " n=" << spec.family.n
            << " " << fusion_label_name(*spec.fusion) << "\n";
        for (const json& c : j["f_classes"]) {
          out << "  " << c["iso"].get<std::string>() << " of order "
              << c["order"].get<int>() << ": " << c["subgroups"].get<int>()
              << " subgroups, |Out_F| = " << c["out_f"].get<int>() << ", classes {";
          bool first = true;
          for (const json& m : c["members"]) {
            out << (first ? "" : ", ") << m.get<std::string>();
            first = false;
          }
          out << "}\n";
        }
      }
      return 0;
    }
    if (c_dec->parsed()) {
      BlockSpec spec = parse_block_spec(spec_text, true);
      cli_detail::require_aut_range(spec.family);
      PairCache cache;
      DecompositionTable t = decompose(build_fusion(spec.family, *spec.fusion), cache);
      if (format == "json")
        out << table_to_json(t).dump(2) << "\n";
      else if (format == "csv")
        out << table_to_csv(t);
      else
        out << table_to_text(t);
      return 0;
    }
    if (c_eq->parsed()) {
      BlockSpec a = parse_block_spec(spec_text, true);
      BlockSpec b = parse_block_spec(spec_b_text, true);
      cli_detail::require_aut_range(a.family);
      cli_detail::require_aut_range(b.family);
      PairCache cache;
      DecompositionTable ta = decompose(build_fusion(a.family, *a.fusion), cache);
      DecompositionTable tb = decompose(build_fusion(b.family, *b.fusion), cache);
      auto diff = first_difference(ta, tb);
      json verdict{{"equivalent", !diff.has_value()},
                   {"tables", {table_to_json(ta), table_to_json(tb)}}};
      if (diff) {
        verdict["first_difference"] = {{"label", label_to_json(diff->first)},
                                       {"a", diff->second.first},
                                       {"b", diff->second.second}};
      } else {
        verdict["first_difference"] = nullptr;
      }
      out << verdict.dump(2) << "\n";
      return diff ? 1 : 0;
    }
    if (c_ver->parsed()) return cli_detail::cmd_verify(max_n, golden_path, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace blockfun
