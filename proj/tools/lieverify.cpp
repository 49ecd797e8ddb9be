// Command-line front end: run the verification suite, or query dimensions,
// branching, torsion classes and cancellation sums ad hoc.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or I/O error.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lie/models.hpp"

namespace {

using namespace lie;

std::string datum_descriptor(const std::string& type, const std::string& isogeny) {
  if (isogeny == ".") return type;  // full descriptor passed through
  if (isogeny != "sc" && isogeny != "ad")
    throw CLI::ValidationError("isogeny must be sc, ad, or . for a raw descriptor");
  // apply the isogeny to each simple factor: "C3xA1" -> "C3scxA1sc"
  std::string out;
  std::string atom;
  auto flush = [&] {
    if (!atom.empty()) out += atom + isogeny;
    atom.clear();
  };
  for (char c : type) {
    if (c == 'x') {
      flush();
      out += 'x';
    } else
      atom += c;
  }
  flush();
  return out;
}

IVec parse_weight(const RootDatum& d, const std::string& s) {
  if (s.rfind("omega", 0) == 0 || (s.size() > 1 && s[0] == 'w' && isdigit(s[1]))) {
    size_t skip = s[0] == 'o' ? 5 : 1;
    int node = std::stoi(s.substr(skip));
    if (node < 1 || node > static_cast<int>(d.semisimple_rank()))
      throw CLI::ValidationError("fundamental weight index out of range");
    IVec pattern(d.semisimple_rank(), 0);
    pattern[node - 1] = 1;
    return resolve_weight(d, pattern);
  }
  IVec v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) v.push_back(std::stoll(cur));
      cur.clear();
    } else
      cur += c;
  }
  if (v.size() != d.rank()) throw CLI::ValidationError("weight has wrong length");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie-theoretic verification engine"};
  app.require_subcommand(1);

  auto* vall = app.add_subcommand("verify-all", "run the verification suite");
  std::vector<std::string> models;
  std::string format = "markdown", out_path, config_path;
  bool list_models = false;
  vall->add_option("--model", models, "restrict to the named models");
  vall->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  vall->add_option("--out", out_path, "write the report to a file");
  vall->add_option("--config", config_path, "load additional model specs (JSON)");
  vall->add_flag("--list-models", list_models, "list registered models and exit");

  auto* dim = app.add_subcommand("dim", "dimension of an irreducible representation");
  std::string dim_type, dim_iso, dim_weight;
  dim->add_option("type", dim_type, "Cartan type, e.g. E7 or C3xA1, or a descriptor")
      ->required();
  dim->add_option("isogeny", dim_iso, "sc, ad, or . for a raw descriptor")->required();
  dim->add_option("weight", dim_weight, "omega<k> or comma-separated coordinates")
      ->required();

  auto* br = app.add_subcommand("branch", "branch a representation to a Levi subgroup");
  std::string br_type, br_iso, br_subset, br_weight;
  br->add_option("type", br_type)->required();
  br->add_option("isogeny", br_iso)->required();
  br->add_option("subset", br_subset, "comma-separated simple-root nodes (1-based)")
      ->required();
  br->add_option("weight", br_weight)->required();

  auto* tor = app.add_subcommand("torsion", "classes of torsion elements");
  std::string tor_type, tor_iso;
  lie::i64 tor_order = 1;
  tor->add_option("type", tor_type)->required();
  tor->add_option("isogeny", tor_iso)->required();
  tor->add_option("order", tor_order, "adjoint order bound")->required();

  auto* can =
      app.add_subcommand("cancel", "transfer-sign cancellation table for a stable shape");
  std::string can_shape;
  int can_eta = 0;
  can->add_option("shape", can_shape, "e.g. \"E(a1),E(a2)|E(b1),E(b2)\"")->required();
  can->add_option("--eta", can_eta, "restrict to one branch (+1 or -1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*vall) {
      if (list_models) {
        for (auto& m : builtin_models())
          std::cout << m.name << (m.table_row ? "" : " (auxiliary)") << "\n";
        return 0;
      }
      std::vector<ModelSpec> extra;
      if (!config_path.empty()) extra = load_models_config(config_path);
      VerificationReport rep = verify_all(models, extra);
      std::string text = (format == "json") ? rep.to_json() : rep.to_markdown();
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return 2;
        }
      }
      return rep.ok() ? 0 : 1;
    }
    if (*dim) {
      RootDatum d = RootDatum::parse(datum_descriptor(dim_type, dim_iso));
      std::cout << dim_weyl(d, parse_weight(d, dim_weight)) << "\n";
      return 0;
    }
    if (*br) {
      RootDatum d = RootDatum::parse(datum_descriptor(br_type, br_iso));
      std::vector<int> subset;
      std::string cur;
      for (char c : br_subset + ",") {
        if (c == ',') {
          if (!cur.empty()) subset.push_back(std::stoi(cur) - 1);
          cur.clear();
        } else
          cur += c;
      }
      LatticeMap map = levi_map(d, subset);
      auto chi = irrep_character(d, parse_weight(d, br_weight));
      std::cout << branch_table(branch(chi, map), *map.source);
      return 0;
    }
    if (*tor) {
      RootDatum d = RootDatum::parse(datum_descriptor(tor_type, tor_iso));
      std::cout << torsion_table(d, tor_order);
      return 0;
    }
    if (*can) {
      StableClass st = parse_stable_shape(can_shape);
      bool ok = true;
      for (int eta : {+1, -1}) {
        if (can_eta != 0 && eta != can_eta) continue;
        auto qs = rational_classes(st, Side::QuasiSplit, eta);
        auto in = rational_classes(st, Side::InnerForms, eta);
        for (auto& m : stable_matches(st)) {
          lie::i64 sum = 0;
          for (auto& c : qs) sum += transfer_sign(c, m);
          for (auto& c : in) sum -= transfer_sign(c, m);
          std::cout << can_shape << "  eta=" << (eta > 0 ? "+1" : "-1")
                    << "  match=" << m.gprime_label << "  sum=" << sum << "\n";
          if (sum != 0) ok = false;
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
