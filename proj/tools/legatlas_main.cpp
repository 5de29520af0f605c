// legatlas: exact-arithmetic verification of the homogeneous Legendrian
// variety tables, plus small calculators for the underlying quantities.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "legatlas/atlas.hpp"
#include "legatlas/exactmat.hpp"
#include "legatlas/folding.hpp"
#include "legatlas/niporb.hpp"
#include "legatlas/repdim.hpp"
#include "legatlas/rootsys.hpp"

namespace {

using namespace legatlas;

// Parse a reductive type like "A5", "C3+G2", "so(12)", "sl(4)", "sp(6)",
// "A1+so(7)", "T2".
ReductiveType parse_type(const std::string& text) {
  ReductiveType out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '+')) {
    if (part.empty()) throw ParseError("empty factor in type '" + text + "'");
    auto parse_n = [&](const std::string& s) {
      size_t open = s.find('(');
      size_t close = s.find(')');
      if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("expected '" + s + "' to look like so(n)");
      return std::stoll(s.substr(open + 1, close - open - 1));
    };
    if (part.rfind("so", 0) == 0 && part.find('(') != std::string::npos) {
      ReductiveType t = so_type(parse_n(part));
      out.factors.insert(out.factors.end(), t.factors.begin(), t.factors.end());
      out.torus_rank += t.torus_rank;
    } else if (part.rfind("sl", 0) == 0 && part.find('(') != std::string::npos) {
      out.factors.push_back(sl_type(parse_n(part)));
    } else if (part.rfind("sp", 0) == 0 && part.find('(') != std::string::npos) {
      out.factors.push_back(sp_type(parse_n(part)));
    } else if (part[0] == 'T') {
      out.torus_rank += std::stoi(part.substr(1));
    } else {
      char fam = part[0];
      int rank = std::stoi(part.substr(1));
      out.factors.emplace_back(static_cast<Family>(fam), rank);
    }
  }
  return out;
}

// Parse a weight "a,b,c;d,e" (components per factor separated by ';').
Weight parse_weight(const ReductiveType& type, const std::string& text, Basis basis) {
  Weight w;
  w.basis = basis;
  std::istringstream in(text);
  std::string factor_part;
  while (std::getline(in, factor_part, ';')) {
    std::vector<Rat> comp;
    std::istringstream fs(factor_part);
    std::string num;
    while (std::getline(fs, num, ',')) {
      Rat q(num);
      q.canonicalize();
      comp.push_back(q);
    }
    w.by_factor.push_back(std::move(comp));
  }
  check_weight_shape(type, w);
  return w;
}

Partition parse_partition(const std::string& text) {
  // "[3,2,2]" or "3,2,2".
  std::string t = text;
  if (!t.empty() && t.front() == '[') t = t.substr(1);
  if (!t.empty() && t.back() == ']') t.pop_back();
  Partition p;
  std::istringstream in(t);
  std::string num;
  while (std::getline(in, num, ',')) p.push_back(std::stoll(num));
  return p;
}

std::vector<RawRecord> load_tables(const std::string& data_dir,
                                   const std::vector<int>& tables) {
  std::vector<RawRecord> records;
  auto files = bundled_tables();
  for (int t : tables) {
    std::string file = data_dir + "/" + files[static_cast<size_t>(t)];
    auto batch = load_dataset(file);
    records.insert(records.end(), batch.begin(), batch.end());
  }
  return records;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json out;
  out["pass"] = report.pass_count;
  out["fail"] = report.fail_count;
  out["rows"] = nlohmann::json::array();
  for (const auto& pr : report.reports) {
    nlohmann::json row;
    row["id"] = pr.id;
    row["passed"] = pr.passed();
    row["checks"] = nlohmann::json::array();
    for (const auto& c : pr.checks) {
      if (!c.applicable) continue;
      row["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out["rows"].push_back(std::move(row));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the homogeneous Legendrian variety tables"};
  app.require_subcommand(1);

  std::string data_dir = default_data_dir();
  app.add_option("--data", data_dir, "dataset directory");

  // verify-tables
  auto* vt = app.add_subcommand("verify-tables", "re-derive every table row");
  int table_no = 0;
  bool as_json = false;
  int params_max = 5;
  vt->add_option("--table", table_no, "restrict to one table (1-4)")->check(CLI::Range(1, 4));
  vt->add_flag("--json", as_json, "machine-readable report");
  vt->add_option("--params-max", params_max,
                 "expand each family parameter from its minimum through minimum + K");

  // verify-theorems
  auto* vth = app.add_subcommand("verify-theorems",
                                 "match Legendrian rows against the classification lists");

  // dim-orbit
  auto* dorb = app.add_subcommand("dim-orbit", "nilpotent orbit dimension from a partition");
  std::string alg_name, partition_text;
  long long orbit_n = 0;
  dorb->add_option("--algebra", alg_name, "sl, so or sp")->required();
  dorb->add_option("--n", orbit_n, "matrix size")->required();
  dorb->add_option("--partition", partition_text, "Jordan type, e.g. 3,2,2")->required();

  // weyl-dim
  auto* wd = app.add_subcommand("weyl-dim", "irreducible representation dimension");
  std::string type_text, weight_text;
  wd->add_option("--type", type_text, "reductive type, e.g. C3+G2 or so(7)")->required();
  wd->add_option("--weight", weight_text,
                 "fundamental coordinates, factors separated by ';'")->required();

  // z-dim
  auto* zd = app.add_subcommand("z-dim", "dimension of the projectivized orbit Z in P(g)");
  std::string z_type_text, z_label_text;
  zd->add_option("--type", z_type_text, "ambient simple type, e.g. B3")->required();
  zd->add_option("--label", z_label_text,
                 "long | short | 2A1 | min+min | a partition like [3,2,2]")->required();

  // jordan
  auto* jd = app.add_subcommand("jordan", "Jordan type of a nilpotent matrix");
  std::string matrix_file, witness_name;
  int witness_param = 0;
  jd->add_option("--file", matrix_file, "plain-text matrix ('-' for stdin)");
  jd->add_option("--witness", witness_name, "built-in witness: sl-fold, so-standard, b3-g2");
  jd->add_option("--param", witness_param, "witness parameter (l or n)");

  // fold
  auto* fd = app.add_subcommand("fold", "diagram folding: restrict a root or list a fiber");
  std::string fold_name, root_text, fiber_text;
  int fold_param = 0;
  fd->add_option("--name", fold_name,
                 "a-to-c | d-to-b | e6-to-f4 | d4-to-g2 | b3-to-g2")->required();
  fd->add_option("--param", fold_param, "l resp. p for the parametric foldings");
  fd->add_option("--restrict", root_text, "source root, simple-root coordinates a,b,...");
  fd->add_option("--fiber", fiber_text, "target vector, simple-root coordinates a,b,...");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*vt) {
      std::vector<int> tables = table_no ? std::vector<int>{table_no - 1}
                                         : std::vector<int>{0, 1, 2, 3, 4};
      ExpandPolicy policy;
      policy.span = params_max;
      auto report = verify_tables(load_tables(data_dir, tables), policy);
      if (as_json) {
        std::cout << report_to_json(report).dump(2) << "\n";
      } else {
        for (const auto& pr : report.reports) {
          if (pr.passed()) continue;
          std::cout << "FAIL " << pr.id << "\n";
          for (const auto& c : pr.checks)
            if (c.applicable && !c.passed)
              std::cout << "  " << c.name << ": " << c.detail << "\n";
        }
        std::cout << report.pass_count << " rows passed, " << report.fail_count
                  << " failed\n";
      }
      return report.all_passed() ? 0 : 1;
    }

    if (*vth) {
      auto records = load_tables(data_dir, {0, 1, 2, 3, 4});
      std::vector<PairInstance> instances;
      for (const auto& rec : records) {
        auto batch = expand_record(rec);
        instances.insert(instances.end(), batch.begin(), batch.end());
      }
      auto report = verify_theorems(instances);
      for (const auto& p : report.problems) std::cout << "MISMATCH " << p << "\n";
      for (const auto& [item, count] : report.item_counts)
        if (count > 0) std::cout << item << ": " << count << " instance(s)\n";
      std::cout << (report.passed ? "classification lists match the dataset\n"
                                  : "classification lists do NOT match\n");
      return report.passed ? 0 : 1;
    }

    if (*dorb) {
      MatrixAlgebra alg = alg_name == "sl"   ? MatrixAlgebra::sl
                          : alg_name == "so" ? MatrixAlgebra::so
                                             : MatrixAlgebra::sp;
      if (alg_name != "sl" && alg_name != "so" && alg_name != "sp")
        throw ParseError("unknown algebra '" + alg_name + "'");
      Partition p = parse_partition(partition_text);
      long long d = classical_orbit_dim(alg, orbit_n, p);
      std::cout << "orbit dim " << d << " (projectivized " << d - 1 << ")\n";
      return 0;
    }

    if (*wd) {
      ReductiveType type = parse_type(type_text);
      Weight w = parse_weight(type, weight_text, Basis::FundamentalWeight);
      std::cout << weyl_dim(type, w).get_str() << "\n";
      return 0;
    }

    if (*zd) {
      ReductiveType g = parse_type(z_type_text);
      OrbitLabel label;
      if (z_label_text == "long") label = OrbitLabel::long_label();
      else if (z_label_text == "short") label = OrbitLabel::short_label();
      else if (z_label_text == "min+min") label = OrbitLabel::min_plus_min();
      else if (!z_label_text.empty() && z_label_text.front() == '[') {
        Partition p = parse_partition(z_label_text);
        long long n = 0;
        for (long long part : p) n += part;
        MatrixAlgebra alg;
        SimpleType t = g.factors.at(0);
        if (t.family == Family::A) alg = MatrixAlgebra::sl;
        else if (t.family == Family::C) alg = MatrixAlgebra::sp;
        else alg = MatrixAlgebra::so;
        label = OrbitLabel::partition_label(alg, n, p);
      } else {
        label = OrbitLabel::bala_carter(z_label_text);
      }
      std::cout << z_dim_from_label(g, label) << "\n";
      return 0;
    }

    if (*jd) {
      ExactMatrix m(1);
      if (!witness_name.empty()) {
        WitnessKind kind;
        if (witness_name == "sl-fold") kind = WitnessKind::SL_fold;
        else if (witness_name == "so-standard") kind = WitnessKind::SO_standard;
        else if (witness_name == "b3-g2") kind = WitnessKind::B3_G2;
        else throw ParseError("unknown witness '" + witness_name + "'");
        m = build_witness(kind, witness_param);
      } else if (!matrix_file.empty()) {
        if (matrix_file == "-") {
          m = parse_matrix(std::cin);
        } else {
          std::ifstream in(matrix_file);
          if (!in) throw ParseError("cannot open " + matrix_file);
          m = parse_matrix(in);
        }
      } else {
        throw ParseError("jordan needs --file or --witness");
      }
      Partition p = m.jordan_type();
      std::cout << "rank " << m.rank() << ", Jordan type [";
      for (size_t i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << p[i];
      std::cout << "]\n";
      return 0;
    }

    if (*fd) {
      FoldingMap map;
      if (fold_name == "a-to-c") map = builtin_folding(FoldingName::A2lm1_to_Cl, fold_param);
      else if (fold_name == "d-to-b") map = builtin_folding(FoldingName::Dpp1_to_Bp, fold_param);
      else if (fold_name == "e6-to-f4") map = builtin_folding(FoldingName::E6_to_F4);
      else if (fold_name == "d4-to-g2") map = builtin_folding(FoldingName::D4_to_G2);
      else if (fold_name == "b3-to-g2") map = builtin_folding(FoldingName::B3_to_G2);
      else throw ParseError("unknown folding '" + fold_name + "'");
      auto parse_coords = [](const std::string& s) {
        RootCoords c;
        std::istringstream in(s);
        std::string num;
        while (std::getline(in, num, ',')) c.push_back(std::stoi(num));
        return c;
      };
      auto print_coords = [](const RootCoords& c) {
        std::cout << "(";
        for (size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "") << c[i];
        std::cout << ")";
      };
      if (!root_text.empty()) {
        print_coords(restrict_root(map, parse_coords(root_text)));
        std::cout << "\n";
      } else if (!fiber_text.empty()) {
        auto fiber = fiber_over(map, parse_coords(fiber_text));
        for (const auto& beta : fiber) {
          print_coords(beta);
          std::cout << "\n";
        }
        std::cout << fiber.size() << " source root(s)\n";
      } else {
        throw ParseError("fold needs --restrict or --fiber");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
