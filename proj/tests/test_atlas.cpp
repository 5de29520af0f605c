#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "legatlas/atlas.hpp"

using namespace legatlas;

namespace {

std::vector<RawRecord> load_table(const std::string& name) {
  return load_dataset(default_data_dir() + "/" + name);
}

const RawRecord& find_record(const std::vector<RawRecord>& recs, const std::string& id) {
  for (const auto& r : recs)
    if (r.id == id) return r;
  throw Error("record " + id + " not found");
}

std::vector<PairInstance> all_bundled_instances() {
  std::vector<PairInstance> out;
  for (const auto& name : bundled_tables())
    for (const auto& rec : load_table(name))
      for (auto& inst : expand_record(rec)) out.push_back(std::move(inst));
  return out;
}

// Write a one-off dataset to a temp file and return its path.
std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("expression evaluation") {
  Env env{{"p", 3}, {"q", 2}};
  CHECK(eval_expr("2*p*q-3", env) == 9);
  CHECK(eval_expr("(p+1)*(q-1)", env) == 4);
  CHECK(eval_expr("-p+10", env) == 7);
  CHECK(eval_expr("6/2", {}) == 3);
  CHECK(eval_expr("(p*p-p)/2-1", env) == 2);
  CHECK_THROWS_AS(eval_expr("7/2", {}), ParseError);   // division must be exact
  CHECK_THROWS_AS(eval_expr("1/0", {}), ParseError);
  CHECK_THROWS_AS(eval_expr("p+", env), ParseError);
  CHECK_THROWS_AS(eval_expr("r", env), ParseError);    // unbound name
}

TEST_CASE("condition evaluation") {
  Env env{{"p", 3}, {"q", 2}};
  CHECK(eval_condition("true", {}));
  CHECK(!eval_condition("false", {}));
  CHECK(eval_condition("q<=p,p*q>4", env));
  CHECK(!eval_condition("q<=p,p=q", env));
  CHECK(eval_condition("p!=q", env));
  CHECK(eval_condition("p>=3", env));
  CHECK_THROWS_AS(eval_condition("p~q", env), ParseError);
}

TEST_CASE("case-split expressions") {
  CasedExpr ce{{{"n=2", "4"}, {"n>=3", "6*n-10"}}};
  CHECK(ce.eval({{"n", 2}}, "t") == 4);
  CHECK(ce.eval({{"n", 5}}, "t") == 20);
  CHECK_THROWS_AS(ce.eval({{"n", 1}}, "t"), SchemaError);
}

TEST_CASE("bundled datasets load with the expected record counts") {
  CHECK(load_table("table1.jsonl").size() == 38);
  CHECK(load_table("table2.jsonl").size() == 12);
  CHECK(load_table("table3.jsonl").size() == 6);
  CHECK(load_table("table4.jsonl").size() == 7);
  CHECK(load_table("diag.jsonl").size() == 12);
}

TEST_CASE("malformed datasets are rejected") {
  CHECK_THROWS_AS(load_dataset("/nonexistent/path.jsonl"), ParseError);
  CHECK_THROWS_AS(load_dataset(write_temp("bad_json.jsonl", "not json\n")), ParseError);
  CHECK_THROWS_AS(
      load_dataset(write_temp("missing_field.jsonl", R"({"id":"X","source":"s"})" "\n")),
      SchemaError);
  CHECK_THROWS_AS(
      load_dataset(write_temp(
          "bad_label.jsonl",
          R"({"id":"X","source":"s","symmetric":false,"g":{"factors":[{"family":"A","rank":1}]},)"
          R"("h":{"factors":[{"family":"A","rank":1}]},"rho":[[{"node":1,"coeff":2}]],)"
          R"("dim_Om":1,"z":{"kind":"mystery"},"dim_Zm":1,"legendrian":true})" "\n")),
      SchemaError);
}

TEST_CASE("structural errors surface at expansion time") {
  // rho lists entries for two factors but h declares one.
  auto recs = load_dataset(write_temp(
      "bad_rho.jsonl",
      R"({"id":"X","source":"s","symmetric":false,"g":{"factors":[{"family":"A","rank":3}]},)"
      R"("h":{"factors":[{"family":"A","rank":1}]},"rho":[[{"node":1,"coeff":2}],[{"node":1,"coeff":1}]],)"
      R"("dim_Om":1,"z":{"kind":"long"},"dim_Zm":5,"legendrian":true})" "\n"));
  CHECK_THROWS_AS(expand_record(recs.at(0)), SchemaError);
}

TEST_CASE("parameter sweep with constraints") {
  auto recs = load_table("table1.jsonl");
  auto insts = expand_record(find_record(recs, "T1.01"));
  // p, q run over 2..7 with q <= p and pq > 4: 21 ordered pairs minus (2,2).
  CHECK(insts.size() == 20);
  for (const auto& inst : insts) {
    CHECK(inst.env.at("q") <= inst.env.at("p"));
    CHECK(inst.env.at("p") * inst.env.at("q") > 4);
  }
}

TEST_CASE("a parameter-free record expands to one instance") {
  auto recs = load_table("table1.jsonl");
  auto insts = expand_record(find_record(recs, "T1.06"));
  REQUIRE(insts.size() == 1);
  const PairInstance& inst = insts[0];
  CHECK(inst.id == "T1.06");
  CHECK(inst.dim_m_target() == 7);
  CHECK(inst.dim_Om == 1);
  CHECK(inst.dim_Zm == 3);
  CHECK(verify_pair(inst).passed());
}

TEST_CASE("case-split orbit dimensions instantiate per parameter value") {
  auto recs = load_table("table1.jsonl");
  auto insts = expand_record(find_record(recs, "T1.15"));
  REQUIRE(!insts.empty());
  for (const auto& inst : insts) {
    long long n = inst.env.at("n");
    CHECK(inst.dim_Om == (n == 2 ? 4 : 6 * n - 10));
    CHECK(verify_pair(inst).passed());
  }
}

TEST_CASE("the special-orbit row of so(7) over the exceptional subalgebra") {
  auto recs = load_table("table1.jsonl");
  auto insts = expand_record(find_record(recs, "T1.23"));
  REQUIRE(insts.size() == 1);
  const PairInstance& inst = insts[0];
  CHECK(inst.dim_m_target() == 7);
  CHECK(inst.dim_Om == 5);
  CHECK(inst.dim_Zm == 11);
  CHECK(inst.z.kind == LabelKind::ClassicalPartition);
  CHECK(inst.z.parts == Partition{3, 2, 2});
  PairReport report = verify_pair(inst);
  CHECK(report.passed());
  const CheckResult* leg = report.find("legendrian");
  REQUIRE(leg != nullptr);
  CHECK(leg->applicable);
  CHECK(leg->passed);
}

TEST_CASE("every bundled instance passes all checks") {
  for (const auto& name : bundled_tables()) {
    VerificationReport report = verify_tables(load_table(name));
    CHECK_MESSAGE(report.all_passed(), name);
    CHECK(report.fail_count == 0);
    CHECK(report.pass_count > 0);
  }
}

TEST_CASE("the classification lists match the bundled dataset") {
  auto insts = all_bundled_instances();
  TheoremReport report = verify_theorems(insts);
  CHECK_MESSAGE(report.passed, (report.problems.empty() ? "" : report.problems.front()));
  CHECK(report.item_counts.size() == 19);
  for (const auto& [tag, count] : report.item_counts) CHECK_MESSAGE(count > 0, tag);
}

TEST_CASE("relabeling a special orbit as the minimal orbit breaks the lists") {
  auto insts = all_bundled_instances();
  bool tampered = false;
  for (auto& inst : insts) {
    if (inst.record_id == "T1.23") {
      inst.z = OrbitLabel::long_label();
      tampered = true;
    }
  }
  REQUIRE(tampered);
  TheoremReport report = verify_theorems(insts);
  CHECK(!report.passed);
  CHECK(!report.problems.empty());
}

TEST_CASE("each fault fixture fails exactly its targeted check") {
  const std::vector<std::pair<std::string, std::string>> fixtures = {
      {"fault_repdim.jsonl", "rep-dim"},
      {"fault_orbitdim.jsonl", "orbit-dim"},
      {"fault_zdim.jsonl", "z-dim"},
      {"fault_legendrian.jsonl", "legendrian"},
      {"fault_root.jsonl", "root-trichotomy"},
      {"fault_ssum.jsonl", "coefficient-sum"},
      {"fault_integral.jsonl", "integral-coords"},
      {"fault_marks.jsonl", "mark-coefficients"},
      {"fault_marked.jsonl", "marked-diagram"},
  };
  for (const auto& [file, check] : fixtures) {
    auto recs = load_dataset(default_data_dir() + "/faults/" + file);
    REQUIRE(recs.size() == 1);
    auto insts = expand_record(recs[0]);
    REQUIRE(insts.size() == 1);
    PairReport report = verify_pair(insts[0]);
    CHECK_MESSAGE(!report.passed(), file);
    const CheckResult* target = report.find(check);
    REQUIRE_MESSAGE(target != nullptr, file);
    CHECK_MESSAGE(target->applicable, file);
    CHECK_MESSAGE(!target->passed, file);
  }
}

TEST_CASE("rational curve section count") {
  std::string detail;
  CHECK(verify_example_rational_curve(&detail));
  CHECK(detail.find("23") != std::string::npos);
}
