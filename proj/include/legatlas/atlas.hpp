#ifndef LEGATLAS_ATLAS_HPP
#define LEGATLAS_ATLAS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legatlas/expr.hpp"
#include "legatlas/niporb.hpp"
#include "legatlas/repdim.hpp"
#include "legatlas/rootsys.hpp"
#include "legatlas/types.hpp"

namespace legatlas {

// ---------------------------------------------------------------------------
// Dataset schema (JSON Lines, one record per line).
//
// A record describes one table row, possibly an infinite family in one or
// more integer parameters.  All numeric fields are expressions over the
// parameters in the +, -, * mini-grammar of expr.hpp.  Weight vectors are
// sparse lists of {node, coeff} pairs; nodes are 1-based indices into the
// concatenated node list of a declared factor (so a factor declared as so(n)
// that expands to A1 + A1 has nodes 1 and 2).
// ---------------------------------------------------------------------------

struct FactorSpec {
  std::string family;   // A, B, C, D, E6, E7, E8, F4, G2, so, sl, sp
  std::string rank;     // rank for letter families; n for so / sl / sp
};

struct AlgebraSpec {
  std::vector<FactorSpec> factors;
  int torus = 0;
};

struct SparseEntry {
  std::string node;
  std::string coeff;
};

struct RhoCase {
  std::string when;  // condition; empty means always
  std::vector<std::vector<SparseEntry>> rho;  // one list per declared factor
};

struct MarkedCase {
  std::string when;
  std::vector<std::vector<std::string>> marked;  // 1-based node expressions
};

struct LabelSpec {
  std::string kind;  // long, short, partition, bala_carter, min_plus_min
  std::string algebra;  // sl / so / sp (partition only)
  std::string n;        // partition only
  std::vector<std::pair<std::string, std::string>> parts;  // (part, multiplicity)
  std::string name;     // bala_carter only
};

// An expression that may be case-split on the parameters; the first case
// whose condition holds wins (an empty condition always holds).
struct CasedExpr {
  std::vector<std::pair<std::string, std::string>> cases;  // (when, expr)
  long long eval(const Env& env, const std::string& ctx) const;
};

struct RawRecord {
  std::string id;
  std::string source;
  bool symmetric = false;
  std::vector<std::pair<std::string, long long>> params;  // (name, min), in order
  std::vector<std::string> constraints;
  AlgebraSpec g, h;
  std::vector<RhoCase> rho_cases;        // empty: highest weight to be derived
  std::vector<MarkedCase> marked_cases;  // empty: no marked diagram recorded
  CasedExpr dim_Om;
  LabelSpec z;
  std::string dim_Zm;
  std::string legendrian;  // condition
  bool half_dim_m = false; // m is one of the two abelian nilradical summands
  std::string theorem;     // classification item tag, e.g. "1.1.2f"
};

// A record instantiated at concrete parameter values.
struct PairInstance {
  std::string id;         // e.g. "T1.01[p=3,q=2]"
  std::string record_id;
  Env env;
  ReductiveType g, h;
  bool has_rho = false;
  Weight rho;             // fundamental-weight coordinates over h
  bool has_marked = false;
  std::vector<std::vector<int>> marked;  // zero-based, per simple factor of h
  long long dim_Om = 0;
  long long dim_Zm = 0;
  OrbitLabel z;
  bool legendrian = false;
  bool symmetric = false;
  bool half_dim_m = false;
  std::string theorem;    // cleared on non-Legendrian instances

  // Target dimension of m: dim g - dim h, halved for the closed-parabolic
  // rows where m is one irreducible nilradical summand.
  long long dim_m_target() const;
};

struct CheckResult {
  std::string name;
  bool applicable = false;
  bool passed = true;
  std::string detail;
};

struct PairReport {
  std::string id;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

struct ExpandPolicy {
  int span = 5;                      // each parameter runs min .. min+span
  long long ambient_dim_cap = 19900; // dim so(200)
};

struct VerificationReport {
  std::vector<PairReport> reports;
  long long pass_count = 0;
  long long fail_count = 0;
  bool all_passed() const { return fail_count == 0; }
};

struct TheoremReport {
  bool passed = true;
  std::vector<std::string> problems;
  std::map<std::string, long long> item_counts;
};

// Load a JSON Lines dataset.  Throws ParseError on malformed JSON and
// SchemaError on structurally invalid records.
std::vector<RawRecord> load_dataset(const std::string& path);

// Expand a record over its parameter box (each parameter from its minimum to
// minimum + span), pruned by the record constraints and the ambient cap.
// A record without parameters yields exactly one instance.
std::vector<PairInstance> expand_record(const RawRecord& rec, const ExpandPolicy& policy = {});

// Run the per-pair checks:
//   rep-dim         dim V_rho = dim m
//   orbit-dim       dim of the highest weight orbit matches the table
//   marked-diagram  marked nodes reproduce the orbit dimension and rho support
//   z-dim           label lookup reproduces the printed dim Z
//   legendrian      dim Z = 2 dim O + 1 exactly on the flagged rows
//   root-trichotomy rho is a root of h exactly in the four named families or
//                   when g is not simple, and then equals the dominant short
//                   root (resp. the highest root)
//   coefficient-sum s(rho) vs s(highest root of each factor), non-symmetric rows
//   integral-coords rho has integer simple-root coordinates, non-symmetric rows
//   mark-coefficients  (rows without stored rho) the coefficients on the
//                   marked nodes are recovered uniquely from dim m
PairReport verify_pair(const PairInstance& inst);

VerificationReport verify_tables(const std::vector<RawRecord>& records,
                                 const ExpandPolicy& policy = {});

// Match the dataset's Legendrian rows against the two classification lists:
// the twelve non-symmetric items with Z = Z_long and the seven items with
// Z != Z_long.
TheoremReport verify_theorems(const std::vector<PairInstance>& instances);
bool matches_theorem_item(const std::string& tag, const PairInstance& inst);

// The section-count identity for the non-maximal degree-10 rational curve
// family in the (G2, A1) pair: h^0 = (10+1) + ((4+1) + (6+1)) = 23 global
// sections versus dim G2 - dim A1 = 11 moduli.
bool verify_example_rational_curve(std::string* detail = nullptr);

// Directory holding the bundled datasets (compile-time default, overridable
// via the LEGATLAS_DATA environment variable).
std::string default_data_dir();

// Names of the bundled table files, in order.
std::vector<std::string> bundled_tables();

}  // namespace legatlas

#endif  // LEGATLAS_ATLAS_HPP
