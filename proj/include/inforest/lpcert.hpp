// Exact linear-programming verifier for the potential-function coefficients.
//
// The reduction engine's bound rests on a potential phi = a*n - b*m - c*p - d*q
// evaluated at one fixed rational point, and on a family of linear inequalities
// in (a,b,c,d) — one per reduction rule — each of which must be a nonnegative
// combination of a base system of 19 constraints. This module:
//
//   * stores the base system and the fixed point exactly (no floating point),
//   * maximizes a linear objective over the base system by exhaustive basic-
//     solution enumeration (the system is 4-dimensional and pointed, so every
//     optimum is attained at a vertex, and unboundedness shows up on an
//     extreme ray with three linearly independent tight rows),
//   * verifies nonnegative-combination certificates for every derived
//     inequality, carrying the combination stated in the source analysis and
//     repairing the one row whose stated combination is wrong (it duplicates a
//     neighboring row; the repair re-solves exactly within the same constraint
//     pool that the stated row names, which has a unique solution),
//   * cross-checks every reduction rule's accounting tuple against the
//     inequality it charges.
//
// Everything is deterministic: ties in the maximizer break to the
// lexicographically smallest point, and certificate discovery (a fallback
// only) enumerates support sets in index order, smallest first.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inforest/rational.hpp"

namespace inforest::lp {

// ---------------------------------------------------------------------------
// Expressions and the fixed evaluation point.

struct Point {
  Rational a, b, c, d;
};

// k + a*A + b*B + c*C + d*D, used as "expr >= 0" when acting as a constraint.
struct LinExpr {
  Rational k, a, b, c, d;

  Rational eval(const Point& p) const;
  bool operator==(const LinExpr& o) const = default;

  LinExpr& operator+=(const LinExpr& o);
  LinExpr scaled(const Rational& s) const;

  // Canonical label: terms in k,a,b,c,d order, e.g. "5-8a+12b+c", "-a+5b".
  std::string pretty() const;
};

LinExpr ex(Rational k, Rational a, Rational b, Rational c, Rational d);

// The coefficient point the whole analysis is tuned to:
// (a,b,c,d) = (25/27, 5/27, 5/27, 2/27); note a - 2b = 5/9.
Point coefficient_point();

// ---------------------------------------------------------------------------
// Base system.

struct Constraint {
  std::string label;  // == expr.pretty()
  LinExpr expr;       // constraint is expr >= 0
};

// The 19 base constraints. Their labels (pretty forms), in order:
//   a, 1-a, b, c, d, 1-a+b-c, 1-a+b-d, -a+5b, 5-8a+12b+c, 4-6a+8b+d,
//   5-8a+13b, 5-8a+13b+c-d, 4-6a+9b-d, 5-8a+14b-d, 5-8a+14b-c,
//   5-8a+15b-c-d, 3-5a+10b-c, 3-5a+10b-d, 3-4a+4b
const std::vector<Constraint>& base_constraints();

struct PointCheck {
  bool ok = false;                    // every constraint nonnegative
  std::vector<std::string> violated;  // labels with negative value
  std::vector<std::string> tight;     // labels with value exactly zero
};
PointCheck check_point(const Point& p, const std::vector<Constraint>& cons);

// ---------------------------------------------------------------------------
// Exact maximization.

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct MaxResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;                  // meaningful when Optimal
  Point argmax{};                  // meaningful when Optimal
  std::vector<std::string> tight;  // constraints tight at argmax
};

// Requires the constraint normals to span all four dimensions (true for the
// base system, which contains a,b,c,d >= 0); throws InvalidInput otherwise.
MaxResult maximize(const LinExpr& objective, const std::vector<Constraint>& cons);

// ---------------------------------------------------------------------------
// Nonnegative-combination certificates.

using Multipliers = std::vector<std::pair<std::string, Rational>>;

// Checks sum(mult_i * pool[label_i].expr) == target, all multipliers >= 0.
bool verify_certificate(const LinExpr& target, const Multipliers& mult,
                        const std::vector<Constraint>& pool);

// Finds multipliers certifying target as a nonnegative combination of pool
// constraints, or nullopt. Deterministic: support sets are enumerated in
// index order, smallest support first; only uniquely-solvable supports count.
std::optional<Multipliers> find_redundancy_certificate(
    const LinExpr& target, const std::vector<Constraint>& pool);

// ---------------------------------------------------------------------------
// Derived inequalities of the rule analysis, with their stated combinations.
//
// Entries whose expression depends on the chain length t are parametric:
// target = base + t*slope, multipliers likewise. Plain rows have zero slope.

struct ParamMult {
  Rational base, slope;  // multiplier = base + t*slope
};

struct DerivedRow {
  std::string name;  // short rule-flavoured identifier
  LinExpr target_base;
  LinExpr target_slope;  // zero for non-parametric rows
  std::vector<std::pair<std::string, ParamMult>> stated;  // from the source
  bool stated_known_wrong = false;          // one row carries a bad combination
  std::vector<std::string> repair_pool;     // pool used to repair that row
};
const std::vector<DerivedRow>& derived_rows();

struct CertReport {
  std::string name;
  std::string target_label;
  bool ok = false;
  bool repaired = false;       // stated combination failed and was repaired
  Multipliers multipliers;     // the combination that actually verified
  std::string note;
};

// Verifies every derived row. Parametric rows are verified as polynomial
// identities in t (base and slope parts separately) and additionally
// instantiated at t = 0..3.
std::vector<CertReport> verify_all_derived();

// ---------------------------------------------------------------------------
// Rule accounting table.

struct AccountingTuple {
  long long alpha = 0;  // vertices removed
  long long beta = 0;   // edges removed (declared upper bound)
  long long gamma = 0;  // change in the count of low-contact cubes
  long long eta = 0;    // change in the count of theta components
  long long lambda = 0; // vertices added to the forest

  // lambda - alpha*A + beta*B + gamma*C + eta*D, the inequality the step
  // charges against the potential.
  LinExpr expr() const;
};

struct RuleRow {
  std::string rule;       // engine rule name (one row per worst-case variant)
  std::string variant;    // "" or a case tag
  AccountingTuple tuple;
};
const std::vector<RuleRow>& rule_rows();

struct RuleRowReport {
  std::string rule;
  std::string variant;
  std::string expr_label;
  Rational value_at_point;
  bool nonnegative = false;
  bool certified = false;  // certificate against the base system exists
  Multipliers multipliers;
};
std::vector<RuleRowReport> verify_rule_accounting();

// ---------------------------------------------------------------------------
// One-call summary used by the CLI and the acceptance harness.

struct LpReport {
  MaxResult max;                       // objective a - 2b over the base system
  bool point_feasible = false;
  std::vector<std::string> tight_at_point;
  std::vector<CertReport> certs;
  std::vector<RuleRowReport> rules;
  bool ok = false;
};
LpReport full_report();

}  // namespace inforest::lp
