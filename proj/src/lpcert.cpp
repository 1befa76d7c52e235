#include "inforest/lpcert.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "inforest/errors.hpp"

namespace inforest::lp {

namespace {

using Vec4 = std::array<Rational, 4>;
using Vec5 = std::array<Rational, 5>;  // (k, a, b, c, d)

Vec5 as_vec(const LinExpr& e) { return {e.k, e.a, e.b, e.c, e.d}; }

// Solves M x = rhs for square M (n x n, n <= 8) by Gaussian elimination.
// Returns nullopt when M is singular.
std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// One-dimensional nullspace of three 4-vectors; nullopt when their rank < 3.
std::optional<Vec4> nullspace_direction(std::array<Vec4, 3> rows) {
  int rank = 0;
  std::array<int, 3> pivot_col{-1, -1, -1};
  for (int col = 0; col < 4 && rank < 3; ++col) {
    int pr = -1;
    for (int r = rank; r < 3; ++r) {
      if (!rows[r][col].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (int c2 = 0; c2 < 4; ++c2) rows[r][c2] -= f * rows[rank][c2];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank < 3) return std::nullopt;
  // The single non-pivot column parameterizes the nullspace.
  int free_col = 0 + 1 + 2 + 3;
  for (int r = 0; r < 3; ++r) free_col -= pivot_col[r];
  Vec4 dir{0, 0, 0, 0};
  dir[free_col] = 1;
  for (int r = 0; r < 3; ++r) {
    dir[pivot_col[r]] = -rows[r][free_col] / rows[r][pivot_col[r]];
  }
  return dir;
}

std::string coef_term(const Rational& coef, const char* var, bool leading) {
  std::ostringstream os;
  if (coef.sign() >= 0 && !leading) os << '+';
  if (coef == Rational(1)) {
    // implicit 1
  } else if (coef == Rational(-1)) {
    os << '-';
  } else {
    os << coef.str();
  }
  os << var;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// LinExpr

Rational LinExpr::eval(const Point& p) const {
  return k + a * p.a + b * p.b + c * p.c + d * p.d;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  k += o.k;
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  return *this;
}

LinExpr LinExpr::scaled(const Rational& s) const {
  return LinExpr{k * s, a * s, b * s, c * s, d * s};
}

std::string LinExpr::pretty() const {
  std::ostringstream os;
  bool leading = true;
  if (!k.is_zero()) {
    os << k.str();
    leading = false;
  }
  const std::array<std::pair<const Rational*, const char*>, 4> terms{
      {{&a, "a"}, {&b, "b"}, {&c, "c"}, {&d, "d"}}};
  for (auto [coef, var] : terms) {
    if (coef->is_zero()) continue;
    os << coef_term(*coef, var, leading);
    leading = false;
  }
  if (leading) os << '0';
  return os.str();
}

LinExpr ex(Rational k, Rational a, Rational b, Rational c, Rational d) {
  return LinExpr{k, a, b, c, d};
}

Point coefficient_point() {
  return Point{Rational(25, 27), Rational(5, 27), Rational(5, 27),
               Rational(2, 27)};
}

// ---------------------------------------------------------------------------
// Base system

const std::vector<Constraint>& base_constraints() {
  static const std::vector<Constraint> cons = [] {
    std::vector<LinExpr> exprs = {
        ex(0, 1, 0, 0, 0),        // a
        ex(1, -1, 0, 0, 0),       // 1-a
        ex(0, 0, 1, 0, 0),        // b
        ex(0, 0, 0, 1, 0),        // c
        ex(0, 0, 0, 0, 1),        // d
        ex(1, -1, 1, -1, 0),      // 1-a+b-c
        ex(1, -1, 1, 0, -1),      // 1-a+b-d
        ex(0, -1, 5, 0, 0),       // -a+5b
        ex(5, -8, 12, 1, 0),      // 5-8a+12b+c
        ex(4, -6, 8, 0, 1),       // 4-6a+8b+d
        ex(5, -8, 13, 0, 0),      // 5-8a+13b
        ex(5, -8, 13, 1, -1),     // 5-8a+13b+c-d
        ex(4, -6, 9, 0, -1),      // 4-6a+9b-d
        ex(5, -8, 14, 0, -1),     // 5-8a+14b-d
        ex(5, -8, 14, -1, 0),     // 5-8a+14b-c
        ex(5, -8, 15, -1, -1),    // 5-8a+15b-c-d
        ex(3, -5, 10, -1, 0),     // 3-5a+10b-c
        ex(3, -5, 10, 0, -1),     // 3-5a+10b-d
        ex(3, -4, 4, 0, 0),       // 3-4a+4b
    };
    std::vector<Constraint> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(Constraint{e.pretty(), e});
    return out;
  }();
  return cons;
}

PointCheck check_point(const Point& p, const std::vector<Constraint>& cons) {
  PointCheck pc;
  pc.ok = true;
  for (const auto& con : cons) {
    Rational v = con.expr.eval(p);
    if (v.sign() < 0) {
      pc.ok = false;
      pc.violated.push_back(con.label);
    } else if (v.is_zero()) {
      pc.tight.push_back(con.label);
    }
  }
  return pc;
}

// ---------------------------------------------------------------------------
// Maximization by basic-solution enumeration

MaxResult maximize(const LinExpr& objective,
                   const std::vector<Constraint>& cons) {
  const int n = static_cast<int>(cons.size());
  std::vector<Vec4> normal(n);
  std::vector<Rational> offset(n);
  for (int i = 0; i < n; ++i) {
    const LinExpr& e = cons[i].expr;
    normal[i] = {e.a, e.b, e.c, e.d};
    offset[i] = e.k;
  }

  // The method needs a pointed feasible region: normals must span R^4.
  {
    bool spanning = false;
    for (int i = 0; i < n - 3 && !spanning; ++i)
      for (int j = i + 1; j < n - 2 && !spanning; ++j)
        for (int k2 = j + 1; k2 < n - 1 && !spanning; ++k2)
          for (int l = k2 + 1; l < n && !spanning; ++l) {
            std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
            for (int col = 0; col < 4; ++col) {
              m[0][col] = normal[i][col];
              m[1][col] = normal[j][col];
              m[2][col] = normal[k2][col];
              m[3][col] = normal[l][col];
            }
            if (solve_square(m, {0, 0, 0, 0}).has_value()) spanning = true;
          }
    if (!spanning) {
      throw InvalidInput(
          "constraint normals do not span the space; maximizer requires a "
          "pointed region");
    }
  }

  const Vec4 obj{objective.a, objective.b, objective.c, objective.d};
  auto dot = [](const Vec4& x, const Vec4& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
  };

  // Unboundedness: an extreme ray of {x : normals.x >= 0} improving the
  // objective. Every extreme ray of a pointed cone has three linearly
  // independent tight rows, so scanning all triples is exhaustive.
  for (int i = 0; i < n - 2; ++i) {
    for (int j = i + 1; j < n - 1; ++j) {
      for (int k2 = j + 1; k2 < n; ++k2) {
        auto dir = nullspace_direction({normal[i], normal[j], normal[k2]});
        if (!dir) continue;
        for (int s = 0; s < 2; ++s) {
          Vec4 d = *dir;
          if (s == 1)
            for (auto& v : d) v = -v;
          if (dot(obj, d).sign() <= 0) continue;
          bool recession = true;
          for (int r = 0; r < n && recession; ++r) {
            if (dot(normal[r], d).sign() < 0) recession = false;
          }
          if (recession) {
            MaxResult res;
            res.status = LpStatus::Unbounded;
            return res;
          }
        }
      }
    }
  }

  // Vertex enumeration over all 4-subsets.
  bool found = false;
  Rational best_value;
  Point best_point{};
  auto lex_less = [](const Point& x, const Point& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  };
  for (int i = 0; i < n - 3; ++i) {
    for (int j = i + 1; j < n - 2; ++j) {
      for (int k2 = j + 1; k2 < n - 1; ++k2) {
        for (int l = k2 + 1; l < n; ++l) {
          std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
          std::vector<Rational> rhs(4);
          const std::array<int, 4> rows{i, j, k2, l};
          for (int r = 0; r < 4; ++r) {
            for (int col = 0; col < 4; ++col) m[r][col] = normal[rows[r]][col];
            rhs[r] = -offset[rows[r]];
          }
          auto sol = solve_square(m, rhs);
          if (!sol) continue;
          Point p{(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
          bool feasible = true;
          for (int r = 0; r < n && feasible; ++r) {
            if (cons[r].expr.eval(p).sign() < 0) feasible = false;
          }
          if (!feasible) continue;
          Rational val = objective.eval(p);
          if (!found || val > best_value ||
              (val == best_value && lex_less(p, best_point))) {
            found = true;
            best_value = val;
            best_point = p;
          }
        }
      }
    }
  }

  MaxResult res;
  if (!found) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = best_value;
  res.argmax = best_point;
  for (const auto& con : cons) {
    if (con.expr.eval(best_point).is_zero()) res.tight.push_back(con.label);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

const Constraint* find_constraint(const std::vector<Constraint>& pool,
                                  const std::string& label) {
  for (const auto& con : pool) {
    if (con.label == label) return &con;
  }
  return nullptr;
}

// Unique exact solution of sum(x_i * cols_i) = target with x unrestricted;
// nullopt when inconsistent or not unique. cols are 5-vectors (k,a,b,c,d).
std::optional<std::vector<Rational>> solve_combination(
    const std::vector<Vec5>& cols, const Vec5& target) {
  const int s = static_cast<int>(cols.size());
  // Augmented 5 x (s+1) matrix, one row per expression coefficient.
  std::array<std::vector<Rational>, 5> m;
  for (int r = 0; r < 5; ++r) {
    m[r].resize(s + 1);
    for (int c2 = 0; c2 < s; ++c2) m[r][c2] = cols[c2][r];
    m[r][s] = target[r];
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < s && rank < 5; ++col) {
    int pr = -1;
    for (int r = rank; r < 5; ++r) {
      if (!m[r][col].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    for (int r = 0; r < 5; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[rank][col];
      for (int c2 = col; c2 <= s; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < s) return std::nullopt;  // multipliers not unique
  for (int r = rank; r < 5; ++r) {
    if (!m[r][s].is_zero()) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> x(s);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m[r][s] / m[r][pivot_col[r]];
  return x;
}

}  // namespace

bool verify_certificate(const LinExpr& target, const Multipliers& mult,
                        const std::vector<Constraint>& pool) {
  LinExpr acc = ex(0, 0, 0, 0, 0);
  for (const auto& [label, m] : mult) {
    if (m.sign() < 0) return false;
    const Constraint* con = find_constraint(pool, label);
    if (!con) return false;
    acc += con->expr.scaled(m);
  }
  return acc == target;
}

std::optional<Multipliers> find_redundancy_certificate(
    const LinExpr& target, const std::vector<Constraint>& pool) {
  const int n = static_cast<int>(pool.size());
  const Vec5 tv = as_vec(target);
  const int max_support = std::min(n, 5);
  std::vector<int> idx;
  // Subsets in index order, smallest support first, for determinism.
  for (int size = 1; size <= max_support; ++size) {
    idx.assign(size, 0);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Vec5> cols;
      cols.reserve(size);
      for (int i : idx) cols.push_back(as_vec(pool[i].expr));
      auto sol = solve_combination(cols, tv);
      if (sol) {
        bool nonneg = true;
        for (const auto& v : *sol) {
          if (v.sign() < 0) nonneg = false;
        }
        if (nonneg) {
          Multipliers out;
          for (int i = 0; i < size; ++i) {
            if (!(*sol)[i].is_zero()) out.emplace_back(pool[idx[i]].label, (*sol)[i]);
          }
          return out;
        }
      }
      // Next combination.
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Derived rows

namespace {

ParamMult pm(Rational base, Rational slope = 0) { return ParamMult{base, slope}; }

}  // namespace

const std::vector<DerivedRow>& derived_rows() {
  static const std::vector<DerivedRow> rows = [] {
    std::vector<DerivedRow> r;
    auto plain = [&r](std::string name, LinExpr target,
                      std::vector<std::pair<std::string, ParamMult>> stated) {
      r.push_back(DerivedRow{std::move(name), target, ex(0, 0, 0, 0, 0),
                             std::move(stated), false, {}});
    };

    // Chain of t degree-1 cubes hanging off a degree-1 theta:
    // (5t+4) - (8t+6)a + (13t+9)b - d, certified by one copy of 4-6a+9b-d
    // plus t copies of 5-8a+13b. Exact as a polynomial identity in t.
    r.push_back(DerivedRow{
        "theta-chain",
        ex(4, -6, 9, 0, -1),   // base part (t = 0)
        ex(5, -8, 13, 0, 0),   // slope part (per chain link)
        {{"4-6a+9b-d", pm(1)}, {"5-8a+13b", pm(0, 1)}},
        false,
        {}});

    plain("theta-contact2", ex(4, -6, 10, 0, -1),
          {{"4-6a+9b-d", pm(1)}, {"b", pm(1)}});
    // The source's identity list misprints this target's a-coefficient;
    // the stated combination sums to 5-8a+16b-c-d, which is what the rule
    // charges, so that is the target carried here.
    plain("cube-contact4", ex(5, -8, 16, -1, -1),
          {{"5-8a+15b-c-d", pm(1)}, {"b", pm(1)}});
    plain("theta-contact3", ex(4, -6, 11, 0, -1),
          {{"4-6a+9b-d", pm(1)}, {"b", pm(2)}});
    plain("cube-contact5", ex(5, -8, 17, -1, -1),
          {{"5-8a+15b-c-d", pm(1)}, {"b", pm(2)}});
    plain("deg2-deg4", ex(1, -2, 5, 0, 0),
          {{"-a+5b", pm(1)}, {"1-a", pm(1)}});
    plain("deg2-deg2", ex(2, -3, 5, 0, 0),
          {{"1-a", pm(2)}, {"-a+5b", pm(1)}});
    plain("deg2-diamond-a", ex(3, -5, 9, 0, 0),
          {{"3-4a+4b", pm(1)}, {"-a+5b", pm(1)}});
    plain("deg2-diamond-b", ex(4, -6, 9, 0, 0),
          {{"4-6a+9b-d", pm(1)}, {"d", pm(1)}});
    plain("rewire-cube", ex(6, -9, 14, 0, 0),
          {{"5-8a+13b", pm(1)}, {"b", pm(1)}, {"1-a", pm(1)}});
    plain("square-three-deg3", ex(4, -7, 14, 0, 0),
          {{"1-a", pm(1)}, {"-a+5b", pm(2)}, {"3-4a+4b", pm(1)}});

    // The row whose stated combination is wrong in the source: it repeats the
    // previous row's multipliers, which sum to 4-7a+14b, not 7-11a+18b.
    // Repair re-solves within the same pool the stated row names.
    r.push_back(DerivedRow{
        "corridor-cube",
        ex(7, -11, 18, 0, 0),
        ex(0, 0, 0, 0, 0),
        {{"1-a", pm(1)}, {"-a+5b", pm(2)}, {"3-4a+4b", pm(1)}},
        true,
        {"1-a", "-a+5b", "3-4a+4b"}});

    plain("twin-anchor", ex(3, -6, 14, 0, 0),
          {{"3-4a+4b", pm(1)}, {"-a+5b", pm(2)}});
    plain("quadface-two-cube", ex(7, -12, 23, 0, 0),
          {{"3-4a+4b", pm(2)}, {"-a+5b", pm(3)}, {"1-a", pm(1)}});
    plain("hub-spread", ex(3, -6, 15, -1, 0),
          {{"-a+5b", pm(1)}, {"3-5a+10b-c", pm(1)}});
    plain("hub-tip-edge", ex(4, -8, 19, 0, 0),
          {{"-a+5b", pm(3)}, {"3-4a+4b", pm(1)}, {"1-a", pm(1)}});
    plain("hub-last", ex(3, -7, 19, 0, 0),
          {{"3-4a+4b", pm(1)}, {"-a+5b", pm(3)}});
    return r;
  }();
  return rows;
}

namespace {

// Multipliers instantiated at a concrete t.
Multipliers instantiate(const std::vector<std::pair<std::string, ParamMult>>& mult,
                        const Rational& t) {
  Multipliers out;
  for (const auto& [label, m] : mult) {
    Rational v = m.base + m.slope * t;
    if (!v.is_zero()) out.emplace_back(label, v);
  }
  return out;
}

}  // namespace

std::vector<CertReport> verify_all_derived() {
  const auto& pool = base_constraints();
  std::vector<CertReport> reports;
  for (const auto& row : derived_rows()) {
    CertReport rep;
    rep.name = row.name;
    const bool parametric = !(row.target_slope == ex(0, 0, 0, 0, 0));
    rep.target_label = parametric
                           ? row.target_base.pretty() + " + t*(" +
                                 row.target_slope.pretty() + ")"
                           : row.target_base.pretty();

    if (parametric) {
      // Polynomial identity in t: base and slope parts must match separately,
      // and multipliers must be nonnegative for every t >= 0.
      LinExpr acc_base = ex(0, 0, 0, 0, 0);
      LinExpr acc_slope = ex(0, 0, 0, 0, 0);
      bool nonneg = true;
      for (const auto& [label, m] : row.stated) {
        if (m.base.sign() < 0 || m.slope.sign() < 0) nonneg = false;
        const Constraint* con = find_constraint(pool, label);
        if (!con) {
          nonneg = false;
          break;
        }
        acc_base += con->expr.scaled(m.base);
        acc_slope += con->expr.scaled(m.slope);
      }
      bool identity = nonneg && acc_base == row.target_base &&
                      acc_slope == row.target_slope;
      // Belt and braces: instantiate the first few chain lengths.
      bool instances = true;
      for (int t = 0; t <= 3 && instances; ++t) {
        LinExpr target = row.target_base;
        target += row.target_slope.scaled(t);
        instances = verify_certificate(target, instantiate(row.stated, t), pool);
      }
      rep.ok = identity && instances;
      rep.multipliers = instantiate(row.stated, 1);
      rep.note = rep.ok ? "identity in t; instances t=0..3 checked"
                        : "parametric verification failed";
      reports.push_back(std::move(rep));
      continue;
    }

    Multipliers stated = instantiate(row.stated, 0);
    if (verify_certificate(row.target_base, stated, pool)) {
      rep.ok = true;
      rep.multipliers = std::move(stated);
      if (row.stated_known_wrong) {
        rep.note = "stated combination unexpectedly verified";
      }
      reports.push_back(std::move(rep));
      continue;
    }

    // Stated combination does not reproduce the target.
    if (!row.repair_pool.empty()) {
      std::vector<Constraint> restricted;
      for (const auto& label : row.repair_pool) {
        const Constraint* con = find_constraint(pool, label);
        if (con) restricted.push_back(*con);
      }
      auto repaired = find_redundancy_certificate(row.target_base, restricted);
      if (repaired && verify_certificate(row.target_base, *repaired, pool)) {
        rep.ok = true;
        rep.repaired = true;
        rep.multipliers = std::move(*repaired);
        rep.note =
            "stated combination duplicates a neighboring row and fails; "
            "re-solved within the row's own constraint pool (unique solution)";
        reports.push_back(std::move(rep));
        continue;
      }
    }

    // Last resort: free discovery over the whole base system.
    auto any = find_redundancy_certificate(row.target_base, pool);
    if (any) {
      rep.ok = true;
      rep.repaired = true;
      rep.multipliers = std::move(*any);
      rep.note = "stated combination fails; certificate rediscovered";
    } else {
      rep.ok = false;
      rep.note = "no certificate exists";
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Rule accounting

LinExpr AccountingTuple::expr() const {
  return ex(lambda, -alpha, beta, gamma, eta);
}

const std::vector<RuleRow>& rule_rows() {
  static const std::vector<RuleRow> rows = [] {
    std::vector<RuleRow> r;
    auto add = [&r](std::string rule, std::string variant, long long al,
                    long long be, long long ga, long long et, long long la) {
      r.push_back(RuleRow{std::move(rule), std::move(variant),
                          AccountingTuple{al, be, ga, et, la}});
    };
    add("take-all", "single", 1, 0, 0, 0, 1);
    add("take-all", "edge", 2, 1, 0, 0, 2);
    add("split", "component", 0, 0, 0, 0, 0);
    add("split", "bridge", 0, 1, 0, 0, 0);
    add("cube-component", "", 8, 12, 1, 0, 5);
    add("theta-component", "", 6, 8, 0, 1, 4);
    add("cube-contact1", "plain", 8, 13, 0, 0, 5);
    add("cube-contact1", "swap", 8, 13, 1, -1, 5);
    add("theta-chain", "t=0", 6, 9, 0, -1, 4);
    add("theta-chain", "t=1", 14, 22, 0, -1, 9);
    add("theta-chain", "t=2", 22, 35, 0, -1, 14);
    add("theta-chain", "t=3", 30, 48, 0, -1, 19);
    add("cube-contact2", "clean", 8, 14, 0, 0, 5);
    add("cube-contact2", "new-theta", 8, 14, 0, -1, 5);
    add("cube-contact2", "new-cube", 8, 14, -1, 0, 5);
    add("cube-contact2", "cycle-per-cube", 8, 13, 0, 0, 5);
    add("cube-contact3", "worst", 8, 15, -1, -1, 5);
    add("theta-contact2", "", 6, 10, 0, -1, 4);
    add("big-vertex", "deg>=5", 1, 5, 0, 0, 0);
    add("cube-contact4", "worst", 8, 16, -1, -1, 5);
    add("theta-contact3", "", 6, 11, 0, -1, 4);
    add("theta-face45", "new-cube", 5, 10, -1, 0, 3);
    add("theta-face45", "new-theta", 5, 10, 0, -1, 3);
    add("theta-face45", "clean", 5, 10, 0, 0, 3);
    add("cube-contact5", "worst", 8, 17, -1, -1, 5);
    add("deg2-contract", "clean", 1, 1, 0, 0, 1);
    add("deg2-contract", "new-cube", 1, 1, -1, 0, 1);
    add("deg2-contract", "new-theta", 1, 1, 0, -1, 1);
    add("deg2-deg4", "", 2, 5, 0, 0, 1);
    add("deg2-deg2", "whole-square", 4, 4, 0, 0, 3);
    add("deg2-deg2", "main", 3, 5, 0, 0, 2);
    add("deg3-two-deg2", "", 3, 5, 0, 0, 2);
    add("deg2-diamond", "tight", 5, 9, 0, 0, 3);
    add("deg2-diamond", "extended", 6, 9, 0, 0, 4);
    add("deg3-deg4-rewire", "virtual-edge", 2, 5, 0, 0, 1);
    add("deg3-deg4-rewire", "cube-block", 9, 14, 0, 0, 6);
    add("square-two-sides", "", 4, 10, 0, 0, 2);
    add("square-four-deg3", "", 5, 10, 0, 0, 3);
    add("square-three-deg3", "pinch", 5, 10, 0, 0, 3);
    add("square-three-deg3", "six-block", 6, 11, 0, 0, 4);
    add("square-three-deg3", "seven-block", 7, 14, 0, 0, 4);
    add("square-two-deg3", "four-block", 4, 10, 0, 0, 2);
    add("square-two-deg3", "five-block", 5, 10, 0, 0, 3);
    add("quadface-cross-pair", "pinch", 5, 10, 0, 0, 3);
    add("quadface-cross-pair", "rewire-new-cube", 5, 10, -1, 0, 3);
    add("quadface-cross-pair", "rewire-new-theta", 5, 10, 0, -1, 3);
    add("quadface-corridor", "rewire", 3, 5, 0, 0, 2);
    add("quadface-corridor", "cube-block", 11, 18, 0, 0, 7);
    add("quadface-twin-anchor", "", 6, 14, 0, 0, 3);
    add("quadface-all-deg3", "eight-block", 8, 13, 0, 0, 5);
    add("quadface-all-deg3", "seven-block", 7, 14, 0, 0, 4);
    add("quadface-three-deg3", "", 7, 14, 0, 0, 4);
    add("quadface-two-deg3", "rewire", 4, 10, 0, 0, 2);
    add("quadface-two-deg3", "theta-block", 10, 18, 0, 0, 6);
    add("quadface-two-deg3", "cube-block", 12, 23, 0, 0, 7);
    add("hub-common-neighbor", "", 8, 20, 0, 0, 4);
    add("hub-shared-tip", "", 8, 20, 0, 0, 4);
    add("hub-spread", "new-cube", 6, 15, -1, 0, 3);
    add("hub-spread", "clean", 6, 15, 0, 0, 3);
    add("hub-tip-edge", "", 8, 19, 0, 0, 4);
    add("hub-tip-anchor", "", 8, 20, 0, 0, 4);
    add("hub-last", "", 7, 19, 0, 0, 3);
    add("pentaface", "", 3, 5, 0, 0, 2);
    return r;
  }();
  return rows;
}

namespace {

// Certificates for rule expressions that are neither base rows nor targets of
// a derived row: small completions, each checked by verify_certificate.
const std::vector<std::pair<std::string, Multipliers>>& extra_certificates() {
  static const std::vector<std::pair<std::string, Multipliers>> table = {
      {"5-8a+14b", {{"5-8a+14b-d", 1}, {"d", 1}}},
      {"3-5a+10b", {{"3-5a+10b-d", 1}, {"d", 1}}},
      {"1-a+b", {{"1-a+b-c", 1}, {"c", 1}}},
      {"2-4a+10b", {{"1-a", 2}, {"-a+5b", 2}}},
      {"4-6a+11b", {{"4-6a+9b-d", 1}, {"d", 1}, {"b", 2}}},
      {"6-10a+18b", {{"5-8a+13b", 1}, {"-a+5b", 1}, {"1-a", 1}}},
      {"4-8a+20b", {{"-a+5b", 3}, {"3-4a+4b", 1}, {"1-a", 1}, {"b", 1}}},
      {"3-6a+15b", {{"-a+5b", 1}, {"3-5a+10b-c", 1}, {"c", 1}}},
      {"1-a", {{"1-a", 1}}},
      {"2-2a+b", {{"1-a", 2}, {"b", 1}}},
      {"0", {}},
  };
  return table;
}

}  // namespace

std::vector<RuleRowReport> verify_rule_accounting() {
  const auto& pool = base_constraints();
  const Point p = coefficient_point();

  // Resolve certificates once: base rows map to themselves, derived rows to
  // their verified multipliers, the rest to the completion table.
  std::vector<CertReport> derived = verify_all_derived();

  std::vector<RuleRowReport> out;
  for (const auto& row : rule_rows()) {
    RuleRowReport rep;
    rep.rule = row.rule;
    rep.variant = row.variant;
    LinExpr e = row.tuple.expr();
    rep.expr_label = e.pretty();
    rep.value_at_point = e.eval(p);
    rep.nonnegative = rep.value_at_point.sign() >= 0;

    if (const Constraint* con = find_constraint(pool, rep.expr_label);
        con && con->expr == e) {
      rep.certified = true;
      rep.multipliers = {{con->label, 1}};
    }
    if (!rep.certified) {
      for (const auto& d : derived) {
        if (!d.ok) continue;
        if (verify_certificate(e, d.multipliers, pool) &&
            d.target_label == rep.expr_label) {
          rep.certified = true;
          rep.multipliers = d.multipliers;
          break;
        }
      }
    }
    if (!rep.certified) {
      // Parametric chain instances and remaining completions.
      for (const auto& d : derived_rows()) {
        if (d.target_slope == ex(0, 0, 0, 0, 0)) continue;
        for (int t = 0; t <= 4 && !rep.certified; ++t) {
          LinExpr target = d.target_base;
          target += d.target_slope.scaled(t);
          if (target == e) {
            Multipliers m = instantiate(d.stated, t);
            if (verify_certificate(e, m, pool)) {
              rep.certified = true;
              rep.multipliers = std::move(m);
            }
          }
        }
      }
    }
    if (!rep.certified) {
      for (const auto& [label, mult] : extra_certificates()) {
        if (label == rep.expr_label && verify_certificate(e, mult, pool)) {
          rep.certified = true;
          rep.multipliers = mult;
          break;
        }
      }
    }
    if (!rep.certified) {
      if (auto found = find_redundancy_certificate(e, pool)) {
        rep.certified = true;
        rep.multipliers = std::move(*found);
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summary

LpReport full_report() {
  LpReport rep;
  const auto& cons = base_constraints();
  const Point p = coefficient_point();

  rep.max = maximize(ex(0, 1, -2, 0, 0), cons);  // objective a - 2b

  PointCheck pc = check_point(p, cons);
  rep.point_feasible = pc.ok;
  rep.tight_at_point = pc.tight;

  rep.certs = verify_all_derived();
  rep.rules = verify_rule_accounting();

  bool certs_ok = true;
  for (const auto& c : rep.certs) certs_ok = certs_ok && c.ok;
  bool rules_ok = true;
  for (const auto& r : rep.rules)
    rules_ok = rules_ok && r.nonnegative && r.certified;

  auto contains = [&](const char* label) {
    return std::find(rep.tight_at_point.begin(), rep.tight_at_point.end(),
                     std::string(label)) != rep.tight_at_point.end();
  };
  bool tight_ok = contains("-a+5b") && contains("5-8a+12b+c") &&
                  contains("4-6a+8b+d");

  rep.ok = rep.max.status == LpStatus::Optimal &&
           rep.max.value == Rational(5, 9) && rep.point_feasible && tight_ok &&
           certs_ok && rules_ok;
  return rep;
}

}  // namespace inforest::lp
