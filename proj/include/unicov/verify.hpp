#pragma once
/// Registry of machine-checkable covering / universality relations.
///
/// Every check evaluates one relation on one fully explicit instance: a JSON
/// descriptor naming the group, the sets and the numeric parameters.  The
/// evaluator recomputes everything from the descriptor, so a failure recorded
/// in a campaign report can be replayed verbatim with run_check().
///
/// Conventions shared by all checks:
///  * integer relations are compared exactly (arbitrary precision);
///  * relations with logarithms are compared as doubles behind the shared
///    guard band (see numeric.hpp), logs are natural unless stated;
///  * a check whose premise is not met, or whose branch-and-bound search ran
///    out of budget, reports skipped=true rather than a verdict;
///  * results never depend on thread count: instances are derived from the
///    (seed, trial, check) triple alone.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "unicov/constructions.hpp"
#include "unicov/fourier.hpp"
#include "unicov/group.hpp"
#include "unicov/groupset.hpp"
#include "unicov/io.hpp"
#include "unicov/numeric.hpp"
#include "unicov/rng.hpp"
#include "unicov/setops.hpp"
#include "unicov/solver.hpp"

namespace unicov {

/// One relation evaluated on one instance.
struct CheckResult {
  std::string check_id;
  Json instance;           ///< replayable descriptor
  std::string relation;    ///< the statement being tested
  std::string lhs;         ///< evaluated left side
  std::string rhs;         ///< evaluated right side
  bool holds = false;
  bool skipped = false;    ///< premise not met / search not certified
  double slack = 0.0;      ///< margin in the direction of the relation
  std::string note;
};

struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct CampaignReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::map<std::string, CheckTally> per_check;
  std::vector<CheckResult> failures;
  bool failures_truncated = false;
  double wall_seconds = 0.0;
};

inline Json check_result_to_json(const CheckResult& r) {
  Json j;
  j["check"] = r.check_id;
  j["instance"] = r.instance;
  j["relation"] = r.relation;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  j["skipped"] = r.skipped;
  j["slack"] = r.slack;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json campaign_to_json(const CampaignReport& c) {
  Json j;
  j["suite"] = c.suite;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["evaluated"] = c.evaluated;
  j["passed"] = c.passed;
  j["failed"] = c.failed;
  j["skipped"] = c.skipped;
  j["wall_seconds"] = c.wall_seconds;
  Json per = Json::object();
  for (const auto& [id, t] : c.per_check) {
    per[id] = Json{{"passed", t.passed},
                   {"failed", t.failed},
                   {"skipped", t.skipped}};
  }
  j["per_check"] = per;
  Json fails = Json::array();
  for (const CheckResult& f : c.failures) fails.push_back(check_result_to_json(f));
  j["failures"] = fails;
  j["failures_truncated"] = c.failures_truncated;
  return j;
}

namespace checks {

// ---------------------------------------------------------------------------
// plumbing
// ---------------------------------------------------------------------------

inline std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return std::string(buf);
}

inline CheckResult begin_check(const char* id, const Json& inst,
                               const char* relation) {
  CheckResult r;
  r.check_id = id;
  r.instance = inst;
  r.relation = relation;
  return r;
}

inline CheckResult skip_check(CheckResult& r, std::string why) {
  r.skipped = true;
  r.note = std::move(why);
  return r;
}

inline void conclude_le(CheckResult& r, const BigInt& lhs, const BigInt& rhs) {
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.holds = lhs <= rhs;
  r.slack = BigInt(rhs - lhs).convert_to<double>();
}

inline void conclude_ge(CheckResult& r, const BigInt& lhs, const BigInt& rhs) {
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.holds = lhs >= rhs;
  r.slack = BigInt(lhs - rhs).convert_to<double>();
}

inline void conclude_gt(CheckResult& r, const BigInt& lhs, const BigInt& rhs) {
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.holds = lhs > rhs;
  r.slack = BigInt(lhs - rhs).convert_to<double>();
}

inline void conclude_eq(CheckResult& r, const BigInt& lhs, const BigInt& rhs) {
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.holds = lhs == rhs;
  r.slack = -BigInt(lhs < rhs ? rhs - lhs : lhs - rhs).convert_to<double>();
}

inline void conclude_le_real(CheckResult& r, double lhs, double rhs) {
  r.lhs = fmt_real(lhs);
  r.rhs = fmt_real(rhs);
  r.holds = le_guarded(lhs, rhs);
  r.slack = rhs - lhs;
}

inline void conclude_ge_real(CheckResult& r, double lhs, double rhs) {
  r.lhs = fmt_real(lhs);
  r.rhs = fmt_real(rhs);
  r.holds = ge_guarded(lhs, rhs);
  r.slack = lhs - rhs;
}

inline Group group_of(const Json& inst) {
  return parse_group(inst.at("group").get<std::string>());
}

inline GroupSet set_of(const Group& g, const Json& inst, const char* key) {
  GroupSet s(g);
  for (const auto& v : inst.at(key)) {
    const Elem x = v.get<Elem>();
    check_elem(g, x);
    s.insert(x);
  }
  return s;
}

inline std::vector<Elem> elems_of(const Group& g, const Json& inst,
                                  const char* key) {
  std::vector<Elem> out;
  for (const auto& v : inst.at(key)) {
    const Elem x = v.get<Elem>();
    check_elem(g, x);
    out.push_back(x);
  }
  return out;
}

inline std::vector<GroupSet> set_list_of(const Group& g, const Json& inst,
                                         const char* key) {
  std::vector<GroupSet> out;
  for (const auto& arr : inst.at(key)) {
    GroupSet s(g);
    for (const auto& v : arr) {
      const Elem x = v.get<Elem>();
      check_elem(g, x);
      s.insert(x);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Tuple> tuples_of(const Group& g, const Json& inst,
                                    const char* key) {
  std::vector<Tuple> out;
  for (const auto& arr : inst.at(key)) {
    Tuple t;
    for (const auto& v : arr) {
      const Elem x = v.get<Elem>();
      check_elem(g, x);
      t.push_back(x);
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline Json tuples_to_json(const std::vector<Tuple>& ts) {
  Json arr = Json::array();
  for (const Tuple& t : ts) {
    Json row = Json::array();
    for (Elem x : t) row.push_back(x);
    arr.push_back(std::move(row));
  }
  return arr;
}

inline std::vector<std::int64_t> coeffs_of(const Json& inst) {
  std::vector<std::int64_t> c;
  for (const auto& v : inst.at("coeffs")) c.push_back(v.get<std::int64_t>());
  return c;
}

/// Exact covering value gated on certified optimality.
struct CovOut {
  std::uint64_t value = 0;
  bool ok = false;
  std::string why;
};

inline CovOut cov_certified(const GroupSet& a) {
  CovOut o;
  const CoverWitness c = cov_exact(a);
  if (!c.optimal) {
    o.why = "cover search exhausted its node budget";
    return o;
  }
  o.value = c.value;
  o.ok = true;
  return o;
}

inline CovOut cov_certified(const GroupSet& a, const GroupSet& e) {
  CovOut o;
  const CoverWitness c = cov_exact(a, e);
  if (!c.optimal) {
    o.why = "cover search exhausted its node budget";
    return o;
  }
  o.value = c.value;
  o.ok = true;
  return o;
}

struct UnOut {
  bool infinite = false;
  std::uint64_t value = 0;
  bool ok = false;
  std::string why;
};

inline UnOut un_certified(const GroupSet& a) {
  UnOut o;
  const UniversalityReport u = un_exact(a);
  if (!u.optimal) {
    o.why = "universality search exhausted its node budget";
    return o;
  }
  o.infinite = u.infinite;
  o.value = u.un;
  o.ok = true;
  return o;
}

/// cnt_n(X) = |X^n - Delta_n(G)|: tuples whose translate intersection
/// meets the whole group somewhere.
inline std::uint64_t diff_count(const GroupSet& x, std::uint64_t n) {
  return higher_diff_size(x, n, GroupSet::full(x.group()));
}

// ---------------------------------------------------------------------------
// evaluators
// ---------------------------------------------------------------------------

/// Sumset growth control: |nA - mA| * |A|^(n+m) <= |A+A|^(n+m) * |A|.
inline CheckResult check_v01(const Json& inst) {
  CheckResult r = begin_check("V01", inst,
                              "|nA-mA| * |A|^(n+m) <= |A+A|^(n+m) * |A|");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const std::uint64_t n = inst.at("n").get<std::uint64_t>();
  const std::uint64_t m = inst.at("m").get<std::uint64_t>();
  if (a.is_empty()) return skip_check(r, "A is empty");
  if (n + m < 2 || n + m > 4) return skip_check(r, "n+m out of range [2,4]");
  const GroupSet span = span_set(a, n, m);
  const GroupSet twoa = sumset(a, a);
  conclude_le(r, BigInt(span.size()) * bi_pow(BigInt(a.size()), n + m),
              bi_pow(BigInt(twoa.size()), n + m) * BigInt(a.size()));
  return r;
}

/// Duality anchor: cov(A) equals un(G\A)+1, the latter found by an
/// independent direct tuple search.
inline CheckResult check_v02(const Json& inst) {
  CheckResult r = begin_check("V02", inst, "cov(A) == un(G\\A) + 1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  if (a.is_empty() || a.is_full()) {
    return skip_check(r, "A must be nonempty and proper");
  }
  if (g.order > 12) return skip_check(r, "reference search capped at order 12");
  const CovOut c = cov_certified(a);
  if (!c.ok) return skip_check(r, c.why);
  const std::uint64_t ref = un_by_tuple_search(complement(a));
  conclude_eq(r, BigInt(c.value), BigInt(ref + 1));
  return r;
}

/// Basic covering sandwich: ceil(N/|A|) <= cov(A) <= (N/|A|)(ln|A|+1)+1.
inline CheckResult check_v03(const Json& inst) {
  CheckResult r = begin_check(
      "V03", inst, "ceil(N/|A|) <= cov(A) <= (N/|A|)*(ln|A|+1)+1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  if (a.is_empty()) return skip_check(r, "A is empty");
  const CovOut c = cov_certified(a);
  if (!c.ok) return skip_check(r, c.why);
  const std::uint64_t n = g.order;
  const std::uint64_t lower = (n + a.size() - 1) / a.size();
  const double upper = static_cast<double>(n) / static_cast<double>(a.size()) *
                           (std::log(static_cast<double>(a.size())) + 1.0) +
                       1.0;
  r.lhs = std::to_string(lower);
  r.rhs = fmt_real(upper);
  r.note = "cov(A) = " + std::to_string(c.value);
  const bool low_ok = c.value >= lower;
  const bool high_ok = le_guarded(static_cast<double>(c.value), upper);
  r.holds = low_ok && high_ok;
  r.slack = std::min(static_cast<double>(c.value) - static_cast<double>(lower),
                     upper - static_cast<double>(c.value));
  return r;
}

/// Difference sets pack: cov(A-A) * |A| <= N.
inline CheckResult check_v04(const Json& inst) {
  CheckResult r = begin_check("V04", inst, "cov(A-A) * |A| <= N");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  if (a.is_empty()) return skip_check(r, "A is empty");
  const CovOut c = cov_certified(difference_set(a, a));
  if (!c.ok) return skip_check(r, c.why);
  conclude_le(r, BigInt(c.value) * BigInt(a.size()), BigInt(g.order));
  return r;
}

/// Sumsets cover cheaply: cov(A+B) <= (N/|A|) * ln(N/|B|) + 1.
inline CheckResult check_v05(const Json& inst) {
  CheckResult r =
      begin_check("V05", inst, "cov(A+B) <= (N/|A|) * ln(N/|B|) + 1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  if (a.is_empty() || b.is_empty()) return skip_check(r, "A or B empty");
  const CovOut c = cov_certified(sumset(a, b));
  if (!c.ok) return skip_check(r, c.why);
  const double n = static_cast<double>(g.order);
  const double rhs =
      n / static_cast<double>(a.size()) *
          std::log(n / static_cast<double>(b.size())) +
      1.0;
  conclude_le_real(r, static_cast<double>(c.value), rhs);
  return r;
}

/// Constrained-universe variant: cov(A+B; E) <= (N/|A|) * ln(|B-E|/|B|) + 1.
inline CheckResult check_v06(const Json& inst) {
  CheckResult r =
      begin_check("V06", inst, "cov(A+B; E) <= (N/|A|) * ln(|B-E|/|B|) + 1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  const GroupSet e = set_of(g, inst, "e");
  if (a.is_empty() || b.is_empty() || e.is_empty()) {
    return skip_check(r, "A, B or E empty");
  }
  const CovOut c = cov_certified(sumset(a, b), e);
  if (!c.ok) return skip_check(r, c.why);
  const GroupSet bme = difference_set(b, e);
  const double rhs =
      static_cast<double>(g.order) / static_cast<double>(a.size()) *
          std::log(static_cast<double>(bme.size()) /
                   static_cast<double>(b.size())) +
      1.0;
  conclude_le_real(r, static_cast<double>(c.value), rhs);
  return r;
}

namespace detail_v0708 {

/// Shared body for the two universality supermultiplicativity checks.
inline CheckResult sum_universality(const char* id, const Json& inst,
                                    bool multiplicative) {
  CheckResult r = begin_check(id, inst,
                              multiplicative
                                  ? "un(A+B) >= un(A) * un(B)"
                                  : "un(A+B) >= un(A) + un(B) - 1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  if (a.is_empty() || b.is_empty()) return skip_check(r, "A or B empty");
  const GroupSet s = sumset(a, b);
  if (s.is_full()) {
    r.lhs = "INF";
    r.rhs = "finite";
    r.holds = true;
    r.note = "A+B = G, left side infinite";
    return r;
  }
  const UnOut ua = un_certified(a);
  if (!ua.ok) return skip_check(r, ua.why);
  const UnOut ub = un_certified(b);
  if (!ub.ok) return skip_check(r, ub.why);
  const UnOut us = un_certified(s);
  if (!us.ok) return skip_check(r, us.why);
  const BigInt rhs = multiplicative
                         ? BigInt(ua.value) * BigInt(ub.value)
                         : BigInt(ua.value) + BigInt(ub.value) - 1;
  conclude_ge(r, BigInt(us.value), rhs);
  return r;
}

}  // namespace detail_v0708

inline CheckResult check_v07(const Json& inst) {
  return detail_v0708::sum_universality("V07", inst, false);
}

inline CheckResult check_v08(const Json& inst) {
  return detail_v0708::sum_universality("V08", inst, true);
}

/// Shift-intersection inclusion: A_X is contained in (A-B)_(B+X).
inline CheckResult check_v09(const Json& inst) {
  CheckResult r =
      begin_check("V09", inst, "A_X subset of (A-B)_(B+X)");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  const GroupSet x = set_of(g, inst, "x");
  if (a.is_empty() || b.is_empty() || x.is_empty()) {
    return skip_check(r, "A, B or X empty");
  }
  const GroupSet ax = shift_intersection(a, x);
  const GroupSet dbx = shift_intersection(difference_set(a, b), sumset(b, x));
  r.lhs = std::to_string(ax.size());
  r.rhs = std::to_string(dbx.size());
  r.holds = is_subset(ax, dbx);
  r.slack = static_cast<double>(dbx.size()) - static_cast<double>(ax.size());
  return r;
}

/// Translate-tuple counts are supermultiplicative over sumsets:
/// cnt_{nm}(A+B) * N^m >= cnt_m(A) * cnt_n(B)^m.
inline CheckResult check_v10(const Json& inst) {
  CheckResult r = begin_check(
      "V10", inst, "cnt_nm(A+B) * N^m >= cnt_m(A) * cnt_n(B)^m");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  const std::uint64_t n = inst.at("n").get<std::uint64_t>();
  const std::uint64_t m = inst.at("m").get<std::uint64_t>();
  if (a.is_empty() || b.is_empty()) return skip_check(r, "A or B empty");
  if (n == 0 || m == 0 || n * m > 6) return skip_check(r, "n*m out of range");
  const std::uint64_t lhs_cnt = diff_count(sumset(a, b), n * m);
  conclude_ge(r, BigInt(lhs_cnt) * bi_pow(BigInt(g.order), m),
              BigInt(diff_count(a, m)) * bi_pow(BigInt(diff_count(b, n)), m));
  return r;
}

/// Expansion through a third set:
/// |A+B+S|^(mn) * N^(m+1) >= |S| * cnt_m(A) * cnt_n(B)^m.
inline CheckResult check_v11(const Json& inst) {
  CheckResult r = begin_check(
      "V11", inst, "|A+B+S|^(mn) * N^(m+1) >= |S| * cnt_m(A) * cnt_n(B)^m");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  const GroupSet s = set_of(g, inst, "s");
  const std::uint64_t n = inst.at("n").get<std::uint64_t>();
  const std::uint64_t m = inst.at("m").get<std::uint64_t>();
  if (a.is_empty() || b.is_empty() || s.is_empty()) {
    return skip_check(r, "A, B or S empty");
  }
  if (n == 0 || m == 0 || n * m > 6) return skip_check(r, "n*m out of range");
  const GroupSet abs_set = sumset(sumset(a, b), s);
  conclude_ge(r,
              bi_pow(BigInt(abs_set.size()), m * n) *
                  bi_pow(BigInt(g.order), m + 1),
              BigInt(s.size()) * BigInt(diff_count(a, m)) *
                  bi_pow(BigInt(diff_count(b, n)), m));
  return r;
}

/// Iterated sumsets gain uniformity:
/// cnt_{m^l}(lA) * N^(m*sigma) >= cnt_m(A)^sigma * N^(m^l),
/// sigma = (m^l - 1)/(m - 1).
inline CheckResult check_v12(const Json& inst) {
  CheckResult r = begin_check(
      "V12", inst,
      "cnt_{m^l}(lA) * N^(m*sigma) >= cnt_m(A)^sigma * N^(m^l)");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const std::uint64_t m = inst.at("m").get<std::uint64_t>();
  const std::uint64_t l = inst.at("l").get<std::uint64_t>();
  if (a.is_empty()) return skip_check(r, "A is empty");
  if (m < 2 || l < 2) return skip_check(r, "need m >= 2 and l >= 2");
  const std::uint64_t ml = checked_pow(m, l, 64);
  if (ml > 9) return skip_check(r, "m^l out of desk range");
  const std::uint64_t sigma = (ml - 1) / (m - 1);
  const GroupSet la = iterated_sumset(a, l);
  conclude_ge(r,
              BigInt(diff_count(la, ml)) * bi_pow(BigInt(g.order), m * sigma),
              bi_pow(BigInt(diff_count(a, m)), sigma) *
                  bi_pow(BigInt(g.order), ml));
  return r;
}

/// Block-diagonal expansion of a certified universal set:
/// |U^(nk) - Delta_{k..k;n}(S)| >= |S| * N^(n(k-1)).
inline CheckResult check_v13(const Json& inst) {
  CheckResult r = begin_check(
      "V13", inst, "|U^(nk) - Delta_{k..k;n}(S)| >= |S| * N^(n(k-1))");
  const Group g = group_of(inst);
  const GroupSet u = set_of(g, inst, "u");
  const std::uint64_t k = inst.at("k").get<std::uint64_t>();
  const std::uint64_t n = inst.at("n").get<std::uint64_t>();
  const std::vector<Tuple> s_tuples = tuples_of(g, inst, "s_tuples");
  if (u.is_empty()) return skip_check(r, "U is empty");
  if (k == 0 || n == 0) return skip_check(r, "need k >= 1 and n >= 1");
  if (s_tuples.empty()) return skip_check(r, "S is empty");
  if (!u.is_full()) {
    const UnOut uu = un_certified(u);
    if (!uu.ok) return skip_check(r, uu.why);
    if (uu.value < k) {
      return skip_check(r, "premise un(U) >= k not met (un = " +
                               std::to_string(uu.value) + ")");
    }
  }
  const TupleSpec spec{std::vector<std::uint32_t>(
      static_cast<std::size_t>(n), static_cast<std::uint32_t>(k))};
  const std::vector<Tuple> s_norm =
      normalize_tuples(g, s_tuples, static_cast<std::size_t>(n));
  conclude_ge(r, BigInt(gen_diff_size(u, spec, s_norm)),
              BigInt(s_norm.size()) * bi_pow(BigInt(g.order), n * (k - 1)));
  return r;
}

namespace detail_v14 {

/// Premise shared by the two linear-equation checks: every coefficient must
/// act invertibly and A must avoid the equation entirely.
inline bool equation_premise(const Group& g, const GroupSet& a,
                             const std::vector<std::int64_t>& coeffs,
                             Elem beta, std::string& why) {
  for (std::int64_t c : coeffs) {
    if (!is_unit(g, c)) {
      why = "coefficient " + std::to_string(c) + " is not invertible";
      return false;
    }
  }
  if (a.is_empty()) {
    why = "A is empty";
    return false;
  }
  if (!is_solution_free(a, coeffs, beta)) {
    why = "A contains a solution of the equation";
    return false;
  }
  return true;
}

}  // namespace detail_v14

/// Avoiding one invertible linear equation caps universality:
/// n = 3:  un(A) <= (1/delta) * ln(1/delta);
/// n > 3:  un(A) <= (2*ln(1/delta))^(1/(floor(n/2)-1)).
inline CheckResult check_v14(const Json& inst) {
  CheckResult r = begin_check(
      "V14", inst, "equation-free A: un(A) bounded by a function of delta");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const std::vector<std::int64_t> coeffs = coeffs_of(inst);
  const Elem beta = inst.at("beta").get<Elem>();
  const std::size_t n = coeffs.size();
  if (n < 3) return skip_check(r, "need at least three terms");
  std::string why;
  if (!detail_v14::equation_premise(g, a, coeffs, beta, why)) {
    return skip_check(r, why);
  }
  const UnOut ua = un_certified(a);
  if (!ua.ok) return skip_check(r, ua.why);
  if (ua.infinite) return skip_check(r, "unexpected: full equation-free set");
  const double delta =
      static_cast<double>(a.size()) / static_cast<double>(g.order);
  double bound = 0.0;
  if (n == 3) {
    bound = (1.0 / delta) * std::log(1.0 / delta);
    r.relation = "un(A) <= (1/delta) * ln(1/delta)";
  } else {
    bound = std::pow(2.0 * std::log(1.0 / delta),
                     1.0 / (static_cast<double>(n / 2) - 1.0));
    r.relation = "un(A) <= (2*ln(1/delta))^(1/(floor(n/2)-1))";
  }
  conclude_le_real(r, static_cast<double>(ua.value), bound);
  return r;
}

/// Spectral flatness forces many translate patterns.  With eps = u/v:
/// premise  v^(2l) * S_l(A) <= u^(2l) * |A|^(2l) * N^(l+1)  for all l in [k],
/// conclusion  cnt_k(A) * (u^2+v^2)^k > v^(2k) * N^k,
/// where S_l is the l-th power sum of the balanced autocorrelation.
inline CheckResult check_v15(const Json& inst) {
  CheckResult r = begin_check(
      "V15", inst, "uniform A: cnt_k(A) * (u^2+v^2)^k > v^(2k) * N^k");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const std::uint64_t k = inst.at("k").get<std::uint64_t>();
  const std::uint64_t u = inst.at("eps_num").get<std::uint64_t>();
  const std::uint64_t v = inst.at("eps_den").get<std::uint64_t>();
  if (a.is_empty()) return skip_check(r, "A is empty");
  if (k == 0) return skip_check(r, "need k >= 1");
  if (u == 0 || u >= v) return skip_check(r, "eps must lie in (0,1)");
  for (std::uint64_t l = 1; l <= k; ++l) {
    const BigInt left = bi_pow(BigInt(v), 2 * l) *
                        balanced_correlation_power_sum(a, l);
    const BigInt right = bi_pow(BigInt(u), 2 * l) *
                         bi_pow(BigInt(a.size()), 2 * l) *
                         bi_pow(BigInt(g.order), l + 1);
    if (left > right) {
      return skip_check(r, "uniformity premise fails at l = " +
                               std::to_string(l));
    }
  }
  conclude_gt(r,
              BigInt(diff_count(a, k)) * bi_pow(BigInt(u * u + v * v), k),
              bi_pow(BigInt(v), 2 * k) * bi_pow(BigInt(g.order), k));
  return r;
}

/// Partial converse: an equation-free set cannot be flat on every scale.
/// With eps = u/v = 1/8 there exists l in [2, L],
/// L = floor((3*ln(1/delta))^(1/(floor(n/2)-1)) + 1), with
/// v^(2l) * S_l(A) >= u^(2l) * |A|^(2l) * N^(l+1).
inline CheckResult check_v16(const Json& inst) {
  CheckResult r = begin_check(
      "V16", inst,
      "equation-free A: some l <= L has a large balanced correlation power sum");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const std::vector<std::int64_t> coeffs = coeffs_of(inst);
  const Elem beta = inst.at("beta").get<Elem>();
  const std::uint64_t u = inst.at("eps_num").get<std::uint64_t>();
  const std::uint64_t v = inst.at("eps_den").get<std::uint64_t>();
  const std::size_t n = coeffs.size();
  if (n < 4) return skip_check(r, "need at least four terms");
  if (u == 0 || 8 * u > v) return skip_check(r, "eps must lie in (0,1/8]");
  std::string why;
  if (!detail_v14::equation_premise(g, a, coeffs, beta, why)) {
    return skip_check(r, why);
  }
  const double delta =
      static_cast<double>(a.size()) / static_cast<double>(g.order);
  const double l_real = std::pow(3.0 * std::log(1.0 / delta),
                                 1.0 / (static_cast<double>(n / 2) - 1.0)) +
                        1.0;
  const auto l_max = static_cast<std::uint64_t>(std::floor(l_real + 1e-12));
  if (l_max < 2) return skip_check(r, "no admissible l in [2, L]");
  BigInt best_left = 0;
  BigInt best_right = 1;
  std::uint64_t best_l = 0;
  for (std::uint64_t l = 2; l <= l_max; ++l) {
    const BigInt left = bi_pow(BigInt(v), 2 * l) *
                        balanced_correlation_power_sum(a, l);
    const BigInt right = bi_pow(BigInt(u), 2 * l) *
                         bi_pow(BigInt(a.size()), 2 * l) *
                         bi_pow(BigInt(g.order), l + 1);
    if (left >= right) {
      r.note = "witness l = " + std::to_string(l) +
               " of L = " + std::to_string(l_max);
      conclude_ge(r, left, right);
      return r;
    }
    if (best_l == 0 || left * best_right > best_left * right) {
      best_left = left;
      best_right = right;
      best_l = l;
    }
  }
  r.note = "no l in [2, " + std::to_string(l_max) + "] fired; closest l = " +
           std::to_string(best_l);
  conclude_ge(r, best_left, best_right);
  return r;
}

/// Covering numbers compose through shift intersections:
/// cov(A_X) >= (cov(A) - 1) * (cov(G\X) - 1) + 1.
inline CheckResult check_v17(const Json& inst) {
  CheckResult r = begin_check(
      "V17", inst, "cov(A_X) >= (cov(A)-1) * (cov(G\\X)-1) + 1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet x = set_of(g, inst, "x");
  if (a.is_empty()) return skip_check(r, "A is empty");
  if (x.is_empty() || x.is_full()) {
    return skip_check(r, "X must be nonempty and proper");
  }
  const GroupSet ax = shift_intersection(a, x);
  if (ax.is_empty()) return skip_check(r, "A_X is empty");
  const CovOut cax = cov_certified(ax);
  if (!cax.ok) return skip_check(r, cax.why);
  const CovOut ca = cov_certified(a);
  if (!ca.ok) return skip_check(r, ca.why);
  const CovOut cxc = cov_certified(complement(x));
  if (!cxc.ok) return skip_check(r, cxc.why);
  conclude_ge(r, BigInt(cax.value),
              BigInt(ca.value - 1) * BigInt(cxc.value - 1) + 1);
  return r;
}

/// Two-sided control of cov(A) through a sumset:
/// |B| * cov(A+B) >= cov(A) >= (cov(A+B)-1) * (cov(G\B)-1) + 1.
inline CheckResult check_v18(const Json& inst) {
  CheckResult r = begin_check(
      "V18", inst,
      "|B|*cov(A+B) >= cov(A) >= (cov(A+B)-1)*(cov(G\\B)-1)+1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  if (a.is_empty()) return skip_check(r, "A is empty");
  if (b.is_empty() || b.is_full()) {
    return skip_check(r, "B must be nonempty and proper");
  }
  const CovOut cs = cov_certified(sumset(a, b));
  if (!cs.ok) return skip_check(r, cs.why);
  const CovOut ca = cov_certified(a);
  if (!ca.ok) return skip_check(r, ca.why);
  const CovOut cbc = cov_certified(complement(b));
  if (!cbc.ok) return skip_check(r, cbc.why);
  const std::uint64_t upper = b.size() * cs.value;
  const std::uint64_t lower = (cs.value - 1) * (cbc.value - 1) + 1;
  r.lhs = std::to_string(upper);
  r.rhs = std::to_string(lower);
  r.note = "cov(A) = " + std::to_string(ca.value);
  r.holds = upper >= ca.value && ca.value >= lower;
  r.slack =
      std::min(static_cast<double>(upper) - static_cast<double>(ca.value),
               static_cast<double>(ca.value) - static_cast<double>(lower));
  return r;
}

/// Witness-driven upper bounds, one per premise:
/// (a) A_B nonempty:  cov(A)    <= (N/|A_B|) * ln(N/|B|) + 1;
/// (b) A+B proper:    cov(G\A)  <= (N/(N-|A+B|)) * ln(N/|B|) + 1.
inline CheckResult check_v19(const Json& inst) {
  CheckResult r = begin_check(
      "V19", inst,
      "cov(A) <= (N/|A_B|)*ln(N/|B|)+1; cov(G\\A) <= (N/(N-|A+B|))*ln(N/|B|)+1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  if (a.is_empty() || b.is_empty()) return skip_check(r, "A or B empty");
  const double n = static_cast<double>(g.order);
  const double logterm = std::log(n / static_cast<double>(b.size()));
  const GroupSet ab = shift_intersection(a, b);
  const GroupSet s = sumset(a, b);
  const bool first = !ab.is_empty();
  const bool second = !s.is_full();
  if (!first && !second) {
    return skip_check(r, "neither premise holds (A_B empty and A+B = G)");
  }
  bool holds = true;
  double slack = 1e300;
  std::string parts;
  if (first) {
    const CovOut ca = cov_certified(a);
    if (!ca.ok) return skip_check(r, ca.why);
    const double rhs1 = n / static_cast<double>(ab.size()) * logterm + 1.0;
    holds = holds && le_guarded(static_cast<double>(ca.value), rhs1);
    slack = std::min(slack, rhs1 - static_cast<double>(ca.value));
    parts += "cov(A) = " + std::to_string(ca.value) +
             " vs " + fmt_real(rhs1);
  }
  if (second) {
    const CovOut cc = cov_certified(complement(a));
    if (!cc.ok) return skip_check(r, cc.why);
    const double rhs2 =
        n / (n - static_cast<double>(s.size())) * logterm + 1.0;
    holds = holds && le_guarded(static_cast<double>(cc.value), rhs2);
    slack = std::min(slack, rhs2 - static_cast<double>(cc.value));
    if (!parts.empty()) parts += "; ";
    parts += "cov(G\\A) = " + std::to_string(cc.value) +
             " vs " + fmt_real(rhs2);
  }
  r.lhs = "|A_B| = " + std::to_string(ab.size());
  r.rhs = "|G \\ (A+B)| = " + std::to_string(g.order - s.size());
  r.note = parts;
  r.holds = holds;
  r.slack = slack;
  return r;
}

/// Difference-set shift intersections cover cheaply: with D = A-A and a
/// shift tuple X meeting A,  cov(D_X) <= (N/|A|) * ln(N/|A_X|) + 1.
inline CheckResult check_v20(const Json& inst) {
  CheckResult r = begin_check(
      "V20", inst, "cov((A-A)_X) <= (N/|A|) * ln(N/|A_X|) + 1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const std::vector<Elem> xs = elems_of(g, inst, "x_tuple");
  if (a.is_empty()) return skip_check(r, "A is empty");
  if (xs.empty()) return skip_check(r, "shift tuple empty");
  const GroupSet ax = shift_intersection_tuple(a, xs);
  if (intersect(a, ax).is_empty()) {
    return skip_check(r, "premise A intersect A_X nonempty fails");
  }
  const GroupSet dx = shift_intersection_tuple(difference_set(a, a), xs);
  const CovOut c = cov_certified(dx);
  if (!c.ok) return skip_check(r, c.why);
  const double n = static_cast<double>(g.order);
  const double rhs = n / static_cast<double>(a.size()) *
                         std::log(n / static_cast<double>(ax.size())) +
                     1.0;
  conclude_le_real(r, static_cast<double>(c.value), rhs);
  return r;
}

/// Product-group diagonal sumsets cover G^2:
/// cov((A x B) + Delta(C+D)) <= (N^2/(|A||C|)) * ln(N^2/(|B||D|)) + 1.
inline CheckResult check_v21(const Json& inst) {
  CheckResult r = begin_check(
      "V21", inst,
      "cov_{G^2}((AxB) + Delta(C+D)) <= (N^2/(|A||C|))*ln(N^2/(|B||D|))+1");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  const GroupSet c = set_of(g, inst, "c");
  const GroupSet d = set_of(g, inst, "d");
  if (a.is_empty() || b.is_empty() || c.is_empty() || d.is_empty()) {
    return skip_check(r, "one of A, B, C, D is empty");
  }
  if (g.order > 24) return skip_check(r, "square universe out of desk range");
  const Group g2 = power_group(g, 2);
  GroupSet box(g2);
  a.for_each([&](Elem x) {
    b.for_each([&](Elem y) { box.insert(tuple_rank(g, {x, y})); });
  });
  GroupSet diag(g2);
  sumset(c, d).for_each([&](Elem z) { diag.insert(tuple_rank(g, {z, z})); });
  const CovOut cov2 = cov_certified(sumset(box, diag));
  if (!cov2.ok) return skip_check(r, cov2.why);
  const double n2 = static_cast<double>(g.order) * static_cast<double>(g.order);
  const double rhs =
      n2 / (static_cast<double>(a.size()) * static_cast<double>(c.size())) *
          std::log(n2 / (static_cast<double>(b.size()) *
                         static_cast<double>(d.size()))) +
      1.0;
  conclude_le_real(r, static_cast<double>(cov2.value), rhs);
  return r;
}

/// Unions cannot shrink coverings too much.  With K = |B+B|/|B|, beta = |B|/N:
/// cov(A u B) >= (1/2) * min{ 1/(beta K^3),
///                            max{ beta cov(A)/ln(2K^4),
///                                 cov(A)/(2 K^4 ln(1/beta)) } }.
inline CheckResult check_v22(const Json& inst) {
  CheckResult r = begin_check(
      "V22", inst, "cov(A u B) >= (1/2)*min{1/(beta K^3), max{...}}");
  const Group g = group_of(inst);
  const GroupSet a = set_of(g, inst, "a");
  const GroupSet b = set_of(g, inst, "b");
  if (a.is_empty()) return skip_check(r, "A is empty");
  if (b.is_empty() || b.is_full()) {
    return skip_check(r, "B must be nonempty and proper");
  }
  const CovOut ca = cov_certified(a);
  if (!ca.ok) return skip_check(r, ca.why);
  const CovOut cu = cov_certified(unite(a, b));
  if (!cu.ok) return skip_check(r, cu.why);
  const double kk = static_cast<double>(sumset(b, b).size()) /
                    static_cast<double>(b.size());
  const double beta =
      static_cast<double>(b.size()) / static_cast<double>(g.order);
  const double k4 = kk * kk * kk * kk;
  const double t1 = 1.0 / (beta * kk * kk * kk);
  const double t2 =
      beta * static_cast<double>(ca.value) / std::log(2.0 * k4);
  const double t3 = static_cast<double>(ca.value) /
                    (2.0 * k4 * std::log(1.0 / beta));
  const double rhs = 0.5 * std::min(t1, std::max(t2, t3));
  r.note = "K = " + fmt_real(kk) + ", beta = " + fmt_real(beta) +
           ", cov(A) = " + std::to_string(ca.value);
  conclude_ge_real(r, static_cast<double>(cu.value), rhs);
  return r;
}

/// Product decomposition identities for translate-tuple counts:
/// (a) |W|*|X| * pds(Y; Z) <= pds(W,Y,[Z]; X);
/// (b) pds(W,[Z]; X) == pds(W,[X]; Z);
/// (c) pds(F_1..F_k; G) == N * pds(F_1..F_{k-1}; F_k).
inline CheckResult check_v23(const Json& inst) {
  CheckResult r = begin_check(
      "V23", inst,
      "tuple-count decomposition: lift inequality, swap symmetry, peel identity");
  const Group g = group_of(inst);
  const std::vector<GroupSet> w = set_list_of(g, inst, "w_factors");
  const std::vector<GroupSet> y = set_list_of(g, inst, "y_factors");
  const GroupSet x = set_of(g, inst, "x");
  const GroupSet z = set_of(g, inst, "z");
  if (w.empty() || y.empty()) return skip_check(r, "factor lists empty");

  BigInt w_card = 1;
  for (const GroupSet& wi : w) w_card *= wi.size();

  // (a) lifting the W block and the target Z into the product.
  std::vector<GroupSet> lifted = w;
  lifted.insert(lifted.end(), y.begin(), y.end());
  lifted.push_back(z);
  const BigInt lift_l = w_card * BigInt(x.size()) * BigInt(prod_diff_size(y, z));
  const BigInt lift_r = BigInt(prod_diff_size(lifted, x));
  const bool part_a = lift_l <= lift_r;

  // (b) the last factor and the target can be swapped.
  std::vector<GroupSet> wz = w;
  wz.push_back(z);
  std::vector<GroupSet> wx = w;
  wx.push_back(x);
  const std::uint64_t swap_l = prod_diff_size(wz, x);
  const std::uint64_t swap_r = prod_diff_size(wx, z);
  const bool part_b = swap_l == swap_r;

  // (c) peeling the last factor off a full-target count.
  const std::uint64_t peel_l = prod_diff_size(lifted, GroupSet::full(g));
  std::vector<GroupSet> head(lifted.begin(), lifted.end() - 1);
  const std::uint64_t peel_r = g.order * prod_diff_size(head, lifted.back());
  const bool part_c = peel_l == peel_r;

  r.lhs = lift_l.str();
  r.rhs = lift_r.str();
  r.note = "swap " + std::to_string(swap_l) + " == " + std::to_string(swap_r) +
           "; peel " + std::to_string(peel_l) + " == " + std::to_string(peel_r);
  r.holds = part_a && part_b && part_c;
  r.slack = BigInt(lift_r - lift_l).convert_to<double>();
  return r;
}

/// Block-diagonal triangle relations over A = A0^m:
/// (a) |C| * |A - Delta(B)| <= |A x B - Delta'(C)|;
/// (b) |A x B - Delta'(C)| == |A x C - Delta'(B)|;
/// (c) |C| * |A s Delta(B)| <= |A s Delta(C)| * |B s C| for s in {-,+}.
inline CheckResult check_v24(const Json& inst) {
  CheckResult r = begin_check(
      "V24", inst,
      "block triangle: product lift, B/C symmetry, signed triangle");
  const Group g = group_of(inst);
  const GroupSet a0 = set_of(g, inst, "a0");
  std::vector<std::uint32_t> blocks;
  for (const auto& v : inst.at("blocks")) {
    blocks.push_back(v.get<std::uint32_t>());
  }
  const TupleSpec spec{blocks};
  const std::vector<Tuple> b = tuples_of(g, inst, "b_tuples");
  const std::vector<Tuple> c = tuples_of(g, inst, "c_tuples");
  if (a0.is_empty()) return skip_check(r, "A0 is empty");
  if (b.empty() || c.empty()) return skip_check(r, "B or C empty");
  const std::uint64_t m = spec.arity();
  const std::size_t parts = spec.parts();
  const std::vector<Tuple> ats = tuple_power(a0, static_cast<std::uint32_t>(m));
  const std::uint64_t nc = normalize_tuples(g, c, parts).size();

  const BigInt lift_l = BigInt(nc) * BigInt(gen_diff_size(a0, spec, b));
  const BigInt lift_r = BigInt(gen_product_diff_size(ats, b, c, spec, g));
  const bool part_a = lift_l <= lift_r;

  const std::uint64_t swap_l = gen_product_diff_size(ats, b, c, spec, g);
  const std::uint64_t swap_r = gen_product_diff_size(ats, c, b, spec, g);
  const bool part_b = swap_l == swap_r;

  bool part_c = true;
  std::string sides;
  for (const int sign : {-1, +1}) {
    const BigInt tri_l =
        BigInt(nc) * BigInt(tuple_diff_size(ats, spec, b, sign, g));
    const BigInt tri_r = BigInt(tuple_diff_size(ats, spec, c, sign, g)) *
                         BigInt(tuple_pm_size(b, c, sign, g));
    part_c = part_c && tri_l <= tri_r;
    if (!sides.empty()) sides += "; ";
    sides += std::string(sign < 0 ? "-" : "+") + ": " + tri_l.str() +
             " <= " + tri_r.str();
  }

  r.lhs = lift_l.str();
  r.rhs = lift_r.str();
  r.note = "swap " + std::to_string(swap_l) + " == " + std::to_string(swap_r) +
           "; signed " + sides;
  r.holds = part_a && part_b && part_c;
  r.slack = BigInt(lift_r - lift_l).convert_to<double>();
  return r;
}

/// Cauchy-Schwarz for block translate counts:
/// |Q|^(2m) * |B|^2 <= |Q^m - Delta(B)| * sum_{b,b'} prod_i (QoQ)(b_i-b'_i)^(m_i).
inline CheckResult check_v25(const Json& inst) {
  CheckResult r = begin_check(
      "V25", inst,
      "|Q|^(2m) * |B|^2 <= |Q^m - Delta(B)| * correlation sum");
  const Group g = group_of(inst);
  const GroupSet q = set_of(g, inst, "q");
  std::vector<std::uint32_t> blocks;
  for (const auto& v : inst.at("blocks")) {
    blocks.push_back(v.get<std::uint32_t>());
  }
  const TupleSpec spec{blocks};
  const std::vector<Tuple> b = tuples_of(g, inst, "b_tuples");
  if (q.is_empty()) return skip_check(r, "Q is empty");
  if (b.empty()) return skip_check(r, "B is empty");
  const std::vector<Tuple> bs = normalize_tuples(g, b, spec.parts());
  const std::vector<std::uint64_t> corr = correlation_counts(q);
  BigInt corr_sum = 0;
  for (const Tuple& t1 : bs) {
    for (const Tuple& t2 : bs) {
      BigInt term = 1;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        term *= bi_pow(BigInt(corr[sub(g, t1[i], t2[i])]), blocks[i]);
      }
      corr_sum += term;
    }
  }
  conclude_le(r,
              bi_pow(BigInt(q.size()), 2 * spec.arity()) *
                  BigInt(bs.size()) * BigInt(bs.size()),
              BigInt(gen_diff_size(q, spec, bs)) * corr_sum);
  return r;
}

/// Universality of a direct product is the minimum over the factors.
inline CheckResult check_v26(const Json& inst) {
  CheckResult r = begin_check(
      "V26", inst, "un(U_1 x ... x U_m) == min_j un(U_j)");
  const Group g = group_of(inst);
  const std::vector<GroupSet> factors = set_list_of(g, inst, "u_factors");
  if (factors.empty()) return skip_check(r, "no factors");
  for (const GroupSet& f : factors) {
    if (f.is_empty()) return skip_check(r, "a factor is empty");
  }
  const auto m = static_cast<std::uint32_t>(factors.size());
  std::uint64_t universe = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    universe *= g.order;
    if (universe > (1ull << 12)) {
      return skip_check(r, "product universe out of desk range");
    }
  }
  const Group gm = power_group(g, m);
  GroupSet prod(gm);
  std::vector<std::vector<Elem>> ranks;
  ranks.reserve(m);
  std::uint64_t combos = 1;
  for (const GroupSet& f : factors) {
    ranks.push_back(f.ranks());
    combos *= ranks.back().size();
  }
  std::vector<Elem> parts(m);
  for (std::uint64_t t = 0; t < combos; ++t) {
    std::uint64_t rem = t;
    for (std::uint32_t i = m; i-- > 0;) {
      parts[i] = ranks[i][rem % ranks[i].size()];
      rem /= ranks[i].size();
    }
    prod.insert(tuple_rank(g, parts));
  }
  if (prod.is_full()) {
    bool all_full = true;
    for (const GroupSet& f : factors) all_full = all_full && f.is_full();
    r.lhs = "INF";
    r.rhs = all_full ? "INF" : "finite";
    r.holds = all_full;
    return r;
  }
  const UnOut up = un_certified(prod);
  if (!up.ok) return skip_check(r, up.why);
  bool any_finite = false;
  std::uint64_t min_un = 0;
  for (const GroupSet& f : factors) {
    if (f.is_full()) continue;
    const UnOut uf = un_certified(f);
    if (!uf.ok) return skip_check(r, uf.why);
    if (!any_finite || uf.value < min_un) min_un = uf.value;
    any_finite = true;
  }
  if (!any_finite) return skip_check(r, "inconsistent product state");
  conclude_eq(r, BigInt(up.value), BigInt(min_un));
  return r;
}

/// Almost-universal expansion: with k = un(U), m <= k, sigma = |S|/N:
/// |U^m - Delta_m(S)| > N^m * (1 - (m/(k-m+1)) * ln(1/sigma)).
inline CheckResult check_v27(const Json& inst) {
  CheckResult r = begin_check(
      "V27", inst,
      "|U^m - Delta_m(S)| > N^m * (1 - (m/(k-m+1)) * ln(1/sigma))");
  const Group g = group_of(inst);
  const GroupSet u = set_of(g, inst, "u");
  const GroupSet s = set_of(g, inst, "s");
  const std::uint64_t m = inst.at("m").get<std::uint64_t>();
  if (u.is_empty() || u.is_full()) {
    return skip_check(r, "U must be nonempty and proper");
  }
  if (s.is_empty() || s.is_full()) {
    return skip_check(r, "S must be nonempty and proper");
  }
  if (m == 0) return skip_check(r, "need m >= 1");
  const UnOut uu = un_certified(u);
  if (!uu.ok) return skip_check(r, uu.why);
  const std::uint64_t k = uu.value;
  if (k < m) {
    return skip_check(r, "premise un(U) >= m not met (un = " +
                             std::to_string(k) + ")");
  }
  const double n = static_cast<double>(g.order);
  const double sigma = static_cast<double>(s.size()) / n;
  const double rhs =
      std::pow(n, static_cast<double>(m)) *
      (1.0 - (static_cast<double>(m) / static_cast<double>(k - m + 1)) *
                 std::log(1.0 / sigma));
  r.note = "un(U) = " + std::to_string(k);
  conclude_ge_real(r, static_cast<double>(higher_diff_size(u, m, s)), rhs);
  return r;
}

/// Dense sets in a prime field have small multiplicative coverings of their
/// difference set: (p-3)*|A| > 2p implies (cov_mult(A-A) - 1) * |A| <= p.
inline CheckResult check_v28(const Json& inst) {
  CheckResult r = begin_check(
      "V28", inst, "(p-3)*|A| > 2p implies (cov_mult(A-A)-1)*|A| <= p");
  const Group g = group_of(inst);
  const std::uint64_t p = g.order;
  const GroupSet a = set_of(g, inst, "a");
  if (p < 5 || !is_prime_u64(p)) return skip_check(r, "p must be prime, >= 5");
  if (a.size() < 2) return skip_check(r, "need |A| >= 2");
  if ((p - 3) * a.size() <= 2 * p) {
    return skip_check(r, "density premise (p-3)|A| > 2p not met");
  }
  const MultCover mc = cov_mult(difference_set(a, a));
  if (!mc.cover.optimal) {
    return skip_check(r, "cover search exhausted its node budget");
  }
  conclude_le(r, BigInt(mc.cover.value - 1) * BigInt(a.size()), BigInt(p));
  return r;
}

/// Report-only: additive covering number of the quadratic residues against
/// the (1/2)*log2(p) landmark.  Never fails; the measurement is the output.
inline CheckResult check_v29(const Json& inst) {
  CheckResult r = begin_check(
      "V29", inst, "report: cov(QR(p)) vs (1/2)*log2(p)");
  const std::uint64_t p = inst.at("p").get<std::uint64_t>();
  const GroupSet q = quadratic_residues(p);
  const CoverWitness c = cov_exact(q);
  const double landmark = 0.5 * std::log2(static_cast<double>(p));
  r.lhs = std::to_string(c.value);
  r.rhs = fmt_real(landmark);
  r.holds = true;
  r.slack = static_cast<double>(c.value) - landmark;
  r.note = std::string("report-only; optimal = ") +
           (c.optimal ? "true" : "false") +
           ", ratio = " + fmt_real(static_cast<double>(c.value) / landmark);
  return r;
}

/// Difference-set complements are multiplicatively expensive to cover:
/// A-A != F_p implies cov_mult(F_p \ (A-A)) >= ln(p-1) / ln(1/alpha).
inline CheckResult check_v30(const Json& inst) {
  CheckResult r = begin_check(
      "V30", inst, "cov_mult(F_p \\ (A-A)) >= ln(p-1) / ln(1/alpha)");
  const Group g = group_of(inst);
  const std::uint64_t p = g.order;
  const GroupSet a = set_of(g, inst, "a");
  if (p < 5 || !is_prime_u64(p)) return skip_check(r, "p must be prime, >= 5");
  if (a.is_empty()) return skip_check(r, "A is empty");
  const GroupSet d = difference_set(a, a);
  if (d.is_full()) return skip_check(r, "premise A-A != F_p not met");
  const MultCover mc = cov_mult(complement(d));
  if (!mc.cover.optimal) {
    return skip_check(r, "cover search exhausted its node budget");
  }
  const double alpha =
      static_cast<double>(a.size()) / static_cast<double>(p);
  const double rhs =
      std::log(static_cast<double>(p - 1)) / std::log(1.0 / alpha);
  conclude_ge_real(r, static_cast<double>(mc.cover.value), rhs);
  return r;
}

// ---------------------------------------------------------------------------
// instance generators
// ---------------------------------------------------------------------------

inline Group pick_group(Rng& rng, std::initializer_list<const char*> names) {
  std::vector<const char*> v(names);
  return parse_group(v[rng.below(v.size())]);
}

inline GroupSet rand_subset(const Group& g, Rng& rng, double density) {
  GroupSet s(g);
  for (Elem x = 0; x < g.order; ++x) {
    if (rng.bernoulli(density)) s.insert(x);
  }
  return s;
}

inline GroupSet rand_nonempty(const Group& g, Rng& rng, double density) {
  GroupSet s = rand_subset(g, rng, density);
  if (s.is_empty()) s.insert(rng.below(g.order));
  return s;
}

inline GroupSet rand_proper_nonempty(const Group& g, Rng& rng,
                                     double density) {
  GroupSet s = rand_nonempty(g, rng, density);
  if (s.is_full()) s.erase(rng.below(g.order));
  return s;
}

/// Nonempty set with density at least min_density (topped up at random).
inline GroupSet rand_dense_at_least(const Group& g, Rng& rng, double density,
                                    double min_density) {
  GroupSet s = rand_nonempty(g, rng, density);
  while (static_cast<double>(s.size()) <
         min_density * static_cast<double>(g.order)) {
    s.insert(rng.below(g.order));
  }
  return s;
}

inline Json base_instance(const Group& g) {
  return Json{{"group", group_to_string(g)}};
}

inline Json gen_v01(Rng& rng) {
  const Group g = pick_group(rng, {"Z16", "Z20", "Z24", "Z30", "Z36"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.15 + 0.35 * rng.unit()));
  static constexpr std::pair<int, int> kNm[] = {
      {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}};
  const auto [n, m] = kNm[rng.below(6)];
  inst["n"] = n;
  inst["m"] = m;
  return inst;
}

inline Json gen_v02(Rng& rng) {
  const Group g = pick_group(rng, {"Z5", "Z6", "Z7", "Z8", "Z2^3", "Z2xZ4"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_proper_nonempty(g, rng, 0.2 + 0.6 * rng.unit()));
  return inst;
}

inline Json gen_v03(Rng& rng) {
  const Group g = pick_group(
      rng, {"Z12", "Z18", "Z24", "Z36", "Z48", "Z2^5", "Z6xZ6", "Z4xZ8"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.1 + 0.6 * rng.unit()));
  return inst;
}

inline Json gen_v04(Rng& rng) {
  const Group g = pick_group(rng, {"Z24", "Z36", "Z48", "Z2^5"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(
      rand_dense_at_least(g, rng, 0.25 + 0.5 * rng.unit(), 1.0 / 6.0));
  return inst;
}

inline Json gen_v05(Rng& rng) {
  const Group g = pick_group(rng, {"Z24", "Z36", "Z48", "Z2^5"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(
      rand_dense_at_least(g, rng, 0.2 + 0.5 * rng.unit(), 1.0 / 6.0));
  inst["b"] = set_to_json(
      rand_dense_at_least(g, rng, 0.2 + 0.5 * rng.unit(), 1.0 / 6.0));
  return inst;
}

inline Json gen_v06(Rng& rng) {
  const Group g = pick_group(rng, {"Z12", "Z16", "Z20", "Z24", "Z30", "Z36"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.2 + 0.3 * rng.unit()));
  inst["b"] = set_to_json(rand_nonempty(g, rng, 0.2 + 0.3 * rng.unit()));
  inst["e"] = set_to_json(rand_nonempty(g, rng, 0.15 + 0.4 * rng.unit()));
  return inst;
}

inline Json gen_v0708(Rng& rng) {
  const Group g = pick_group(
      rng, {"Z9", "Z12", "Z16", "Z20", "Z24", "Z30", "Z36", "Z2^4", "Z6xZ4"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.08 + 0.3 * rng.unit()));
  inst["b"] = set_to_json(rand_nonempty(g, rng, 0.08 + 0.3 * rng.unit()));
  return inst;
}

inline Json gen_v09(Rng& rng) {
  const Group g = pick_group(rng, {"Z8", "Z12", "Z16", "Z20", "Z24", "Z3^2"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.25 + 0.3 * rng.unit()));
  inst["b"] = set_to_json(rand_nonempty(g, rng, 0.2 + 0.3 * rng.unit()));
  GroupSet x(g);
  x.insert(rng.below(g.order));
  if (rng.bernoulli(0.5)) x.insert(rng.below(g.order));
  inst["x"] = set_to_json(x);
  return inst;
}

inline Json gen_v10(Rng& rng) {
  static constexpr std::pair<int, int> kNm[] = {{2, 2}, {3, 2}, {2, 3}};
  const auto [n, m] = kNm[rng.below(3)];
  const Group g = (n * m > 4)
                      ? pick_group(rng, {"Z6", "Z7", "Z8", "Z9", "Z10"})
                      : pick_group(rng, {"Z8", "Z10", "Z12", "Z2xZ6"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.3 + 0.3 * rng.unit()));
  inst["b"] = set_to_json(rand_nonempty(g, rng, 0.3 + 0.3 * rng.unit()));
  inst["n"] = n;
  inst["m"] = m;
  return inst;
}

inline Json gen_v11(Rng& rng) {
  const Group g = pick_group(rng, {"Z6", "Z7", "Z8", "Z9", "Z10"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.3 + 0.3 * rng.unit()));
  inst["b"] = set_to_json(rand_nonempty(g, rng, 0.3 + 0.3 * rng.unit()));
  inst["s"] = set_to_json(rand_nonempty(g, rng, 0.25 + 0.3 * rng.unit()));
  static constexpr std::pair<int, int> kMn[] = {
      {1, 2}, {2, 1}, {2, 2}, {3, 1}, {1, 3}, {2, 3}, {3, 2}};
  const auto [m, n] = kMn[rng.below(7)];
  inst["m"] = m;
  inst["n"] = n;
  return inst;
}

inline Json gen_v12(Rng& rng) {
  static constexpr std::pair<int, int> kMl[] = {{2, 2}, {3, 2}, {2, 3}};
  const auto [m, l] = kMl[rng.below(3)];
  const Group g = pick_group(rng, {"Z6", "Z7", "Z8", "Z9", "Z10", "Z12"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.3 + 0.4 * rng.unit()));
  inst["m"] = m;
  inst["l"] = l;
  return inst;
}

inline Json gen_v13(Rng& rng) {
  const Group g = pick_group(rng, {"Z4", "Z5", "Z6", "Z7", "Z8"});
  Json inst = base_instance(g);
  inst["u"] = set_to_json(rand_nonempty(g, rng, 0.5 + 0.4 * rng.unit()));
  const std::uint64_t k = 1 + rng.below(2);
  const std::uint64_t n = 1 + rng.below(2);
  inst["k"] = k;
  inst["n"] = n;
  Json tuples = Json::array();
  const std::uint64_t cnt = 1 + rng.below(4);
  for (std::uint64_t i = 0; i < cnt; ++i) {
    Json t = Json::array();
    for (std::uint64_t j = 0; j < n; ++j) t.push_back(rng.below(g.order));
    tuples.push_back(std::move(t));
  }
  inst["s_tuples"] = tuples;
  return inst;
}

/// Fixed equation configurations with cached pools of avoiding sets.
struct EquationConfig {
  const char* group;
  std::vector<std::int64_t> coeffs;
  Elem beta;
};

inline const std::vector<GroupSet>& solution_free_pool(
    const EquationConfig& cfg) {
  static std::mutex mu;
  static std::map<std::string, std::vector<GroupSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = cfg.group;
  for (std::int64_t c : cfg.coeffs) key += "," + std::to_string(c);
  key += ";" + std::to_string(cfg.beta);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const Group g = parse_group(cfg.group);
    it = cache.emplace(key, find_solution_free_sets(g, cfg.coeffs, cfg.beta))
             .first;
  }
  return it->second;
}

inline Json equation_instance(Rng& rng, const EquationConfig& cfg,
                              std::uint64_t eps_num, std::uint64_t eps_den) {
  const Group g = parse_group(cfg.group);
  Json inst = base_instance(g);
  const std::vector<GroupSet>& pool = solution_free_pool(cfg);
  if (pool.empty()) {
    inst["a"] = Json::array();
  } else {
    inst["a"] = set_to_json(pool[rng.below(pool.size())]);
  }
  inst["coeffs"] = cfg.coeffs;
  inst["beta"] = cfg.beta;
  if (eps_den != 0) {
    inst["eps_num"] = eps_num;
    inst["eps_den"] = eps_den;
  }
  return inst;
}

inline Json gen_v14(Rng& rng) {
  static const std::vector<EquationConfig> kConfigs = {
      {"Z12", {1, 1, -1}, 5},
      {"Z13", {1, 1, 1}, 0},
      {"Z11", {1, 1, 1, 1}, 3},
      {"Z13", {1, 1, -1, 1, 1}, 2},
  };
  return equation_instance(rng, kConfigs[rng.below(kConfigs.size())], 0, 0);
}

inline Json gen_v15(Rng& rng) {
  const Group g = pick_group(rng, {"Z32", "Z64"});
  Json inst = base_instance(g);
  GroupSet a(g);
  if (rng.bernoulli(0.5)) {
    // Co-small sets are flat: remove a few points from the full group.
    a = GroupSet::full(g);
    const std::uint64_t remove = 1 + rng.below(g.order / 8);
    for (std::uint64_t i = 0; i < remove; ++i) a.erase(rng.below(g.order));
  } else {
    a = rand_nonempty(g, rng, 0.5 + 0.25 * rng.unit());
  }
  inst["a"] = set_to_json(a);
  inst["k"] = 2 + rng.below(2);
  static constexpr std::pair<int, int> kEps[] = {{1, 2}, {3, 4}, {1, 8}};
  const auto [u, v] = kEps[rng.below(3)];
  inst["eps_num"] = u;
  inst["eps_den"] = v;
  return inst;
}

inline Json gen_v16(Rng& rng) {
  static const std::vector<EquationConfig> kConfigs = {
      {"Z12", {1, 1, 1, -1}, 7},
      {"Z13", {1, 1, 1, 1}, 1},
      {"Z14", {1, 1, -1, 1, 1}, 3},
  };
  return equation_instance(rng, kConfigs[rng.below(kConfigs.size())], 1, 8);
}

inline Json gen_v17(Rng& rng) {
  const Group g = pick_group(rng, {"Z8", "Z12", "Z16", "Z20", "Z24"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.25 + 0.35 * rng.unit()));
  GroupSet x(g);
  x.insert(rng.below(g.order));
  if (rng.bernoulli(0.5)) x.insert(rng.below(g.order));
  inst["x"] = set_to_json(x);
  return inst;
}

inline Json gen_v18(Rng& rng) {
  const Group g = pick_group(rng, {"Z8", "Z12", "Z16", "Z20", "Z24"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.2 + 0.4 * rng.unit()));
  inst["b"] = set_to_json(rand_proper_nonempty(g, rng, 0.15 + 0.3 * rng.unit()));
  return inst;
}

inline Json gen_v19(Rng& rng) {
  const Group g = pick_group(rng, {"Z8", "Z12", "Z16", "Z20", "Z24"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.2 + 0.4 * rng.unit()));
  GroupSet b(g);
  const std::uint64_t cnt = 1 + rng.below(3);
  for (std::uint64_t i = 0; i < cnt; ++i) b.insert(rng.below(g.order));
  inst["b"] = set_to_json(b);
  return inst;
}

inline Json gen_v20(Rng& rng) {
  const Group g = pick_group(rng, {"Z8", "Z12", "Z16", "Z20", "Z24"});
  Json inst = base_instance(g);
  const GroupSet a = rand_nonempty(g, rng, 0.25 + 0.35 * rng.unit());
  inst["a"] = set_to_json(a);
  const std::vector<Elem> ranks = a.ranks();
  const Elem pivot = ranks[rng.below(ranks.size())];
  Json xs = Json::array();
  const std::uint64_t cnt = 1 + rng.below(2);
  for (std::uint64_t i = 0; i < cnt; ++i) {
    xs.push_back(sub(g, pivot, ranks[rng.below(ranks.size())]));
  }
  inst["x_tuple"] = xs;
  return inst;
}

inline Json gen_v21(Rng& rng) {
  const Group g = pick_group(rng, {"Z6", "Z8", "Z10", "Z12"});
  Json inst = base_instance(g);
  for (const char* key : {"a", "b", "c", "d"}) {
    inst[key] = set_to_json(rand_nonempty(g, rng, 0.35 + 0.3 * rng.unit()));
  }
  return inst;
}

inline Json gen_v22(Rng& rng) {
  const Group g = pick_group(rng, {"Z12", "Z16", "Z24", "Z30", "Z36"});
  Json inst = base_instance(g);
  inst["a"] = set_to_json(rand_nonempty(g, rng, 0.2 + 0.3 * rng.unit()));
  inst["b"] = set_to_json(rand_proper_nonempty(g, rng, 0.15 + 0.3 * rng.unit()));
  return inst;
}

inline Json gen_v23(Rng& rng) {
  const Group g = pick_group(rng, {"Z4", "Z5", "Z6", "Z7", "Z8"});
  Json inst = base_instance(g);
  Json w = Json::array();
  const std::uint64_t k1 = 1 + rng.below(2);
  for (std::uint64_t i = 0; i < k1; ++i) {
    w.push_back(set_to_json(rand_nonempty(g, rng, 0.3 + 0.3 * rng.unit())));
  }
  Json y = Json::array();
  y.push_back(set_to_json(rand_nonempty(g, rng, 0.3 + 0.3 * rng.unit())));
  inst["w_factors"] = w;
  inst["y_factors"] = y;
  inst["x"] = set_to_json(rand_nonempty(g, rng, 0.3 + 0.3 * rng.unit()));
  inst["z"] = set_to_json(rand_nonempty(g, rng, 0.3 + 0.3 * rng.unit()));
  return inst;
}

inline Json gen_v24(Rng& rng) {
  const Group g = pick_group(rng, {"Z4", "Z5", "Z6"});
  Json inst = base_instance(g);
  static const std::vector<std::vector<std::uint32_t>> kBlocks = {
      {1, 1}, {2, 1}, {2}};
  const std::vector<std::uint32_t>& blocks = kBlocks[rng.below(kBlocks.size())];
  inst["blocks"] = blocks;
  inst["a0"] = set_to_json(rand_nonempty(g, rng, 0.4 + 0.3 * rng.unit()));
  for (const char* key : {"b_tuples", "c_tuples"}) {
    Json tuples = Json::array();
    const std::uint64_t cnt = 2 + rng.below(2);
    for (std::uint64_t i = 0; i < cnt; ++i) {
      Json t = Json::array();
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        t.push_back(rng.below(g.order));
      }
      tuples.push_back(std::move(t));
    }
    inst[key] = tuples;
  }
  return inst;
}

inline Json gen_v25(Rng& rng) {
  const Group g = pick_group(rng, {"Z6", "Z7", "Z8"});
  Json inst = base_instance(g);
  static const std::vector<std::vector<std::uint32_t>> kBlocks = {
      {1, 1}, {2}, {1, 2}};
  const std::vector<std::uint32_t>& blocks = kBlocks[rng.below(kBlocks.size())];
  inst["blocks"] = blocks;
  inst["q"] = set_to_json(rand_nonempty(g, rng, 0.3 + 0.4 * rng.unit()));
  Json tuples = Json::array();
  const std::uint64_t cnt = 2 + rng.below(2);
  for (std::uint64_t i = 0; i < cnt; ++i) {
    Json t = Json::array();
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      t.push_back(rng.below(g.order));
    }
    tuples.push_back(std::move(t));
  }
  inst["b_tuples"] = tuples;
  return inst;
}

inline Json gen_v26(Rng& rng) {
  const bool wide = rng.bernoulli(0.7);
  const Group g = wide ? pick_group(rng, {"Z6", "Z8", "Z10", "Z12", "Z16"})
                       : pick_group(rng, {"Z4", "Z5", "Z6"});
  const std::uint64_t m = wide ? 2 : 3;
  Json inst = base_instance(g);
  Json factors = Json::array();
  for (std::uint64_t i = 0; i < m; ++i) {
    if (rng.bernoulli(0.15)) {
      factors.push_back(set_to_json(GroupSet::full(g)));
    } else {
      factors.push_back(
          set_to_json(rand_nonempty(g, rng, 0.4 + 0.4 * rng.unit())));
    }
  }
  inst["u_factors"] = factors;
  return inst;
}

inline Json gen_v27(Rng& rng) {
  const Group g = pick_group(rng, {"Z6", "Z8", "Z10", "Z12"});
  Json inst = base_instance(g);
  inst["u"] = set_to_json(rand_proper_nonempty(g, rng, 0.5 + 0.3 * rng.unit()));
  inst["s"] = set_to_json(rand_proper_nonempty(g, rng, 0.2 + 0.4 * rng.unit()));
  inst["m"] = 1 + rng.below(2);
  return inst;
}

inline Json gen_v28(Rng& rng) {
  static constexpr std::uint64_t kPrimes[] = {11, 13, 17, 19, 23,
                                              29, 31, 41, 53, 71, 101};
  const std::uint64_t p = kPrimes[rng.below(std::size(kPrimes))];
  const Group g = make_group({static_cast<std::uint32_t>(p)});
  Json inst = base_instance(g);
  GroupSet a = rand_nonempty(g, rng, 0.3 + 0.4 * rng.unit());
  while (a.size() < 2) a.insert(rng.below(p));
  inst["a"] = set_to_json(a);
  inst["p"] = p;
  return inst;
}

inline Json gen_v29(Rng& rng) {
  static constexpr std::uint64_t kPrimes[] = {7,  11, 13, 17, 19, 23,
                                              29, 31, 43, 61, 101};
  const std::uint64_t p = kPrimes[rng.below(std::size(kPrimes))];
  Json inst;
  inst["p"] = p;
  return inst;
}

inline Json gen_v30(Rng& rng) {
  static constexpr std::uint64_t kPrimes[] = {7, 11, 13, 17, 19, 23, 29, 31};
  const std::uint64_t p = kPrimes[rng.below(std::size(kPrimes))];
  const Group g = make_group({static_cast<std::uint32_t>(p)});
  Json inst = base_instance(g);
  GroupSet a(g);
  const std::uint64_t cnt = 2 + rng.below(3);
  while (a.size() < cnt) a.insert(rng.below(p));
  inst["a"] = set_to_json(a);
  inst["p"] = p;
  return inst;
}

}  // namespace checks

// ---------------------------------------------------------------------------
// registry and campaigns
// ---------------------------------------------------------------------------

using CheckFn = CheckResult (*)(const Json&);
using InstanceFn = Json (*)(Rng&);

struct CheckEntry {
  const char* id;
  CheckFn eval;
  InstanceFn gen;
};

inline const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> reg = {
      {"V01", &checks::check_v01, &checks::gen_v01},
      {"V02", &checks::check_v02, &checks::gen_v02},
      {"V03", &checks::check_v03, &checks::gen_v03},
      {"V04", &checks::check_v04, &checks::gen_v04},
      {"V05", &checks::check_v05, &checks::gen_v05},
      {"V06", &checks::check_v06, &checks::gen_v06},
      {"V07", &checks::check_v07, &checks::gen_v0708},
      {"V08", &checks::check_v08, &checks::gen_v0708},
      {"V09", &checks::check_v09, &checks::gen_v09},
      {"V10", &checks::check_v10, &checks::gen_v10},
      {"V11", &checks::check_v11, &checks::gen_v11},
      {"V12", &checks::check_v12, &checks::gen_v12},
      {"V13", &checks::check_v13, &checks::gen_v13},
      {"V14", &checks::check_v14, &checks::gen_v14},
      {"V15", &checks::check_v15, &checks::gen_v15},
      {"V16", &checks::check_v16, &checks::gen_v16},
      {"V17", &checks::check_v17, &checks::gen_v17},
      {"V18", &checks::check_v18, &checks::gen_v18},
      {"V19", &checks::check_v19, &checks::gen_v19},
      {"V20", &checks::check_v20, &checks::gen_v20},
      {"V21", &checks::check_v21, &checks::gen_v21},
      {"V22", &checks::check_v22, &checks::gen_v22},
      {"V23", &checks::check_v23, &checks::gen_v23},
      {"V24", &checks::check_v24, &checks::gen_v24},
      {"V25", &checks::check_v25, &checks::gen_v25},
      {"V26", &checks::check_v26, &checks::gen_v26},
      {"V27", &checks::check_v27, &checks::gen_v27},
      {"V28", &checks::check_v28, &checks::gen_v28},
      {"V29", &checks::check_v29, &checks::gen_v29},
      {"V30", &checks::check_v30, &checks::gen_v30},
  };
  return reg;
}

inline std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const CheckEntry& e : check_registry()) ids.emplace_back(e.id);
  return ids;
}

inline const CheckEntry& find_check(const std::string& id) {
  for (const CheckEntry& e : check_registry()) {
    if (id == e.id) return e;
  }
  throw std::invalid_argument("unknown check id: " + id);
}

/// Evaluate one check on one explicit instance.  Evaluator exceptions are
/// surfaced as failures, never swallowed.
inline CheckResult run_check(const std::string& id, const Json& instance) {
  const CheckEntry& entry = find_check(id);
  try {
    return entry.eval(instance);
  } catch (const std::exception& e) {
    CheckResult r;
    r.check_id = id;
    r.instance = instance;
    r.relation = "evaluator error";
    r.holds = false;
    r.note = std::string("exception: ") + e.what();
    return r;
  }
}

/// Deterministic instance for (check, rng-state).
inline Json make_instance(const std::string& id, Rng& rng) {
  return find_check(id).gen(rng);
}

namespace detail_campaign {

struct Partial {
  std::map<std::string, CheckTally> per_check;
  std::vector<CheckResult> failures;
  std::uint64_t evaluated = 0, passed = 0, failed = 0, skipped = 0;
  bool truncated = false;
};

inline void absorb(Partial& p, CheckResult&& r, std::size_t max_failures) {
  CheckTally& t = p.per_check[r.check_id];
  ++p.evaluated;
  if (r.skipped) {
    ++t.skipped;
    ++p.skipped;
  } else if (r.holds) {
    ++t.passed;
    ++p.passed;
  } else {
    ++t.failed;
    ++p.failed;
    if (p.failures.size() < max_failures) {
      p.failures.push_back(std::move(r));
    } else {
      p.truncated = true;
    }
  }
}

}  // namespace detail_campaign

/// Randomized campaign: `trials` independent instances of every listed check.
/// Instance (t, c) depends only on (seed, t, c), so reports are identical for
/// any parallelism.
inline CampaignReport run_campaign(const std::vector<std::string>& ids,
                                   std::uint64_t trials, std::uint64_t seed,
                                   unsigned parallelism = 1,
                                   std::size_t max_failures = 64) {
  const auto t0 = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.suite = "all";
  rep.seed = seed;
  rep.trials = trials;
  for (const std::string& id : ids) rep.per_check[id];  // stable key order

  std::vector<const CheckEntry*> entries;
  entries.reserve(ids.size());
  for (const std::string& id : ids) entries.push_back(&find_check(id));

  unsigned nthreads = parallelism == 0 ? 1 : parallelism;
  nthreads = static_cast<unsigned>(
      std::min<std::uint64_t>(nthreads, std::max<std::uint64_t>(trials, 1)));

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                       detail_campaign::Partial& out) {
    for (std::uint64_t t = lo; t < hi; ++t) {
      const std::uint64_t trial_seed = Rng::derive(seed, t);
      for (std::size_t c = 0; c < entries.size(); ++c) {
        Rng rng(Rng::derive(trial_seed, c));
        const Json inst = entries[c]->gen(rng);
        detail_campaign::absorb(out, run_check(entries[c]->id, inst),
                                max_failures);
      }
    }
  };

  std::vector<detail_campaign::Partial> parts(nthreads);
  if (nthreads <= 1) {
    run_range(0, trials, parts[0]);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (trials + nthreads - 1) / nthreads;
    for (unsigned i = 0; i < nthreads; ++i) {
      const std::uint64_t lo = std::min<std::uint64_t>(trials, i * chunk);
      const std::uint64_t hi = std::min<std::uint64_t>(trials, lo + chunk);
      workers.emplace_back(run_range, lo, hi, std::ref(parts[i]));
    }
    for (std::thread& w : workers) w.join();
  }

  for (detail_campaign::Partial& p : parts) {
    rep.evaluated += p.evaluated;
    rep.passed += p.passed;
    rep.failed += p.failed;
    rep.skipped += p.skipped;
    rep.failures_truncated = rep.failures_truncated || p.truncated;
    for (auto& [id, t] : p.per_check) {
      CheckTally& dst = rep.per_check[id];
      dst.passed += t.passed;
      dst.failed += t.failed;
      dst.skipped += t.skipped;
    }
    for (CheckResult& f : p.failures) {
      if (rep.failures.size() < max_failures) {
        rep.failures.push_back(std::move(f));
      } else {
        rep.failures_truncated = true;
      }
    }
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

inline CampaignReport run_random_campaign(std::uint64_t trials,
                                          std::uint64_t seed,
                                          unsigned parallelism = 1) {
  return run_campaign(all_check_ids(), trials, seed, parallelism);
}

/// Exhaustive small-group suite: for every nonempty proper subset A of G the
/// duality, sandwich, inclusion, decomposition and product-minimum checks run
/// on deterministically derived instances.
inline CampaignReport run_exhaustive_core(const Group& g,
                                          std::size_t max_failures = 64) {
  if (g.order < 2 || g.order > 8) {
    throw std::invalid_argument(
        "core suite: group order must lie in [2, 8]");
  }
  const auto t0 = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.suite = "core";
  rep.seed = 0;
  detail_campaign::Partial part;

  const std::uint64_t n = g.order;
  const std::string gname = group_to_string(g);
  for (std::uint64_t mask = 1; mask + 1 < (1ull << n); ++mask) {
    GroupSet a(g);
    for (Elem x = 0; x < n; ++x) {
      if ((mask >> x) & 1) a.insert(x);
    }
    const Json aj = set_to_json(a);
    const Json cj = set_to_json(complement(a));

    detail_campaign::absorb(
        part, run_check("V02", Json{{"group", gname}, {"a", aj}}),
        max_failures);
    detail_campaign::absorb(
        part, run_check("V03", Json{{"group", gname}, {"a", aj}}),
        max_failures);

    for (Elem x1 = 0; x1 < n; ++x1) {
      for (Elem x2 = x1; x2 < n; ++x2) {
        Json xs = Json::array();
        xs.push_back(x1);
        if (x2 != x1) xs.push_back(x2);
        detail_campaign::absorb(
            part,
            run_check("V09", Json{{"group", gname},
                                  {"a", aj},
                                  {"b", aj},
                                  {"x", xs}}),
            max_failures);
      }
    }

    detail_campaign::absorb(
        part,
        run_check("V23", Json{{"group", gname},
                              {"w_factors", Json::array({aj})},
                              {"y_factors", Json::array({aj})},
                              {"x", cj},
                              {"z", aj}}),
        max_failures);

    detail_campaign::absorb(
        part,
        run_check("V26", Json{{"group", gname},
                              {"u_factors", Json::array({aj, cj})}}),
        max_failures);
    ++rep.trials;
  }

  rep.evaluated = part.evaluated;
  rep.passed = part.passed;
  rep.failed = part.failed;
  rep.skipped = part.skipped;
  rep.per_check = std::move(part.per_check);
  rep.failures = std::move(part.failures);
  rep.failures_truncated = part.truncated;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

// ---------------------------------------------------------------------------
// prime-field covering table
// ---------------------------------------------------------------------------

/// One measured cell of the covering table.
struct TableRow {
  std::uint64_t p = 0;
  std::string family;
  std::string set_label;
  std::string op;          ///< "+" or "x"
  std::string value;       ///< covering number or "infeasible"
  bool optimal = false;
  std::string predicted;   ///< expected growth class (descriptive)
  bool asserted = false;   ///< row carries a hard bound that is checked
  bool holds = true;
  std::string note;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool all_asserted_hold = true;
  std::uint64_t seed = 0;
};

namespace detail_table {

inline bool has_nonzero(const GroupSet& s) {
  return s.size() > (s.test(0) ? 1u : 0u);
}

}  // namespace detail_table

/// Measure additive and multiplicative covering numbers of the eight derived
/// sets (difference set, sumset, product set, inverse sumset and their
/// complements) for each prime and family.  Two cells carry asserted bounds:
/// cov(A-A) <= ceil(N/|A|) and cov(A+B) <= ceil((N/|A|) ln(N/|B|)) + 1.
inline TableReport table_experiment(const std::vector<std::uint64_t>& ps,
                                    const std::vector<std::string>& families,
                                    std::uint64_t seed) {
  // Expected growth classes as the prime grows, L = log p.  "forall" marks
  // cells whose value can be made arbitrary by choosing the family
  // adversarially; "?" marks cells with no proven behaviour at all.
  static const char* kPlus[8] = {"O(1)",       "forall-O(1)", "O(1)",
                                 "forall-O(1)", "?-omega(L)", "omega(L)",
                                 "?-omega(L)",  "omega(L)"};
  static const char* kTimes[8] = {"O(1)",   "omega(L)", "forall",
                                  "forall", "O(1)",     "forall-O(1)",
                                  "forall", "forall"};
  TableReport rep;
  rep.seed = seed;
  for (const std::uint64_t p : ps) {
    if (p < 5 || !is_prime_u64(p)) {
      throw std::invalid_argument("table: primes must be >= 5");
    }
    const Group g = make_group({static_cast<std::uint32_t>(p)});
    for (const std::string& family : families) {
      GroupSet a(g);
      GroupSet b(g);
      if (family == "random") {
        a = random_set(g, 0.5, Rng::derive(seed, 2 * p + 1)).set;
        b = random_set(g, 0.5, Rng::derive(seed, 2 * p + 2)).set;
        if (a.is_empty()) a.insert(1 % p);
        if (b.is_empty()) b.insert(1 % p);
      } else if (family == "qr") {
        a = quadratic_residues(p);
        b = a;
      } else if (family == "interval") {
        a = interval_middle_third(p);
        b = a;
      } else {
        throw std::invalid_argument("table: unknown family " + family);
      }

      const GroupSet d = difference_set(a, a);
      const GroupSet s = sumset(a, b);
      const GroupSet prod = product_set(a, b);
      const GroupSet inv = inverse_set(s);
      const std::pair<std::string, const GroupSet*> cols[8] = {
          {"A-A", &d},           {"(A-A)^c", nullptr},
          {"A+B", &s},           {"(A+B)^c", nullptr},
          {"AB", &prod},         {"(AB)^c", nullptr},
          {"(A+B)^-1", &inv},    {"((A+B)^-1)^c", nullptr},
      };
      GroupSet dc = complement(d);
      GroupSet sc = complement(s);
      GroupSet pc = complement(prod);
      GroupSet ic = complement(inv);
      const GroupSet* sets[8] = {&d, &dc, &s, &sc, &prod, &pc, &inv, &ic};

      for (int i = 0; i < 8; ++i) {
        const GroupSet& set = *sets[i];
        // additive row
        TableRow plus;
        plus.p = p;
        plus.family = family;
        plus.set_label = cols[i].first;
        plus.op = "+";
        plus.predicted = kPlus[i];
        if (set.is_empty()) {
          plus.value = "infeasible";
          plus.note = "set is empty";
        } else {
          const CoverWitness c = cov_exact(set);
          plus.value = std::to_string(c.value);
          plus.optimal = c.optimal;
          if (i == 0) {
            plus.asserted = true;
            const std::uint64_t bound = (p + a.size() - 1) / a.size();
            plus.holds = c.value <= bound;
            plus.note = "bound ceil(N/|A|) = " + std::to_string(bound);
          } else if (i == 2) {
            plus.asserted = true;
            const double raw =
                static_cast<double>(p) / static_cast<double>(a.size()) *
                std::log(static_cast<double>(p) /
                         static_cast<double>(b.size()));
            const auto bound =
                static_cast<std::uint64_t>(std::ceil(raw - kFloatGuard)) + 1;
            plus.holds = c.value <= bound;
            plus.note =
                "bound ceil((N/|A|)ln(N/|B|))+1 = " + std::to_string(bound);
          }
        }
        rep.all_asserted_hold =
            rep.all_asserted_hold && (!plus.asserted || plus.holds);
        rep.rows.push_back(plus);

        // multiplicative row
        TableRow times;
        times.p = p;
        times.family = family;
        times.set_label = cols[i].first;
        times.op = "x";
        times.predicted = kTimes[i];
        if (!detail_table::has_nonzero(set)) {
          times.value = "infeasible";
          times.note = "no nonzero elements";
        } else {
          const MultCover mc = cov_mult(set);
          times.value = std::to_string(mc.cover.value);
          times.optimal = mc.cover.optimal;
          if (mc.ctx.dropped_zero_from_set) times.note = "zero dropped";
        }
        rep.rows.push_back(times);
      }
    }
  }
  return rep;
}

inline std::string table_to_csv(const TableReport& rep) {
  std::string out =
      "p,family,set,op,value,optimal,predicted_class,asserted,holds,note\n";
  for (const TableRow& r : rep.rows) {
    out += std::to_string(r.p) + "," + r.family + "," + r.set_label + "," +
           r.op + "," + r.value + "," +
           (r.value == "infeasible" ? "" : (r.optimal ? "true" : "false")) +
           "," + r.predicted + "," + (r.asserted ? "true" : "false") + "," +
           (r.holds ? "true" : "false") + "," + r.note + "\n";
  }
  return out;
}

inline Json table_to_json(const TableReport& rep) {
  Json rows = Json::array();
  for (const TableRow& r : rep.rows) {
    rows.push_back(Json{{"p", r.p},
                        {"family", r.family},
                        {"set", r.set_label},
                        {"op", r.op},
                        {"value", r.value},
                        {"optimal", r.optimal},
                        {"predicted", r.predicted},
                        {"asserted", r.asserted},
                        {"holds", r.holds},
                        {"note", r.note}});
  }
  return Json{{"rows", rows},
              {"all_asserted_hold", rep.all_asserted_hold},
              {"seed", rep.seed}};
}

}  // namespace unicov
