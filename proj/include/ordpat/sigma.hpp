#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordpat/errors.hpp"
#include "ordpat/pattern.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

inline constexpr std::size_t kDefaultIpBound = 5;

/// The two-level poset with alpha_0..alpha_{n-1} below beta_0..beta_{n-1}
/// and alpha_i < beta_j iff i < j. alpha_i and beta_0 sit at height 0.
inline Poset sigma_op(std::size_t n) {
  if (n < 1) throw DegenerateParameter("sigma_op: n >= 1 required");
  std::vector<std::string> elements;
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back("alpha_" + std::to_string(i));
    elements.push_back("beta_" + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pairs.emplace_back("alpha_" + std::to_string(i),
                         "beta_" + std::to_string(j));
  return close_strict_pairs(std::move(elements), pairs);
}

namespace detail {

inline std::string subset_label(std::size_t mask, std::size_t n) {
  std::string s = "beta_{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mask & (std::size_t{1} << i))) continue;
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace detail

/// The two-level poset with alpha_0..alpha_{n-1} and one beta_W per subset
/// W of {0..n-1}; alpha_i < beta_W iff i is in W. Exponential in n, so the
/// bound is enforced up front.
inline Poset sigma_ip(std::size_t n, std::size_t bound = kDefaultIpBound) {
  if (n < 1) throw DegenerateParameter("sigma_ip: n >= 1 required");
  if (n > bound) throw BoundExceeded("sigma_ip", n, bound);
  std::vector<std::string> elements;
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    elements.push_back("alpha_" + std::to_string(i));
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::string w = detail::subset_label(mask, n);
    elements.push_back(w);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i))
        pairs.emplace_back("alpha_" + std::to_string(i), w);
  }
  return close_strict_pairs(std::move(elements), pairs);
}

/// Sigma_P for a consistency pattern, together with the staged relations
/// used by its structure theory: r0 is the generating relation, r1 adds one
/// composition step, r2 a second. The poset itself carries the transitive
/// closure of r0, computed independently of the staging.
struct SigmaPatternPoset {
  Poset poset;
  std::vector<LabelPair> r0;
  std::vector<LabelPair> r1;
  std::vector<LabelPair> r2;
  ConsistencyPattern pattern;

  std::string alpha(std::size_t k) const { return "alpha_C" + std::to_string(k); }
  std::string delta(std::size_t k) const { return "delta_C" + std::to_string(k); }
  std::string beta(std::size_t j) const { return "beta_" + pattern.indices[j]; }
  std::string gamma(std::size_t j) const { return "gamma_" + pattern.indices[j]; }
};

namespace detail {

inline std::vector<LabelPair> sorted_pairs(std::set<LabelPair> s) {
  return {s.begin(), s.end()};
}

// r u (r o r), where (a,c) is in r o r iff (a,b), (b,c) are in r.
inline std::vector<LabelPair> compose_step(const std::vector<LabelPair>& r) {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& [a, b] : r) succ[a].push_back(b);
  std::set<LabelPair> out(r.begin(), r.end());
  for (const auto& [a, b] : r) {
    auto it = succ.find(b);
    if (it == succ.end()) continue;
    for (const auto& c : it->second) out.insert({a, c});
  }
  return sorted_pairs(std::move(out));
}

}  // namespace detail

/// Builds Sigma_P: one alpha_Ck/delta_Ck per consistent set, one
/// beta_j/gamma_j per index, generated by alpha_Ck < beta_j and
/// gamma_j < delta_Ck for j in Ck, and beta_i < gamma_j, beta_j < gamma_i
/// for inconsistent {i,j}. Requires a pattern passing C1 and C2.
inline SigmaPatternPoset sigma_pattern(const ConsistencyPattern& p) {
  if (!validate_pattern(p).ok())
    throw Error("sigma_pattern: pattern fails C1/C2 validation");
  SigmaPatternPoset sp;
  sp.pattern = p;
  std::vector<std::string> elements;
  for (std::size_t k = 0; k < p.consistent.size(); ++k) {
    elements.push_back(sp.alpha(k));
    elements.push_back(sp.delta(k));
  }
  for (std::size_t j = 0; j < p.indices.size(); ++j) {
    elements.push_back(sp.beta(j));
    elements.push_back(sp.gamma(j));
  }
  std::set<LabelPair> r0;
  for (std::size_t k = 0; k < p.consistent.size(); ++k)
    for (std::size_t j : p.consistent[k]) {
      r0.insert({sp.alpha(k), sp.beta(j)});
      r0.insert({sp.gamma(j), sp.delta(k)});
    }
  for (const auto& [i, j] : p.inconsistent) {
    r0.insert({sp.beta(i), sp.gamma(j)});
    r0.insert({sp.beta(j), sp.gamma(i)});
  }
  sp.r0 = detail::sorted_pairs(std::move(r0));
  sp.r1 = detail::compose_step(sp.r0);
  sp.r2 = detail::compose_step(sp.r1);
  try {
    sp.poset = close_strict_pairs(std::move(elements), sp.r0);
  } catch (const CycleDetected& e) {
    throw NotAStrictOrder(std::string("sigma_pattern: ") + e.what());
  }
  return sp;
}

/// Audits the structural properties of a built Sigma_P. Every check is
/// recomputed from the stored relations, not from the way they were built:
///  - strict_order:    r2 is irreflexive and transitive as a bare pair set
///  - closure_audit:   r0, r1, r2 grow monotonically and r2 equals the
///                     independently computed transitive closure
///  - heights:         alpha/beta/gamma/delta sit at levels 0/1/2/3
///                     (skipped when some index lies in no consistent set)
///  - alpha_delta:     alpha_C < delta_C' exactly when C and C' differ
///  - five_conditions: for each index j and consistent set C the conditions
///                     j in C, alpha_C < beta_j, not alpha_C < gamma_j,
///                     gamma_j < delta_C, not beta_j < delta_C agree
///  - closed_form:     r1 and r2 match their predicted one-step unfoldings
///                     (skipped when the pattern is not maximal, where the
///                     prediction is not claimed)
inline Report verify_sigma_properties(const SigmaPatternPoset& sp) {
  Report rep;
  const auto& p = sp.pattern;
  const std::size_t nj = p.indices.size();
  const std::size_t nc = p.consistent.size();
  const std::set<LabelPair> r2set(sp.r2.begin(), sp.r2.end());

  {
    std::vector<std::string> ws;
    for (const auto& [a, b] : r2set)
      if (a == b) ws.push_back(a + " < " + a);
    for (const auto& [a, b] : r2set) {
      for (const auto& [b2, c] : r2set)
        if (b2 == b && !r2set.count({a, c}))
          ws.push_back(a + " < " + b + " < " + c + " but not " + a + " < " + c);
    }
    rep.add(ws.empty() ? CheckResult::pass("strict_order")
                       : CheckResult::fail("strict_order", ws,
                                           "r2 not a strict order"));
  }
  {
    std::vector<std::string> ws;
    auto subset = [&ws](const std::vector<LabelPair>& lo,
                        const std::vector<LabelPair>& hi, const char* what) {
      std::set<LabelPair> h(hi.begin(), hi.end());
      for (const auto& [a, b] : lo)
        if (!h.count({a, b}))
          ws.push_back(std::string(what) + " misses " + a + " < " + b);
    };
    subset(sp.r0, sp.r1, "r1");
    subset(sp.r1, sp.r2, "r2");
    auto closure = sp.poset.pairs();
    subset(sp.r2, closure, "closure");
    subset(closure, sp.r2, "r2");
    rep.add(ws.empty() ? CheckResult::pass("closure_audit")
                       : CheckResult::fail("closure_audit", ws,
                                           "staged relations disagree with "
                                           "transitive closure"));
  }
  {
    Report cov = check_coverage(p);
    if (!cov.ok()) {
      rep.add(CheckResult::skip(
          "heights",
          "exact levels presume every index lies in some consistent set",
          cov.checks.front().witnesses));
    } else {
      auto h = heights(sp.poset);
      std::vector<std::string> ws;
      auto expect = [&](const std::string& label, std::size_t lvl) {
        std::size_t got = h[sp.poset.index_of(label)];
        if (got != lvl)
          ws.push_back(label + " height=" + std::to_string(got) +
                       " expected " + std::to_string(lvl));
      };
      for (std::size_t k = 0; k < nc; ++k) {
        expect(sp.alpha(k), 0);
        expect(sp.delta(k), 3);
      }
      for (std::size_t j = 0; j < nj; ++j) {
        expect(sp.beta(j), 1);
        expect(sp.gamma(j), 2);
      }
      rep.add(ws.empty() ? CheckResult::pass("heights")
                         : CheckResult::fail("heights", ws,
                                             "levels differ from 0/1/2/3"));
    }
  }
  {
    std::vector<std::string> ws;
    for (std::size_t k = 0; k < nc; ++k)
      for (std::size_t k2 = 0; k2 < nc; ++k2) {
        const bool rel = sp.poset.less(sp.alpha(k), sp.delta(k2));
        if (k == k2 && rel)
          ws.push_back(sp.alpha(k) + " < " + sp.delta(k2));
        if (k != k2 && !rel)
          ws.push_back("missing " + sp.alpha(k) + " < " + sp.delta(k2));
      }
    rep.add(ws.empty() ? CheckResult::pass("alpha_delta")
                       : CheckResult::fail("alpha_delta", ws,
                                           "alpha/delta relations off"));
  }
  {
    std::vector<std::string> ws;
    for (std::size_t j = 0; j < nj; ++j)
      for (std::size_t k = 0; k < nc; ++k) {
        const bool in = p.consistent[k].count(j) != 0;
        const bool ab = sp.poset.less(sp.alpha(k), sp.beta(j));
        const bool ag = !sp.poset.less(sp.alpha(k), sp.gamma(j));
        const bool gd = sp.poset.less(sp.gamma(j), sp.delta(k));
        const bool bd = !sp.poset.less(sp.beta(j), sp.delta(k));
        if (ab != in || ag != in || gd != in || bd != in)
          ws.push_back("j=" + p.indices[j] + " C=" +
                       p.index_set_string(p.consistent[k]) + ": in=" +
                       std::to_string(in) + " a<b=" + std::to_string(ab) +
                       " !a<g=" + std::to_string(ag) + " g<d=" +
                       std::to_string(gd) + " !b<d=" + std::to_string(bd));
      }
    rep.add(ws.empty() ? CheckResult::pass("five_conditions")
                       : CheckResult::fail("five_conditions", ws,
                                           "equivalence broken"));
  }
  {
    Report max = check_maximality(p);
    const auto* m2 = max.find("M2");
    if (m2 == nullptr || m2->status != CheckStatus::Pass) {
      rep.add(CheckResult::skip("closed_form",
                                "predicted r1/r2 presume maximality (M2)"));
    } else {
      std::set<LabelPair> cf1(sp.r0.begin(), sp.r0.end());
      for (std::size_t k = 0; k < nc; ++k)
        for (std::size_t j = 0; j < nj; ++j)
          if (!p.consistent[k].count(j)) {
            cf1.insert({sp.alpha(k), sp.gamma(j)});
            cf1.insert({sp.beta(j), sp.delta(k)});
          }
      std::set<LabelPair> cf2 = cf1;
      for (std::size_t k = 0; k < nc; ++k)
        for (std::size_t k2 = 0; k2 < nc; ++k2)
          if (k != k2) cf2.insert({sp.alpha(k), sp.delta(k2)});
      std::vector<std::string> ws;
      auto diff = [&ws](const std::vector<LabelPair>& got,
                        const std::set<LabelPair>& want, const char* name) {
        std::set<LabelPair> g(got.begin(), got.end());
        for (const auto& [a, b] : g)
          if (!want.count({a, b}))
            ws.push_back(std::string(name) + " extra " + a + " < " + b);
        for (const auto& [a, b] : want)
          if (!g.count({a, b}))
            ws.push_back(std::string(name) + " missing " + a + " < " + b);
      };
      diff(sp.r1, cf1, "r1");
      diff(sp.r2, cf2, "r2");
      rep.add(ws.empty() ? CheckResult::pass("closed_form")
                         : CheckResult::fail("closed_form", ws,
                                             "staged relations differ from "
                                             "predicted form"));
    }
  }
  return rep;
}

}  // namespace ordpat
