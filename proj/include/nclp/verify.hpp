#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nclp/bijection.hpp"
#include "nclp/enumerate.hpp"
#include "nclp/freeness.hpp"
#include "nclp/json_io.hpp"
#include "nclp/transforms.hpp"
#include "nclp/tree.hpp"

namespace nclp {

struct VerifyEntry {
  std::string suite;
  std::string name;
  std::string identity;  // the statement being checked, in words
  nlohmann::json params;
  bool pass = true;
  nlohmann::json witness;  // null on pass; enough to reproduce the failure otherwise
};

struct VerificationReport {
  std::vector<VerifyEntry> entries;

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass; });
  }

  void sort() {
    std::stable_sort(entries.begin(), entries.end(), [](const VerifyEntry& a, const VerifyEntry& b) {
      const auto pa = a.params.dump();
      const auto pb = b.params.dump();
      return std::tie(a.suite, pa, a.name) < std::tie(b.suite, pb, b.name);
    });
  }
};

inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j{{"suite", e.suite}, {"name", e.name}, {"identity", e.identity}, {"params", e.params},
                     {"pass", e.pass}};
    if (!e.pass) j["witness"] = e.witness;
    entries.push_back(std::move(j));
  }
  const auto failed = std::count_if(report.entries.begin(), report.entries.end(), [](auto& e) { return !e.pass; });
  return nlohmann::json{{"pass", report.passed()},
                        {"entries_total", report.entries.size()},
                        {"entries_failed", failed},
                        {"entries", std::move(entries)}};
}

using KrewerasFn = std::function<NCPartition(const NCPartition&)>;

struct VerifyOptions {
  std::optional<int> order;  // overrides each suite's default size bound
  std::uint64_t seed = 7;
  int samples = 200;
  Limits limits = Limits::defaults();
  KrewerasFn kreweras = [](const NCPartition& gamma) { return nclp::kreweras(gamma); };
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"counts", "kreweras", "fixtures", "roundtrip", "prop21",
                                              "eq5",    "bridge",   "prop22",   "theorem"};
  return names;
}

// Random rationals p/q with p in [-9, 9], q in [1, 5]; the first entry is
// redrawn until nonzero so every sequence is in the domain of the t route.
inline std::vector<std::vector<Rational>> random_corpus(std::uint64_t seed, int count, int order) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    const long long p = static_cast<long long>(rng() % 19) - 9;
    const long long q = static_cast<long long>(rng() % 5) + 1;
    return Rational(p, q);
  };
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> seq;
    Rational first = 0;
    while (first == 0) first = draw();
    seq.push_back(first);
    for (int k = 1; k < order; ++k) seq.push_back(draw());
    out.push_back(std::move(seq));
  }
  return out;
}

namespace detail {

using json = nlohmann::json;

class SuiteRecorder {
 public:
  SuiteRecorder(VerificationReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  void record(std::string name, std::string identity, json params, std::optional<json> witness) {
    VerifyEntry e;
    e.suite = suite_;
    e.name = std::move(name);
    e.identity = std::move(identity);
    e.params = std::move(params);
    e.pass = !witness.has_value();
    if (witness) e.witness = std::move(*witness);
    report_.entries.push_back(std::move(e));
  }

  // Runs `body` and records a failure if it throws.
  template <class Body>
  void guarded(const std::string& name, const std::string& identity, const json& params, Body body) {
    try {
      record(name, identity, params, body());
    } catch (const Error& err) {
      record(name, identity, params, json{{"error", to_string(err.kind())}, {"message", err.what()}});
    }
  }

 private:
  VerificationReport& report_;
  std::string suite_;
};

inline int suite_order(const VerifyOptions& options, int fallback, const char* kind, int cap) {
  const int order = options.order.value_or(fallback);
  check_limit(kind, order, cap);
  return order;
}

inline json pair_json(const Rational& lhs, const Rational& rhs) {
  return json{{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
}

inline Integer binomial(int n, int k) {
  Integer out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline Integer catalan(int k) { return binomial(2 * k, k) / (k + 1); }

// Large Schroeder numbers S_0.. via S_m = S_{m-1} + sum_{k<m} S_k S_{m-1-k}.
inline std::vector<Integer> schroeder(int count) {
  std::vector<Integer> s{1};
  for (int m = 1; m < count; ++m) {
    Integer next = s[m - 1];
    for (int k = 0; k < m; ++k) next += s[k] * s[m - 1 - k];
    s.push_back(next);
  }
  return s;
}

// Coefficients of B = z / (1 - B)^2, i.e. B = z * sum_d (d+1) B^d.
inline std::vector<Integer> bicolor_counts(int count) {
  std::vector<Integer> b(count + 1, 0);
  for (int iteration = 0; iteration < count; ++iteration) {
    std::vector<Integer> power(count + 1, 0);  // B^d, truncated
    power[0] = 1;
    std::vector<Integer> next(count + 1, 0);
    for (int d = 0; d < count; ++d) {
      for (int i = 0; i + 1 <= count; ++i) next[i + 1] += (d + 1) * power[i];
      std::vector<Integer> grown(count + 1, 0);
      for (int i = 0; i <= count; ++i) {
        if (power[i] == 0) continue;
        for (int j = 1; i + j <= count; ++j) grown[i + j] += power[i] * b[j];
      }
      power = std::move(grown);
    }
    b = std::move(next);
  }
  return b;
}

inline std::optional<json> compare_count(const Integer& expected, std::size_t actual) {
  if (expected == Integer(actual)) return std::nullopt;
  return json{{"expected", expected.str()}, {"actual", actual}};
}

inline void suite_counts(VerificationReport& report, const VerifyOptions& options) {
  SuiteRecorder rec(report, "counts");
  const Limits& lim = options.limits;
  const auto s = schroeder(10);
  const auto b = bicolor_counts(7);
  for (int n = 1; n <= std::min(10, lim.nc); ++n) {
    rec.guarded("nc", "|NC(n)| = Catalan(n)", {{"family", "nc"}, {"n", n}},
                [&] { return compare_count(catalan(n), enumerate_nc(n, lim).size()); });
  }
  for (int n = 1; n <= std::min(9, lim.ncl); ++n) {
    rec.guarded("ncl", "|NCL(n)| = large Schroeder number S_{n-1}", {{"family", "ncl"}, {"n", n}},
                [&] { return compare_count(s[n - 1], enumerate_ncl(n, lim).size()); });
  }
  for (int n = 1; n <= std::min(10, lim.trees); ++n) {
    rec.guarded("trees", "|planar trees on n vertices| = Catalan(n-1)", {{"family", "trees"}, {"n", n}},
                [&] { return compare_count(catalan(n - 1), enumerate_planar_trees(n, lim).size()); });
    rec.guarded("elementary_bicolor", "|elementary bicolor trees on n vertices| = n",
                {{"family", "elementary_bicolor"}, {"n", n}},
                [&] { return compare_count(n, enumerate_bicolor_elementary(n).size()); });
  }
  for (int n = 1; n <= std::min(5, std::min(lim.bicolor, lim.ncls)); ++n) {
    rec.guarded("bicolor", "|bicolor trees on n vertices| = [z^n] of B = z/(1-B)^2", {{"family", "bicolor"}, {"n", n}},
                [&] { return compare_count(b[n], enumerate_bicolor(n, lim).size()); });
    rec.guarded("ncls", "|NCL_S(2n)| = |bicolor trees on n vertices|", {{"family", "ncls"}, {"n", n}},
                [&] { return compare_count(b[n], enumerate_ncls(n, lim).size()); });
  }
}

inline void suite_kreweras(VerificationReport& report, const VerifyOptions& options) {
  SuiteRecorder rec(report, "kreweras");
  const int order = suite_order(options, 8, "nc", options.limits.nc);
  for (int n = 1; n <= order; ++n) {
    rec.guarded("block_count", "#blocks(g) + #blocks(Kr(g)) = n + 1 for every g in NC(n)", {{"n", n}},
                [&]() -> std::optional<json> {
                  for (const auto& gamma : enumerate_nc(n, options.limits)) {
                    const NCPartition k = options.kreweras(gamma);
                    if (gamma.block_count() + k.block_count() != n + 1) {
                      return json{{"gamma", io::to_json(gamma)}, {"kreweras", io::to_json(k)},
                                  {"lhs", gamma.block_count() + k.block_count()}, {"rhs", n + 1}};
                    }
                  }
                  return std::nullopt;
                });
  }
  for (int n = 1; n <= std::min(order, 6); ++n) {
    rec.guarded("maximality",
                "g with Kr(g) on the barred points is non-crossing, and every h keeping g with h "
                "non-crossing is finer than Kr(g)",
                {{"n", n}}, [&]() -> std::optional<json> {
                  const auto& all = enumerate_nc(n, options.limits);
                  for (const auto& gamma : all) {
                    const NCPartition k = options.kreweras(gamma);
                    if (detail::find_crossing(interleave(gamma, k).blocks())) {
                      return json{{"gamma", io::to_json(gamma)}, {"kreweras", io::to_json(k)}, {"reason", "crossing"}};
                    }
                    for (const auto& h : all) {
                      if (detail::find_crossing(interleave(gamma, h).blocks())) continue;
                      if (!leq(h, k)) {
                        return json{{"gamma", io::to_json(gamma)}, {"kreweras", io::to_json(k)},
                                    {"larger_candidate", io::to_json(h)}, {"reason", "not maximal"}};
                      }
                    }
                  }
                  return std::nullopt;
                });
  }
}

inline NCLPartition example_two() {
  return validate_ncl(12, {{1, 4, 6, 9}, {2, 3}, {4, 5}, {6, 7, 8}, {10, 11}, {11, 12}});
}

inline void suite_fixtures(VerificationReport& report, const VerifyOptions&) {
  SuiteRecorder rec(report, "fixtures");
  const json params{{"partition", "example2"}};
  auto expect_blocks = [](const std::vector<Block>& actual, const std::vector<Block>& expected) -> std::optional<json> {
    if (actual == expected) return std::nullopt;
    return json{{"expected", expected}, {"actual", actual}};
  };
  rec.guarded("connected_components", "c(pi) = (1,4,5,6,7,8,9),(2,3),(10,11,12)", params, [&] {
    return expect_blocks(connected_components(example_two()).blocks(), {{1, 4, 5, 6, 7, 8, 9}, {2, 3}, {10, 11, 12}});
  });
  rec.guarded("exterior_blocks", "exterior blocks are (1,4,6,9) and (10,11)", params,
              [&] { return expect_blocks(exterior_blocks(example_two()), {{1, 4, 6, 9}, {10, 11}}); });
  rec.guarded("non_minimal", "s(pi) = {3,5,7,8,9,12}", params, [&]() -> std::optional<json> {
    const std::vector<int> expected{3, 5, 7, 8, 9, 12};
    const auto actual = non_minimal_elements(example_two());
    if (actual == expected) return std::nullopt;
    return json{{"expected", expected}, {"actual", actual}};
  });
  rec.guarded("restrict", "pi restricted to (1,4,5,6,7,8,9) is (1,2,4,7),(2,3),(4,5,6)", params, [&] {
    return expect_blocks(restrict(example_two(), {1, 4, 5, 6, 7, 8, 9}).blocks(), {{1, 2, 4, 7}, {2, 3}, {4, 5, 6}});
  });
}

inline MomentSequence moments_of(const std::vector<Rational>& values, int order) {
  return MomentSequence(std::vector<Rational>(values.begin(), values.begin() + order));
}

inline std::optional<json> compare_sequences(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
  if (lhs == rhs) return std::nullopt;
  return json{{"lhs", io::rationals_to_json(lhs)}, {"rhs", io::rationals_to_json(rhs)}};
}

inline std::vector<Rational> rationals(std::initializer_list<long long> values) {
  std::vector<Rational> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

inline void suite_roundtrip(VerificationReport& report, const VerifyOptions& options) {
  SuiteRecorder rec(report, "roundtrip");
  const int order = suite_order(options, 8, "ncl", options.limits.ncl);
  const auto corpus = random_corpus(options.seed, options.samples, order);
  const json params{{"order", order}, {"samples", options.samples}, {"seed", options.seed}};
  auto each = [&](auto&& check) -> std::optional<json> {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (auto w = check(corpus[i])) {
        (*w)["sample"] = i;
        (*w)["input"] = io::rationals_to_json(corpus[i]);
        return w;
      }
    }
    return std::nullopt;
  };
  const Limits& lim = options.limits;
  rec.guarded("moments_cumulants", "k2m(m2k(m)) = m and m2k(k2m(k)) = k", params, [&] {
    return each([&](const std::vector<Rational>& v) -> std::optional<json> {
      const MomentSequence m(v);
      if (auto w = compare_sequences(cumulants_to_moments(moments_to_cumulants(m, lim), lim).values(), v)) return w;
      return compare_sequences(moments_to_cumulants(cumulants_to_moments(CumulantSequence(v), lim), lim).values(), v);
    });
  });
  rec.guarded("moments_tcoeffs", "t2m(m2t(m)) = m and m2t(t2m(t)) = t", params, [&] {
    return each([&](const std::vector<Rational>& v) -> std::optional<json> {
      const MomentSequence m(v);
      if (auto w = compare_sequences(tcoeffs_to_moments(moments_to_tcoeffs(m, lim), lim).values(), v)) return w;
      return compare_sequences(moments_to_tcoeffs(tcoeffs_to_moments(TCoeffSequence(v), lim), lim).values(), v);
    });
  });
  const json poisson{{"moments", "catalan"}};
  rec.guarded("free_poisson_cumulants", "Catalan moments 1,2,5,14,42 have all cumulants 1", poisson, [&] {
    return compare_sequences(moments_to_cumulants(MomentSequence(rationals({1, 2, 5, 14, 42})), lim).values(),
                             rationals({1, 1, 1, 1, 1}));
  });
  rec.guarded("free_poisson_tcoeffs", "Catalan moments 1,2,5,14,42 have t = 1,1,0,0,0", poisson, [&] {
    return compare_sequences(moments_to_tcoeffs(MomentSequence(rationals({1, 2, 5, 14, 42})), lim).values(),
                             rationals({1, 1, 0, 0, 0}));
  });
}

// The same cumulant identity checked against every corpus sample at each n,
// plus two fixtures with known cumulants.
template <class Route>
void cumulant_identity_suite(SuiteRecorder& rec, const VerifyOptions& options, int order, const std::string& name,
                             const std::string& identity, Route route) {
  const auto corpus = random_corpus(options.seed, options.samples, order);
  const Limits& lim = options.limits;
  std::vector<TCoeffSequence> tcoeffs;
  std::vector<CumulantSequence> cumulants;
  for (const auto& v : corpus) {
    tcoeffs.push_back(moments_to_tcoeffs(MomentSequence(v), lim));
    cumulants.push_back(moments_to_cumulants(MomentSequence(v), lim));
  }
  for (int n = 1; n <= order; ++n) {
    rec.guarded(name, identity, {{"n", n}, {"samples", options.samples}, {"seed", options.seed}},
                [&]() -> std::optional<json> {
                  for (std::size_t i = 0; i < corpus.size(); ++i) {
                    const Rational lhs = route(tcoeffs[i], n);
                    if (lhs != cumulants[i][n]) {
                      json w = pair_json(lhs, cumulants[i][n]);
                      w["sample"] = i;
                      w["moments"] = io::rationals_to_json(corpus[i]);
                      return w;
                    }
                  }
                  return std::nullopt;
                });
  }
  // Free Poisson (all cumulants 1) and the shifted semicircle (k = 2,1,0,..).
  const std::vector<std::pair<std::string, std::vector<Rational>>> fixtures{
      {"free_poisson", std::vector<Rational>(order, 1)},
      {"shifted_semicircle", [&] {
         std::vector<Rational> k(order, 0);
         k[0] = 2;
         if (order > 1) k[1] = 1;
         return k;
       }()}};
  for (const auto& [fixture, kappa] : fixtures) {
    rec.guarded(name, identity, {{"fixture", fixture}, {"order", order}}, [&]() -> std::optional<json> {
      const CumulantSequence k(kappa);
      const TCoeffSequence t = moments_to_tcoeffs(cumulants_to_moments(k, lim), lim);
      for (int n = 1; n <= order; ++n) {
        const Rational lhs = route(t, n);
        if (lhs != k[n]) {
          json w = pair_json(lhs, k[n]);
          w["n"] = n;
          return w;
        }
      }
      return std::nullopt;
    });
  }
}

inline void suite_prop21(VerificationReport& report, const VerifyOptions& options) {
  SuiteRecorder rec(report, "prop21");
  const int order = suite_order(options, 7, "trees", options.limits.trees);
  cumulant_identity_suite(rec, options, order, "classes",
                          "k_n = sum of t_pi over the linked partitions whose components join all of 1..n",
                          [&](const TCoeffSequence& t, int n) { return cumulant_via_classes(t, n, options.limits); });
}

inline void suite_eq5(VerificationReport& report, const VerifyOptions& options) {
  SuiteRecorder rec(report, "eq5");
  const int order = suite_order(options, 7, "trees", options.limits.trees);
  cumulant_identity_suite(rec, options, order, "trees", "k_n = sum over planar trees on n vertices of E(A)",
                          [&](const TCoeffSequence& t, int n) { return cumulant_via_trees(t, n, options.limits); });
}

inline void suite_bridge(VerificationReport& report, const VerifyOptions& options) {
  SuiteRecorder rec(report, "bridge");
  const Limits& lim = options.limits;
  const int order = suite_order(options, 5, "ncls", std::min(lim.ncls, lim.bicolor));
  const int pairs = std::max(1, options.samples / 10);
  const auto corpus = random_corpus(options.seed, 2 * pairs, order);
  std::vector<std::pair<TCoeffSequence, TCoeffSequence>> inputs;
  for (int p = 0; p < pairs; ++p) inputs.emplace_back(TCoeffSequence(corpus[2 * p]), TCoeffSequence(corpus[2 * p + 1]));

  auto witness_base = [&](int p) {
    return json{{"sample", p},
                {"tX", io::rationals_to_json(inputs[p].first.values())},
                {"tY", io::rationals_to_json(inputs[p].second.values())}};
  };
  for (int n = 1; n <= order; ++n) {
    const json params{{"n", n}, {"pairs", pairs}, {"seed", options.seed}};
    rec.guarded("pointwise", "weight of pi in NCL_S(2n) = omega of its bicolor tree", params,
                [&]() -> std::optional<json> {
                  for (int p = 0; p < pairs; ++p) {
                    const auto& [tx, ty] = inputs[p];
                    for (const auto& pi : enumerate_ncls(n, lim)) {
                      const Rational lhs = ncls_weight(pi, tx, ty);
                      const Rational rhs = eval_bicolor(lambda(pi), tx, ty);
                      if (lhs != rhs) {
                        json w = witness_base(p);
                        w["partition"] = io::to_json(pi);
                        w.update(pair_json(lhs, rhs));
                        return w;
                      }
                    }
                  }
                  return std::nullopt;
                });
    rec.guarded("aggregate", "sum over NCL_S(2n) = sum over bicolor trees = k_n(XY) from the Kreweras sum", params,
                [&]() -> std::optional<json> {
                  for (int p = 0; p < pairs; ++p) {
                    const auto& [tx, ty] = inputs[p];
                    Rational partitions = 0;
                    for (const auto& pi : enumerate_ncls(n, lim)) partitions += ncls_weight(pi, tx, ty);
                    Rational trees = 0;
                    for (const auto& b : enumerate_bicolor(n, lim)) trees += eval_bicolor(b, tx, ty);
                    const auto kx = moments_to_cumulants(tcoeffs_to_moments(tx, lim), lim);
                    const auto ky = moments_to_cumulants(tcoeffs_to_moments(ty, lim), lim);
                    const Rational kreweras_sum = free_multiplicative(kx, ky, n, lim);
                    if (partitions != trees || trees != kreweras_sum) {
                      json w = witness_base(p);
                      w["partitions"] = to_string(partitions);
                      w["bicolor_trees"] = to_string(trees);
                      w["kreweras_sum"] = to_string(kreweras_sum);
                      return w;
                    }
                  }
                  return std::nullopt;
                });
  }
}

// All words of the given length over `ids`.
inline std::vector<Word> all_words(const std::vector<std::string>& ids, int length) {
  std::vector<Word> out{{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (const auto& id : ids) {
        Word extended = w;
        extended.push_back({id, 1});
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline void suite_prop22(VerificationReport& report, const VerifyOptions& options) {
  SuiteRecorder rec(report, "prop22");
  const Limits& lim = options.limits;
  const int max_length = suite_order(options, 6, "word", lim.word);
  const int cross_order = std::min({5, lim.sum_moments, lim.word / 2});
  const int cumulant_order = std::max(max_length, 2 * cross_order);

  std::vector<std::pair<std::string, Scenario>> scenarios;
  {
    std::vector<Rational> shifted(cumulant_order, 0);
    shifted[0] = 2;
    if (cumulant_order > 1) shifted[1] = 1;
    scenarios.emplace_back("fixture", Scenario({{"X", CumulantSequence(std::vector<Rational>(cumulant_order, 1))},
                                                {"Y", CumulantSequence(shifted)}},
                                               lim));
  }
  const int random_count = std::max(1, options.samples / 50);
  const auto corpus = random_corpus(options.seed, 2 * random_count, cumulant_order);
  for (int i = 0; i < random_count; ++i) {
    scenarios.emplace_back("random" + std::to_string(i),
                           Scenario({{"X", CumulantSequence(corpus[2 * i])}, {"Y", CumulantSequence(corpus[2 * i + 1])}},
                                    lim));
  }

  for (const auto& [label, scenario] : scenarios) {
    const json base{{"scenario", label}, {"seed", options.seed}};
    auto with = [&](json extra) {
      json p = base;
      p.update(extra);
      return p;
    };
    auto scenario_witness = [&](json w) {
      w["scenario"] = io::to_json(scenario);
      return w;
    };
    rec.guarded("vanishing", "mixed t-coefficients and mixed cumulants of free generators vanish",
                with({{"max_length", max_length}}), [&]() -> std::optional<json> {
                  const FreenessReport r = freeness_vanishing_suite(scenario, max_length);
                  if (r.passed()) return std::nullopt;
                  return scenario_witness(io::to_json(r));
                });
    rec.guarded("sum_moments", "cumulants of X+Y from expanded words = k(X) + k(Y)", with({{"n", cross_order}}),
                [&] {
                  const auto lhs = moments_to_cumulants(sum_moments(scenario, "X", "Y", cross_order), lim);
                  const auto rhs = free_additive(scenario.generator("X").prefix(cross_order),
                                                 scenario.generator("Y").prefix(cross_order));
                  auto w = compare_sequences(lhs.values(), rhs.values());
                  return w ? std::optional<json>(scenario_witness(*w)) : std::nullopt;
                });
    rec.guarded("product_moments", "moments of XY from alternating words = moments of the Kreweras cumulants",
                with({{"n", cross_order}}), [&] {
                  const auto& kx = scenario.generator("X");
                  const auto& ky = scenario.generator("Y");
                  std::vector<Rational> kxy;
                  for (int n = 1; n <= cross_order; ++n) kxy.push_back(free_multiplicative(kx, ky, n, lim));
                  const auto lhs = product_moments(scenario, "X", "Y", cross_order);
                  const auto rhs = cumulants_to_moments(CumulantSequence(kxy), lim);
                  auto w = compare_sequences(lhs.values(), rhs.values());
                  return w ? std::optional<json>(scenario_witness(*w)) : std::nullopt;
                });
    rec.guarded("single_algebra", "t-coefficients of one-letter words match the sequence transform",
                with({{"n", max_length}}), [&] {
                  const auto t = moments_to_tcoeffs(cumulants_to_moments(scenario.generator("X").prefix(max_length), lim),
                                                    lim);
                  std::vector<Rational> lhs;
                  for (int n = 1; n <= max_length; ++n) lhs.push_back(mixed_tcoeff(scenario, Word(n, Letter{"X", 1})));
                  auto w = compare_sequences(lhs, t.values());
                  return w ? std::optional<json>(scenario_witness(*w)) : std::nullopt;
                });
    const int scaling_length = std::min(4, max_length);
    rec.guarded("scaling", "t(c w_1, w_2..) = c t(w) and t is unchanged when a later letter is scaled by c != 0",
                with({{"max_length", scaling_length}}), [&]() -> std::optional<json> {
                  const std::vector<Rational> scalars{Rational(2), Rational(-1), Rational(1, 3)};
                  for (int length = 1; length <= scaling_length; ++length) {
                    for (const Word& w : all_words({"X", "Y"}, length)) {
                      const Rational base_value = mixed_tcoeff(scenario, w);
                      for (const Rational& c : scalars) {
                        for (int pos = 0; pos < length; ++pos) {
                          Word scaled = w;
                          scaled[pos].scale = c;
                          const Rational lhs = mixed_tcoeff(scenario, scaled);
                          const Rational rhs = pos == 0 ? c * base_value : base_value;
                          if (lhs != rhs) {
                            json out = pair_json(lhs, rhs);
                            out["word"] = format_word(scaled);
                            return scenario_witness(out);
                          }
                        }
                      }
                    }
                  }
                  return std::nullopt;
                });
  }

  // Sequence-level consequence: m_n -> c^n m_n multiplies every t_n by c.
  const int order = std::min(6, lim.ncl);
  const auto seqs = random_corpus(options.seed, options.samples, order);
  rec.guarded("homogeneity", "moments c^n m_n give t-coefficients c t_n",
              {{"order", order}, {"samples", options.samples}, {"seed", options.seed}}, [&]() -> std::optional<json> {
                for (std::size_t i = 0; i < seqs.size(); ++i) {
                  const auto t = moments_to_tcoeffs(MomentSequence(seqs[i]), lim);
                  for (const Rational& c : {Rational(2), Rational(-1), Rational(1, 3)}) {
                    std::vector<Rational> scaled = seqs[i];
                    for (int n = 0; n < order; ++n) scaled[n] *= pow(c, n + 1);
                    std::vector<Rational> expected;
                    for (const auto& v : t.values()) expected.push_back(c * v);
                    if (auto w = compare_sequences(moments_to_tcoeffs(MomentSequence(scaled), lim).values(), expected)) {
                      (*w)["sample"] = i;
                      (*w)["c"] = to_string(c);
                      (*w)["moments"] = io::rationals_to_json(seqs[i]);
                      return w;
                    }
                  }
                }
                return std::nullopt;
              });
}

inline void suite_theorem(VerificationReport& report, const VerifyOptions& options) {
  SuiteRecorder rec(report, "theorem");
  const Limits& lim = options.limits;
  const int order = suite_order(options, 6, "theorem", lim.theorem);
  const int pairs = std::max(1, options.samples / 2);
  const auto corpus = random_corpus(options.seed, 2 * pairs, order);
  const std::string identity = "T_XY = T_X T_Y for free X, Y with nonzero means, with the tree identities behind it";

  auto run = [&](const MomentSequence& mx, const MomentSequence& my) -> std::optional<json> {
    const auto r = verify_t_multiplicativity(mx, my, order, lim);
    if (r.passed()) return std::nullopt;
    json w = io::to_json(r);
    w["mX"] = io::rationals_to_json(mx.values());
    w["mY"] = io::rationals_to_json(my.values());
    return w;
  };
  rec.guarded("corpus", identity, {{"order", order}, {"pairs", pairs}, {"seed", options.seed}},
              [&]() -> std::optional<json> {
                for (int p = 0; p < pairs; ++p) {
                  if (auto w = run(MomentSequence(corpus[2 * p]), MomentSequence(corpus[2 * p + 1]))) {
                    (*w)["sample"] = p;
                    return w;
                  }
                }
                return std::nullopt;
              });

  // Free Poisson X (cumulants all 1) and Y with cumulants 2, 1, 0, ...
  std::vector<Rational> ky(order, 0);
  ky[0] = 2;
  if (order > 1) ky[1] = 1;
  const MomentSequence poisson = cumulants_to_moments(CumulantSequence(std::vector<Rational>(order, 1)), lim);
  const MomentSequence shifted = cumulants_to_moments(CumulantSequence(ky), lim);
  rec.guarded("worked_example", "t(XY) starts 2, 5/2, 3/8 by both routes", {{"fixture", "poisson_times_shifted"}, {"order", order}},
              [&]() -> std::optional<json> {
                if (auto w = run(poisson, shifted)) return w;
                const auto r = verify_t_multiplicativity(poisson, shifted, order, lim);
                const std::vector<Rational> expected{Rational(2), Rational(5, 2), Rational(3, 8)};
                for (int m = 0; m < std::min(order, 3); ++m) {
                  if (r.via_cumulants[m] != expected[m] || r.via_convolution[m] != expected[m]) {
                    return json{{"m", m},
                                {"expected", to_string(expected[m])},
                                {"via_cumulants", to_string(r.via_cumulants[m])},
                                {"via_convolution", to_string(r.via_convolution[m])}};
                  }
                }
                return std::nullopt;
              });
  rec.guarded("unit", "Y = 1 leaves t(X) unchanged", {{"fixture", "unit"}, {"order", order}},
              [&]() -> std::optional<json> {
                const MomentSequence one(std::vector<Rational>(order, 1));
                if (auto w = run(poisson, one)) return w;
                const auto r = verify_t_multiplicativity(poisson, one, order, lim);
                return compare_sequences(r.via_cumulants.values(), moments_to_tcoeffs(poisson, lim).values());
              });
  rec.guarded("square", "X and Y both free Poisson", {{"fixture", "poisson_squared"}, {"order", order}},
              [&] { return run(poisson, poisson); });
}

}  // namespace detail

inline VerificationReport run_verification(const std::string& suite, const VerifyOptions& options = {}) {
  using Runner = void (*)(VerificationReport&, const VerifyOptions&);
  static const std::vector<std::pair<std::string, Runner>> runners{
      {"counts", detail::suite_counts},   {"kreweras", detail::suite_kreweras}, {"fixtures", detail::suite_fixtures},
      {"roundtrip", detail::suite_roundtrip}, {"prop21", detail::suite_prop21}, {"eq5", detail::suite_eq5},
      {"bridge", detail::suite_bridge},   {"prop22", detail::suite_prop22},     {"theorem", detail::suite_theorem}};
  VerificationReport report;
  bool found = false;
  for (const auto& [name, runner] : runners) {
    if (suite == "all" || suite == name) {
      runner(report, options);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "unknown verification suite '" + suite + "'");
  report.sort();
  return report;
}

}  // namespace nclp
