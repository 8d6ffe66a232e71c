#pragma once

#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nclp/detail/memo.hpp"
#include "nclp/enumerate.hpp"
#include "nclp/error.hpp"
#include "nclp/rational.hpp"
#include "nclp/series.hpp"

namespace nclp {

// scale * (generator of `algebra`).
struct Letter {
  std::string algebra;
  Rational scale = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    if (l.scale != 1) out += to_string(l.scale) + "*";
    out += l.algebra;
  }
  return out;
}

// "X Y 2*X -1/3*Y"
inline Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  Word w;
  while (in >> token) {
    const auto star = token.find('*');
    Letter l;
    if (star == std::string::npos) {
      l.algebra = token;
    } else {
      l.scale = parse_rational(token.substr(0, star));
      l.algebra = token.substr(star + 1);
    }
    if (l.algebra.empty()) throw Error(ErrorKind::ParseError, "letter without algebra id in '" + token + "'");
    w.push_back(std::move(l));
  }
  if (w.empty()) throw Error(ErrorKind::ParseError, "empty word");
  return w;
}

// Mutually free algebras, each generated by one element known through its
// free cumulants. Copies share the memo tables.
class Scenario {
 public:
  explicit Scenario(std::map<std::string, CumulantSequence> algebras, Limits limits = Limits::defaults())
      : algebras_(std::move(algebras)), limits_(limits), memo_(std::make_shared<Memos>()) {}

  const std::map<std::string, CumulantSequence>& algebras() const noexcept { return algebras_; }
  const Limits& limits() const noexcept { return limits_; }

  const CumulantSequence& generator(const std::string& id) const {
    auto it = algebras_.find(id);
    if (it == algebras_.end()) throw Error(ErrorKind::UnknownAlgebra, "no algebra named '" + id + "'");
    return it->second;
  }

  // phi(letter) = scale * k_1(generator).
  Rational mean(const Letter& l) const { return l.scale * generator(l.algebra)[1]; }

  struct Memos {
    detail::Memo<std::string, Rational> tcoeff;
    detail::Memo<std::string, Rational> cumulant;
  };
  Memos& memos() const { return *memo_; }

 private:
  std::map<std::string, CumulantSequence> algebras_;
  Limits limits_;
  std::shared_ptr<Memos> memo_;
};

namespace detail {

inline std::string word_key(const Word& w) {
  std::string key;
  for (const Letter& l : w) key += l.algebra + "*" + to_string(l.scale) + "|";
  return key;
}

inline Word sub_word(const Word& w, const Block& positions) {
  Word out;
  for (int p : positions) out.push_back(w[p - 1]);
  return out;
}

}  // namespace detail

// Free cumulant of one block's letters: zero as soon as two algebras meet,
// otherwise multilinear in the scales.
inline Rational mixed_cumulant(const Scenario& scenario, const Word& letters) {
  if (letters.empty()) throw Error(ErrorKind::InvalidArgument, "empty block");
  Rational scale = 1;
  for (const Letter& l : letters) {
    scenario.generator(l.algebra);
    if (l.algebra != letters.front().algebra) return 0;
    scale *= l.scale;
  }
  const auto& kappa = scenario.generator(letters.front().algebra);
  const int n = static_cast<int>(letters.size());
  if (n > kappa.order()) throw Error(ErrorKind::OrderTooLow, "algebra '" + letters.front().algebra +
                                                                   "' has no cumulant of order " + std::to_string(n));
  return scale * kappa[n];
}

// phi(w_1 ... w_n) = sum over NC(n) of the product of mixed block cumulants.
inline Rational mixed_moment(const Scenario& scenario, const Word& w) {
  const int n = static_cast<int>(w.size());
  check_limit("word", n, scenario.limits().word);
  Rational sum = 0;
  for (const auto& gamma : detail::nc_cached(n)) {
    Rational term = 1;
    for (const Block& b : gamma.blocks()) {
      term *= mixed_cumulant(scenario, detail::sub_word(w, b));
      if (term == 0) break;
    }
    sum += term;
  }
  return sum;
}

// k_n(w) recovered from mixed moments alone by inverting the moment-cumulant
// relation on sub-words; independent of mixed_cumulant's vanishing rule.
inline Rational cumulant_from_moments(const Scenario& scenario, const Word& w) {
  const int n = static_cast<int>(w.size());
  check_limit("word", n, scenario.limits().word);
  return scenario.memos().cumulant.get(detail::word_key(w), [&] {
    const NCPartition whole = NCPartition::one(n);
    Rational rest = 0;
    for (const auto& gamma : detail::nc_cached(n)) {
      if (gamma == whole) continue;
      Rational term = 1;
      for (const Block& b : gamma.blocks()) term *= cumulant_from_moments(scenario, detail::sub_word(w, b));
      rest += term;
    }
    return mixed_moment(scenario, w) - rest;
  });
}

// t_{n-1}(w_1..w_n), solved from phi(w) = sum over NCL(n) of prod_k t_[k,pi](w),
// the 1_n term being t_{n-1}(w) prod_{l>=2} t_0(w_l). Letters after the first
// must have nonzero mean.
inline Rational mixed_tcoeff(const Scenario& scenario, const Word& w) {
  const int n = static_cast<int>(w.size());
  check_limit("word", n, scenario.limits().word);
  check_limit("ncl", n, scenario.limits().ncl);
  for (int l = 1; l < n; ++l) {
    if (scenario.mean(w[l]) == 0) {
      throw Error(ErrorKind::LetterNotInDomain,
                  "letter " + std::to_string(l + 1) + " (" + w[l].algebra + ") has zero mean", {l + 1});
    }
  }
  if (n == 1) return scenario.mean(w.front());
  return scenario.memos().tcoeff.get(detail::word_key(w), [&] {
    const NCLPartition whole = NCLPartition::one(n);
    Rational rest = 0;
    for (const auto& pi : detail::ncl_cached(n)) {
      if (pi == whole) continue;
      Rational term = 1;
      for (const Block& b : pi.blocks()) term *= mixed_tcoeff(scenario, detail::sub_word(w, b));
      for (int k : non_minimal_elements(pi)) term *= scenario.mean(w[k - 1]);
      rest += term;
    }
    Rational divisor = 1;
    for (int l = 1; l < n; ++l) divisor *= scenario.mean(w[l]);
    return (mixed_moment(scenario, w) - rest) / divisor;
  });
}

// m_n(X+Y) by expanding (X+Y)^n into all 2^n words.
inline MomentSequence sum_moments(const Scenario& scenario, const std::string& x, const std::string& y, int order) {
  check_limit("sum_moments", order, scenario.limits().sum_moments);
  std::vector<Rational> m;
  for (int n = 1; n <= order; ++n) {
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Word w;
      for (int i = 0; i < n; ++i) w.push_back({(mask >> i) & 1u ? y : x, 1});
      total += mixed_moment(scenario, w);
    }
    m.push_back(total);
  }
  return MomentSequence(std::move(m));
}

// m_n(XY) = phi((XY)^n), the alternating word of length 2n.
inline MomentSequence product_moments(const Scenario& scenario, const std::string& x, const std::string& y, int order) {
  check_limit("word", 2 * order, scenario.limits().word);
  std::vector<Rational> m;
  for (int n = 1; n <= order; ++n) {
    Word w;
    for (int i = 0; i < n; ++i) {
      w.push_back({x, 1});
      w.push_back({y, 1});
    }
    m.push_back(mixed_moment(scenario, w));
  }
  return MomentSequence(std::move(m));
}

struct FreenessCounterexample {
  Word word;
  std::string quantity;
  Rational value;
};

struct FreenessReport {
  int words_checked = 0;
  std::vector<FreenessCounterexample> failures;
  bool passed() const { return failures.empty(); }
};

// Every word of length 2..max_length over the scenario's generators that uses
// at least two algebras must have vanishing t-coefficient and vanishing
// cumulant (the latter recovered from moments).
inline FreenessReport freeness_vanishing_suite(const Scenario& scenario, int max_length) {
  std::vector<std::string> ids;
  for (const auto& [id, kappa] : scenario.algebras()) {
    if (kappa[1] == 0) throw Error(ErrorKind::LetterNotInDomain, "generator '" + id + "' has zero mean");
    ids.push_back(id);
  }
  FreenessReport report;
  if (ids.size() < 2) return report;
  for (int n = 2; n <= max_length; ++n) {
    std::vector<int> digits(n, 0);
    while (true) {
      Word w;
      std::set<int> used;
      for (int d : digits) {
        w.push_back({ids[d], 1});
        used.insert(d);
      }
      if (used.size() >= 2) {
        ++report.words_checked;
        if (Rational t = mixed_tcoeff(scenario, w); t != 0) report.failures.push_back({w, "t", t});
        if (Rational k = cumulant_from_moments(scenario, w); k != 0) report.failures.push_back({w, "kappa", k});
      }
      int i = n - 1;
      while (i >= 0 && digits[i] == static_cast<int>(ids.size()) - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
  }
  return report;
}

}  // namespace nclp
