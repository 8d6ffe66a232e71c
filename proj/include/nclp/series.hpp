#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "nclp/error.hpp"
#include "nclp/rational.hpp"

namespace nclp {

struct moment_tag {
  static constexpr int first_index = 1;
};
struct cumulant_tag {
  static constexpr int first_index = 1;
};
struct tcoeff_tag {
  static constexpr int first_index = 0;
};

// Finite prefix of an exact sequence, indexed the way the quantity is
// conventionally indexed: moments m_1.., cumulants k_1.., t-coefficients t_0..
template <class Tag>
class Sequence {
 public:
  static constexpr int first_index = Tag::first_index;

  Sequence() = default;
  explicit Sequence(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(ErrorKind::InvalidArgument, "a sequence needs at least one value");
  }

  int order() const noexcept { return static_cast<int>(values_.size()); }
  int last_index() const noexcept { return first_index + order() - 1; }

  const Rational& operator[](int index) const {
    if (index < first_index || index > last_index()) {
      throw Error(ErrorKind::OrderTooLow, "index " + std::to_string(index) + " outside the known prefix (order " +
                                              std::to_string(order()) + ")");
    }
    return values_[index - first_index];
  }

  const std::vector<Rational>& values() const noexcept { return values_; }

  Sequence prefix(int order) const {
    if (order < 1 || order > this->order()) {
      throw Error(ErrorKind::OrderTooLow, "cannot take a prefix of order " + std::to_string(order));
    }
    return Sequence(std::vector<Rational>(values_.begin(), values_.begin() + order));
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Rational> values_;
};

using MomentSequence = Sequence<moment_tag>;
using CumulantSequence = Sequence<cumulant_tag>;
using TCoeffSequence = Sequence<tcoeff_tag>;

// Power series known modulo z^{order+1}.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order, std::vector<Rational> coeffs = {}) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
    coeffs_.resize(order + 1);
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int power) const { return coeffs_.at(power); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      for (int j = 0; j <= i; ++j) out.coeffs_[i] += a.coeffs_[j] * b.coeffs_[i - j];
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// R(z) = sum_{n>=1} k_n z^n.
inline TruncatedSeries r_transform(const CumulantSequence& kappa) {
  std::vector<Rational> c{Rational(0)};
  c.insert(c.end(), kappa.values().begin(), kappa.values().end());
  return TruncatedSeries(kappa.order(), std::move(c));
}

// T(z) = sum_{n>=0} t_n z^n.
inline TruncatedSeries t_transform(const TCoeffSequence& t) {
  return TruncatedSeries(t.order() - 1, t.values());
}

}  // namespace nclp
