#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nclp {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  NotAPartition,
  NotACover,
  Crossing,
  BadLink,
  LimitExceeded,
  SizeMismatch,
  BlockStraddlesSet,
  OddGroundSet,
  NotConnected,
  NotNclS,
  ZeroFirstMoment,
  ZeroT0,
  OrderTooLow,
  LetterNotInDomain,
  UnknownAlgebra,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::Crossing: return "Crossing";
    case ErrorKind::BadLink: return "BadLink";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BlockStraddlesSet: return "BlockStraddlesSet";
    case ErrorKind::OddGroundSet: return "OddGroundSet";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotNclS: return "NotNclS";
    case ErrorKind::ZeroFirstMoment: return "ZeroFirstMoment";
    case ErrorKind::ZeroT0: return "ZeroT0";
    case ErrorKind::OrderTooLow: return "OrderTooLow";
    case ErrorKind::LetterNotInDomain: return "LetterNotInDomain";
    case ErrorKind::UnknownAlgebra: return "UnknownAlgebra";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; `kind`
// says which contract was violated and `witness` carries the offending
// elements where there is one (e.g. the i<k<p<q of a crossing).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

// Per-enumerator size caps. Everything above these is exponential enough that
// callers must opt in explicitly.
struct Limits {
  int nc = 12;
  int ncl = 9;
  int ncs = 6;
  int ncls = 5;
  int trees = 10;
  int bicolor = 7;
  int theorem = 6;
  int word = 12;
  int sum_moments = 6;

  static const Limits& defaults() {
    static const Limits instance{};
    return instance;
  }
};

inline void check_limit(const char* kind, int n, int cap) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(kind) + " size must be >= 1 (got " + std::to_string(n) + ")");
  }
  if (n > cap) {
    throw Error(ErrorKind::LimitExceeded,
                std::string(kind) + " limit is " + std::to_string(cap) + " (requested " +
                    std::to_string(n) + ")");
  }
}

}  // namespace nclp
