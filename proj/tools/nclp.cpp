// Command-line front end for the nclp library.
//
//   nclp enumerate ncl 4
//   nclp transform m2t '["1","2","5","14","42"]'
//   nclp biject lambda '{"n":6,"blocks":[[1,3,5],[2],[4],[6]]}'
//   nclp render -            (object JSON on stdin)
//   nclp verify theorem --order 5 --seed 7
//   nclp convolve product '["1","1","0"]' '["2","1/2","-1/8"]'
//
// Exit codes: 0 ok, 1 verification failure, 2 size limit exceeded,
// 3 zero first moment / zero t_0, 4 object outside the bijection's domain,
// 5 invalid input.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nclp/nclp.hpp"

namespace {

using json = nlohmann::json;

enum ExitCode : int {
  ok = 0,
  verify_failed = 1,
  limit_exceeded = 2,
  zero_mean = 3,
  out_of_domain = 4,
  invalid_input = 5,
};

int exit_code_for(nclp::ErrorKind kind) {
  using nclp::ErrorKind;
  switch (kind) {
    case ErrorKind::LimitExceeded: return limit_exceeded;
    case ErrorKind::ZeroFirstMoment:
    case ErrorKind::ZeroT0: return zero_mean;
    case ErrorKind::NotConnected:
    case ErrorKind::NotNclS:
    case ErrorKind::LetterNotInDomain: return out_of_domain;
    default: return invalid_input;
  }
}

#ifdef NCLP_CORRUPT_KREWERAS
// Fault injection: merges the first two blocks of the true complement.
nclp::NCPartition corrupted_kreweras(const nclp::NCPartition& gamma) {
  const nclp::NCPartition k = nclp::kreweras(gamma);
  if (k.block_count() < 2) return k;
  auto blocks = k.blocks();
  blocks[0].insert(blocks[0].end(), blocks[1].begin(), blocks[1].end());
  std::sort(blocks[0].begin(), blocks[0].end());
  blocks.erase(blocks.begin() + 1);
  return nclp::NCPartition::canonical(k.size(), std::move(blocks));
}
#endif

// Inline JSON, "-" for stdin, or a file path.
json read_input(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw nclp::Error(nclp::ErrorKind::ParseError, "cannot read input file '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw nclp::Error(nclp::ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

// "nc=10,ncl=8" or repeated --limit nc=10.
void apply_limit(nclp::Limits& limits, const std::string& assignment, bool unsafe) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw nclp::Error(nclp::ErrorKind::InvalidArgument, "limit must look like KIND=N");
  const std::string kind = assignment.substr(0, eq);
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(assignment.substr(eq + 1), &used);
    if (used != assignment.size() - eq - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw nclp::Error(nclp::ErrorKind::InvalidArgument, "limit value in '" + assignment + "' is not an integer");
  }
  const nclp::Limits& defaults = nclp::Limits::defaults();
  const std::vector<std::pair<const char*, int nclp::Limits::*>> fields{
      {"nc", &nclp::Limits::nc},           {"ncl", &nclp::Limits::ncl},       {"ncs", &nclp::Limits::ncs},
      {"ncls", &nclp::Limits::ncls},       {"trees", &nclp::Limits::trees},   {"bicolor", &nclp::Limits::bicolor},
      {"theorem", &nclp::Limits::theorem}, {"word", &nclp::Limits::word},     {"sum_moments", &nclp::Limits::sum_moments}};
  for (const auto& [name, field] : fields) {
    if (kind != name) continue;
    if (value > defaults.*field && !unsafe) {
      throw nclp::Error(nclp::ErrorKind::InvalidArgument, "raising the " + kind + " limit above " +
                                                              std::to_string(defaults.*field) + " needs --unsafe-limits");
    }
    limits.*field = value;
    return;
  }
  throw nclp::Error(nclp::ErrorKind::InvalidArgument, "unknown limit kind '" + kind + "'");
}

std::string block_notation(const std::vector<nclp::Block>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += ",";
    out += "(";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
    out += ")";
  }
  return out;
}

std::string join_rationals(const std::vector<nclp::Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : " ") + nclp::to_string(v);
  return out;
}

struct Config {
  std::string format = "json";
  std::vector<std::string> limit_args;
  bool unsafe_limits = false;
  nclp::Limits limits;
};

int run_enumerate(const Config& cfg, const std::string& kind, int n) {
  const bool text = cfg.format == "text";
  std::size_t count = 0;
  auto emit_partition = [&](const auto& p) {
    std::cout << (text ? block_notation(p.blocks()) : nclp::io::to_json(p).dump()) << "\n";
    ++count;
  };
  auto emit_tree = [&](const auto& t) {
    if (text) std::cout << nclp::render_tree(t) << "\n";
    else std::cout << nclp::io::to_json(t).dump() << "\n";
    ++count;
  };
  if (kind == "nc") for (const auto& p : nclp::enumerate_nc(n, cfg.limits)) emit_partition(p);
  else if (kind == "ncl") for (const auto& p : nclp::enumerate_ncl(n, cfg.limits)) emit_partition(p);
  else if (kind == "ncs") for (const auto& p : nclp::enumerate_ncs(n, cfg.limits)) emit_partition(p);
  else if (kind == "ncls") for (const auto& p : nclp::enumerate_ncls(n, cfg.limits)) emit_partition(p);
  else if (kind == "trees") for (const auto& t : nclp::enumerate_planar_trees(n, cfg.limits)) emit_tree(t);
  else if (kind == "bicolor") for (const auto& t : nclp::enumerate_bicolor(n, cfg.limits)) emit_tree(t);
  else throw nclp::Error(nclp::ErrorKind::InvalidArgument, "unknown enumeration kind '" + kind + "'");
  std::cout << json{{"count", count}}.dump() << "\n";
  return ok;
}

int run_transform(const Config& cfg, const std::string& direction, const std::string& input, int order) {
  auto values = nclp::io::series_from_json(read_input(input));
  if (order > 0) {
    if (order > static_cast<int>(values.size())) {
      throw nclp::Error(nclp::ErrorKind::OrderTooLow, "input has only " + std::to_string(values.size()) + " terms");
    }
    values.resize(order);
  }
  std::vector<nclp::Rational> out;
  if (direction == "m2k") out = nclp::moments_to_cumulants(nclp::MomentSequence(values), cfg.limits).values();
  else if (direction == "k2m") out = nclp::cumulants_to_moments(nclp::CumulantSequence(values), cfg.limits).values();
  else if (direction == "m2t") out = nclp::moments_to_tcoeffs(nclp::MomentSequence(values), cfg.limits).values();
  else if (direction == "t2m") out = nclp::tcoeffs_to_moments(nclp::TCoeffSequence(values), cfg.limits).values();
  else throw nclp::Error(nclp::ErrorKind::InvalidArgument, "unknown transform '" + direction + "'");
  std::cout << (cfg.format == "text" ? join_rationals(out) : nclp::io::rationals_to_json(out).dump()) << "\n";
  return ok;
}

int run_biject(const Config& cfg, const std::string& direction, const std::string& input) {
  const json in = read_input(input);
  const bool text = cfg.format == "text";
  auto print = [&](const auto& object) {
    if (!text) std::cout << nclp::io::to_json(object).dump() << "\n";
    else if constexpr (requires { object.blocks(); }) std::cout << nclp::render_partition(object);
    else std::cout << nclp::render_tree(object);
  };
  if (direction == "theta") print(nclp::theta(nclp::io::linked_partition_from_json(in)));
  else if (direction == "theta-inv") print(nclp::theta_inv(nclp::io::planar_tree_from_json(in)));
  else if (direction == "lambda") print(nclp::lambda(nclp::io::linked_partition_from_json(in)));
  else if (direction == "lambda-inv") print(nclp::lambda_inv(nclp::io::bicolor_tree_from_json(in)));
  else throw nclp::Error(nclp::ErrorKind::InvalidArgument, "unknown bijection '" + direction + "'");
  return ok;
}

int run_render(const std::string& input) {
  const json in = read_input(input);
  if (in.is_object() && in.contains("blocks")) {
    std::cout << nclp::render_partition(nclp::io::linked_partition_from_json(in));
  } else if (nclp::io::has_colors(in)) {
    std::cout << nclp::render_tree(nclp::io::bicolor_tree_from_json(in));
  } else {
    std::cout << nclp::render_tree(nclp::io::planar_tree_from_json(in));
  }
  return ok;
}

int run_verify(const Config& cfg, const std::string& suite, int order, std::uint64_t seed, int samples) {
  nclp::VerifyOptions options;
  if (order > 0) options.order = order;
  options.seed = seed;
  options.samples = samples;
  options.limits = cfg.limits;
#ifdef NCLP_CORRUPT_KREWERAS
  options.kreweras = corrupted_kreweras;
#endif
  const auto report = nclp::run_verification(suite, options);
  if (cfg.format == "text") {
    for (const auto& e : report.entries) {
      std::cout << (e.pass ? "PASS " : "FAIL ") << e.suite << " " << e.name << " " << e.params.dump() << "\n";
      if (!e.pass) std::cout << "  witness: " << e.witness.dump() << "\n";
    }
  } else {
    std::cout << nclp::to_json(report).dump() << "\n";
  }
  return report.passed() ? ok : verify_failed;
}

int run_convolve(const Config& cfg, const std::string& mode, const std::string& x, const std::string& y, int order) {
  auto xs = nclp::io::series_from_json(read_input(x));
  auto ys = nclp::io::series_from_json(read_input(y));
  if (mode == "product") {
    const auto out = nclp::t_convolve(nclp::TCoeffSequence(xs), nclp::TCoeffSequence(ys)).values();
    std::cout << (cfg.format == "text" ? join_rationals(out) : nclp::io::rationals_to_json(out).dump()) << "\n";
    return ok;
  }
  if (mode == "verify") {
    if (order <= 0) order = static_cast<int>(std::min(xs.size(), ys.size()));
    const auto report =
        nclp::verify_t_multiplicativity(nclp::MomentSequence(xs), nclp::MomentSequence(ys), order, cfg.limits);
    if (cfg.format == "text") {
      std::cout << "t(XY) via cumulants:   " << join_rationals(report.via_cumulants.values()) << "\n";
      std::cout << "t(XY) via convolution: " << join_rationals(report.via_convolution.values()) << "\n";
      for (const auto& c : report.checks) {
        std::cout << (c.pass() ? "PASS " : "FAIL ") << c.name << " [" << c.order << "]\n";
      }
    } else {
      std::cout << nclp::io::to_json(report).dump() << "\n";
    }
    return report.passed() ? ok : verify_failed;
  }
  throw nclp::Error(nclp::ErrorKind::InvalidArgument, "unknown convolve mode '" + mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-crossing linked partitions, planar trees and free probability transforms"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--limit", cfg.limit_args, "Override a size cap, KIND=N");
  app.add_flag("--unsafe-limits", cfg.unsafe_limits, "Allow caps above the defaults");

  std::string kind, direction, input, suite = "all", mode, x_input, y_input;
  int n = 0, order = 0, samples = 200;
  std::uint64_t seed = 7;

  auto* enumerate = app.add_subcommand("enumerate", "Stream every object of a family as JSON lines");
  enumerate->add_option("kind", kind, "nc | ncl | ncs | ncls | trees | bicolor")->required();
  enumerate->add_option("n,--n", n, "Size")->required();

  auto* transform = app.add_subcommand("transform", "Convert between moments, cumulants and t-coefficients");
  transform->add_option("direction", direction, "m2k | k2m | m2t | t2m")->required();
  transform->add_option("input", input, "Series JSON, file path, or - for stdin")->required();
  transform->add_option("--order", order, "Use only the first ORDER terms");

  auto* biject = app.add_subcommand("biject", "Apply a partition/tree bijection");
  biject->add_option("direction", direction, "theta | theta-inv | lambda | lambda-inv")->required();
  biject->add_option("input", input, "Object JSON, file path, or - for stdin")->required();

  auto* render = app.add_subcommand("render", "Draw a partition or tree as ASCII art");
  render->add_option("input", input, "Object JSON, file path, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "Run identity checks on fixtures and a seeded random corpus");
  verify->add_option("suite", suite, "Suite name or all");
  verify->add_option("--order", order, "Size bound for the suite");
  verify->add_option("--seed", seed, "Corpus seed");
  verify->add_option("--samples", samples, "Corpus size")->check(CLI::PositiveNumber);

  auto* convolve = app.add_subcommand("convolve", "Multiply T-transforms or verify their multiplicativity");
  convolve->add_option("mode", mode, "product (t-sequences) | verify (moment sequences)")->required();
  convolve->add_option("x", x_input, "First sequence")->required();
  convolve->add_option("y", y_input, "Second sequence")->required();
  convolve->add_option("--order", order, "Order for verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid_input;
  }

  try {
    if (const char* env = std::getenv("NCL_LIMITS"); env && cfg.limit_args.empty()) {
      std::stringstream list(env);
      for (std::string item; std::getline(list, item, ',');) {
        if (!item.empty()) cfg.limit_args.push_back(item);
      }
    }
    for (const auto& assignment : cfg.limit_args) apply_limit(cfg.limits, assignment, cfg.unsafe_limits);

    if (*enumerate) return run_enumerate(cfg, kind, n);
    if (*transform) return run_transform(cfg, direction, input, order);
    if (*biject) return run_biject(cfg, direction, input);
    if (*render) return run_render(input);
    if (*verify) return run_verify(cfg, suite, order, seed, samples);
    if (*convolve) return run_convolve(cfg, mode, x_input, y_input, order);
  } catch (const nclp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return invalid_input;
}
