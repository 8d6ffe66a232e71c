#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace nclp;
using oracle::rationals;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InvalidArgument;
}

const auto& corpus() {
  static const auto c = random_corpus(7, 200, 8);
  return c;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_EQ(to_string(parse_rational("4/-2")), "-2");
  EXPECT_EQ(kind_of([] { parse_rational("1/0"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rational("x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rational(""); }), ErrorKind::ParseError);
}

TEST(Sequences, Indexing) {
  const TCoeffSequence t(rationals({"1", "2"}));
  EXPECT_EQ(t[0], 1);
  EXPECT_EQ(t[1], 2);
  EXPECT_EQ(kind_of([&] { t[2]; }), ErrorKind::OrderTooLow);
  const MomentSequence m(rationals({"1", "2"}));
  EXPECT_EQ(m[1], 1);
  EXPECT_EQ(kind_of([&] { m[0]; }), ErrorKind::OrderTooLow);
  EXPECT_EQ(kind_of([] { MomentSequence(std::vector<Rational>{}); }), ErrorKind::InvalidArgument);
}

TEST(MomentsCumulants, Fixtures) {
  EXPECT_EQ(moments_to_cumulants(MomentSequence(rationals({"1", "2", "5", "14", "42"}))).values(),
            rationals({"1", "1", "1", "1", "1"}));
  EXPECT_EQ(moments_to_cumulants(MomentSequence(rationals({"2", "5", "14", "42"}))).values(),
            rationals({"2", "1", "0", "0"}));
  const Rational c(3, 2);
  std::vector<Rational> point{c, c * c, c * c * c, c * c * c * c};
  EXPECT_EQ(moments_to_cumulants(MomentSequence(point)).values(), (std::vector<Rational>{c, 0, 0, 0}));
}

TEST(MomentsCumulants, MatchDirectNcSum) {
  for (std::size_t i = 0; i < 20; ++i) {
    const auto& kappa = corpus()[i];
    EXPECT_EQ(cumulants_to_moments(CumulantSequence(kappa)).values(), oracle::moments_from_cumulants(kappa));
  }
}

TEST(MomentsCumulants, Roundtrip) {
  for (const auto& v : corpus()) {
    for (int order : {1, 4, 8}) {
      const std::vector<Rational> prefix(v.begin(), v.begin() + order);
      EXPECT_EQ(cumulants_to_moments(moments_to_cumulants(MomentSequence(prefix))).values(), prefix);
      EXPECT_EQ(moments_to_cumulants(cumulants_to_moments(CumulantSequence(prefix))).values(), prefix);
    }
  }
}

TEST(MomentsTcoeffs, Fixtures) {
  EXPECT_EQ(moments_to_tcoeffs(MomentSequence(rationals({"1", "2", "5", "14", "42"}))).values(),
            rationals({"1", "1", "0", "0", "0"}));
  EXPECT_EQ(moments_to_tcoeffs(MomentSequence(rationals({"1", "1", "1", "1"}))).values(),
            rationals({"1", "0", "0", "0"}));
  EXPECT_EQ(moments_to_tcoeffs(MomentSequence(rationals({"2", "5", "14", "42", "132", "429"}))).values(),
            rationals({"2", "1/2", "-1/8", "1/16", "-5/128", "7/256"}));
}

TEST(MomentsTcoeffs, Errors) {
  EXPECT_EQ(kind_of([] { moments_to_tcoeffs(MomentSequence(rationals({"0", "1"}))); }), ErrorKind::ZeroFirstMoment);
  EXPECT_EQ(kind_of([] { tcoeffs_to_moments(TCoeffSequence(rationals({"0", "1"}))); }), ErrorKind::ZeroT0);
  EXPECT_EQ(kind_of([] { moments_to_tcoeffs(MomentSequence(std::vector<Rational>(10, 1))); }),
            ErrorKind::LimitExceeded);
}

TEST(MomentsTcoeffs, MatchDirectNclSum) {
  for (std::size_t i = 0; i < 10; ++i) {
    const std::vector<Rational> t(corpus()[i].begin(), corpus()[i].begin() + 5);
    EXPECT_EQ(tcoeffs_to_moments(TCoeffSequence(t)).values(), oracle::moments_from_tcoeffs(t, 5));
  }
}

TEST(MomentsTcoeffs, Roundtrip) {
  for (const auto& v : corpus()) {
    EXPECT_EQ(tcoeffs_to_moments(moments_to_tcoeffs(MomentSequence(v))).values(), v);
    EXPECT_EQ(moments_to_tcoeffs(tcoeffs_to_moments(TCoeffSequence(v))).values(), v);
  }
}

TEST(MomentsTcoeffs, Homogeneity) {
  for (std::size_t i = 0; i < 50; ++i) {
    const std::vector<Rational> m(corpus()[i].begin(), corpus()[i].begin() + 6);
    const auto t = moments_to_tcoeffs(MomentSequence(m)).values();
    for (const Rational c : {Rational(2), Rational(-1), Rational(1, 3)}) {
      std::vector<Rational> scaled = m;
      for (std::size_t n = 0; n < m.size(); ++n) scaled[n] *= pow(c, static_cast<int>(n) + 1);
      const auto ts = moments_to_tcoeffs(MomentSequence(scaled)).values();
      for (std::size_t n = 0; n < t.size(); ++n) EXPECT_EQ(ts[n], c * t[n]);
    }
  }
}

TEST(CumulantRoutes, Examples) {
  const TCoeffSequence poisson(rationals({"1", "1", "0"}));
  EXPECT_EQ(cumulant_via_classes(poisson, 3), 1);
  EXPECT_EQ(cumulant_via_trees(poisson, 3), 1);
  EXPECT_EQ(cumulant_via_trees(TCoeffSequence(rationals({"1", "1"})), 2), 1);
  const TCoeffSequence shifted(rationals({"2", "1/2", "-1/8"}));
  EXPECT_EQ(cumulant_via_classes(shifted, 3), 0);
  EXPECT_EQ(cumulant_via_trees(shifted, 1), 2);
  EXPECT_EQ(eval_tree(chain_tree(3), TCoeffSequence(rationals({"2", "3", "5"}))), 18);
  EXPECT_EQ(eval_tree(elementary_tree(3), TCoeffSequence(rationals({"2", "3", "5"}))), 20);
  EXPECT_EQ(eval_tree(PlanarTree{}, TCoeffSequence(rationals({"7"}))), 7);
}

TEST(CumulantRoutes, AgreeWithCumulantsOnCorpus) {
  for (std::size_t i = 0; i < 200; ++i) {
    const std::vector<Rational> m(corpus()[i].begin(), corpus()[i].begin() + 7);
    const auto t = moments_to_tcoeffs(MomentSequence(m));
    const auto k = moments_to_cumulants(MomentSequence(m));
    for (int n = 1; n <= 7; ++n) {
      EXPECT_EQ(cumulant_via_classes(t, n), k[n]);
      EXPECT_EQ(cumulant_via_trees(t, n), k[n]);
    }
  }
}

TEST(FreeAdditive, Examples) {
  EXPECT_EQ(free_additive(CumulantSequence(rationals({"1", "1", "1"})), CumulantSequence(rationals({"2", "1", "0"})))
                .values(),
            rationals({"3", "2", "1"}));
  EXPECT_EQ(kind_of([] { free_additive(CumulantSequence(rationals({"1"})), CumulantSequence(rationals({"1", "2"}))); }),
            ErrorKind::SizeMismatch);
}

TEST(FreeMultiplicative, Examples) {
  const CumulantSequence x(rationals({"1", "1", "1"}));
  const CumulantSequence y(rationals({"2", "1", "0"}));
  EXPECT_EQ(free_multiplicative(x, y, 1), 2);
  EXPECT_EQ(free_multiplicative(CumulantSequence(rationals({"1", "1"})), CumulantSequence(rationals({"2", "1"})), 2), 5);
  // Direct sum over NC(3) with the exhaustive-search complement.
  Rational direct = 0;
  for (const auto& gamma : oracle::nc_by_filter(3)) {
    Rational term = 1;
    for (const Block& b : gamma.blocks()) term *= x[static_cast<int>(b.size())];
    const NCPartition k = oracle::kreweras_by_search(gamma);
    for (const Block& b : k.blocks()) term *= y[static_cast<int>(b.size())];
    direct += term;
  }
  EXPECT_EQ(free_multiplicative(x, y, 3), direct);
}

TEST(Bicolor, Weights) {
  const TCoeffSequence tx(rationals({"2", "3", "5"}));
  const TCoeffSequence ty(rationals({"7", "11", "13"}));
  const BicolorPlanarTree leaf;
  EXPECT_EQ(eval_bicolor(leaf, tx, ty), 14);
  const BicolorPlanarTree two_solid{{{solid, leaf}, {solid, leaf}}};
  EXPECT_EQ(eval_bicolor(two_solid, tx, ty), Rational(5 * 7) * 14 * 14);
  const BicolorPlanarTree chain{{{solid, BicolorPlanarTree{{{solid, leaf}}}}}};
  EXPECT_EQ(eval_bicolor(chain, tx, ty), Rational(3 * 7) * (3 * 7) * 14);

  EXPECT_EQ(ncls_weight(validate_ncl(6, {{1, 3, 5}, {2}, {4}, {6}}), tx, ty), Rational(5 * 2 * 2) * 7 * 7 * 7);
  EXPECT_EQ(ncls_weight(validate_ncl(6, {{1, 3}, {3, 5}, {2}, {4}, {6}}), tx, ty), Rational(3 * 3 * 2) * 7 * 7 * 7);
  EXPECT_EQ(ncls_weight(NCLPartition::zero(2), tx, ty), 14);
  EXPECT_EQ(kind_of([&] { ncls_weight(validate_ncl(4, {{1, 2}, {3, 4}}), tx, ty); }), ErrorKind::NotNclS);
}

TEST(Bicolor, PointwiseAndAggregateBridge) {
  for (std::size_t i = 0; i < 20; ++i) {
    const TCoeffSequence tx(std::vector<Rational>(corpus()[2 * i].begin(), corpus()[2 * i].begin() + 5));
    const TCoeffSequence ty(std::vector<Rational>(corpus()[2 * i + 1].begin(), corpus()[2 * i + 1].begin() + 5));
    const auto kx = moments_to_cumulants(tcoeffs_to_moments(tx));
    const auto ky = moments_to_cumulants(tcoeffs_to_moments(ty));
    for (int n = 1; n <= 5; ++n) {
      Rational partitions = 0;
      for (const auto& pi : enumerate_ncls(n)) {
        const Rational w = ncls_weight(pi, tx, ty);
        EXPECT_EQ(w, eval_bicolor(lambda(pi), tx, ty));
        partitions += w;
      }
      Rational trees = 0;
      for (const auto& b : enumerate_bicolor(n)) trees += eval_bicolor(b, tx, ty);
      EXPECT_EQ(partitions, trees);
      EXPECT_EQ(trees, free_multiplicative(kx, ky, n));
    }
  }
}

TEST(TConvolve, Examples) {
  const TCoeffSequence tx(rationals({"1", "1", "0"}));
  const TCoeffSequence ty(rationals({"2", "1/2", "-1/8"}));
  EXPECT_EQ(t_convolve(tx, ty).values(), rationals({"2", "5/2", "3/8"}));
  EXPECT_EQ(t_convolve(tx, TCoeffSequence(rationals({"1", "0", "0"}))), tx);
  EXPECT_EQ(t_convolve(tx, ty), t_convolve(ty, tx));
  EXPECT_EQ(kind_of([&] { t_convolve(tx, TCoeffSequence(rationals({"1"}))); }), ErrorKind::SizeMismatch);
}

TEST(TMultiplicativity, WorkedExample) {
  const MomentSequence mx(rationals({"1", "2", "5", "14", "42", "132"}));
  const MomentSequence my(rationals({"2", "5", "14", "42", "132", "429"}));
  const auto report = verify_t_multiplicativity(mx, my, 6);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.via_cumulants.values(), rationals({"2", "5/2", "3/8", "-1/16", "3/128", "-3/256"}));
  EXPECT_EQ(report.via_convolution, report.via_cumulants);
}

TEST(TMultiplicativity, UnitAndSquare) {
  const MomentSequence poisson(rationals({"1", "2", "5", "14", "42"}));
  const auto unit = verify_t_multiplicativity(poisson, MomentSequence(rationals({"1", "1", "1", "1", "1"})), 5);
  EXPECT_TRUE(unit.passed());
  EXPECT_EQ(unit.via_cumulants, moments_to_tcoeffs(poisson));
  EXPECT_TRUE(verify_t_multiplicativity(poisson, poisson, 5).passed());
}

TEST(TMultiplicativity, Corpus) {
  for (std::size_t p = 0; p < 100; ++p) {
    const std::vector<Rational> x(corpus()[2 * p].begin(), corpus()[2 * p].begin() + 6);
    const std::vector<Rational> y(corpus()[2 * p + 1].begin(), corpus()[2 * p + 1].begin() + 6);
    const auto report = verify_t_multiplicativity(MomentSequence(x), MomentSequence(y), 6);
    EXPECT_TRUE(report.passed()) << "pair " << p;
    EXPECT_EQ(report.checks.size(), 6u + 6u + 12u);
  }
}

TEST(TMultiplicativity, Errors) {
  const MomentSequence ok(rationals({"1", "2"}));
  EXPECT_EQ(kind_of([&] { verify_t_multiplicativity(MomentSequence(rationals({"0", "1"})), ok, 2); }),
            ErrorKind::ZeroFirstMoment);
  const MomentSequence long_seq(std::vector<Rational>(7, 1));
  EXPECT_EQ(kind_of([&] { verify_t_multiplicativity(long_seq, long_seq, 7); }), ErrorKind::LimitExceeded);
}

TEST(Series, TransformsAndProducts) {
  const auto r = r_transform(CumulantSequence(rationals({"1", "2"})));
  EXPECT_EQ(r.coefficients(), rationals({"0", "1", "2"}));
  const auto t = t_transform(TCoeffSequence(rationals({"1", "1"})));
  EXPECT_EQ((t * t).coefficients(), rationals({"1", "2"}));
  EXPECT_EQ((r + r).coefficients(), rationals({"0", "2", "4"}));
}
