#include <gtest/gtest.h>

#include <random>

#include "mpfr_oracle.hpp"
#include "seqproof/core.hpp"

using namespace seqproof;

namespace {

BigRational q(long num, long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

}  // namespace

TEST(BigInt, ParseAndPrint) {
  EXPECT_EQ(parse_bigint("-12345678901234567890123").get_str(), "-12345678901234567890123");
  EXPECT_EQ(parse_bigint("+7"), BigInt(7));
  EXPECT_THROW(parse_bigint("12a"), std::invalid_argument);
  EXPECT_THROW(parse_bigint(""), std::invalid_argument);
  EXPECT_THROW(parse_bigint("-"), std::invalid_argument);
}

TEST(BigInt, Helpers) {
  EXPECT_EQ(bit_length(BigInt(0)), 0u);
  EXPECT_EQ(bit_length(BigInt(70)), 7u);
  EXPECT_EQ(binomial(32, 16), BigInt(601080390));
  EXPECT_EQ(ipow(BigInt(10), 12), BigInt("1000000000000"));
  EXPECT_EQ(floor_of(q(-7, 2)), BigInt(-4));
  EXPECT_EQ(ceil_of(q(-7, 2)), BigInt(-3));
  EXPECT_TRUE(is_power_of_two(pow2(100)));
  EXPECT_FALSE(is_power_of_two(BigInt(0)));
  EXPECT_FALSE(is_power_of_two(BigInt(12)));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  __int128 big = static_cast<__int128>(1) << 100;
  EXPECT_EQ(from_int128(-big), BigInt(-pow2(100)));
}

TEST(BigInt, Gaussian) {
  GaussianInt z{3, 1}, w{1, 1};
  EXPECT_EQ(z * w, (GaussianInt{2, 4}));
  EXPECT_EQ(to_string(GaussianInt{-4, 14}), "-4+14i");
  EXPECT_EQ(to_string(GaussianInt{1, -9}), "1-9i");
}

TEST(Interval, Arithmetic) {
  RationalInterval a(q(1), q(2)), b(q(-3), q(1, 2));
  EXPECT_EQ(a + b, RationalInterval(q(-2), q(5, 2)));
  EXPECT_EQ(a - b, RationalInterval(q(1, 2), q(5)));
  EXPECT_EQ(a * b, RationalInterval(q(-6), q(1)));
  EXPECT_EQ(a.reciprocal(), RationalInterval(q(1, 2), q(1)));
  EXPECT_THROW(b.reciprocal(), std::domain_error);
  EXPECT_THROW(RationalInterval(q(2), q(1)), std::invalid_argument);
  EXPECT_TRUE(a.contains(q(3, 2)));
  EXPECT_EQ(RationalInterval(q(7, 2), q(7, 2)).decided_floor(), BigInt(3));
  EXPECT_FALSE(RationalInterval(q(5, 2), q(3)).decided_floor().has_value());
}

TEST(Polynomial, Examples) {
  IntPolynomial one_x{1, 1};
  EXPECT_EQ(poly_mul(one_x, one_x), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(poly_mul(one_x, IntPolynomial{1}), one_x);
  EXPECT_EQ(poly_pow(IntPolynomial{1, 2, 2}, 3).coefficient(3), BigInt(32));
  EXPECT_EQ(poly_pow(one_x, 0), IntPolynomial{1});
  EXPECT_EQ(poly_pow(one_x, 1), one_x);
  EXPECT_EQ(poly_pow(IntPolynomial{1, 2}, 2), (IntPolynomial{1, 4, 4}));
  EXPECT_TRUE(IntPolynomial({0, 0}).is_zero());
  EXPECT_FALSE(IntPolynomial({0, 0}).degree().has_value());
  EXPECT_EQ((IntPolynomial{1, 2, 3} - IntPolynomial{1, 2, 3}), IntPolynomial{});
}

TEST(Polynomial, PowMatchesRepeatedMul) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigInt> c(1 + rng() % 5);
    for (auto& x : c) x = coeff(rng);
    IntPolynomial p(c);
    const unsigned m = rng() % 9;
    IntPolynomial expected{1};
    for (unsigned i = 0; i < m; ++i) expected = poly_mul(expected, p);
    EXPECT_EQ(poly_pow(p, m), expected) << to_string(p) << " ^ " << m;
  }
}

TEST(GeneratingFunction, Examples) {
  EXPECT_EQ(gf_coefficients(RationalGF(IntPolynomial{1}, IntPolynomial{1, -1}), 3),
            (std::vector<BigInt>{1, 1, 1, 1}));
  EXPECT_THROW(RationalGF(IntPolynomial{1}, IntPolynomial{0, 1}), ZeroConstantDenominator);
  EXPECT_THROW(gf_coefficients(RationalGF(IntPolynomial{1}, IntPolynomial{2, 1}), 3), NonIntegralCoefficient);
  EXPECT_EQ(gf_coefficients(RationalGF(IntPolynomial{2}, IntPolynomial{2, -2}), 4),
            (std::vector<BigInt>{1, 1, 1, 1, 1}));
}

TEST(GeneratingFunction, Reconvolution) {
  // A(x) and B(x) of the double sums, plus a signed denominator.
  std::vector<RationalGF> gfs;
  IntPolynomial den_a = poly_mul(poly_pow(IntPolynomial{1, -1}, 4), poly_pow(IntPolynomial{1, 1}, 3));
  gfs.emplace_back(IntPolynomial{0, 0, 0, 12, 11, 11, 2}, den_a);
  IntPolynomial den_b = poly_mul(poly_mul(poly_pow(IntPolynomial{1, -1}, 6), poly_pow(IntPolynomial{1, 1}, 3)),
                                 poly_pow(IntPolynomial{1, 1, 1}, 4));
  gfs.emplace_back(IntPolynomial{0, 0, 0, 1, 3, 7, 15, 23, 21, 18, 14, 6}, den_b);
  gfs.emplace_back(IntPolynomial{1, 0, 1}, IntPolynomial{-1, 2, -1, 1});
  const std::size_t n_max = 200;
  for (const auto& gf : gfs) {
    auto c = gf_coefficients(gf, n_max);
    ASSERT_EQ(c.size(), n_max + 1);
    const auto& d = gf.denominator().coefficients();
    for (std::size_t n = 0; n <= n_max; ++n) {
      BigInt acc = 0;
      for (std::size_t t = 0; t < d.size() && t <= n; ++t) acc += d[t] * c[n - t];
      EXPECT_EQ(acc, gf.numerator().coefficient(n)) << "n = " << n;
    }
  }
}

TEST(Enclosure, NthRootExamples) {
  EXPECT_EQ(integer_nth_root(8, 3), BigInt(2));
  EXPECT_EQ(integer_nth_root(0, 5), BigInt(0));
  EXPECT_EQ(integer_nth_root(BigInt("1000000000000"), 3), BigInt(10000));
  EXPECT_THROW(integer_nth_root(-8, 3), NegativeRadicand);
}

TEST(Enclosure, NthRootRandom) {
  std::mt19937_64 rng(11);
  gmp_randclass gmp_rng(gmp_randinit_default);
  gmp_rng.seed(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned long k = 1 + rng() % 7;
    const BigInt x = gmp_rng.get_z_bits(1 + rng() % 300);
    const BigInt r = integer_nth_root(x, k);
    EXPECT_LE(ipow(r, k), x);
    EXPECT_GT(ipow(BigInt(r + 1), k), x);
  }
}

TEST(Enclosure, NamedConstants) {
  RationalInterval s3 = real_enclosure(Sqrt3{}, 20);
  EXPECT_TRUE(s3.contains(q(17320508, 10000000)) || s3.contains(q(17320509, 10000000)));
  EXPECT_LE(s3.width(), make_rational(1, pow2(20)));
  // a 2^-20 cell is wider than this window; 24 bits fits inside it
  RationalInterval s3_24 = real_enclosure(Sqrt3{}, 24);
  EXPECT_GE(s3_24.lo(), q(17320507, 10000000));
  EXPECT_LE(s3_24.hi(), q(17320509, 10000000));
  RationalInterval ln2 = real_enclosure(Ln2{}, 20);
  EXPECT_GE(ln2.lo(), q(693146, 1000000));
  EXPECT_LE(ln2.hi(), q(693148, 1000000));
  for (unsigned p : {1u, 8u, 64u, 300u}) {
    RationalInterval c = real_enclosure(CubeRootOf{27}, p);
    EXPECT_TRUE(c.contains(q(3)));
  }
  EXPECT_THROW(real_enclosure(Sqrt2{}, 0), std::invalid_argument);
  EXPECT_THROW(real_enclosure(Sqrt2{}, (1u << 16) + 1), PrecisionExhausted);
}

TEST(Enclosure, MatchesMpfr) {
  for (unsigned p : {10u, 53u, 200u, 1000u}) {
    auto check = [p](const NamedConstant& c, const std::function<void(mpfr_ptr, mpfr_rnd_t)>& eval) {
      RationalInterval ours = real_enclosure(c, p);
      RationalInterval ref = oracle::bracket(p + 64, eval);
      EXPECT_TRUE(ours.contains(ref)) << "p = " << p;
      EXPECT_LE(ours.width(), make_rational(1, pow2(p)));
    };
    check(Sqrt2{}, [](mpfr_ptr o, mpfr_rnd_t r) { mpfr_sqrt_ui(o, 2, r); });
    check(Sqrt3{}, [](mpfr_ptr o, mpfr_rnd_t r) { mpfr_sqrt_ui(o, 3, r); });
    check(Ln2{}, [](mpfr_ptr o, mpfr_rnd_t r) { mpfr_const_log2(o, r); });
    check(CubeRootOf{1000001}, [](mpfr_ptr o, mpfr_rnd_t r) {
      mpfr_set_ui(o, 1000001, r);
      mpfr_cbrt(o, o, r);
    });
  }
}

TEST(Enclosure, Nesting) {
  std::mt19937_64 rng(3);
  std::vector<NamedConstant> names = {Sqrt2{}, Sqrt3{}, Ln2{}, CubeRootOf{10}, CubeRootOf{BigInt("98765432123")}};
  for (int trial = 0; trial < 100; ++trial) {
    unsigned p1 = 1 + rng() % 400, p2 = 1 + rng() % 400;
    if (p1 > p2) std::swap(p1, p2);
    const NamedConstant& c = names[trial % names.size()];
    RationalInterval coarse = real_enclosure(c, p1), fine = real_enclosure(c, p2);
    EXPECT_TRUE(coarse.contains(fine)) << p1 << " vs " << p2;
  }
}

TEST(Enclosure, Log2) {
  EXPECT_EQ(log2_enclosure(q(8), 10), RationalInterval(q(3)));
  EXPECT_EQ(log2_enclosure(q(1, 4), 10), RationalInterval(q(-2)));
  RationalInterval l5 = log2_enclosure(q(5), 64);
  RationalInterval ref = oracle::bracket(200, [](mpfr_ptr o, mpfr_rnd_t r) {
    mpfr_set_ui(o, 5, r);
    mpfr_log2(o, o, r);
  });
  EXPECT_TRUE(l5.contains(ref));
  EXPECT_THROW(log2_enclosure(q(0), 10), std::domain_error);
}

TEST(EulerMaclaurin, Examples) {
  RationalInterval b = euler_maclaurin_bounds(SummandKind::Log2, 1, 4, 32);
  EXPECT_TRUE(b.contains(oracle::log2_sum(1, 4)));
  RationalInterval c = euler_maclaurin_bounds(SummandKind::CubeRoot, 1, 1000, 32);
  EXPECT_TRUE(c.contains(oracle::cbrt_sum(1, 1000)));
  EXPECT_GE(c.lo(), q(7504));
  EXPECT_LT(c.hi(), q(7505));
  RationalInterval single = euler_maclaurin_bounds(SummandKind::Log2, 5, 5, 32);
  EXPECT_TRUE(single.contains(oracle::log2_sum(5, 5)));
  // width <= f'(5)/8 = 1/(40 ln 2), padded by the enclosure widths
  EXPECT_LE(single.width(), q(37, 1000));
  EXPECT_THROW(euler_maclaurin_bounds(SummandKind::Log2, 5, 4, 32), std::invalid_argument);
  EXPECT_THROW(euler_maclaurin_bounds(SummandKind::Log2, 0, 4, 32), std::invalid_argument);
}

TEST(EulerMaclaurin, ContainsOracleSums) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned long l = 1 + rng() % 400, m = l + rng() % 300;
    const SummandKind kind = trial % 2 == 0 ? SummandKind::Log2 : SummandKind::CubeRoot;
    RationalInterval em = euler_maclaurin_bounds(kind, l, m, 48);
    RationalInterval ref = kind == SummandKind::Log2 ? oracle::log2_sum(l, m) : oracle::cbrt_sum(l, m);
    EXPECT_TRUE(em.contains(ref)) << "l = " << l << ", m = " << m << ", em = " << to_string(em);
  }
}
