#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracle.hpp"
#include "pb/constants.hpp"
#include "pb/numeric_core.hpp"
#include "pb/operators.hpp"

using namespace pb;

namespace {

const FunctionSpec kConstant = FunctionSpec::builtin(Builtin::constant);
const FunctionSpec kLinear = FunctionSpec::builtin(Builtin::linear);
const FunctionSpec kSquare = FunctionSpec::builtin(Builtin::square);
const FunctionSpec kAbsMid = FunctionSpec::builtin(Builtin::abs_mid);

} // namespace

TEST(Bernstein, Examples) {
    for (int n : {1, 4, 17})
        for (double x : {0.0, 0.3, 1.0}) EXPECT_NEAR(bernstein_eval(kConstant, n, x), 1.0, 1e-15);
    EXPECT_NEAR(bernstein_eval(kLinear, 5, 0.3), 0.3, 1e-15);
    EXPECT_DOUBLE_EQ(bernstein_eval(kSquare, 2, 0.5), 0.375);
    EXPECT_THROW(bernstein_eval(kSquare, 2, 1.5), DomainError);
}

TEST(PolyaOperator, Examples) {
    for (int n : {2, 5, 9})
        for (double x : {0.1, 0.5, 0.83})
            EXPECT_NEAR(polya_operator_eval(kSquare, n, x, CProfile::zero()), bernstein_eval(kSquare, n, x), 1e-13);

    EXPECT_NEAR(polya_operator_eval(kLinear, 6, 0.4, CProfile::r_n()), 0.4, 1e-15);
    EXPECT_NEAR(polya_operator_eval(kLinear, 6, 0.4, CProfile::constant(0.3)), 0.4, 1e-15);
    EXPECT_NEAR(polya_operator_eval(kLinear, 6, 0.4, CProfile::zero()), 0.4, 1e-15);

    const FunctionSpec sin_pi = FunctionSpec::builtin(Builtin::sin_pi);
    EXPECT_EQ(polya_operator_eval(sin_pi, 2, 0.5, CProfile::r_n()), sin_pi(0.5));
}

TEST(CProfileTest, Values) {
    EXPECT_DOUBLE_EQ(CProfile::r_n().at(6, 0.3), -0.06);
    EXPECT_DOUBLE_EQ(CProfile::r_n().at(6, 0.7), -0.3 / 5);
    EXPECT_EQ(CProfile::zero().at(6, 0.3), 0.0);
    EXPECT_THROW(CProfile::r_n().at(1, 0.3), DomainError);
    EXPECT_THROW(CProfile::constant(-0.01), DomainError);
}

TEST(Rn, Examples) {
    EXPECT_EQ(r_n_eval(kAbsMid, 6, 0.0), 0.5);
    EXPECT_EQ(r_n_eval(kAbsMid, 6, 1.0), 0.5);
    EXPECT_NEAR(r_n_eval(kLinear, 10, 0.73), 0.73, 1e-15);
    // Frozen from oracle::polya_operator with c = -0.1: 29/108.
    EXPECT_NEAR(r_n_eval(kSquare, 6, 0.5), 29.0 / 108.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(oracle::polya_operator([](long double t) { return t * t; }, 6, 0.5L, -0.1L)),
                29.0 / 108.0, 1e-16);
    EXPECT_THROW(r_n_eval(kLinear, 1, 0.5), DomainError);
}

TEST(Rn, MatchesOracleOnLibrary) {
    for (Builtin b : all_builtins()) {
        const FunctionSpec f = FunctionSpec::builtin(b);
        for (int n = 2; n <= 25; n += 3)
            for (int i = 1; i < 50; ++i) {
                const double x = i / 50.0;
                const long double want = oracle::polya_operator(
                    [&](long double t) { return static_cast<long double>(f(static_cast<double>(t))); }, n, x,
                    -std::min(x, 1.0 - x) / (n - 1));
                ASSERT_NEAR(r_n_eval(f, n, x), static_cast<double>(want), 1e-13) << f.name() << " n=" << n;
            }
    }
}

TEST(Operators, ReproduceConstantsAndLinear) {
    for (int n = 2; n <= 30; ++n)
        for (int i = 0; i <= 200; ++i) {
            const double x = i / 200.0;
            ASSERT_NEAR(bernstein_eval(kConstant, n, x), 1.0, 1e-13);
            ASSERT_NEAR(r_n_eval(kConstant, n, x), 1.0, 1e-13);
            ASSERT_NEAR(bernstein_eval(kLinear, n, x), x, 1e-12);
            ASSERT_NEAR(r_n_eval(kLinear, n, x), x, 1e-12);
        }
}

TEST(Modulus, Examples) {
    EXPECT_NEAR(modulus_of_continuity(kLinear, 0.1), 0.1, 1e-12);
    EXPECT_EQ(modulus_of_continuity(kConstant, 0.37), 0.0);
    EXPECT_NEAR(modulus_of_continuity(kAbsMid, 0.2), 0.2, 1e-12);
    EXPECT_NEAR(modulus_of_continuity(FunctionSpec::builtin(Builtin::sqrt), 0.25), 0.5, 1e-12);
    EXPECT_THROW(modulus_of_continuity(kLinear, 0.0), DomainError);
    EXPECT_THROW(modulus_of_continuity(kLinear, 0.1, 99), DomainError);
}

TEST(Modulus, MatchesAllPairsOnSmallGrid) {
    const int res = 150;
    for (Builtin b : all_builtins()) {
        const FunctionSpec f = FunctionSpec::builtin(b);
        for (double delta : {0.01, 0.05, 0.2, 0.5, 1.0}) {
            double brute = 0.0;
            for (int i = 0; i <= res; ++i)
                for (int j = i; j <= res && (j - i) <= static_cast<int>(std::floor(delta * res + 1e-9)); ++j)
                    brute = std::max(brute, std::abs(f(static_cast<double>(i) / res) - f(static_cast<double>(j) / res)));
            EXPECT_DOUBLE_EQ(modulus_of_continuity(f, delta, res), brute) << f.name() << " " << delta;
        }
    }
}

TEST(Modulus, MonotoneAndScaledSubadditive) {
    const int res = 2000;
    for (Builtin b : all_builtins()) {
        const FunctionSpec f = FunctionSpec::builtin(b);
        double previous = 0.0;
        for (int w = 1; w <= 400; w += 7) {
            const double delta = static_cast<double>(w) / res;
            const double omega = modulus_of_continuity(f, delta, res);
            EXPECT_GE(omega, previous);
            previous = omega;
            for (double lambda : {0.3, 1.0, 1.5, 1.99, 2.0, 3.7}) {
                if (lambda * delta > 1.0) continue;
                const double bracket = std::ceil(lambda) - 1.0;
                EXPECT_LE(modulus_of_continuity(f, lambda * delta, res), (1.0 + bracket) * omega + 1e-12)
                    << f.name() << " delta=" << delta << " lambda=" << lambda;
            }
        }
    }
}

TEST(Popoviciu, Examples) {
    const GridSpec grid{2001, false, 1e-9};
    EXPECT_NEAR(popoviciu_ratio(kLinear, 7, grid, OperatorKind::r_n).sup, 0.0, 1e-12);
    const ScanReport rn = popoviciu_ratio(kAbsMid, 6, grid, OperatorKind::r_n);
    EXPECT_LE(rn.sup, constants::kRnConstantBound);
    EXPECT_GT(rn.sup, 0.0);
    EXPECT_LE(popoviciu_ratio(kAbsMid, 6, grid, OperatorKind::bernstein).sup, 1.0898874);
    EXPECT_THROW(popoviciu_ratio(kConstant, 6, grid, OperatorKind::r_n), DomainError);

    // The argmax reproduces the sup.
    const double omega = modulus_of_continuity(kAbsMid, 1.0 / std::sqrt(6.0));
    EXPECT_EQ(std::abs(r_n_eval(kAbsMid, 6, rn.argmax_x) - kAbsMid(rn.argmax_x)) / omega, rn.sup);
}

TEST(FunctionSpecTest, BuiltinsByName) {
    EXPECT_EQ(FunctionSpec::named("abs-mid")(0.1), 0.4);
    EXPECT_EQ(FunctionSpec::named("sawtooth")(1.0 / 3.0), 1.0);
    EXPECT_NEAR(FunctionSpec::named("sawtooth")(0.5), 0.5, 1e-15);
    EXPECT_THROW(FunctionSpec::named("cubic"), DomainError);
    EXPECT_TRUE(FunctionSpec::named("constant").is_constant());
    EXPECT_FALSE(FunctionSpec::named("sqrt").is_constant());
}

TEST(FunctionSpecTest, SampledTableFromCsv) {
    std::istringstream in("x,fx\n0,0\n0.25,1\n1,0\n");
    const FunctionSpec f = FunctionSpec::from_csv(in);
    EXPECT_EQ(f(0.0), 0.0);
    EXPECT_EQ(f(0.125), 0.5);
    EXPECT_EQ(f(0.25), 1.0);
    EXPECT_NEAR(f(0.625), 0.5, 1e-15);
    EXPECT_EQ(f(1.0), 0.0);
    // Piecewise-linear data: the grid modulus is exact at nodes.
    EXPECT_NEAR(modulus_of_continuity(f, 0.25, 1000), 1.0, 1e-12);
}

TEST(FunctionSpecTest, SampledTableRejections) {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return FunctionSpec::from_csv(in);
    };
    EXPECT_THROW(parse("x,y\n0,0\n1,1\n"), DomainError);
    EXPECT_THROW(parse("x,fx\n0.1,0\n1,1\n"), DomainError);
    EXPECT_THROW(parse("x,fx\n0,0\n0.9,1\n"), DomainError);
    EXPECT_THROW(parse("x,fx\n0,0\n0.5,1\n0.5,2\n1,1\n"), DomainError);
    EXPECT_THROW(parse("x,fx\n0,0\n0.5,abc\n1,1\n"), DomainError);
    EXPECT_THROW(FunctionSpec::load_csv("/nonexistent/table.csv"), DomainError);
}
