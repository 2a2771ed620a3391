#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace polyseq;
using namespace polyseq::testing;

namespace {

SequencePair cheb(const char* a, const char* b, int T) {
    return build_sequence(family(Family::chebyshev, a, b), T);
}

}  // namespace

TEST(RealizeH, TridiagonalChebyshevData) {
    const TridiagonalSpec s{Rs({"0", "0", "0"}), Rs({"1/4", "1/4"})};
    EXPECT_EQ(realize_H(s, 3), M({{"0", "1", "0"}, {"1/4", "0", "1"}, {"0", "1/4", "0"}}, -1));
    EXPECT_EQ(realize_H(s, 3), realize_H(family(Family::chebyshev, "1/4"), 3));
}

TEST(RealizeH, Charlier) {
    EXPECT_EQ(realize_H(family(Family::charlier, "1"), 3), M({{"1", "1", "0"}, {"1", "2", "1"}, {"0", "2", "3"}}, -1));
}

TEST(RealizeH, FamiliesMatchOperatorFormulas) {
    const int T = 8;
    const auto X = make_operator(OperatorKind::X, T);
    const auto Xh = make_operator(OperatorKind::Xhat, T);
    const auto D = make_operator(OperatorKind::D, T);
    const auto I = identity(T);
    const Rational a = R("2/3"), b = R("-5");
    EXPECT_EQ(realize_H(FamilyParams{Family::chebyshev, a, b}, T), a * Xh + b * I + X);
    EXPECT_EQ(realize_H(FamilyParams{Family::hermite, a, b}, T), X + b * I + a * D);
    // X D is exact everywhere except (T-1,T-1), which needs D(T,T-1) = T
    auto charlier = X + X * D + (a - Rational(1)) * I + a * D;
    EXPECT_TRUE(equal_on(realize_H(FamilyParams{Family::charlier, a, b}, T), charlier, T - 1, T));
}

TEST(RealizeH, RowsEchoThemselves) {
    std::mt19937_64 rng(1);
    for (int T : {1, 2, 5, 9}) {
        const auto H = random_dense_H(rng, T);
        EXPECT_EQ(realize_H(rows_spec_of(H), T), H);
    }
}

TEST(RealizeH, Errors) {
    const TridiagonalSpec s{Rs({"0", "0"}), Rs({"1"})};
    try {
        realize_H(s, 3);
        FAIL();
    } catch (const SpecTooShort& e) {
        EXPECT_EQ(e.required(), 3);
    }
    EXPECT_THROW(realize_H(RowsSpec{{Rs({"0", "1"})}}, 2), SpecTooShort);
    EXPECT_THROW(realize_H(RowsSpec{{Rs({"0", "2"}), Rs({"0", "0"})}}, 2), StructureError);
    EXPECT_THROW(realize_H(RowsSpec{{Rs({"0", "1", "3"}), Rs({"0", "0"})}}, 2), StructureError);
    EXPECT_THROW(realize_H(RowsSpec{{Rs({"0"}), Rs({"0", "0"})}}, 2), StructureError);
    EXPECT_THROW(realize_H(family(Family::hermite, "0"), 3), ZeroParameter);
}

TEST(BuildARows, ShiftGivesIdentity) {
    EXPECT_EQ(build_A_rows(realize_H(RowsSpec{make_operator(OperatorKind::X, 6).rows()}, 6)), identity(6));
}

TEST(BuildARows, ChebyshevRows) {
    // rows of A express t^k in the p-basis (oracle: back-substitution in sympy)
    const auto A = build_A_rows(realize_H(family(Family::chebyshev, "1"), 4));
    EXPECT_EQ(A, M({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"1", "0", "1", "0"}, {"0", "2", "0", "1"}}, 0));
}

TEST(BuildARows, IntertwinesHAndX) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const int T = 8;
        const auto H = random_dense_H(rng, T);
        const auto A = build_A_rows(H);
        const auto lhs = A * H;
        const auto rhs = make_operator(OperatorKind::X, T) * A;
        EXPECT_TRUE(equal_on(lhs, rhs, T - 1, T));
    }
}

TEST(BuildARows, RejectsNonMonic) {
    auto H = realize_H(family(Family::chebyshev, "1"), 4);
    H.set(1, 2, Rational(2));
    EXPECT_THROW(build_A_rows(H), StructureError);
    EXPECT_THROW(build_A_rows(identity(3)), StructureError);
}

TEST(BuildPRecurrence, MonomialsForShift) {
    const auto pair = build_sequence(RowsSpec{make_operator(OperatorKind::X, 6).rows()}, 6);
    for (int k = 0; k < 6; ++k) EXPECT_EQ(pair.polys[static_cast<std::size_t>(k)], Polynomial::monomial(k));
    EXPECT_EQ(pair.P, identity(6));
}

TEST(BuildPRecurrence, KnownFamilies) {
    // expected coefficients from a sympy iteration of the recurrence
    EXPECT_EQ(cheb("1/4", "0", 5).polys[2], poly({"-1/4", "0", "1"}));
    const auto herm = build_sequence(family(Family::hermite, "1"), 5);
    EXPECT_EQ(herm.polys[3], poly({"0", "-3", "0", "1"}));
    EXPECT_EQ(herm.polys[4], poly({"3", "0", "-6", "0", "1"}));
}

TEST(BuildPRecurrence, PairInvariantsRandom) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        const int T = 9;
        const auto pair = build_P_recurrence(random_dense_H(rng, T));
        EXPECT_EQ(pair.A * pair.P, identity(T));
        EXPECT_EQ(pair.P * pair.A, identity(T));
        EXPECT_EQ(pair.A, build_A_rows(pair.H));
        for (int k = 0; k < T; ++k) {
            const auto& p = pair.polys[static_cast<std::size_t>(k)];
            EXPECT_EQ(p.degree(), k);
            EXPECT_TRUE(p.is_monic());
            EXPECT_EQ(p, row_polynomials(pair.P)[static_cast<std::size_t>(k)]);
        }
    }
}

TEST(RowPolynomials, ShiftAndMultiplication) {
    std::mt19937_64 rng(4);
    const int T = 7;
    const auto pair = build_P_recurrence(random_dense_H(rng, T));
    const auto X = make_operator(OperatorKind::X, T);
    const auto u = row_polynomials(pair.A);
    const auto v = row_polynomials(X * pair.A);
    const auto w = row_polynomials(pair.A * X);
    for (int k = 0; k + 1 < T; ++k) {
        EXPECT_EQ(v[static_cast<std::size_t>(k)], u[static_cast<std::size_t>(k + 1)]);
        EXPECT_EQ(w[static_cast<std::size_t>(k)], u[static_cast<std::size_t>(k)].shifted());
    }
}

TEST(BuildHhat, ShiftAndRightInverse) {
    EXPECT_EQ(build_Hhat(realize_H(RowsSpec{make_operator(OperatorKind::X, 5).rows()}, 5)),
              make_operator(OperatorKind::Xhat, 5));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const int T = 8;
        const auto H = random_dense_H(rng, T);
        const auto Hhat = build_Hhat(H);
        EXPECT_EQ(Hhat.index(), 1);
        EXPECT_TRUE(equal_on(H * Hhat, identity(T), T - 1, T));
        const auto diff = Hhat * H - identity(T);
        for (int i = 0; i < T; ++i)
            for (int k = 1; k < T; ++k) EXPECT_TRUE(diff(i, k).is_zero()) << i << "," << k;
    }
}

TEST(BuildPColumns, ShiftGivesIdentity) {
    EXPECT_EQ(build_P_columns(realize_H(RowsSpec{make_operator(OperatorKind::X, 5).rows()}, 5)), identity(5));
}

TEST(BuildPColumns, ChebyshevColumnZero) {
    // p_k(0) for a = 1/4: 1, 0, -1/4, 0, 1/16
    const auto P = build_P_columns(realize_H(family(Family::chebyshev, "1/4"), 6));
    EXPECT_EQ(P(0, 0), R("1"));
    EXPECT_EQ(P(1, 0), R("0"));
    EXPECT_EQ(P(2, 0), R("-1/4"));
    EXPECT_EQ(P(3, 0), R("0"));
    EXPECT_EQ(P(4, 0), R("1/16"));
}

TEST(BuildPColumns, AgreesWithRecurrence) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const auto H = random_dense_H(rng, 10);
        EXPECT_EQ(build_P_columns(H), build_P_recurrence(H).P);
    }
    for (auto f : {Family::chebyshev, Family::hermite, Family::charlier}) {
        const auto H = realize_H(FamilyParams{f, R("3/2"), R("-1")}, 10);
        EXPECT_EQ(build_P_columns(H), build_P_recurrence(H).P);
    }
}

TEST(TauMoments, KnownSequences) {
    const auto shift = build_sequence(RowsSpec{make_operator(OperatorKind::X, 5).rows()}, 5);
    EXPECT_EQ(tau_moments(shift), Rs({"1", "0", "0", "0", "0"}));
    EXPECT_EQ(tau_moments(cheb("1/4", "0", 7)), Rs({"1", "0", "1/4", "0", "1/8", "0", "5/64"}));
    EXPECT_EQ(tau_moments(build_sequence(family(Family::hermite, "1"), 7)), Rs({"1", "0", "1", "0", "3", "0", "15"}));
}

TEST(TauApply, LinearityAndOrthogonality) {
    const auto herm = build_sequence(family(Family::hermite, "1"), 8);
    const auto m = tau_moments(herm);
    EXPECT_EQ(tau_apply(m, poly({"1"})), Rational(1));
    EXPECT_EQ(tau_apply(m, poly({"0", "0", "1"})), Rational(1));
    // p_2 p_3 = t^5 - 4 t^3 + 3 t is odd
    EXPECT_EQ(tau_apply(m, poly({"0", "3", "0", "-4", "0", "1"})), Rational(0));
    EXPECT_THROW(tau_apply(m, Polynomial::monomial(8)), InsufficientMoments);
}
