#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace polyseq;
using namespace polyseq::testing;

TEST(MakeOperator, ShiftAndDerivative) {
    EXPECT_EQ(make_operator(OperatorKind::X, 3), M({{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}, -1));
    EXPECT_EQ(make_operator(OperatorKind::D, 3), M({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "2", "0"}}, 1));
    EXPECT_EQ(make_operator(OperatorKind::J0, 2), M({{"0", "0"}, {"0", "1"}}, 0));
}

TEST(MakeOperator, DeclaredIndices) {
    EXPECT_EQ(make_operator(OperatorKind::X, 4).index(), -1);
    EXPECT_EQ(make_operator(OperatorKind::Xhat, 4).index(), 1);
    EXPECT_EQ(make_operator(OperatorKind::D, 4).index(), 1);
    EXPECT_EQ(make_operator(OperatorKind::Dhat, 4).index(), -1);
    EXPECT_EQ(make_operator(OperatorKind::I, 4).index(), 0);
    EXPECT_EQ(make_operator(OperatorKind::J0, 4).index(), 0);
}

TEST(MakeOperator, UnknownKindAndBadSize) {
    EXPECT_THROW(operator_kind_from_string("Y"), InvalidArgument);
    EXPECT_EQ(operator_kind_from_string("Dhat"), OperatorKind::Dhat);
    EXPECT_THROW(make_operator(OperatorKind::X, 0), InvalidArgument);
}

TEST(TruncMatrix, RejectsEntriesAboveDeclaredIndex) {
    TruncMatrix A(3, 0);
    EXPECT_THROW(A.set(0, 1, Rational(1)), StructureError);
    EXPECT_NO_THROW(A.set(0, 1, Rational(0)));
    EXPECT_THROW(M({{"1", "1"}, {"0", "1"}}, 0), StructureError);
}

TEST(MatMul, ShiftIdentities) {
    for (int T = 2; T <= 6; ++T) {
        const auto X = make_operator(OperatorKind::X, T);
        const auto Xh = make_operator(OperatorKind::Xhat, T);
        const auto XXh = X * Xh;
        // row T-1 of X has its 1 in column T, outside the truncation
        EXPECT_EQ(XXh.window(), T - 1);
        EXPECT_TRUE(equal_on(XXh, identity(T), T - 1, T)) << "T=" << T;
        EXPECT_TRUE(XXh(T - 1, T - 1).is_zero());
        EXPECT_EQ(Xh * X, make_operator(OperatorKind::J0, T)) << "T=" << T;
    }
}

TEST(MatMul, CommutatorOfXAndDLosesOneRow) {
    const int T = 5;
    const auto X = make_operator(OperatorKind::X, T);
    const auto D = make_operator(OperatorKind::D, T);
    const auto C = X * D - D * X;
    EXPECT_TRUE(equal_on(C, identity(T), 4, 4));
    EXPECT_FALSE(equal_on(C, identity(T), 5, 5));
    EXPECT_EQ(C.window(), 4);
}

TEST(MatMul, SizeMismatch) {
    EXPECT_THROW(identity(2) * identity(3), InvalidArgument);
}

TEST(MatMul, IndexIsAdditiveLowerBound) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto A = random_banded_H(rng, 6, 2);
        const auto B = random_banded_H(rng, 6, 3);
        const auto C = A * B;
        EXPECT_EQ(C.index(), -2);
        EXPECT_GE(C.observed_index().value_or(100), A.index() + B.index());
    }
}

TEST(MatMul, AssociativeAndDistributiveOnWindow) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int T = 7;
        const auto A = random_dense_H(rng, T);
        const auto B = random_dense_H(rng, T);
        const auto C = random_dense_H(rng, T);
        const auto left = (A * B) * C;
        const auto right = A * (B * C);
        const int rows = std::min(left.window(), right.window());
        EXPECT_EQ(rows, T - 3);
        EXPECT_TRUE(equal_on(left, right, rows, T));
        EXPECT_EQ(A * (B + C), A * B + A * C);
    }
}

TEST(Transpose, OperatorsAndInvolution) {
    EXPECT_EQ(transpose(make_operator(OperatorKind::X, 5)), make_operator(OperatorKind::Xhat, 5));
    EXPECT_EQ(transpose(make_operator(OperatorKind::D, 5)), make_operator(OperatorKind::Dhat, 5));
    EXPECT_EQ(transpose(make_operator(OperatorKind::D, 5)).index(), -1);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto A = random_dense_H(rng, 6);
        EXPECT_EQ(transpose(transpose(A)), A);
    }
}

TEST(LowerTriInverse, IdentityAndPascal) {
    EXPECT_EQ(lower_tri_inverse(identity(4)), identity(4));
    const auto pascal = M({{"1", "0", "0"}, {"1", "1", "0"}, {"1", "2", "1"}}, 0);
    EXPECT_EQ(lower_tri_inverse(pascal), M({{"1", "0", "0"}, {"-1", "1", "0"}, {"1", "-2", "1"}}, 0));
}

TEST(LowerTriInverse, RandomMonicIsTwoSided) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const int T = 8;
        TruncMatrix A(T, 0);
        for (int i = 0; i < T; ++i) {
            A.set(i, i, Rational(1));
            for (int k = 0; k < i; ++k) A.set(i, k, random_rational(rng));
        }
        const auto B = lower_tri_inverse(A);
        EXPECT_EQ(A * B, identity(T));
        EXPECT_EQ(B * A, identity(T));
    }
}

TEST(LowerTriInverse, ZeroDiagonalNamesRow) {
    const auto A = M({{"1", "0", "0"}, {"5", "0", "0"}, {"1", "2", "1"}}, 0);
    try {
        lower_tri_inverse(A);
        FAIL() << "expected NotInvertible";
    } catch (const NotInvertible& e) {
        EXPECT_EQ(e.row(), 1);
    }
    EXPECT_THROW(lower_tri_inverse(make_operator(OperatorKind::X, 3)), InvalidArgument);
}

TEST(PolyOfMatrix, ConstantsAndShiftPowers) {
    std::mt19937_64 rng(9);
    const auto H = random_dense_H(rng, 5);
    EXPECT_EQ(poly_of_matrix(poly({"1"}), H), identity(5));
    EXPECT_EQ(poly_of_matrix(poly({"0", "1"}), H), H);
    const auto X2 = poly_of_matrix(poly({"0", "0", "1"}), make_operator(OperatorKind::X, 5));
    EXPECT_EQ(X2, M({{"0", "0", "1", "0", "0"},
                     {"0", "0", "0", "1", "0"},
                     {"0", "0", "0", "0", "1"},
                     {"0", "0", "0", "0", "0"},
                     {"0", "0", "0", "0", "0"}},
                    -2));
    EXPECT_EQ(X2.window(), 3);
}

TEST(PolyOfMatrix, WindowMatchesDegreeBound) {
    std::mt19937_64 rng(13);
    const int T = 9;
    const auto H = random_dense_H(rng, T);
    const auto big = random_banded_H(rng, T + 4, T + 3);
    // the leading block of a larger truncation agrees on the certified rows
    TruncMatrix Hbig(T + 4, -1, T + 3);
    for (int i = 0; i < T + 4; ++i)
        for (int k = 0; k < T + 4; ++k) Hbig.set(i, k, i < T && k < T ? H(i, k) : big(i, k));
    for (int i = 0; i + 1 < T + 4; ++i) Hbig.set(i, i + 1, Rational(1));
    const Polynomial w = poly({"2", "-1", "1/3", "1"});
    const auto small = poly_of_matrix(w, H);
    const auto large = poly_of_matrix(w, Hbig);
    EXPECT_EQ(small.window(), T - 3);
    EXPECT_TRUE(equal_on(small, large, small.window(), T));
}
