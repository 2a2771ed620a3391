#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace polyseq;
using namespace polyseq::testing;

TEST(PolyMul, Basics) {
    const auto g = poly({"3", "-1/2", "2"});
    EXPECT_EQ(poly_mul(poly({"1"}), g), g);
    EXPECT_EQ(poly_mul(poly({"-1", "1"}), poly({"1", "1"})), poly({"-1", "0", "1"}));
    EXPECT_EQ(poly_mul(poly({"-1", "0", "1"}), poly({"0", "-3", "0", "1"})), poly({"0", "3", "0", "-4", "0", "1"}));
    EXPECT_TRUE(poly_mul(Polynomial{}, g).is_zero());
}

TEST(ExpandInBasis, BasisElementsAreUnitVectors) {
    const auto pair = build_sequence(family(Family::chebyshev, "1/4"), 6);
    for (int j = 0; j < 6; ++j) {
        const auto e = expand_in_basis(pair.polys[static_cast<std::size_t>(j)], pair.polys);
        for (int k = 0; k <= j; ++k) EXPECT_EQ(e.coeffs[static_cast<std::size_t>(k)], Rational(k == j ? 1 : 0));
    }
}

TEST(ExpandInBasis, SquareInChebyshevBasis) {
    const auto pair = build_sequence(family(Family::chebyshev, "1/4"), 4);
    EXPECT_EQ(expand_in_basis(Polynomial::monomial(2), pair.polys).coeffs, Rs({"1/4", "0", "1"}));
}

TEST(ExpandInBasis, RoundTripRandom) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pair = build_P_recurrence(random_dense_H(rng, 8));
        std::vector<Rational> c;
        for (int j = 0; j < 8; ++j) c.push_back(random_rational(rng));
        const Polynomial target(c);
        const auto e = expand_in_basis(target, pair.polys);
        Polynomial sum;
        for (std::size_t k = 0; k < e.coeffs.size(); ++k) sum += e.coeffs[k] * pair.polys[k];
        EXPECT_EQ(sum, target);
    }
}

TEST(ExpandInBasis, InvalidBasis) {
    EXPECT_THROW(expand_in_basis(poly({"1"}), std::vector<Polynomial>{poly({"2"})}), InvalidBasis);
    EXPECT_THROW(expand_in_basis(poly({"1"}), std::vector<Polynomial>{poly({"0", "1"})}), InvalidBasis);
    EXPECT_THROW(expand_in_basis(poly({"0", "0", "1"}), std::vector<Polynomial>{poly({"1"}), poly({"0", "1"})}),
                 InvalidBasis);
}

TEST(LinTensorOracle, MonomialBasis) {
    const auto pair = build_sequence(RowsSpec{make_operator(OperatorKind::X, 9).rows()}, 9);
    const auto t = lin_tensor_oracle(pair, 3);
    for (int k = 0; k <= 6; ++k)
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m) EXPECT_EQ(t(n, m, k), Rational(k == n + m ? 1 : 0));
}

TEST(LinTensorOracle, HermiteValues) {
    const auto pair = build_sequence(family(Family::hermite, "1"), 6);
    const auto t = lin_tensor_oracle(pair, 2);
    // p_1 p_1 = p_2 + p_0, p_1 p_2 = p_3 + 2 p_1, p_2 p_2 = p_4 + 4 p_2 + 2 p_0
    EXPECT_EQ(t(1, 1, 0), Rational(1));
    EXPECT_EQ(t(1, 2, 1), Rational(2));
    EXPECT_EQ(t(2, 2, 0), Rational(2));
    EXPECT_EQ(t(2, 2, 2), Rational(4));
    EXPECT_EQ(t(2, 2, 4), Rational(1));
    EXPECT_FALSE(lin_property_violation(t).has_value());
}

TEST(LinTensorOracle, WindowExceeded) {
    const auto pair = build_sequence(family(Family::hermite, "1"), 6);
    try {
        lin_tensor_oracle(pair, 3);
        FAIL();
    } catch (const WindowExceeded& e) {
        EXPECT_EQ(e.required_size(), 7);
    }
}
