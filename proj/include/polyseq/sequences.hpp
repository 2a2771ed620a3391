#pragma once

// The similarity pair (A, P) of a monic index -1 matrix H, with
// A H = X A and P = A^{-1}, the polynomial sequence read off the rows of
// P, and the moment functional tau(t^k) = A(k,0).

#include <string>
#include <vector>

#include "polyseq/error.hpp"
#include "polyseq/hspec.hpp"
#include "polyseq/matrix.hpp"
#include "polyseq/polynomial.hpp"

namespace polyseq {

struct SequencePair {
    TruncMatrix H;
    TruncMatrix A;
    TruncMatrix P;
    std::vector<Polynomial> polys;  // p_0 .. p_{T-1}

    int size() const { return H.size(); }
};

namespace detail {

inline bool agree_on_window(const TruncMatrix& lhs, const TruncMatrix& rhs) {
    const int rows = std::min(lhs.window(), rhs.window());
    return equal_on(lhs, rhs, rows, lhs.size());
}

inline Polynomial row_polynomial(const TruncMatrix& M, int k) {
    auto r = M.row(k);
    return Polynomial(std::vector<Rational>(r.begin(), r.end()));
}

}  // namespace detail

/// A built row by row: row 0 = e_0, row j+1 = row j times H.
inline TruncMatrix build_A_rows(const TruncMatrix& H) {
    require_monic_hessenberg(H);
    const int T = H.size();
    TruncMatrix A(T, 0);
    A.set(0, 0, Rational(1));
    for (int j = 0; j + 1 < T; ++j) {
        // row j is supported on columns 0..j, H rows 0..j are complete
        for (int c = 0; c <= j + 1; ++c) {
            Rational acc(0);
            for (int l = std::max(0, c - 1); l <= j; ++l)
                if (!A(j, l).is_zero() && !H(l, c).is_zero()) acc += A(j, l) * H(l, c);
            if (!acc.is_zero()) A.set(j + 1, c, std::move(acc));
        }
    }
    return A;
}

/// p_{k+1}(t) = t p_k(t) - sum_{j<=k} h(k,j) p_j(t), p_0 = 1. P holds the
/// coefficients row-wise and A = P^{-1}; the pair's identities are checked
/// before returning.
inline SequencePair build_P_recurrence(const TruncMatrix& H) {
    require_monic_hessenberg(H);
    const int T = H.size();
    std::vector<Polynomial> polys;
    polys.reserve(static_cast<std::size_t>(T));
    polys.push_back(Polynomial::constant(Rational(1)));
    for (int k = 0; k + 1 < T; ++k) {
        Polynomial next = polys.back().shifted();
        for (int j = 0; j <= k; ++j)
            if (!H(k, j).is_zero()) next -= H(k, j) * polys[static_cast<std::size_t>(j)];
        polys.push_back(std::move(next));
    }

    TruncMatrix P(T, 0);
    for (int k = 0; k < T; ++k)
        for (int j = 0; j <= k; ++j) P.set(k, j, polys[static_cast<std::size_t>(k)][j]);

    SequencePair pair{H, lower_tri_inverse(P), P, std::move(polys)};

    const TruncMatrix I = identity(T);
    const TruncMatrix X = make_operator(OperatorKind::X, T);
    if (pair.A * pair.P != I || pair.P * pair.A != I)
        throw PropertyViolation("A P = I failed");
    if (!detail::agree_on_window(pair.A * H, X * pair.A))
        throw PropertyViolation("A H = X A failed on the exact window");
    if (!detail::agree_on_window(H * pair.P, pair.P * X))
        throw PropertyViolation("H P = P X failed on the exact window");
    return pair;
}

inline SequencePair build_sequence(const HSpec& spec, int T) { return build_P_recurrence(realize_H(spec, T)); }

/// Right inverse of H: with Y = H Xhat (monic lower triangular),
/// Hhat = Xhat Y^{-1}. Y's last diagonal entry is H(T-1,T) = 1, which lies
/// outside the truncation and is filled in from monicity.
inline TruncMatrix build_Hhat(const TruncMatrix& H) {
    require_monic_hessenberg(H);
    const int T = H.size();
    TruncMatrix Y(T, 0);
    for (int i = 0; i < T; ++i)
        for (int k = 0; k + 1 < T && k <= i; ++k)
            if (!H(i, k + 1).is_zero()) Y.set(i, k, H(i, k + 1));
    Y.set(T - 1, T - 1, Rational(1));
    return make_operator(OperatorKind::Xhat, T) * lower_tri_inverse(Y);
}

/// P built column by column from P Xhat = Hhat P. Column 0 is column 0 of
/// -Hhat H with its top entry replaced by 1.
inline TruncMatrix build_P_columns(const TruncMatrix& H) {
    const TruncMatrix Hhat = build_Hhat(H);
    const TruncMatrix HhatH = Hhat * H;
    const int T = H.size();
    TruncMatrix P(T, 0);
    std::vector<Rational> col(static_cast<std::size_t>(T));
    col[0] = Rational(1);
    for (int i = 1; i < T; ++i) col[static_cast<std::size_t>(i)] = -HhatH(i, 0);
    for (int k = 0; k < T; ++k) {
        for (int i = k; i < T; ++i)
            if (!col[static_cast<std::size_t>(i)].is_zero()) P.set(i, k, col[static_cast<std::size_t>(i)]);
        std::vector<Rational> next(static_cast<std::size_t>(T));
        for (int i = 0; i < T; ++i)
            for (int j = 0; j < i; ++j)
                if (!Hhat(i, j).is_zero() && !col[static_cast<std::size_t>(j)].is_zero())
                    next[static_cast<std::size_t>(i)] += Hhat(i, j) * col[static_cast<std::size_t>(j)];
        col = std::move(next);
    }
    return P;
}

/// tau(t^k) = A(k,0), k = 0..T-1.
inline std::vector<Rational> tau_moments(const SequencePair& pair) {
    std::vector<Rational> m;
    m.reserve(static_cast<std::size_t>(pair.size()));
    for (int k = 0; k < pair.size(); ++k) m.push_back(pair.A(k, 0));
    return m;
}

inline Rational tau_apply(std::span<const Rational> moments, const Polynomial& q) {
    if (q.degree() >= static_cast<int>(moments.size()))
        throw InsufficientMoments(q.degree(), static_cast<int>(moments.size()));
    Rational acc(0);
    for (int j = 0; j <= q.degree(); ++j) acc += q[j] * moments[static_cast<std::size_t>(j)];
    return acc;
}

/// Polynomials whose coefficients are the rows of M.
inline std::vector<Polynomial> row_polynomials(const TruncMatrix& M) {
    std::vector<Polynomial> out;
    for (int k = 0; k < M.size(); ++k) out.push_back(detail::row_polynomial(M, k));
    return out;
}

}  // namespace polyseq
