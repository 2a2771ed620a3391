#pragma once

// Tridiagonal H: sequences satisfying a three-term recurrence, their
// linearization recurrence, orthogonality under tau, and the banded
// partial-orthogonality claim.

#include <optional>
#include <string>
#include <vector>

#include "polyseq/error.hpp"
#include "polyseq/hspec.hpp"
#include "polyseq/linearization.hpp"
#include "polyseq/oracle.hpp"
#include "polyseq/sequences.hpp"
#include "polyseq/tensor.hpp"

namespace polyseq {

/// p_{n+1} = (t - beta_n) p_n - alpha_n p_{n-1}; alpha[k] holds alpha_{k+1}.
struct ThreeTermRecurrence {
    std::vector<Rational> beta;
    std::vector<Rational> alpha;

    /// alpha_j for j >= 1.
    const Rational& alpha_at(int j) const { return alpha[static_cast<std::size_t>(j - 1)]; }
    const Rational& beta_at(int j) const { return beta[static_cast<std::size_t>(j)]; }

    /// Checks that beta_0..beta_{T-1} and alpha_1..alpha_{T-1} exist and
    /// that those alphas are nonzero.
    void validate(int T) const {
        if (static_cast<int>(beta.size()) < T) throw SpecTooShort("three-term beta list", T);
        if (static_cast<int>(alpha.size()) < T - 1) throw SpecTooShort("three-term alpha list", T - 1);
        for (int j = 1; j < T; ++j)
            if (alpha_at(j).is_zero()) throw ZeroAlpha(j);
    }

    static ThreeTermRecurrence from_spec(const TridiagonalSpec& s) { return {s.beta, s.alpha}; }
};

inline SequencePair op_sequence(const ThreeTermRecurrence& r, int T) {
    r.validate(T);
    return build_P_recurrence(realize_H(TridiagonalSpec{r.beta, r.alpha}, T));
}

/// Slice k from d(n+1,m,k) = d(n,m+1,k) + (beta_m - beta_n) d(n,m,k)
///                         + alpha_m d(n,m-1,k) - alpha_n d(n-1,m,k).
inline TruncMatrix op_lin_recurrence(const ThreeTermRecurrence& r, int n_max, int k) {
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    if (k < 0 || k > 2 * n_max) throw InvalidArgument("slice index k out of range");
    const int needed = 2 * n_max + 2;
    if (static_cast<int>(r.beta.size()) < needed || static_cast<int>(r.alpha.size()) < needed - 1)
        throw WindowExceeded("op_lin_recurrence", needed,
                             std::min(static_cast<int>(r.beta.size()), static_cast<int>(r.alpha.size()) + 1));
    r.validate(needed);

    const int width = 2 * n_max + 1;
    std::vector<std::vector<Rational>> d(static_cast<std::size_t>(n_max + 1),
                                         std::vector<Rational>(static_cast<std::size_t>(width)));
    auto at = [&](int n, int m) -> Rational& { return d[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]; };
    at(0, k) = Rational(1);
    for (int n = 0; n < n_max; ++n)
        for (int m = 0; m <= 2 * n_max - n - 1; ++m) {
            Rational v = at(n, m + 1) + (r.beta_at(m) - r.beta_at(n)) * at(n, m);
            if (m > 0) v += r.alpha_at(m) * at(n, m - 1);
            if (n > 0) v -= r.alpha_at(n) * at(n - 1, m);
            at(n + 1, m) = std::move(v);
        }

    TruncMatrix slice(n_max + 1, -n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m) {
            if (at(n, m) != at(m, n)) throw PropertyViolation("op_lin_recurrence: asymmetric slice");
            if (!at(n, m).is_zero()) slice.set(n, m, at(n, m));
        }
    return slice;
}

inline LinTensor op_lin_tensor(const ThreeTermRecurrence& r, int n_max) {
    LinTensor t{n_max, {}};
    for (int k = 0; k <= lin_k_max(n_max); ++k) t.slices.push_back(op_lin_recurrence(r, n_max, k));
    return t;
}

/// G(n,m) = tau(p_n p_m), with the products formed as polynomials.
inline TruncMatrix orthogonality_table(const SequencePair& pair, int n_max) {
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    detail::require_size("orthogonality_table", pair.size(), 2 * n_max + 2);
    const auto moments = tau_moments(pair);
    TruncMatrix G(n_max + 1, -n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m) {
            Rational v = tau_apply(moments, poly_mul(pair.polys[static_cast<std::size_t>(n)],
                                                     pair.polys[static_cast<std::size_t>(m)]));
            if (!v.is_zero()) G.set(n, m, std::move(v));
        }
    return G;
}

struct SupportCheck {
    bool ok = true;
    std::optional<Index3> violation;  // (n, m, k)
};

/// d(n,m,k) = 0 whenever k < |n - m|.
inline SupportCheck support_check(const LinTensor& t) {
    for (int n = 0; n <= t.n_max; ++n)
        for (int m = 0; m <= t.n_max; ++m)
            for (int k = 0; k < std::abs(n - m) && k <= t.k_max(); ++k)
                if (!t(n, m, k).is_zero()) return {false, Index3{n, m, k}};
    return {};
}

/// For H whose nonzeros sit on diagonals -1..band-2, checks
/// tau(p_n p_m) = 0 for all n, m <= n_max with m >= (band - 2) n + 1.
/// band 3 is ordinary orthogonality, 4 gives m >= 2n+1, 5 gives m >= 3n+1.
inline PairCheck partial_orthogonality_check(const TruncMatrix& H, int band, int n_max) {
    require_monic_hessenberg(H);
    if (band < 3) throw InvalidArgument("band must be at least 3");
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    const int deepest = H.deepest_diagonal().value_or(-1);
    if (deepest > band - 2)
        throw StructureError("H has a nonzero entry on diagonal " + std::to_string(deepest) +
                             ", outside the declared band of " + std::to_string(band));
    detail::require_size("partial_orthogonality_check", H.size(), 2 * n_max + 2);

    const SequencePair pair = build_P_recurrence(H);
    const auto moments = tau_moments(pair);
    for (int n = 0; n <= n_max; ++n)
        for (int m = (band - 2) * n + 1; m <= n_max; ++m) {
            Rational v = tau_apply(moments, poly_mul(pair.polys[static_cast<std::size_t>(n)],
                                                     pair.polys[static_cast<std::size_t>(m)]));
            if (!v.is_zero()) return {false, std::make_pair(n, m)};
        }
    return {};
}

}  // namespace polyseq
