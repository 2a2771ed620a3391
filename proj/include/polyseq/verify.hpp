#pragma once

// Identity checks shared by the test suites and the `verify` command.
// Each returns a description of the first violation, or nullopt.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyseq/families.hpp"
#include "polyseq/linearization.hpp"
#include "polyseq/oracle.hpp"
#include "polyseq/orthogonal.hpp"
#include "polyseq/sequences.hpp"

namespace polyseq {

namespace detail {

inline std::string at2(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace detail

/// Row_m(p_n(H)) = Row_n(p_m(H)) for n, m <= n_max. pnH must hold p_0(H)..p_{n_max}(H).
inline std::optional<std::string> row_identity_violation(const std::vector<TruncMatrix>& pnH, int n_max) {
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m < n; ++m)
            for (int c = 0; c <= n + m; ++c)
                if (pnH[static_cast<std::size_t>(n)](m, c) != pnH[static_cast<std::size_t>(m)](n, c))
                    return "row identity fails for (n,m)=" + detail::at2(n, m);
    return std::nullopt;
}

/// Row_m(p_{n+1}(H)) = sum_{j<=m+1} h(m,j) Row_j(p_n(H)) - sum_{j<=n} h(n,j) Row_m(p_j(H)),
/// for n + 1 <= n_max and m <= n_max.
inline std::optional<std::string> row_recurrence_violation(const TruncMatrix& H, const std::vector<TruncMatrix>& pnH,
                                                           int n_max) {
    for (int n = 0; n + 1 <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m)
            for (int c = 0; c <= n + m + 1; ++c) {
                Rational rhs(0);
                for (int j = 0; j <= m + 1; ++j) rhs += H(m, j) * pnH[static_cast<std::size_t>(n)](j, c);
                for (int j = 0; j <= n; ++j) rhs -= H(n, j) * pnH[static_cast<std::size_t>(j)](m, c);
                if (rhs != pnH[static_cast<std::size_t>(n + 1)](m, c))
                    return "row recurrence fails for (n,m)=" + detail::at2(n, m);
            }
    return std::nullopt;
}

/// sum_k t(n,m,k) basis_k = p_n p_m for every n, m <= t.n_max.
inline std::optional<std::string> reconstruction_violation(const LinTensor& t, const std::vector<Polynomial>& polys,
                                                           const std::vector<Polynomial>& basis) {
    for (int n = 0; n <= t.n_max; ++n)
        for (int m = 0; m <= t.n_max; ++m) {
            Polynomial sum;
            for (int k = 0; k <= t.k_max(); ++k)
                if (!t(n, m, k).is_zero()) sum += t(n, m, k) * basis[static_cast<std::size_t>(k)];
            if (sum != poly_mul(polys[static_cast<std::size_t>(n)], polys[static_cast<std::size_t>(m)]))
                return "reconstruction of p_n p_m fails for (n,m)=" + detail::at2(n, m);
        }
    return std::nullopt;
}

/// Slice 0 must be diag(alpha_1 ... alpha_n).
inline std::optional<std::string> slice_zero_violation(const LinTensor& t, const ThreeTermRecurrence& r) {
    Rational prod(1);
    for (int n = 0; n <= t.n_max; ++n) {
        if (n > 0) prod *= r.alpha_at(n);
        for (int m = 0; m <= t.n_max; ++m)
            if (t(n, m, 0) != (n == m ? prod : Rational(0))) return "d(n,m,0) wrong at " + detail::at2(n, m);
    }
    return std::nullopt;
}

/// G must be diag(alpha_1 ... alpha_n).
inline std::optional<std::string> orthogonality_violation(const TruncMatrix& G, const ThreeTermRecurrence& r) {
    Rational prod(1);
    for (int n = 0; n < G.size(); ++n) {
        if (n > 0) prod *= r.alpha_at(n);
        for (int m = 0; m < G.size(); ++m)
            if (G(n, m) != (n == m ? prod : Rational(0))) return "tau(p_n p_m) wrong at " + detail::at2(n, m);
    }
    return std::nullopt;
}

/// Tridiagonal data of H (rows 0..T-1).
inline ThreeTermRecurrence three_term_of(const TruncMatrix& H) {
    ThreeTermRecurrence r;
    for (int k = 0; k < H.size(); ++k) r.beta.push_back(H(k, k));
    for (int k = 0; k + 1 < H.size(); ++k) r.alpha.push_back(H(k + 1, k));
    return r;
}

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every applicable identity for the sequence of `spec` at truncation
/// T >= 2 n_max + 2.
inline std::vector<CheckOutcome> run_property_suite(const HSpec& spec, int n_max, int T) {
    std::vector<CheckOutcome> out;
    auto record = [&](std::string name, std::optional<std::string> bad) {
        out.push_back({std::move(name), !bad.has_value(), bad.value_or("")});
    };
    auto expect = [&](std::string name, bool ok, std::string why) {
        record(std::move(name), ok ? std::nullopt : std::optional<std::string>(std::move(why)));
    };

    const TruncMatrix H = realize_H(spec, T);
    const SequencePair pair = build_P_recurrence(H);  // checks A P = I, A H = X A, H P = P X
    expect("similarity pair (A P = I, A H = X A, H P = P X)", true, "");
    expect("A built row by row equals P^{-1}", build_A_rows(H) == pair.A, "build_A_rows differs");
    expect("P built column by column equals recurrence P", build_P_columns(H) == pair.P, "build_P_columns differs");
    {
        const TruncMatrix Hhat = build_Hhat(H);
        const TruncMatrix HHhat = H * Hhat;
        expect("H Hhat = I on the exact window", equal_on(HHhat, identity(T), HHhat.window(), T),
               "H Hhat differs from I");
        const TruncMatrix diff = Hhat * H - identity(T);
        bool only_col0 = true;
        for (int i = 0; i < diff.window(); ++i)
            for (int k = 1; k < T; ++k)
                if (!diff(i, k).is_zero()) only_col0 = false;
        expect("Hhat H - I vanishes outside column 0", only_col0, "nonzero outside column 0");
    }

    const LinTensor direct = lin_tensor_direct(pair, n_max);
    const LinTensor rec = lin_tensor_recurrence_all(H, n_max);
    const LinTensor oracle = lin_tensor_oracle(pair, n_max);
    auto diff_text = [](std::optional<Index3> d) {
        return d ? "differs at (" + std::to_string((*d)[0]) + "," + std::to_string((*d)[1]) + "," +
                       std::to_string((*d)[2]) + ")"
                 : std::string();
    };
    auto d1 = first_difference(direct, oracle);
    expect("matrix formula d(n,m,k) = p_m(H)(n,k) matches oracle", !d1, diff_text(d1));
    auto d2 = first_difference(rec, oracle);
    expect("d-recurrence matches oracle", !d2, diff_text(d2));
    record("structural properties of d", lin_property_violation(oracle));

    const auto pH = pn_of_H(H, n_max + 1);
    record("row identity Row_m(p_n(H)) = Row_n(p_m(H))", row_identity_violation(pH, n_max));
    record("row recurrence for p_{n+1}(H)", row_recurrence_violation(H, pH, n_max));
    record("sum_k d(n,m,k) p_k = p_n p_m", reconstruction_violation(direct, pair.polys, pair.polys));

    if (is_tridiagonal(H)) {
        const ThreeTermRecurrence r = three_term_of(H);
        bool alphas_nonzero = true;
        for (const auto& a : r.alpha) alphas_nonzero = alphas_nonzero && !a.is_zero();
        if (alphas_nonzero) {
            auto d3 = first_difference(op_lin_tensor(r, n_max), oracle);
            expect("three-term d-recurrence matches oracle", !d3, diff_text(d3));
            record("d(n,m,0) = delta(n,m) alpha_1...alpha_n", slice_zero_violation(direct, r));
            record("tau(p_n p_m) = delta(n,m) alpha_1...alpha_n", orthogonality_violation(orthogonality_table(pair, n_max), r));
            auto s = support_check(direct);
            expect("d(n,m,k) = 0 for k < |n-m|", s.ok, diff_text(s.violation));
        }
    }

    if (const auto* fp = std::get_if<FamilyParams>(&spec)) {
        bool pnh_ok = true;
        for (int n = 0; n <= n_max; ++n) {
            const TruncMatrix closed = family_pnH_closed(*fp, n, T);
            const int rows = std::min(closed.window(), pH[static_cast<std::size_t>(n)].window());
            if (!equal_on(closed, pH[static_cast<std::size_t>(n)], rows, T)) pnh_ok = false;
        }
        expect("closed-form p_n(H) matches generic evaluation", pnh_ok, "closed-form p_n(H) differs");
        bool ak_ok = true;
        for (int k = 0; k <= lin_k_max(n_max); ++k)
            if (family_Ak_closed(*fp, k, n_max) != direct.slices[static_cast<std::size_t>(k)]) ak_ok = false;
        expect("closed-form slices match d(n,m,k)", ak_ok, "closed-form slice differs");
        if (fp->family == Family::chebyshev)
            expect("series for P matches recurrence", cheby_series_P(*fp, T) == pair.P, "series differs");
        if (fp->family == Family::hermite) {
            const TruncMatrix Pe = hermite_exp_P(*fp, T, false);
            const TruncMatrix Pinv = hermite_exp_P(*fp, T, true);
            expect("exponential series for P and P^{-1}", Pe == pair.P && Pinv == pair.A,
                   "exponential series differs");
        }
    }
    return out;
}

}  // namespace polyseq
