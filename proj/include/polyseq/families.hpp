#pragma once

// Closed forms for the Chebyshev, Hermite and Charlier families built from
// the structural operators X, Xhat, D, Dhat.

#include <string>

#include "polyseq/error.hpp"
#include "polyseq/hspec.hpp"
#include "polyseq/matrix.hpp"

namespace polyseq {

namespace detail {

inline TruncMatrix op(OperatorKind kind, int T) { return make_operator(kind, T); }

/// d(n,n,0): a^n for Chebyshev, n! a^n for Hermite and Charlier.
inline TruncMatrix family_norms(const FamilyParams& p, int T) {
    TruncMatrix A(T, 0);
    for (int n = 0; n < T; ++n)
        A.set(n, n, p.family == Family::chebyshev ? pow(p.a, n) : factorial(n) * pow(p.a, n));
    return A;
}

}  // namespace detail

/// p_n(H) in closed form:
///   Chebyshev  sum_k a^k Xhat^k X^{n-k}
///   Hermite    sum_k C(n,k) a^k D^k X^{n-k}
///   Charlier   sum_k C(n,k) a^k D^k (I + D)^{n-k} X^{n-k}
/// None of them involves b.
inline TruncMatrix family_pnH_closed(const FamilyParams& p, int n, int T) {
    p.validate();
    if (n < 0) throw InvalidArgument("n must be non-negative");
    if (T < n + 2) throw WindowExceeded("family_pnH_closed", n + 2, T);
    const TruncMatrix X = detail::op(OperatorKind::X, T);
    const TruncMatrix I = identity(T);
    const TruncMatrix lower = p.family == Family::chebyshev ? detail::op(OperatorKind::Xhat, T) : detail::op(OperatorKind::D, T);
    const TruncMatrix ID = I + detail::op(OperatorKind::D, T);

    TruncMatrix sum(T, -n);
    for (int k = 0; k <= n; ++k) {
        Rational coeff = pow(p.a, k);
        if (p.family != Family::chebyshev) coeff *= binomial(n, k);
        TruncMatrix term = matrix_power(lower, k);
        if (p.family == Family::charlier) term = term * matrix_power(ID, n - k);
        term = term * matrix_power(X, n - k);
        sum = sum + coeff * term;
    }
    return sum;
}

/// Slice k of the linearization tensor in closed form, n, m <= n_max, with
/// A = diag(d(n,n,0)):
///   Chebyshev  sum_j Xhat^j A X^{k-j}
///   Hermite    (1/k!) sum_j C(k,j) D^j A Dhat^{k-j}
///   Charlier   (1/k!) sum_j C(k,j) D^j (I + D)^{k-j} A Dhat^{k-j}
inline TruncMatrix family_Ak_closed(const FamilyParams& p, int k, int n_max) {
    p.validate();
    if (k < 0 || n_max < 0) throw InvalidArgument("k and n_max must be non-negative");
    // row n of each term reaches column n + k
    const int T = n_max + k + 2;
    const TruncMatrix A = detail::family_norms(p, T);
    const TruncMatrix ID = identity(T) + detail::op(OperatorKind::D, T);

    TruncMatrix sum(T, -k);
    for (int j = 0; j <= k; ++j) {
        TruncMatrix term;
        if (p.family == Family::chebyshev) {
            term = matrix_power(detail::op(OperatorKind::Xhat, T), j) * A * matrix_power(detail::op(OperatorKind::X, T), k - j);
        } else {
            term = matrix_power(detail::op(OperatorKind::D, T), j);
            if (p.family == Family::charlier) term = term * matrix_power(ID, k - j);
            term = binomial(k, j) * (term * A * matrix_power(detail::op(OperatorKind::Dhat, T), k - j));
        }
        sum = sum + term;
    }
    if (p.family != Family::chebyshev) sum = (Rational(1) / factorial(k)) * sum;
    if (sum.window() < n_max + 1) throw PropertyViolation("family_Ak_closed: window too small");

    TruncMatrix out(n_max + 1, -n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m)
            if (!sum(n, m).is_zero()) out.set(n, m, sum(n, m));
    return out;
}

/// Chebyshev P = sum_k (X - H)^k D^k / k!, with X - H = -a Xhat - b I.
/// Term k has index >= k, so k < T covers the whole truncation.
inline TruncMatrix cheby_series_P(const FamilyParams& p, int T) {
    if (p.family != Family::chebyshev)
        throw WrongFamily("cheby_series_P needs the chebyshev family, got " + std::string(family_name(p.family)));
    p.validate();
    const TruncMatrix XminusH = Rational(-1) * (p.a * make_operator(OperatorKind::Xhat, T) + p.b * identity(T));
    const TruncMatrix D = make_operator(OperatorKind::D, T);
    TruncMatrix sum = identity(T);
    TruncMatrix left = identity(T);
    TruncMatrix right = identity(T);
    for (int k = 1; k < T; ++k) {
        left = left * XminusH;
        right = right * D;
        sum = sum + (Rational(1) / factorial(k)) * (left * right);
    }
    return sum;
}

/// Hermite P = exp(-b D - a D^2 / 2), or P^{-1} = exp(b D + a D^2 / 2) when
/// `inverse` is set. D has index 1, so terms with k >= T vanish.
inline TruncMatrix hermite_exp_P(const FamilyParams& p, int T, bool inverse) {
    if (p.family != Family::hermite)
        throw WrongFamily("hermite_exp_P needs the hermite family, got " + std::string(family_name(p.family)));
    p.validate();
    const TruncMatrix D = make_operator(OperatorKind::D, T);
    const Rational sign(inverse ? 1 : -1);
    const TruncMatrix G = sign * (p.b * D + (p.a / Rational(2)) * (D * D));
    TruncMatrix sum = identity(T);
    TruncMatrix power = identity(T);
    for (int k = 1; k < T; ++k) {
        power = power * G;
        sum = sum + (Rational(1) / factorial(k)) * power;
    }
    return sum;
}

}  // namespace polyseq
