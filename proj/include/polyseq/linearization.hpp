#pragma once

// Linearization coefficients d(n,m,k) with p_n p_m = sum_k d(n,m,k) p_k,
// mixed coefficients e(n,m,k) against a second basis u_k, and connection
// coefficients, all computed from matrices p(H).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyseq/error.hpp"
#include "polyseq/hspec.hpp"
#include "polyseq/matrix.hpp"
#include "polyseq/sequences.hpp"
#include "polyseq/tensor.hpp"

namespace polyseq {

namespace detail {

inline void require_size(const char* what, int actual, int required) {
    if (actual < required) throw WindowExceeded(what, required, actual);
}

inline void require_window(const char* what, const TruncMatrix& M, int rows) {
    if (M.window() < rows)
        throw PropertyViolation(std::string(what) + ": exact window has " + std::to_string(M.window()) +
                                " rows, expected " + std::to_string(rows));
}

}  // namespace detail

/// p_0(M), ..., p_{count-1}(M) for the sequence attached to H, from
/// p_{j+1}(M) = M p_j(M) - sum_{i<=j} h(j,i) p_i(M).
inline std::vector<TruncMatrix> sequence_at_matrix(const TruncMatrix& H, const TruncMatrix& M, int count) {
    require_monic_hessenberg(H);
    if (H.size() != M.size()) throw InvalidArgument("sequence_at_matrix: size mismatch");
    if (count > H.size() + 1) throw WindowExceeded("sequence_at_matrix", count - 1, H.size());
    std::vector<TruncMatrix> out;
    if (count <= 0) return out;
    out.push_back(identity(M.size()));
    for (int j = 0; j + 1 < count; ++j) {
        TruncMatrix next = M * out.back();
        for (int i = 0; i <= j; ++i)
            if (!H(j, i).is_zero()) next = next - H(j, i) * out[static_cast<std::size_t>(i)];
        out.push_back(std::move(next));
    }
    return out;
}

/// p_0(H), ..., p_{count-1}(H).
inline std::vector<TruncMatrix> pn_of_H(const TruncMatrix& H, int count) { return sequence_at_matrix(H, H, count); }

/// Coefficients of p_n w in the p-basis: row n of w(H), entries 0..n+deg(w).
inline std::vector<Rational> linearize_with_w(const SequencePair& pair, const Polynomial& w, int n) {
    if (n < 0) throw InvalidArgument("n must be non-negative");
    const int deg = std::max(0, w.degree());
    detail::require_size("linearize_with_w", pair.size(), n + deg + 2);
    const TruncMatrix wH = poly_of_matrix(w, pair.H);
    detail::require_window("linearize_with_w", wH, n + 1);
    auto row = wH.row(n);
    return {row.begin(), row.begin() + n + deg + 1};
}

/// d(n,m,k) = p_m(H)(n,k), with the p_m(H) from the matrix recurrence.
inline LinTensor lin_tensor_direct(const SequencePair& pair, int n_max) {
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    detail::require_size("lin_tensor_direct", pair.size(), 2 * n_max + 2);
    const auto pH = pn_of_H(pair.H, n_max + 1);
    LinTensor t = LinTensor::zeros(n_max, lin_k_max(n_max));
    for (int m = 0; m <= n_max; ++m) {
        const TruncMatrix& pm = pH[static_cast<std::size_t>(m)];
        detail::require_window("lin_tensor_direct", pm, n_max + 1);
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n + m; ++k)
                if (!pm(n, k).is_zero()) t.slices[static_cast<std::size_t>(k)].set(n, m, pm(n, k));
    }
    if (auto bad = lin_property_violation(t)) throw PropertyViolation("lin_tensor_direct: " + *bad);
    return t;
}

/// Slice k filled row by row from d(0,m,k) = delta(m,k) with
/// d(n+1,m,k) = d(n,m+1,k) + (h(m,m) - h(n,n)) d(n,m,k)
///            + sum_{j<m} h(m,j) d(n,j,k) - sum_{j<n} h(n,j) d(j,m,k).
/// Row n is kept for m <= 2 n_max - n, which is what later rows consume.
inline TruncMatrix lin_tensor_recurrence(const TruncMatrix& H, int n_max, int k) {
    require_monic_hessenberg(H);
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    if (k < 0 || k > 2 * n_max) throw InvalidArgument("slice index k out of range");
    detail::require_size("lin_tensor_recurrence", H.size(), 2 * n_max + 2);

    const int width = 2 * n_max + 1;
    std::vector<std::vector<Rational>> d(static_cast<std::size_t>(n_max + 1),
                                         std::vector<Rational>(static_cast<std::size_t>(width)));
    auto at = [&](int n, int m) -> Rational& { return d[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]; };
    if (k < width) at(0, k) = Rational(1);

    for (int n = 0; n < n_max; ++n) {
        for (int m = 0; m <= 2 * n_max - n - 1; ++m) {
            Rational v = at(n, m + 1);
            v += (H(m, m) - H(n, n)) * at(n, m);
            for (int j = 0; j < m; ++j)
                if (!H(m, j).is_zero()) v += H(m, j) * at(n, j);
            // d(m,j,k) read through symmetry from the finished row j
            for (int j = 0; j < n; ++j)
                if (!H(n, j).is_zero()) v -= H(n, j) * at(j, m);
            at(n + 1, m) = std::move(v);
        }
    }

    TruncMatrix slice(n_max + 1, -n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m) {
            if (at(n, m) != at(m, n))
                throw PropertyViolation("lin_tensor_recurrence: asymmetric at (" + std::to_string(n) + "," +
                                        std::to_string(m) + "," + std::to_string(k) + ")");
            if (!at(n, m).is_zero()) slice.set(n, m, at(n, m));
        }
    return slice;
}

inline LinTensor lin_tensor_recurrence_all(const TruncMatrix& H, int n_max) {
    LinTensor t{n_max, {}};
    for (int k = 0; k <= lin_k_max(n_max); ++k) t.slices.push_back(lin_tensor_recurrence(H, n_max, k));
    if (auto bad = lin_property_violation(t)) throw PropertyViolation("lin_tensor_recurrence: " + *bad);
    return t;
}

/// e(n,m,k) = sum_j p_n(H)(m,j) p_j(K)(0,k) with K the Hessenberg matrix
/// of the u-sequence, so that p_n p_m = sum_k e(n,m,k) u_k.
inline LinTensor mixed_tensor(const SequencePair& pairP, const SequencePair& pairU, int n_max) {
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    if (pairP.size() != pairU.size()) throw InvalidArgument("mixed_tensor: truncation sizes differ");
    detail::require_size("mixed_tensor", pairP.size(), 2 * n_max + 2);

    const auto pH = pn_of_H(pairP.H, n_max + 1);
    const auto pK = sequence_at_matrix(pairP.H, pairU.H, 2 * n_max + 1);
    for (const auto& M : pK) detail::require_window("mixed_tensor", M, 1);

    LinTensor t = LinTensor::zeros(n_max, lin_k_max(n_max));
    for (int n = 0; n <= n_max; ++n) {
        detail::require_window("mixed_tensor", pH[static_cast<std::size_t>(n)], n_max + 1);
        for (int m = 0; m <= n_max; ++m)
            for (int k = 0; k <= n + m; ++k) {
                Rational acc(0);
                for (int j = k; j <= n + m; ++j) {
                    const Rational& a = pH[static_cast<std::size_t>(n)](m, j);
                    const Rational& b = pK[static_cast<std::size_t>(j)](0, k);
                    if (!a.is_zero() && !b.is_zero()) acc += a * b;
                }
                if (!acc.is_zero()) t.slices[static_cast<std::size_t>(k)].set(n, m, std::move(acc));
            }
    }
    for (int k = 0; k <= t.k_max(); ++k)
        for (int n = 0; n <= n_max; ++n)
            for (int m = 0; m < n; ++m)
                if (t(n, m, k) != t(m, n, k)) throw PropertyViolation("mixed_tensor: asymmetric slice");
    return t;
}

/// C(m,k) = p_m(K)(0,k) for 0 <= k <= m <= m_max: p_m = sum_k C(m,k) u_k.
inline TruncMatrix connection_matrix(const SequencePair& pairP, const SequencePair& pairU, int m_max) {
    if (m_max < 0) throw InvalidArgument("m_max must be non-negative");
    if (pairP.size() != pairU.size()) throw InvalidArgument("connection_matrix: truncation sizes differ");
    detail::require_size("connection_matrix", pairP.size(), m_max + 2);
    const auto pK = sequence_at_matrix(pairP.H, pairU.H, m_max + 1);
    TruncMatrix C(m_max + 1, 0);
    for (int m = 0; m <= m_max; ++m) {
        detail::require_window("connection_matrix", pK[static_cast<std::size_t>(m)], 1);
        for (int k = 0; k < C.size(); ++k) {
            const Rational& v = pK[static_cast<std::size_t>(m)](0, k);
            if (k > m && !v.is_zero()) throw PropertyViolation("connection_matrix: not lower triangular");
            if (!v.is_zero()) C.set(m, k, v);
        }
        if (C(m, m) != Rational(1)) throw PropertyViolation("connection_matrix: diagonal entry is not 1");
    }
    return C;
}

/// Outcome of a check over index pairs; `violation` is the first failing pair.
struct PairCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> violation;
};

using InverseCheck = PairCheck;

/// Checks sum_k C_pu(m,k) C_up(k,n) = delta(m,n) on the common block.
inline InverseCheck check_inverse_pair(const TruncMatrix& C_pu, const TruncMatrix& C_up) {
    if (C_pu.size() != C_up.size()) throw InvalidArgument("connection matrices differ in size");
    const int S = C_pu.size();
    for (int m = 0; m < S; ++m)
        for (int n = 0; n < S; ++n) {
            Rational acc(0);
            for (int k = 0; k < S; ++k) acc += C_pu(m, k) * C_up(k, n);
            if (acc != Rational(m == n ? 1 : 0)) return {false, std::make_pair(m, n)};
        }
    return {};
}

inline InverseCheck verify_inverse_connection(const SequencePair& pairP, const SequencePair& pairU, int m_max) {
    return check_inverse_pair(connection_matrix(pairP, pairU, m_max), connection_matrix(pairU, pairP, m_max));
}

}  // namespace polyseq
