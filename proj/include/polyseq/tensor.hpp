#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyseq/error.hpp"
#include "polyseq/matrix.hpp"

namespace polyseq {

/// Coefficients c(n,m,k), 0 <= n,m <= n_max, 0 <= k <= k_max, stored as
/// one (n_max+1) x (n_max+1) matrix per k. Slices carry no band structure
/// in general; for orthogonal sequences slice k has index -k.
struct LinTensor {
    int n_max = 0;
    std::vector<TruncMatrix> slices;

    int k_max() const { return static_cast<int>(slices.size()) - 1; }

    const Rational& operator()(int n, int m, int k) const { return slices[static_cast<std::size_t>(k)](n, m); }

    static LinTensor zeros(int n_max, int k_max) {
        LinTensor t{n_max, {}};
        for (int k = 0; k <= k_max; ++k) t.slices.emplace_back(n_max + 1, -n_max);
        return t;
    }
};

using Index3 = std::array<int, 3>;

/// First (n,m,k) where the tensors differ, scanning k, then n, then m.
inline std::optional<Index3> first_difference(const LinTensor& a, const LinTensor& b) {
    if (a.n_max != b.n_max || a.k_max() != b.k_max()) return Index3{-1, -1, -1};
    for (int k = 0; k <= a.k_max(); ++k)
        for (int n = 0; n <= a.n_max; ++n)
            for (int m = 0; m <= a.n_max; ++m)
                if (a(n, m, k) != b(n, m, k)) return Index3{n, m, k};
    return std::nullopt;
}

/// Checks the structural properties of linearization coefficients:
/// symmetry in (n,m), d = 0 for n+m < k, d = 1 for n+m = k, and
/// d(0,m,k) = delta(m,k). Returns a description of the first violation.
inline std::optional<std::string> lin_property_violation(const LinTensor& t) {
    auto at = [](int n, int m, int k) {
        return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
    };
    for (int k = 0; k <= t.k_max(); ++k)
        for (int n = 0; n <= t.n_max; ++n)
            for (int m = 0; m <= t.n_max; ++m) {
                const Rational& d = t(n, m, k);
                if (d != t(m, n, k)) return "not symmetric at " + at(n, m, k);
                if (n + m < k && !d.is_zero()) return "nonzero below degree at " + at(n, m, k);
                if (n + m == k && d != Rational(1)) return "leading coefficient not 1 at " + at(n, m, k);
                if (n == 0 && d != Rational(m == k ? 1 : 0)) return "d(0,m,k) != delta at " + at(n, m, k);
            }
    return std::nullopt;
}

/// Number of slices a linearization tensor with this n_max carries.
inline int lin_k_max(int n_max) { return 2 * n_max; }

}  // namespace polyseq
