#pragma once

// Brute-force reference path: schoolbook products of polynomials and
// expansion in a graded monic basis by back-substitution. Works only with
// the polynomials of a sequence, never with matrices p(H).

#include <span>
#include <vector>

#include "polyseq/error.hpp"
#include "polyseq/polynomial.hpp"
#include "polyseq/sequences.hpp"
#include "polyseq/tensor.hpp"

namespace polyseq {

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(f.degree() + g.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        if (f[i].is_zero()) continue;
        for (int j = 0; j <= g.degree(); ++j) c[static_cast<std::size_t>(i + j)] += f[i] * g[j];
    }
    return Polynomial(std::move(c));
}

struct BasisExpansion {
    Polynomial target;
    std::vector<Polynomial> basis;
    std::vector<Rational> coeffs;  // length deg(target) + 1
};

/// Solves target = sum_k coeffs[k] basis[k] from the top degree down.
inline BasisExpansion expand_in_basis(const Polynomial& target, std::span<const Polynomial> basis) {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k].degree() != static_cast<int>(k) || !basis[k].is_monic())
            throw InvalidBasis("basis element " + std::to_string(k) + " is not monic of degree " +
                               std::to_string(k));
    if (target.degree() >= static_cast<int>(basis.size()))
        throw InvalidBasis("basis has " + std::to_string(basis.size()) + " elements, target has degree " +
                           std::to_string(target.degree()));

    BasisExpansion out{target, std::vector<Polynomial>(basis.begin(), basis.end()), {}};
    out.coeffs.resize(static_cast<std::size_t>(target.degree() + 1));
    Polynomial rest = target;
    for (int k = target.degree(); k >= 0; --k) {
        Rational c = rest[k];
        if (!c.is_zero()) rest -= c * basis[static_cast<std::size_t>(k)];
        out.coeffs[static_cast<std::size_t>(k)] = std::move(c);
    }
    return out;
}

/// d(n,m,k) from the definition: expand p_n p_m in the p-basis.
inline LinTensor lin_tensor_oracle(const SequencePair& pair, int n_max) {
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    if (pair.size() <= 2 * n_max) throw WindowExceeded("lin_tensor_oracle", 2 * n_max + 1, pair.size());
    LinTensor t = LinTensor::zeros(n_max, lin_k_max(n_max));
    const std::span<const Polynomial> basis(pair.polys.data(), static_cast<std::size_t>(2 * n_max + 1));
    for (int n = 0; n <= n_max; ++n)
        for (int m = n; m <= n_max; ++m) {
            auto e = expand_in_basis(poly_mul(pair.polys[static_cast<std::size_t>(n)],
                                              pair.polys[static_cast<std::size_t>(m)]),
                                     basis);
            for (int k = 0; k < static_cast<int>(e.coeffs.size()); ++k) {
                const Rational& c = e.coeffs[static_cast<std::size_t>(k)];
                if (c.is_zero()) continue;
                t.slices[static_cast<std::size_t>(k)].set(n, m, c);
                t.slices[static_cast<std::size_t>(k)].set(m, n, c);
            }
        }
    return t;
}

}  // namespace polyseq
