#pragma once

// Declarative descriptions of monic index -1 matrices H.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyseq/error.hpp"
#include "polyseq/matrix.hpp"
#include "polyseq/rational.hpp"

namespace polyseq {

/// H(k,k) = beta[k], H(k+1,k) = alpha[k] (that is, alpha_{k+1}), H(k,k+1) = 1.
struct TridiagonalSpec {
    std::vector<Rational> beta;
    std::vector<Rational> alpha;
};

/// Explicit lower Hessenberg rows. Row k may be given with any length;
/// missing entries are zero, the entry at column k+1 must be 1 and all
/// entries beyond it must be zero.
struct RowsSpec {
    std::vector<std::vector<Rational>> rows;
};

enum class Family { chebyshev, hermite, charlier };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::chebyshev: return "chebyshev";
        case Family::hermite: return "hermite";
        case Family::charlier: return "charlier";
    }
    return "?";
}

inline Family family_from_string(std::string_view s) {
    if (s == "chebyshev") return Family::chebyshev;
    if (s == "hermite") return Family::hermite;
    if (s == "charlier") return Family::charlier;
    throw InvalidArgument("unknown family '" + std::string(s) + "'");
}

/// Chebyshev: H = a Xhat + b I + X.  Hermite: H = X + b I + a D.
/// Charlier: H = X + X D + (a - 1) I + a D (b unused).
struct FamilyParams {
    Family family = Family::chebyshev;
    Rational a{1};
    Rational b{0};

    void validate() const {
        if (a.is_zero()) throw ZeroParameter();
    }
};

using HSpec = std::variant<TridiagonalSpec, RowsSpec, FamilyParams>;

/// Throws StructureError unless H is declared index -1 with ones on the
/// superdiagonal and zeros above it.
inline void require_monic_hessenberg(const TruncMatrix& H) {
    if (H.index() != -1)
        throw StructureError("H must have declared index -1, got " + std::to_string(H.index()));
    for (int k = 0; k + 1 < H.size(); ++k)
        if (H(k, k + 1) != Rational(1))
            throw StructureError("H is not monic: entry (" + std::to_string(k) + "," +
                                 std::to_string(k + 1) + ") is " + H(k, k + 1).str());
}

inline TruncMatrix realize_H(const HSpec& spec, int T) {
    if (T < 1) throw InvalidArgument("truncation size must be positive");
    TruncMatrix H(T, -1, T - 1);
    for (int k = 0; k + 1 < T; ++k) H.set(k, k + 1, Rational(1));

    if (const auto* tri = std::get_if<TridiagonalSpec>(&spec)) {
        if (static_cast<int>(tri->beta.size()) < T) throw SpecTooShort("tridiagonal beta list", T);
        if (static_cast<int>(tri->alpha.size()) < T - 1) throw SpecTooShort("tridiagonal alpha list", T - 1);
        for (int k = 0; k < T; ++k) H.set(k, k, tri->beta[static_cast<std::size_t>(k)]);
        for (int k = 0; k + 1 < T; ++k) H.set(k + 1, k, tri->alpha[static_cast<std::size_t>(k)]);
    } else if (const auto* rs = std::get_if<RowsSpec>(&spec)) {
        if (static_cast<int>(rs->rows.size()) < T) throw SpecTooShort("rows list", T);
        for (int k = 0; k < T; ++k) {
            const auto& row = rs->rows[static_cast<std::size_t>(k)];
            for (int j = 0; j < static_cast<int>(row.size()); ++j) {
                const Rational& v = row[static_cast<std::size_t>(j)];
                if (j == k + 1 && v != Rational(1))
                    throw StructureError("row " + std::to_string(k) + " must have 1 at column " +
                                         std::to_string(k + 1));
                if (j > k + 1 && !v.is_zero())
                    throw StructureError("row " + std::to_string(k) + " has a nonzero entry right of the superdiagonal");
                if (j <= k && j < T) H.set(k, j, v);
            }
            if (k + 1 < T && static_cast<int>(row.size()) <= k + 1)
                throw StructureError("row " + std::to_string(k) + " is missing its superdiagonal 1");
        }
    } else {
        const auto& fp = std::get<FamilyParams>(spec);
        fp.validate();
        for (int k = 0; k < T; ++k) {
            Rational diag = fp.b;
            Rational sub = fp.a;
            switch (fp.family) {
                case Family::chebyshev: break;
                case Family::hermite: sub = fp.a * Rational(k + 1); break;
                case Family::charlier:
                    diag = Rational(k) + fp.a;
                    sub = fp.a * Rational(k + 1);
                    break;
            }
            H.set(k, k, diag);
            if (k + 1 < T) H.set(k + 1, k, sub);
        }
    }
    return H;
}

/// True when H has no nonzero entries below its first subdiagonal.
inline bool is_tridiagonal(const TruncMatrix& H) { return H.deepest_diagonal().value_or(0) <= 1; }

}  // namespace polyseq
