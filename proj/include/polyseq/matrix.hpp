#pragma once

// Truncated elements of the algebra of generalized lower Hessenberg
// matrices: an infinite matrix A with a(j,k) = 0 whenever j - k < m is
// represented by its leading T x T block, its declared index m, and the
// number of leading rows that are known to be exact.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyseq/error.hpp"
#include "polyseq/polynomial.hpp"
#include "polyseq/rational.hpp"

namespace polyseq {

class TruncMatrix {
public:
    TruncMatrix() = default;

    /// Zero matrix of the given size and declared index.
    TruncMatrix(int size, int index) : TruncMatrix(size, index, size) {}

    TruncMatrix(int size, int index, int window)
        : size_(size), index_(index), window_(std::clamp(window, 0, size)) {
        if (size < 1) throw InvalidArgument("truncation size must be positive");
        data_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    }

    /// Builds from explicit rows; every row must have `rows.size()` entries
    /// and respect the declared index.
    static TruncMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int index) {
        const int n = static_cast<int>(rows.size());
        TruncMatrix m(n, index);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
                throw InvalidArgument("row " + std::to_string(i) + " has wrong length");
            for (int k = 0; k < n; ++k) m.set(i, k, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        }
        return m;
    }

    int size() const { return size_; }
    int index() const { return index_; }

    /// Rows 0..window()-1 equal the rows of the untruncated matrix, and all
    /// of their nonzero entries lie inside the truncation.
    int window() const { return window_; }

    const Rational& operator()(int i, int k) const {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(k)];
    }

    void set(int i, int k, Rational v) {
        if (i - k < index_ && !v.is_zero())
            throw StructureError("entry (" + std::to_string(i) + "," + std::to_string(k) +
                                 ") lies above the declared index " + std::to_string(index_));
        ref(i, k) = std::move(v);
    }

    std::span<const Rational> row(int i) const {
        return {data_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(size_),
                static_cast<std::size_t>(size_)};
    }

    TruncMatrix with_window(int window) const {
        TruncMatrix m = *this;
        m.window_ = std::clamp(window, 0, size_);
        return m;
    }

    /// Leading s x s principal block.
    TruncMatrix leading(int s) const {
        if (s < 1 || s > size_) throw InvalidArgument("leading block size out of range");
        TruncMatrix m(s, index_, std::min(window_, s + std::min(0, index_)));
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < s; ++k) m.ref(i, k) = (*this)(i, k);
        return m;
    }

    std::vector<std::vector<Rational>> rows() const {
        std::vector<std::vector<Rational>> out(static_cast<std::size_t>(size_));
        for (int i = 0; i < size_; ++i) out[static_cast<std::size_t>(i)].assign(row(i).begin(), row(i).end());
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
    }

    /// Largest i - k over nonzero entries, or nullopt for the zero matrix.
    std::optional<int> deepest_diagonal() const {
        std::optional<int> d;
        for (int i = 0; i < size_; ++i)
            for (int k = 0; k < size_; ++k)
                if (!(*this)(i, k).is_zero() && (!d || i - k > *d)) d = i - k;
        return d;
    }

    /// Smallest i - k over nonzero entries, or nullopt for the zero matrix.
    std::optional<int> observed_index() const {
        std::optional<int> d;
        for (int i = 0; i < size_; ++i)
            for (int k = 0; k < size_; ++k)
                if (!(*this)(i, k).is_zero() && (!d || i - k < *d)) d = i - k;
        return d;
    }

    /// Entry equality; metadata is not compared.
    friend bool operator==(const TruncMatrix& a, const TruncMatrix& b) {
        return a.size_ == b.size_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncMatrix& m) {
        for (int i = 0; i < m.size_; ++i) {
            os << (i ? "\n" : "") << '[';
            for (int k = 0; k < m.size_; ++k) os << (k ? ", " : "") << m(i, k);
            os << ']';
        }
        return os;
    }

private:
    friend TruncMatrix mat_mul(const TruncMatrix&, const TruncMatrix&);

    Rational& ref(int i, int k) {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(k)];
    }

    int size_ = 0;
    int index_ = 0;
    int window_ = 0;
    std::vector<Rational> data_;
};

/// True when the leading rows x cols blocks of a and b agree.
inline bool equal_on(const TruncMatrix& a, const TruncMatrix& b, int rows, int cols) {
    if (rows > a.size() || rows > b.size() || cols > a.size() || cols > b.size()) return false;
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
            if (a(i, k) != b(i, k)) return false;
    return true;
}

enum class OperatorKind { X, Xhat, D, Dhat, I, J0 };

inline OperatorKind operator_kind_from_string(std::string_view name) {
    if (name == "X") return OperatorKind::X;
    if (name == "Xhat") return OperatorKind::Xhat;
    if (name == "D") return OperatorKind::D;
    if (name == "Dhat") return OperatorKind::Dhat;
    if (name == "I") return OperatorKind::I;
    if (name == "J0") return OperatorKind::J0;
    throw InvalidArgument("unknown operator kind '" + std::string(name) + "'");
}

/// Truncations of the structural operators: the shift X, its transpose,
/// the derivative matrix D (D(k+1,k) = k+1), its transpose, the identity,
/// and J0 = Xhat X.
inline TruncMatrix make_operator(OperatorKind kind, int T) {
    if (T < 1) throw InvalidArgument("operator size must be positive");
    switch (kind) {
        case OperatorKind::X: {
            TruncMatrix m(T, -1, T - 1);
            for (int j = 0; j + 1 < T; ++j) m.set(j, j + 1, Rational(1));
            return m;
        }
        case OperatorKind::Xhat: {
            TruncMatrix m(T, 1);
            for (int j = 0; j + 1 < T; ++j) m.set(j + 1, j, Rational(1));
            return m;
        }
        case OperatorKind::D: {
            TruncMatrix m(T, 1);
            for (int k = 0; k + 1 < T; ++k) m.set(k + 1, k, Rational(k + 1));
            return m;
        }
        case OperatorKind::Dhat: {
            TruncMatrix m(T, -1, T - 1);
            for (int k = 0; k + 1 < T; ++k) m.set(k, k + 1, Rational(k + 1));
            return m;
        }
        case OperatorKind::I:
        case OperatorKind::J0: {
            TruncMatrix m(T, 0);
            for (int j = kind == OperatorKind::J0 ? 1 : 0; j < T; ++j) m.set(j, j, Rational(1));
            return m;
        }
    }
    throw InvalidArgument("unknown operator kind");
}

inline TruncMatrix identity(int T) { return make_operator(OperatorKind::I, T); }

inline TruncMatrix diagonal(std::span<const Rational> entries) {
    TruncMatrix m(static_cast<int>(entries.size()), 0);
    for (int j = 0; j < m.size(); ++j) m.set(j, j, entries[static_cast<std::size_t>(j)]);
    return m;
}

/// Product of truncations. Row i of the result is exact when row i of A is
/// exact and every row of B that row i of A touches is exact.
inline TruncMatrix mat_mul(const TruncMatrix& A, const TruncMatrix& B) {
    if (A.size() != B.size())
        throw InvalidArgument("mat_mul size mismatch: " + std::to_string(A.size()) + " vs " +
                              std::to_string(B.size()));
    const int T = A.size();
    TruncMatrix C(T, A.index() + B.index(), std::min(A.window(), B.window() + A.index()));
    for (int i = 0; i < T; ++i) {
        // a(i,j) vanishes for j > i - index(A)
        const int j_hi = std::min(T - 1, i - A.index());
        for (int j = 0; j <= j_hi; ++j) {
            const Rational& aij = A(i, j);
            if (aij.is_zero()) continue;
            const int k_hi = std::min(T - 1, j - B.index());
            for (int k = 0; k <= k_hi; ++k) {
                const Rational& bjk = B(j, k);
                if (!bjk.is_zero()) C.ref(i, k) += aij * bjk;
            }
        }
    }
    return C;
}

inline TruncMatrix operator*(const TruncMatrix& A, const TruncMatrix& B) { return mat_mul(A, B); }

inline TruncMatrix operator+(const TruncMatrix& A, const TruncMatrix& B) {
    if (A.size() != B.size()) throw InvalidArgument("matrix sum size mismatch");
    TruncMatrix C(A.size(), std::min(A.index(), B.index()), std::min(A.window(), B.window()));
    for (int i = 0; i < A.size(); ++i)
        for (int k = 0; k < A.size(); ++k) {
            Rational s = A(i, k) + B(i, k);
            if (!s.is_zero()) C.set(i, k, std::move(s));
        }
    return C;
}

inline TruncMatrix operator*(const Rational& s, const TruncMatrix& A) {
    TruncMatrix C(A.size(), A.index(), A.window());
    if (s.is_zero()) return C;
    for (int i = 0; i < A.size(); ++i)
        for (int k = 0; k < A.size(); ++k)
            if (!A(i, k).is_zero()) C.set(i, k, s * A(i, k));
    return C;
}

inline TruncMatrix operator-(const TruncMatrix& A, const TruncMatrix& B) { return A + Rational(-1) * B; }

/// Transpose. The declared index becomes minus the deepest nonzero diagonal
/// (minus the index for single-diagonal matrices such as X and D). The
/// window assumes the matrix is banded, with its deepest diagonal visible
/// in the truncation.
inline TruncMatrix transpose(const TruncMatrix& A) {
    const int deepest = A.deepest_diagonal().value_or(A.index());
    TruncMatrix C(A.size(), -deepest, A.window() - std::max(0, deepest));
    for (int i = 0; i < A.size(); ++i)
        for (int k = 0; k < A.size(); ++k)
            if (!A(k, i).is_zero()) C.set(i, k, A(k, i));
    return C;
}

/// Inverse of an invertible lower triangular matrix by forward
/// substitution, column by column. Exact on the whole truncation.
inline TruncMatrix lower_tri_inverse(const TruncMatrix& A) {
    if (A.index() < 0) throw InvalidArgument("lower_tri_inverse needs index >= 0");
    const int T = A.size();
    for (int j = 0; j < T; ++j)
        if (A(j, j).is_zero()) throw NotInvertible(j);
    TruncMatrix B(T, 0);
    for (int c = 0; c < T; ++c) {
        B.set(c, c, Rational(1) / A(c, c));
        for (int i = c + 1; i < T; ++i) {
            Rational acc(0);
            for (int j = c; j < i; ++j)
                if (!A(i, j).is_zero() && !B(j, c).is_zero()) acc += A(i, j) * B(j, c);
            if (!acc.is_zero()) B.set(i, c, -acc / A(i, i));
        }
    }
    return B;
}

/// w(M) by Horner's scheme.
inline TruncMatrix poly_of_matrix(const Polynomial& w, const TruncMatrix& M) {
    const int T = M.size();
    if (w.is_zero()) return TruncMatrix(T, 0);
    TruncMatrix I = identity(T);
    TruncMatrix R = w[w.degree()] * I;
    for (int j = w.degree() - 1; j >= 0; --j) R = R * M + w[j] * I;
    return R;
}

inline TruncMatrix matrix_power(const TruncMatrix& M, int e) {
    TruncMatrix R = identity(M.size());
    for (int i = 0; i < e; ++i) R = R * M;
    return R;
}

}  // namespace polyseq
