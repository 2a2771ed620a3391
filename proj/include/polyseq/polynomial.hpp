#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "polyseq/rational.hpp"

namespace polyseq {

/// Dense polynomial in the monomial basis; coeffs()[j] multiplies t^j.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients
/// and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    static Polynomial monomial(int k, const Rational& c = Rational(1)) {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    std::span<const Rational> coeffs() const { return c_; }

    /// Coefficient of t^j; zero beyond the degree.
    Rational operator[](int j) const {
        return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(j)]
                                                           : Rational(0);
    }

    Rational evaluate(const Rational& t) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }

    /// Multiplication by t.
    Polynomial shifted() const {
        if (c_.empty()) return {};
        std::vector<Rational> v(c_.size() + 1);
        std::copy(c_.begin(), c_.end(), v.begin() + 1);
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        os << '[';
        for (std::size_t j = 0; j < p.c_.size(); ++j) os << (j ? ", " : "") << p.c_[j];
        return os << ']';
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace polyseq
