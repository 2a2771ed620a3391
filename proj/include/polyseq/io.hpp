#pragma once

// Canonical JSON for matrices, specs, polynomials, tensors and connection
// matrices. Keys are sorted (nlohmann::json objects are ordered maps) and
// rationals are lowest-terms strings, so parse + dump is byte-stable.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyseq/error.hpp"
#include "polyseq/hspec.hpp"
#include "polyseq/matrix.hpp"
#include "polyseq/polynomial.hpp"
#include "polyseq/sequences.hpp"
#include "polyseq/tensor.hpp"

namespace polyseq::io {

using json = nlohmann::json;

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

inline void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << dump(j);
}

// Rationals: strings "p" or "p/q"; integral JSON numbers are accepted on
// input, floating point never.
inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string, got " + j.dump());
}

inline json to_json(const Rational& r) { return r.str(); }

inline std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

inline json to_json(std::span<const Rational> v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

inline json rows_json(const TruncMatrix& M) {
    json rows = json::array();
    for (int i = 0; i < M.size(); ++i) rows.push_back(to_json(M.row(i)));
    return rows;
}

inline std::vector<std::vector<Rational>> rows_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j) rows.push_back(rationals_from_json(r));
    return rows;
}

inline TruncMatrix square_from_json(const json& j, int index) {
    auto rows = rows_from_json(j);
    if (rows.empty()) throw ParseError("matrix has no rows");
    try {
        return TruncMatrix::from_rows(rows, index);
    } catch (const Error& e) {
        throw ParseError(std::string("bad matrix: ") + e.what());
    }
}

}  // namespace detail

// Matrix: {"index": m, "rows": [[...]], "size": T}
inline json to_json(const TruncMatrix& M) {
    return json{{"size", M.size()}, {"index", M.index()}, {"rows", detail::rows_json(M)}};
}

inline TruncMatrix matrix_from_json(const json& j) {
    const int size = detail::int_field(j, "size");
    TruncMatrix M = detail::square_from_json(detail::field(j, "rows"), detail::int_field(j, "index"));
    if (M.size() != size) throw ParseError("matrix size field does not match its rows");
    return M;
}

// Polynomial: {"coeffs": [...]}
inline json to_json(const Polynomial& p) { return json{{"coeffs", to_json(p.coeffs())}}; }

inline Polynomial polynomial_from_json(const json& j) {
    return Polynomial(rationals_from_json(detail::field(j, "coeffs")));
}

// HSpec variants, tagged by "type".
inline json to_json(const HSpec& spec) {
    if (const auto* t = std::get_if<TridiagonalSpec>(&spec))
        return json{{"type", "tridiagonal"}, {"beta", to_json(t->beta)}, {"alpha", to_json(t->alpha)}};
    if (const auto* r = std::get_if<RowsSpec>(&spec)) {
        json rows = json::array();
        for (const auto& row : r->rows) rows.push_back(to_json(row));
        return json{{"type", "rows"}, {"rows", rows}};
    }
    const auto& f = std::get<FamilyParams>(spec);
    json j{{"type", std::string(family_name(f.family))}, {"a", to_json(f.a)}};
    if (f.family != Family::charlier) j["b"] = to_json(f.b);
    return j;
}

inline HSpec hspec_from_json(const json& j) {
    const json& type = detail::field(j, "type");
    if (!type.is_string()) throw ParseError("HSpec type must be a string");
    const std::string t = type.get<std::string>();
    if (t == "tridiagonal")
        return TridiagonalSpec{rationals_from_json(detail::field(j, "beta")),
                               rationals_from_json(detail::field(j, "alpha"))};
    if (t == "rows") return RowsSpec{detail::rows_from_json(detail::field(j, "rows"))};
    if (t == "chebyshev" || t == "hermite" || t == "charlier") {
        FamilyParams p;
        p.family = family_from_string(t);
        p.a = rational_from_json(detail::field(j, "a"));
        p.b = (t != "charlier" && j.contains("b")) ? rational_from_json(j.at("b")) : Rational(0);
        return p;
    }
    throw ParseError("unknown HSpec type '" + t + "'");
}

// Tensor: {"n_max": N, "slices": [{"k": k, "matrix": [[...]]}]}
inline json to_json(const LinTensor& t) {
    json slices = json::array();
    for (int k = 0; k <= t.k_max(); ++k)
        slices.push_back(json{{"k", k}, {"matrix", detail::rows_json(t.slices[static_cast<std::size_t>(k)])}});
    return json{{"n_max", t.n_max}, {"slices", slices}};
}

inline LinTensor tensor_from_json(const json& j) {
    LinTensor t{detail::int_field(j, "n_max"), {}};
    const json& slices = detail::field(j, "slices");
    if (!slices.is_array()) throw ParseError("slices must be an array");
    for (std::size_t k = 0; k < slices.size(); ++k) {
        if (detail::int_field(slices[k], "k") != static_cast<int>(k)) throw ParseError("slices out of order");
        TruncMatrix M = detail::square_from_json(detail::field(slices[k], "matrix"), -t.n_max);
        if (M.size() != t.n_max + 1) throw ParseError("slice has wrong dimension");
        t.slices.push_back(std::move(M));
    }
    return t;
}

// Connection matrix: {"m_max": M, "matrix": [[...]]}
inline json connection_to_json(const TruncMatrix& C) {
    return json{{"m_max", C.size() - 1}, {"matrix", detail::rows_json(C)}};
}

inline TruncMatrix connection_from_json(const json& j) {
    const int m_max = detail::int_field(j, "m_max");
    TruncMatrix C = detail::square_from_json(detail::field(j, "matrix"), 0);
    if (C.size() != m_max + 1) throw ParseError("connection matrix has wrong dimension");
    return C;
}

// Orthogonality table: {"matrix": [[...]], "n_max": N}
inline json table_to_json(const TruncMatrix& G) {
    return json{{"n_max", G.size() - 1}, {"matrix", detail::rows_json(G)}};
}

inline json to_json(const SequencePair& pair, int n_max) {
    json polys = json::array();
    for (int k = 0; k <= n_max; ++k) polys.push_back(to_json(pair.polys[static_cast<std::size_t>(k)]));
    std::vector<Rational> moments;
    for (int k = 0; k < pair.size(); ++k) moments.push_back(pair.A(k, 0));
    return json{{"size", pair.size()}, {"H", to_json(pair.H)}, {"A", to_json(pair.A)},
                {"P", to_json(pair.P)},   {"moments", to_json(moments)}, {"polys", polys}};
}

}  // namespace polyseq::io
