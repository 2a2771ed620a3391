#pragma once

// Command implementations for the polyseq tool.
//
// Exit codes:
//   0  success
//   2  usage, file or parse error
//   3  window, structure or arithmetic error
//   4  cross-method mismatch or failed verification

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyseq/polyseq.hpp"

namespace polyseq::cli {

enum class Command { build, linearize, connect, family, verify };
enum class Method { direct, recurrence, oracle, all };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMath = 3;
inline constexpr int kExitMismatch = 4;

struct RunConfig {
    Command command = Command::linearize;
    std::string h_spec_path;
    std::string u_spec_path;
    int n_max = 4;
    int m_max = 6;
    int n = 3;
    int k = 3;
    Method method = Method::direct;
    Format format = Format::json;
    std::string out_path;
    std::string mixed_out_path = "mixed.json";
    std::optional<int> size;
    bool validate_tridiagonal = false;
    bool mixed = false;
    bool verify = false;
    bool verbose = false;
};

inline int max_truncation() {
    if (const char* env = std::getenv("POLYSEQ_MAX_T")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(std::string("POLYSEQ_MAX_T is not a positive integer: ") + env);
    }
    return 512;
}

/// Truncation size for a run: the required bound unless --size overrides
/// it, and never above POLYSEQ_MAX_T.
inline int resolve_size(const RunConfig& cfg, int required) {
    const int T = cfg.size.value_or(required);
    if (T < required) throw WindowExceeded("--size", required, T);
    const int cap = max_truncation();
    if (T > cap)
        throw WindowExceeded("POLYSEQ_MAX_T cap of " + std::to_string(cap) + " exceeded", T, cap);
    return T;
}

inline HSpec load_spec(const std::string& path) {
    try {
        return io::hspec_from_json(io::load_file(path));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace detail {

inline void progress(const RunConfig& cfg, const std::string& msg) {
    if (cfg.verbose) std::cout << msg << std::endl;
}

inline std::string where(const Index3& i) {
    return "(" + std::to_string(i[0]) + "," + std::to_string(i[1]) + "," + std::to_string(i[2]) + ")";
}

inline void write_csv_slices(const LinTensor& t, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (int k = 0; k <= t.k_max(); ++k) {
        const auto path = std::filesystem::path(dir) / ("slice_k" + std::to_string(k) + ".csv");
        std::ofstream out(path);
        if (!out) throw ParseError("cannot write '" + path.string() + "'");
        out << "n,m,value\n";
        for (int n = 0; n <= t.n_max; ++n)
            for (int m = 0; m <= t.n_max; ++m) out << n << ',' << m << ',' << t(n, m, k) << '\n';
    }
}

}  // namespace detail

inline int run_build(const RunConfig& cfg) {
    const HSpec spec = load_spec(cfg.h_spec_path);
    const int T = resolve_size(cfg, cfg.n_max + 2);
    const SequencePair pair = build_sequence(spec, T);
    io::save_file(cfg.out_path.empty() ? "sequence.json" : cfg.out_path, io::to_json(pair, cfg.n_max));
    detail::progress(cfg, "built sequence at T=" + std::to_string(T));
    return kExitOk;
}

inline int run_linearize(const RunConfig& cfg) {
    if (cfg.n_max < 0) throw InvalidArgument("--n-max must be non-negative");
    const HSpec spec = load_spec(cfg.h_spec_path);
    const int T = resolve_size(cfg, 2 * cfg.n_max + 2);
    const TruncMatrix H = realize_H(spec, T);
    if (cfg.validate_tridiagonal) {
        if (!is_tridiagonal(H)) throw StructureError("H is not tridiagonal");
        three_term_of(H).validate(T);
    }
    const SequencePair pair = build_P_recurrence(H);

    LinTensor result;
    switch (cfg.method) {
        case Method::direct: result = lin_tensor_direct(pair, cfg.n_max); break;
        case Method::recurrence: result = lin_tensor_recurrence_all(H, cfg.n_max); break;
        case Method::oracle: result = lin_tensor_oracle(pair, cfg.n_max); break;
        case Method::all: {
            result = lin_tensor_direct(pair, cfg.n_max);
            const LinTensor rec = lin_tensor_recurrence_all(H, cfg.n_max);
            const LinTensor orc = lin_tensor_oracle(pair, cfg.n_max);
            if (auto d = first_difference(result, rec)) {
                std::cerr << "mismatch: direct vs recurrence at " << detail::where(*d) << '\n';
                return kExitMismatch;
            }
            if (auto d = first_difference(result, orc)) {
                std::cerr << "mismatch: direct vs oracle at " << detail::where(*d) << '\n';
                return kExitMismatch;
            }
            detail::progress(cfg, "direct, recurrence and oracle agree");
            break;
        }
    }
    if (cfg.format == Format::csv)
        detail::write_csv_slices(result, cfg.out_path.empty() ? "tensor_csv" : cfg.out_path);
    else
        io::save_file(cfg.out_path.empty() ? "tensor.json" : cfg.out_path, io::to_json(result));
    return kExitOk;
}

inline int run_connect(const RunConfig& cfg) {
    if (cfg.m_max < 0) throw InvalidArgument("--m-max must be non-negative");
    const HSpec p_spec = load_spec(cfg.h_spec_path);
    const HSpec u_spec = load_spec(cfg.u_spec_path);
    int required = cfg.m_max + 2;
    if (cfg.mixed) required = std::max(required, 2 * cfg.n_max + 2);
    const int T = resolve_size(cfg, required);
    const SequencePair pairP = build_sequence(p_spec, T);
    const SequencePair pairU = build_sequence(u_spec, T);

    io::save_file(cfg.out_path.empty() ? "connection.json" : cfg.out_path,
                  io::connection_to_json(connection_matrix(pairP, pairU, cfg.m_max)));
    if (cfg.mixed) io::save_file(cfg.mixed_out_path, io::to_json(mixed_tensor(pairP, pairU, cfg.n_max)));
    if (cfg.verify) {
        const InverseCheck check = verify_inverse_connection(pairP, pairU, cfg.m_max);
        if (!check.ok) {
            std::cerr << "inverse connection check failed at (" << check.violation->first << ","
                      << check.violation->second << ")\n";
            return kExitMismatch;
        }
        detail::progress(cfg, "inverse connection relation holds");
    }
    return kExitOk;
}

inline int run_family(const RunConfig& cfg) {
    const HSpec spec = load_spec(cfg.h_spec_path);
    const auto* fp = std::get_if<FamilyParams>(&spec);
    if (!fp) throw ParseError("family command needs a chebyshev, hermite or charlier spec");
    const int T = resolve_size(cfg, std::max(cfg.n, cfg.n_max) + 2);

    io::json out{{"spec", io::to_json(spec)},
                 {"n", cfg.n},
                 {"pnH", io::to_json(family_pnH_closed(*fp, cfg.n, T))},
                 {"Ak", io::json{{"k", cfg.k},
                                 {"matrix", io::detail::rows_json(family_Ak_closed(*fp, cfg.k, cfg.n_max))}}}};
    if (fp->family == Family::chebyshev) out["series_P"] = io::to_json(cheby_series_P(*fp, T));
    if (fp->family == Family::hermite) {
        out["series_P"] = io::to_json(hermite_exp_P(*fp, T, false));
        out["series_P_inverse"] = io::to_json(hermite_exp_P(*fp, T, true));
    }
    io::save_file(cfg.out_path.empty() ? "family.json" : cfg.out_path, out);
    return kExitOk;
}

inline int run_verify(const RunConfig& cfg) {
    const HSpec spec = load_spec(cfg.h_spec_path);
    const int T = resolve_size(cfg, 2 * cfg.n_max + 2);
    bool all_ok = true;
    for (const auto& c : run_property_suite(spec, cfg.n_max, T)) {
        all_ok = all_ok && c.passed;
        std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << (c.passed ? "" : ": " + c.detail) << '\n';
    }
    return all_ok ? kExitOk : kExitMismatch;
}

/// Runs one configured command, mapping library errors to exit codes.
inline int run(const RunConfig& cfg) {
    try {
        switch (cfg.command) {
            case Command::build: return run_build(cfg);
            case Command::linearize: return run_linearize(cfg);
            case Command::connect: return run_connect(cfg);
            case Command::family: return run_family(cfg);
            case Command::verify: return run_verify(cfg);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMath;
    }
    return kExitInput;
}

/// Parses argv and runs the selected subcommand.
inline int main_entry(int argc, char** argv) {
    CLI::App app{"Polynomial sequences from Hessenberg matrices: linearization and connection coefficients"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::map<std::string, Method> methods{{"direct", Method::direct},
                                                {"recurrence", Method::recurrence},
                                                {"oracle", Method::oracle},
                                                {"all", Method::all}};
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--h-spec", cfg.h_spec_path, "HSpec JSON file")->required();
        sub->add_option("--out", cfg.out_path, "output path");
        sub->add_option("--size", cfg.size, "truncation size (must not be below the required bound)");
        sub->add_flag("--verbose", cfg.verbose, "print progress to stdout");
    };

    auto* build = app.add_subcommand("build", "emit H, A, P, moments and p_0..p_N");
    common(build);
    build->add_option("--n-max", cfg.n_max, "highest polynomial degree")->capture_default_str();

    auto* lin = app.add_subcommand("linearize", "emit the linearization tensor d(n,m,k)");
    common(lin);
    lin->add_option("--n-max", cfg.n_max, "largest n and m")->capture_default_str();
    lin->add_option("--method", cfg.method, "direct | recurrence | oracle | all")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    lin->add_option("--format", cfg.format, "json | csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    lin->add_flag("--validate-tridiagonal", cfg.validate_tridiagonal, "require tridiagonal H with nonzero alphas");

    auto* con = app.add_subcommand("connect", "emit connection coefficients from the p-basis to the u-basis");
    common(con);
    con->add_option("--u-spec", cfg.u_spec_path, "HSpec JSON file of the target basis")->required();
    con->add_option("--m-max", cfg.m_max, "largest degree")->capture_default_str();
    con->add_option("--n-max", cfg.n_max, "largest n and m for the mixed tensor")->capture_default_str();
    con->add_flag("--mixed", cfg.mixed, "also write the mixed tensor e(n,m,k)");
    con->add_option("--mixed-out", cfg.mixed_out_path, "mixed tensor output path")->capture_default_str();
    con->add_flag("--verify", cfg.verify, "check that the two connection matrices are mutually inverse");

    auto* fam = app.add_subcommand("family", "emit closed-form p_n(H), slice k and series P for a family spec");
    common(fam);
    fam->add_option("--n", cfg.n, "degree n of p_n(H)")->capture_default_str();
    fam->add_option("--k", cfg.k, "slice index k")->capture_default_str();
    fam->add_option("--n-max", cfg.n_max, "slice dimension - 1")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run the identity suite on a spec");
    common(ver);
    ver->add_option("--n-max", cfg.n_max, "largest n and m")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    if (build->parsed()) cfg.command = Command::build;
    if (lin->parsed()) cfg.command = Command::linearize;
    if (con->parsed()) cfg.command = Command::connect;
    if (fam->parsed()) cfg.command = Command::family;
    if (ver->parsed()) cfg.command = Command::verify;
    return run(cfg);
}

}  // namespace polyseq::cli
