#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: decompose, units, verify, galois. Exit codes: 0 success,
 * 1 check failure, 2 usage error.
 */

#include <zng/group_library.hpp>
#include <zng/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace zng::cli {

enum exit_code : int { ok = 0, check_failed = 1, usage = 2 };

struct JobSpec {
    std::string command;
    std::string group = "c5";
    std::string group_file;
    std::string perm_file;
    std::int64_t n = 0;
    std::int64_t p = 0;
    int r = 1;
    int m = 1;
    std::string format = "text";
    bool certify_closure = false;
    std::uint64_t seed = 0; ///< reserved; every algorithm is deterministic
};

class usage_error : public error {
public:
    using error::error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline GroupPtr resolve_group(const JobSpec& job) {
    try {
        if (!job.group_file.empty()) return group_from_cayley_text(read_file(job.group_file), job.group_file);
        if (!job.perm_file.empty()) {
            std::istringstream in(read_file(job.perm_file));
            std::vector<std::string> lines;
            for (std::string line; std::getline(in, line);)
                if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
            if (lines.empty()) throw usage_error("permutation file " + job.perm_file + " has no generators");
            return permutation_group_from_text(lines, job.perm_file);
        }
        return group_by_name(job.group);
    } catch (const invalid_group& e) {
        throw usage_error(std::string("invalid group: ") + e.what());
    }
}

/// p^r from --p/--r, validated against |G|.
inline PrimePower resolve_prime_power(const JobSpec& job, const FiniteGroup& G) {
    if (job.p == 0) throw usage_error("--p is required");
    if (!is_prime(job.p)) throw usage_error("--p must be prime, got " + std::to_string(job.p));
    if (job.r < 1) throw usage_error("--r must be at least 1");
    if (!ipow_fits(job.p, job.r) || ipow(job.p, job.r) > (std::int64_t{1} << 31)) throw usage_error("p^r is too large");
    if (G.order() % job.p == 0)
        throw usage_error("gcd(p, |G|) != 1: p = " + std::to_string(job.p) + " divides |G| = " + std::to_string(G.order()));
    return PrimePower(job.p, job.r);
}

template <class Report>
void emit(const JobSpec& job, const Report& report, std::ostream& out) {
    if (job.format == "json")
        out << emit_json(report) << "\n";
    else
        out << render_text(report);
}

inline int run_decompose(const JobSpec& job, std::ostream& out) {
    auto G = resolve_group(job);
    std::int64_t n = job.n;
    if (n == 0) {
        if (job.p == 0) throw usage_error("decompose needs --n or --p/--r");
        n = resolve_prime_power(job, *G).modulus;
    }
    if (n < 2) throw usage_error("--n must be at least 2");
    for (auto [q, e] : factorize(n))
        if (G->order() % q == 0)
            throw usage_error("gcd(n, |G|) != 1: prime " + std::to_string(q) + " divides both n = " + std::to_string(n) +
                              " and |G| = " + std::to_string(G->order()));
    const auto report = decomposition_report(decompose_modulus(G, n));
    emit(job, report, out);
    for (const auto& pr : report.primes)
        if (!pr.dimension_check) return check_failed;
    return ok;
}

inline bool is_c5(const FiniteGroup& G) { return G.order() == 5; }

inline int run_units(const JobSpec& job, std::ostream& out) {
    auto G = resolve_group(job);
    const auto pp = resolve_prime_power(job, *G);
    UnitsReport report;
    report.group = G->label();
    report.p = pp.p;
    report.r = pp.r;
    ZGRing R(G, Zmod(pp));
    std::vector<UnitGenerator> gens;
    if (is_c5(*G) && pp.p == 2 && pp.r >= 2) {
        auto fx = z2r_c5_fixture(pp.r);
        R = fx.ring;
        gens = fx.generators;
        report.note = fx.note;
    } else {
        auto comps = decompose(R, strong_shoda_pairs(G));
        for (auto& g : unit_group_generators(R, comps))
            if (!(g.element == R.one())) gens.push_back(std::move(g));
    }
    for (const auto& g : gens) report.generators.push_back(generator_report(g));
    int code = ok;
    if (job.certify_closure) {
        try {
            const auto cert = certify_unit_generators(R, gens);
            report.certification = CertificationReport{cert.method, cert.expected, cert.generated, cert.equal};
            if (!cert.equal) code = check_failed;
        } catch (const precondition_error&) {
            report.certification = CertificationReport{"not certified (above the enumeration cap)", 0, 0, false};
        }
    }
    emit(job, report, out);
    return code;
}

inline int run_galois(const JobSpec& job, std::ostream& out) {
    if (job.p == 0 || !is_prime(job.p)) throw usage_error("galois needs a prime --p");
    if (job.r < 1 || job.m < 1) throw usage_error("--r and --m must be at least 1");
    if (!ipow_fits(job.p, static_cast<std::int64_t>(job.r) * job.m) || ipow(job.p, static_cast<std::int64_t>(job.r) * job.m) > (std::int64_t{1} << 20))
        throw usage_error("GR(p^r, m) has more than 2^20 elements");
    GaloisRing S(PrimePower(job.p, job.r), job.m);
    const auto report = galois_report(S);
    emit(job, report, out);
    return report.closure_size == report.unit_count ? ok : check_failed;
}

/// Decomposition checks over the built-in corpus (or one group) at the standard prime powers.
inline VerifyReport verify_suite(const JobSpec& job, bool whole_corpus) {
    std::vector<std::pair<std::string, GroupPtr>> groups;
    if (whole_corpus) {
        for (const auto& e : group_corpus()) groups.emplace_back(e.key, e.build());
    } else {
        auto G = resolve_group(job);
        groups.emplace_back(G->label(), G);
    }
    std::vector<PrimePower> pps;
    if (job.p != 0)
        pps.push_back(PrimePower(job.p, job.r));
    else
        pps = {PrimePower(2, 2), PrimePower(2, 3), PrimePower(3, 2), PrimePower(5, 1), PrimePower(7, 1)};
    VerifyReport report;
    for (const auto& [name, G] : groups) {
        std::optional<std::vector<ShodaPair>> pairs;
        try {
            pairs = strong_shoda_pairs(G);
        } catch (const not_strongly_monomial&) {
        }
        for (const auto& pp : pps) {
            if (G->order() % pp.p == 0) continue;
            if (!pairs) {
                // not strongly monomial: dimension identity through the F_p Wedderburn blocks
                const auto dim = shape_dimension(wedderburn_shapes(G, pp.p));
                report.checks.push_back({name, "dimension", pp.p, pp.r, dim == G->order(),
                                         "F_p Wedderburn route: " + std::to_string(dim) + " vs |G| = " + std::to_string(G->order())});
                continue;
            }
            ZGRing R(G, Zmod(pp));
            Decomposition dec{G, pp.modulus, {{R, decompose(R, *pairs)}}};
            for (auto& c : verify_report(verify_decomposition(dec), name).checks) report.checks.push_back(std::move(c));
        }
    }
    return report;
}

inline int run_verify(const JobSpec& job, bool whole_corpus, std::ostream& out) {
    const auto report = verify_suite(job, whole_corpus);
    emit(job, report, out);
    return report.passed() ? ok : check_failed;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Decompose Z_n G into matrix rings over Galois rings and synthesize unit generators"};
    app.require_subcommand(1);
    JobSpec job;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", job.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", job.seed, "reserved; all algorithms are deterministic");
    };
    auto add_group = [&](CLI::App* sub) {
        auto* g = sub->add_option("--group", job.group, "built-in group name (c5, c5xc5, s4, d8, es27, ...)");
        auto* gf = sub->add_option("--group-file", job.group_file, "Cayley table file: n, then n rows of n indices");
        auto* pf = sub->add_option("--perm-file", job.perm_file, "permutation generators, one per line in cycle notation");
        g->excludes(gf)->excludes(pf);
        gf->excludes(pf);
    };
    auto* dec = app.add_subcommand("decompose", "Wedderburn decomposition of Z_n G");
    add_group(dec);
    dec->add_option("--n", job.n, "modulus n with gcd(n, |G|) = 1");
    dec->add_option("--p", job.p, "prime p (with --r, alternative to --n)");
    dec->add_option("--r", job.r, "exponent r");
    add_common(dec);

    auto* units = app.add_subcommand("units", "generators of U(Z_{p^r} G)");
    add_group(units);
    units->add_option("--p", job.p, "prime p")->required();
    units->add_option("--r", job.r, "exponent r");
    units->add_flag("--certify-closure", job.certify_closure, "compare the generated group with an exhaustive count");
    add_common(units);

    auto* ver = app.add_subcommand("verify", "run the invariant suite (built-in corpus unless a group is given)");
    add_group(ver);
    ver->add_option("--p", job.p, "restrict to one prime");
    ver->add_option("--r", job.r, "exponent with --p");
    add_common(ver);

    auto* gal = app.add_subcommand("galois", "Galois ring data and unit generators");
    gal->add_option("--p", job.p, "prime p")->required();
    gal->add_option("--r", job.r, "exponent r");
    gal->add_option("--m", job.m, "degree m");
    add_common(gal);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return usage;
    }
    try {
        if (*dec) return run_decompose(job, out);
        if (*units) return run_units(job, out);
        if (*ver) {
            const bool whole = ver->count("--group") == 0 && job.group_file.empty() && job.perm_file.empty();
            return run_verify(job, whole, out);
        }
        if (*gal) return run_galois(job, out);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const coprimality_error& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const precondition_error& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return check_failed;
    }
    return usage;
}

} // namespace zng::cli
