#pragma once

/**
 * @file json_io.hpp
 * @brief Report objects for decompositions, unit generators and Galois rings, with JSON and text
 * renderings. Keys keep schema order so equal inputs give byte-identical output.
 */

#include <zng/decomp.hpp>
#include <zng/unit_synth.hpp>

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace zng {

using ojson = nlohmann::ordered_json;

struct RingReport {
    std::int64_t p = 0;
    int r = 0;
    int m = 0;
    std::vector<std::int64_t> modulus; ///< ascending coefficients, monic
    bool operator==(const RingReport&) const = default;
};

struct ComponentReport {
    int matrix_size = 0;
    RingReport ring;
    int multiplicity = 0;
    bool operator==(const ComponentReport&) const = default;
};

struct PrimeReport {
    std::int64_t p = 0;
    int r = 0;
    std::vector<ComponentReport> components;
    bool dimension_check = false;
    bool operator==(const PrimeReport&) const = default;
};

struct DecompositionReport {
    std::string group;
    std::int64_t n = 0;
    std::vector<PrimeReport> primes;
    bool operator==(const DecompositionReport&) const = default;
};

struct GeneratorReport {
    int component = -1;
    std::string kind;
    std::optional<std::int64_t> order;
    std::string element;
    bool operator==(const GeneratorReport&) const = default;
};

struct CertificationReport {
    std::string method;
    std::int64_t expected = 0;
    std::int64_t generated = 0;
    bool equal = false;
    bool operator==(const CertificationReport&) const = default;
};

struct UnitsReport {
    std::string group;
    std::int64_t p = 0;
    int r = 0;
    std::vector<GeneratorReport> generators;
    std::optional<CertificationReport> certification;
    std::string note;
    bool operator==(const UnitsReport&) const = default;
};

struct GaloisReport {
    RingReport ring;
    std::int64_t unit_count = 0;
    std::vector<std::string> generators;
    std::vector<std::int64_t> orders;
    std::int64_t closure_size = 0;
    bool operator==(const GaloisReport&) const = default;
};

struct CheckReport {
    std::string group;
    std::string name;
    std::int64_t p = 0;
    int r = 0;
    bool passed = false;
    std::string detail;
    bool operator==(const CheckReport&) const = default;
};

struct VerifyReport {
    std::vector<CheckReport> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    bool operator==(const VerifyReport&) const = default;
};

// --- json conversions ---------------------------------------------------------

inline void to_json(ojson& j, const RingReport& v) { j = ojson{{"p", v.p}, {"r", v.r}, {"m", v.m}, {"modulus", v.modulus}}; }
inline void from_json(const ojson& j, RingReport& v) {
    j.at("p").get_to(v.p);
    j.at("r").get_to(v.r);
    j.at("m").get_to(v.m);
    j.at("modulus").get_to(v.modulus);
}

inline void to_json(ojson& j, const ComponentReport& v) {
    j = ojson{{"matrix_size", v.matrix_size}, {"ring", v.ring}, {"multiplicity", v.multiplicity}};
}
inline void from_json(const ojson& j, ComponentReport& v) {
    j.at("matrix_size").get_to(v.matrix_size);
    j.at("ring").get_to(v.ring);
    j.at("multiplicity").get_to(v.multiplicity);
}

inline void to_json(ojson& j, const PrimeReport& v) {
    j = ojson{{"p", v.p}, {"r", v.r}, {"components", v.components}, {"dimension_check", v.dimension_check}};
}
inline void from_json(const ojson& j, PrimeReport& v) {
    j.at("p").get_to(v.p);
    j.at("r").get_to(v.r);
    j.at("components").get_to(v.components);
    j.at("dimension_check").get_to(v.dimension_check);
}

inline void to_json(ojson& j, const DecompositionReport& v) { j = ojson{{"group", v.group}, {"n", v.n}, {"primes", v.primes}}; }
inline void from_json(const ojson& j, DecompositionReport& v) {
    j.at("group").get_to(v.group);
    j.at("n").get_to(v.n);
    j.at("primes").get_to(v.primes);
}

inline void to_json(ojson& j, const GeneratorReport& v) {
    j = ojson{{"component", v.component}, {"kind", v.kind}, {"order", nullptr}, {"element", v.element}};
    if (v.order) j["order"] = *v.order;
}
inline void from_json(const ojson& j, GeneratorReport& v) {
    j.at("component").get_to(v.component);
    j.at("kind").get_to(v.kind);
    if (j.at("order").is_null())
        v.order.reset();
    else
        v.order = j.at("order").get<std::int64_t>();
    j.at("element").get_to(v.element);
}

inline void to_json(ojson& j, const CertificationReport& v) {
    j = ojson{{"method", v.method}, {"expected", v.expected}, {"generated", v.generated}, {"equal", v.equal}};
}
inline void from_json(const ojson& j, CertificationReport& v) {
    j.at("method").get_to(v.method);
    j.at("expected").get_to(v.expected);
    j.at("generated").get_to(v.generated);
    j.at("equal").get_to(v.equal);
}

inline void to_json(ojson& j, const UnitsReport& v) {
    j = ojson{{"group", v.group}, {"p", v.p}, {"r", v.r}, {"generators", v.generators}, {"certification", nullptr}, {"note", v.note}};
    if (v.certification) j["certification"] = *v.certification;
}
inline void from_json(const ojson& j, UnitsReport& v) {
    j.at("group").get_to(v.group);
    j.at("p").get_to(v.p);
    j.at("r").get_to(v.r);
    j.at("generators").get_to(v.generators);
    if (j.at("certification").is_null())
        v.certification.reset();
    else
        v.certification = j.at("certification").get<CertificationReport>();
    j.at("note").get_to(v.note);
}

inline void to_json(ojson& j, const GaloisReport& v) {
    j = ojson{{"ring", v.ring}, {"unit_count", v.unit_count}, {"generators", v.generators}, {"orders", v.orders}, {"closure_size", v.closure_size}};
}
inline void from_json(const ojson& j, GaloisReport& v) {
    j.at("ring").get_to(v.ring);
    j.at("unit_count").get_to(v.unit_count);
    j.at("generators").get_to(v.generators);
    j.at("orders").get_to(v.orders);
    j.at("closure_size").get_to(v.closure_size);
}

inline void to_json(ojson& j, const CheckReport& v) {
    j = ojson{{"group", v.group}, {"name", v.name}, {"p", v.p}, {"r", v.r}, {"passed", v.passed}, {"detail", v.detail}};
}
inline void from_json(const ojson& j, CheckReport& v) {
    j.at("group").get_to(v.group);
    j.at("name").get_to(v.name);
    j.at("p").get_to(v.p);
    j.at("r").get_to(v.r);
    j.at("passed").get_to(v.passed);
    j.at("detail").get_to(v.detail);
}

inline void to_json(ojson& j, const VerifyReport& v) { j = ojson{{"passed", v.passed()}, {"checks", v.checks}}; }
inline void from_json(const ojson& j, VerifyReport& v) { j.at("checks").get_to(v.checks); }

template <class T>
std::string emit_json(const T& v) {
    return ojson(v).dump(2);
}

template <class T>
T parse_json(const std::string& text) {
    return ojson::parse(text).get<T>();
}

// --- builders -----------------------------------------------------------------

inline RingReport ring_report(const GaloisRing& S) {
    return {S.p(), S.r(), S.degree(), S.modulus_poly().coeffs()};
}

inline DecompositionReport decomposition_report(const Decomposition& dec) {
    DecompositionReport out;
    out.group = dec.group->label();
    out.n = dec.n;
    for (const auto& pd : dec.primes) {
        PrimeReport pr;
        pr.p = pd.prime_power().p;
        pr.r = pd.prime_power().r;
        int dim = 0;
        for (const auto& c : pd.components) {
            dim += c.matrix_size * c.matrix_size * c.degree;
            ComponentReport cr{c.matrix_size, ring_report(c.ring), 1};
            bool merged = false;
            for (auto& e : pr.components)
                if (e.matrix_size == cr.matrix_size && e.ring == cr.ring) {
                    ++e.multiplicity;
                    merged = true;
                }
            if (!merged) pr.components.push_back(cr);
        }
        std::sort(pr.components.begin(), pr.components.end(), [](const ComponentReport& a, const ComponentReport& b) {
            return std::tie(a.matrix_size, a.ring.m, a.multiplicity) < std::tie(b.matrix_size, b.ring.m, b.multiplicity);
        });
        pr.dimension_check = dim == dec.group->order();
        out.primes.push_back(std::move(pr));
    }
    return out;
}

inline GeneratorReport generator_report(const UnitGenerator& g) {
    return {g.component, to_string(g.kind), g.declared_order, g.element.ring().render(g.element)};
}

inline GaloisReport galois_report(const GaloisRing& S) {
    GaloisReport out;
    out.ring = ring_report(S);
    out.unit_count = S.unit_count();
    const auto gens = S.unit_group_generators();
    for (const auto& g : gens) {
        out.generators.push_back(g.to_string());
        out.orders.push_back(S.element_order(g));
    }
    out.closure_size = galois_ring_closure(S, gens).size;
    return out;
}

inline VerifyReport verify_report(const VerificationReport& v, const std::string& group) {
    VerifyReport out;
    for (const auto& c : v.checks) out.checks.push_back({group, c.name, c.p, c.r, c.passed, c.detail});
    return out;
}

// --- text rendering -------------------------------------------------------------

inline std::string ring_label(const RingReport& ring) {
    std::ostringstream os;
    os << "GR(" << ring.p << "^" << ring.r << ", " << ring.m << ")";
    return os.str();
}

inline std::string render_text(const DecompositionReport& d) {
    std::ostringstream os;
    os << "Z_" << d.n << " " << d.group << "\n";
    for (const auto& pr : d.primes) {
        os << "  p^r = " << pr.p << "^" << pr.r << "  (dimension check " << (pr.dimension_check ? "ok" : "FAILED") << ")\n";
        for (const auto& c : pr.components)
            os << "    " << c.multiplicity << " x M_" << c.matrix_size << "(" << ring_label(c.ring) << ")\n";
    }
    return os.str();
}

inline std::string render_text(const UnitsReport& u) {
    std::ostringstream os;
    os << "U(Z_" << u.p << "^" << u.r << " " << u.group << "): " << u.generators.size() << " generators\n";
    for (const auto& g : u.generators) {
        os << "  [" << g.kind;
        if (g.component >= 0) os << " " << g.component;
        os << "] order " << (g.order ? std::to_string(*g.order) : std::string("?")) << ": " << g.element << "\n";
    }
    if (!u.note.empty()) os << "  note: " << u.note << "\n";
    if (u.certification)
        os << "  closure (" << u.certification->method << "): " << u.certification->generated << " of "
           << u.certification->expected << (u.certification->equal ? "  certified" : "  NOT certified") << "\n";
    return os.str();
}

inline std::string render_text(const GaloisReport& g) {
    std::ostringstream os;
    os << ring_label(g.ring) << " modulus";
    for (auto c : g.ring.modulus) os << " " << c;
    os << "\n  |U| = " << g.unit_count << ", closure of generators = " << g.closure_size << "\n";
    for (std::size_t i = 0; i < g.generators.size(); ++i) os << "  order " << g.orders[i] << ": " << g.generators[i] << "\n";
    return os.str();
}

inline std::string render_text(const VerifyReport& v) {
    std::ostringstream os;
    for (const auto& c : v.checks)
        os << (c.passed ? "ok    " : "FAIL  ") << c.group << " " << c.name << " (" << c.p << "^" << c.r << "): " << c.detail << "\n";
    os << (v.passed() ? "all checks passed\n" : "some checks failed\n");
    return os.str();
}

} // namespace zng
