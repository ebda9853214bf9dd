// Acceptance run: one PASS/FAIL line per criterion.

#include <zng/group_library.hpp>
#include <zng/json_io.hpp>
#include <zng/unit_synth.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace zng;

namespace {

using Clock = std::chrono::steady_clock;
using Shapes = std::vector<ComponentShape>;

const std::vector<PrimePower> standard_pps{PrimePower(2, 2), PrimePower(2, 3), PrimePower(3, 2), PrimePower(5, 1), PrimePower(7, 1)};

struct Outcome {
    bool passed = false;
    std::string detail;
};

/// Strongly monomial corpus groups with their pairs (SL(2,3) excluded).
struct MonomialGroup {
    std::string key;
    GroupPtr G;
    std::vector<ShodaPair> pairs;
};

const std::vector<MonomialGroup>& monomial_corpus() {
    static const auto groups = [] {
        std::vector<MonomialGroup> out;
        for (const auto& e : group_corpus()) {
            auto G = e.build();
            try {
                out.push_back({e.key, G, strong_shoda_pairs(G)});
            } catch (const not_strongly_monomial&) {
            }
        }
        return out;
    }();
    return groups;
}

Outcome criterion1() {
    auto dec = decompose_modulus(group_by_name("c5xc5"), 36);
    const Shapes expected{{1, 1, 1}, {1, 4, 6}};
    bool ok = dec.primes.size() == 2 && dec.primes[0].prime_power() == PrimePower(2, 2) && dec.primes[1].prime_power() == PrimePower(3, 2);
    for (const auto& pd : dec.primes) ok = ok && shapes_of(pd.components) == expected;
    return {ok, "Z_36 C5xC5 = Z_36 + 6 Z_4[xi_4] + 6 Z_9[xi_4] per-prime tables"};
}

Outcome criterion2() {
    int cases = 0;
    std::string bad;
    for (const auto& e : group_corpus()) {
        auto G = e.build();
        std::optional<std::vector<ShodaPair>> pairs;
        try {
            pairs = strong_shoda_pairs(G);
        } catch (const not_strongly_monomial&) {
        }
        for (const auto& pp : standard_pps) {
            if (G->order() % pp.p == 0) continue;
            ++cases;
            int dim = 0;
            if (pairs) {
                for (const auto& c : decompose(ZGRing(G, Zmod(pp)), *pairs)) dim += c.matrix_size * c.matrix_size * c.degree;
            } else {
                dim = shape_dimension(wedderburn_shapes(G, pp.p)); // F_p Wedderburn route
            }
            if (dim != G->order()) bad += " " + e.key;
        }
    }
    return {bad.empty(), std::to_string(cases) + " (group, p^r) cases" + (bad.empty() ? "" : "; mismatches:" + bad)};
}

Outcome criterion3() {
    auto G = extraspecial27();
    ZGRing R(G, Zmod(2, 3));
    const int a = G->find("a").value(), c = G->find("c").value();
    const auto AC = generated_subgroup(*G, {a, c}), A = generated_subgroup(*G, {a});
    const auto cls = cyclotomic_classes(3, 2)[0];
    bool ok = cls.members == std::vector<int>{1, 2};
    const auto d = shoda_data(R, AC, A, cls);
    const auto F = residue_ring(R);
    const auto khat = F.one() + F.basis(a) + F.basis(G->pow(a, 2));
    ok = ok && d.epsilon == (F.basis(c) + F.basis(G->pow(c, 2))) * khat;
    ok = ok && d.nilpotency == 3;
    const auto khat_r = R.one() + R.basis(a) + R.basis(G->pow(a, 2));
    ok = ok && d.omega == (R.scalar(2) - R.basis(c) - R.basis(G->pow(c, 2))) * khat_r;
    bool m3 = false;
    for (const auto& comp : decompose(R, strong_shoda_pairs(G)))
        if (comp.shoda.w == d.w) m3 = comp.matrix_size == 3 && comp.degree == 2 && comp.ring == GaloisRing(PrimePower(2, 3), 2);
    ok = ok && m3;
    GaloisRing S(PrimePower(2, 3), 2);
    const auto closure = galois_ring_closure(S, S.unit_group_generators());
    const auto inv = invariant_factors_from_orders(galois_unit_order_histogram(S, S.unit_group_generators()));
    // C_3 x C_4 x C_2 x C_2 has invariant factors 2 | 2 | 12
    ok = ok && closure.complete && closure.size == 48 && inv == std::vector<std::int64_t>{2, 2, 12};
    std::ostringstream os;
    os << "epsilon, omega, nilpotency 3, M_3(GR(8,2)); |U(GR(8,2))| closure " << closure.size << ", invariants";
    for (auto v : inv) os << " " << v;
    return {ok, os.str()};
}

Outcome criterion4() {
    bool ok = true;
    std::ostringstream os;
    for (int r = 2; r <= 4; ++r) {
        auto fx = z2r_c5_fixture(r);
        for (const auto& g : fx.generators) ok = ok && unit_order(g.element) == *g.declared_order;
        if (!fx.normalized_hat) os << "[r=" << r << ": " << fx.note << "] ";
        if (r <= 3) {
            const auto expected = ipow(2, r - 1) * ipow(2, 4 * (r - 1)) * 15;
            const auto res = group_ring_closure(fx.ring, elements_of(fx.generators));
            ok = ok && res.complete && res.size == expected;
            os << "r=" << r << " closure " << res.size << "/" << expected << " ";
        }
    }
    os << "declared orders r=2..4";
    return {ok, os.str()};
}

Outcome criterion5() {
    std::int64_t data = 0;
    std::string bad;
    for (const auto& mg : monomial_corpus())
        for (const auto& pp : standard_pps) {
            if (mg.G->order() % pp.p == 0) continue;
            ZGRing R(mg.G, Zmod(pp));
            const auto F = residue_ring(R);
            const auto comps = shoda_components(R, mg.pairs);
            auto total = R.zero();
            bool ok = true;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                const auto& d = comps[i];
                ++data;
                ok = ok && F.is_idempotent(d.epsilon) && R.is_idempotent(d.omega) && reduce_mod_p(d.omega) == d.epsilon;
                for (std::size_t j = 0; j < i; ++j) ok = ok && R.is_zero(d.w * comps[j].w);
                total = total + d.w;
            }
            ok = ok && total == R.one();
            if (!ok) bad += " " + mg.key + "@" + std::to_string(pp.modulus);
        }
    return {bad.empty(), std::to_string(data) + " ShodaData records" + (bad.empty() ? "" : "; failures:" + bad)};
}

Outcome criterion6() {
    int kits = 0, crossed = 0;
    std::string bad;
    for (const auto& mg : monomial_corpus())
        for (const auto& pp : standard_pps) {
            if (mg.G->order() % pp.p == 0) continue;
            ZGRing R(mg.G, Zmod(pp));
            for (auto& comp : decompose(R, mg.pairs)) {
                if (comp.matrix_size != 2 && comp.matrix_size != 3) continue;
                attach_iso(comp, R);
                const auto kit = build_matrix_units(comp);
                const int n = kit.n;
                ++kits;
                bool ok = true;
                auto diag = R.zero();
                for (int i = 0; i < n; ++i) diag = diag + kit.unit(i, i);
                ok = ok && diag == comp.idempotent();
                for (int i = 0; i < n && ok; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            for (int m = 0; m < n; ++m)
                                ok = ok && kit.unit(i, j) * kit.unit(k, m) == (j == k ? kit.unit(i, m) : R.zero());
                const auto& iso = *comp.iso;
                const int d = iso.d();
                crossed += d >= 2;
                const auto M = iso.psi(kit.alphas);
                const auto S = iso.centre();
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        const auto expect = (i == 0 || j == 0) ? S.one() : (i == j ? -S.one() : S.zero());
                        ok = ok && M(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == expect;
                    }
                if (!ok) bad += " " + mg.key + "@" + std::to_string(pp.modulus);
            }
        }
    return {bad.empty() && kits > 0, std::to_string(kits) + " kits (" + std::to_string(crossed) + " with [C:H] >= 2)" +
                                         (bad.empty() ? "" : "; failures:" + bad)};
}

Outcome criterion7() {
    int cases = 0;
    std::string bad;
    std::set<std::string> methods;
    for (const auto& mg : monomial_corpus()) {
        if (mg.G->order() > 10) continue;
        for (const auto& pp : {PrimePower(2, 2), PrimePower(3, 2)}) {
            if (mg.G->order() % pp.p == 0) continue;
            ZGRing R(mg.G, Zmod(pp));
            auto comps = decompose(R, mg.pairs);
            const auto cert = certify_unit_generators(R, unit_group_generators(R, comps));
            ++cases;
            methods.insert(cert.method);
            if (!cert.equal) bad += " " + mg.key + "@" + std::to_string(pp.modulus);
        }
    }
    std::string m;
    for (const auto& s : methods) m += " " + s;
    return {bad.empty(), std::to_string(cases) + " group rings, methods:" + m + (bad.empty() ? "" : "; failures:" + bad)};
}

Outcome criterion8() {
    std::set<std::tuple<std::int64_t, int, int>> rings;
    for (const auto& mg : monomial_corpus())
        for (const auto& pp : standard_pps) {
            if (mg.G->order() % pp.p == 0) continue;
            for (const auto& d : shoda_components(ZGRing(mg.G, Zmod(pp)), mg.pairs)) {
                rings.insert({pp.p, pp.r, d.l}); // centre S
                rings.insert({pp.p, pp.r, d.o}); // Z_{p^r} H omega
            }
        }
    int checked = 0;
    std::string bad;
    for (const auto& [p, r, m] : rings) {
        if (!ipow_fits(p, static_cast<std::int64_t>(r) * m) || ipow(p, static_cast<std::int64_t>(r) * m) > (1 << 16)) continue;
        GaloisRing S(PrimePower(p, r), m);
        const auto res = galois_ring_closure(S, S.unit_group_generators());
        ++checked;
        if (!res.complete || res.size != ipow(p, (r - 1) * m) * (ipow(p, m) - 1))
            bad += " GR(" + std::to_string(p) + "^" + std::to_string(r) + "," + std::to_string(m) + ")";
    }
    return {bad.empty() && checked > 0, std::to_string(checked) + " Galois rings with |R| <= 2^16" + (bad.empty() ? "" : "; failures:" + bad)};
}

} // namespace

int main() {
    const std::vector<std::tuple<int, std::string, double, std::function<Outcome()>>> criteria{
        {1, "component table of Z_36[C5xC5]", 1.0, criterion1},
        {2, "dimension identity over the corpus", 30.0, criterion2},
        {3, "ES27 fixture at 2^3", 10.0, criterion3},
        {4, "U(Z_{2^r}C_5) generators", 60.0, criterion4},
        {5, "idempotent suite", 0.0, criterion5},
        {6, "matrix-unit suite", 0.0, criterion6},
        {7, "closure equals unit group, |G| <= 10, p^r in {4, 9}", 300.0, criterion7},
        {8, "Galois-ring unit closure", 0.0, criterion8},
    };
    // warm the shared corpus cache outside the timed sections
    (void)monomial_corpus();
    int failures = 0;
    for (const auto& [id, name, limit, fn] : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = limit <= 0.0 || secs < limit;
        const bool pass = o.passed && in_time;
        failures += !pass;
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " - " << name << ": " << o.detail << " (" << t.str()
                  << " s" << (in_time ? "" : ", over the time limit") << ")\n";
    }
    return failures == 0 ? 0 : 1;
}
