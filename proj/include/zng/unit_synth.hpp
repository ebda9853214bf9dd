#pragma once

/**
 * @file unit_synth.hpp
 * @brief Generators of U(Z_{p^r}G): matrix units per component, diagonal and elementary units,
 * closure certification, and the explicit generators of U(Z_{2^r}C_5).
 */

#include <zng/decomp.hpp>
#include <zng/error.hpp>
#include <zng/galois_ring.hpp>
#include <zng/group_library.hpp>
#include <zng/group_ring.hpp>
#include <zng/linalg.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zng {

/// alpha_0..alpha_{d-1} in R with sum_i alpha_i phi^{i+j}(beta) = tr(beta) (j = 0) and
/// beta - phi^j(beta) (j > 0). Throws singular_system when beta is not normal.
inline std::vector<GrElem> solve_eq11(const ComponentIso& iso, const GrElem& beta) {
    const auto& R = iso.R();
    const int d = iso.d();
    Matrix<GrElem> A(static_cast<std::size_t>(d), static_cast<std::size_t>(d), R.zero());
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) A(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = iso.phi(beta, i + j);
    std::vector<GrElem> b;
    auto tr = R.zero();
    for (int j = 0; j < d; ++j) tr = tr + iso.phi(beta, j);
    b.push_back(tr);
    for (int j = 1; j < d; ++j) b.push_back(beta - iso.phi(beta, j));
    return solve_unit_pivot(R, A, b);
}

/// Inverse inside the corner ring e A e of an element a = e a e.
inline ZGElem corner_inverse(const ZGElem& a, const ZGElem& e) {
    auto R = a.ring();
    const auto rest = R.one() - e;
    return R.inverse(a + rest) - rest;
}

struct MatrixUnitKit {
    std::shared_ptr<const ComponentIso> iso;
    GrElem beta;
    std::vector<GrElem> alphas; ///< solution of the circulant system in R
    ZGElem alpha;               ///< sum alpha_i gamma^i
    ZGElem alpha_inv;           ///< inverse in C omega
    ZGElem ehat;                ///< [C:H]^{-1} sum gamma^i
    int n = 1;                  ///< [G:H]
    std::vector<ZGElem> E;      ///< E[P n + Q], P = (u, i) -> u [C:H] + i

    const ZGElem& unit(int P, int Q) const { return E.at(static_cast<std::size_t>(P * n + Q)); }
};

/// E_{(u,i),(v,j)} = t_u^{-1} gamma^i alpha^{-1} Ehat alpha gamma^{-j} t_v.
inline MatrixUnitKit build_matrix_units(const Component& comp) {
    if (!comp.iso) throw precondition_error("build_matrix_units: component has no crossed-product data (call attach_iso)");
    const auto& iso = *comp.iso;
    const auto& Z = iso.group_ring();
    const FiniteGroup& G = Z.group();
    const auto& omega = comp.shoda.omega;
    const int d = iso.d();
    MatrixUnitKit kit;
    kit.iso = comp.iso;
    kit.beta = iso.beta();
    kit.alphas = solve_eq11(iso, kit.beta);
    kit.alpha = Z.zero();
    for (int i = 0; i < d; ++i) kit.alpha = kit.alpha + iso.to_group(kit.alphas[static_cast<std::size_t>(i)]) * iso.gamma_pow(i);
    kit.alpha_inv = corner_inverse(kit.alpha, omega);
    kit.ehat = Z.zero();
    for (int i = 0; i < d; ++i) kit.ehat = kit.ehat + iso.gamma_pow(i);
    kit.ehat = Z.scale(kit.ehat, Z.base().inverse(Z.base().reduce(d)));
    const auto core = kit.alpha_inv * kit.ehat * kit.alpha;
    std::vector<ZGElem> F(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) F[static_cast<std::size_t>(i * d + j)] = iso.gamma_pow(i) * core * iso.gamma_pow(-j);
    const auto& reps = comp.shoda.T.reps;
    kit.n = static_cast<int>(reps.size()) * d;
    kit.E.resize(static_cast<std::size_t>(kit.n * kit.n));
    for (std::size_t u = 0; u < reps.size(); ++u)
        for (std::size_t v = 0; v < reps.size(); ++v)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const auto P = static_cast<int>(u) * d + i, Q = static_cast<int>(v) * d + j;
                    kit.E[static_cast<std::size_t>(P * kit.n + Q)] =
                        Z.basis(G.inv(reps[u])) * F[static_cast<std::size_t>(i * d + j)] * Z.basis(reps[v]);
                }
    return kit;
}

enum class GeneratorKind { diagonal, elementary, fixture };

inline const char* to_string(GeneratorKind k) {
    switch (k) {
    case GeneratorKind::diagonal: return "diagonal";
    case GeneratorKind::elementary: return "elementary";
    case GeneratorKind::fixture: return "fixture";
    }
    return "?";
}

struct UnitGenerator {
    ZGElem element;
    ZGElem inverse;
    GeneratorKind kind = GeneratorKind::diagonal;
    int component = -1;
    std::optional<std::int64_t> declared_order;
    std::string label;
};

/// Order of a unit of a Galois ring when |U(S)| fits in 64 bits.
inline std::optional<std::int64_t> galois_unit_order(const GaloisRing& S, const GrElem& u) {
    if (!ipow_fits(S.prime_power().modulus, S.degree())) return std::nullopt;
    return S.element_order(u);
}

/// 1 - E_00 + u E_00 for each generator u of U(S).
inline std::vector<UnitGenerator> diagonal_generators(const Component& comp, const MatrixUnitKit& kit) {
    const auto& iso = *kit.iso;
    const auto& Z = iso.group_ring();
    const auto S = iso.centre();
    const auto& e00 = kit.unit(0, 0);
    const auto rest = Z.one() - e00;
    std::vector<UnitGenerator> out;
    for (const auto& u : S.unit_group_generators()) {
        UnitGenerator g;
        g.element = rest + iso.to_group(iso.S().embed(u)) * e00;
        g.inverse = rest + iso.to_group(iso.S().embed(S.inverse(u))) * e00;
        g.kind = GeneratorKind::diagonal;
        g.component = comp.id;
        g.declared_order = galois_unit_order(S, u);
        g.label = "diag(" + u.to_string() + ")";
        out.push_back(std::move(g));
    }
    return out;
}

/// 1 + E_P0 s E_0Q for P != Q and s in {p^t xi^j}; order p^{r-t}.
inline std::vector<UnitGenerator> elementary_generators(const Component& comp, const MatrixUnitKit& kit) {
    const auto& iso = *kit.iso;
    const auto& Z = iso.group_ring();
    const auto S = iso.centre();
    const auto p = S.p();
    const int r = S.r();
    std::vector<UnitGenerator> out;
    if (kit.n < 2) return out;
    for (int P = 0; P < kit.n; ++P)
        for (int Q = 0; Q < kit.n; ++Q) {
            if (P == Q) continue;
            for (int t = 0; t < r; ++t)
                for (int j = 0; j < S.degree(); ++j) {
                    const auto s = S.scale(S.xi_power(j), ipow(p, t));
                    const auto x = kit.unit(P, 0) * iso.to_group(iso.S().embed(s)) * kit.unit(0, Q);
                    UnitGenerator g;
                    g.element = Z.one() + x;
                    g.inverse = Z.one() - x;
                    g.kind = GeneratorKind::elementary;
                    g.component = comp.id;
                    g.declared_order = ipow(p, r - t);
                    g.label = "1 + (" + std::to_string(ipow(p, t)) + "*xi^" + std::to_string(j) + ")E_" + std::to_string(P) + "," + std::to_string(Q);
                    out.push_back(std::move(g));
                }
        }
    return out;
}

/// Diagonal and elementary generators of every component, with kits built on demand.
inline std::vector<UnitGenerator> unit_group_generators(const ZGRing& R, std::vector<Component>& comps) {
    std::vector<UnitGenerator> out;
    for (auto& comp : comps) {
        attach_iso(comp, R);
        const auto kit = build_matrix_units(comp);
        for (auto& g : diagonal_generators(comp, kit)) out.push_back(std::move(g));
        for (auto& g : elementary_generators(comp, kit)) out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<UnitGenerator> unit_group_generators(const GroupPtr& G, std::int64_t p, int r) {
    ZGRing R(G, Zmod(p, r));
    auto comps = decompose(R, strong_shoda_pairs(G));
    return unit_group_generators(R, comps);
}

// --- closure ------------------------------------------------------------------

inline constexpr std::int64_t closure_cap = std::int64_t{1} << 20;

struct ClosureResult {
    std::int64_t size = 0;
    bool complete = false; ///< false when the cap was reached first
};

/// Breadth-first closure of a set of invertible elements under right multiplication, stored in
/// a flat arena of fixed-width uint32 words with an open-addressing index.
class ClosureArena {
public:
    explicit ClosureArena(std::size_t width) : width_(width), table_(1024, 0) {}

    std::size_t width() const { return width_; }
    std::int64_t size() const { return static_cast<std::int64_t>(arena_.size() / width_); }
    const std::uint32_t* at(std::int64_t i) const { return arena_.data() + static_cast<std::size_t>(i) * width_; }

    /// Index of v, inserting it when new; second is true on insertion.
    std::pair<std::int64_t, bool> insert(const std::uint32_t* v) {
        if (static_cast<std::size_t>(size() + 1) * 2 > table_.size()) grow();
        std::size_t h = hash(v) & (table_.size() - 1);
        while (table_[h] != 0) {
            const auto idx = static_cast<std::int64_t>(table_[h] - 1);
            if (std::equal(v, v + width_, at(idx))) return {idx, false};
            h = (h + 1) & (table_.size() - 1);
        }
        const auto idx = size();
        arena_.insert(arena_.end(), v, v + width_);
        table_[h] = static_cast<std::uint64_t>(idx) + 1;
        return {idx, true};
    }

    bool contains(const std::uint32_t* v) const {
        std::size_t h = hash(v) & (table_.size() - 1);
        while (table_[h] != 0) {
            if (std::equal(v, v + width_, at(static_cast<std::int64_t>(table_[h] - 1)))) return true;
            h = (h + 1) & (table_.size() - 1);
        }
        return false;
    }

private:
    std::size_t hash(const std::uint32_t* v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < width_; ++i) {
            h ^= v[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
    void grow() {
        std::vector<std::uint64_t> t(table_.size() * 2, 0);
        table_.swap(t);
        for (std::int64_t i = 0; i < size(); ++i) {
            std::size_t h = hash(at(i)) & (table_.size() - 1);
            while (table_[h] != 0) h = (h + 1) & (table_.size() - 1);
            table_[h] = static_cast<std::uint64_t>(i) + 1;
        }
    }

    std::size_t width_;
    std::vector<std::uint32_t> arena_;
    std::vector<std::uint64_t> table_;
};

/// Closure of gens from identity; mul(a, generator index, out) writes a * gens[k].
template <class Mul>
ClosureResult bfs_closure(ClosureArena& arena, const std::vector<std::uint32_t>& identity, std::size_t num_gens, Mul mul,
                          std::int64_t cap = closure_cap) {
    arena.insert(identity.data());
    std::vector<std::uint32_t> buf(arena.width());
    for (std::int64_t head = 0; head < arena.size(); ++head) {
        for (std::size_t k = 0; k < num_gens; ++k) {
            mul(arena.at(head), k, buf.data());
            arena.insert(buf.data());
            if (arena.size() > cap) return {arena.size(), false};
        }
    }
    return {arena.size(), true};
}

/// Closure of units of a group ring over Z/p^r.
inline ClosureResult group_ring_closure(const ZGRing& R, const std::vector<ZGElem>& gens, std::int64_t cap = closure_cap,
                                        ClosureArena* keep = nullptr) {
    const FiniteGroup& G = R.group();
    const auto n = static_cast<std::size_t>(G.order());
    const auto mod = static_cast<std::uint64_t>(R.base().modulus());
    std::vector<std::vector<std::pair<int, std::uint64_t>>> supp;
    for (const auto& g : gens) {
        std::vector<std::pair<int, std::uint64_t>> s;
        for (int h = 0; h < G.order(); ++h)
            if (g.coeff(h) != 0) s.emplace_back(h, static_cast<std::uint64_t>(g.coeff(h)));
        supp.push_back(std::move(s));
    }
    const auto& table = G.table();
    std::vector<std::uint64_t> acc(n);
    auto mul = [&](const std::uint32_t* a, std::size_t k, std::uint32_t* out) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t x = 0; x < n; ++x) {
            if (a[x] == 0) continue;
            for (const auto& [h, c] : supp[k]) {
                auto& slot = acc[static_cast<std::size_t>(table[x][static_cast<std::size_t>(h)])];
                slot = (slot + a[x] * c) % mod;
            }
        }
        for (std::size_t x = 0; x < n; ++x) out[x] = static_cast<std::uint32_t>(acc[x]);
    };
    std::vector<std::uint32_t> id(n, 0);
    id[0] = 1;
    ClosureArena local(n);
    ClosureArena& arena = keep ? *keep : local;
    return bfs_closure(arena, id, gens.size(), mul, cap);
}

/// Closure of units of a Galois ring.
inline ClosureResult galois_ring_closure(const GaloisRing& S, const std::vector<GrElem>& gens, std::int64_t cap = closure_cap) {
    const auto m = static_cast<std::size_t>(S.degree());
    auto mul = [&](const std::uint32_t* a, std::size_t k, std::uint32_t* out) {
        std::vector<std::int64_t> c(a, a + m);
        auto prod = S.mul(S.element(std::move(c)), gens[k]);
        for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod.coeff(static_cast<int>(i)));
    };
    std::vector<std::uint32_t> id(m, 0);
    id[0] = 1;
    ClosureArena arena(m);
    return bfs_closure(arena, id, gens.size(), mul, cap);
}

/// Invariant factors of a finite abelian group from the counts of elements of each order.
inline std::vector<std::int64_t> invariant_factors_from_orders(const std::map<std::int64_t, std::int64_t>& order_counts) {
    std::int64_t total = 0;
    for (const auto& [o, c] : order_counts) total += c;
    // for each prime q, |{x : x^{q^j} = 1}| = q^{sum_i min(j, e_i)} determines the q-exponents e_i
    std::vector<std::vector<int>> per_prime_exps;
    std::vector<std::int64_t> primes;
    for (auto q : prime_divisors(total)) {
        std::vector<std::int64_t> count_j{1};
        for (int j = 1;; ++j) {
            std::int64_t c = 0;
            const auto qj = ipow(q, j);
            for (const auto& [o, n] : order_counts) {
                std::int64_t qpart = 1;
                auto oo = o;
                while (oo % q == 0) {
                    oo /= q;
                    qpart *= q;
                }
                if (qj % qpart == 0 && oo == 1) c += n;
            }
            count_j.push_back(c);
            if (c == count_j[static_cast<std::size_t>(j) - 1]) break;
        }
        // number of cyclic factors with exponent >= j is log_q(count_j / count_{j-1})
        std::vector<int> at_least;
        for (std::size_t j = 1; j < count_j.size(); ++j) {
            auto ratio = count_j[j] / count_j[j - 1];
            int k = 0;
            while (ratio > 1) {
                ratio /= q;
                ++k;
            }
            if (k) at_least.push_back(k);
        }
        std::vector<int> exps;
        for (std::size_t j = 0; j < at_least.size(); ++j) {
            const int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
            for (int t = 0; t < at_least[j] - next; ++t) exps.push_back(static_cast<int>(j) + 1);
        }
        std::sort(exps.rbegin(), exps.rend());
        primes.push_back(q);
        per_prime_exps.push_back(exps);
    }
    std::size_t len = 0;
    for (const auto& e : per_prime_exps) len = std::max(len, e.size());
    std::vector<std::int64_t> out(len, 1);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < per_prime_exps[i].size(); ++j) out[j] *= ipow(primes[i], per_prime_exps[i][j]);
    std::sort(out.begin(), out.end());
    return out; // d_1 | d_2 | ... ascending
}

/// Counts of element orders in the unit group generated by gens (closure enumerated).
inline std::map<std::int64_t, std::int64_t> galois_unit_order_histogram(const GaloisRing& S, const std::vector<GrElem>& gens) {
    const auto m = static_cast<std::size_t>(S.degree());
    auto mul = [&](const std::uint32_t* a, std::size_t k, std::uint32_t* out) {
        std::vector<std::int64_t> c(a, a + m);
        auto prod = S.mul(S.element(std::move(c)), gens[k]);
        for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod.coeff(static_cast<int>(i)));
    };
    std::vector<std::uint32_t> id(m, 0);
    id[0] = 1;
    ClosureArena arena(m);
    bfs_closure(arena, id, gens.size(), mul);
    std::map<std::int64_t, std::int64_t> hist;
    for (std::int64_t i = 0; i < arena.size(); ++i) {
        std::vector<std::int64_t> c(arena.at(i), arena.at(i) + m);
        ++hist[S.element_order(S.element(std::move(c)))];
    }
    return hist;
}

// --- U(Z_{2^r} C_5) -----------------------------------------------------------

struct C5Fixture {
    ZGRing ring;
    std::vector<UnitGenerator> generators; ///< 5, -1, 1+g+g^2, 1+2g, 1+2g^2, 1+4g, (1-a)ghat-1
    bool normalized_hat = true;            ///< false when ghat had to be read as the plain sum
    std::string note;
};

inline C5Fixture z2r_c5_fixture(int r) {
    if (r < 2) throw precondition_error("z2r_c5_fixture: requires r >= 2");
    auto C5 = cyclic_group(5);
    ZGRing R(C5, Zmod(2, r));
    const Zmod& Z = R.base();
    const auto g = R.basis(1), g2 = R.basis(2), one = R.one();
    const auto inv5 = Z.inverse(5);
    const auto a = Z.mul(3, inv5);
    const std::int64_t e1 = ipow(2, r - 1), e2 = ipow(2, r - 2);
    auto involution = [&](const ZGElem& ghat) { return R.scale(ghat, Z.sub(1, a)) - one; };
    const auto sum = R.hat(whole_group(*C5)) * R.scalar(5); // plain sum of the g^i
    C5Fixture fx{R, {}, true, ""};
    auto last = involution(R.hat(whole_group(*C5)));
    if (!(last * last == one) || last == one) {
        fx.normalized_hat = false;
        fx.note = "(1-a)ghat-1 with ghat = |<g>|^{-1} sum g^i is not an involution mod 2^" + std::to_string(r) +
                  "; using ghat = sum g^i";
        last = involution(sum);
    }
    const std::vector<std::tuple<ZGElem, std::int64_t, std::string>> items{
        {R.scalar(5), e2, "5"},
        {R.scalar(Z.neg(1)), 2, "-1"},
        {one + g + g2, 15 * e1, "1+g+g^2"},
        {one + R.scale(g, 2), e1, "1+2g"},
        {one + R.scale(g2, 2), e1, "1+2g^2"},
        {one + R.scale(g, 4), e2, "1+4g"},
        {last, 2, "(1-a)ghat-1"},
    };
    for (const auto& [el, ord, name] : items) {
        UnitGenerator u;
        u.element = el;
        u.inverse = R.inverse(el);
        u.kind = GeneratorKind::fixture;
        u.component = -1;
        u.declared_order = ord;
        u.label = name;
        fx.generators.push_back(std::move(u));
    }
    return fx;
}

inline std::vector<ZGElem> elements_of(const std::vector<UnitGenerator>& gens) {
    std::vector<ZGElem> out;
    for (const auto& g : gens) out.push_back(g.element);
    return out;
}

// --- certification ------------------------------------------------------------

/// Number of units of Z_{p^r}G counted by testing every element for invertibility.
inline std::int64_t exhaustive_unit_count(const ZGRing& R) {
    const auto n = R.dimension();
    const auto q = R.base().modulus();
    if (!ipow_fits(q, n) || ipow(q, n) > (std::int64_t{1} << 24)) throw precondition_error("exhaustive_unit_count: ring too large");
    const auto total = ipow(q, n);
    const auto p = R.base().p();
    std::int64_t units = 0;
    std::vector<std::int64_t> c(static_cast<std::size_t>(n));
    for (std::int64_t code = 0; code < total; ++code) {
        auto x = code;
        for (auto& v : c) {
            v = x % q;
            x /= q;
        }
        // a is a unit iff left multiplication by a is invertible mod p
        const auto a = R.from_ints(c);
        const auto M = R.left_multiplication_matrix(a);
        std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(M(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        units += rank_mod_p(rows, p) == static_cast<std::size_t>(n);
    }
    return units;
}

struct Certification {
    std::string method;          ///< "enumeration" or "layered"
    std::int64_t expected = 0;   ///< |U(Z_{p^r}G)| from the oracle
    std::int64_t generated = 0;  ///< order of the generated group (or lower bound when incomplete)
    bool equal = false;
};

/// |U(Z_{p^r}G)| = p^{(r-1)|G|} prod |GL_n(F_{p^m})|^mult over the shapes of F_pG; nullopt on overflow.
inline std::optional<std::int64_t> unit_count_formula(const GroupPtr& G, std::int64_t p, int r) {
    __int128 total = 1;
    const __int128 cap = std::numeric_limits<std::int64_t>::max();
    auto times = [&](__int128 v) {
        total *= v;
        return total <= cap;
    };
    for (const auto& s : wedderburn_shapes(G, p)) {
        if (!ipow_fits(p, static_cast<std::int64_t>(s.degree) * s.matrix_size)) return std::nullopt;
        const auto q = ipow(p, s.degree);
        const auto qn = ipow(q, s.matrix_size);
        for (int k = 0; k < s.multiplicity; ++k)
            for (int i = 0; i < s.matrix_size; ++i)
                if (!times(qn - ipow(q, i))) return std::nullopt;
    }
    for (int i = 0; i < (r - 1) * G->order(); ++i)
        if (!times(p)) return std::nullopt;
    return static_cast<std::int64_t>(total);
}

/// Subgroup of 1 + pZ_{p^r}G generated by the added elements, tracked layer by layer along
/// 1 + p^j Z_{p^r}G (j = 1..r-1): each layer keeps an echelon basis of leading vectors mod p.
class PGroupSifter {
public:
    explicit PGroupSifter(const ZGRing& R) : R_(R), n_(static_cast<std::size_t>(R.dimension())), layers_(static_cast<std::size_t>(R.base().r())) {}

    bool full() const {
        for (std::size_t j = 1; j < layers_.size(); ++j)
            if (layers_[j].size() < n_) return false;
        return true;
    }
    /// log_p of the order of the generated subgroup
    std::size_t log_order() const {
        std::size_t s = 0;
        for (const auto& l : layers_) s += l.size();
        return s;
    }

    /// Adds k (which must lie in 1 + pA) and closes under p-th powers and commutators.
    void add(const ZGElem& k) {
        std::vector<ZGElem> queue{k};
        while (!queue.empty() && !full()) {
            auto x = queue.back();
            queue.pop_back();
            auto fresh = sift(x);
            if (!fresh) continue;
            queue.push_back(R_.pow(fresh->element, R_.base().p()));
            for (const auto& layer : layers_)
                for (const auto& b : layer)
                    queue.push_back(fresh->element * b.element * fresh->inverse * b.inverse);
        }
    }

private:
    struct Row {
        std::vector<std::int64_t> v; ///< leading vector, v[pivot] = 1
        std::size_t pivot = 0;
        ZGElem element, inverse;
    };

    std::optional<Row> sift(ZGElem x) {
        const Zmod& Z = R_.base();
        const auto p = Z.p();
        const auto one = R_.one();
        for (int j = 1; j < Z.r(); ++j) {
            const auto pj = ipow(p, j);
            std::vector<std::int64_t> v(n_);
            bool deeper = true;
            for (std::size_t i = 0; i < n_; ++i) {
                const auto c = Z.sub(x.coeff(static_cast<int>(i)), i == 0 ? 1 : 0);
                if (c % pj != 0) throw precondition_error("PGroupSifter: element not in 1 + pA");
                v[i] = (c / pj) % p;
                deeper &= v[i] == 0;
            }
            if (deeper) continue;
            auto& layer = layers_[static_cast<std::size_t>(j)];
            for (const auto& row : layer) {
                const auto t = v[row.pivot];
                if (t == 0) continue;
                for (std::size_t i = 0; i < n_; ++i) v[i] = ((v[i] - t * row.v[i]) % p + p) % p;
                x = x * R_.pow(row.inverse, t);
            }
            std::size_t pivot = n_;
            for (std::size_t i = 0; i < n_; ++i)
                if (v[i] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == n_) continue; // x now lies in the next layer
            const auto s = Zmod(PrimePower(p, 1)).inverse(v[pivot]);
            for (auto& c : v) c = c * s % p;
            Row row{v, pivot, R_.pow(x, s), one};
            row.inverse = R_.pow(row.element, ipow(p, Z.r() - 1) - 1);
            layer.push_back(row);
            return row;
        }
        return std::nullopt;
    }

    ZGRing R_;
    std::size_t n_;
    std::vector<std::vector<Row>> layers_;
};

/// Compares the generated group with U(Z_{p^r}G) in two layers: the image mod p must be all of
/// U(F_pG) (exhaustive scan), and the kernel, generated by Schreier elements w(x) s w(xs)^{-1}
/// of the mod-p spanning tree, must be all of 1 + pZ_{p^r}G.
inline Certification layered_certification(const ZGRing& R, const std::vector<UnitGenerator>& gens,
                                           std::int64_t cap = closure_cap) {
    const FiniteGroup& G = R.group();
    const auto n = static_cast<std::size_t>(G.order());
    const auto p = R.base().p();
    const int r = R.base().r();
    const auto F = residue_ring(R);
    Certification cert;
    cert.method = "layered";
    const auto fp_units = exhaustive_unit_count(F);
    cert.expected = fp_units * ipow(p, static_cast<std::int64_t>((r - 1) * static_cast<int>(n)));
    std::vector<ZGElem> red;
    for (const auto& g : gens) red.push_back(reduce_mod_p(g.element));
    // mod-p BFS on flat coefficient arrays, remembering the tree edge into each node
    std::vector<std::vector<std::pair<int, std::uint32_t>>> supp;
    for (const auto& g : red) {
        std::vector<std::pair<int, std::uint32_t>> s;
        for (int h = 0; h < G.order(); ++h)
            if (g.coeff(h) != 0) s.emplace_back(h, static_cast<std::uint32_t>(g.coeff(h)));
        supp.push_back(std::move(s));
    }
    const auto& table = G.table();
    ClosureArena arena(n);
    std::vector<std::int64_t> parent{-1};
    std::vector<std::size_t> via{0};
    std::vector<std::optional<ZGElem>> lift{R.one()}, lift_inv{R.one()};
    auto word = [&](std::int64_t idx) -> const ZGElem& {
        std::vector<std::int64_t> chain;
        for (auto i = idx; !lift[static_cast<std::size_t>(i)]; i = parent[static_cast<std::size_t>(i)]) chain.push_back(i);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            const auto i = static_cast<std::size_t>(*it);
            const auto par = static_cast<std::size_t>(parent[i]);
            lift[i] = *lift[par] * gens[via[i]].element;
            lift_inv[i] = gens[via[i]].inverse * *lift_inv[par];
        }
        return *lift[static_cast<std::size_t>(idx)];
    };
    std::vector<std::uint32_t> id(n, 0), buf(n);
    id[0] = 1;
    arena.insert(id.data());
    PGroupSifter kernel(R);
    const bool need_kernel = r > 1;
    bool capped = false;
    for (std::int64_t head = 0; head < arena.size() && !capped; ++head) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            std::fill(buf.begin(), buf.end(), 0);
            const auto* a = arena.at(head);
            for (std::size_t x = 0; x < n; ++x) {
                if (a[x] == 0) continue;
                for (const auto& [h, c] : supp[k]) {
                    auto& slot = buf[static_cast<std::size_t>(table[x][static_cast<std::size_t>(h)])];
                    slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(a[x]) * c) % static_cast<std::uint64_t>(p));
                }
            }
            auto [idx, fresh] = arena.insert(buf.data());
            if (fresh) {
                parent.push_back(head);
                via.push_back(k);
                lift.emplace_back();
                lift_inv.emplace_back();
                if (arena.size() > cap) {
                    capped = true;
                    break;
                }
            } else if (need_kernel && !kernel.full()) {
                const auto w = word(head) * gens[k].element;
                word(idx);
                kernel.add(w * *lift_inv[static_cast<std::size_t>(idx)]);
            }
        }
    }
    cert.generated = arena.size() * ipow(p, static_cast<std::int64_t>(kernel.log_order()));
    cert.equal = !capped && arena.size() == fp_units && (!need_kernel || kernel.full()) && cert.generated == cert.expected;
    return cert;
}

/// Compares the generated group with U(Z_{p^r}G): direct enumeration when p^{r|G|} <= 2^18,
/// otherwise the layered check.
inline Certification certify_unit_generators(const ZGRing& R, const std::vector<UnitGenerator>& gens) {
    const auto q = R.base().modulus();
    const auto n = R.dimension();
    if (ipow_fits(q, n) && ipow(q, n) <= (std::int64_t{1} << 18)) {
        Certification cert;
        cert.method = "enumeration";
        cert.expected = exhaustive_unit_count(R);
        auto res = group_ring_closure(R, elements_of(gens));
        cert.generated = res.size;
        cert.equal = res.complete && res.size == cert.expected;
        return cert;
    }
    return layered_certification(R, gens);
}

} // namespace zng
