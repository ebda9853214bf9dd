#pragma once

/**
 * @file decomp.hpp
 * @brief Decomposition of Z_n G (gcd(n, |G|) = 1) into matrix rings over Galois rings.
 *
 * decompose() gives one Component per strong Shoda pair and cyclotomic class. A Component can
 * carry a ComponentIso, the explicit isomorphism Z_{p^r}G w -> M_{[G:H]}(S):
 *   - R = Z_{p^r}H omega is a Galois ring of degree o with xi <-> zeta = x omega;
 *   - S is its degree-l subring, fixed by phi = sigma^l;
 *   - gamma = alpha_t y omega with gamma^{[C:H]} = omega trivializes the crossed product
 *     Z_{p^r}C omega = sum_i R gamma^i, and psi(sum x_i gamma^i) = sum [l_{x_i} o phi^i]_B in the
 *     normal basis B = (phi^j(beta));
 *   - blocks over C omega come from a -> (omega t_u a t_v^{-1} omega)_{u,v}.
 */

#include <zng/error.hpp>
#include <zng/galois_ring.hpp>
#include <zng/group.hpp>
#include <zng/group_ring.hpp>
#include <zng/linalg.hpp>
#include <zng/ring_core.hpp>
#include <zng/shoda.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace zng {

/// Prime-power factors of n; throws coprimality_error naming a prime shared with |G|.
inline std::vector<PrimePower> crt_split(std::int64_t n, const FiniteGroup& G) {
    if (n < 2) throw precondition_error("crt_split: n must be at least 2");
    std::vector<PrimePower> out;
    for (auto [p, e] : factorize(n)) {
        if (G.order() % p == 0)
            throw coprimality_error("n = " + std::to_string(n) + " and |G| = " + std::to_string(G.order()) +
                                        " share the prime " + std::to_string(p),
                                    p);
        out.emplace_back(p, e);
    }
    return out;
}

/// Matrix size, centre degree and multiplicity of a summand M_n(GR(p^r, m)).
struct ComponentShape {
    int matrix_size = 1;
    int degree = 1;
    int multiplicity = 1;
    auto operator<=>(const ComponentShape&) const = default;
};

inline std::vector<ComponentShape> merge_shapes(std::vector<ComponentShape> parts) {
    std::map<std::pair<int, int>, int> count;
    for (const auto& s : parts) count[{s.matrix_size, s.degree}] += s.multiplicity;
    std::vector<ComponentShape> out;
    for (const auto& [key, mult] : count) out.push_back({key.first, key.second, mult});
    return out;
}

inline int shape_dimension(const std::vector<ComponentShape>& shapes) {
    int dim = 0;
    for (const auto& s : shapes) dim += s.multiplicity * s.matrix_size * s.matrix_size * s.degree;
    return dim;
}

class ComponentIso;

struct Component {
    int id = 0;
    PrimePower pp;
    int matrix_size = 1; ///< [G:H]
    int degree = 1;      ///< l = o / [C:H]
    GaloisRing ring;     ///< canonical GR(p^r, l), identified with the centre S
    ShodaData shoda;
    std::shared_ptr<const ComponentIso> iso;

    ComponentShape shape() const { return {matrix_size, degree, 1}; }
    const ZGElem& idempotent() const { return shoda.w; }
};

/// Explicit isomorphism of Z_{p^r}G w onto M_{[G:H]}(S); see the file comment.
class ComponentIso {
public:
    ComponentIso(const ZGRing& ring, const ShodaData& sd)
        : Z_(ring), sd_(sd), zeta_pows_(zeta_powers(ring, sd)), R_(ring.base().prime_power(), minimal_polynomial(ring, sd, zeta_pows_)),
          S_(R_.subring(sd.l)) {
        const FiniteGroup& G = Z_.group();
        d_ = sd.centralizer_index();
        l_ = sd.l;
        select_pivots();
        // y: y x y^{-1} = x^{p^l} mod K
        const int x = sd.generator;
        const int target = G.pow(x, powmod(Z_.base().p(), l_, sd.k));
        y_ = -1;
        for (int c : sd.C.elements())
            if (sd.K.contains(G.mul(G.mul(G.mul(c, x), G.inv(c)), G.inv(target)))) {
                y_ = c;
                break;
            }
        if (y_ < 0) throw error("ComponentIso: no element of C acts as sigma^l (unreachable)");
        if (to_group(phi(R_.xi())) != Z_.conjugate(Z_.basis(x) * sd.omega, G.inv(y_))) throw error("ComponentIso: Frobenius mismatch");
        coset_.assign(static_cast<std::size_t>(G.order()), -1);
        for (int i = 0, yi = 0; i < d_; ++i, yi = G.mul(yi, y_))
            for (int h : sd.H.elements()) coset_[static_cast<std::size_t>(G.mul(h, yi))] = i;
        // twist trivialization
        s_ = S_.project(from_group(Z_.basis(G.pow(y_, d_)) * sd.omega));
        alpha_t_ = R_.solve_norm_equation(S_, S_.sub().inverse(s_));
        gamma_ = to_group(alpha_t_) * Z_.basis(y_);
        gamma_pows_.push_back(sd.omega);
        for (int i = 1; i < d_; ++i) gamma_pows_.push_back(gamma_pows_.back() * gamma_);
        if (gamma_pows_.back() * gamma_ != sd.omega) throw error("ComponentIso: gamma^[C:H] differs from omega");
        c_.push_back(R_.one());
        for (int i = 0; i + 1 < d_; ++i) c_.push_back(R_.mul(c_.back(), phi(alpha_t_, i)));
        for (const auto& ci : c_) c_inv_.push_back(R_.inverse(ci));
        set_normal_element(R_.normal_element(S_));
    }

    const ZGRing& group_ring() const { return Z_; }
    const ShodaData& shoda() const { return sd_; }
    const GaloisRing& R() const { return R_; }
    const SubringDescriptor& S() const { return S_; }
    GaloisRing centre() const { return S_.sub(); }
    int d() const { return d_; }
    int l() const { return l_; }
    int y() const { return y_; }
    int size() const { return static_cast<int>(sd_.T.reps.size()) * d_; }
    const GrElem& beta() const { return beta_; }
    const GrElem& alpha_t() const { return alpha_t_; }
    const GrElem& gamma0_power() const { return s_; }
    const ZGElem& gamma() const { return gamma_; }
    const ZGElem& gamma_pow(int i) const { return gamma_pows_.at(static_cast<std::size_t>(((i % d_) + d_) % d_)); }

    /// phi^i = sigma^{l i} on R.
    GrElem phi(const GrElem& a, int i = 1) const { return R_.frobenius(a, l_ * (((i % d_) + d_) % d_)); }

    /// sum a_i zeta^i in Z_{p^r}G.
    ZGElem to_group(const GrElem& a) const {
        auto out = Z_.zero();
        for (int i = 0; i < R_.degree(); ++i)
            if (a.coeff(i) != 0) out = out + Z_.scale(zeta_pows_[static_cast<std::size_t>(i)], a.coeff(i));
        return out;
    }

    /// Inverse of to_group on Z_{p^r}H omega; throws precondition_error outside it.
    GrElem from_group(const ZGElem& z) const {
        const Zmod& Zb = Z_.base();
        const int o = R_.degree();
        std::vector<std::int64_t> v(static_cast<std::size_t>(o), 0);
        for (int i = 0; i < o; ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < o; ++j)
                acc = Zb.add(acc, Zb.mul(pivot_inv_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                                         z.coeff(pivot_rows_[static_cast<std::size_t>(j)])));
            v[static_cast<std::size_t>(i)] = acc;
        }
        auto a = R_.element(std::move(v));
        if (to_group(a) != z) throw precondition_error("from_group: element is not in Z_{p^r} H omega");
        return a;
    }

    /// Coordinates over S in the basis (phi^j(beta))_{j < d}.
    std::vector<GrElem> coords(const GrElem& a) const {
        const Zmod& Zb = Z_.base();
        const int o = R_.degree();
        auto Sg = S_.sub();
        std::vector<GrElem> out;
        for (int j = 0; j < d_; ++j) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(l_), 0);
            for (int k = 0; k < l_; ++k) {
                std::int64_t acc = 0;
                const auto row = static_cast<std::size_t>(j * l_ + k);
                for (int t = 0; t < o; ++t) acc = Zb.add(acc, Zb.mul(coord_inv_(row, static_cast<std::size_t>(t)), a.coeff(t)));
                c[static_cast<std::size_t>(k)] = acc;
            }
            out.push_back(Sg.element(std::move(c)));
        }
        return out;
    }

    /// x_i with m = sum_i x_i gamma^i for m in Z_{p^r}C omega.
    std::vector<GrElem> crossed_coords(const ZGElem& m) const {
        const FiniteGroup& G = Z_.group();
        std::vector<std::vector<std::int64_t>> parts(static_cast<std::size_t>(d_), std::vector<std::int64_t>(static_cast<std::size_t>(G.order()), 0));
        for (int g = 0; g < G.order(); ++g) {
            if (m.coeff(g) == 0) continue;
            const int i = coset_[static_cast<std::size_t>(g)];
            if (i < 0) throw precondition_error("crossed_coords: element is not supported on C");
            parts[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] = m.coeff(g);
        }
        std::vector<GrElem> out;
        for (int i = 0; i < d_; ++i) {
            auto mi = Z_.from_coeffs(std::move(parts[static_cast<std::size_t>(i)]));
            auto ri = from_group(mi * Z_.basis(G.inv(G.pow(y_, i))));
            out.push_back(R_.mul(ri, c_inv_[static_cast<std::size_t>(i)]));
        }
        return out;
    }

    /// psi(sum x_i gamma^i): column j holds the B-coordinates of sum_i x_i phi^{i+j}(beta).
    Matrix<GrElem> psi(const std::vector<GrElem>& x) const {
        auto Sg = S_.sub();
        Matrix<GrElem> M(static_cast<std::size_t>(d_), static_cast<std::size_t>(d_), Sg.zero());
        for (int j = 0; j < d_; ++j) {
            auto v = R_.zero();
            for (int i = 0; i < d_; ++i) v = R_.add(v, R_.mul(x[static_cast<std::size_t>(i)], phi(beta_, i + j)));
            auto c = coords(v);
            for (int i = 0; i < d_; ++i) M(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c[static_cast<std::size_t>(i)];
        }
        return M;
    }

    /// Image of a (times w) in M_{[G:H]}(S); index (u, i) -> u d + i.
    Matrix<GrElem> embed(const ZGElem& a) const {
        const FiniteGroup& G = Z_.group();
        const auto& reps = sd_.T.reps;
        const int n = size();
        Matrix<GrElem> M(static_cast<std::size_t>(n), static_cast<std::size_t>(n), S_.sub().zero());
        for (std::size_t u = 0; u < reps.size(); ++u) {
            auto left = sd_.omega * Z_.basis(reps[u]) * a;
            for (std::size_t v = 0; v < reps.size(); ++v) {
                auto block = left * Z_.basis(G.inv(reps[v])) * sd_.omega;
                if (Z_.is_zero(block)) continue;
                auto P = psi(crossed_coords(block));
                for (int i = 0; i < d_; ++i)
                    for (int j = 0; j < d_; ++j)
                        M(u * static_cast<std::size_t>(d_) + static_cast<std::size_t>(i), v * static_cast<std::size_t>(d_) + static_cast<std::size_t>(j)) =
                            P(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
        }
        return M;
    }

    /// Replaces beta; throws precondition_error when beta is not normal over S.
    void set_normal_element(const GrElem& beta) {
        if (!R_.is_normal_over(beta, S_)) throw precondition_error("ComponentIso: beta is not normal over S");
        beta_ = beta;
        const int o = R_.degree();
        Matrix<std::int64_t> B(static_cast<std::size_t>(o), static_cast<std::size_t>(o), 0);
        for (int j = 0; j < d_; ++j) {
            auto b = phi(beta_, j);
            for (int k = 0; k < l_; ++k) {
                auto v = R_.mul(S_.embed(S_.sub().xi_power(k)), b);
                for (int t = 0; t < o; ++t) B(static_cast<std::size_t>(t), static_cast<std::size_t>(j * l_ + k)) = v.coeff(t);
            }
        }
        coord_inv_ = inverse_matrix(Z_.base(), B);
    }

private:
    static std::vector<ZGElem> zeta_powers(const ZGRing& ring, const ShodaData& sd) {
        const int o = sd.o;
        std::vector<ZGElem> out{sd.omega};
        const auto z = ring.basis(sd.generator) * sd.omega;
        for (int i = 1; i <= o; ++i) out.push_back(out.back() * z);
        return out;
    }

    /// Monic mu of degree o with mu(zeta) = 0.
    static Poly minimal_polynomial(const ZGRing& ring, const ShodaData& sd, std::vector<ZGElem>& pows) {
        const int o = sd.o;
        const auto n = static_cast<std::size_t>(ring.dimension());
        Matrix<std::int64_t> A(n, static_cast<std::size_t>(o), 0);
        std::vector<std::int64_t> b(n);
        for (std::size_t g = 0; g < n; ++g) {
            for (int i = 0; i < o; ++i) A(g, static_cast<std::size_t>(i)) = pows[static_cast<std::size_t>(i)].coeff(static_cast<int>(g));
            b[g] = pows[static_cast<std::size_t>(o)].coeff(static_cast<int>(g));
        }
        auto c = solve_unit_pivot(ring.base(), A, b);
        std::vector<std::int64_t> mu(static_cast<std::size_t>(o) + 1);
        for (int i = 0; i < o; ++i) mu[static_cast<std::size_t>(i)] = ring.base().neg(c[static_cast<std::size_t>(i)]);
        mu[static_cast<std::size_t>(o)] = 1;
        pows.pop_back();
        return Poly(ring.base().prime_power(), mu);
    }

    /// Rows of the |G| x o matrix (zeta^i) carrying an invertible o x o minor.
    void select_pivots() {
        const Zmod& Zb = Z_.base();
        const int o = R_.degree();
        const auto n = static_cast<std::size_t>(Z_.dimension());
        Matrix<std::int64_t> A(n, static_cast<std::size_t>(o), 0);
        for (std::size_t g = 0; g < n; ++g)
            for (int i = 0; i < o; ++i) A(g, static_cast<std::size_t>(i)) = zeta_pows_[static_cast<std::size_t>(i)].coeff(static_cast<int>(g));
        const Matrix<std::int64_t> orig = A;
        std::vector<char> used(n, 0);
        for (int j = 0; j < o; ++j) {
            std::size_t piv = n;
            for (std::size_t g = 0; g < n && piv == n; ++g)
                if (!used[g] && Zb.is_unit(A(g, static_cast<std::size_t>(j)))) piv = g;
            if (piv == n) throw singular_system("ComponentIso: powers of zeta are not a basis (unreachable)");
            used[piv] = 1;
            pivot_rows_.push_back(static_cast<int>(piv));
            const auto iv = Zb.inverse(A(piv, static_cast<std::size_t>(j)));
            for (std::size_t g = 0; g < n; ++g) {
                if (g == piv || A(g, static_cast<std::size_t>(j)) == 0) continue;
                const auto f = Zb.mul(A(g, static_cast<std::size_t>(j)), iv);
                for (int t = 0; t < o; ++t)
                    A(g, static_cast<std::size_t>(t)) = Zb.sub(A(g, static_cast<std::size_t>(t)), Zb.mul(f, A(piv, static_cast<std::size_t>(t))));
            }
        }
        Matrix<std::int64_t> minor(static_cast<std::size_t>(o), static_cast<std::size_t>(o), 0);
        for (int i = 0; i < o; ++i)
            for (int t = 0; t < o; ++t)
                minor(static_cast<std::size_t>(i), static_cast<std::size_t>(t)) = orig(static_cast<std::size_t>(pivot_rows_[static_cast<std::size_t>(i)]), static_cast<std::size_t>(t));
        pivot_inv_ = inverse_matrix(Zb, minor);
    }

    ZGRing Z_;
    ShodaData sd_;
    std::vector<ZGElem> zeta_pows_;
    GaloisRing R_;
    SubringDescriptor S_;
    int d_ = 1, l_ = 1, y_ = 0;
    std::vector<int> pivot_rows_;
    Matrix<std::int64_t> pivot_inv_;
    std::vector<int> coset_;
    GrElem s_, alpha_t_, beta_;
    ZGElem gamma_;
    std::vector<ZGElem> gamma_pows_;
    std::vector<GrElem> c_, c_inv_;
    Matrix<std::int64_t> coord_inv_;
};

inline void attach_iso(Component& comp, const ZGRing& ring) {
    if (!comp.iso) comp.iso = std::make_shared<const ComponentIso>(ring, comp.shoda);
}

/// Image of a (times w) in M_{[G:H]}(S).
inline Matrix<GrElem> component_embed(const ZGElem& a, const Component& comp) {
    if (!comp.iso) throw precondition_error("component_embed: component has no crossed-product data (call attach_iso)");
    return comp.iso->embed(a);
}

/// One Component per strong Shoda pair and cyclotomic class with a distinct w_C.
inline std::vector<Component> decompose(const ZGRing& R, const std::vector<ShodaPair>& pairs) {
    const auto pp = R.base().prime_power();
    if (R.group().order() % pp.p == 0)
        throw coprimality_error("p = " + std::to_string(pp.p) + " divides |G| = " + std::to_string(R.group().order()), pp.p);
    std::vector<Component> out;
    std::map<int, GaloisRing> rings;
    int id = 0;
    for (auto& sd : shoda_components(R, pairs)) {
        auto it = rings.find(sd.l);
        if (it == rings.end()) it = rings.emplace(sd.l, GaloisRing(pp, sd.l)).first;
        const int n = sd.matrix_size(R.group());
        out.push_back(Component{id++, pp, n, sd.l, it->second, std::move(sd), nullptr});
    }
    return out;
}

inline std::vector<Component> decompose(const GroupPtr& G, std::int64_t p, int r) {
    ZGRing R(G, Zmod(p, r));
    if (G->order() % p == 0) throw coprimality_error("p = " + std::to_string(p) + " divides |G| = " + std::to_string(G->order()), p);
    return decompose(R, strong_shoda_pairs(G));
}

inline std::vector<ComponentShape> shapes_of(const std::vector<Component>& comps) {
    std::vector<ComponentShape> out;
    for (const auto& c : comps) out.push_back(c.shape());
    return merge_shapes(out);
}

struct PrimeDecomposition {
    ZGRing ring;
    std::vector<Component> components;
    PrimePower prime_power() const { return ring.base().prime_power(); }
};

struct Decomposition {
    GroupPtr group;
    std::int64_t n = 0;
    std::vector<PrimeDecomposition> primes;
};

/// CRT split of n followed by decompose at each prime power.
inline Decomposition decompose_modulus(const GroupPtr& G, std::int64_t n) {
    Decomposition dec;
    dec.group = G;
    dec.n = n;
    const auto factors = crt_split(n, *G);
    const auto pairs = strong_shoda_pairs(G);
    for (const auto& pp : factors) {
        ZGRing R(G, Zmod(pp));
        dec.primes.push_back({R, decompose(R, pairs)});
    }
    return dec;
}

/// Abelian shortcut: a_d = n_d / o_d(p) copies of GR(p^r, o_d(p)).
inline std::vector<ComponentShape> abelian_decompose(const FiniteGroup& G, std::int64_t p, int r) {
    if (!G.is_abelian()) throw precondition_error("abelian_decompose: group is not abelian");
    if (r < 1) throw precondition_error("abelian_decompose: r must be positive");
    if (G.order() % p == 0) throw coprimality_error("p divides |G|", p);
    std::map<int, int> count;
    for (int g = 0; g < G.order(); ++g) ++count[G.element_order(g)];
    std::vector<ComponentShape> out;
    for (const auto& [d, nd] : count) {
        const int od = static_cast<int>(multiplicative_order(p, d));
        out.push_back({1, od, nd / od});
    }
    return merge_shapes(out);
}

/// Partitions of n in decreasing lexicographic order.
inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Number of standard Young tableaux of shape lambda (hook-length formula).
inline std::int64_t hook_length_count(const std::vector<int>& lambda) {
    int n = 0;
    for (int v : lambda) n += v;
    std::vector<int> conj;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            if (static_cast<int>(conj.size()) <= j) conj.push_back(0);
            ++conj[static_cast<std::size_t>(j)];
        }
    // n! / prod hooks, accumulated as a ratio of integers kept exact by dividing late
    __int128 num = 1, den = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) den *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return static_cast<std::int64_t>(num / den);
}

/// Z_{p^r}S_n = sum over partitions of M_{f_lambda}(Z_{p^r}), for p > n.
inline std::vector<ComponentShape> symmetric_decompose(int n, std::int64_t p, int r) {
    if (n < 1 || n > 20) throw precondition_error("symmetric_decompose: n must lie in [1, 20]");
    if (r < 1) throw precondition_error("symmetric_decompose: r must be positive");
    if (p <= n) throw precondition_error("symmetric_decompose: requires p > n");
    std::vector<ComponentShape> out;
    for (const auto& lambda : partitions(n)) out.push_back({static_cast<int>(hook_length_count(lambda)), 1, 1});
    return merge_shapes(out);
}

/// A block of F_pG found without Shoda data: central primitive idempotent e, F_pGe = M_n(F_{p^m}).
struct WedderburnBlock {
    ZGElem idempotent;
    int matrix_size = 1;
    int degree = 1;
};

/// Primitive central idempotents of F_pG from the Frobenius-fixed part of the centre.
inline std::vector<WedderburnBlock> wedderburn_fp(const GroupPtr& Gp, std::int64_t p) {
    const FiniteGroup& G = *Gp;
    if (G.order() % p == 0) throw coprimality_error("p divides |G|", p);
    ZGRing F(Gp, Zmod(p, 1));
    const auto classes = conjugacy_classes(G);
    const std::size_t t = classes.size();
    std::vector<ZGElem> sums;
    for (const auto& c : classes) sums.push_back(F.sum_of(c));
    auto class_coords = [&](const ZGElem& z) {
        std::vector<std::int64_t> v;
        for (const auto& c : classes) v.push_back(z.coeff(c.front()));
        return v;
    };
    Matrix<std::int64_t> A(t, t, 0);
    for (std::size_t j = 0; j < t; ++j) {
        auto v = class_coords(F.pow(sums[j], p) - sums[j]);
        for (std::size_t i = 0; i < t; ++i) A(i, j) = v[i];
    }
    std::vector<ZGElem> fixed;
    for (const auto& v : nullspace_mod_p(A, p)) {
        auto z = F.zero();
        for (std::size_t j = 0; j < t; ++j)
            if (v[j]) z = z + F.scale(sums[j], v[j]);
        fixed.push_back(z);
    }
    std::vector<ZGElem> idem{F.one()};
    for (const auto& z : fixed) {
        std::vector<ZGElem> next;
        for (const auto& e : idem) {
            const auto ze = z * e;
            for (std::int64_t lam = 0; lam < p; ++lam) {
                auto f = e - F.pow(ze - F.scale(e, lam), p - 1) * e;
                if (!F.is_zero(f)) next.push_back(f);
            }
        }
        idem = std::move(next);
    }
    std::vector<WedderburnBlock> out;
    for (const auto& e : idem) {
        std::vector<std::vector<std::int64_t>> centre_rows, full_rows;
        for (const auto& s : sums) centre_rows.push_back((s * e).coeffs());
        for (int g = 0; g < G.order(); ++g) full_rows.push_back((F.basis(g) * e).coeffs());
        const int m = static_cast<int>(rank_mod_p(centre_rows, p));
        const int dim = static_cast<int>(rank_mod_p(full_rows, p));
        int n = 1;
        while (n * n * m < dim) ++n;
        if (n * n * m != dim) throw error("wedderburn_fp: block dimension is not n^2 m (unreachable)");
        out.push_back({e, n, m});
    }
    return out;
}

inline std::vector<ComponentShape> wedderburn_shapes(const GroupPtr& G, std::int64_t p) {
    std::vector<ComponentShape> out;
    for (const auto& b : wedderburn_fp(G, p)) out.push_back({b.matrix_size, b.degree, 1});
    return merge_shapes(out);
}

struct CheckResult {
    std::string name;
    std::int64_t p = 0;
    int r = 0;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

/// Dimension identity, idempotent relations and agreement of reduce(w) with the F_p idempotents.
inline VerificationReport verify_decomposition(const Decomposition& dec) {
    VerificationReport rep;
    for (const auto& pd : dec.primes) {
        const auto pp = pd.prime_power();
        const auto& R = pd.ring;
        auto add = [&](std::string name, bool ok, std::string detail) { rep.checks.push_back({std::move(name), pp.p, pp.r, ok, std::move(detail)}); };
        int dim = 0;
        for (const auto& c : pd.components) dim += c.matrix_size * c.matrix_size * c.degree;
        add("dimension", dim == dec.group->order(), std::to_string(dim) + " vs |G| = " + std::to_string(dec.group->order()));
        bool idem = true, central = true, orth = true, red = true;
        auto total = R.zero();
        for (std::size_t i = 0; i < pd.components.size(); ++i) {
            const auto& w = pd.components[i].idempotent();
            idem = idem && R.is_idempotent(w);
            central = central && R.is_central(w);
            red = red && reduce_mod_p(w) == pd.components[i].shoda.e;
            for (std::size_t j = 0; j < i; ++j) orth = orth && R.is_zero(w * pd.components[j].idempotent());
            total = total + w;
        }
        add("idempotent", idem, "w^2 = w");
        add("central", central, "w central");
        add("orthogonal", orth, "w_i w_j = 0 for i != j");
        add("sum", total == R.one(), "sum of w equals 1");
        add("reduction", red, "reduce(w) equals the sum of conjugates of epsilon");
    }
    return rep;
}

} // namespace zng
