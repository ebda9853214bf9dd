#include <zng/decomp.hpp>
#include <zng/group_library.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace zng;

namespace {

using Shapes = std::vector<ComponentShape>;

/// Invariant-factor lists of all abelian groups of order n.
std::vector<std::vector<int>> abelian_invariants(int n) {
    std::vector<std::vector<int>> out{{}};
    for (auto [q, e] : factorize(n)) {
        std::vector<std::vector<int>> next;
        for (const auto& lambda : partitions(e))
            for (const auto& base : out) {
                auto v = base;
                for (int part : lambda) v.push_back(static_cast<int>(ipow(q, part)));
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

/// Number of standard Young tableaux by direct enumeration.
std::int64_t count_tableaux(std::vector<int> shape) {
    int total = 0;
    for (int v : shape) total += v;
    if (total == 0) return 1;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        // remove a corner box holding the largest entry
        const bool corner = shape[i] > 0 && (i + 1 == shape.size() || shape[i + 1] < shape[i]);
        if (!corner) continue;
        --shape[i];
        count += count_tableaux(shape);
        ++shape[i];
    }
    return count;
}

ZGElem random_elem(const ZGRing& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(0, R.base().modulus() - 1);
    std::vector<std::int64_t> c(static_cast<std::size_t>(R.dimension()));
    for (auto& v : c) v = d(rng);
    return R.from_ints(c);
}

Matrix<GrElem> matmul_gr(const GaloisRing& S, const Matrix<GrElem>& A, const Matrix<GrElem>& B) {
    Matrix<GrElem> C(A.rows(), B.cols(), S.zero());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            auto acc = S.zero();
            for (std::size_t k = 0; k < A.cols(); ++k) acc = acc + A(i, k) * B(k, j);
            C(i, j) = acc;
        }
    return C;
}

} // namespace

TEST(Decomp, CrtSplit) {
    auto V = abelian_group({5, 5});
    EXPECT_EQ(crt_split(36, *V), (std::vector<PrimePower>{PrimePower(2, 2), PrimePower(3, 2)}));
    EXPECT_EQ(crt_split(27, *V), (std::vector<PrimePower>{PrimePower(3, 3)}));
    EXPECT_EQ(crt_split(6, *cyclic_group(5)), (std::vector<PrimePower>{PrimePower(2, 1), PrimePower(3, 1)}));
    try {
        crt_split(30, *V);
        FAIL() << "expected coprimality_error";
    } catch (const coprimality_error& e) {
        EXPECT_EQ(e.prime(), 5);
    }
    EXPECT_THROW(crt_split(1, *V), precondition_error);
}

TEST(Decomp, C5xC5Modulo36) {
    auto V = abelian_group({5, 5});
    auto dec = decompose_modulus(V, 36);
    ASSERT_EQ(dec.primes.size(), 2u);
    for (const auto& pd : dec.primes) EXPECT_EQ(shapes_of(pd.components), (Shapes{{1, 1, 1}, {1, 4, 6}}));
    EXPECT_EQ(dec.primes[0].prime_power(), PrimePower(2, 2));
    EXPECT_EQ(dec.primes[1].prime_power(), PrimePower(3, 2));
    auto rep = verify_decomposition(dec);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(abelian_decompose(*V, 2, 2), (Shapes{{1, 1, 1}, {1, 4, 6}}));
    EXPECT_EQ(abelian_decompose(*V, 3, 2), (Shapes{{1, 1, 1}, {1, 4, 6}}));
}

TEST(Decomp, SmallCases) {
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(shapes_of(decompose(cyclic_group(5), 2, r)), (Shapes{{1, 1, 1}, {1, 4, 1}}));
    EXPECT_EQ(shapes_of(decompose(cyclic_group(1), 7, 2)), (Shapes{{1, 1, 1}}));
    EXPECT_EQ(abelian_decompose(*cyclic_group(1), 7, 2), (Shapes{{1, 1, 1}}));
    auto es = decompose(extraspecial27(), 2, 3);
    EXPECT_EQ(shapes_of(es), (Shapes{{1, 1, 1}, {1, 2, 4}, {3, 2, 1}}));
    EXPECT_THROW(decompose(group_by_name("s3"), 3, 1), coprimality_error);
    EXPECT_THROW(decompose(group_by_name("sl23"), 5, 1), not_strongly_monomial);
    EXPECT_THROW(abelian_decompose(*group_by_name("s3"), 5, 1), precondition_error);
}

TEST(Decomp, AbelianShortcutAgrees) {
    for (int n = 1; n <= 50; ++n)
        for (const auto& inv : abelian_invariants(n)) {
            auto G = abelian_group(inv);
            for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
                if (n % p == 0) continue;
                EXPECT_EQ(shapes_of(decompose(G, p, r)), abelian_decompose(*G, p, r)) << n << " p=" << p << " r=" << r;
            }
        }
}

TEST(Decomp, SymmetricShortcut) {
    EXPECT_EQ(symmetric_decompose(3, 5, 2), (Shapes{{1, 1, 2}, {2, 1, 1}}));
    EXPECT_EQ(symmetric_decompose(4, 5, 1), (Shapes{{1, 1, 2}, {2, 1, 1}, {3, 1, 2}}));
    EXPECT_EQ(symmetric_decompose(1, 2, 3), (Shapes{{1, 1, 1}}));
    EXPECT_THROW(symmetric_decompose(4, 3, 1), precondition_error);
    EXPECT_THROW(symmetric_decompose(3, 3, 1), precondition_error);
    std::int64_t fact = 1;
    for (int n = 1; n <= 8; ++n) {
        fact *= n;
        std::int64_t sum = 0;
        for (const auto& lambda : partitions(n)) {
            const auto f = hook_length_count(lambda);
            EXPECT_EQ(f, count_tableaux(lambda));
            sum += f * f;
        }
        EXPECT_EQ(sum, fact);
    }
    EXPECT_EQ(shapes_of(decompose(symmetric_group(3), 5, 2)), symmetric_decompose(3, 5, 2));
    EXPECT_EQ(shapes_of(decompose(symmetric_group(4), 5, 2)), symmetric_decompose(4, 5, 2));
    EXPECT_EQ(shapes_of(decompose(symmetric_group(4), 7, 1)), symmetric_decompose(4, 7, 1));
}

TEST(Decomp, GenericRouteAgrees) {
    for (const auto& entry : group_corpus()) {
        auto G = entry.build();
        std::vector<ShodaPair> pairs;
        const bool monomial = entry.key != "sl23";
        if (monomial) pairs = strong_shoda_pairs(G);
        for (std::int64_t p : {2, 3, 5, 7}) {
            if (G->order() % p == 0) continue;
            auto generic = wedderburn_shapes(G, p);
            EXPECT_EQ(shape_dimension(generic), G->order()) << entry.key;
            if (monomial) {
                EXPECT_EQ(generic, shapes_of(decompose(ZGRing(G, Zmod(p, 1)), pairs))) << entry.key << " p=" << p;
            }
        }
    }
    // SL(2,3) over F_5: zeta_3 is not in F_5, so conjugate blocks merge: 1 + 2 + 4 + 8 + 9 = 24
    EXPECT_EQ(wedderburn_shapes(group_by_name("sl23"), 5), (Shapes{{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}, {3, 1, 1}}));
    EXPECT_EQ(wedderburn_shapes(group_by_name("sl23"), 7), (Shapes{{1, 1, 3}, {2, 1, 3}, {3, 1, 1}}));
}

TEST(Decomp, VerificationReport) {
    auto dec = decompose_modulus(extraspecial27(), 8);
    auto rep = verify_decomposition(dec);
    EXPECT_TRUE(rep.passed());
    int dim = 0;
    for (const auto& c : dec.primes[0].components) dim += c.matrix_size * c.matrix_size * c.degree;
    EXPECT_EQ(dim, 27);
    // negative control: replace one idempotent by its sum with another
    auto bad = dec;
    auto& comps = bad.primes[0].components;
    comps[1].shoda.w = comps[1].shoda.w + comps[2].shoda.w;
    auto bad_rep = verify_decomposition(bad);
    EXPECT_FALSE(bad_rep.passed());
    for (const auto& c : bad_rep.checks)
        if (c.name == "orthogonal") {
            EXPECT_FALSE(c.passed);
        }
}

TEST(Decomp, ScaledIdempotentsNotUnits) {
    for (auto [key, p, r] : std::vector<std::tuple<std::string, int, int>>{{"es27", 2, 3}, {"s3", 5, 2}, {"c5", 2, 2}}) {
        ZGRing R(group_by_name(key), Zmod(p, r));
        for (const auto& c : decompose(R, strong_shoda_pairs(R.group_ptr()))) {
            auto pw = R.scale(c.idempotent(), p);
            EXPECT_FALSE(R.is_zero(pw));
            EXPECT_FALSE(R.is_unit(pw + R.one() - c.idempotent()));
        }
    }
}

TEST(ComponentIsoTest, HomomorphismAndSurjectivity) {
    std::mt19937_64 rng(11);
    const std::vector<std::tuple<std::string, int, int>> cases{{"s3", 5, 2}, {"es27", 2, 3}, {"d8", 3, 2}, {"q8", 3, 2},
                                                               {"a4", 5, 1}, {"c7:c3", 2, 2}, {"s4", 5, 1}, {"d10", 3, 2},
                                                               {"c3:c8", 5, 1}, {"c5", 2, 3}};
    for (const auto& [key, p, r] : cases) {
        ZGRing R(group_by_name(key), Zmod(p, r));
        auto comps = decompose(R, strong_shoda_pairs(R.group_ptr()));
        for (auto& comp : comps) {
            attach_iso(comp, R);
            const auto& iso = *comp.iso;
            auto S = iso.centre();
            EXPECT_EQ(S, comp.ring);
            const int n = iso.size();
            ASSERT_EQ(n, comp.matrix_size);
            const auto& w = comp.idempotent();
            auto I = component_embed(w, comp);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) EXPECT_EQ(I(i, j), i == j ? S.one() : S.zero()) << key;
            EXPECT_EQ(iso.gamma_pow(iso.d()), comp.shoda.omega);
            for (int t = 0; t < 6; ++t) {
                auto a = random_elem(R, rng), b = random_elem(R, rng);
                EXPECT_EQ(component_embed(a * b, comp), matmul_gr(S, component_embed(a, comp), component_embed(b, comp))) << key;
                auto A = component_embed(a, comp), B = component_embed(b, comp);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) A(i, j) = A(i, j) + B(i, j);
                EXPECT_EQ(component_embed(a + b, comp), A);
            }
            // images of group elements span M_n(S) over Z/p^r
            std::vector<std::vector<std::int64_t>> rows;
            for (int g = 0; g < R.dimension(); ++g) {
                auto M = component_embed(R.basis(g), comp);
                std::vector<std::int64_t> flat;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < S.degree(); ++k) flat.push_back(M(i, j).coeff(k));
                rows.push_back(flat);
            }
            EXPECT_EQ(static_cast<int>(rank_mod_p(rows, p)), n * n * S.degree()) << key;
        }
    }
    Component bare = decompose(cyclic_group(5), 2, 2)[0];
    EXPECT_THROW(component_embed(ZGRing(cyclic_group(5), Zmod(2, 2)).one(), bare), precondition_error);
}
