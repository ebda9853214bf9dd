#include <zng/linalg.hpp>
#include <zng/ring_core.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace zng;

namespace {

// Brute-force irreducibility: no monic factor of degree 1..deg/2 divides f.
bool irreducible_oracle(const Poly& f) {
    const PrimePower fp = f.context();
    const int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        const std::int64_t count = ipow(fp.p, d);
        for (std::int64_t code = 0; code < count; ++code) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
            std::int64_t x = code;
            for (int i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = x % fp.p;
                x /= fp.p;
            }
            c.back() = 1;
            if (poly_mod(f, Poly(fp, c)).is_zero()) return false;
        }
    }
    return true;
}

} // namespace

TEST(PrimePower, Construction) {
    PrimePower pp(2, 3);
    EXPECT_EQ(pp.modulus, 8);
    EXPECT_THROW(PrimePower(4, 1), precondition_error);
    EXPECT_THROW(PrimePower(2, 0), precondition_error);
    EXPECT_THROW(PrimePower(2, 40), precondition_error);
}

TEST(Zmod, Inverse) {
    Zmod z(2, 3);
    EXPECT_EQ(z.inverse(3), 3);
    EXPECT_EQ(z.inverse(1), 1);
    EXPECT_THROW(z.inverse(4), not_a_unit);
    Zmod z9(3, 2);
    EXPECT_EQ(z9.inverse(2), 5);
    EXPECT_EQ(z9.valuation(0), 2);
    EXPECT_EQ(z9.valuation(3), 1);
}

TEST(Zmod, RingAxiomsRandom) {
    std::mt19937_64 rng(7);
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
        Zmod z(p, r);
        std::uniform_int_distribution<std::int64_t> dist(0, z.modulus() - 1);
        for (int i = 0; i < 1000; ++i) {
            auto a = dist(rng), b = dist(rng), c = dist(rng);
            EXPECT_EQ(z.mul(z.mul(a, b), c), z.mul(a, z.mul(b, c)));
            EXPECT_EQ(z.add(z.add(a, b), c), z.add(a, z.add(b, c)));
            EXPECT_EQ(z.mul(a, z.add(b, c)), z.add(z.mul(a, b), z.mul(a, c)));
            EXPECT_EQ(z.add(a, z.neg(a)), 0);
            if (z.is_unit(a)) {
                EXPECT_EQ(z.mul(a, z.inverse(a)), 1);
            }
        }
    }
}

TEST(Poly, RingAxiomsRandom) {
    std::mt19937_64 rng(11);
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}}) {
        PrimePower pp(p, r);
        std::uniform_int_distribution<std::int64_t> dist(0, pp.modulus - 1);
        auto random_poly = [&] {
            std::vector<std::int64_t> c(4);
            for (auto& v : c) v = dist(rng);
            return Poly(pp, c);
        };
        for (int i = 0; i < 1000; ++i) {
            auto a = random_poly(), b = random_poly(), c = random_poly();
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_TRUE((a + (-a)).is_zero());
            EXPECT_EQ(a - b + b, a);
        }
    }
}

TEST(Poly, ReduceModP) {
    PrimePower z8(2, 3);
    auto f = Poly(z8, {2, -1, -1});
    EXPECT_EQ(reduce_mod_p(f), Poly(PrimePower(2, 1), {0, 1, 1}));
    EXPECT_TRUE(reduce_mod_p(Poly(z8)).is_zero());
    auto g = reduce_mod_p(Poly(z8, {4, 2}));
    EXPECT_TRUE(g.is_zero());
    EXPECT_EQ(g.degree(), -1);
}

TEST(Poly, DivmodRoundTrip) {
    PrimePower pp(3, 2);
    Poly a(pp, {1, 2, 3, 4, 5, 6});
    Poly b(pp, {2, 0, 1});
    auto [q, rem] = divmod_monic(a, b);
    EXPECT_EQ(q * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
}

TEST(Irreducible, SpecExamples) {
    PrimePower f2(2, 1);
    EXPECT_TRUE(is_irreducible_fp(Poly(f2, {1, 1, 1})));
    EXPECT_FALSE(is_irreducible_fp(Poly(f2, {1, 0, 1})));
    EXPECT_TRUE(is_irreducible_fp(Poly(f2, {1, 1, 0, 0, 1})));
    EXPECT_THROW(is_irreducible_fp(Poly(PrimePower(3, 1), {1, 1, 2})), precondition_error);
}

TEST(Irreducible, AgreesWithBruteForce) {
    for (int p : {2, 3, 5}) {
        PrimePower fp(p, 1);
        for (int deg = 1; deg <= (p == 2 ? 8 : 4); ++deg) {
            const std::int64_t count = ipow(p, deg);
            for (std::int64_t code = 0; code < count; ++code) {
                std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1, 0);
                std::int64_t x = code;
                for (int i = 0; i < deg; ++i) {
                    c[static_cast<std::size_t>(i)] = x % p;
                    x /= p;
                }
                c.back() = 1;
                Poly f(fp, c);
                ASSERT_EQ(is_irreducible_fp(f), irreducible_oracle(f)) << f.to_string();
            }
        }
    }
}

TEST(Irreducible, RabinMatchesScan) {
    PrimePower f2(2, 1);
    for (std::int64_t code = 0; code < 64; ++code) {
        auto f = detail::monic_from_code(f2, 6, code);
        EXPECT_EQ(detail::irreducible_rabin(f), detail::irreducible_by_factor_scan(f)) << f.to_string();
    }
}

TEST(BasicIrreducible, CanonicalChoices) {
    EXPECT_EQ(find_basic_irreducible(PrimePower(2, 3), 1), Poly::x(PrimePower(2, 3)));
    EXPECT_EQ(find_basic_irreducible(PrimePower(2, 2), 4), Poly(PrimePower(2, 2), {1, 1, 0, 0, 1}));
    EXPECT_EQ(find_basic_irreducible(PrimePower(3, 2), 2), Poly(PrimePower(3, 2), {1, 0, 1}));
    EXPECT_EQ(find_basic_irreducible(PrimePower(2, 3), 2), Poly(PrimePower(2, 3), {1, 1, 1}));
}

TEST(BasicIrreducible, Property) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
        for (int m = 1; m <= 6; ++m) {
            if (ipow(p, m) > 200000) continue;
            auto f = find_basic_irreducible(PrimePower(p, r), m);
            EXPECT_TRUE(f.is_monic());
            EXPECT_EQ(f.degree(), m);
            EXPECT_TRUE(is_irreducible_fp(reduce_mod_p(f)));
            EXPECT_TRUE(irreducible_oracle(reduce_mod_p(f)));
        }
    }
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(2, 5), 4);
    EXPECT_EQ(multiplicative_order(2, 1), 1);
    EXPECT_EQ(multiplicative_order(2, 9), 6);
    EXPECT_THROW(multiplicative_order(3, 9), precondition_error);
}

TEST(MultiplicativeOrder, DividesPhiAndMatchesIteration) {
    for (std::int64_t d = 1; d <= 60; ++d)
        for (std::int64_t a = 1; a < d + 1; ++a) {
            if (std::gcd(a, d) != 1) continue;
            auto o = multiplicative_order(a, d);
            EXPECT_EQ(euler_phi(d) % o, 0);
            std::int64_t e = 1, x = a % d;
            while (x != 1 % d) {
                x = x * a % d;
                ++e;
            }
            EXPECT_EQ(o, e);
        }
}

TEST(Linalg, SolveAndInvertOverZ8) {
    Zmod z(2, 3);
    Matrix<std::int64_t> A(2, 2, 0);
    A(0, 0) = 2;
    A(0, 1) = 1;
    A(1, 0) = 1;
    A(1, 1) = 0;
    auto x = solve_unit_pivot(z, A, std::vector<std::int64_t>{5, 3});
    EXPECT_EQ(z.add(z.mul(2, x[0]), x[1]), 5);
    EXPECT_EQ(x[0], 3);
    auto inv = inverse_matrix(z, A);
    EXPECT_TRUE(matrices_equal(z, matmul(z, A, inv), identity_matrix(z, 2)));

    Matrix<std::int64_t> S(2, 2, 2);
    EXPECT_FALSE(is_invertible(z, S));
    EXPECT_THROW(solve_unit_pivot(z, S, std::vector<std::int64_t>{0, 0}), singular_system);
}

TEST(Linalg, RankModP) {
    EXPECT_EQ(rank_mod_p({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 7), 2u);
    EXPECT_EQ(rank_mod_p({{2, 0}, {0, 2}}, 2), 0u);
}

TEST(Linalg, NullspaceModP) {
    Matrix<std::int64_t> A(2, 3, 0);
    A(0, 0) = 1;
    A(0, 1) = 2;
    A(1, 2) = 3;
    auto ns = nullspace_mod_p(A, 5);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0], (std::vector<std::int64_t>{3, 1, 0}));
}

TEST(RingCore, CyclotomicFactors) {
    for (std::int64_t p : {2, 3, 5, 7}) {
        const PrimePower fp(p, 1);
        for (int k = 1; k <= 60; ++k) {
            if (k % p == 0) continue;
            const auto phi = cyclotomic_poly_fp(k, fp);
            EXPECT_EQ(phi.degree(), euler_phi(k));
            const int o = static_cast<int>(multiplicative_order(p, k));
            auto fs = equal_degree_factors(phi, o);
            EXPECT_EQ(static_cast<std::int64_t>(fs.size()) * o, euler_phi(k));
            Poly prod = Poly::constant(fp, 1);
            for (const auto& f : fs) {
                EXPECT_EQ(f.degree(), o);
                EXPECT_TRUE(is_irreducible_fp(f));
                prod = prod * f;
            }
            EXPECT_EQ(prod, phi) << "k=" << k << " p=" << p;
        }
    }
    // x^2 + x + 1 over F_2; x^4 + x^3 + x^2 + x + 1 stays irreducible over F_2
    EXPECT_EQ(cyclotomic_poly_fp(3, PrimePower(2, 1)), Poly(PrimePower(2, 1), {1, 1, 1}));
    EXPECT_EQ(equal_degree_factors(cyclotomic_poly_fp(5, PrimePower(2, 1)), 4).size(), 1u);
    // Phi_8 over F_3 splits into two quadratics
    EXPECT_EQ(equal_degree_factors(cyclotomic_poly_fp(8, PrimePower(3, 1)), 2).size(), 2u);
    // degree 42 over F_3 with 3^42 beyond 64 bits
    EXPECT_EQ(find_basic_irreducible(PrimePower(3, 2), 42).degree(), 42);
}
