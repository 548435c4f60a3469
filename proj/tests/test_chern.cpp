#include "sphtd/chern.hpp"
#include "sphtd/error.hpp"

#include <doctest.h>

#include <random>

using namespace sphtd;

namespace {

Rational factorial(int n)
{
    Rational f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

/* c_j = e_j(roots) and s_n = sum roots^n, computed directly from the roots. */
void symmetric_from_roots(const std::vector<Rational>& roots, std::size_t length, std::vector<Rational>& c,
                          std::vector<Rational>& s)
{
    std::vector<Rational> e(roots.size() + 1, 0);
    e[0] = 1;
    for (const Rational& r : roots)
        for (std::size_t j = roots.size(); j >= 1; --j)
            e[j] += r * e[j - 1];
    c.assign(e.begin() + 1, e.end());
    s.assign(length, 0);
    for (std::size_t n = 1; n <= length; ++n)
        for (const Rational& r : roots) {
            Rational p = 1;
            for (std::size_t i = 0; i < n; ++i)
                p *= r;
            s[n - 1] += p;
        }
}

FormalElement random_monomial(std::mt19937_64& rng, int k, int max_degree)
{
    std::uniform_int_distribution<int> idx(1, 4);
    std::uniform_int_distribution<int> coin(0, 2);
    for (;;) {
        Monomial m;
        m.eta = coin(rng) == 0;
        for (int i = coin(rng); i > 0; --i)
            m.s.push_back(idx(rng));
        for (int i = coin(rng); i > 0; --i)
            m.omega.push_back(idx(rng));
        FormalElement x = FormalElement::monomial(m, 1);
        if (!x.is_zero() && m.degree(k) <= max_degree)
            return x;
    }
}

int parity(const FormalElement& x, int k)
{
    return x.terms().begin()->first.degree(k) % 2;
}

}  // namespace

TEST_CASE("lambda")
{
    CHECK(lambda_coeff(2, 1) == 2);
    CHECK(lambda_coeff(3, 2) == -6);
    for (int k = 1; k <= 6; ++k)
        CHECK(lambda_coeff(k, k) == (k % 2 == 1 ? 1 : -1) * factorial(k));
    CHECK_THROWS_AS(lambda_coeff(1, 2), Error);
}

TEST_CASE("graded algebra")
{
    const FormalElement w1 = FormalElement::omega(1), w2 = FormalElement::omega(2);
    CHECK((w1 * w1).is_zero());
    CHECK(w1 * w2 == Rational(-1) * (w2 * w1));
    CHECK((FormalElement::eta() * FormalElement::eta()).is_zero());
    CHECK(FormalElement::s(1) * FormalElement::s(2) == FormalElement::s(2) * FormalElement::s(1));
    CHECK(FormalElement::eta() * w1 == Rational(-1) * (w1 * FormalElement::eta()));
}

TEST_CASE("differential")
{
    ChernContext k1{1, 12, 0}, k2{2, 12, 0};
    const FormalElement eta = FormalElement::eta();
    CHECK(differential(FormalElement::s(2), k1) == Rational(2) * (eta * FormalElement::s(1)));
    CHECK(differential(FormalElement::s(2), k2).is_zero());
    CHECK(differential(FormalElement::s(1) * FormalElement::s(2), k1) ==
          Rational(2) * (eta * FormalElement::s(1) * FormalElement::s(1)));
    CHECK(differential(eta, k1).is_zero());

    ChernContext with_index{1, 12, 3};
    CHECK(differential(FormalElement::s(1), with_index) == Rational(3) * eta);
}

TEST_CASE("Leibniz rule on random monomials")
{
    std::mt19937_64 rng(11);
    for (int k = 1; k <= 3; ++k) {
        const ChernContext ctx{k, 40, 0};
        for (int trial = 0; trial < 150; ++trial) {
            const FormalElement x = random_monomial(rng, k, 16);
            const FormalElement y = random_monomial(rng, k, 16);
            const Rational sign = parity(x, k) ? -1 : 1;
            CAPTURE(x.to_string());
            CAPTURE(y.to_string());
            CHECK(differential(x * y, ctx) == differential(x, ctx) * y + sign * (x * differential(y, ctx)));
        }
    }
}

TEST_CASE("d squared")
{
    CHECK(d_squared_check({1, 12, 0}));
    CHECK(d_squared_check({2, 12, 0}));
    CHECK(d_squared_check({3, 20, 0}));
}

TEST_CASE("even Chern character and its closing sign")
{
    CHECK(chern_even({1, 4, 0}) == FormalElement::s(1) + Rational(1, 2) * FormalElement::s(2));
    CHECK(chern_even({1, 2, 0}) == FormalElement::s(1));
    CHECK(chern_even({1, 0, 0}).is_zero());

    for (int k = 1; k <= 4; ++k) {
        const ChernContext ctx = ChernContext::with_default_truncation(k);
        const int eps = twisted_closure_sign(ctx);
        CHECK(eps == (k % 2 == 1 ? 1 : -1));
        const FormalElement ch = chern_even(ctx);
        const FormalElement residual =
            differential(ch, ctx) - Rational(eps) * (FormalElement::eta() * ch).truncated(ctx.N, k);
        CHECK(residual.is_zero());
    }
    CHECK_THROWS_AS(twisted_closure_sign({1, 3, 0}), Error);
}

TEST_CASE("odd series")
{
    const Rational one = 1;
    const OddSeriesSolution k1 = odd_series_coefficients({1, 12, 0}, 1, std::span(&one, 1));
    REQUIRE(k1.coefficients.size() == 6);
    for (std::size_t i = 0; i < k1.coefficients.size(); ++i)
        CHECK(k1.coefficients[i] == 1 / factorial(static_cast<int>(i) + 1));
    CHECK(k1.closes);

    const std::vector<Rational> seeds{1, 1};
    const OddSeriesSolution k2 = odd_series_coefficients({2, 14, 0}, -1, seeds);
    CHECK(k2.coefficients[2] == Rational(1, 6));

    for (int k = 1; k <= 4; ++k) {
        const ChernContext ctx = ChernContext::with_default_truncation(k);
        std::vector<Rational> fact_seeds;
        for (int m = 1; m <= k; ++m)
            fact_seeds.push_back(1 / factorial(m));
        const OddSeriesSolution sol = odd_series_coefficients(ctx, twisted_closure_sign(ctx), fact_seeds);
        for (std::size_t i = 0; i < sol.coefficients.size(); ++i)
            CHECK(sol.coefficients[i] == 1 / factorial(static_cast<int>(i) + 1));
        CHECK(sol.closes);
    }
}

TEST_CASE("Newton identities")
{
    const std::vector<Rational> c1{Rational(3)};
    const auto s1 = newton_c_to_s(std::span<const Rational>(c1), 5);
    for (std::size_t n = 0; n < 5; ++n) {
        Rational p = 1;
        for (std::size_t i = 0; i <= n; ++i)
            p *= 3;
        CHECK(s1[n] == p);
    }

    const std::vector<Rational> c2{Rational(5), Rational(7)};
    CHECK(newton_c_to_s(std::span<const Rational>(c2), 2)[1] == 25 - 2 * 7);

    for (int k = 1; k <= 5; ++k) {
        std::vector<Rational> c(k, 0);
        c[k - 1] = 2;
        const auto s = newton_c_to_s(std::span<const Rational>(c), k);
        for (int j = 0; j + 1 < k; ++j)
            CHECK(s[j] == 0);
        CHECK(s[k - 1] == (k % 2 == 1 ? 1 : -1) * k * 2);
    }

    const std::vector<Rational> s_in{2, 2};
    CHECK(newton_s_to_c(s_in) == std::vector<Rational>{2, 1});

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> roots;
        for (int i = 0; i < 10; ++i)
            roots.push_back(random_rational(rng));
        std::vector<Rational> c, s;
        symmetric_from_roots(roots, 10, c, s);
        CHECK(newton_c_to_s(std::span<const Rational>(c)) == s);
        CHECK(newton_s_to_c(s) == c);

        std::vector<Rational> random_c;
        for (int i = 0; i < 10; ++i)
            random_c.push_back(random_rational(rng));
        CHECK(newton_s_to_c(newton_c_to_s(std::span<const Rational>(random_c))) == random_c);
    }
}

TEST_CASE("tensor power sums")
{
    const std::vector<Rational> sE{3, 5, 7, 11}, sF{2, -1, 4, 9};
    CHECK(tensor_power_sums<Rational>(sE, sF, 0) == 6);
    CHECK(tensor_power_sums<Rational>(sE, sF, 1) == Rational(2 * 5 + 3 * -1));
    CHECK(tensor_power_sums<Rational>(sE, sF, 2) == Rational(7 * 2 + 2 * 5 * -1 + 3 * 4));
    for (int n = 0; n <= 3; ++n)
        CHECK(tensor_power_sums<Rational>(sE, sF, n) == tensor_power_sums<Rational>(sF, sE, n));

    // line bundles: s_n(L1 (x) L2) = (x1 + x2)^n
    const std::vector<Rational> l1{1, 2, 4, 8}, l2{1, 3, 9, 27};
    CHECK(tensor_power_sums<Rational>(l1, l2, 3) == 125);
}

TEST_CASE("special tensor coefficient")
{
    CHECK(special_tensor_coefficient(2, 5) == -20);
    CHECK(special_tensor_coefficient(1, 1) == 1);
    CHECK(special_tensor_coefficient(1, 3) == 3);
    for (int k = 1; k <= 5; ++k)
        for (int n = k; n <= 10; ++n) {
            const Rational expected = (k % 2 == 1 ? 1 : -1) * factorial(n) / (factorial(k - 1) * factorial(n - k));
            CHECK(special_tensor_coefficient(k, n) == expected);
        }
    CHECK_THROWS_AS(special_tensor_coefficient(3, 2), Error);
}

TEST_CASE("clutching")
{
    const ChernContext k1{1, 12, 0};
    const ClutchingImage a = clutching_pullback(FormalElement::s(2), k1);
    CHECK(a.fibre == FormalElement::s(2));
    CHECK(a.w_part == Rational(2) * FormalElement::s(1));

    for (int k = 1; k <= 4; ++k) {
        const ClutchingImage b = clutching_pullback(FormalElement::s(k), {k, 4 * k + 6, 0});
        CHECK(b.fibre == FormalElement::s(k));
        CHECK(b.w_part.is_zero());
    }

    const ClutchingImage twice = clutching_pullback(a, k1);
    CHECK(twice.fibre == FormalElement::s(2));
    // the fibre contributes dx once more; the existing w-part is fixed since w^2 = 0
    CHECK(twice.w_part - a.w_part == a.w_part);
    CHECK(clutching_pullback(ClutchingImage{FormalElement(), a.w_part}, k1) == ClutchingImage{FormalElement(), a.w_part});

    CHECK_THROWS_AS(clutching_pullback(FormalElement::eta(), k1), Error);
}
