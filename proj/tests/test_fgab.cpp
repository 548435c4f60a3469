#include "oracles.hpp"
#include "sphtd/error.hpp"
#include "sphtd/fgab.hpp"

#include <doctest.h>

#include <random>

using namespace sphtd;

namespace {

AbelianGroup group(std::size_t rank, std::vector<long> torsion)
{
    return AbelianGroup(rank, std::vector<Integer>(torsion.begin(), torsion.end()));
}

AbelianGroup z_mod(long m)
{
    return AbelianGroup::cyclic(m);
}

bool chain_ok(const IntMatrix& d)
{
    const std::size_t steps = std::min(d.rows(), d.cols());
    bool seen_zero = false;
    for (std::size_t t = 0; t < steps; ++t) {
        const Integer& x = d(t, t);
        if (x < 0)
            return false;
        if (x == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero)
            return false;
        if (t > 0 && !mpz_divisible_p(x.get_mpz_t(), d(t - 1, t - 1).get_mpz_t()))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form of small matrices")
{
    SUBCASE("1x1")
    {
        const SmithForm f = smith_normal_form(IntMatrix::from_rows({{6}}));
        CHECK(f.d == IntMatrix::from_rows({{6}}));
        CHECK(f.u == IntMatrix::identity(1));
        CHECK(f.v == IntMatrix::identity(1));
    }
    SUBCASE("2x2")
    {
        const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
        const SmithForm f = smith_normal_form(a);
        CHECK(f.d == IntMatrix::from_rows({{2, 0}, {0, 4}}));
        CHECK(f.u * a * f.v == f.d);
        CHECK(oracle::determinantal_invariant_factors(a) == std::vector<Integer>{2, 4});
    }
    SUBCASE("zero")
    {
        const SmithForm f = smith_normal_form(IntMatrix(2, 2));
        CHECK(f.d.is_zero());
    }
    SUBCASE("empty")
    {
        CHECK(invariant_factors(IntMatrix(0, 3)).empty());
        CHECK(kernel_cokernel(IntMatrix(0, 3)).kernel == AbelianGroup::free(3));
        CHECK(kernel_cokernel(IntMatrix(2, 0)).cokernel == AbelianGroup::free(2));
    }
}

TEST_CASE("smith normal form against oracles on random matrices")
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a = oracle::random_matrix(rng, r, c, 20);
        if (trial % 4 == 0 && r > 1) {
            // force rank deficiency: last row is a combination of the first two
            for (std::size_t j = 0; j < c; ++j)
                a(r - 1, j) = 3 * a(0, j) - (r > 2 ? a(1, j) : Integer(0));
        }
        CAPTURE(a);
        const SmithForm f = smith_normal_form(a);
        REQUIRE(f.u * a * f.v == f.d);
        CHECK(f.d.is_diagonal());
        CHECK(chain_ok(f.d));
        CHECK(abs(oracle::determinant(f.u)) == 1);
        CHECK(abs(oracle::determinant(f.v)) == 1);
        CHECK(invariant_factors(a) == oracle::determinantal_invariant_factors(a));
        CHECK(kernel_cokernel(a).kernel.rank() == c - oracle::rational_rank(a));
    }
}

TEST_CASE("kernel and cokernel")
{
    SUBCASE("multiplication by 6")
    {
        const KernelCokernel kc = kernel_cokernel(IntMatrix::from_rows({{6}}));
        CHECK(kc.kernel.is_zero());
        CHECK(kc.cokernel == z_mod(6));
    }
    SUBCASE("zero map")
    {
        const KernelCokernel kc = kernel_cokernel(IntMatrix::from_rows({{0}}));
        CHECK(kc.kernel == AbelianGroup::free(1));
        CHECK(kc.cokernel == AbelianGroup::free(1));
    }
    SUBCASE("diag(2,3)")
    {
        const KernelCokernel kc = kernel_cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}}));
        CHECK(kc.kernel.is_zero());
        CHECK(kc.cokernel == z_mod(6));
    }
}

TEST_CASE("cokernel agrees with hom counting")
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> dim(1, 2);
    std::uniform_int_distribution<std::size_t> src(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix f = oracle::random_matrix(rng, dim(rng), src(rng), 4);
        CAPTURE(f);
        // |coker| divides a 2x2 minor bounded by 32, so factors <= 32 suffice
        CHECK(kernel_cokernel(f).cokernel == oracle::cokernel_by_hom_counting(f, 64, 32));
    }
}

TEST_CASE("direct sums")
{
    CHECK(direct_sum({z_mod(4), z_mod(6)}) == group(0, {2, 12}));
    CHECK(direct_sum({AbelianGroup::free(1), z_mod(6)}) == group(1, {6}));
    CHECK(direct_sum(std::span<const AbelianGroup>{}).is_zero());
    CHECK(z_mod(0) == AbelianGroup::free(1));
    CHECK(z_mod(-1).is_zero());
    CHECK(z_mod(-6) == z_mod(6));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> order(0, 40);
    std::uniform_int_distribution<int> count(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<AbelianGroup> parts;
        for (int i = count(rng); i > 0; --i)
            parts.push_back(z_mod(order(rng)));
        const AbelianGroup sum = direct_sum(parts);
        CHECK(sum == oracle::direct_sum_by_primary_parts(parts));
        std::shuffle(parts.begin(), parts.end(), rng);
        CHECK(direct_sum(parts) == sum);
    }
}

TEST_CASE("isomorphism and normal form")
{
    std::vector<Integer> orders{4, 6};
    CHECK(is_isomorphic(group(0, {2, 12}), AbelianGroup::from_orders(0, orders)));
    CHECK_FALSE(is_isomorphic(AbelianGroup::free(1), AbelianGroup()));
    CHECK(is_isomorphic(z_mod(6), z_mod(6)));
    CHECK(group(2, {2, 12}).to_string() == "Z^2 + Z_2 + Z_12");
    CHECK(AbelianGroup().to_string() == "0");
    CHECK_THROWS_AS(group(0, {4, 6}), Error);
    CHECK_THROWS_AS(group(0, {1}), Error);
}
