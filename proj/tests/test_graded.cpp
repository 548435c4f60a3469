#include "sphtd/catalog.hpp"
#include "sphtd/error.hpp"
#include "sphtd/graded.hpp"
#include "sphtd/gysin.hpp"

#include <doctest.h>

using namespace sphtd;

namespace {

GradedGroup sphere(int dim)
{
    GradedGroup g = GradedGroup::zero(dim);
    g.set(0, AbelianGroup::free(1));
    g.set(dim, AbelianGroup::free(1));
    return g;
}

bool mentions(const std::vector<std::string>& lines, const std::string& needle)
{
    for (const auto& l : lines)
        if (l.find(needle) != std::string::npos)
            return true;
    return false;
}

}  // namespace

TEST_CASE("validate_base")
{
    CHECK(validate_base({"S6", 3, sphere(6)}).empty());

    GradedGroup disconnected = sphere(6);
    disconnected.set(0, AbelianGroup::free(2));
    const auto v = validate_base({"X", 3, disconnected});
    REQUIRE(v.size() == 1);
    CHECK(v.front() == "H^0 must be Z");

    GradedGroup lopsided = sphere(6);
    lopsided.set(2, AbelianGroup::free(1));
    CHECK(mentions(validate_base({"Y", 3, lopsided}), "duality violation at (2,4)"));

    CHECK_FALSE(validate_base({"S2", 1, sphere(2)}).empty());
    CHECK_FALSE(validate_base({"bad", 3, sphere(8)}).empty());

    for (const CatalogEntry& e : catalog())
        CHECK_MESSAGE(validate_base(e.base).empty(), e.base.name);
}

TEST_CASE("parity_parts")
{
    CHECK(parity_parts(sphere(6)) == ParityParts{AbelianGroup::free(2), AbelianGroup()});
    CHECK(parity_parts(GradedGroup::zero(5)) == ParityParts{});

    const GradedGroup hz = total_space_cohomology(BundleWithFlux(*find_base("S6"), 6, 0));
    const ParityParts p = parity_parts(hz);
    CHECK(p.even == direct_sum({AbelianGroup::free(1), AbelianGroup::cyclic(6)}));
    CHECK(p.odd == AbelianGroup::free(1));
}

TEST_CASE("twisted_cohomology")
{
    const GradedGroup s6 = total_space_cohomology(BundleWithFlux(*find_base("S6"), 6, 0));
    CHECK(twisted_cohomology(s6, 10) == ParityParts{AbelianGroup::cyclic(6), AbelianGroup::cyclic(10)});
    CHECK(twisted_cohomology(s6, 0) == parity_parts(s6));
    CHECK(twisted_cohomology(s6, -10) == twisted_cohomology(s6, 10));
    CHECK(twisted_cohomology(s6, 1).odd.is_zero());

    const GradedGroup s2s4 = total_space_cohomology(BundleWithFlux(*find_base("S2xS4"), 4, 0));
    const ParityParts p = twisted_cohomology(s2s4, 10);
    CHECK(p.even == direct_sum({AbelianGroup::cyclic(4), AbelianGroup::free(2)}));
    CHECK(p.odd == direct_sum({AbelianGroup::cyclic(10), AbelianGroup::free(2)}));

    GradedGroup bad = s6;
    bad.set(0, AbelianGroup::cyclic(2));
    try {
        twisted_cohomology(bad, 3);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeZeroNotZ);
    }
    bad = s6;
    bad.set(11, AbelianGroup());
    try {
        twisted_cohomology(bad, 3);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TopNotZ);
    }
}
