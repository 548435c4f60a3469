#include "sphtd/catalog.hpp"
#include "sphtd/commands.hpp"
#include "sphtd/json_util.hpp"

#include <doctest.h>

using namespace sphtd;
using nlohmann::json;

namespace {

void round_trips(const CommandResult& r)
{
    const json doc = to_document(r);
    CHECK(doc["command"] == command_name(r));
    // through text as well, to catch anything that only survives in memory
    CHECK(from_document(json::parse(doc.dump())) == r);
}

ErrorCode base_error(const json& doc)
{
    try {
        base_from_json(doc);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::BadArguments;
}

}  // namespace

TEST_CASE("documents round trip")
{
    round_trips(run_bundle_cohomology(*find_base("S6"), 6));
    round_trips(run_twisted(*find_base("S2xS4"), 4, 10));
    round_trips(run_twisted(*find_base("T6"), 2, 4));
    round_trips(run_tdual(*find_base("M8"), 5, 7));
    round_trips(run_tdual(*find_base("T6"), 2, 4));
    round_trips(run_chern_verify(1, 12));
    round_trips(run_chern_verify(2, 14));
}

TEST_CASE("large integers survive serialization")
{
    const Integer big("123456789012345678901234567890");
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_to_json(Integer(-6)) == json(-6));
    const AbelianGroup g = direct_sum({AbelianGroup::free(2), AbelianGroup::cyclic(big)});
    CHECK(group_from_json(group_to_json(g)) == g);
    round_trips(run_twisted(*find_base("S6"), big * 2, big));
}

TEST_CASE("base descriptions")
{
    for (const CatalogEntry& e : catalog())
        CHECK(base_from_json(base_to_json(e.base)) == e.base);

    const json cp2 = json::parse(R"({"name":"CP2xS2x","dim":6,
        "groups":[{"degree":0,"rank":1},{"degree":2,"rank":2},{"degree":4,"rank":2},{"degree":6,"rank":1}]})");
    CHECK(base_from_json(cp2).half_dim == 3);

    CHECK(base_error(json::parse(R"({"name":"x","dim":5,"groups":[]})")) == ErrorCode::InvalidBase);
    CHECK(base_error(json::parse(R"({"name":"x","dim":6,"groups":[{"degree":9,"rank":1}]})")) ==
          ErrorCode::InvalidBase);
    CHECK(base_error(json::parse(R"({"name":"x","dim":6,"groups":[{"degree":0,"rank":1,"torsion":[1]}]})")) ==
          ErrorCode::InvalidBase);
    CHECK(base_error(json::parse(R"([1,2,3])")) == ErrorCode::InvalidBase);
}

TEST_CASE("exit codes")
{
    CHECK(exit_code_for(ErrorCode::InadmissibleEuler) == 2);
    CHECK(exit_code_for(ErrorCode::InadmissibleDualEuler) == 2);
    CHECK(exit_code_for(ErrorCode::InvalidBase) == 3);
    CHECK(exit_code_for(ErrorCode::TorsionBase) == 3);
    CHECK(exit_code_for(ErrorCode::BadArguments) == 4);
    CHECK(exit_code_for(ErrorCode::BadTruncation) == 4);

    CHECK(exit_code_for(CommandResult{run_tdual(*find_base("S6"), 6, 10)}) == 0);
    CHECK(exit_code_for(CommandResult{run_tdual(*find_base("T6"), 2, 4)}) == 3);
    CHECK(exit_code_for(CommandResult{run_chern_verify(2, 14)}) == 0);
}

TEST_CASE("text rendering names the groups")
{
    const std::string text = render_text(run_bundle_cohomology(*find_base("S6"), 6));
    CHECK(text.find("Z_6") != std::string::npos);
}
