#include "catch_amalgamated.hpp"

#include "sset/error.hpp"
#include "sset/group.hpp"
#include "sset/morphism.hpp"
#include "sset/standard.hpp"
#include "support.hpp"

using namespace sset;
using sset::test::share;
using sset::test::sx;

namespace {

SimplicialMap collapse(const PresentationPtr& d2, const PresentationPtr& d1)
{
    // [0], [1] -> [0]; [2] -> [1].
    return map_from_names(d2, d1,
                          {{"[0]", "[0]"},
                           {"[1]", "[0]"},
                           {"[2]", "[1]"},
                           {"[0,1]", "s0 [0]"},
                           {"[0,2]", "[0,1]"},
                           {"[1,2]", "[0,1]"},
                           {"[0,1,2]", "s0 [0,1]"}});
}

}   // namespace

TEST_CASE("the collapse Delta^2 -> Delta^1 is simplicial", "[morphism]")
{
    auto d2 = share(standard_simplex(2));
    auto d1 = share(standard_simplex(1));
    const SimplicialMap f = collapse(d2, d1);
    CHECK(validate_map(f).ok());
    // Images of degenerate simplices are recomputed from the generators.
    CHECK(apply_map(f, sx(*d2, "s1 [0,2]")) == sx(*d1, "s1 [0,1]"));
    CHECK(apply_map(f, sx(*d2, "s0 [0,1,2]")) == sx(*d1, "s1 s0 [0,1]"));
}

TEST_CASE("validate_map names the failing face", "[morphism]")
{
    auto d2 = share(standard_simplex(2));
    auto d1 = share(standard_simplex(1));
    const SimplicialMap bad = map_from_names(d2, d1,
                                             {{"[0]", "[0]"},
                                              {"[1]", "[0]"},
                                              {"[2]", "[1]"},
                                              {"[0,1]", "[0,1]"},
                                              {"[0,2]", "[0,1]"},
                                              {"[1,2]", "[0,1]"},
                                              {"[0,1,2]", "s0 [0,1]"}});
    const auto rep = validate_map(bad);
    REQUIRE_FALSE(rep.ok());
    CHECK(d2->generator_name(rep.violations.front().generator) == "[0,1]");
}

TEST_CASE("map construction rejects wrong dimensions and missing images", "[morphism]")
{
    auto d1 = share(standard_simplex(1));
    auto d0 = share(standard_simplex(0));
    CHECK_THROWS_AS(map_from_names(d1, d0, {{"[0]", "[0]"}, {"[1]", "[0]"}}), PresentationError);
    CHECK_THROWS_AS(map_from_names(d1, d0, {{"[0]", "[0]"}, {"[1]", "[0]"}, {"[0,1]", "[0]"}}), PresentationError);
}

TEST_CASE("composition and identities", "[morphism]")
{
    auto d2 = share(standard_simplex(2));
    auto d1 = share(standard_simplex(1));
    auto d0 = share(standard_simplex(0));
    const SimplicialMap f = collapse(d2, d1);
    const SimplicialMap g = map_from_names(d1, d0, {{"[0]", "[0]"}, {"[1]", "[0]"}, {"[0,1]", "s0 [0]"}});
    const SimplicialMap gf = compose(g, f);
    CHECK(validate_map(gf).ok());
    CHECK(apply_map(gf, sx(*d2, "[0,1,2]")) == sx(*d0, "s1 s0 [0]"));
    CHECK(compose(f, identity_map(d2)) == f);
    CHECK(compose(identity_map(d1), f) == f);
    CHECK_THROWS_AS(compose(f, g), PresentationError);
}

TEST_CASE("inclusion by name", "[morphism]")
{
    auto d2 = share(standard_simplex(2));
    auto h = share(horn(2, 1));
    const SimplicialMap inc = inclusion_by_name(h, d2);
    CHECK(validate_map(inc).ok());
    auto z4 = GroupTable::cyclic(4);
    auto sub = share(nerve(GroupTable::subgroup(z4, {0, 2}), 3));
    auto big = share(nerve(z4, 3));
    CHECK(validate_map(inclusion_by_name(sub, big)).ok());
    CHECK_THROWS_AS(inclusion_by_name(d2, h), PresentationError);
}
