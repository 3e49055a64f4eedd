#include "catch_amalgamated.hpp"

#include <random>

#include "sset/group.hpp"
#include "sset/homology.hpp"
#include "sset/homotopy.hpp"
#include "sset/product.hpp"
#include "sset/standard.hpp"
#include "support.hpp"

using namespace sset;
using sset::test::random_complex;
using sset::test::rebuild;
using sset::test::share;

namespace {

/** Every face swap on a generator of dim >= 2 breaks some face identity. */
void check_swaps_detected(const Presentation& p)
{
    for (GeneratorId g : p.all_generators())
    {
        if (g.dim < 2)
            continue;
        for (int i = 0; i <= g.dim; ++i)
            for (int j = i + 1; j <= g.dim; ++j)
            {
                const Presentation bad = rebuild(p, [&](GeneratorId h, std::vector<FaceRef>& f) {
                    if (h == g)
                        std::swap(f[i], f[j]);
                });
                INFO(p.name() << " " << p.generator_name(g) << " swap d" << i << " d" << j);
                CHECK_FALSE(validate(bad).ok());
            }
    }
}

long long alternating_betti(const std::vector<HomologyGroup>& h)
{
    long long chi = 0;
    for (std::size_t n = 0; n < h.size(); ++n)
        chi += (n % 2 ? -1 : 1) * h[n].betti;
    return chi;
}

}   // namespace

TEST_CASE("random complexes and their products are valid", "[property]")
{
    std::mt19937 rng(20261014);
    auto d1 = share(standard_simplex(1));
    for (int trial = 0; trial < 100; ++trial)
    {
        auto x = share(random_complex(rng, 6, 3, 3));
        REQUIRE(validate(*x).ok());
        if (trial % 10 == 0)
        {
            const ProductPresentation cyl = product(x, d1);
            CHECK(validate(cyl.presentation()).ok());
            const auto [pl, pr] = projections(cyl);
            CHECK(validate_map(pl).ok());
            CHECK(validate_map(pr).ok());
        }
    }
}

TEST_CASE("face swaps are always detected", "[property][mutation]")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial)
        check_swaps_detected(random_complex(rng, 5, 2, 3));
    check_swaps_detected(standard_simplex(4));
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q)
            check_swaps_detected(product(share(standard_simplex(p)), share(standard_simplex(q))).presentation());
}

TEST_CASE("boundary squares to zero and Euler characteristics agree", "[property]")
{
    std::mt19937 rng(5);
    std::vector<Presentation> cases{standard_simplex(3), boundary(4), sphere_two_cell(3), adjoin_degeneracies(cone_fixture()),
                                    adjoin_degeneracies(double_edge_circle())};
    for (int trial = 0; trial < 20; ++trial)
        cases.push_back(random_complex(rng, 6, 4, 3));
    auto d1 = share(standard_simplex(1));
    cases.push_back(product(share(boundary(2)), d1).presentation());
    cases.push_back(product(share(sphere_two_cell(2)), d1).presentation());
    for (const Presentation& p : cases)
    {
        const int top = p.top_dim();
        const ChainComplex c = normalized_complex(p, top + 1);
        CHECK(boundary_squares_to_zero(c));
        CHECK(alternating_betti(homology_of(c)) == euler_characteristic(p));
    }
    for (const GroupTable& g : small_groups(4))
        CHECK(boundary_squares_to_zero(normalized_complex(nerve(g, 4), 4)));
}

TEST_CASE("normalized and unnormalized homology agree on random complexes", "[property][oracle]")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial)
    {
        const Presentation x = random_complex(rng, 5, 2, 2);
        CHECK(homology_of(unnormalized_complex(x, 3)) == homology(x, 3));
    }
}

TEST_CASE("products of Kan nerves are Kan", "[property]")
{
    auto a = share(nerve(GroupTable::cyclic(2), 2));
    auto b = share(nerve(GroupTable::cyclic(3), 2));
    const ProductPresentation x = product(a, b);
    CHECK(kan_check(x.presentation(), 2).kan_up_to_bound());
    CHECK(path_components(x.presentation()).partition.size() == 1);
}
