// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sset/group.hpp"
#include "sset/homology.hpp"
#include "sset/homotopy.hpp"
#include "sset/kan.hpp"
#include "sset/product.hpp"
#include "sset/standard.hpp"
#include "support.hpp"

using namespace sset;
using sset::test::labels;
using sset::test::random_complex;
using sset::test::rebuild;
using sset::test::share;
using sset::test::sx;

namespace {

/** Collects the first failed check of a criterion. */
struct Checker
{
    std::string failure;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok && failure.empty())
            failure = what;
    }
    void note(const std::string& n) { notes.push_back(n); }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Checker&)>& body)
{
    Checker c;
    try
    {
        body(c);
    }
    catch (const std::exception& e)
    {
        c.failure = std::string("exception: ") + e.what();
    }
    std::string line = (c.failure.empty() ? "PASS" : "FAIL") + std::string(" criterion ") + std::to_string(number) + ": " + title;
    if (!c.failure.empty())
        line += " -- " + c.failure;
    for (const auto& n : c.notes)
        line += " [" + n + "]";
    std::puts(line.c_str());
    if (!c.failure.empty())
        ++failures;
}

std::string str(std::size_t v) { return std::to_string(v); }

HomologyGroup Z(int betti = 1) { return HomologyGroup{betti, {}}; }

std::vector<HomologyGroup> sphere_homology(int n)
{
    std::vector<HomologyGroup> out(n + 1, Z(0));
    out[0] = Z();
    out[n] = Z();
    return out;
}

std::vector<HomologyGroup> point_homology(int degrees)
{
    std::vector<HomologyGroup> out(degrees, Z(0));
    out[0] = Z();
    return out;
}

int binom(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

// Brute force: nondegenerate top simplices of Delta^p x Delta^q are the
// strictly increasing lattice walks from (0,0) to (p,q) with unit steps.
int lattice_walks(int p, int q)
{
    std::function<int(int, int)> go = [&](int a, int b) {
        if (a == p && b == q)
            return 1;
        return (a < p ? go(a + 1, b) : 0) + (b < q ? go(a, b + 1) : 0);
    };
    return go(0, 0);
}

void c1(Checker& c)
{
    const Presentation d0 = standard_simplex(0), d1 = standard_simplex(1);
    for (int n = 0; n <= 10; ++n)
    {
        c.require(simplices(d0, n).size() == 1, "|Delta^0_" + std::to_string(n) + "| != 1");
        c.require(simplices(d1, n).size() == static_cast<std::size_t>(n + 2), "|Delta^1_" + std::to_string(n) + "| != n+2");
        c.require(simplex_count(d1, n) == static_cast<std::size_t>(n + 2), "closed-form count of Delta^1_n disagrees");
    }
}

void c2(Checker& c)
{
    auto d1 = share(standard_simplex(1));
    const ProductPresentation sq = product(d1, d1);
    const Presentation& p = sq.presentation();
    const std::size_t want[] = {4, 9, 16};
    for (int n = 0; n <= 2; ++n)
        c.require(simplices(p, n).size() == want[n], "|(D1xD1)_" + std::to_string(n) + "| = " + str(simplices(p, n).size()));
    const auto top = nondegenerate_simplices(p, 2);
    c.require(top.size() == 2, "nondegenerate 2-simplices: " + str(top.size()));
    std::set<std::pair<std::vector<int>, std::vector<int>>> got;
    for (const Simplex& t : top)
    {
        const auto [a, b] = sq.split(t);
        got.insert({labels(*d1, a), labels(*d1, b)});
    }
    const std::set<std::pair<std::vector<int>, std::vector<int>>> expect{{{0, 0, 1}, {0, 1, 1}}, {{0, 1, 1}, {0, 0, 1}}};
    c.require(got == expect, "nondegenerate 2-simplices are not ([0,0,1],[0,1,1]) and ([0,1,1],[0,0,1])");
    std::size_t degenerate = 0;
    for (const Simplex& x : simplices(p, 2))
        degenerate += x.degenerate();
    c.require(degenerate == 14, "degenerate 2-simplices: " + str(degenerate));
    for (int n = 3; n <= 6; ++n)
        c.require(nondegenerate_simplices(p, n).empty(), "nondegenerate simplex in dimension " + std::to_string(n));
}

void c3(Checker& c)
{
    auto d1 = share(standard_simplex(1));
    for (int p = 0; p <= 4; ++p)
    {
        const ProductPresentation x = product(share(standard_simplex(p)), d1);
        const auto prism = prism_decomposition(p);
        c.require(x.presentation().generator_count(p + 1) == p + 1, "Delta^" + std::to_string(p) + " x Delta^1 top count");
        c.require(static_cast<int>(prism.size()) == p + 1, "prism size");
        std::vector<Simplex> s;
        std::set<Simplex> distinct;
        for (int k = 0; k <= p; ++k)
        {
            std::string form = "[";
            for (int v = 0; v <= k; ++v)
                form += std::to_string(v) + ",";
            for (int v = k; v <= p; ++v)
                form += std::to_string(v) + "'" + (v < p ? "," : "");
            form += "]";
            c.require(prism[k].vertex_form == form, "S_" + std::to_string(k) + " vertex form " + prism[k].vertex_form + " != " + form);
            s.push_back(x.pair(prism[k].base, prism[k].interval));
            c.require(!s.back().degenerate(), "S_k is degenerate");
            distinct.insert(s.back());
        }
        c.require(distinct.size() == static_cast<std::size_t>(p + 1), "prism simplices are not distinct");
        const Presentation& xp = x.presentation();
        for (int k = 1; k <= p; ++k)
            c.require(apply_face(xp, s[k], k) == apply_face(xp, s[k - 1], k), "d_k S_k != d_k S_{k-1}");
        for (int k = 0; k < p; ++k)
            c.require(apply_face(xp, s[k], k + 1) == apply_face(xp, s[k + 1], k + 1), "d_{k+1} S_k != d_{k+1} S_{k+1}");
    }
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
        {
            const int brute = lattice_walks(p, q);
            c.require(count_nondegenerate_top(p, q) == brute, "count_nondegenerate_top(" + std::to_string(p) + "," + std::to_string(q) + ")");
            c.require(brute == binom(p + q, p), "brute-force walk count differs from C(p+q,p)");
            const ProductPresentation x = product(share(standard_simplex(p)), share(standard_simplex(q)));
            c.require(x.presentation().generator_count(p + q) == brute, "enumerated top generators differ from brute force");
        }
}

void c4(Checker& c)
{
    const Presentation d1 = standard_simplex(1);
    const KanReport r = kan_check(d1, 2);
    bool found = false;
    for (const HornSpec& h : r.unfillable)
        found = found || (h.n == 2 && h.k == 0 && h.faces[1] == sx(d1, "s0 [0]") && h.faces[2] == sx(d1, "[0,1]"));
    c.require(found, "Lambda^2_0 with faces s0 [0], [0,1] not reported");
    if (!r.unfillable.empty())
        c.note(describe_horn(d1, r.unfillable.front()));
    c.require(kan_check(standard_simplex(0), 4).unfillable.empty(), "kan_check(Delta^0, 4) not empty");
    c.require(kan_check(nerve(GroupTable::cyclic(2), 4), 3).unfillable.empty(), "kan_check(nerve(Z/2,4), 3) not empty");
}

void c5(Checker& c)
{
    for (int n = 0; n <= 4; ++n)
        c.require(homology(standard_simplex(n), n + 1) == point_homology(n + 1), "Delta^" + std::to_string(n) + " not acyclic");
    for (int n = 2; n <= 3; ++n)
    {
        c.require(homology(sphere_two_cell(n), n + 1) == sphere_homology(n), "two-cell S^" + std::to_string(n));
        c.require(homology(boundary(n + 1), n + 1) == sphere_homology(n), "boundary of Delta^" + std::to_string(n + 1));
    }
    c.require(homology(adjoin_degeneracies(cone_fixture()), 3) == point_homology(3), "cone not acyclic");
    const Presentation bg = nerve(GroupTable::cyclic(2), 5);
    const auto h = homology(bg, 4);
    const std::vector<HomologyGroup> expect{Z(), HomologyGroup{0, {2}}, Z(0), HomologyGroup{0, {2}}};
    c.require(h == expect, "nerve(Z/2,5) homology in degrees 0-3");
    std::string shown;
    for (const auto& g : h)
        shown += (shown.empty() ? "" : ", ") + format_group(g);
    c.note("H(BZ/2) = " + shown);
    const auto oracle = homology_of(unnormalized_complex(bg, 3));
    c.require(oracle == std::vector<HomologyGroup>(h.begin(), h.begin() + 3), "unnormalized oracle disagrees in degrees <= 2");
}

void c6(Checker& c)
{
    std::size_t several = 0;
    for (const GroupTable& g : small_groups(4))
    {
        auto bg = share(nerve(g, 4));
        const PiGroup pi = pi_n(BasedPresentation(bg), 1);
        const std::string tag = "order-" + std::to_string(g.order()) + " group " + g.name(g.order() - 1);
        c.require(pi.order() == static_cast<std::size_t>(g.order()), tag + ": |pi_1| = " + str(pi.order()));
        c.require(pi.group_axioms_ok, tag + ": group axioms");
        c.require(pi.product_well_defined, tag + ": product depends on representatives or fillers");
        c.require(pi.identity_witnesses_ok.value_or(false), tag + ": s_n / s_{n-1} identity witnesses");
        c.require(pi.inverse_witnesses_ok.value_or(false), tag + ": horn inverse witnesses");
        c.require(pi.associativity_witnesses_ok.value_or(false), tag + ": associativity witness");
        several += pi.horns_with_several_fillers;
        std::vector<int> cls(g.order());
        for (int a = 0; a < g.order(); ++a)
            cls[a] = pi.class_of_simplex(nerve_simplex(*bg, g, {a}));
        c.require(std::set<int>(cls.begin(), cls.end()).size() == static_cast<std::size_t>(g.order()), tag + ": g -> class(g) not bijective");
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                c.require(pi.table[cls[a]][cls[b]] == cls[g.mul(a, b)], tag + ": class(g1).class(g2) != class(g1 g2)");
    }
    c.note(std::to_string(small_groups(4).size()) + " groups; product horns with several fillers: " + str(several));
}

void c7(Checker& c)
{
    auto d1 = share(standard_simplex(1));
    const int bound = 3;
    for (int p = 0; p <= 2; ++p)
    {
        auto dp = share(standard_simplex(p));
        const ProductPresentation cyl = product(dp, d1);
        const SimplicialMap proj = projections(cyl).first;
        const auto [f, g] = cylinder_ends(cyl, proj);
        const std::string tag = "Delta^" + std::to_string(p);
        c.require(f == identity_map(dp) && g == identity_map(dp), tag + ": cylinder ends are not the identity");
        const HomotopyData h = homotopy_from_cylinder(cyl, proj, bound);
        c.require(verify_homotopy_data(f, g, h, bound).ok(), tag + ": cylinder homotopy fails verification");
        c.require(h.h == constant_homotopy(identity_map(dp), bound).h, tag + ": cylinder homotopy is not the constant one");
    }

    // Delta^1 x Delta^1 -> B(Z/2): triangles to (g,g), outer edges to (g), diagonal to s0 *.
    auto bg = share(nerve(GroupTable::cyclic(2), 4));
    const ProductPresentation cyl = product(d1, d1);
    const GeneratorId star = *bg->find(0, "*");
    std::vector<std::vector<Simplex>> assignment(cyl.presentation().top_dim() + 1);
    for (GeneratorId gen : cyl.presentation().all_generators())
    {
        const auto& [a, b] = cyl.components(gen);
        if (gen.dim == 0)
            assignment[0].push_back(Simplex(star));
        else if (gen.dim == 1)
            assignment[1].push_back(!a.degenerate() && !b.degenerate() ? degenerate_vertex(star, 1) : sx(*bg, "(g)"));
        else
            assignment[2].push_back(sx(*bg, "(g,g)"));
    }
    const SimplicialMap hmap(cyl.presentation_ptr(), bg, std::move(assignment));
    c.require(validate_map(hmap).ok(), "folded square is not simplicial");
    const auto [f, g] = cylinder_ends(cyl, hmap);
    const Simplex e = sx(*d1, "[0,1]");
    c.require(apply_map(f, e) == sx(*bg, "(g)") && apply_map(g, e) == sx(*bg, "(g)"), "folded square ends are not the loop (g)");
    const HomotopyData h = homotopy_from_cylinder(cyl, hmap, bound);
    c.require(h.h != constant_homotopy(f, bound).h, "folded square gives the constant homotopy");
    const HomotopyReport r = verify_homotopy_data(f, g, h, bound);
    c.require(r.ok(), r.ok() ? "" : "nonconstant homotopy: " + r.violations.front().condition);
    for (int p = 0; p <= bound; ++p)
        for (const Simplex& x : simplices(*d1, p))
        {
            c.require(apply_face(*bg, h.at(p, 0, x), 0) == apply_map(f, x), "d_0 h_0 != f");
            c.require(apply_face(*bg, h.at(p, p, x), p + 1) == apply_map(g, x), "d_{p+1} h_p != g");
        }
}

void c8(Checker& c)
{
    const GroupTable z4 = GroupTable::cyclic(4);
    auto x = share(nerve(z4, 4));
    auto a = share(nerve(GroupTable::subgroup(z4, {z4.identity(), z4.index_of("g2")}), 4));
    const BasedPresentation b(x);
    const Subcomplex sub(x, a);
    const LesReport r = les_exactness(b, sub, 1);
    c.require(r.pi_a.order() == 2, "|pi_1 A| = " + str(r.pi_a.order()));
    c.require(r.pi_x.order() == 4, "|pi_1 X| = " + str(r.pi_x.order()));
    c.require(r.pi_rel.order() == 2, "|pi_1(X, A)| = " + str(r.pi_rel.order()));
    c.require(r.exact_at_x(), "im(pi_1 A -> pi_1 X) != ker(pi_1 X -> pi_1(X, A))");
    c.require(r.exact_at_rel(), "im(j) != ker(boundary)");
    c.note("|im i| = " + str(r.image_i.size()) + ", |ker j| = " + str(r.kernel_j.size()));
}

void c9(Checker& c)
{
    std::mt19937 rng(20261014);
    std::size_t mutants = 0;
    std::vector<Presentation> fixtures{standard_simplex(3), boundary(3), boundary(4), horn(3, 1), sphere_two_cell(2), sphere_two_cell(3),
                                       adjoin_degeneracies(cone_fixture()), adjoin_degeneracies(double_edge_circle())};
    auto d1 = share(standard_simplex(1));
    fixtures.push_back(product(d1, d1).presentation());
    for (int trial = 0; trial < 100; ++trial)
    {
        // Alternate plain random complexes with cylinders on small ones.
        Presentation p = trial % 5 == 4 ? product(share(random_complex(rng, 4, 2, 2)), d1).presentation() : random_complex(rng, 6, 3, 3);
        c.require(validate(p).ok(), "random presentation " + std::to_string(trial) + " invalid");
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
                    ++mutants;
                    c.require(!validate(bad).ok(), "face swap d" + std::to_string(i) + "<->d" + std::to_string(j) + " on " + p.generator_name(g) + " not caught");
                }
        }
        if (trial < 20)
            fixtures.push_back(std::move(p));
    }
    for (const GroupTable& g : small_groups(4))
        fixtures.push_back(nerve(g, 4));
    for (const Presentation& p : fixtures)
    {
        const int top = p.truncated() ? p.top_dim() : p.top_dim() + 1;
        const ChainComplex cc = normalized_complex(p, top);
        c.require(boundary_squares_to_zero(cc), p.name() + ": boundary does not square to zero");
        if (p.truncated())
            continue;
        const auto h = homology_of(cc);
        long long chi = 0;
        for (std::size_t n = 0; n < h.size(); ++n)
            chi += (n % 2 ? -1 : 1) * h[n].betti;
        c.require(chi == euler_characteristic(p), p.name() + ": Euler characteristic != alternating Betti sum");
    }
    for (const GroupTable& g : small_groups(4))
    {
        const BasedPresentation b(share(nerve(g, 4)));
        for (int n = 1; n <= 2; ++n)
        {
            const auto reps = pi_representatives(b, n);
            const Partition standard = homotopy_classes(b.presentation(), reps);
            for (int r = 0; r < n; ++r)
                c.require(homotopy_classes(b.presentation(), reps, r).classes == standard.classes, "index-shifted relation differs");
        }
    }
    c.note(str(mutants) + " face-swap mutants caught; " + str(fixtures.size()) + " fixtures");
}

}   // namespace

int main()
{
    criterion(1, "counting identities |Delta^0_n| = 1, |Delta^1_n| = n+2 for n <= 10", c1);
    criterion(2, "Delta^1 x Delta^1 census", c2);
    criterion(3, "prism decomposition and top-simplex counts", c3);
    criterion(4, "Kan witnesses", c4);
    criterion(5, "homology of standard examples", c5);
    criterion(6, "pi_1 of nerves of groups of order <= 4", c6);
    criterion(7, "cylinder homotopies satisfy the combinatorial definition", c7);
    criterion(8, "exactness for (nerve(Z/4), nerve(Z/2))", c8);
    criterion(9, "property suites", c9);
    return failures == 0 ? 0 : 1;
}
