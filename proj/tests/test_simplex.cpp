#include "catch_amalgamated.hpp"

#include <vector>

#include "sset/error.hpp"
#include "sset/simplex.hpp"

using namespace sset;

namespace {

// Oracle: act on the increasing map [n] -> [m] of a degeneracy; s_j repeats
// entry j of the image sequence. Two words agree iff their sequences agree.
std::vector<int> act(const std::vector<int>& outermost_first, int base_dim)
{
    std::vector<int> seq(base_dim + 1);
    for (int i = 0; i <= base_dim; ++i)
        seq[i] = i;
    for (auto it = outermost_first.rbegin(); it != outermost_first.rend(); ++it)
        seq.insert(seq.begin() + *it, seq[*it]);
    return seq;
}

}   // namespace

TEST_CASE("s0 s0 normalizes to s1 s0", "[simplex]")
{
    const std::vector<int> seq{0, 0};
    const DegeneracyWord w = DegeneracyWord::from_sequence(seq, 0);
    CHECK(w.indices() == std::vector<int>{1, 0});
}

TEST_CASE("normal form agrees with the action on sequences", "[simplex]")
{
    // Every operator sequence of length <= 3 over base dimension <= 2.
    for (int base = 0; base <= 2; ++base)
    {
        std::vector<std::vector<int>> words{{}};
        for (int len = 1; len <= 3; ++len)
        {
            std::vector<std::vector<int>> next;
            for (const auto& w : words)
            {
                // w is outermost first; the new operator goes outermost.
                const int dim = base + static_cast<int>(w.size());
                for (int j = 0; j <= dim; ++j)
                {
                    std::vector<int> u{j};
                    u.insert(u.end(), w.begin(), w.end());
                    next.push_back(u);
                }
            }
            for (const auto& w : next)
            {
                const DegeneracyWord nf = DegeneracyWord::from_sequence(w, base);
                CHECK(act(nf.indices(), base) == act(w, base));
                CHECK(std::is_sorted(nf.indices().rbegin(), nf.indices().rend()));
                CHECK(std::adjacent_find(nf.indices().begin(), nf.indices().end()) == nf.indices().end());
            }
            words = next;
        }
    }
}

TEST_CASE("degeneracy index out of range throws", "[simplex]")
{
    const std::vector<int> bad{2};
    CHECK_THROWS_AS(DegeneracyWord::from_sequence(bad, 1), IndexError);
    const std::vector<int> not_decreasing{0, 1};
    CHECK_THROWS_AS(DegeneracyWord::from_canonical(not_decreasing, 3), IndexError);
}

TEST_CASE("extract inverts prepend", "[simplex]")
{
    for (int m = 0; m <= 2; ++m)
        for (int n = m; n <= m + 3; ++n)
            for (const auto& w : degeneracy_words(m, n))
                for (int i = 0; i <= n; ++i)
                {
                    const DegeneracyWord p = w.prepend(i);
                    REQUIRE(p.contains(i));
                    CHECK(p.extract(i) == w);
                }
}

TEST_CASE("compose_after matches normalizing the concatenation", "[simplex]")
{
    for (int m = 0; m <= 2; ++m)
        for (int n = m; n <= m + 2; ++n)
            for (const auto& inner : degeneracy_words(m, n))
                for (int top = n; top <= n + 2; ++top)
                    for (const auto& outer : degeneracy_words(n, top))
                    {
                        std::vector<int> seq = outer.indices();
                        seq.insert(seq.end(), inner.indices().begin(), inner.indices().end());
                        CHECK(inner.compose_after(outer) == DegeneracyWord::from_sequence(seq, m));
                    }
}

TEST_CASE("degeneracy_words counts C(n, m) in lexicographic order", "[simplex]")
{
    const int binom[6][6] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}, {1, 5, 10, 10, 5, 1}};
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= n; ++m)
        {
            const auto words = degeneracy_words(m, n);
            CHECK(static_cast<int>(words.size()) == binom[n][m]);
            CHECK(std::is_sorted(words.begin(), words.end()));
            for (const auto& w : words)
                CHECK(w.size() == static_cast<std::size_t>(n - m));
        }
}

TEST_CASE("full and complement words", "[simplex]")
{
    CHECK(DegeneracyWord::full(3).indices() == std::vector<int>{2, 1, 0});
    const int omit[] = {1};
    CHECK(DegeneracyWord::complement(3, omit).indices() == std::vector<int>{2, 0});
}

TEST_CASE("simplex ordering is generator first, then word", "[simplex]")
{
    const Simplex a(GeneratorId{0, 1});
    const Simplex b(DegeneracyWord::full(1), GeneratorId{0, 0});
    CHECK(b < a);
    CHECK(b.dim() == 1);
    CHECK(b.degenerate());
    CHECK_FALSE(a.degenerate());
}
