/**
 * Canonical simplex representation.
 *
 * Every simplex of a simplicial set is a unique iterated degeneracy of a
 * unique nondegenerate simplex. We store the degeneracy operators as a
 * strictly decreasing word, outermost operator first, so that
 *
 *     s_{w_1} s_{w_2} ... s_{w_k} g,    w_1 > w_2 > ... > w_k,
 *
 * is the normal form. A word from dimension m to dimension n = m + k is then
 * exactly a k-element subset of {0, ..., n-1}.
 */
#ifndef SSET_SIMPLEX_HPP
#define SSET_SIMPLEX_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace sset {

/**
 * A nondegenerate generator, addressed by its dimension and its position in
 * the (name-sorted) generator list of that dimension.
 */
struct GeneratorId
{
    int dim = 0;
    int index = 0;

    auto operator<=>(const GeneratorId&) const = default;
};

/**
 * Strictly decreasing sequence of degeneracy indices, outermost first.
 */
class DegeneracyWord
{
    public:
        DegeneracyWord() = default;

        /**
         * Normalize an arbitrary operator sequence (outermost first) applied
         * to a simplex of dimension `base_dim`. Throws IndexError when some
         * s_j is applied outside 0 <= j <= (current dimension).
         */
        static DegeneracyWord from_sequence(std::span<const int> outermost_first, int base_dim);

        /** Accept an already strictly decreasing word; throws otherwise. */
        static DegeneracyWord from_canonical(std::span<const int> decreasing, int base_dim);

        /** Word s_{n-1} ... s_0, collapsing a vertex to dimension n. */
        static DegeneracyWord full(int n);

        /** Word whose index set is {0..n-1} minus `omitted` (sorted decreasing). */
        static DegeneracyWord complement(int n, std::span<const int> omitted);

        /**
         * The word of s_i applied on top of this one: indices >= i shift up
         * by one, then i is inserted (the s-s identity as an insertion).
         */
        DegeneracyWord prepend(int i) const;

        /**
         * Inverse of prepend: requires `c` to be in the word and returns W'
         * with s_W = s_c s_{W'}.
         */
        DegeneracyWord extract(int c) const;

        /** Normal form of s_{outer} s_{this}, with `outer` canonical too. */
        DegeneracyWord compose_after(const DegeneracyWord& outer) const;

        bool contains(int c) const;
        bool empty() const { return indices_.empty(); }
        std::size_t size() const { return indices_.size(); }
        const std::vector<int>& indices() const { return indices_; }

        auto operator<=>(const DegeneracyWord&) const = default;

    private:
        explicit DegeneracyWord(std::vector<int> indices) : indices_(std::move(indices)) {}

        std::vector<int> indices_;
};

/**
 * A simplex in normal form: degeneracy word over a nondegenerate generator.
 * Equality is structural, which is sound by uniqueness of the normal form.
 */
struct Simplex
{
    DegeneracyWord word;
    GeneratorId gen;

    Simplex() = default;
    Simplex(DegeneracyWord w, GeneratorId g) : word(std::move(w)), gen(g) {}
    explicit Simplex(GeneratorId g) : gen(g) {}

    int dim() const { return gen.dim + static_cast<int>(word.size()); }
    bool degenerate() const { return !word.empty(); }

    bool operator==(const Simplex&) const = default;

    /** Enumeration order: generator dimension, generator (name) index, word. */
    std::strong_ordering operator<=>(const Simplex& other) const
    {
        if (auto c = gen <=> other.gen; c != 0)
            return c;
        return word <=> other.word;
    }
};

/**
 * All canonical words from dimension m to dimension n, in lexicographic
 * order; there are C(n, m) of them.
 */
std::vector<DegeneracyWord> degeneracy_words(int m, int n);

}   // namespace sset

#endif
