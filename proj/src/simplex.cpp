#include "sset/simplex.hpp"

#include <algorithm>
#include <string>

#include "sset/error.hpp"

namespace sset {

DegeneracyWord DegeneracyWord::from_sequence(std::span<const int> outermost_first, int base_dim)
{
    // Apply innermost first, tracking the dimension the operator acts on.
    DegeneracyWord word;
    int dim = base_dim;
    for (auto it = outermost_first.rbegin(); it != outermost_first.rend(); ++it)
    {
        if (*it < 0 || *it > dim)
            throw IndexError("degeneracy s" + std::to_string(*it) + " applied to a simplex of dimension " + std::to_string(dim));
        word = word.prepend(*it);
        ++dim;
    }
    return word;
}

DegeneracyWord DegeneracyWord::from_canonical(std::span<const int> decreasing, int base_dim)
{
    for (std::size_t t = 0; t + 1 < decreasing.size(); ++t)
    {
        if (decreasing[t] <= decreasing[t + 1])
            throw IndexError("degeneracy word is not strictly decreasing");
    }
    const int top = base_dim + static_cast<int>(decreasing.size());
    for (int c : decreasing)
    {
        if (c < 0 || c >= top)
            throw IndexError("degeneracy index s" + std::to_string(c) + " out of range for dimension " + std::to_string(top));
    }
    return DegeneracyWord(std::vector<int>(decreasing.begin(), decreasing.end()));
}

DegeneracyWord DegeneracyWord::full(int n)
{
    std::vector<int> idx;
    for (int c = n - 1; c >= 0; --c)
        idx.push_back(c);
    return DegeneracyWord(std::move(idx));
}

DegeneracyWord DegeneracyWord::complement(int n, std::span<const int> omitted)
{
    std::vector<int> idx;
    for (int c = n - 1; c >= 0; --c)
    {
        if (std::find(omitted.begin(), omitted.end(), c) == omitted.end())
            idx.push_back(c);
    }
    return DegeneracyWord(std::move(idx));
}

DegeneracyWord DegeneracyWord::prepend(int i) const
{
    std::vector<int> out;
    out.reserve(indices_.size() + 1);
    std::size_t t = 0;
    for (; t < indices_.size() && indices_[t] >= i; ++t)
        out.push_back(indices_[t] + 1);
    out.push_back(i);
    for (; t < indices_.size(); ++t)
        out.push_back(indices_[t]);
    return DegeneracyWord(std::move(out));
}

DegeneracyWord DegeneracyWord::extract(int c) const
{
    if (!contains(c))
        throw IndexError("s" + std::to_string(c) + " is not a factor of the degeneracy word");
    std::vector<int> out;
    out.reserve(indices_.size() - 1);
    for (int w : indices_)
    {
        if (w > c)
            out.push_back(w - 1);
        else if (w < c)
            out.push_back(w);
    }
    return DegeneracyWord(std::move(out));
}

DegeneracyWord DegeneracyWord::compose_after(const DegeneracyWord& outer) const
{
    DegeneracyWord word = *this;
    for (auto it = outer.indices_.rbegin(); it != outer.indices_.rend(); ++it)
        word = word.prepend(*it);
    return word;
}

bool DegeneracyWord::contains(int c) const
{
    return std::find(indices_.begin(), indices_.end(), c) != indices_.end();
}

std::vector<DegeneracyWord> degeneracy_words(int m, int n)
{
    std::vector<DegeneracyWord> words;
    if (m < 0 || n < m)
        return words;
    const int k = n - m;
    // Walk all k-combinations of {0..n-1}.
    std::vector<int> pick(k);
    for (int t = 0; t < k; ++t)
        pick[t] = t;
    while (true)
    {
        std::vector<int> dec(pick.rbegin(), pick.rend());
        words.push_back(DegeneracyWord::from_canonical(dec, m));
        int t = k - 1;
        while (t >= 0 && pick[t] == n - k + t)
            --t;
        if (t < 0)
            break;
        ++pick[t];
        for (int u = t + 1; u < k; ++u)
            pick[u] = pick[u - 1] + 1;
    }
    std::sort(words.begin(), words.end());
    return words;
}

}   // namespace sset
