#include "sset/product.hpp"

#include <algorithm>

#include "sset/error.hpp"
#include "sset/standard.hpp"

namespace sset {

namespace {

bool disjoint(const DegeneracyWord& a, const DegeneracyWord& b)
{
    for (int c : a.indices())
        if (b.contains(c))
            return false;
    return true;
}

}   // namespace

std::pair<DegeneracyWord, ProductPresentation::Pair> reduce_pair(const Simplex& a, const Simplex& b)
{
    if (a.dim() != b.dim())
        throw IndexError("product pair needs components of equal dimension");
    // Extract the largest common index first; the common indices below it are
    // unaffected by the shift, so the extracted sequence is already decreasing.
    Simplex x = a, y = b;
    std::vector<int> common;
    while (true)
    {
        int c = -1;
        for (int w : x.word.indices())
        {
            if (y.word.contains(w))
            {
                c = w;
                break;
            }
        }
        if (c < 0)
            break;
        common.push_back(c);
        x.word = x.word.extract(c);
        y.word = y.word.extract(c);
    }
    const int base_dim = x.dim();
    return {DegeneracyWord::from_canonical(common, base_dim), {std::move(x), std::move(y)}};
}

std::string product_name(const Presentation& x, const Presentation& y, const Simplex& a, const Simplex& b)
{
    return "(" + compact_notation(x, a) + "|" + compact_notation(y, b) + ")";
}

ProductPresentation product(PresentationPtr x, PresentationPtr y)
{
    int top = x->top_dim() + y->top_dim();
    bool truncated = false;
    if (x->truncated())
    {
        top = std::min(top, x->top_dim());
        truncated = true;
    }
    if (y->truncated())
    {
        top = std::min(top, y->top_dim());
        truncated = true;
    }

    // Generators: disjoint-index pairs, dimension by dimension.
    std::vector<std::vector<ProductPresentation::Pair>> pairs(top + 1);
    for (int n = 0; n <= top; ++n)
    {
        for (int p = 0; p <= std::min(n, x->top_dim()); ++p)
        {
            for (int q = 0; q <= std::min(n, y->top_dim()); ++q)
            {
                if ((n - p) + (n - q) > n || x->generator_count(p) == 0 || y->generator_count(q) == 0)
                    continue;
                const auto words_a = degeneracy_words(p, n);
                const auto words_b = degeneracy_words(q, n);
                for (GeneratorId g : x->generators(p))
                    for (GeneratorId h : y->generators(q))
                        for (const auto& wa : words_a)
                            for (const auto& wb : words_b)
                                if (disjoint(wa, wb))
                                    pairs[n].emplace_back(Simplex(wa, g), Simplex(wb, h));
            }
        }
    }

    PresentationBuilder builder("(" + x->name() + "x" + y->name() + ")", top);
    builder.set_truncated(truncated);
    for (int n = 0; n <= top; ++n)
    {
        for (const auto& [a, b] : pairs[n])
        {
            std::vector<FaceRef> faces;
            if (n > 0)
            {
                for (int i = 0; i <= n; ++i)
                {
                    auto [word, reduced] = reduce_pair(apply_face(*x, a, i), apply_face(*y, b, i));
                    faces.push_back(FaceRef{word.indices(), product_name(*x, *y, reduced.first, reduced.second)});
                }
            }
            builder.add_generator(n, product_name(*x, *y, a, b), std::move(faces));
        }
    }

    ProductPresentation result;
    result.presentation_ = builder.build_shared();
    result.left_ = x;
    result.right_ = y;
    result.components_.assign(top + 1, {});
    for (int n = 0; n <= top; ++n)
    {
        result.components_[n].resize(pairs[n].size());
        for (const auto& pr : pairs[n])
        {
            auto g = result.presentation_->find(n, product_name(*x, *y, pr.first, pr.second));
            result.components_[n][g->index] = pr;
            result.index_[pr] = *g;
        }
    }
    return result;
}

const ProductPresentation::Pair& ProductPresentation::components(GeneratorId g) const
{
    if (!presentation_->contains(g))
        throw PresentationError("not a product generator");
    return components_[g.dim][g.index];
}

Simplex ProductPresentation::pair(const Simplex& a, const Simplex& b) const
{
    auto [word, reduced] = reduce_pair(a, b);
    auto it = index_.find(reduced);
    if (it == index_.end())
    {
        presentation_->require_representable(reduced.first.dim(), "product pair");
        throw PresentationError("pair is not a product simplex");
    }
    return Simplex(word, it->second);
}

ProductPresentation::Pair ProductPresentation::split(const Simplex& x) const
{
    const Pair& c = components(x.gen);
    return {Simplex(c.first.word.compose_after(x.word), c.first.gen), Simplex(c.second.word.compose_after(x.word), c.second.gen)};
}

std::pair<SimplicialMap, SimplicialMap> projections(const ProductPresentation& p)
{
    std::vector<std::vector<Simplex>> first(p.presentation().top_dim() + 1), second(p.presentation().top_dim() + 1);
    for (GeneratorId g : p.presentation().all_generators())
    {
        first[g.dim].push_back(p.components(g).first);
        second[g.dim].push_back(p.components(g).second);
    }
    return {SimplicialMap(p.presentation_ptr(), p.left_ptr(), std::move(first)),
            SimplicialMap(p.presentation_ptr(), p.right_ptr(), std::move(second))};
}

SimplicialMap slice_inclusion(const ProductPresentation& p, GeneratorId right_vertex)
{
    if (right_vertex.dim != 0 || !p.right().contains(right_vertex))
        throw PresentationError("slice inclusion needs a vertex of the second factor");
    std::vector<std::vector<Simplex>> assignment(p.left().top_dim() + 1);
    for (GeneratorId g : p.left().all_generators())
    {
        p.presentation().require_representable(g.dim, "slice inclusion");
        assignment[g.dim].push_back(p.pair(Simplex(g), degenerate_vertex(right_vertex, g.dim)));
    }
    return SimplicialMap(p.left_ptr(), p.presentation_ptr(), std::move(assignment));
}

std::vector<PrismSimplex> prism_decomposition(int p)
{
    if (p < 0)
        throw IndexError("prism needs p >= 0");
    auto base = std::make_shared<const Presentation>(standard_simplex(p));
    auto interval = std::make_shared<const Presentation>(standard_simplex(1));
    const GeneratorId top{p, 0};
    const GeneratorId edge{1, 0};
    std::vector<PrismSimplex> out;
    for (int k = 0; k <= p; ++k)
    {
        const int omit[] = {k};
        PrismSimplex s;
        s.k = k;
        s.base = Simplex(DegeneracyWord::from_canonical(std::vector<int>{k}, p), top);
        s.interval = Simplex(DegeneracyWord::complement(p + 1, omit), edge);
        const auto bv = vertices(*base, s.base);
        const auto iv = vertices(*interval, s.interval);
        s.vertex_form = "[";
        for (std::size_t j = 0; j < bv.size(); ++j)
        {
            if (j)
                s.vertex_form += ",";
            std::string name = base->generator_name(bv[j]);
            s.vertex_form += name.substr(1, name.size() - 2);
            if (interval->generator_name(iv[j]) == "[1]")
                s.vertex_form += "'";
        }
        s.vertex_form += "]";
        out.push_back(std::move(s));
    }
    return out;
}

int count_nondegenerate_top(int p, int q)
{
    if (p < 0 || q < 0)
        throw IndexError("count_nondegenerate_top needs p, q >= 0");
    auto prod = product(std::make_shared<const Presentation>(standard_simplex(p)), std::make_shared<const Presentation>(standard_simplex(q)));
    return prod.presentation().generator_count(p + q);
}

}   // namespace sset
