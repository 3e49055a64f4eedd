// Shared helpers for the test binaries.
#ifndef SSET_TEST_SUPPORT_HPP
#define SSET_TEST_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sset/group.hpp"
#include "sset/presentation.hpp"
#include "sset/standard.hpp"

namespace sset::test {

inline PresentationPtr share(Presentation p)
{
    return std::make_shared<const Presentation>(std::move(p));
}

inline Simplex sx(const Presentation& p, std::string_view expr, std::optional<int> dim = std::nullopt)
{
    return parse_simplex(p, expr, dim);
}

/** Vertex labels of a simplex of a subset-named complex ("[3]" -> 3). */
inline std::vector<int> labels(const Presentation& p, const Simplex& x)
{
    std::vector<int> out;
    for (GeneratorId v : vertices(p, x))
    {
        const std::string& name = p.generator_name(v);
        out.push_back(std::stoi(name.substr(1, name.size() - 2)));
    }
    return out;
}

/** Rebuild a presentation through the builder, letting `edit` change face lists. */
inline Presentation rebuild(const Presentation& p,
                            const std::function<void(GeneratorId, std::vector<FaceRef>&)>& edit = nullptr)
{
    PresentationBuilder b(p.name(), p.top_dim());
    b.set_truncated(p.truncated());
    for (GeneratorId g : p.all_generators())
    {
        std::vector<FaceRef> faces;
        for (const Simplex& f : p.faces(g))
            faces.push_back(to_face_ref(p, f));
        if (edit)
            edit(g, faces);
        b.add_generator(g.dim, p.generator_name(g), std::move(faces));
    }
    return b.build();
}

inline std::string subset_name(const std::vector<int>& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

/**
 * Random ordered simplicial complex on `vertices` vertices: random facets
 * closed downward. Always contains at least one simplex of dimension >= 2.
 */
inline Presentation random_complex(std::mt19937& rng, int vertices, int facets, int max_facet_dim)
{
    std::vector<std::vector<int>> chosen;
    std::uniform_int_distribution<int> dimd(2, max_facet_dim);
    for (int f = 0; f < facets; ++f)
    {
        std::vector<int> all(vertices);
        for (int v = 0; v < vertices; ++v)
            all[v] = v;
        std::shuffle(all.begin(), all.end(), rng);
        const int d = std::min(dimd(rng), vertices - 1);
        std::vector<int> facet(all.begin(), all.begin() + d + 1);
        std::sort(facet.begin(), facet.end());
        chosen.push_back(facet);
    }
    std::vector<std::vector<int>> closed;
    for (const auto& facet : chosen)
    {
        const int k = static_cast<int>(facet.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask)
        {
            std::vector<int> s;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i))
                    s.push_back(facet[i]);
            closed.push_back(s);
        }
    }
    for (int v = 0; v < vertices; ++v)
        closed.push_back({v});
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    int top = 0;
    for (const auto& s : closed)
        top = std::max(top, static_cast<int>(s.size()) - 1);
    PresentationBuilder b("random", top);
    for (const auto& s : closed)
    {
        std::vector<FaceRef> faces;
        if (s.size() > 1)
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                auto f = s;
                f.erase(f.begin() + i);
                faces.push_back(FaceRef{{}, subset_name(f)});
            }
        b.add_generator(static_cast<int>(s.size()) - 1, subset_name(s), std::move(faces));
    }
    return b.build();
}

}   // namespace sset::test

#endif
