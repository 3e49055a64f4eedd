#include "sset/morphism.hpp"

#include <map>

#include "sset/error.hpp"

namespace sset {

SimplicialMap::SimplicialMap(PresentationPtr source, PresentationPtr target, std::vector<std::vector<Simplex>> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment))
{
    if (!source_ || !target_)
        throw PresentationError("simplicial map needs a source and a target");
    assignment_.resize(source_->top_dim() + 1);
    for (int d = 0; d <= source_->top_dim(); ++d)
    {
        if (static_cast<int>(assignment_[d].size()) != source_->generator_count(d))
            throw PresentationError("map assignment is not total in dimension " + std::to_string(d));
        for (int i = 0; i < source_->generator_count(d); ++i)
        {
            const Simplex& y = assignment_[d][i];
            if (!target_->contains(y.gen))
                throw PresentationError("image of '" + source_->generator_name({d, i}) + "' is not a target simplex");
            if (y.dim() != d)
                throw PresentationError("image of '" + source_->generator_name({d, i}) + "' has dimension " + std::to_string(y.dim())
                                        + ", expected " + std::to_string(d));
        }
    }
}

const Simplex& SimplicialMap::image(GeneratorId g) const
{
    if (!source_->contains(g))
        throw PresentationError("generator not in the map's source");
    return assignment_[g.dim][g.index];
}

bool SimplicialMap::operator==(const SimplicialMap& other) const
{
    const bool same_ends = (source_ == other.source_ || source_->same_structure(*other.source_))
                           && (target_ == other.target_ || target_->same_structure(*other.target_));
    return same_ends && assignment_ == other.assignment_;
}

MapReport validate_map(const SimplicialMap& f)
{
    MapReport report;
    const Presentation& src = f.source();
    const Presentation& tgt = f.target();
    for (int d = 1; d <= src.top_dim(); ++d)
    {
        for (GeneratorId g : src.generators(d))
        {
            const Simplex& fg = f.image(g);
            for (int i = 0; i <= d; ++i)
            {
                Simplex lhs = apply_map(f, apply_face(src, Simplex(g), i));
                Simplex rhs = apply_face(tgt, fg, i);
                if (lhs != rhs)
                    report.violations.push_back({g, i, std::move(lhs), std::move(rhs)});
            }
        }
    }
    return report;
}

Simplex apply_map(const SimplicialMap& f, const Simplex& x)
{
    const Simplex& y = f.image(x.gen);
    return Simplex(y.word.compose_after(x.word), y.gen);
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (f.target_ptr() != g.source_ptr() && !f.target().same_structure(g.source()))
        throw PresentationError("cannot compose: target of the first map is not the source of the second");
    std::vector<std::vector<Simplex>> assignment(f.source().top_dim() + 1);
    for (GeneratorId x : f.source().all_generators())
        assignment[x.dim].push_back(apply_map(g, f.image(x)));
    return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(assignment));
}

SimplicialMap identity_map(PresentationPtr p)
{
    std::vector<std::vector<Simplex>> assignment(p->top_dim() + 1);
    for (GeneratorId g : p->all_generators())
        assignment[g.dim].emplace_back(g);
    return SimplicialMap(p, p, std::move(assignment));
}

SimplicialMap map_from_names(PresentationPtr source, PresentationPtr target,
                             const std::vector<std::pair<std::string, std::string>>& images)
{
    std::map<GeneratorId, Simplex> by_gen;
    for (const auto& [name, expr] : images)
    {
        auto g = source->find(name);
        if (!g)
            throw PresentationError("map assigns unknown or ambiguous source generator '" + name + "'");
        if (by_gen.count(*g))
            throw PresentationError("map assigns '" + name + "' twice");
        by_gen[*g] = parse_simplex(*target, expr, g->dim);
    }
    std::vector<std::vector<Simplex>> assignment(source->top_dim() + 1);
    for (GeneratorId g : source->all_generators())
    {
        auto it = by_gen.find(g);
        if (it == by_gen.end())
            throw PresentationError("map has no image for generator '" + source->generator_name(g) + "'");
        assignment[g.dim].push_back(it->second);
    }
    return SimplicialMap(std::move(source), std::move(target), std::move(assignment));
}

SimplicialMap inclusion_by_name(PresentationPtr sub, PresentationPtr ambient)
{
    std::vector<std::vector<Simplex>> assignment(sub->top_dim() + 1);
    for (GeneratorId g : sub->all_generators())
    {
        auto h = ambient->find(g.dim, sub->generator_name(g));
        if (!h)
            throw PresentationError("generator '" + sub->generator_name(g) + "' of the subcomplex is missing from the ambient presentation");
        assignment[g.dim].emplace_back(*h);
    }
    SimplicialMap incl(sub, ambient, std::move(assignment));
    if (!validate_map(incl).ok())
        throw PresentationError("subcomplex faces disagree with the ambient presentation");
    return incl;
}

}   // namespace sset
