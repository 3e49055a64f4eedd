#ifndef SSET_MORPHISM_HPP
#define SSET_MORPHISM_HPP

#include <vector>

#include "sset/presentation.hpp"

namespace sset {

/**
 * Simplicial map stored on generators only. The image of a degenerate
 * simplex s_W g is always recomputed as s_W f(g), so degeneracies commute
 * by construction and only faces need checking.
 */
class SimplicialMap
{
    public:
        /**
         * `assignment[d][i]` is the image of generator (d, i). Throws
         * PresentationError when the assignment is not total or some image
         * has the wrong dimension.
         */
        SimplicialMap(PresentationPtr source, PresentationPtr target, std::vector<std::vector<Simplex>> assignment);

        const Presentation& source() const { return *source_; }
        const Presentation& target() const { return *target_; }
        const PresentationPtr& source_ptr() const { return source_; }
        const PresentationPtr& target_ptr() const { return target_; }

        const Simplex& image(GeneratorId g) const;
        const std::vector<std::vector<Simplex>>& assignment() const { return assignment_; }

        bool operator==(const SimplicialMap& other) const;

    private:
        PresentationPtr source_;
        PresentationPtr target_;
        std::vector<std::vector<Simplex>> assignment_;
};

struct MapViolation
{
    GeneratorId generator;
    int face;
    Simplex image_of_face;   // f(d_i g)
    Simplex face_of_image;   // d_i f(g)
};

struct MapReport
{
    std::vector<MapViolation> violations;

    bool ok() const { return violations.empty(); }
};

/** Every (g, i) with f(d_i g) != d_i f(g). */
MapReport validate_map(const SimplicialMap& f);

/** f(s_W g) = s_W f(g), normalized. */
Simplex apply_map(const SimplicialMap& f, const Simplex& x);

/** g after f; throws PresentationError when f's target is not g's source. */
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

SimplicialMap identity_map(PresentationPtr p);

/**
 * Map built from generator names: `images` pairs a source generator name
 * with a simplex expression in the target.
 */
SimplicialMap map_from_names(PresentationPtr source, PresentationPtr target,
                             const std::vector<std::pair<std::string, std::string>>& images);

/**
 * The same-named generators of `sub` inside `ambient`, as a map. Throws
 * PresentationError when some generator is missing or a face disagrees.
 */
SimplicialMap inclusion_by_name(PresentationPtr sub, PresentationPtr ambient);

}   // namespace sset

#endif
