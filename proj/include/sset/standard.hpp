#ifndef SSET_STANDARD_HPP
#define SSET_STANDARD_HPP

#include <string>
#include <vector>

#include "sset/presentation.hpp"

namespace sset {

// Standard complexes. Generators of the simplex-like constructions are named
// by their vertex lists, e.g. "[0,2]".

/** Delta^n: all nonempty increasing subsets of {0..n}. */
Presentation standard_simplex(int n);

/** Boundary of Delta^n: Delta^n minus its top subset. */
Presentation boundary(int n);

/** Horn Lambda^n_k: boundary of Delta^n minus the face omitting only k. */
Presentation horn(int n, int k);

/**
 * Sphere with one vertex "v" and one n-cell "sigma" whose faces are all the
 * degenerate (n-1)-simplex on v.
 */
Presentation sphere_two_cell(int n);

/**
 * Presentation whose faces reference generators only (no degeneracy words):
 * the data of a Delta set. The wrapper records that degenerate simplices are
 * not part of the structure.
 */
class DeltaSet
{
    public:
        /** Throws PresentationError if some face entry is degenerate. */
        explicit DeltaSet(Presentation data);

        const Presentation& data() const { return data_; }

    private:
        Presentation data_;
};

/**
 * Freely adjoin all degeneracies. The normal-form machinery already
 * represents them, so this re-tags the data after checking the face
 * identities; throws PresentationError on a violation.
 */
Presentation adjoin_degeneracies(const DeltaSet& delta);

/**
 * The cone: Delta^2 with edge [0,2] glued to [1,2]. Vertices "[0]", "[2]";
 * edges "a" (the glued edge) and "b" (the circular base); triangle "T".
 */
DeltaSet cone_fixture();

/** Two vertices v0, v1 and two edges e0, e1 with d0 = v0, d1 = v1. */
DeltaSet double_edge_circle();

/** Delta^0 as a Delta set (one vertex). */
DeltaSet delta_point();

}   // namespace sset

#endif
