/**
 * Categorical product of presentations.
 *
 * (X x Y)_n = X_n x Y_n with componentwise faces and degeneracies. A pair
 * (s_A x, s_B y) of normal forms is nondegenerate exactly when the index sets
 * A and B are disjoint; a common index c factors out as
 * s_c(s_{A'} x, s_{B'} y). The product presentation therefore has one
 * generator per disjoint pair.
 */
#ifndef SSET_PRODUCT_HPP
#define SSET_PRODUCT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sset/morphism.hpp"
#include "sset/presentation.hpp"

namespace sset {

class ProductPresentation
{
    public:
        using Pair = std::pair<Simplex, Simplex>;

        const Presentation& presentation() const { return *presentation_; }
        const PresentationPtr& presentation_ptr() const { return presentation_; }
        const Presentation& left() const { return *left_; }
        const Presentation& right() const { return *right_; }
        const PresentationPtr& left_ptr() const { return left_; }
        const PresentationPtr& right_ptr() const { return right_; }

        /** Components of a product generator. */
        const Pair& components(GeneratorId g) const;

        /** Product simplex of a pair of equal-dimension simplices. */
        Simplex pair(const Simplex& a, const Simplex& b) const;

        /** Components of an arbitrary product simplex. */
        Pair split(const Simplex& x) const;

    private:
        friend ProductPresentation product(PresentationPtr x, PresentationPtr y);

        PresentationPtr presentation_;
        PresentationPtr left_;
        PresentationPtr right_;
        std::vector<std::vector<Pair>> components_;
        std::map<Pair, GeneratorId> index_;
};

/**
 * Factor a pair into s_C (a*, b*) with a*, b* sharing no degeneracy index.
 * Returns C and the reduced pair.
 */
std::pair<DegeneracyWord, ProductPresentation::Pair> reduce_pair(const Simplex& a, const Simplex& b);

/**
 * The product, complete up to dimension X.top + Y.top when both factors are
 * complete. With a truncated factor the result is truncated at the smallest
 * truncated top dimension, since X_n is only known up to there.
 */
ProductPresentation product(PresentationPtr x, PresentationPtr y);

/** Generator name "(a|b)" from compact component notations. */
std::string product_name(const Presentation& x, const Presentation& y, const Simplex& a, const Simplex& b);

std::pair<SimplicialMap, SimplicialMap> projections(const ProductPresentation& p);

/**
 * X -> X x Y, x -> (x, degenerate copy of the vertex `v` of Y); with Y = I
 * and v = [0] or [1] these are the end inclusions of a cylinder.
 */
SimplicialMap slice_inclusion(const ProductPresentation& p, GeneratorId right_vertex);

/**
 * The k-th nondegenerate (p+1)-simplex of Delta^p x Delta^1:
 * S_k = (s_k E_p, s_{W_k} e) where W_k = {0..p} minus k.
 */
struct PrismSimplex
{
    int k;
    Simplex base;        // s_k E_p in Delta^p
    Simplex interval;    // complementary degeneracy of the edge of Delta^1
    std::string vertex_form;   // e.g. "[0,1,1',2']"
};

std::vector<PrismSimplex> prism_decomposition(int p);

/** Nondegenerate (p+q)-simplices of Delta^p x Delta^q. */
int count_nondegenerate_top(int p, int q);

}   // namespace sset

#endif
