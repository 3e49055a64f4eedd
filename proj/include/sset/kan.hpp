/**
 * Horns, fillers and the Kan condition up to a dimension bound.
 */
#ifndef SSET_KAN_HPP
#define SSET_KAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "sset/morphism.hpp"
#include "sset/presentation.hpp"

namespace sset {

/**
 * A horn Lambda^n_k in a presentation: faces[i] for i != k are
 * (n-1)-simplices, faces[k] is empty.
 */
struct HornSpec
{
    int n = 1;
    int k = 0;
    std::vector<std::optional<Simplex>> faces;

    /** Horn with every listed face set; `given` pairs a face index with a simplex. */
    static HornSpec make(int n, int k, std::vector<std::pair<int, Simplex>> given);
};

/** "Lambda^n_k [d0 = ..., d2 = ...]" in canonical notation. */
std::string describe_horn(const Presentation& p, const HornSpec& h);

/**
 * d_i x_j = d_{j-1} x_i for all i < j, both different from k. Throws
 * IndexError on wrong face count or dimension.
 */
bool horn_compatible(const HornSpec& h, const Presentation& p);

/**
 * Least z in simplices(P, n) with d_i z = x_i for i != k. Throws
 * TruncationError when X_n is not representable.
 */
std::optional<Simplex> fill_horn(const Presentation& p, const HornSpec& h);

/** Every filler, in enumeration order. */
std::vector<Simplex> all_fillers(const Presentation& p, const HornSpec& h);

/**
 * The n-simplices of P with their faces, cached for repeated filler and
 * witness searches. Lookups preserve the enumeration order.
 */
class FillerIndex
{
    public:
        /** Throws TruncationError when X_n is not representable. */
        FillerIndex(const Presentation& p, int n);

        int dim() const { return n_; }
        const std::vector<Simplex>& simplices() const { return simplices_; }
        const std::vector<Simplex>& faces_of(std::size_t index) const { return faces_[index]; }

        std::vector<Simplex> fillers(const HornSpec& h) const;
        std::optional<Simplex> least_filler(const HornSpec& h) const;

        /** Simplices whose full face tuple is `boundary`. */
        std::vector<Simplex> with_boundary(const std::vector<Simplex>& boundary) const;

    private:
        int n_;
        std::vector<Simplex> simplices_;
        std::vector<std::vector<Simplex>> faces_;
};

struct KanReport
{
    int max_dim = 0;
    std::size_t horns_checked = 0;
    std::vector<HornSpec> unfillable;

    bool kan_up_to_bound() const { return unfillable.empty(); }
};

/**
 * Every compatible horn with faces drawn from simplices(P, n-1), for
 * 1 <= n <= max_dim and all k. Throws TruncationError when X_{max_dim} is
 * not representable.
 */
KanReport kan_check(const Presentation& p, int max_dim);

/**
 * The horn as a map Lambda^n_k -> P: the generator on vertex set S goes to
 * the matching iterated face of x_i for some i != k missing from S.
 */
SimplicialMap horn_map(PresentationPtr p, const HornSpec& h);

/** Delta^n -> P sending the top generator to z. */
SimplicialMap simplex_map(PresentationPtr p, const Simplex& z);

}   // namespace sset

#endif
