/**
 * Combinatorial homotopy theory: path components, homotopy of simplices,
 * homotopy groups with the horn-filling product, homotopy data for maps,
 * relative groups and the long exact sequence.
 *
 * The homotopy relations are equivalences only on Kan complexes. Every
 * partition here is the symmetric-transitive closure of the raw relation,
 * and `closure_needed` records whether taking the closure changed anything.
 */
#ifndef SSET_HOMOTOPY_HPP
#define SSET_HOMOTOPY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sset/kan.hpp"
#include "sset/morphism.hpp"
#include "sset/product.hpp"

namespace sset {

/** A presentation with a chosen vertex; * is that vertex with all its degeneracies. */
class BasedPresentation
{
    public:
        /** Throws PresentationError unless `basepoint` is a vertex of p. */
        BasedPresentation(PresentationPtr p, GeneratorId basepoint);
        /** Basepoint by name; empty name picks the first vertex. */
        BasedPresentation(PresentationPtr p, const std::string& basepoint_name = "");

        const Presentation& presentation() const { return *p_; }
        const PresentationPtr& presentation_ptr() const { return p_; }
        GeneratorId basepoint() const { return basepoint_; }

        bool in_base(const Simplex& x) const { return x.gen == basepoint_; }
        Simplex base_simplex(int n) const { return degenerate_vertex(basepoint_, n); }

    private:
        PresentationPtr p_;
        GeneratorId basepoint_;
};

/** Classes ordered by their least member; members sorted. */
struct Partition
{
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;
    bool closure_needed = false;

    std::size_t size() const { return classes.size(); }
};

/** Closure of `related` on 0..count-1, plus the reflexive pairs. */
Partition close_relation(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& related);

struct Components
{
    std::vector<GeneratorId> vertices;
    Partition partition;   // over `vertices`

    /** Component index of a vertex. */
    int component_of(GeneratorId v) const;
};

/** Closure of "some edge e has d_1 e = v and d_0 e = w". */
Components path_components(const Presentation& p);

/**
 * A witness y for x ~ x' in the (r, r+1) form: d_r y = x, d_{r+1} y = x',
 * d_i y = d_i s_r x otherwise. r = n is the standard relation (d_n, d_{n+1},
 * d_i y = s_{n-1} d_i x for i < n). Empty when the faces of x and x' differ
 * or nothing fits. Throws TruncationError when X_{n+1} is not representable.
 */
std::optional<Simplex> homotopy_witness(const Presentation& p, const Simplex& x, const Simplex& xp, std::optional<int> r = std::nullopt);

/** Existence of a standard-form witness; no closure. */
bool simplices_homotopic(const Presentation& p, const Simplex& x, const Simplex& xp);

/** Partition of `reps` (all of one dimension) by the (r, r+1) relation. */
Partition homotopy_classes(const Presentation& p, const std::vector<Simplex>& reps, std::optional<int> r = std::nullopt);

/** Every n-simplex with all faces in *. */
std::vector<Simplex> pi_representatives(const BasedPresentation& b, int n);

/**
 * pi_n(X, *) or pi_n(X, A, *). `table` is empty for the pointed set
 * pi_1(X, A). Witness checks that do not apply are left empty.
 */
struct PiGroup
{
    int n = 0;
    bool relative = false;
    std::vector<Simplex> representatives;
    Partition classes;
    std::vector<std::string> labels;          // canonical notation of each class's first member
    std::vector<std::vector<int>> table;      // table[a][b] = class of a.b
    int identity = 0;                         // class of the degenerate basepoint
    std::vector<int> inverse;

    bool group_axioms_ok = false;
    bool product_well_defined = false;         // same class for every representative pair and filler
    std::size_t horns_with_several_fillers = 0;
    std::optional<bool> identity_witnesses_ok;     // s_n x gives *x = x, s_{n-1} x gives x* = x
    std::optional<bool> inverse_witnesses_ok;      // horn-search inverses agree with the table
    std::optional<bool> associativity_witnesses_ok;

    std::size_t order() const { return classes.size(); }
    bool is_group() const { return !table.empty(); }
    bool abelian() const;

    /** Class of a representative simplex; -1 when it is not one. */
    int class_of_simplex(const Simplex& x) const;
};

/**
 * Requires X_{n+2} representable (associativity needs it). Throws HornError
 * naming the horn when a product horn has no filler.
 */
PiGroup pi_n(const BasedPresentation& b, int n);

/**
 * A sub-presentation matched by generator names: every generator of `sub`
 * must exist in `ambient` with the same faces.
 */
class Subcomplex
{
    public:
        /** Throws PresentationError when `sub` is not face-closed inside `ambient`. */
        Subcomplex(PresentationPtr ambient, PresentationPtr sub);

        const Presentation& ambient() const { return inclusion_.target(); }
        const Presentation& sub() const { return inclusion_.source(); }
        const PresentationPtr& sub_ptr() const { return inclusion_.source_ptr(); }
        const SimplicialMap& inclusion() const { return inclusion_; }

        bool contains(const Simplex& x) const;
        Simplex to_ambient(const Simplex& a) const { return apply_map(inclusion_, a); }
        /** Throws PresentationError when x is not in the subcomplex. */
        Simplex to_sub(const Simplex& x) const;

    private:
        SimplicialMap inclusion_;
        std::map<GeneratorId, GeneratorId> back_;
};

/** The basepoint of `b`, as a based presentation of the subcomplex. */
BasedPresentation based_sub(const BasedPresentation& b, const Subcomplex& a);

/**
 * w with d_0 w in A, d_n w = x, d_{n+1} w = x', d_i w = s_{n-1} d_i x for
 * 1 <= i <= n-1; requires d_i x = d_i x' for i >= 1 and d_0 x, d_0 x' in A.
 * y = d_0 w is then the homotopy of d_0 x and d_0 x' inside A.
 */
std::optional<Simplex> rel_homotopy_witness(const Presentation& x_pres, const Subcomplex& a, const Simplex& x, const Simplex& xp);

bool simplices_homotopic_rel(const BasedPresentation& b, const Subcomplex& a, const Simplex& x, const Simplex& xp);

/** n-simplices with d_0 x in A and d_i x in * for i >= 1. */
std::vector<Simplex> pi_rel_representatives(const BasedPresentation& b, const Subcomplex& a, int n);

/** pi_n(X, A, *); a group for n >= 2, a pointed set for n = 1. */
PiGroup pi_n_rel(const BasedPresentation& b, const Subcomplex& a, int n);

/**
 * The boundary pi_n(X, A) -> pi_{n-1}(A), [x] -> [d_0 x], for every class.
 * For n = 1 the target is the component index in path_components(A).
 * Throws ConsistencyError when the image depends on the representative.
 */
std::vector<int> les_boundary_map(const BasedPresentation& b, const Subcomplex& a, const PiGroup& rel);

/** Boundary of one relative class. */
int les_boundary(const BasedPresentation& b, const Subcomplex& a, const PiGroup& rel, int rel_class);

/**
 * The three maps at level n of
 *   pi_n(A) -> pi_n(X) -> pi_n(X, A) -> pi_{n-1}(A)
 * and the exactness checks at pi_n(X) and at pi_n(X, A).
 */
struct LesReport
{
    int n = 0;
    PiGroup pi_a;
    PiGroup pi_x;
    PiGroup pi_rel;
    std::vector<int> i_star;      // pi_n(A) -> pi_n(X)
    std::vector<int> j_star;      // pi_n(X) -> pi_n(X, A)
    std::vector<int> boundary;    // pi_n(X, A) -> pi_{n-1}(A)
    int boundary_base = 0;        // base class of pi_{n-1}(A)
    std::vector<int> image_i;
    std::vector<int> kernel_j;
    std::vector<int> image_j;
    std::vector<int> kernel_boundary;

    bool exact_at_x() const { return image_i == kernel_j; }
    bool exact_at_rel() const { return image_j == kernel_boundary; }
};

LesReport les_exactness(const BasedPresentation& b, const Subcomplex& a, int n);

/**
 * h[p] maps each simplex of X_p (degenerate ones included) to the list
 * h_0(x), ..., h_p(x) in Y_{p+1}, for p = 0..bound.
 */
struct HomotopyData
{
    int bound = 0;
    std::vector<std::map<Simplex, std::vector<Simplex>>> h;

    /** Throws Error when the value is missing. */
    const Simplex& at(int p, int j, const Simplex& x) const;
};

struct HomotopyViolation
{
    std::string condition;   // e.g. "d_i h_j = h_{j-1} d_i (i < j)"
    int p;
    Simplex x;
    int i;
    int j;
    Simplex lhs;
    Simplex rhs;
};

struct HomotopyReport
{
    std::vector<HomotopyViolation> violations;

    bool ok() const { return violations.empty(); }
};

/**
 * All seven identities of the combinatorial homotopy from f to g on every
 * x in X_p, p <= bound; identities that need h in dimension p+1 are checked
 * for p < bound. Orientation: d_0 h_0 = f and d_{p+1} h_p = g.
 */
HomotopyReport verify_homotopy_data(const SimplicialMap& f, const SimplicialMap& g, const HomotopyData& h, int bound);

/** h_j = s_j f. */
HomotopyData constant_homotopy(const SimplicialMap& f, int bound);

/**
 * h_k(x) = H(s_k x, s_{W_k} e) with W_k = {0..p} minus k and e the edge of
 * Delta^1. `cylinder` must be X x Delta^1 and H a map out of it.
 */
HomotopyData homotopy_from_cylinder(const ProductPresentation& cylinder, const SimplicialMap& hmap, int bound);

/** (f, g) = (H after i_1, H after i_0). */
std::pair<SimplicialMap, SimplicialMap> cylinder_ends(const ProductPresentation& cylinder, const SimplicialMap& hmap);

}   // namespace sset

#endif
