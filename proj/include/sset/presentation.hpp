/**
 * Finitely presented simplicial sets.
 *
 * A presentation lists the nondegenerate generators in each dimension up to
 * a top dimension D, together with the faces d_i of every generator as
 * simplices in normal form. Degenerate simplices are never stored; they are
 * generated freely and normalized by the simplicial identities.
 *
 * A presentation is either complete (there are no generators above D, so
 * every dimension can be enumerated) or truncated (dimensions above D are
 * unknown, e.g. a nerve cut off at D). Operations that need simplices above D
 * of a truncated presentation throw TruncationError.
 */
#ifndef SSET_PRESENTATION_HPP
#define SSET_PRESENTATION_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sset/simplex.hpp"

namespace sset {

class Presentation
{
    public:
        Presentation() = default;

        const std::string& name() const { return name_; }
        int top_dim() const { return top_dim_; }
        bool truncated() const { return truncated_; }

        /** Number of generators in dimension `dim` (0 outside 0..top_dim). */
        int generator_count(int dim) const;
        std::vector<GeneratorId> generators(int dim) const;
        std::vector<GeneratorId> all_generators() const;
        std::size_t total_generators() const;

        const std::string& generator_name(GeneratorId g) const;
        bool contains(GeneratorId g) const;

        std::optional<GeneratorId> find(int dim, std::string_view name) const;
        /** Lookup across all dimensions; empty if absent or ambiguous. */
        std::optional<GeneratorId> find(std::string_view name) const;

        /** Stored faces d_0 g, ..., d_m g of a generator of dimension m. */
        std::span<const Simplex> faces(GeneratorId g) const;

        /** True when simplices of dimension n can be enumerated exactly. */
        bool representable(int n) const { return !truncated_ || n <= top_dim_; }

        /** Throws TruncationError when `representable(n)` fails. */
        void require_representable(int n, std::string_view what) const;

        /** Structural equality: same name-sorted generators and faces. */
        bool same_structure(const Presentation& other) const;

    private:
        friend class PresentationBuilder;

        std::string name_;
        int top_dim_ = 0;
        bool truncated_ = false;
        std::vector<std::vector<std::string>> names_;
        std::vector<std::vector<std::vector<Simplex>>> faces_;
        std::vector<std::unordered_map<std::string, int>> lookup_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/**
 * Face entry by name: degeneracy operators (outermost first, any order) over
 * a generator name. The generator dimension is implied by the face dimension
 * minus the number of operators.
 */
struct FaceRef
{
    std::vector<int> degeneracies;
    std::string generator;
};

/**
 * Collects generators by name and resolves them into a Presentation.
 * Generators are sorted by name within each dimension; face words that are
 * not strictly decreasing are normalized with a warning.
 */
class PresentationBuilder
{
    public:
        PresentationBuilder(std::string name, int top_dim);

        PresentationBuilder& set_truncated(bool truncated);
        PresentationBuilder& add_generator(int dim, std::string name, std::vector<FaceRef> faces = {});

        /** Throws PresentationError for dangling names, wrong face counts, duplicates. */
        Presentation build(std::vector<std::string>* warnings = nullptr) const;
        PresentationPtr build_shared(std::vector<std::string>* warnings = nullptr) const;

    private:
        struct Pending
        {
            int dim;
            std::string name;
            std::vector<FaceRef> faces;
        };

        std::string name_;
        int top_dim_;
        bool truncated_ = false;
        std::vector<Pending> pending_;
};

/** Canonical notation "s2 s0 name"; just "name" for a generator. */
std::string notation(const Presentation& p, const Simplex& x);

/** `notation` with '.' instead of spaces, safe to embed in generator names. */
std::string compact_notation(const Presentation& p, const Simplex& x);

/** Face reference reproducing `x` by name. */
FaceRef to_face_ref(const Presentation& p, const Simplex& x);

/**
 * Parse "s1 s0 name" (operators in any order, normalized). When `dim` is
 * given the generator is looked up in dimension dim - #operators; otherwise
 * the name must be unique across dimensions.
 */
Simplex parse_simplex(const Presentation& p, std::string_view expr, std::optional<int> dim = std::nullopt);

/** Normal form of d_i x, rewriting d_i past the degeneracy word. */
Simplex apply_face(const Presentation& p, const Simplex& x, int i);

/** Normal form of s_i x. */
Simplex apply_degeneracy(const Presentation& p, const Simplex& x, int i);

/** The generator itself as a simplex. */
inline Simplex as_simplex(GeneratorId g) { return Simplex(g); }

/** The n-dimensional degeneracy of a vertex, s_{n-1} ... s_0 v. */
Simplex degenerate_vertex(GeneratorId vertex, int n);

/** Vertices 0..n of an n-simplex (vertex j is the face spanned by j alone). */
std::vector<GeneratorId> vertices(const Presentation& p, const Simplex& x);

/** One failure of d_i d_j g = d_{j-1} d_i g with i < j. */
struct IdentityViolation
{
    GeneratorId generator;
    int i;
    int j;
    Simplex lhs;    // d_i d_j g
    Simplex rhs;    // d_{j-1} d_i g
};

struct ValidationReport
{
    std::vector<IdentityViolation> violations;

    bool ok() const { return violations.empty(); }
};

/**
 * Check the face-face identity on every generator. The mixed and s-s
 * identities hold by construction of the normal form.
 */
ValidationReport validate(const Presentation& p);

/**
 * Every n-simplex (degenerate included) in enumeration order; the count is
 * sum over m of g_m * C(n, m).
 */
std::vector<Simplex> simplices(const Presentation& p, int n);

/** Only the nondegenerate n-simplices (the generators of dimension n). */
std::vector<Simplex> nondegenerate_simplices(const Presentation& p, int n);

/** sum over m <= n of g_m * C(n, m), without enumerating. */
std::size_t simplex_count(const Presentation& p, int n);

}   // namespace sset

#endif
