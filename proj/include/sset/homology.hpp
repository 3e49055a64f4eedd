/**
 * Integer chain complexes and homology.
 *
 * The primary complex is the normalized one: basis = nondegenerate
 * generators, and faces that land on degenerate simplices contribute zero.
 * The unnormalized complex (basis = every simplex) is kept as an oracle for
 * low degrees.
 */
#ifndef SSET_HOMOLOGY_HPP
#define SSET_HOMOLOGY_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sset/presentation.hpp"

namespace sset {

using Integer = boost::multiprecision::cpp_int;

/** Dense row-major integer matrix. */
class IntMatrix
{
    public:
        IntMatrix() = default;
        IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

        static IntMatrix identity(std::size_t n);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
        const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

        bool is_zero() const;
        bool operator==(const IntMatrix&) const = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Integer> data_;
};

/** Throws Error on a shape mismatch. */
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/**
 * U * M * V = D with U, V unimodular and D diagonal; `factors` lists the
 * nonzero diagonal entries, each positive and dividing the next.
 */
struct SNFResult
{
    std::vector<Integer> factors;
    std::size_t rank = 0;
    IntMatrix u;
    IntMatrix v;
    IntMatrix d;
};

/**
 * Exact reduction. Pivot = entry of least absolute value in the remaining
 * block, first in row-major order on ties.
 */
SNFResult smith_normal_form(const IntMatrix& m);

/**
 * `basis[n]` is the ordered basis of C_n for n = 0..N; `boundary[n]` maps C_n
 * to C_{n-1} (rows = |basis[n-1]|, cols = |basis[n]|), with boundary[0] a
 * 0 x |basis[0]| matrix.
 */
struct ChainComplex
{
    std::vector<std::vector<Simplex>> basis;
    std::vector<IntMatrix> boundary;

    int max_dim() const { return static_cast<int>(basis.size()) - 1; }
};

/** Normalized complex up to chain dimension N. */
ChainComplex normalized_complex(const Presentation& p, int max_dim);

/** Every simplex as a basis element, faces taken literally. */
ChainComplex unnormalized_complex(const Presentation& p, int max_dim);

/** True when boundary[n-1] * boundary[n] = 0 for every n. */
bool boundary_squares_to_zero(const ChainComplex& c);

struct HomologyGroup
{
    int betti = 0;
    std::vector<Integer> torsion;   // invariant factors > 1, each dividing the next

    bool operator==(const HomologyGroup&) const = default;
};

/** "0", "Z", "Z^2 ⊕ Z/2", ... */
std::string format_group(const HomologyGroup& h);

/** H_0 .. H_{N-1} of a complex with chain dimensions 0..N. */
std::vector<HomologyGroup> homology_of(const ChainComplex& c);

/** Normalized homology in degrees 0..N-1. */
std::vector<HomologyGroup> homology(const Presentation& p, int max_dim);

/** Alternating generator count over 0..top_dim. */
long long euler_characteristic(const Presentation& p);

}   // namespace sset

#endif
