#ifndef SSET_GROUP_HPP
#define SSET_GROUP_HPP

#include <string>
#include <vector>

#include "sset/presentation.hpp"

namespace sset {

/**
 * Finite group given by its Cayley table. The constructor checks the
 * associativity, identity and inverse laws and throws Error otherwise.
 */
class GroupTable
{
    public:
        GroupTable(std::vector<std::string> elements, std::vector<std::vector<int>> mult, int identity);

        /** Z/M with elements e, g, g2, ..., g{M-1}. */
        static GroupTable cyclic(int order);
        /** Direct product with elements "a.b" named from the factors; identity "e". */
        static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
        /** Symmetric group S_k on permutations named p<images>, identity "e". */
        static GroupTable symmetric(int k);

        /**
         * Restriction to `members`, keeping element names. Throws Error when
         * the subset is not closed under the product.
         */
        static GroupTable subgroup(const GroupTable& g, const std::vector<int>& members);

        int order() const { return static_cast<int>(elements_.size()); }
        int identity() const { return identity_; }
        int mul(int a, int b) const { return mult_[a][b]; }
        int inverse(int a) const;
        const std::string& name(int a) const { return elements_[a]; }
        const std::vector<std::string>& elements() const { return elements_; }
        int index_of(const std::string& name) const;

    private:
        std::vector<std::string> elements_;
        std::vector<std::vector<int>> mult_;
        int identity_;
};

/**
 * Every group of order <= 6 up to isomorphism: Z1..Z6, Z2xZ2 and S3.
 */
std::vector<GroupTable> small_groups(int max_order);

/**
 * Nerve BG truncated at dimension D. The n-simplices are n-tuples over G; the
 * generators are the tuples with no identity entry, named "(g1,...,gn)", and
 * the single vertex is "*". Faces: d_0 drops the first entry, d_n drops the
 * last, d_i multiplies entries i and i+1. A tuple with identity entries at
 * positions P is the degeneracy s_P (decreasing) of the tuple without them.
 */
Presentation nerve(const GroupTable& g, int top_dim);

/** Name of the nerve generator for an identity-free tuple. */
std::string nerve_name(const GroupTable& g, const std::vector<int>& tuple);

/** The simplex of BG for any tuple (identity entries allowed). */
Simplex nerve_simplex(const Presentation& bg, const GroupTable& g, const std::vector<int>& tuple);

}   // namespace sset

#endif
