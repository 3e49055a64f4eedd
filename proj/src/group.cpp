#include "sset/group.hpp"

#include <algorithm>
#include <numeric>

#include "sset/error.hpp"

namespace sset {

GroupTable::GroupTable(std::vector<std::string> elements, std::vector<std::vector<int>> mult, int identity)
    : elements_(std::move(elements)), mult_(std::move(mult)), identity_(identity)
{
    const int n = order();
    if (n < 1)
        throw Error("group table needs at least one element");
    if (identity_ < 0 || identity_ >= n)
        throw Error("group identity out of range");
    if (static_cast<int>(mult_.size()) != n)
        throw Error("group table must be " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : mult_)
    {
        if (static_cast<int>(row.size()) != n)
            throw Error("group table must be " + std::to_string(n) + "x" + std::to_string(n));
        for (int v : row)
            if (v < 0 || v >= n)
                throw Error("group table entry out of range");
    }
    for (const auto& name : elements_)
    {
        if (name.empty() || name.find_first_of(" ,()|*\t\n") != std::string::npos)
            throw Error("invalid group element name '" + name + "'");
    }
    {
        auto sorted = elements_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("duplicate group element name");
    }
    for (int a = 0; a < n; ++a)
    {
        if (mul(identity_, a) != a || mul(a, identity_) != a)
            throw Error("identity law fails for '" + elements_[a] + "'");
        bool has_inverse = false;
        for (int b = 0; b < n; ++b)
            has_inverse = has_inverse || (mul(a, b) == identity_ && mul(b, a) == identity_);
        if (!has_inverse)
            throw Error("'" + elements_[a] + "' has no inverse");
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error("associativity fails");
    }
}

GroupTable GroupTable::cyclic(int order)
{
    if (order < 1)
        throw Error("cyclic group order must be >= 1");
    std::vector<std::string> names;
    for (int k = 0; k < order; ++k)
        names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k));
    std::vector<std::vector<int>> mult(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            mult[a][b] = (a + b) % order;
    return GroupTable(std::move(names), std::move(mult), 0);
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b)
{
    const int na = a.order(), nb = b.order();
    std::vector<std::string> names;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            names.push_back(i == a.identity() && j == b.identity() ? std::string("e") : a.name(i) + "." + b.name(j));
    std::vector<std::vector<int>> mult(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y)
            mult[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return GroupTable(std::move(names), std::move(mult), a.identity() * nb + b.identity());
}

GroupTable GroupTable::symmetric(int k)
{
    if (k < 1 || k > 5)
        throw Error("symmetric group supported for 1 <= k <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
    {
        std::string s = "p";
        for (int v : perms[i])
            s += std::to_string(v);
        names.push_back(i == 0 ? std::string("e") : s);
    }
    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
    {
        for (int b = 0; b < n; ++b)
        {
            // (a b)(v) = a(b(v))
            std::vector<int> c(k);
            for (int v = 0; v < k; ++v)
                c[v] = perms[a][perms[b][v]];
            mult[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return GroupTable(std::move(names), std::move(mult), 0);
}

GroupTable GroupTable::subgroup(const GroupTable& g, const std::vector<int>& members)
{
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto position = [&](int a) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
        if (it == sorted.end() || *it != a)
            throw Error("subset is not closed under the product");
        return static_cast<int>(it - sorted.begin());
    };
    std::vector<std::string> names;
    for (int a : sorted)
    {
        if (a < 0 || a >= g.order())
            throw Error("subgroup member out of range");
        names.push_back(g.name(a));
    }
    std::vector<std::vector<int>> mult(sorted.size(), std::vector<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j < sorted.size(); ++j)
            mult[i][j] = position(g.mul(sorted[i], sorted[j]));
    return GroupTable(std::move(names), std::move(mult), position(g.identity()));
}

int GroupTable::inverse(int a) const
{
    for (int b = 0; b < order(); ++b)
        if (mul(a, b) == identity_)
            return b;
    throw Error("no inverse");
}

int GroupTable::index_of(const std::string& name) const
{
    auto it = std::find(elements_.begin(), elements_.end(), name);
    if (it == elements_.end())
        throw Error("unknown group element '" + name + "'");
    return static_cast<int>(it - elements_.begin());
}

std::vector<GroupTable> small_groups(int max_order)
{
    std::vector<GroupTable> out;
    for (int n = 1; n <= max_order; ++n)
    {
        out.push_back(GroupTable::cyclic(n));
        if (n == 4)
            out.push_back(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)));
        if (n == 6)
            out.push_back(GroupTable::symmetric(3));
    }
    return out;
}

std::string nerve_name(const GroupTable& g, const std::vector<int>& tuple)
{
    if (tuple.empty())
        return "*";
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i)
    {
        if (i)
            out += ",";
        out += g.name(tuple[i]);
    }
    return out + ")";
}

namespace {

FaceRef tuple_face_ref(const GroupTable& g, const std::vector<int>& tuple)
{
    // Identity entries at positions p_1 < ... < p_k give the word s_{p_k} ... s_{p_1}.
    FaceRef ref;
    std::vector<int> reduced;
    for (int pos = static_cast<int>(tuple.size()) - 1; pos >= 0; --pos)
    {
        if (tuple[pos] == g.identity())
            ref.degeneracies.push_back(pos);
    }
    for (int v : tuple)
        if (v != g.identity())
            reduced.push_back(v);
    ref.generator = nerve_name(g, reduced);
    return ref;
}

std::vector<int> tuple_face(const GroupTable& g, const std::vector<int>& t, int i)
{
    const int n = static_cast<int>(t.size());
    std::vector<int> out;
    if (i == 0)
        out.assign(t.begin() + 1, t.end());
    else if (i == n)
        out.assign(t.begin(), t.end() - 1);
    else
    {
        for (int k = 0; k < n; ++k)
        {
            if (k == i - 1)
                out.push_back(g.mul(t[k], t[k + 1]));
            else if (k != i)
                out.push_back(t[k]);
        }
    }
    return out;
}

}   // namespace

Presentation nerve(const GroupTable& g, int top_dim)
{
    if (top_dim < 1)
        throw Error("nerve needs top dimension >= 1");
    PresentationBuilder b("nerve", top_dim);
    b.set_truncated(true);
    std::vector<int> others;
    for (int a = 0; a < g.order(); ++a)
        if (a != g.identity())
            others.push_back(a);

    b.add_generator(0, "*");
    std::vector<std::vector<int>> layer{{}};
    for (int n = 1; n <= top_dim; ++n)
    {
        std::vector<std::vector<int>> next;
        for (const auto& t : layer)
            for (int a : others)
            {
                auto u = t;
                u.push_back(a);
                next.push_back(std::move(u));
            }
        for (const auto& t : next)
        {
            std::vector<FaceRef> faces;
            for (int i = 0; i <= n; ++i)
                faces.push_back(tuple_face_ref(g, tuple_face(g, t, i)));
            b.add_generator(n, nerve_name(g, t), std::move(faces));
        }
        layer = std::move(next);
    }
    return b.build();
}

Simplex nerve_simplex(const Presentation& bg, const GroupTable& g, const std::vector<int>& tuple)
{
    FaceRef ref = tuple_face_ref(g, tuple);
    const int base_dim = static_cast<int>(tuple.size() - ref.degeneracies.size());
    auto gen = bg.find(base_dim, ref.generator);
    if (!gen)
        throw PresentationError("tuple " + nerve_name(g, tuple) + " is not representable in this nerve");
    return Simplex(DegeneracyWord::from_sequence(ref.degeneracies, base_dim), *gen);
}

}   // namespace sset
