#include "sset/standard.hpp"

#include <functional>

#include "sset/error.hpp"

namespace sset {

namespace {

std::string subset_name(const std::vector<int>& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

/**
 * Presentation on the nonempty increasing subsets of {0..n} accepted by
 * `keep`. Faces delete one vertex; `keep` must be closed under that.
 */
Presentation subset_complex(const std::string& name, int n, int top_dim, const std::function<bool(const std::vector<int>&)>& keep)
{
    PresentationBuilder b(name, std::max(top_dim, 0));
    const int count = n + 1;
    for (unsigned mask = 1; mask < (1u << count); ++mask)
    {
        std::vector<int> s;
        for (int v = 0; v < count; ++v)
            if (mask & (1u << v))
                s.push_back(v);
        if (!keep(s))
            continue;
        const int dim = static_cast<int>(s.size()) - 1;
        std::vector<FaceRef> faces;
        if (dim > 0)
        {
            for (int i = 0; i <= dim; ++i)
            {
                std::vector<int> f = s;
                f.erase(f.begin() + i);
                faces.push_back(FaceRef{{}, subset_name(f)});
            }
        }
        b.add_generator(dim, subset_name(s), std::move(faces));
    }
    return b.build();
}

}   // namespace

Presentation standard_simplex(int n)
{
    if (n < 0)
        throw IndexError("standard simplex needs n >= 0");
    return subset_complex("delta" + std::to_string(n), n, n, [](const std::vector<int>&) { return true; });
}

Presentation boundary(int n)
{
    if (n < 0)
        throw IndexError("boundary needs n >= 0");
    return subset_complex("boundary" + std::to_string(n), n, n - 1,
                          [n](const std::vector<int>& s) { return static_cast<int>(s.size()) < n + 1; });
}

Presentation horn(int n, int k)
{
    if (n < 1)
        throw IndexError("horn needs n >= 1");
    if (k < 0 || k > n)
        throw IndexError("horn index k=" + std::to_string(k) + " out of range 0.." + std::to_string(n));
    return subset_complex("horn" + std::to_string(n) + "_" + std::to_string(k), n, n - 1, [n, k](const std::vector<int>& s) {
        if (static_cast<int>(s.size()) == n + 1)
            return false;
        if (static_cast<int>(s.size()) == n)
        {
            for (int v : s)
                if (v == k)
                    return true;
            return false;   // the face omitting only k
        }
        return true;
    });
}

Presentation sphere_two_cell(int n)
{
    if (n < 1)
        throw IndexError("two-cell sphere needs n >= 1");
    PresentationBuilder b("sphere" + std::to_string(n), n);
    b.add_generator(0, "v");
    std::vector<int> collapse;
    for (int c = n - 2; c >= 0; --c)
        collapse.push_back(c);
    b.add_generator(n, "sigma", std::vector<FaceRef>(n + 1, FaceRef{collapse, "v"}));
    return b.build();
}

DeltaSet::DeltaSet(Presentation data) : data_(std::move(data))
{
    for (GeneratorId g : data_.all_generators())
    {
        for (const Simplex& f : data_.faces(g))
        {
            if (f.degenerate())
                throw PresentationError("Delta set face of '" + data_.generator_name(g) + "' is degenerate");
        }
    }
}

Presentation adjoin_degeneracies(const DeltaSet& delta)
{
    auto report = validate(delta.data());
    if (!report.ok())
        throw PresentationError("Delta set '" + delta.data().name() + "' violates d_i d_j = d_{j-1} d_i");
    return delta.data();
}

DeltaSet cone_fixture()
{
    PresentationBuilder b("cone", 2);
    b.add_generator(0, "[0]");
    b.add_generator(0, "[2]");
    b.add_generator(1, "a", {FaceRef{{}, "[2]"}, FaceRef{{}, "[0]"}});
    b.add_generator(1, "b", {FaceRef{{}, "[0]"}, FaceRef{{}, "[0]"}});
    b.add_generator(2, "T", {FaceRef{{}, "a"}, FaceRef{{}, "a"}, FaceRef{{}, "b"}});
    return DeltaSet(b.build());
}

DeltaSet double_edge_circle()
{
    PresentationBuilder b("double_edge_circle", 1);
    b.add_generator(0, "v0");
    b.add_generator(0, "v1");
    b.add_generator(1, "e0", {FaceRef{{}, "v0"}, FaceRef{{}, "v1"}});
    b.add_generator(1, "e1", {FaceRef{{}, "v0"}, FaceRef{{}, "v1"}});
    return DeltaSet(b.build());
}

DeltaSet delta_point()
{
    PresentationBuilder b("delta0", 0);
    b.add_generator(0, "[0]");
    return DeltaSet(b.build());
}

}   // namespace sset
