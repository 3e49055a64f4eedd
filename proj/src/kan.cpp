#include "sset/kan.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "sset/error.hpp"
#include "sset/standard.hpp"

namespace sset {

namespace {

void check_shape(const HornSpec& h, const Presentation& p)
{
    if (h.n < 1)
        throw IndexError("horn dimension must be >= 1");
    if (h.k < 0 || h.k > h.n)
        throw IndexError("horn index k=" + std::to_string(h.k) + " out of range 0.." + std::to_string(h.n));
    if (static_cast<int>(h.faces.size()) != h.n + 1)
        throw IndexError("horn needs " + std::to_string(h.n + 1) + " face slots");
    for (int i = 0; i <= h.n; ++i)
    {
        if (i == h.k)
        {
            if (h.faces[i])
                throw IndexError("horn face " + std::to_string(i) + " must be absent");
            continue;
        }
        if (!h.faces[i])
            throw IndexError("horn face " + std::to_string(i) + " is missing");
        if (h.faces[i]->dim() != h.n - 1)
            throw IndexError("horn face " + std::to_string(i) + " has dimension " + std::to_string(h.faces[i]->dim()) + ", expected "
                             + std::to_string(h.n - 1));
        if (!p.contains(h.faces[i]->gen))
            throw IndexError("horn face " + std::to_string(i) + " is not a simplex of the presentation");
    }
}

std::vector<Simplex> face_tuple(const Presentation& p, const Simplex& z, int skip)
{
    std::vector<Simplex> out;
    for (int i = 0; i <= z.dim(); ++i)
        if (i != skip)
            out.push_back(apply_face(p, z, i));
    return out;
}

std::vector<Simplex> given_tuple(const HornSpec& h)
{
    std::vector<Simplex> out;
    for (int i = 0; i <= h.n; ++i)
        if (i != h.k)
            out.push_back(*h.faces[i]);
    return out;
}

/** Vertex list of a subset-named generator "[0,2,3]". */
std::vector<int> vertex_set(const std::string& name)
{
    std::vector<int> out;
    int cur = -1;
    for (char ch : name)
    {
        if (ch >= '0' && ch <= '9')
            cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
        else if (cur >= 0)
        {
            out.push_back(cur);
            cur = -1;
        }
    }
    return out;
}

/** Face of the m-simplex x spanned by the vertex positions in `keep`. */
Simplex restrict_to(const Presentation& p, Simplex x, const std::vector<int>& keep)
{
    for (int v = x.dim(); v >= 0; --v)
        if (std::find(keep.begin(), keep.end(), v) == keep.end())
            x = apply_face(p, x, v);
    return x;
}

}   // namespace

HornSpec HornSpec::make(int n, int k, std::vector<std::pair<int, Simplex>> given)
{
    HornSpec h;
    h.n = n;
    h.k = k;
    h.faces.assign(n + 1, std::nullopt);
    for (auto& [i, x] : given)
    {
        if (i < 0 || i > n)
            throw IndexError("horn face index " + std::to_string(i) + " out of range");
        h.faces[i] = std::move(x);
    }
    return h;
}

std::string describe_horn(const Presentation& p, const HornSpec& h)
{
    std::string out = "Lambda^" + std::to_string(h.n) + "_" + std::to_string(h.k) + " [";
    bool first = true;
    for (int i = 0; i <= h.n; ++i)
    {
        if (i == h.k || !h.faces[i])
            continue;
        if (!first)
            out += ", ";
        first = false;
        out += "d" + std::to_string(i) + " = " + notation(p, *h.faces[i]);
    }
    return out + "]";
}

bool horn_compatible(const HornSpec& h, const Presentation& p)
{
    check_shape(h, p);
    for (int j = 1; j <= h.n; ++j)
    {
        if (j == h.k)
            continue;
        for (int i = 0; i < j; ++i)
        {
            if (i == h.k)
                continue;
            if (apply_face(p, *h.faces[j], i) != apply_face(p, *h.faces[i], j - 1))
                return false;
        }
    }
    return true;
}

std::vector<Simplex> all_fillers(const Presentation& p, const HornSpec& h)
{
    check_shape(h, p);
    p.require_representable(h.n, "horn filler");
    const auto want = given_tuple(h);
    std::vector<Simplex> out;
    for (const Simplex& z : simplices(p, h.n))
        if (face_tuple(p, z, h.k) == want)
            out.push_back(z);
    return out;
}

std::optional<Simplex> fill_horn(const Presentation& p, const HornSpec& h)
{
    check_shape(h, p);
    p.require_representable(h.n, "horn filler");
    const auto want = given_tuple(h);
    for (const Simplex& z : simplices(p, h.n))
        if (face_tuple(p, z, h.k) == want)
            return z;
    return std::nullopt;
}

FillerIndex::FillerIndex(const Presentation& p, int n) : n_(n)
{
    if (n < 1)
        throw IndexError("filler index needs n >= 1");
    p.require_representable(n, "filler search");
    simplices_ = sset::simplices(p, n);
    for (const Simplex& z : simplices_)
        faces_.push_back(face_tuple(p, z, -1));
}

std::vector<Simplex> FillerIndex::fillers(const HornSpec& h) const
{
    if (h.n != n_ || static_cast<int>(h.faces.size()) != n_ + 1)
        throw IndexError("horn dimension does not match the filler index");
    std::vector<Simplex> out;
    for (std::size_t z = 0; z < simplices_.size(); ++z)
    {
        bool ok = true;
        for (int i = 0; i <= n_ && ok; ++i)
            ok = i == h.k || (h.faces[i] && faces_[z][i] == *h.faces[i]);
        if (ok)
            out.push_back(simplices_[z]);
    }
    return out;
}

std::optional<Simplex> FillerIndex::least_filler(const HornSpec& h) const
{
    auto all = fillers(h);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

std::vector<Simplex> FillerIndex::with_boundary(const std::vector<Simplex>& boundary) const
{
    std::vector<Simplex> out;
    for (std::size_t z = 0; z < simplices_.size(); ++z)
        if (faces_[z] == boundary)
            out.push_back(simplices_[z]);
    return out;
}

KanReport kan_check(const Presentation& p, int max_dim)
{
    if (max_dim < 1)
        throw IndexError("kan check needs max dimension >= 1");
    p.require_representable(max_dim, "Kan check");
    KanReport report;
    report.max_dim = max_dim;
    for (int n = 1; n <= max_dim; ++n)
    {
        const auto candidates = simplices(p, n - 1);
        std::vector<std::vector<Simplex>> cand_faces;
        for (const Simplex& c : candidates)
            cand_faces.push_back(n - 1 > 0 ? face_tuple(p, c, -1) : std::vector<Simplex>{});

        const auto top = simplices(p, n);
        for (int k = 0; k <= n; ++k)
        {
            std::set<std::vector<Simplex>> fillable;
            for (const Simplex& z : top)
                fillable.insert(face_tuple(p, z, k));

            std::vector<int> slots;
            for (int i = 0; i <= n; ++i)
                if (i != k)
                    slots.push_back(i);
            std::vector<std::size_t> choice(slots.size());

            // Depth-first over face assignments, pruning on pairwise compatibility.
            std::function<void(std::size_t)> assign = [&](std::size_t depth) {
                if (depth == slots.size())
                {
                    ++report.horns_checked;
                    std::vector<Simplex> tuple;
                    for (std::size_t c : choice)
                        tuple.push_back(candidates[c]);
                    if (!fillable.count(tuple))
                    {
                        HornSpec h;
                        h.n = n;
                        h.k = k;
                        h.faces.assign(n + 1, std::nullopt);
                        for (std::size_t s = 0; s < slots.size(); ++s)
                            h.faces[slots[s]] = tuple[s];
                        report.unfillable.push_back(std::move(h));
                    }
                    return;
                }
                const int j = slots[depth];
                for (std::size_t c = 0; c < candidates.size(); ++c)
                {
                    bool ok = true;
                    for (std::size_t s = 0; s < depth && ok; ++s)
                    {
                        const int i = slots[s];
                        ok = cand_faces[c][i] == cand_faces[choice[s]][j - 1];
                    }
                    if (!ok)
                        continue;
                    choice[depth] = c;
                    assign(depth + 1);
                }
            };
            assign(0);
        }
    }
    return report;
}

SimplicialMap horn_map(PresentationPtr p, const HornSpec& h)
{
    if (!horn_compatible(h, *p))
        throw HornError("horn faces are not compatible: " + describe_horn(*p, h));
    auto source = std::make_shared<const Presentation>(horn(h.n, h.k));
    std::vector<std::vector<Simplex>> assignment(source->top_dim() + 1);
    for (GeneratorId g : source->all_generators())
    {
        const auto s = vertex_set(source->generator_name(g));
        int face = -1;
        for (int i = 0; i <= h.n && face < 0; ++i)
            if (i != h.k && std::find(s.begin(), s.end(), i) == s.end())
                face = i;
        std::vector<int> local;
        for (int v : s)
            local.push_back(v < face ? v : v - 1);
        assignment[g.dim].push_back(restrict_to(*p, *h.faces[face], local));
    }
    return SimplicialMap(std::move(source), std::move(p), std::move(assignment));
}

SimplicialMap simplex_map(PresentationPtr p, const Simplex& z)
{
    auto source = std::make_shared<const Presentation>(standard_simplex(z.dim()));
    std::vector<std::vector<Simplex>> assignment(source->top_dim() + 1);
    for (GeneratorId g : source->all_generators())
        assignment[g.dim].push_back(restrict_to(*p, z, vertex_set(source->generator_name(g))));
    return SimplicialMap(std::move(source), std::move(p), std::move(assignment));
}

}   // namespace sset
