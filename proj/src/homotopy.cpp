#include "sset/homotopy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sset/error.hpp"

namespace sset {

BasedPresentation::BasedPresentation(PresentationPtr p, GeneratorId basepoint) : p_(std::move(p)), basepoint_(basepoint)
{
    if (!p_ || basepoint_.dim != 0 || !p_->contains(basepoint_))
        throw PresentationError("basepoint must be a vertex of the presentation");
}

namespace {

GeneratorId resolve_basepoint(const Presentation& p, const std::string& name)
{
    if (name.empty())
    {
        if (p.generator_count(0) == 0)
            throw PresentationError("presentation has no vertex to use as basepoint");
        return {0, 0};
    }
    auto g = p.find(0, name);
    if (!g)
        throw PresentationError("unknown basepoint vertex '" + name + "'");
    return *g;
}

struct UnionFind
{
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t a)
    {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

bool same_faces(const Presentation& p, const Simplex& x, const Simplex& xp, int from)
{
    for (int i = from; i <= x.dim(); ++i)
        if (apply_face(p, x, i) != apply_face(p, xp, i))
            return false;
    return true;
}

std::optional<Simplex> witness_in(const Presentation& p, const FillerIndex& idx, const Simplex& x, const Simplex& xp, int r)
{
    const int n = x.dim();
    if (n >= 1 && !same_faces(p, x, xp, 0))
        return std::nullopt;
    const Simplex sx = apply_degeneracy(p, x, r);
    std::vector<Simplex> boundary;
    for (int i = 0; i <= n + 1; ++i)
        boundary.push_back(i == r ? x : i == r + 1 ? xp : apply_face(p, sx, i));
    auto found = idx.with_boundary(boundary);
    if (found.empty())
        return std::nullopt;
    return found.front();
}

std::optional<Simplex> rel_witness_in(const Presentation& p, const FillerIndex& idx, const Subcomplex& a, const Simplex& x, const Simplex& xp)
{
    const int n = x.dim();
    if (!same_faces(p, x, xp, 1))
        return std::nullopt;
    if (!a.contains(apply_face(p, x, 0)) || !a.contains(apply_face(p, xp, 0)))
        return std::nullopt;
    std::vector<Simplex> lower;
    for (int i = 1; i <= n - 1; ++i)
        lower.push_back(apply_degeneracy(p, apply_face(p, x, i), n - 1));
    for (std::size_t z = 0; z < idx.simplices().size(); ++z)
    {
        const auto& f = idx.faces_of(z);
        if (f[n] != x || f[n + 1] != xp || !a.contains(f[0]))
            continue;
        bool ok = true;
        for (int i = 1; i <= n - 1 && ok; ++i)
            ok = f[i] == lower[i - 1];
        if (ok)
            return idx.simplices()[z];
    }
    return std::nullopt;
}

int require_class(const PiGroup& g, const Simplex& x, const char* what)
{
    const int c = g.class_of_simplex(x);
    if (c < 0)
        throw ConsistencyError(std::string(what) + " is not a representative");
    return c;
}

/** Identity, inverse and associativity laws of the class table. */
void check_table(PiGroup& g)
{
    const int m = static_cast<int>(g.order());
    bool ok = true;
    g.inverse.assign(m, -1);
    for (int a = 0; a < m; ++a)
    {
        ok = ok && g.table[g.identity][a] == a && g.table[a][g.identity] == a;
        for (int b = 0; b < m; ++b)
            if (g.table[a][b] == g.identity && g.table[b][a] == g.identity)
                g.inverse[a] = b;
        ok = ok && g.inverse[a] >= 0;
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                ok = ok && g.table[g.table[a][b]][c] == g.table[a][g.table[b][c]];
    }
    g.group_axioms_ok = ok;
}

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}   // namespace

BasedPresentation::BasedPresentation(PresentationPtr p, const std::string& basepoint_name)
    : BasedPresentation(p, resolve_basepoint(*p, basepoint_name))
{
}

Partition close_relation(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& related)
{
    std::vector<std::vector<char>> rel(count, std::vector<char>(count, 0));
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            rel[a][b] = a == b || related(a, b);

    Partition out;
    for (std::size_t a = 0; a < count && !out.closure_needed; ++a)
        for (std::size_t b = 0; b < count && !out.closure_needed; ++b)
        {
            if (!rel[a][b])
                continue;
            if (!rel[b][a])
                out.closure_needed = true;
            for (std::size_t c = 0; c < count && !out.closure_needed; ++c)
                if (rel[b][c] && !rel[a][c])
                    out.closure_needed = true;
        }

    UnionFind uf(count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            if (rel[a][b])
                uf.unite(a, b);
    std::map<std::size_t, int> class_of_root;
    out.class_of.resize(count);
    for (std::size_t a = 0; a < count; ++a)
    {
        auto [it, fresh] = class_of_root.try_emplace(uf.find(a), static_cast<int>(out.classes.size()));
        if (fresh)
            out.classes.emplace_back();
        out.class_of[a] = it->second;
        out.classes[it->second].push_back(static_cast<int>(a));
    }
    return out;
}

int Components::component_of(GeneratorId v) const
{
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end())
        throw PresentationError("not a vertex");
    return partition.class_of[it - vertices.begin()];
}

Components path_components(const Presentation& p)
{
    Components out;
    out.vertices = p.generators(0);
    std::set<std::pair<int, int>> edges;
    for (GeneratorId e : p.generators(1))
    {
        const auto f = p.faces(e);
        edges.insert({f[1].gen.index, f[0].gen.index});
    }
    out.partition = close_relation(out.vertices.size(), [&](std::size_t a, std::size_t b) {
        return edges.count({static_cast<int>(a), static_cast<int>(b)}) > 0;
    });
    return out;
}

std::optional<Simplex> homotopy_witness(const Presentation& p, const Simplex& x, const Simplex& xp, std::optional<int> r)
{
    if (x.dim() != xp.dim())
        throw IndexError("homotopic simplices must have equal dimension");
    const int n = x.dim();
    const int rr = r.value_or(n);
    if (rr < 0 || rr > n)
        throw IndexError("homotopy index r=" + std::to_string(rr) + " out of range 0.." + std::to_string(n));
    FillerIndex idx(p, n + 1);
    return witness_in(p, idx, x, xp, rr);
}

bool simplices_homotopic(const Presentation& p, const Simplex& x, const Simplex& xp)
{
    return homotopy_witness(p, x, xp).has_value();
}

Partition homotopy_classes(const Presentation& p, const std::vector<Simplex>& reps, std::optional<int> r)
{
    if (reps.empty())
        return {};
    const int n = reps.front().dim();
    const int rr = r.value_or(n);
    if (rr < 0 || rr > n)
        throw IndexError("homotopy index r=" + std::to_string(rr) + " out of range 0.." + std::to_string(n));
    FillerIndex idx(p, n + 1);
    return close_relation(reps.size(), [&](std::size_t a, std::size_t b) { return witness_in(p, idx, reps[a], reps[b], rr).has_value(); });
}

std::vector<Simplex> pi_representatives(const BasedPresentation& b, int n)
{
    const Presentation& p = b.presentation();
    std::vector<Simplex> out;
    for (const Simplex& x : simplices(p, n))
    {
        bool ok = true;
        for (int i = 0; i <= n && ok; ++i)
            ok = b.in_base(apply_face(p, x, i));
        if (ok)
            out.push_back(x);
    }
    return out;
}

bool PiGroup::abelian() const
{
    for (std::size_t a = 0; a < table.size(); ++a)
        for (std::size_t c = 0; c < table.size(); ++c)
            if (table[a][c] != table[c][a])
                return false;
    return true;
}

int PiGroup::class_of_simplex(const Simplex& x) const
{
    auto it = std::find(representatives.begin(), representatives.end(), x);
    if (it == representatives.end())
        return -1;
    return classes.class_of[it - representatives.begin()];
}

namespace {

void fill_labels(PiGroup& g, const Presentation& p)
{
    for (const auto& members : g.classes.classes)
        g.labels.push_back(notation(p, g.representatives[members.front()]));
}

HornSpec product_horn(const BasedPresentation& b, int n, const Simplex& x, const Simplex& y)
{
    HornSpec h;
    h.n = n + 1;
    h.k = n;
    h.faces.assign(n + 2, b.base_simplex(n));
    h.faces[n] = std::nullopt;
    h.faces[n - 1] = x;
    h.faces[n + 1] = y;
    return h;
}

bool matches_horn(const Presentation& p, const Simplex& z, const HornSpec& h)
{
    for (int i = 0; i <= h.n; ++i)
        if (i != h.k && apply_face(p, z, i) != *h.faces[i])
            return false;
    return true;
}

}   // namespace

PiGroup pi_n(const BasedPresentation& b, int n)
{
    if (n < 1)
        throw IndexError("pi_n needs n >= 1; use path components for pi_0");
    const Presentation& p = b.presentation();
    p.require_representable(n + 2, "pi_" + std::to_string(n) + " (associativity uses dimension n+2)");
    PiGroup g;
    g.n = n;
    g.representatives = pi_representatives(b, n);
    const FillerIndex idx1(p, n + 1);
    const FillerIndex idx2(p, n + 2);
    g.classes = close_relation(g.representatives.size(), [&](std::size_t a, std::size_t c) {
        return witness_in(p, idx1, g.representatives[a], g.representatives[c], n).has_value();
    });
    fill_labels(g, p);
    g.identity = require_class(g, b.base_simplex(n), "degenerate basepoint");

    const int m = static_cast<int>(g.order());
    auto rep = [&](int cls) -> const Simplex& { return g.representatives[g.classes.classes[cls].front()]; };
    auto least_product = [&](const Simplex& x, const Simplex& y) {
        const HornSpec h = product_horn(b, n, x, y);
        auto z = idx1.least_filler(h);
        if (!z)
            throw HornError("product horn has no filler: " + describe_horn(p, h));
        return *z;
    };

    g.table.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c)
            g.table[a][c] = require_class(g, apply_face(p, least_product(rep(a), rep(c)), n), "product face d_n z");

    // Every representative pair and every filler must give the table's class.
    g.product_well_defined = true;
    for (std::size_t i = 0; i < g.representatives.size(); ++i)
        for (std::size_t j = 0; j < g.representatives.size(); ++j)
        {
            const auto fillers = idx1.fillers(product_horn(b, n, g.representatives[i], g.representatives[j]));
            if (fillers.size() > 1)
                ++g.horns_with_several_fillers;
            const int expected = g.table[g.classes.class_of[i]][g.classes.class_of[j]];
            if (fillers.empty())
                g.product_well_defined = false;
            for (const Simplex& z : fillers)
                g.product_well_defined = g.product_well_defined && g.class_of_simplex(apply_face(p, z, n)) == expected;
        }

    check_table(g);

    bool id_ok = true;
    for (const Simplex& x : g.representatives)
    {
        const Simplex left = apply_degeneracy(p, x, n);        // * x = x
        const Simplex right = apply_degeneracy(p, x, n - 1);   // x * = x
        id_ok = id_ok && matches_horn(p, left, product_horn(b, n, b.base_simplex(n), x)) && apply_face(p, left, n) == x;
        id_ok = id_ok && matches_horn(p, right, product_horn(b, n, x, b.base_simplex(n))) && apply_face(p, right, n) == x;
    }
    g.identity_witnesses_ok = id_ok;

    bool inv_ok = true;
    for (int a = 0; a < m && inv_ok; ++a)
    {
        HornSpec right;
        right.n = n + 1;
        right.k = n + 1;
        right.faces.assign(n + 2, b.base_simplex(n));
        right.faces[n + 1] = std::nullopt;
        right.faces[n - 1] = rep(a);
        HornSpec left;
        left.n = n + 1;
        left.k = n - 1;
        left.faces.assign(n + 2, b.base_simplex(n));
        left.faces[n - 1] = std::nullopt;
        left.faces[n + 1] = rep(a);
        auto zr = idx1.least_filler(right);
        auto zl = idx1.least_filler(left);
        inv_ok = zr && zl && g.class_of_simplex(apply_face(p, *zr, n + 1)) == g.inverse[a]
                 && g.class_of_simplex(apply_face(p, *zl, n - 1)) == g.inverse[a];
    }
    g.inverse_witnesses_ok = inv_ok;

    bool assoc_ok = true;
    for (int a = 0; a < m && assoc_ok; ++a)
        for (int c = 0; c < m && assoc_ok; ++c)
            for (int e = 0; e < m && assoc_ok; ++e)
            {
                const Simplex w_lo = least_product(rep(a), rep(c));
                const Simplex w_top = least_product(rep(c), rep(e));
                const Simplex w_mid = least_product(apply_face(p, w_lo, n), rep(e));
                HornSpec h;
                h.n = n + 2;
                h.k = n;
                h.faces.assign(n + 3, b.base_simplex(n + 1));
                h.faces[n] = std::nullopt;
                h.faces[n - 1] = w_lo;
                h.faces[n + 1] = w_mid;
                h.faces[n + 2] = w_top;
                auto u = idx2.least_filler(h);
                if (!u)
                {
                    assoc_ok = false;
                    break;
                }
                const int cls = g.class_of_simplex(apply_face(p, apply_face(p, *u, n), n));
                assoc_ok = cls == g.table[g.table[a][c]][e] && cls == g.table[a][g.table[c][e]];
            }
    g.associativity_witnesses_ok = assoc_ok;
    return g;
}

Subcomplex::Subcomplex(PresentationPtr ambient, PresentationPtr sub) : inclusion_(inclusion_by_name(std::move(sub), std::move(ambient)))
{
    for (GeneratorId g : inclusion_.source().all_generators())
        back_[inclusion_.image(g).gen] = g;
}

bool Subcomplex::contains(const Simplex& x) const
{
    return back_.count(x.gen) > 0;
}

Simplex Subcomplex::to_sub(const Simplex& x) const
{
    auto it = back_.find(x.gen);
    if (it == back_.end())
        throw PresentationError("simplex is not in the subcomplex");
    return Simplex(x.word, it->second);
}

BasedPresentation based_sub(const BasedPresentation& b, const Subcomplex& a)
{
    const Simplex base(b.basepoint());
    if (!a.contains(base))
        throw PresentationError("basepoint is not in the subcomplex");
    return BasedPresentation(a.sub_ptr(), a.to_sub(base).gen);
}

std::optional<Simplex> rel_homotopy_witness(const Presentation& x_pres, const Subcomplex& a, const Simplex& x, const Simplex& xp)
{
    if (x.dim() != xp.dim() || x.dim() < 1)
        throw IndexError("relative homotopy needs two simplices of equal dimension >= 1");
    FillerIndex idx(x_pres, x.dim() + 1);
    return rel_witness_in(x_pres, idx, a, x, xp);
}

bool simplices_homotopic_rel(const BasedPresentation& b, const Subcomplex& a, const Simplex& x, const Simplex& xp)
{
    return rel_homotopy_witness(b.presentation(), a, x, xp).has_value();
}

std::vector<Simplex> pi_rel_representatives(const BasedPresentation& b, const Subcomplex& a, int n)
{
    const Presentation& p = b.presentation();
    std::vector<Simplex> out;
    for (const Simplex& x : simplices(p, n))
    {
        bool ok = a.contains(apply_face(p, x, 0));
        for (int i = 1; i <= n && ok; ++i)
            ok = b.in_base(apply_face(p, x, i));
        if (ok)
            out.push_back(x);
    }
    return out;
}

PiGroup pi_n_rel(const BasedPresentation& b, const Subcomplex& a, int n)
{
    if (n < 1)
        throw IndexError("relative homotopy needs n >= 1");
    const Presentation& p = b.presentation();
    p.require_representable(n + 1, "relative pi_" + std::to_string(n));
    const BasedPresentation ab = based_sub(b, a);
    PiGroup g;
    g.n = n;
    g.relative = true;
    g.representatives = pi_rel_representatives(b, a, n);
    const FillerIndex idx1(p, n + 1);
    g.classes = close_relation(g.representatives.size(), [&](std::size_t i, std::size_t j) {
        return rel_witness_in(p, idx1, a, g.representatives[i], g.representatives[j]).has_value();
    });
    fill_labels(g, p);
    g.identity = require_class(g, b.base_simplex(n), "degenerate basepoint");
    if (n == 1)
        return g;

    const FillerIndex idx_a(a.sub(), n);
    auto product_witness_in_a = [&](const Simplex& x, const Simplex& y) {
        HornSpec h;
        h.n = n;
        h.k = n - 1;
        h.faces.assign(n + 1, ab.base_simplex(n - 1));
        h.faces[n - 1] = std::nullopt;
        h.faces[n - 2] = a.to_sub(apply_face(p, x, 0));
        h.faces[n] = a.to_sub(apply_face(p, y, 0));
        auto z = idx_a.least_filler(h);
        if (!z)
            throw HornError("no product witness in the subcomplex: " + describe_horn(a.sub(), h));
        return a.to_ambient(*z);
    };
    auto rel_horn = [&](const Simplex& x, const Simplex& y) {
        HornSpec h;
        h.n = n + 1;
        h.k = n;
        h.faces.assign(n + 2, b.base_simplex(n));
        h.faces[n] = std::nullopt;
        h.faces[0] = product_witness_in_a(x, y);
        h.faces[n - 1] = x;
        h.faces[n + 1] = y;
        return h;
    };

    const int m = static_cast<int>(g.order());
    g.table.assign(m, std::vector<int>(m));
    for (int c = 0; c < m; ++c)
        for (int e = 0; e < m; ++e)
        {
            const HornSpec h = rel_horn(g.representatives[g.classes.classes[c].front()], g.representatives[g.classes.classes[e].front()]);
            auto w = idx1.least_filler(h);
            if (!w)
                throw HornError("relative product horn has no filler: " + describe_horn(p, h));
            g.table[c][e] = require_class(g, apply_face(p, *w, n), "relative product face d_n w");
        }

    g.product_well_defined = true;
    for (std::size_t i = 0; i < g.representatives.size(); ++i)
        for (std::size_t j = 0; j < g.representatives.size(); ++j)
        {
            const auto fillers = idx1.fillers(rel_horn(g.representatives[i], g.representatives[j]));
            if (fillers.size() > 1)
                ++g.horns_with_several_fillers;
            const int expected = g.table[g.classes.class_of[i]][g.classes.class_of[j]];
            if (fillers.empty())
                g.product_well_defined = false;
            for (const Simplex& w : fillers)
                g.product_well_defined = g.product_well_defined && g.class_of_simplex(apply_face(p, w, n)) == expected;
        }
    check_table(g);
    return g;
}

std::vector<int> les_boundary_map(const BasedPresentation& b, const Subcomplex& a, const PiGroup& rel)
{
    if (!rel.relative)
        throw ConsistencyError("boundary map needs a relative homotopy group");
    const Presentation& p = b.presentation();
    const int n = rel.n;
    std::function<int(const Simplex&)> target;
    Components comps;
    PiGroup lower;
    if (n == 1)
    {
        comps = path_components(a.sub());
        target = [&](const Simplex& v) { return comps.component_of(v.gen); };
    }
    else
    {
        lower = pi_n(based_sub(b, a), n - 1);
        target = [&](const Simplex& v) { return lower.class_of_simplex(v); };
    }
    std::vector<int> out;
    for (const auto& members : rel.classes.classes)
    {
        int cls = -2;
        for (int idx : members)
        {
            const int t = target(a.to_sub(apply_face(p, rel.representatives[idx], 0)));
            if (t < 0 || (cls != -2 && t != cls))
                throw ConsistencyError("boundary of a relative class depends on the representative");
            cls = t;
        }
        out.push_back(cls);
    }
    return out;
}

int les_boundary(const BasedPresentation& b, const Subcomplex& a, const PiGroup& rel, int rel_class)
{
    const auto map = les_boundary_map(b, a, rel);
    if (rel_class < 0 || rel_class >= static_cast<int>(map.size()))
        throw IndexError("relative class index out of range");
    return map[rel_class];
}

LesReport les_exactness(const BasedPresentation& b, const Subcomplex& a, int n)
{
    LesReport r;
    r.n = n;
    const BasedPresentation ab = based_sub(b, a);
    r.pi_a = pi_n(ab, n);
    r.pi_x = pi_n(b, n);
    r.pi_rel = pi_n_rel(b, a, n);

    for (const auto& members : r.pi_a.classes.classes)
    {
        int cls = -2;
        for (int idx : members)
        {
            const int t = r.pi_x.class_of_simplex(a.to_ambient(r.pi_a.representatives[idx]));
            if (t < 0 || (cls != -2 && t != cls))
                throw ConsistencyError("induced map pi_n(A) -> pi_n(X) depends on the representative");
            cls = t;
        }
        r.i_star.push_back(cls);
    }
    for (const auto& members : r.pi_x.classes.classes)
    {
        int cls = -2;
        for (int idx : members)
        {
            const int t = r.pi_rel.class_of_simplex(r.pi_x.representatives[idx]);
            if (t < 0 || (cls != -2 && t != cls))
                throw ConsistencyError("induced map pi_n(X) -> pi_n(X, A) depends on the representative");
            cls = t;
        }
        r.j_star.push_back(cls);
    }
    r.boundary = les_boundary_map(b, a, r.pi_rel);
    r.boundary_base = n == 1 ? path_components(a.sub()).component_of(ab.basepoint()) : pi_n(ab, n - 1).identity;

    r.image_i = sorted_unique(r.i_star);
    for (std::size_t c = 0; c < r.j_star.size(); ++c)
        if (r.j_star[c] == r.pi_rel.identity)
            r.kernel_j.push_back(static_cast<int>(c));
    r.image_j = sorted_unique(r.j_star);
    for (std::size_t c = 0; c < r.boundary.size(); ++c)
        if (r.boundary[c] == r.boundary_base)
            r.kernel_boundary.push_back(static_cast<int>(c));
    return r;
}

const Simplex& HomotopyData::at(int p, int j, const Simplex& x) const
{
    if (p < 0 || p >= static_cast<int>(h.size()))
        throw Error("homotopy data has no values in dimension " + std::to_string(p));
    auto it = h[p].find(x);
    if (it == h[p].end() || j < 0 || j >= static_cast<int>(it->second.size()))
        throw Error("homotopy data is missing h_" + std::to_string(j) + " in dimension " + std::to_string(p));
    return it->second[j];
}

HomotopyReport verify_homotopy_data(const SimplicialMap& f, const SimplicialMap& g, const HomotopyData& hd, int bound)
{
    if (!f.source().same_structure(g.source()) || !f.target().same_structure(g.target()))
        throw PresentationError("homotopy needs two maps with a common source and target");
    if (bound < 0 || bound > hd.bound)
        throw Error("homotopy data is defined only up to dimension " + std::to_string(hd.bound));
    const Presentation& X = f.source();
    const Presentation& Y = f.target();
    HomotopyReport report;
    auto check = [&](const char* cond, int p, const Simplex& x, int i, int j, const Simplex& lhs, const Simplex& rhs) {
        if (lhs != rhs)
            report.violations.push_back({cond, p, x, i, j, lhs, rhs});
    };
    for (int p = 0; p <= bound; ++p)
    {
        for (const Simplex& x : simplices(X, p))
        {
            for (int j = 0; j <= p; ++j)
            {
                const Simplex& hj = hd.at(p, j, x);
                if (hj.dim() != p + 1 || !Y.contains(hj.gen))
                    throw Error("homotopy value h_" + std::to_string(j) + " in dimension " + std::to_string(p) + " is not a (p+1)-simplex of the target");
            }
            check("d_0 h_0 = f", p, x, 0, 0, apply_face(Y, hd.at(p, 0, x), 0), apply_map(f, x));
            check("d_{p+1} h_p = g", p, x, p + 1, p, apply_face(Y, hd.at(p, p, x), p + 1), apply_map(g, x));
            for (int j = 0; j <= p; ++j)
            {
                const Simplex& hj = hd.at(p, j, x);
                for (int i = 0; i < j; ++i)
                    check("d_i h_j = h_{j-1} d_i (i < j)", p, x, i, j, apply_face(Y, hj, i), hd.at(p - 1, j - 1, apply_face(X, x, i)));
                if (j < p)
                    check("d_{j+1} h_{j+1} = d_{j+1} h_j", p, x, j + 1, j, apply_face(Y, hd.at(p, j + 1, x), j + 1), apply_face(Y, hj, j + 1));
                for (int i = j + 2; i <= p + 1; ++i)
                    check("d_i h_j = h_j d_{i-1} (i > j+1)", p, x, i, j, apply_face(Y, hj, i), hd.at(p - 1, j, apply_face(X, x, i - 1)));
                if (p < bound)
                {
                    for (int i = 0; i <= j; ++i)
                        check("s_i h_j = h_{j+1} s_i (i <= j)", p, x, i, j, apply_degeneracy(Y, hj, i), hd.at(p + 1, j + 1, apply_degeneracy(X, x, i)));
                    for (int i = j + 1; i <= p + 1; ++i)
                        check("s_i h_j = h_j s_{i-1} (i > j)", p, x, i, j, apply_degeneracy(Y, hj, i), hd.at(p + 1, j, apply_degeneracy(X, x, i - 1)));
                }
            }
        }
    }
    return report;
}

HomotopyData constant_homotopy(const SimplicialMap& f, int bound)
{
    HomotopyData hd;
    hd.bound = bound;
    hd.h.resize(bound + 1);
    for (int p = 0; p <= bound; ++p)
        for (const Simplex& x : simplices(f.source(), p))
        {
            const Simplex fx = apply_map(f, x);
            auto& row = hd.h[p][x];
            for (int j = 0; j <= p; ++j)
                row.push_back(apply_degeneracy(f.target(), fx, j));
        }
    return hd;
}

namespace {

void require_interval(const ProductPresentation& cylinder, const SimplicialMap& hmap)
{
    const Presentation& i = cylinder.right();
    if (i.generator_count(0) != 2 || i.generator_count(1) != 1 || i.top_dim() != 1 || !i.find(0, "[0]") || !i.find(0, "[1]"))
        throw PresentationError("cylinder must be a product with Delta^1");
    if (!hmap.source().same_structure(cylinder.presentation()))
        throw PresentationError("homotopy map must be defined on the cylinder");
}

}   // namespace

HomotopyData homotopy_from_cylinder(const ProductPresentation& cylinder, const SimplicialMap& hmap, int bound)
{
    require_interval(cylinder, hmap);
    const Presentation& X = cylinder.left();
    const GeneratorId edge{1, 0};
    HomotopyData hd;
    hd.bound = bound;
    hd.h.resize(bound + 1);
    for (int p = 0; p <= bound; ++p)
        for (const Simplex& x : simplices(X, p))
        {
            auto& row = hd.h[p][x];
            for (int k = 0; k <= p; ++k)
            {
                const int omit[] = {k};
                const Simplex prism = cylinder.pair(apply_degeneracy(X, x, k), Simplex(DegeneracyWord::complement(p + 1, omit), edge));
                row.push_back(apply_map(hmap, prism));
            }
        }
    return hd;
}

std::pair<SimplicialMap, SimplicialMap> cylinder_ends(const ProductPresentation& cylinder, const SimplicialMap& hmap)
{
    require_interval(cylinder, hmap);
    const SimplicialMap i0 = slice_inclusion(cylinder, *cylinder.right().find(0, "[0]"));
    const SimplicialMap i1 = slice_inclusion(cylinder, *cylinder.right().find(0, "[1]"));
    return {compose(hmap, i1), compose(hmap, i0)};
}

}   // namespace sset
