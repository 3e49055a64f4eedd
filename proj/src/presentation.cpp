#include "sset/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sset/error.hpp"

namespace sset {

namespace {

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::size_t r = 1;
    for (int t = 1; t <= k; ++t)
        r = r * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
    return r;
}

bool is_degeneracy_token(std::string_view tok)
{
    if (tok.size() < 2 || tok[0] != 's')
        return false;
    return std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}   // namespace

// --------------------------------------------------------------------------
// Presentation
// --------------------------------------------------------------------------

int Presentation::generator_count(int dim) const
{
    if (dim < 0 || dim >= static_cast<int>(names_.size()))
        return 0;
    return static_cast<int>(names_[dim].size());
}

std::vector<GeneratorId> Presentation::generators(int dim) const
{
    std::vector<GeneratorId> out;
    for (int i = 0; i < generator_count(dim); ++i)
        out.push_back({dim, i});
    return out;
}

std::vector<GeneratorId> Presentation::all_generators() const
{
    std::vector<GeneratorId> out;
    for (int d = 0; d <= top_dim_; ++d)
    {
        auto g = generators(d);
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

std::size_t Presentation::total_generators() const
{
    std::size_t n = 0;
    for (const auto& v : names_)
        n += v.size();
    return n;
}

bool Presentation::contains(GeneratorId g) const
{
    return g.dim >= 0 && g.index >= 0 && g.index < generator_count(g.dim);
}

const std::string& Presentation::generator_name(GeneratorId g) const
{
    if (!contains(g))
        throw PresentationError("unknown generator (dim " + std::to_string(g.dim) + ", index " + std::to_string(g.index) + ")");
    return names_[g.dim][g.index];
}

std::optional<GeneratorId> Presentation::find(int dim, std::string_view name) const
{
    if (dim < 0 || dim >= static_cast<int>(lookup_.size()))
        return std::nullopt;
    auto it = lookup_[dim].find(std::string(name));
    if (it == lookup_[dim].end())
        return std::nullopt;
    return GeneratorId{dim, it->second};
}

std::optional<GeneratorId> Presentation::find(std::string_view name) const
{
    std::optional<GeneratorId> hit;
    for (int d = 0; d < static_cast<int>(lookup_.size()); ++d)
    {
        if (auto g = find(d, name))
        {
            if (hit)
                return std::nullopt;
            hit = g;
        }
    }
    return hit;
}

std::span<const Simplex> Presentation::faces(GeneratorId g) const
{
    if (!contains(g))
        throw PresentationError("unknown generator (dim " + std::to_string(g.dim) + ", index " + std::to_string(g.index) + ")");
    return faces_[g.dim][g.index];
}

void Presentation::require_representable(int n, std::string_view what) const
{
    if (!representable(n))
    {
        throw TruncationError(std::string(what) + " needs dimension " + std::to_string(n) + " but presentation '" + name_
                              + "' is truncated at dimension " + std::to_string(top_dim_)
                              + " (undecidable at this truncation)");
    }
}

bool Presentation::same_structure(const Presentation& other) const
{
    return top_dim_ == other.top_dim_ && truncated_ == other.truncated_ && names_ == other.names_ && faces_ == other.faces_;
}

// --------------------------------------------------------------------------
// PresentationBuilder
// --------------------------------------------------------------------------

PresentationBuilder::PresentationBuilder(std::string name, int top_dim) : name_(std::move(name)), top_dim_(top_dim)
{
    if (top_dim < 0)
        throw PresentationError("top dimension must be non-negative");
}

PresentationBuilder& PresentationBuilder::set_truncated(bool truncated)
{
    truncated_ = truncated;
    return *this;
}

PresentationBuilder& PresentationBuilder::add_generator(int dim, std::string name, std::vector<FaceRef> faces)
{
    pending_.push_back({dim, std::move(name), std::move(faces)});
    return *this;
}

Presentation PresentationBuilder::build(std::vector<std::string>* warnings) const
{
    Presentation p;
    p.name_ = name_;
    p.top_dim_ = top_dim_;
    p.truncated_ = truncated_;
    p.names_.assign(top_dim_ + 1, {});
    p.faces_.assign(top_dim_ + 1, {});
    p.lookup_.assign(top_dim_ + 1, {});

    for (const auto& g : pending_)
    {
        if (g.dim < 0 || g.dim > top_dim_)
            throw PresentationError("generator '" + g.name + "' has dimension " + std::to_string(g.dim) + " outside 0.."
                                    + std::to_string(top_dim_));
        if (g.name.empty() || g.name.find_first_of(" \t\n\r") != std::string::npos || is_degeneracy_token(g.name))
            throw PresentationError("invalid generator name '" + g.name + "'");
        p.names_[g.dim].push_back(g.name);
    }
    for (int d = 0; d <= top_dim_; ++d)
    {
        auto& names = p.names_[d];
        std::sort(names.begin(), names.end());
        for (std::size_t i = 0; i < names.size(); ++i)
        {
            if (i > 0 && names[i] == names[i - 1])
                throw PresentationError("duplicate generator '" + names[i] + "' in dimension " + std::to_string(d));
            p.lookup_[d][names[i]] = static_cast<int>(i);
        }
        p.faces_[d].assign(names.size(), {});
    }

    for (const auto& g : pending_)
    {
        const int m = g.dim;
        const std::size_t expected = m == 0 ? 0 : static_cast<std::size_t>(m + 1);
        if (g.faces.size() != expected)
            throw PresentationError("generator '" + g.name + "' of dimension " + std::to_string(m) + " needs " + std::to_string(expected)
                                    + " face entries, got " + std::to_string(g.faces.size()));
        std::vector<Simplex> resolved;
        for (std::size_t i = 0; i < g.faces.size(); ++i)
        {
            const FaceRef& ref = g.faces[i];
            const int base_dim = (m - 1) - static_cast<int>(ref.degeneracies.size());
            auto target = p.find(base_dim, ref.generator);
            if (base_dim < 0 || !target)
                throw PresentationError("face d" + std::to_string(i) + " of generator '" + g.name + "' references unknown generator '"
                                        + ref.generator + "' in dimension " + std::to_string(base_dim));
            DegeneracyWord word;
            try
            {
                word = DegeneracyWord::from_sequence(ref.degeneracies, base_dim);
            }
            catch (const IndexError& e)
            {
                throw PresentationError("face d" + std::to_string(i) + " of generator '" + g.name + "': " + e.what());
            }
            if (warnings && word.indices() != ref.degeneracies)
            {
                Simplex s(word, *target);
                std::ostringstream msg;
                msg << "face d" << i << " of '" << g.name << "' normalized to '" << notation(p, s) << "'";
                warnings->push_back(msg.str());
            }
            resolved.emplace_back(std::move(word), *target);
        }
        p.faces_[m][p.find(m, g.name)->index] = std::move(resolved);
    }
    return p;
}

PresentationPtr PresentationBuilder::build_shared(std::vector<std::string>* warnings) const
{
    return std::make_shared<const Presentation>(build(warnings));
}

// --------------------------------------------------------------------------
// Notation
// --------------------------------------------------------------------------

std::string notation(const Presentation& p, const Simplex& x)
{
    std::string out;
    for (int c : x.word.indices())
        out += "s" + std::to_string(c) + " ";
    out += p.generator_name(x.gen);
    return out;
}

std::string compact_notation(const Presentation& p, const Simplex& x)
{
    std::string out = notation(p, x);
    std::replace(out.begin(), out.end(), ' ', '.');
    return out;
}

FaceRef to_face_ref(const Presentation& p, const Simplex& x)
{
    return FaceRef{x.word.indices(), p.generator_name(x.gen)};
}

Simplex parse_simplex(const Presentation& p, std::string_view expr, std::optional<int> dim)
{
    std::vector<std::string> tokens;
    {
        std::istringstream in{std::string(expr)};
        std::string tok;
        while (in >> tok)
            tokens.push_back(tok);
    }
    if (tokens.empty())
        throw PresentationError("empty simplex expression");
    std::vector<int> degens;
    for (std::size_t t = 0; t + 1 < tokens.size(); ++t)
    {
        if (!is_degeneracy_token(tokens[t]))
            throw PresentationError("expected a degeneracy operator 's<k>' but found '" + tokens[t] + "' in '" + std::string(expr) + "'");
        degens.push_back(std::stoi(tokens[t].substr(1)));
    }
    const std::string& name = tokens.back();
    std::optional<GeneratorId> g;
    if (dim)
        g = p.find(*dim - static_cast<int>(degens.size()), name);
    else
        g = p.find(name);
    if (!g)
        throw PresentationError("unknown or ambiguous generator '" + name + "' in '" + std::string(expr) + "'");
    return Simplex(DegeneracyWord::from_sequence(degens, g->dim), *g);
}

// --------------------------------------------------------------------------
// Face and degeneracy operators
// --------------------------------------------------------------------------

Simplex apply_face(const Presentation& p, const Simplex& x, int i)
{
    const int n = x.dim();
    if (n < 1)
        throw IndexError("face of a 0-simplex");
    if (i < 0 || i > n)
        throw IndexError("face index d" + std::to_string(i) + " out of range for dimension " + std::to_string(n));

    const auto& w = x.word.indices();
    std::vector<int> emitted;
    for (std::size_t t = 0; t < w.size(); ++t)
    {
        const int j = w[t];
        if (i < j)
        {
            emitted.push_back(j - 1);               // d_i s_j = s_{j-1} d_i
        }
        else if (i == j || i == j + 1)
        {
            std::vector<int> rest(w.begin() + static_cast<long>(t) + 1, w.end());
            emitted.insert(emitted.end(), rest.begin(), rest.end());
            return Simplex(DegeneracyWord::from_sequence(emitted, x.gen.dim), x.gen);   // d_j s_j = d_{j+1} s_j = id
        }
        else
        {
            emitted.push_back(j);                   // d_i s_j = s_j d_{i-1}
            --i;
        }
    }
    // d_i reached the generator itself.
    auto faces = p.faces(x.gen);
    if (i >= static_cast<int>(faces.size()))
        throw PresentationError("generator '" + p.generator_name(x.gen) + "' has no face d" + std::to_string(i));
    const Simplex& face = faces[i];
    if (!p.contains(face.gen))
        throw PresentationError("face of '" + p.generator_name(x.gen) + "' references an unknown generator");
    DegeneracyWord outer = DegeneracyWord::from_sequence(emitted, face.dim());
    return Simplex(face.word.compose_after(outer), face.gen);
}

Simplex apply_degeneracy(const Presentation&, const Simplex& x, int i)
{
    if (i < 0 || i > x.dim())
        throw IndexError("degeneracy index s" + std::to_string(i) + " out of range for dimension " + std::to_string(x.dim()));
    return Simplex(x.word.prepend(i), x.gen);
}

Simplex degenerate_vertex(GeneratorId vertex, int n)
{
    return Simplex(DegeneracyWord::full(n), vertex);
}

std::vector<GeneratorId> vertices(const Presentation& p, const Simplex& x)
{
    const int n = x.dim();
    std::vector<GeneratorId> out;
    for (int j = 0; j <= n; ++j)
    {
        Simplex y = x;
        for (int top = n; top > j; --top)
            y = apply_face(p, y, top);
        for (int t = 0; t < j; ++t)
            y = apply_face(p, y, 0);
        out.push_back(y.gen);
    }
    return out;
}

// --------------------------------------------------------------------------
// Validation and enumeration
// --------------------------------------------------------------------------

ValidationReport validate(const Presentation& p)
{
    ValidationReport report;
    for (int m = 2; m <= p.top_dim(); ++m)
    {
        for (GeneratorId g : p.generators(m))
        {
            const Simplex x(g);
            for (int j = 1; j <= m; ++j)
            {
                const Simplex dj = apply_face(p, x, j);
                for (int i = 0; i < j; ++i)
                {
                    Simplex lhs = apply_face(p, dj, i);
                    Simplex rhs = apply_face(p, apply_face(p, x, i), j - 1);
                    if (lhs != rhs)
                        report.violations.push_back({g, i, j, std::move(lhs), std::move(rhs)});
                }
            }
        }
    }
    return report;
}

std::vector<Simplex> simplices(const Presentation& p, int n)
{
    if (n < 0)
        return {};
    p.require_representable(n, "simplex enumeration");
    std::vector<Simplex> out;
    out.reserve(simplex_count(p, n));
    for (int m = 0; m <= std::min(n, p.top_dim()); ++m)
    {
        if (p.generator_count(m) == 0)
            continue;
        const auto words = degeneracy_words(m, n);
        for (GeneratorId g : p.generators(m))
            for (const auto& w : words)
                out.emplace_back(w, g);
    }
    return out;
}

std::vector<Simplex> nondegenerate_simplices(const Presentation& p, int n)
{
    std::vector<Simplex> out;
    for (GeneratorId g : p.generators(n))
        out.emplace_back(g);
    return out;
}

std::size_t simplex_count(const Presentation& p, int n)
{
    std::size_t total = 0;
    for (int m = 0; m <= std::min(n, p.top_dim()); ++m)
        total += static_cast<std::size_t>(p.generator_count(m)) * binomial(n, m);
    return total;
}

}   // namespace sset
