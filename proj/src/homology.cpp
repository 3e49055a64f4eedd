#include "sset/homology.hpp"

#include <algorithm>
#include <map>

#include "sset/error.hpp"

namespace sset {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error("matrix shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::swap(m(r, a), m(r, b));
}

// row_dst -= q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(src, c) != 0)
            m(dst, c) -= q * m(src, c);
}

// col_dst -= q * col_src
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, src) != 0)
            m(r, dst) -= q * m(r, src);
}

}   // namespace

SNFResult smith_normal_form(const IntMatrix& m)
{
    SNFResult res;
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t limit = std::min(m.rows(), m.cols());

    std::size_t t = 0;
    for (; t < limit; ++t)
    {
        while (true)
        {
            // Least nonzero |entry| in the block [t.., t..], row-major on ties.
            bool found = false;
            std::size_t pr = 0, pc = 0;
            Integer best;
            for (std::size_t r = t; r < d.rows(); ++r)
                for (std::size_t c = t; c < d.cols(); ++c)
                    if (d(r, c) != 0 && (!found || abs(d(r, c)) < best))
                    {
                        found = true;
                        best = abs(d(r, c));
                        pr = r;
                        pc = c;
                    }
            if (!found)
                goto done;
            swap_rows(d, t, pr);
            swap_rows(u, t, pr);
            swap_cols(d, t, pc);
            swap_cols(v, t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < d.rows(); ++r)
            {
                if (d(r, t) == 0)
                    continue;
                const Integer q = d(r, t) / d(t, t);
                add_row(d, r, t, q);
                add_row(u, r, t, q);
                clean = clean && d(r, t) == 0;
            }
            for (std::size_t c = t + 1; c < d.cols(); ++c)
            {
                if (d(t, c) == 0)
                    continue;
                const Integer q = d(t, c) / d(t, t);
                add_col(d, c, t, q);
                add_col(v, c, t, q);
                clean = clean && d(t, c) == 0;
            }
            if (!clean)
                continue;

            // Divisibility: fold an offending row into row t and reduce again.
            bool divides = true;
            for (std::size_t r = t + 1; r < d.rows() && divides; ++r)
                for (std::size_t c = t + 1; c < d.cols(); ++c)
                    if (d(r, c) % d(t, t) != 0)
                    {
                        add_row(d, t, r, -1);
                        add_row(u, t, r, -1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (d(t, t) < 0)
        {
            for (std::size_t c = 0; c < d.cols(); ++c)
                d(t, c) = -d(t, c);
            for (std::size_t c = 0; c < u.cols(); ++c)
                u(t, c) = -u(t, c);
        }
        res.factors.push_back(d(t, t));
    }
done:
    res.rank = res.factors.size();
    res.u = std::move(u);
    res.v = std::move(v);
    res.d = std::move(d);
    return res;
}

namespace {

ChainComplex build_complex(const Presentation& p, int max_dim, bool normalized)
{
    if (max_dim < 0)
        throw IndexError("chain complex needs a max dimension >= 0");
    p.require_representable(max_dim, "chain complex");
    ChainComplex c;
    for (int n = 0; n <= max_dim; ++n)
        c.basis.push_back(normalized ? nondegenerate_simplices(p, n) : simplices(p, n));
    c.boundary.emplace_back(0, c.basis[0].size());
    for (int n = 1; n <= max_dim; ++n)
    {
        std::map<Simplex, std::size_t> row_of;
        for (std::size_t r = 0; r < c.basis[n - 1].size(); ++r)
            row_of[c.basis[n - 1][r]] = r;
        IntMatrix m(c.basis[n - 1].size(), c.basis[n].size());
        for (std::size_t col = 0; col < c.basis[n].size(); ++col)
        {
            for (int i = 0; i <= n; ++i)
            {
                const Simplex f = apply_face(p, c.basis[n][col], i);
                auto it = row_of.find(f);
                if (it == row_of.end())
                    continue;   // degenerate face in the normalized complex
                m(it->second, col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        c.boundary.push_back(std::move(m));
    }
    return c;
}

}   // namespace

ChainComplex normalized_complex(const Presentation& p, int max_dim)
{
    return build_complex(p, max_dim, true);
}

ChainComplex unnormalized_complex(const Presentation& p, int max_dim)
{
    return build_complex(p, max_dim, false);
}

bool boundary_squares_to_zero(const ChainComplex& c)
{
    for (int n = 2; n <= c.max_dim(); ++n)
        if (!(c.boundary[n - 1] * c.boundary[n]).is_zero())
            return false;
    return true;
}

std::string format_group(const HomologyGroup& h)
{
    std::vector<std::string> parts;
    if (h.betti == 1)
        parts.push_back("Z");
    else if (h.betti > 1)
        parts.push_back("Z^" + std::to_string(h.betti));
    for (const Integer& t : h.torsion)
        parts.push_back("Z/" + t.str());
    if (parts.empty())
        return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " ⊕ " + parts[i];
    return out;
}

std::vector<HomologyGroup> homology_of(const ChainComplex& c)
{
    const int top = c.max_dim();
    std::vector<SNFResult> snf;
    for (int n = 0; n <= top; ++n)
        snf.push_back(smith_normal_form(c.boundary[n]));
    std::vector<HomologyGroup> out;
    for (int n = 0; n < top; ++n)
    {
        HomologyGroup h;
        h.betti = static_cast<int>(c.basis[n].size() - snf[n].rank - snf[n + 1].rank);
        for (const Integer& f : snf[n + 1].factors)
            if (f > 1)
                h.torsion.push_back(f);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<HomologyGroup> homology(const Presentation& p, int max_dim)
{
    return homology_of(normalized_complex(p, max_dim));
}

long long euler_characteristic(const Presentation& p)
{
    long long chi = 0;
    for (int n = 0; n <= p.top_dim(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(p.generator_count(n));
    return chi;
}

}   // namespace sset
