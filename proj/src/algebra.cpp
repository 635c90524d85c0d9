#include "ffc/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace ffc {

bool IntMatrix::isZero() const
{
    return std::all_of(data.begin(), data.end(), [](const mpz_class& v) { return v == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k)
        {
            if (a.at(i, k) == 0)
                continue;
            for (size_t j = 0; j < b.cols; ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

size_t CochainComplex::dim(int i) const
{
    auto it = basis.find(i);
    return it == basis.end() ? 0 : it->second.size();
}

CochainComplex to_complex(const FlowCategory& cat)
{
    requireValid(cat);
    CochainComplex cx;
    if (cat.objects.empty())
        return cx;
    cx.minDegree = cat.objects.front().degree;
    cx.maxDegree = cx.minDegree;
    for (const auto& o : cat.objects)
    {
        cx.minDegree = std::min(cx.minDegree, o.degree);
        cx.maxDegree = std::max(cx.maxDegree, o.degree);
    }
    for (int i = cx.minDegree; i <= cx.maxDegree; ++i)
        cx.basis[i] = cat.objectsOfDegree(i);
    for (int i = cx.minDegree; i < cx.maxDegree; ++i)
    {
        const auto& src = cx.basis[i];
        const auto& dst = cx.basis[i + 1];
        IntMatrix m(dst.size(), src.size());
        for (size_t r = 0; r < dst.size(); ++r)
            for (size_t c = 0; c < src.size(); ++c)
            {
                long v = 0;
                for (const auto& p : cat.points(dst[r], src[c]))
                    v += p.sign ? -1 : 1;
                m.at(r, c) = v;
            }
        cx.delta[i] = m;
    }
    return cx;
}

bool squaresToZero(const CochainComplex& cx)
{
    for (int i = cx.minDegree; i + 1 < cx.maxDegree; ++i)
    {
        if (!multiply(cx.delta.at(i + 1), cx.delta.at(i)).isZero())
            return false;
    }
    return true;
}

std::vector<mpz_class> smithInvariants(IntMatrix m)
{
    std::vector<mpz_class> diag;
    const size_t R = m.rows, C = m.cols;
    size_t t = 0;
    auto swapRows = [&](size_t a, size_t b) {
        for (size_t j = 0; j < C; ++j)
            std::swap(m.at(a, j), m.at(b, j));
    };
    auto swapCols = [&](size_t a, size_t b) {
        for (size_t i = 0; i < R; ++i)
            std::swap(m.at(i, a), m.at(i, b));
    };
    while (t < R && t < C)
    {
        // pivot: entry of least absolute value in the trailing block
        size_t pi = R, pj = C;
        for (size_t i = t; i < R; ++i)
            for (size_t j = t; j < C; ++j)
            {
                if (m.at(i, j) != 0 && (pi == R || abs(m.at(i, j)) < abs(m.at(pi, pj))))
                {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == R)
            break;
        swapRows(t, pi);
        swapCols(t, pj);

        bool clean = false;
        while (!clean)
        {
            clean = true;
            const mpz_class p = m.at(t, t);
            for (size_t i = t + 1; i < R; ++i)
            {
                if (m.at(i, t) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), p.get_mpz_t());
                for (size_t j = t; j < C; ++j)
                    m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0)
                    clean = false;
            }
            for (size_t j = t + 1; j < C; ++j)
            {
                if (m.at(t, j) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), p.get_mpz_t());
                for (size_t i = t; i < R; ++i)
                    m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0)
                    clean = false;
            }
            if (!clean)
            {
                // move a smaller remainder into the pivot position
                size_t bi = t, bj = t;
                for (size_t i = t; i < R; ++i)
                    if (m.at(i, t) != 0 && abs(m.at(i, t)) < abs(m.at(bi, bj)))
                    {
                        bi = i;
                        bj = t;
                    }
                for (size_t j = t; j < C; ++j)
                    if (m.at(t, j) != 0 && abs(m.at(t, j)) < abs(m.at(bi, bj)))
                    {
                        bi = t;
                        bj = j;
                    }
                swapRows(t, bi);
                swapCols(t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            for (size_t i = t + 1; i < R && clean; ++i)
                for (size_t j = t + 1; j < C; ++j)
                {
                    if (m.at(i, j) % p != 0)
                    {
                        for (size_t k = t; k < C; ++k)
                            m.at(t, k) += m.at(i, k);
                        clean = false;
                        break;
                    }
                }
        }
        diag.push_back(abs(m.at(t, t)));
        ++t;
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

size_t rankModP(const IntMatrix& src, unsigned long p)
{
    const size_t R = src.rows, C = src.cols;
    std::vector<unsigned long> m(R * C);
    for (size_t i = 0; i < R * C; ++i)
    {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), src.data[i].get_mpz_t(), p);
        m[i] = r.get_ui();
    }
    auto inv = [&](unsigned long a) {
        // Fermat inverse; p is prime
        unsigned long result = 1, base = a % p, e = p - 2;
        while (e)
        {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    size_t rank = 0;
    for (size_t col = 0; col < C && rank < R; ++col)
    {
        size_t piv = rank;
        while (piv < R && m[piv * C + col] == 0)
            ++piv;
        if (piv == R)
            continue;
        for (size_t j = 0; j < C; ++j)
            std::swap(m[rank * C + j], m[piv * C + j]);
        unsigned long s = inv(m[rank * C + col]);
        for (size_t j = 0; j < C; ++j)
            m[rank * C + j] = m[rank * C + j] * s % p;
        for (size_t i = 0; i < R; ++i)
        {
            if (i == rank || m[i * C + col] == 0)
                continue;
            unsigned long f = m[i * C + col];
            for (size_t j = 0; j < C; ++j)
                m[i * C + j] = (m[i * C + j] + (p - f) * m[rank * C + j]) % p;
        }
        ++rank;
    }
    return rank;
}

std::map<int, CohomologyGroup> cohomology(const CochainComplex& cx, Coefficients coeff)
{
    if (!squaresToZero(cx))
        throw InvalidCategory("differential does not square to zero");
    std::map<int, CohomologyGroup> out;
    if (cx.empty())
        return out;
    std::map<int, std::vector<mpz_class> > inv;
    std::map<int, size_t> rank2;
    for (const auto& [i, m] : cx.delta)
    {
        if (coeff == Coefficients::Z)
            inv[i] = smithInvariants(m);
        else
            rank2[i] = rankModP(m, 2);
    }
    auto rankOf = [&](int i) -> size_t {
        if (!cx.delta.count(i))
            return 0;
        return coeff == Coefficients::Z ? inv[i].size() : rank2[i];
    };
    for (int i = cx.minDegree; i <= cx.maxDegree; ++i)
    {
        CohomologyGroup g;
        g.rank = cx.dim(i) - rankOf(i) - rankOf(i - 1);
        if (coeff == Coefficients::Z && inv.count(i - 1))
        {
            for (const auto& d : inv[i - 1])
                if (d > 1)
                    g.torsion.push_back(d);
        }
        if (!g.zero())
            out[i] = g;
    }
    return out;
}

std::string formatGroup(const CohomologyGroup& g, Coefficients coeff)
{
    if (g.zero())
        return "0";
    std::ostringstream os;
    if (coeff == Coefficients::Z2)
    {
        if (g.rank == 1)
            return "Z/2";
        os << "(Z/2)^" << g.rank;
        return os.str();
    }
    bool first = true;
    if (g.rank > 0)
    {
        os << "Z";
        if (g.rank > 1)
            os << "^" << g.rank;
        first = false;
    }
    for (const auto& t : g.torsion)
    {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

}   // namespace ffc
