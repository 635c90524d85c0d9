// Exhaustive small chain shapes for cancel and Whitney. Each shape has a
// known case, so the expected framing is computed directly and also through
// the chain-walking oracle.
#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "ffc/model.hpp"
#include "ffc/moves.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ffc;
using namespace ffc::testing;

namespace {

int bit(unsigned mask, int i)
{
    return (mask >> i) & 1;
}

void forMasks(int n, const std::function<void(unsigned)>& f)
{
    for (unsigned m = 0; m < (1u << n); ++m)
        f(m);
}

struct Run
{
    size_t cases = 0;
    std::vector<std::string> failures;

    void fail(const std::string& s) { failures.push_back(s); }
    std::string report() const
    {
        std::string s = std::to_string(failures.size()) + " failures\n";
        for (size_t i = 0; i < failures.size() && i < 8; ++i)
            s += failures[i] + "\n";
        return s;
    }
};

/**
 * Alternating chain over 'I' (old piece in M(a,b)) and 'J' (piece that gets
 * multiplied by the neighbour point), following the six-case numbering.
 */
std::string chainOf(int kase, int k)
{
    std::string s;
    if (kase == 4)
        s = "I";
    if (kase == 6)
        s = "J";
    for (int i = 0; i < k; ++i)
        s += kase == 4 ? "JI" : "IJ";
    return s;
}

/**
 * beside = false: |a| = |x| + 1 = |b| + 2, B in M(x,b), J pieces in M(a,y).
 * beside = true:  |a| = |x| = |b| + 2, A in M(a,y), J pieces in M(x,b).
 */
void cancelShapes(bool beside, Run& run)
{
    const std::string tag = beside ? "beside" : "above";
    for (int kase = 3; kase <= 6; ++kase)
        for (int k = (kase == 3 || kase == 5) ? 1 : 0; k <= 3; ++k)
        {
            const std::string chain = chainOf(kase, k);
            const int m = static_cast<int>(chain.size());
            const bool closed = kase == 3;
            const int junctions = closed ? m : m - 1;
            // piece framings, es, eN, eJ, free start sign, eC, eC2, two circle framings
            forMasks(m + 8, [&](unsigned mask) {
                const int es = bit(mask, m), eN = bit(mask, m + 1), eJ = bit(mask, m + 2);
                const int freeStart = bit(mask, m + 3), eC = bit(mask, m + 4), eC2 = bit(mask, m + 5);
                const int circI = bit(mask, m + 6), circJ = bit(mask, m + 7);
                Builder bl;
                if (beside)
                {
                    for (auto [id, d] : {std::pair{"a", 2}, {"x", 2}, {"y", 1}, {"c", 1}, {"c2", 1}, {"b", 0}})
                        bl.obj(id, d);
                    bl.pt("a", "y", "N", eN);
                }
                else
                {
                    for (auto [id, d] : {std::pair{"a", 2}, {"x", 1}, {"c", 1}, {"c2", 1}, {"y", 0}, {"b", 0}})
                        bl.obj(id, d);
                    bl.pt("x", "b", "N", eN);
                }
                bl.pt("x", "y", "s", es);
                auto jid = [](int j) { return "j" + std::to_string(j); };
                auto sJ = [&](int j) { return (eJ + j) % 2; };
                for (int j = 0; j < junctions; ++j)
                {
                    if (beside)
                        bl.pt("y", "b", jid(j), sJ(j));
                    else
                        bl.pt("a", "x", jid(j), sJ(j));
                }
                auto source = [&](char t) { return std::string(beside && t == 'J' ? "x" : "a"); };
                auto target = [&](char t) { return std::string(!beside && t == 'J' ? "y" : "b"); };
                auto junction = [&](char t, int j) {
                    const std::string other = t == 'I' ? "N" : "s";
                    return beside ? EndpointRef{"y", jid(j), other} : EndpointRef{"x", other, jid(j)};
                };
                auto junctionSign = [&](char t, int j) { return ((t == 'I' ? eN : es) + sJ(j)) % 2; };
                int extra[2] = {0, 0};
                auto freeEnd = [&](const std::string& mid, char t, int sign, int eLow, int side) {
                    const int eUp = (sign + eLow) % 2;
                    bl.pt(mid, target(t), "C", eLow);
                    bl.pt(source(t), mid, "D", eUp);
                    extra[side] = eLow + eUp;
                    return EndpointRef{mid, "C", "D"};
                };

                int S = 0, nJ = 0;
                for (int t = 0; t < m; ++t)
                {
                    const char type = chain[t];
                    const int fr = bit(mask, t);
                    S += fr;
                    if (type == 'J')
                    {
                        ++nJ;
                        if (!beside)
                            S += eN;
                    }
                    EndpointRef s, e;
                    if (closed)
                    {
                        s = junction(type, (t - 1 + m) % m);
                        e = junction(type, t);
                    }
                    else
                    {
                        int startSign = m == 1 ? freeStart : 1 - junctionSign(type, 0);
                        int endSign = m == 1 ? 1 - freeStart : 1 - junctionSign(type, t - 1);
                        s = t == 0 ? freeEnd("c", type, startSign, eC, 0) : junction(type, t - 1);
                        e = t == m - 1 ? freeEnd("c2", type, endSign, eC2, 1) : junction(type, t);
                    }
                    bl.iv(source(type), target(type), s, e, fr);
                }
                bl.circle("a", "b", circI);
                bl.circle(source('J'), target('J'), circJ);
                bl.c.normalize();
                if (auto rep = validate(bl.c); !rep.empty())
                {
                    run.fail(tag + " shape invalid: " + formatViolation(rep.front()));
                    return;
                }

                int want = 0;
                if (beside)
                {
                    const int e0 = chain.front() == 'J' ? extra[0] : 0;
                    const int e1 = chain.back() == 'J' ? extra[1] : 0;
                    switch (kase)
                    {
                        case 3:
                        case 4: want = k + S; break;
                        case 5: want = k + e0 + e1 + S; break;
                        case 6: want = 1 + k + e0 + e1 + S; break;
                    }
                }
                else
                {
                    switch (kase)
                    {
                        case 3:
                        case 4: want = k * (1 + es) + S; break;
                        case 5: want = k * (1 + es) + eN + S; break;
                        case 6: want = nJ * (1 + es) + eN + eN + S; break;
                    }
                }
                want %= 2;

                FlowCategory out = cancel(bl.c, "x", "y");
                ++run.cases;
                const std::string where = tag + " case " + std::to_string(kase) + " k=" + std::to_string(k) +
                                          " mask=" + std::to_string(mask);
                if (auto rep = validate(out); !rep.empty())
                    run.fail(where + ": output invalid: " + formatViolation(rep.front()));
                Shape got = shapeOf(out.components("a", "b"));
                std::multiset<int> wantCircles{circI, circJ};
                if (closed)
                    wantCircles.insert(want);
                const bool ok = got.circles == wantCircles &&
                                got.intervals.size() == (closed ? 0u : 1u) &&
                                (closed || std::get<2>(*got.intervals.begin()) == want);
                if (!ok)
                    run.fail(where + ": got " + shapeText(got) + "want fr " + std::to_string(want));
                for (auto& d : compareShapes(bl.c, out, predictCancel(bl.c, "x", "y", out), {"x", "y"}))
                    run.fail(where + ": oracle: " + d);
            });
        }
}

/**
 * first = true: gluing in M(a,y) at x, junction points in M(a,x).
 * first = false: gluing in M(x,b) at y, junction points in M(y,b).
 */
void whitneyShapes(bool first, Run& run)
{
    const std::string tag = first ? "M(a,y)" : "M(x,b)";
    for (int closed = 0; closed < 2; ++closed)
        for (int m = 1; m <= 4; ++m)
        {
            const int junctions = closed ? m : m - 1;
            // piece framings, orientation per junction, first junction sign, free start sign, eC, eC2
            forMasks(m + junctions + 4, [&](unsigned mask) {
                const int s0 = bit(mask, m + junctions), freeStart = bit(mask, m + junctions + 1);
                const int eC = bit(mask, m + junctions + 2), eC2 = bit(mask, m + junctions + 3);
                Builder bl;
                std::string src, tgt;
                if (first)
                {
                    for (auto [id, d] : {std::pair{"a", 2}, {"x", 1}, {"c", 1}, {"c2", 1}, {"y", 0}})
                        bl.obj(id, d);
                    src = "a";
                    tgt = "y";
                }
                else
                {
                    for (auto [id, d] : {std::pair{"x", 1}, {"y", 0}, {"c", 0}, {"c2", 0}, {"b", -1}})
                        bl.obj(id, d);
                    src = "x";
                    tgt = "b";
                }
                bl.pt("x", "y", "P", 0);
                bl.pt("x", "y", "M", 1);
                auto jid = [](int j) { return "j" + std::to_string(j); };
                auto end = [&](bool plus, int j) {
                    const std::string pm = plus ? "P" : "M";
                    return first ? EndpointRef{"x", pm, jid(j)} : EndpointRef{"y", jid(j), pm};
                };
                // piece before junction j takes P when the orientation bit is 0
                auto beforePlus = [&](int j) { return bit(mask, m + j) == 0; };
                std::vector<int> sign(junctions, 0);
                if (junctions > 0)
                    sign[0] = s0;
                // end signs of piece t: (before^P/M at junction t-1 side after) ...
                auto endSign = [&](bool plus, int j) { return ((plus ? 0 : 1) + sign[j]) % 2; };
                for (int t = 1; t < junctions; ++t)
                {
                    // piece t sits between junctions t-1 and t
                    const int startSign = endSign(!beforePlus(t - 1), t - 1);
                    const int lowerAtEnd = beforePlus(t) ? 0 : 1;
                    sign[t] = (1 - startSign - lowerAtEnd + 4) % 2;
                }
                if (closed)
                {
                    const int startSign = endSign(!beforePlus(junctions - 1), junctions - 1);
                    if (startSign == endSign(beforePlus(0), 0))
                        return;    // not a consistent framed loop
                }
                for (int j = 0; j < junctions; ++j)
                {
                    if (first)
                        bl.pt("a", "x", jid(j), sign[j]);
                    else
                        bl.pt("y", "b", jid(j), sign[j]);
                }
                auto freeEnd = [&](const std::string& mid, int s, int eLow) {
                    if (first)
                    {
                        bl.pt(mid, "y", "C", eLow);
                        bl.pt("a", mid, "D", (s + eLow) % 2);
                    }
                    else
                    {
                        bl.pt(mid, "b", "C", eLow);
                        bl.pt("x", mid, "D", (s + eLow) % 2);
                    }
                    return EndpointRef{mid, "C", "D"};
                };
                int S = 0;
                for (int t = 0; t < m; ++t)
                {
                    const int fr = bit(mask, t);
                    S += fr;
                    EndpointRef s, e;
                    if (closed)
                    {
                        const int jb = (t - 1 + m) % m;
                        s = end(!beforePlus(jb), jb);
                        e = end(beforePlus(t), t);
                    }
                    else
                    {
                        const int startSign = m == 1 ? freeStart
                                                     : 1 - endSign(beforePlus(0), 0);
                        const int endSg = m == 1 ? 1 - freeStart
                                                 : 1 - endSign(!beforePlus(t - 1), t - 1);
                        s = t == 0 ? freeEnd("c", startSign, eC) : end(!beforePlus(t - 1), t - 1);
                        e = t == m - 1 ? freeEnd("c2", endSg, eC2) : end(beforePlus(t), t);
                    }
                    bl.iv(src, tgt, s, e, fr);
                }
                bl.c.normalize();
                if (auto rep = validate(bl.c); !rep.empty())
                {
                    run.fail(tag + " whitney shape invalid: " + formatViolation(rep.front()));
                    return;
                }
                int want = S;
                for (int j = 0; j < junctions; ++j)
                    want += first ? 1 : (sign[j] == 0 ? 1 : 0);
                want %= 2;

                FlowCategory out = whitney(bl.c, "x", "y", "P", "M");
                ++run.cases;
                const std::string where = tag + " whitney closed=" + std::to_string(closed) + " m=" +
                                          std::to_string(m) + " mask=" + std::to_string(mask);
                if (auto rep = validate(out); !rep.empty())
                    run.fail(where + ": output invalid: " + formatViolation(rep.front()));
                Shape got = shapeOf(out.components(src, tgt));
                bool ok = closed ? (got.intervals.empty() && got.circles == std::multiset<int>{want})
                                 : (got.circles.empty() && got.intervals.size() == 1 &&
                                    std::get<2>(*got.intervals.begin()) == want);
                if (!ok)
                    run.fail(where + ": got " + shapeText(got) + "want fr " + std::to_string(want));
                for (auto& d : compareShapes(bl.c, out, predictWhitney(bl.c, "x", "y", "P", "M")))
                    run.fail(where + ": oracle: " + d);
            });
        }
}

}   // namespace

TEST_CASE("cancel framings follow the six cases when a is one degree above x")
{
    Run run;
    cancelShapes(false, run);
    CHECK(run.cases > 20000);
    CHECK_MESSAGE(run.failures.empty(), run.report());
}

TEST_CASE("cancel framings follow the six cases when a and x share a degree")
{
    Run run;
    cancelShapes(true, run);
    CHECK(run.cases > 20000);
    CHECK_MESSAGE(run.failures.empty(), run.report());
}

TEST_CASE("whitney gluing framings in both kinds of affected space")
{
    for (bool first : {true, false})
    {
        Run run;
        whitneyShapes(first, run);
        CHECK(run.cases > 500);
        CHECK_MESSAGE(run.failures.empty(), run.report());
    }
}
