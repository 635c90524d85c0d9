#include "ffc/recognizer.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ffc {

namespace {

// Two same-sign points, nothing else.
bool sameSignPair(const std::vector<SignedPoint>& pts)
{
    return pts.size() == 2 && pts[0].sign == pts[1].sign;
}

bool sameSignK(const std::vector<SignedPoint>& pts)
{
    if (pts.size() < 2)
        return false;
    return std::all_of(pts.begin(), pts.end(),
                       [&](const SignedPoint& p) { return p.sign == pts.front().sign; });
}

// Number of framing-0 circles, or -1 if the space contains an interval.
int zeroCircles(const std::vector<OneDimComponent>& comps)
{
    int r = 0;
    for (const auto& c : comps)
    {
        if (!c.isCircle())
            return -1;
        if (c.framing == 0)
            ++r;
    }
    return r;
}

// Only the listed 0-dim and 1-dim spaces may be nonempty.
bool onlyThese(const FlowCategory& c, const std::set<Key>& zero, const std::set<Key>& one)
{
    for (const auto& [k, pts] : c.moduli0)
        if (!pts.empty() && !zero.count(k))
            return false;
    for (const auto& [k, comps] : c.moduli1)
        if (!comps.empty() && !one.count(k))
            return false;
    return true;
}

std::optional<std::vector<Summand> > matchComponent(const FlowCategory& c)
{
    std::vector<ObjectEntry> objs = c.objects;
    std::sort(objs.begin(), objs.end(), [](const ObjectEntry& l, const ObjectEntry& r) {
        return std::tie(l.degree, l.id) < std::tie(r.degree, r.id);
    });
    const int n = objs.empty() ? 0 : objs.front().degree;

    if (objs.size() == 1)
        return std::vector<Summand>{{Model::Sphere, n, 0}};

    if (objs.size() == 2)
    {
        const std::string& b = objs[0].id;
        const std::string& t = objs[1].id;
        int gap = objs[1].degree - n;
        if (gap == 1 && onlyThese(c, {{t, b}}, {}) && sameSignK(c.points(t, b)))
            return std::vector<Summand>{{Model::Moore, n, static_cast<int>(c.points(t, b).size())}};
        if (gap == 2 && onlyThese(c, {}, {{t, b}}) && !c.components(t, b).empty())
        {
            int r = zeroCircles(c.components(t, b));
            if (r < 0)
                return std::nullopt;
            if (r % 2 == 1)
                return std::vector<Summand>{{Model::CP2, n, 0}};
            return std::vector<Summand>{{Model::Sphere, n, 0}, {Model::Sphere, n + 2, 0}};
        }
        return std::nullopt;
    }

    if (objs.size() == 3 && objs[1].degree == n + 1 && objs[2].degree == n + 2)
    {
        const std::string& b = objs[0].id;
        const std::string& m = objs[1].id;
        const std::string& t = objs[2].id;
        if (c.components(t, b).empty())
            return std::nullopt;
        int r = zeroCircles(c.components(t, b));
        if (r < 0)
            return std::nullopt;
        bool odd = r % 2 == 1;
        // top pair = two same-sign points, bottom pair empty
        if (onlyThese(c, {{t, m}}, {{t, b}}) && sameSignPair(c.points(t, m)))
        {
            if (odd)
                return std::vector<Summand>{{Model::RP4modRP1, n, 0}};
            return std::vector<Summand>{{Model::Sphere, n, 0}, {Model::Moore, n + 1, 2}};
        }
        // top pair empty, bottom pair = two same-sign points
        if (onlyThese(c, {{m, b}}, {{t, b}}) && sameSignPair(c.points(m, b)))
        {
            if (odd)
                return std::vector<Summand>{{Model::RP5modRP2, n, 0}};
            return std::vector<Summand>{{Model::Moore, n, 2}, {Model::Sphere, n + 2, 0}};
        }
        return std::nullopt;
    }

    if (objs.size() == 4 && objs[1].degree == n + 1 && objs[2].degree == n + 1 &&
        objs[3].degree == n + 2)
    {
        const std::string& b = objs[0].id;
        const std::string& t = objs[3].id;
        for (int swap = 0; swap < 2; ++swap)
        {
            const std::string& m1 = objs[1 + swap].id;
            const std::string& m2 = objs[2 - swap].id;
            if (!onlyThese(c, {{t, m2}, {m1, b}}, {{t, b}}))
                continue;
            if (!sameSignPair(c.points(t, m2)) || !sameSignPair(c.points(m1, b)))
                continue;
            int r = zeroCircles(c.components(t, b));
            if (r > 0 && r % 2 == 1)
                return std::vector<Summand>{{Model::RP2smashRP2, n, 0}};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

int modelRank(Model m)
{
    switch (m)
    {
        case Model::Sphere: return 0;
        case Model::Moore: return 1;
        case Model::CP2: return 2;
        case Model::RP4modRP1: return 3;
        case Model::RP5modRP2: return 4;
        case Model::RP2smashRP2: return 5;
    }
    return 6;
}

CohomologyGroup freeZ()
{
    return CohomologyGroup{1, {}};
}

CohomologyGroup cyclic(int k)
{
    return CohomologyGroup{0, {mpz_class(k)}};
}

}   // namespace

std::string Summand::text() const
{
    const std::string at = "@" + std::to_string(bottom);
    switch (model)
    {
        case Model::Sphere: return "S^" + std::to_string(bottom);
        case Model::Moore: return "Moore(Z/" + std::to_string(order) + "," + std::to_string(bottom) + ")";
        case Model::CP2: return "CP2" + at;
        case Model::RP4modRP1: return "RP4/RP1" + at;
        case Model::RP5modRP2: return "RP5/RP2" + at;
        case Model::RP2smashRP2: return "RP2^RP2" + at;
    }
    return "?";
}

std::string Summand::suspensionText() const
{
    std::string name;
    int base = 0;
    switch (model)
    {
        case Model::Sphere:
        case Model::Moore:
            return text();
        case Model::CP2: name = "CP2"; base = 2; break;
        case Model::RP4modRP1: name = "RP4/RP1"; base = 2; break;
        case Model::RP5modRP2: name = "RP5/RP2"; base = 3; break;
        case Model::RP2smashRP2: name = "RP2^RP2"; base = 2; break;
    }
    int k = bottom - base;
    if (k == 0)
        return name;
    return "Susp(" + std::to_string(k) + ") " + name;
}

std::vector<std::string> SummandExpression::strings() const
{
    std::vector<std::string> out;
    for (const auto& s : summands)
        out.push_back(s.text());
    if (residue)
    {
        std::string ids;
        for (const auto& o : residue->objects)
            ids += (ids.empty() ? "" : ",") + o.id;
        out.push_back("residue(" + ids + ")");
    }
    return out;
}

std::string SummandExpression::text() const
{
    auto parts = strings();
    if (parts.empty())
        return "pt";
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i)
        s += (i ? " v " : "") + parts[i];
    return s;
}

std::string SummandExpression::suspensionText() const
{
    std::vector<std::string> parts;
    for (const auto& s : summands)
        parts.push_back(s.suspensionText());
    auto all = strings();
    if (residue)
        parts.push_back(all.back());
    if (parts.empty())
        return "pt";
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i)
        s += (i ? " v " : "") + parts[i];
    return s;
}

SummandExpression recognize(const FlowCategory& category)
{
    SummandExpression expr;
    std::set<std::string> unmatched;
    for (const auto& comp : component_split(category))
    {
        auto m = matchComponent(comp);
        if (m)
        {
            expr.summands.insert(expr.summands.end(), m->begin(), m->end());
            continue;
        }
        for (const auto& o : comp.objects)
            unmatched.insert(o.id);
    }
    std::sort(expr.summands.begin(), expr.summands.end(), [](const Summand& l, const Summand& r) {
        return std::make_tuple(modelRank(l.model), l.bottom, l.order) <
               std::make_tuple(modelRank(r.model), r.bottom, r.order);
    });
    if (!unmatched.empty())
    {
        expr.residue = subcategory(category, unmatched);
        expr.residueCohomology = cohomology(to_complex(*expr.residue), Coefficients::Z);
    }
    return expr;
}

std::map<int, CohomologyGroup> summandCohomology(const Summand& s)
{
    const int n = s.bottom;
    switch (s.model)
    {
        case Model::Sphere: return {{n, freeZ()}};
        case Model::Moore: return {{n + 1, cyclic(s.order)}};
        case Model::CP2: return {{n, freeZ()}, {n + 2, freeZ()}};
        case Model::RP4modRP1: return {{n, freeZ()}, {n + 2, cyclic(2)}};
        case Model::RP5modRP2: return {{n + 1, cyclic(2)}, {n + 2, freeZ()}};
        case Model::RP2smashRP2: return {{n + 1, cyclic(2)}, {n + 2, cyclic(2)}};
    }
    return {};
}

}   // namespace ffc
