#include "ffc/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace ffc {

namespace {

const char kSep = '\x1f';

std::string glueKey(const std::string& l, const std::string& r)
{
    return l + kSep + r;
}

struct PieceEnd
{
    bool glued = false;
    std::string key;     // identification class when glued
    int weight = 0;      // framing contribution when this end is glued
    EndpointRef label;   // boundary label when free
};

// One constituent of a new 1-dimensional moduli space before sewing.
struct Piece
{
    bool circle = false;
    int fr = 0;
    PieceEnd ends[2];
    std::string keepId;  // original component id, kept if nothing is glued
};

class IdMinter
{
    public:
        explicit IdMinter(const FlowCategory& cat)
        {
            for (const auto& [key, comps] : cat.moduli1)
            {
                for (const auto& c : comps)
                {
                    if (c.id.rfind("g:", 0) != 0)
                        continue;
                    try
                    {
                        size_t used = 0;
                        long v = std::stol(c.id.substr(2), &used);
                        if (used == c.id.size() - 2 && v >= next_)
                            next_ = v + 1;
                    }
                    catch (const std::exception&)
                    {
                    }
                }
            }
        }

        std::string mint() { return "g:" + std::to_string(next_++); }

    private:
        long next_ = 0;
};

PieceEnd freeEnd(const EndpointRef& label)
{
    PieceEnd e;
    e.label = label;
    return e;
}

PieceEnd gluedEnd(const std::string& key, int weight)
{
    PieceEnd e;
    e.glued = true;
    e.key = key;
    e.weight = weight;
    return e;
}

/**
 * Identify glued ends pairwise and walk the resulting chains. A component's
 * framing is the sum of its pieces' framings plus the weights of every
 * glued end it contains.
 */
std::vector<OneDimComponent> sew(const std::vector<Piece>& pieces, IdMinter& minter)
{
    std::map<std::string, std::vector<std::pair<size_t, int> > > classes;
    for (size_t i = 0; i < pieces.size(); ++i)
    {
        if (pieces[i].circle)
            continue;
        for (int s = 0; s < 2; ++s)
        {
            if (pieces[i].ends[s].glued)
                classes[pieces[i].ends[s].key].push_back({i, s});
        }
    }
    for (const auto& [key, members] : classes)
    {
        if (members.size() != 2)
            throw MoveError("internal: gluing class with " + std::to_string(members.size()) +
                            " ends (input category is not valid)");
    }
    auto partner = [&](size_t i, int s) {
        const auto& m = classes.at(pieces[i].ends[s].key);
        return (m[0] == std::make_pair(i, s)) ? m[1] : m[0];
    };

    std::vector<OneDimComponent> out;
    std::vector<bool> visited(pieces.size(), false);
    for (size_t i = 0; i < pieces.size(); ++i)
    {
        if (visited[i])
            continue;
        const Piece& p = pieces[i];
        if (p.circle)
        {
            visited[i] = true;
            OneDimComponent c;
            c.kind = ComponentKind::Circle;
            c.framing = p.fr % 2;
            c.id = p.keepId.empty() ? minter.mint() : p.keepId;
            out.push_back(c);
            continue;
        }

        // Find a free extremity, or detect that the chain closes up.
        size_t cur = i;
        int exitSide = 0;
        bool cycle = false;
        while (pieces[cur].ends[exitSide].glued)
        {
            auto [j, e] = partner(cur, exitSide);
            cur = j;
            exitSide = 1 - e;
            if (cur == i && exitSide == 0)
            {
                cycle = true;
                break;
            }
        }

        int fr = 0;
        size_t count = 0;
        bool anyGlue = false;
        OneDimComponent c;
        if (cycle)
        {
            size_t at = i;
            int side = 1;
            do
            {
                visited[at] = true;
                fr += pieces[at].fr;
                ++count;
                auto [j, e] = partner(at, side);
                fr += pieces[at].ends[side].weight + pieces[j].ends[e].weight;
                anyGlue = true;
                at = j;
                side = 1 - e;
            } while (at != i);
            c.kind = ComponentKind::Circle;
        }
        else
        {
            // cur/exitSide is a free end: start there and walk to the other extremity
            size_t at = cur;
            int side = 1 - exitSide;
            c.kind = ComponentKind::Interval;
            c.start = pieces[cur].ends[exitSide].label;
            while (true)
            {
                visited[at] = true;
                fr += pieces[at].fr;
                ++count;
                if (!pieces[at].ends[side].glued)
                {
                    c.end = pieces[at].ends[side].label;
                    break;
                }
                auto [j, e] = partner(at, side);
                fr += pieces[at].ends[side].weight + pieces[j].ends[e].weight;
                anyGlue = true;
                at = j;
                side = 1 - e;
            }
        }
        c.framing = ((fr % 2) + 2) % 2;
        if (count == 1 && !anyGlue && !p.keepId.empty())
            c.id = p.keepId;
        else
            c.id = minter.mint();
        out.push_back(c);
    }
    return out;
}

const SignedPoint& requirePoint(const FlowCategory& cat, const std::string& a,
                                const std::string& b, const std::string& id)
{
    const SignedPoint* p = cat.findPoint(a, b, id);
    if (!p)
        throw MoveError("no point " + id + " in M(" + a + "," + b + ")");
    return *p;
}

void requireObject(const FlowCategory& cat, const std::string& id)
{
    if (!cat.hasObject(id))
        throw MoveError("unknown object " + id);
}

int signOf(const FlowCategory& cat, const std::string& a, const std::string& b,
           const std::string& id)
{
    return requirePoint(cat, a, b, id).sign;
}

std::string joinIds(const std::vector<std::string>& ids)
{
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i)
        s += (i ? "," : "") + ids[i];
    return s;
}

std::vector<std::string> splitIds(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
        out.push_back(cur);
    return out;
}

}   // namespace

const char* moveKindName(MoveKind kind)
{
    switch (kind)
    {
        case MoveKind::Whitney: return "whitney";
        case MoveKind::Cancel: return "cancel";
        case MoveKind::RemoveCircleFr1: return "remove_circle_fr1";
        case MoveKind::RemoveCircleFr0Pair: return "remove_circle_fr0_pair";
        case MoveKind::SplitSummand: return "split_summand";
    }
    return "?";
}

std::string MoveDescriptor::text() const
{
    switch (kind)
    {
        case MoveKind::Whitney: return "whitney:" + x + "," + y + ":" + P + "," + M;
        case MoveKind::Cancel: return "cancel:" + x + "," + y;
        case MoveKind::RemoveCircleFr1:
        case MoveKind::RemoveCircleFr0Pair:
            return "rmcircle:" + x + "," + y + ":" + joinIds(components);
        case MoveKind::SplitSummand: return "split:" + joinIds(objects);
    }
    return "";
}

MoveDescriptor parseMove(const std::string& text, const FlowCategory& cat)
{
    auto bad = [&](const std::string& why) {
        return MoveError("bad move '" + text + "': " + why);
    };
    size_t c1 = text.find(':');
    if (c1 == std::string::npos)
        throw bad("missing ':'");
    std::string kind = text.substr(0, c1);
    std::string rest = text.substr(c1 + 1);
    MoveDescriptor d;
    if (kind == "split")
    {
        d.kind = MoveKind::SplitSummand;
        d.objects = splitIds(rest);
        return d;
    }
    size_t c2 = rest.find(':');
    std::string objs = rest.substr(0, c2);
    std::string tail = c2 == std::string::npos ? "" : rest.substr(c2 + 1);
    auto pair = splitIds(objs);
    if (pair.size() != 2)
        throw bad("expected two object ids");
    d.x = pair[0];
    d.y = pair[1];
    if (kind == "whitney")
    {
        auto pm = splitIds(tail);
        if (c2 == std::string::npos || pm.size() != 2)
            throw bad("expected whitney:x,y:P,M");
        d.kind = MoveKind::Whitney;
        d.P = pm[0];
        d.M = pm[1];
    }
    else if (kind == "cancel")
    {
        d.kind = MoveKind::Cancel;
        const auto& pts = cat.points(d.x, d.y);
        if (pts.size() != 1)
            throw bad("M(" + d.x + "," + d.y + ") is not a single point");
        d.point = pts.front().id;
        if (!tail.empty() && tail != d.point)
            throw bad("M(" + d.x + "," + d.y + ") has no point " + tail);
    }
    else if (kind == "rmcircle")
    {
        if (c2 == std::string::npos || tail.empty())
            throw bad("expected rmcircle:a,b:ids");
        d.components = splitIds(tail);
        d.kind = d.components.size() == 1 ? MoveKind::RemoveCircleFr1 : MoveKind::RemoveCircleFr0Pair;
    }
    else
    {
        throw bad("unknown move kind '" + kind + "'");
    }
    return d;
}

std::vector<MoveDescriptor> list_moves(const FlowCategory& cat)
{
    requireValid(cat);
    std::vector<MoveDescriptor> whitneys, cancels, fr1s, fr0s, splits;
    for (const auto& [key, pts] : cat.moduli0)
    {
        const SignedPoint* pos = nullptr;
        const SignedPoint* neg = nullptr;
        for (const auto& p : pts)
        {
            auto& slot = p.sign == 0 ? pos : neg;
            if (!slot || p.id < slot->id)
                slot = &p;
        }
        if (pos && neg)
        {
            MoveDescriptor d;
            d.kind = MoveKind::Whitney;
            d.x = key.first;
            d.y = key.second;
            d.P = pos->id;
            d.M = neg->id;
            whitneys.push_back(d);
        }
        if (pts.size() == 1)
        {
            MoveDescriptor d;
            d.kind = MoveKind::Cancel;
            d.x = key.first;
            d.y = key.second;
            d.point = pts.front().id;
            cancels.push_back(d);
        }
    }
    for (const auto& [key, comps] : cat.moduli1)
    {
        if (!cat.isTerminal(key.first))
            continue;
        std::vector<std::string> zero;
        for (const auto& c : comps)
        {
            if (!c.isCircle())
                continue;
            if (c.framing == 1)
            {
                MoveDescriptor d;
                d.kind = MoveKind::RemoveCircleFr1;
                d.x = key.first;
                d.y = key.second;
                d.components = {c.id};
                fr1s.push_back(d);
            }
            else
            {
                zero.push_back(c.id);
            }
        }
        std::sort(zero.begin(), zero.end());
        for (size_t i = 0; i < zero.size(); ++i)
        {
            for (size_t j = i + 1; j < zero.size(); ++j)
            {
                MoveDescriptor d;
                d.kind = MoveKind::RemoveCircleFr0Pair;
                d.x = key.first;
                d.y = key.second;
                d.components = {zero[i], zero[j]};
                fr0s.push_back(d);
            }
        }
    }
    auto comps = componentObjectSets(cat);
    if (comps.size() > 1)
    {
        for (const auto& ids : comps)
        {
            MoveDescriptor d;
            d.kind = MoveKind::SplitSummand;
            d.objects = ids;
            splits.push_back(d);
        }
    }
    auto byParams = [](const MoveDescriptor& l, const MoveDescriptor& r) {
        return std::tie(l.x, l.y, l.P, l.M, l.point, l.components, l.objects) <
               std::tie(r.x, r.y, r.P, r.M, r.point, r.components, r.objects);
    };
    std::vector<MoveDescriptor> out;
    for (auto* group : {&whitneys, &cancels, &fr1s, &fr0s, &splits})
    {
        std::sort(group->begin(), group->end(), byParams);
        out.insert(out.end(), group->begin(), group->end());
    }
    return out;
}

FlowCategory whitney(const FlowCategory& cat, const std::string& x, const std::string& y,
                     const std::string& P, const std::string& M)
{
    requireObject(cat, x);
    requireObject(cat, y);
    if (cat.degree(x) != cat.degree(y) + 1)
        throw MoveError("whitney needs |" + x + "| = |" + y + "| + 1");
    if (P == M)
        throw MoveError("whitney needs two distinct points");
    if (signOf(cat, x, y, P) != 0)
        throw MoveError("point " + P + " of M(" + x + "," + y + ") is not positive");
    if (signOf(cat, x, y, M) != 1)
        throw MoveError("point " + M + " of M(" + x + "," + y + ") is not negative");

    FlowCategory out = cat;
    auto& xy = out.moduli0[{x, y}];
    xy.erase(std::remove_if(xy.begin(), xy.end(),
                            [&](const SignedPoint& p) { return p.id == P || p.id == M; }),
             xy.end());
    IdMinter minter(cat);

    // a one level above x: identify (P,p) with (M,p) for each p in M(a,x)
    for (const auto& a : cat.objectsOfDegree(cat.degree(x) + 1))
    {
        if (cat.points(a, x).empty())
            continue;
        std::vector<Piece> pieces;
        for (const auto& comp : cat.components(a, y))
        {
            Piece pc;
            pc.circle = comp.isCircle();
            pc.fr = comp.framing;
            pc.keepId = comp.id;
            if (!pc.circle)
            {
                const EndpointRef* ends[2] = {&comp.start, &comp.end};
                for (int s = 0; s < 2; ++s)
                {
                    const EndpointRef& r = *ends[s];
                    if (r.mid == x && (r.lower == P || r.lower == M))
                        pc.ends[s] = gluedEnd(r.upper, r.lower == P ? 1 : 0);
                    else
                        pc.ends[s] = freeEnd(r);
                }
            }
            pieces.push_back(pc);
        }
        out.moduli1[{a, y}] = sew(pieces, minter);
    }

    // b one level below y: identify (q,P) with (q,M), counting positive q
    for (const auto& b : cat.objectsOfDegree(cat.degree(y) - 1))
    {
        if (cat.points(y, b).empty())
            continue;
        std::vector<Piece> pieces;
        for (const auto& comp : cat.components(x, b))
        {
            Piece pc;
            pc.circle = comp.isCircle();
            pc.fr = comp.framing;
            pc.keepId = comp.id;
            if (!pc.circle)
            {
                const EndpointRef* ends[2] = {&comp.start, &comp.end};
                for (int s = 0; s < 2; ++s)
                {
                    const EndpointRef& r = *ends[s];
                    if (r.mid == y && (r.upper == P || r.upper == M))
                    {
                        int w = (r.upper == P && signOf(cat, y, b, r.lower) == 0) ? 1 : 0;
                        pc.ends[s] = gluedEnd(r.lower, w);
                    }
                    else
                    {
                        pc.ends[s] = freeEnd(r);
                    }
                }
            }
            pieces.push_back(pc);
        }
        out.moduli1[{x, b}] = sew(pieces, minter);
    }
    out.normalize();
    return out;
}

FlowCategory cancel(const FlowCategory& cat, const std::string& x, const std::string& y)
{
    requireObject(cat, x);
    requireObject(cat, y);
    const int dx = cat.degree(x);
    const int dy = cat.degree(y);
    if (dx != dy + 1)
        throw MoveError("cancel needs |" + x + "| = |" + y + "| + 1");
    const auto& xy = cat.points(x, y);
    if (xy.size() != 1)
        throw MoveError("M(" + x + "," + y + ") has " + std::to_string(xy.size()) +
                        " points; cancel needs exactly one");
    const int es = xy.front().sign;

    FlowCategory out = cat;
    IdMinter minter(cat);

    // New 0-dimensional points (B,A) in M(a,b), |a| = |x|, |b| = |y|.
    std::map<std::tuple<std::string, std::string, std::string, std::string>, std::string> minted;
    for (const auto& a : cat.objectsOfDegree(dx))
    {
        if (a == x || cat.points(a, y).empty())
            continue;
        for (const auto& b : cat.objectsOfDegree(dy))
        {
            if (b == y || cat.points(x, b).empty())
                continue;
            auto& target = out.moduli0[{a, b}];
            std::set<std::string> taken;
            for (const auto& p : target)
                taken.insert(p.id);
            for (const auto& B : cat.points(x, b))
            {
                for (const auto& A : cat.points(a, y))
                {
                    std::string id = "(" + B.id + ";" + A.id + ")";
                    while (taken.count(id))
                        id += "'";
                    taken.insert(id);
                    SignedPoint np;
                    np.id = id;
                    np.sign = (1 + B.sign + es + A.sign) % 2;
                    np.provenance = std::make_pair(B.id, A.id);
                    target.push_back(np);
                    minted[{a, b, B.id, A.id}] = id;
                }
            }
        }
    }
    auto newId = [&](const std::string& a, const std::string& b, const std::string& B,
                     const std::string& A) {
        return minted.at({a, b, B, A});
    };

    // x between the levels of (a,b): pieces {B} x J, J in M(a,y)
    for (const auto& a : cat.objectsOfDegree(dx + 1))
    {
        for (const auto& b : cat.objectsOfDegree(dy))
        {
            if (b == y || cat.points(x, b).empty())
                continue;
            std::vector<Piece> pieces;
            for (const auto& comp : cat.components(a, b))
            {
                Piece pc;
                pc.circle = comp.isCircle();
                pc.fr = comp.framing;
                pc.keepId = comp.id;
                if (!pc.circle)
                {
                    const EndpointRef* ends[2] = {&comp.start, &comp.end};
                    for (int s = 0; s < 2; ++s)
                    {
                        const EndpointRef& r = *ends[s];
                        pc.ends[s] = r.mid == x ? gluedEnd(glueKey(r.lower, r.upper), 0) : freeEnd(r);
                    }
                }
                pieces.push_back(pc);
            }
            for (const auto& B : cat.points(x, b))
            {
                for (const auto& J : cat.components(a, y))
                {
                    Piece pc;
                    pc.circle = J.isCircle();
                    if (pc.circle)
                    {
                        pc.fr = J.framing;
                        pieces.push_back(pc);
                        continue;
                    }
                    pc.fr = J.framing + 1 + es + B.sign;
                    const EndpointRef* ends[2] = {&J.start, &J.end};
                    for (int s = 0; s < 2; ++s)
                    {
                        const EndpointRef& r = *ends[s];
                        if (r.mid == x)
                            pc.ends[s] = gluedEnd(glueKey(B.id, r.upper), B.sign);
                        else
                            pc.ends[s] = freeEnd({r.mid, newId(r.mid, b, B.id, r.lower), r.upper});
                    }
                    pieces.push_back(pc);
                }
            }
            out.moduli1[{a, b}] = sew(pieces, minter);
        }
    }

    // x on the level of a: pieces J x {A}, J in M(x,b)
    for (const auto& a : cat.objectsOfDegree(dx))
    {
        if (a == x || cat.points(a, y).empty())
            continue;
        for (const auto& b : cat.objectsOfDegree(dy - 1))
        {
            std::vector<Piece> pieces;
            for (const auto& comp : cat.components(a, b))
            {
                Piece pc;
                pc.circle = comp.isCircle();
                pc.fr = comp.framing;
                pc.keepId = comp.id;
                if (!pc.circle)
                {
                    const EndpointRef* ends[2] = {&comp.start, &comp.end};
                    for (int s = 0; s < 2; ++s)
                    {
                        const EndpointRef& r = *ends[s];
                        pc.ends[s] = r.mid == y ? gluedEnd(glueKey(r.lower, r.upper), 0) : freeEnd(r);
                    }
                }
                pieces.push_back(pc);
            }
            for (const auto& J : cat.components(x, b))
            {
                for (const auto& A : cat.points(a, y))
                {
                    Piece pc;
                    pc.circle = J.isCircle();
                    if (pc.circle)
                    {
                        pc.fr = J.framing;
                        pieces.push_back(pc);
                        continue;
                    }
                    pc.fr = J.framing + 1;
                    const EndpointRef* ends[2] = {&J.start, &J.end};
                    for (int s = 0; s < 2; ++s)
                    {
                        const EndpointRef& r = *ends[s];
                        if (r.mid == y)
                        {
                            pc.ends[s] = gluedEnd(glueKey(r.lower, A.id), 0);
                        }
                        else
                        {
                            pc.fr += signOf(cat, r.mid, b, r.lower) + signOf(cat, x, r.mid, r.upper);
                            pc.ends[s] = freeEnd({r.mid, r.lower, newId(a, r.mid, r.upper, A.id)});
                        }
                    }
                    pieces.push_back(pc);
                }
            }
            if (!pieces.empty())
                out.moduli1[{a, b}] = sew(pieces, minter);
        }
    }

    out.objects.erase(std::remove_if(out.objects.begin(), out.objects.end(),
                                     [&](const ObjectEntry& o) { return o.id == x || o.id == y; }),
                      out.objects.end());
    auto touches = [&](const Key& k) {
        return k.first == x || k.first == y || k.second == x || k.second == y;
    };
    std::erase_if(out.moduli0, [&](const auto& kv) { return touches(kv.first); });
    std::erase_if(out.moduli1, [&](const auto& kv) { return touches(kv.first); });
    out.normalize();
    return out;
}

FlowCategory remove_circles(const FlowCategory& cat, const std::string& a, const std::string& b,
                            const std::vector<std::string>& ids)
{
    requireObject(cat, a);
    requireObject(cat, b);
    if (!cat.isTerminal(a))
        throw MoveError(a + " is not terminal: some nonempty moduli space ends at it");
    const auto& comps = cat.components(a, b);
    std::vector<const OneDimComponent*> chosen;
    for (const auto& id : ids)
    {
        auto it = std::find_if(comps.begin(), comps.end(),
                               [&](const OneDimComponent& c) { return c.id == id; });
        if (it == comps.end())
            throw MoveError("no component " + id + " in M(" + a + "," + b + ")");
        if (!it->isCircle())
            throw MoveError("component " + id + " is an interval");
        if (std::find(chosen.begin(), chosen.end(), &*it) != chosen.end())
            throw MoveError("component " + id + " selected twice");
        chosen.push_back(&*it);
    }
    bool single = chosen.size() == 1 && chosen[0]->framing == 1;
    bool pair = chosen.size() == 2 && chosen[0]->framing == 0 && chosen[1]->framing == 0;
    if (!single && !pair)
        throw MoveError("selection must be one framing-1 circle or two framing-0 circles");

    FlowCategory out = cat;
    auto& target = out.moduli1[{a, b}];
    std::set<std::string> drop(ids.begin(), ids.end());
    std::erase_if(target, [&](const OneDimComponent& c) { return drop.count(c.id) > 0; });
    out.normalize();
    return out;
}

FlowCategory apply(const FlowCategory& cat, const MoveDescriptor& m)
{
    switch (m.kind)
    {
        case MoveKind::Whitney: return whitney(cat, m.x, m.y, m.P, m.M);
        case MoveKind::Cancel:
        {
            const auto& pts = cat.points(m.x, m.y);
            if (!m.point.empty() && (pts.size() != 1 || pts.front().id != m.point))
                throw MoveError("M(" + m.x + "," + m.y + ") is not the single point " + m.point);
            return cancel(cat, m.x, m.y);
        }
        case MoveKind::RemoveCircleFr1:
        case MoveKind::RemoveCircleFr0Pair:
            if ((m.kind == MoveKind::RemoveCircleFr1) != (m.components.size() == 1))
                throw MoveError("circle count does not match the removal kind");
            return remove_circles(cat, m.x, m.y, m.components);
        case MoveKind::SplitSummand:
            throw MoveError("split is not a category move; use split or recognize");
    }
    throw MoveError("unknown move kind");
}

}   // namespace ffc
