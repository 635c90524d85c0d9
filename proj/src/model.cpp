#include "ffc/model.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ffc {

namespace {

const std::vector<SignedPoint> kNoPoints;
const std::vector<OneDimComponent> kNoComponents;

struct Product
{
    EndpointRef ref;
    int sign;    // ε_lower + ε_upper mod 2
};

// Every composite boundary point of every gap-2 space, keyed by (a,b).
std::map<Key, std::vector<Product> > productPoints(const FlowCategory& cat)
{
    // outgoing 0-dim spaces indexed by source
    std::map<std::string, std::vector<Key> > from;
    for (const auto& [key, pts] : cat.moduli0)
    {
        if (!pts.empty())
            from[key.first].push_back(key);
    }
    std::map<Key, std::vector<Product> > out;
    for (const auto& [upperKey, uppers] : cat.moduli0)
    {
        const std::string& a = upperKey.first;
        const std::string& c = upperKey.second;
        auto it = from.find(c);
        if (it == from.end())
            continue;
        for (const Key& lowerKey : it->second)
        {
            const std::string& b = lowerKey.second;
            const auto& lowers = cat.moduli0.at(lowerKey);
            auto& bucket = out[{a, b}];
            for (const auto& lo : lowers)
                for (const auto& up : uppers)
                    bucket.push_back({{c, lo.id, up.id}, (lo.sign + up.sign) % 2});
        }
    }
    return out;
}

std::string refString(const EndpointRef& r)
{
    return r.lower + "." + r.upper + "@" + r.mid;
}

}   // namespace

const ObjectEntry* FlowCategory::findObject(const std::string& id) const
{
    for (const auto& o : objects)
    {
        if (o.id == id)
            return &o;
    }
    return nullptr;
}

int FlowCategory::degree(const std::string& id) const
{
    const ObjectEntry* o = findObject(id);
    if (!o)
        throw InvalidCategory("unknown object " + id);
    return o->degree;
}

const std::vector<SignedPoint>& FlowCategory::points(const std::string& a, const std::string& b) const
{
    auto it = moduli0.find({a, b});
    return it == moduli0.end() ? kNoPoints : it->second;
}

const std::vector<OneDimComponent>& FlowCategory::components(const std::string& a,
                                                             const std::string& b) const
{
    auto it = moduli1.find({a, b});
    return it == moduli1.end() ? kNoComponents : it->second;
}

const SignedPoint* FlowCategory::findPoint(const std::string& a, const std::string& b,
                                           const std::string& id) const
{
    for (const auto& p : points(a, b))
    {
        if (p.id == id)
            return &p;
    }
    return nullptr;
}

std::vector<std::string> FlowCategory::objectsOfDegree(int deg) const
{
    std::vector<std::string> out;
    for (const auto& o : objects)
    {
        if (o.degree == deg)
            out.push_back(o.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool FlowCategory::isTerminal(const std::string& a) const
{
    for (const auto& [key, pts] : moduli0)
    {
        if (key.second == a && !pts.empty())
            return false;
    }
    for (const auto& [key, comps] : moduli1)
    {
        if (key.second == a && !comps.empty())
            return false;
    }
    return true;
}

void FlowCategory::normalize()
{
    std::sort(objects.begin(), objects.end(),
              [](const ObjectEntry& l, const ObjectEntry& r) { return l.id < r.id; });
    for (auto it = moduli0.begin(); it != moduli0.end();)
    {
        if (it->second.empty())
        {
            it = moduli0.erase(it);
            continue;
        }
        std::sort(it->second.begin(), it->second.end(),
                  [](const SignedPoint& l, const SignedPoint& r) { return l.id < r.id; });
        ++it;
    }
    for (auto it = moduli1.begin(); it != moduli1.end();)
    {
        if (it->second.empty())
        {
            it = moduli1.erase(it);
            continue;
        }
        for (auto& c : it->second)
        {
            if (!c.isCircle() && c.end < c.start)
                std::swap(c.start, c.end);
            if (c.isCircle())
                c.start = c.end = EndpointRef{};
        }
        std::sort(it->second.begin(), it->second.end(),
                  [](const OneDimComponent& l, const OneDimComponent& r) { return l.id < r.id; });
        ++it;
    }
}

namespace {

bool hasPoint(const FlowCategory& cat, const std::string& a, const std::string& b, const std::string& id)
{
    for (const auto& p : cat.points(a, b))
    {
        if (p.id == id)
            return true;
    }
    return false;
}

bool endpointResolves(const FlowCategory& cat, const std::map<std::string, int>& deg, const Key& key,
                      const EndpointRef& r)
{
    auto m = deg.find(r.mid);
    auto a = deg.find(key.first);
    auto b = deg.find(key.second);
    if (m == deg.end() || a == deg.end() || b == deg.end())
        return false;
    if (!(b->second < m->second && m->second < a->second))
        return false;
    return hasPoint(cat, r.mid, key.second, r.lower) && hasPoint(cat, key.first, r.mid, r.upper);
}

}   // namespace

ValidationReport validate(const FlowCategory& cat)
{
    ValidationReport report;
    auto add = [&](std::string rule, Key key, std::string item, std::string msg) {
        report.push_back({std::move(rule), std::move(key), std::move(item), std::move(msg)});
    };

    std::map<std::string, int> deg;
    for (const auto& o : cat.objects)
    {
        if (!deg.emplace(o.id, o.degree).second)
            add("REF", {o.id, o.id}, o.id, "duplicate object id");
    }

    // (V1) degree gaps, plus id uniqueness inside each space
    auto checkKey = [&](const Key& key, int gap) {
        auto a = deg.find(key.first);
        auto b = deg.find(key.second);
        if (a == deg.end() || b == deg.end())
        {
            add("REF", key, "", "moduli space refers to an unknown object");
            return false;
        }
        if (key.first == key.second)
        {
            add("V1", key, "", "self-pair");
            return false;
        }
        if (a->second - b->second != gap)
        {
            add("V1", key, "", "degree gap is " + std::to_string(a->second - b->second) +
                                   ", expected " + std::to_string(gap));
            return false;
        }
        return true;
    };
    for (const auto& [key, pts] : cat.moduli0)
    {
        checkKey(key, 1);
        std::set<std::string> seen;
        for (const auto& p : pts)
        {
            if (!seen.insert(p.id).second)
                add("REF", key, p.id, "duplicate point id");
            if (p.sign != 0 && p.sign != 1)
                add("REF", key, p.id, "sign is not a bit");
        }
    }

    auto products = productPoints(cat);
    std::set<Key> gap2Keys;
    for (const auto& [key, comps] : cat.moduli1)
    {
        if (checkKey(key, 2))
            gap2Keys.insert(key);
        std::set<std::string> seen;
        for (const auto& c : comps)
        {
            if (!seen.insert(c.id).second)
                add("REF", key, c.id, "duplicate component id");
            if (c.framing != 0 && c.framing != 1)
                add("REF", key, c.id, "framing is not a bit");
        }
    }
    for (const auto& [key, prods] : products)
    {
        if (!prods.empty())
            gap2Keys.insert(key);
    }

    for (const Key& key : gap2Keys)
    {
        const auto& comps = cat.components(key.first, key.second);
        std::map<EndpointRef, int> expected;    // product -> sign
        if (auto it = products.find(key); it != products.end())
        {
            for (const auto& pr : it->second)
                expected.emplace(pr.ref, pr.sign);
        }

        // (V4) signed count of the composite boundary must vanish
        int signedCount = 0;
        for (const auto& [ref, s] : expected)
            signedCount += s ? -1 : 1;
        if (signedCount != 0)
            add("V4", key, "", "signed differential composite is " + std::to_string(signedCount));

        // (V2) endpoints are exactly the product points, each once
        std::map<EndpointRef, std::string> used;
        for (const auto& c : comps)
        {
            if (c.isCircle())
                continue;
            int endSign[2] = {-1, -1};
            const EndpointRef* ends[2] = {&c.start, &c.end};
            for (int i = 0; i < 2; ++i)
            {
                if (!endpointResolves(cat, deg, key, *ends[i]))
                {
                    add("REF", key, c.id, "endpoint " + refString(*ends[i]) +
                                              " names a missing object or point");
                    continue;
                }
                auto e = expected.find(*ends[i]);
                if (e == expected.end())
                {
                    add("V2", key, c.id, "endpoint " + refString(*ends[i]) +
                                             " is not a product point");
                    continue;
                }
                endSign[i] = e->second;
                auto [pos, fresh] = used.emplace(*ends[i], c.id);
                if (!fresh)
                    add("V2", key, c.id, "endpoint " + refString(*ends[i]) +
                                             " also used by " + pos->second);
            }
            // (V3) opposite product signs at the two ends
            if (endSign[0] >= 0 && endSign[1] >= 0 && endSign[0] == endSign[1])
                add("V3", key, c.id, "both endpoints have product sign " +
                                         std::string(endSign[0] ? "-" : "+"));
        }
        for (const auto& [ref, s] : expected)
        {
            if (!used.count(ref))
                add("V2", key, "", "product point " + refString(ref) + " is not an endpoint");
        }
    }
    return report;
}

std::string formatViolation(const Violation& v)
{
    std::ostringstream os;
    os << v.rule << " M(" << v.key.first << "," << v.key.second << ")";
    if (!v.item.empty())
        os << " [" << v.item << "]";
    os << ": " << v.message;
    return os.str();
}

void requireValid(const FlowCategory& category)
{
    auto report = validate(category);
    if (report.empty())
        return;
    std::ostringstream os;
    os << "invalid category: " << formatViolation(report.front());
    if (report.size() > 1)
        os << " (and " << report.size() - 1 << " more)";
    throw InvalidCategory(os.str());
}

std::vector<std::vector<std::string> > componentObjectSets(const FlowCategory& cat)
{
    std::map<std::string, std::string> parent;
    for (const auto& o : cat.objects)
        parent[o.id] = o.id;
    std::function<std::string(const std::string&)> root = [&](const std::string& v) {
        std::string r = v;
        while (parent[r] != r)
            r = parent[r];
        parent[v] = r;
        return r;
    };
    auto unite = [&](const std::string& a, const std::string& b) {
        std::string ra = root(a), rb = root(b);
        if (ra != rb)
            parent[std::max(ra, rb)] = std::min(ra, rb);
    };
    for (const auto& [key, pts] : cat.moduli0)
    {
        if (!pts.empty())
            unite(key.first, key.second);
    }
    for (const auto& [key, comps] : cat.moduli1)
    {
        if (!comps.empty())
            unite(key.first, key.second);
    }
    std::map<std::string, std::vector<std::string> > groups;
    for (const auto& o : cat.objects)
        groups[root(o.id)].push_back(o.id);
    std::vector<std::vector<std::string> > out;
    for (auto& [r, ids] : groups)
    {
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FlowCategory subcategory(const FlowCategory& cat, const std::set<std::string>& ids)
{
    FlowCategory out;
    out.name = cat.name;
    for (const auto& o : cat.objects)
    {
        if (ids.count(o.id))
            out.objects.push_back(o);
    }
    for (const auto& [key, pts] : cat.moduli0)
    {
        if (ids.count(key.first) && ids.count(key.second))
            out.moduli0[key] = pts;
    }
    for (const auto& [key, comps] : cat.moduli1)
    {
        if (ids.count(key.first) && ids.count(key.second))
            out.moduli1[key] = comps;
    }
    out.normalize();
    return out;
}

std::vector<FlowCategory> component_split(const FlowCategory& cat)
{
    requireValid(cat);
    std::vector<FlowCategory> out;
    for (const auto& ids : componentObjectSets(cat))
        out.push_back(subcategory(cat, std::set<std::string>(ids.begin(), ids.end())));
    return out;
}

}   // namespace ffc
