#include "ffc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ffc/strategy.hpp"

namespace ffc {

using nlohmann::json;

namespace {

DecodeError schemaError(const std::string& path, const std::string& what)
{
    return DecodeError(DecodeError::Kind::Schema, "schema error at " + (path.empty() ? "/" : path) +
                                                      ": " + what);
}

void allowOnly(const json& j, const std::string& path, std::initializer_list<const char*> required,
               std::initializer_list<const char*> optional)
{
    if (!j.is_object())
        throw schemaError(path, "expected an object");
    std::set<std::string> known;
    for (const char* k : required)
    {
        known.insert(k);
        if (!j.contains(k))
            throw schemaError(path, std::string("missing field \"") + k + "\"");
    }
    for (const char* k : optional)
        known.insert(k);
    for (const auto& [k, v] : j.items())
    {
        if (!known.count(k))
            throw schemaError(path + "/" + k, "unknown field \"" + k + "\"");
    }
}

std::string getString(const json& j, const std::string& key, const std::string& path)
{
    const json& v = j.at(key);
    if (!v.is_string())
        throw schemaError(path + "/" + key, "expected a string");
    return v.get<std::string>();
}

int getInt(const json& j, const std::string& key, const std::string& path)
{
    const json& v = j.at(key);
    if (!v.is_number_integer())
        throw schemaError(path + "/" + key, "expected an integer");
    auto n = v.get<long long>();
    if (n < -1000000 || n > 1000000)
        throw schemaError(path + "/" + key, "integer out of range");
    return static_cast<int>(n);
}

int getBit(const json& j, const std::string& key, const std::string& path)
{
    const json& v = j.at(key);
    if (!v.is_number_integer() || (v.get<long long>() != 0 && v.get<long long>() != 1))
        throw schemaError(path + "/" + key, "expected 0 or 1");
    return v.get<int>();
}

const json& getArray(const json& j, const std::string& key, const std::string& path)
{
    const json& v = j.at(key);
    if (!v.is_array())
        throw schemaError(path + "/" + key, "expected an array");
    return v;
}

void checkToken(const std::string& id, const std::string& path, bool objectId)
{
    if (id.empty())
        throw schemaError(path, "empty id");
    for (char ch : id)
    {
        bool bad = ch == ',' || static_cast<unsigned char>(ch) <= ' ' || (objectId && ch == ':');
        if (bad)
            throw schemaError(path, "id \"" + id + "\" contains a reserved character");
    }
}

EndpointRef decodeRef(const json& j, const std::string& path)
{
    allowOnly(j, path, {"mid", "lower", "upper"}, {});
    return {getString(j, "mid", path), getString(j, "lower", path), getString(j, "upper", path)};
}

json encodeRef(const EndpointRef& r)
{
    return json{{"mid", r.mid}, {"lower", r.lower}, {"upper", r.upper}};
}

std::pair<size_t, size_t> lineColumn(const std::string& text, size_t byte)
{
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            col = 1;
        }
        else
        {
            ++col;
        }
    }
    return {line, col};
}

json parseJson(const std::string& text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        auto [line, col] = lineColumn(text, e.byte);
        std::string msg = e.what();
        auto p = msg.find("parse error");
        throw DecodeError(DecodeError::Kind::Syntax,
                          "syntax error at line " + std::to_string(line) + ", column " +
                              std::to_string(col) + ": " + (p == std::string::npos ? msg : msg.substr(p)));
    }
}

}   // namespace

FlowCategory decode(const std::string& text)
{
    json doc = parseJson(text);
    allowOnly(doc, "", {"name", "objects", "moduli0", "moduli1"}, {});

    FlowCategory cat;
    if (!doc["name"].is_string())
        throw schemaError("/name", "expected a string");
    cat.name = doc["name"].get<std::string>();

    std::set<std::string> ids;
    std::optional<int> quantum;
    const json& objs = getArray(doc, "objects", "");
    for (size_t i = 0; i < objs.size(); ++i)
    {
        std::string path = "/objects/" + std::to_string(i);
        allowOnly(objs[i], path, {"id", "degree"}, {"quantum", "label"});
        ObjectEntry o;
        o.id = getString(objs[i], "id", path);
        checkToken(o.id, path + "/id", true);
        o.degree = getInt(objs[i], "degree", path);
        if (objs[i].contains("quantum"))
        {
            o.quantum = getInt(objs[i], "quantum", path);
            if (quantum && *quantum != *o.quantum)
                throw schemaError(path + "/quantum", "quantum degree differs from other objects");
            quantum = o.quantum;
        }
        if (objs[i].contains("label"))
            o.label = getString(objs[i], "label", path);
        if (!ids.insert(o.id).second)
            throw schemaError(path + "/id", "duplicate object id \"" + o.id + "\"");
        cat.objects.push_back(o);
    }

    auto readKey = [&](const json& entry, const std::string& path) {
        Key key{getString(entry, "from", path), getString(entry, "to", path)};
        if (!ids.count(key.first))
            throw schemaError(path + "/from", "unknown object \"" + key.first + "\"");
        if (!ids.count(key.second))
            throw schemaError(path + "/to", "unknown object \"" + key.second + "\"");
        return key;
    };

    const json& m0 = getArray(doc, "moduli0", "");
    for (size_t i = 0; i < m0.size(); ++i)
    {
        std::string path = "/moduli0/" + std::to_string(i);
        allowOnly(m0[i], path, {"from", "to", "points"}, {});
        Key key = readKey(m0[i], path);
        if (cat.moduli0.count(key))
            throw schemaError(path, "duplicate moduli0 entry for (" + key.first + "," + key.second + ")");
        auto& pts = cat.moduli0[key];
        std::set<std::string> seen;
        const json& arr = getArray(m0[i], "points", path);
        for (size_t k = 0; k < arr.size(); ++k)
        {
            std::string pp = path + "/points/" + std::to_string(k);
            allowOnly(arr[k], pp, {"id", "sign"}, {"provenance"});
            SignedPoint p;
            p.id = getString(arr[k], "id", pp);
            checkToken(p.id, pp + "/id", false);
            std::string s = getString(arr[k], "sign", pp);
            if (s != "+" && s != "-")
                throw schemaError(pp + "/sign", "expected \"+\" or \"-\"");
            p.sign = s == "+" ? 0 : 1;
            if (arr[k].contains("provenance"))
            {
                const json& pv = arr[k]["provenance"];
                if (!pv.is_array() || pv.size() != 2 || !pv[0].is_string() || !pv[1].is_string())
                    throw schemaError(pp + "/provenance", "expected two point ids");
                p.provenance = std::make_pair(pv[0].get<std::string>(), pv[1].get<std::string>());
            }
            if (!seen.insert(p.id).second)
                throw schemaError(pp + "/id", "duplicate point id \"" + p.id + "\"");
            pts.push_back(p);
        }
    }

    const json& m1 = getArray(doc, "moduli1", "");
    for (size_t i = 0; i < m1.size(); ++i)
    {
        std::string path = "/moduli1/" + std::to_string(i);
        allowOnly(m1[i], path, {"from", "to", "components"}, {});
        Key key = readKey(m1[i], path);
        if (cat.moduli1.count(key))
            throw schemaError(path, "duplicate moduli1 entry for (" + key.first + "," + key.second + ")");
        auto& comps = cat.moduli1[key];
        std::set<std::string> seen;
        const json& arr = getArray(m1[i], "components", path);
        for (size_t k = 0; k < arr.size(); ++k)
        {
            std::string cp = path + "/components/" + std::to_string(k);
            if (!arr[k].is_object() || !arr[k].contains("kind"))
                throw schemaError(cp, "expected an object with a \"kind\"");
            std::string kind = getString(arr[k], "kind", cp);
            OneDimComponent c;
            if (kind == "interval")
            {
                allowOnly(arr[k], cp, {"kind", "framing", "start", "end", "id"}, {});
                c.kind = ComponentKind::Interval;
                c.start = decodeRef(arr[k]["start"], cp + "/start");
                c.end = decodeRef(arr[k]["end"], cp + "/end");
            }
            else if (kind == "circle")
            {
                allowOnly(arr[k], cp, {"kind", "framing", "id"}, {});
                c.kind = ComponentKind::Circle;
            }
            else
            {
                throw schemaError(cp + "/kind", "expected \"interval\" or \"circle\"");
            }
            c.framing = getBit(arr[k], "framing", cp);
            c.id = getString(arr[k], "id", cp);
            checkToken(c.id, cp + "/id", false);
            if (!seen.insert(c.id).second)
                throw schemaError(cp + "/id", "duplicate component id \"" + c.id + "\"");
            comps.push_back(c);
        }
    }
    cat.normalize();
    return cat;
}

FlowCategory decodeValid(const std::string& text)
{
    FlowCategory cat = decode(text);
    auto report = validate(cat);
    if (!report.empty())
        throw DecodeError(DecodeError::Kind::Semantic, "semantic error: " + formatViolation(report.front()));
    return cat;
}

std::string encode(const FlowCategory& input)
{
    FlowCategory cat = input;
    cat.normalize();
    json doc;
    doc["name"] = cat.name;
    doc["objects"] = json::array();
    for (const auto& o : cat.objects)
    {
        json j{{"id", o.id}, {"degree", o.degree}};
        if (o.quantum)
            j["quantum"] = *o.quantum;
        if (o.label)
            j["label"] = *o.label;
        doc["objects"].push_back(j);
    }
    doc["moduli0"] = json::array();
    for (const auto& [key, pts] : cat.moduli0)
    {
        json arr = json::array();
        for (const auto& p : pts)
        {
            json j{{"id", p.id}, {"sign", p.sign ? "-" : "+"}};
            if (p.provenance)
                j["provenance"] = json::array({p.provenance->first, p.provenance->second});
            arr.push_back(j);
        }
        doc["moduli0"].push_back(json{{"from", key.first}, {"to", key.second}, {"points", arr}});
    }
    doc["moduli1"] = json::array();
    for (const auto& [key, comps] : cat.moduli1)
    {
        json arr = json::array();
        for (const auto& c : comps)
        {
            json j{{"id", c.id}, {"framing", c.framing}};
            if (c.isCircle())
            {
                j["kind"] = "circle";
            }
            else
            {
                j["kind"] = "interval";
                j["start"] = encodeRef(c.start);
                j["end"] = encodeRef(c.end);
            }
            arr.push_back(j);
        }
        doc["moduli1"].push_back(json{{"from", key.first}, {"to", key.second}, {"components", arr}});
    }
    return doc.dump(2) + "\n";
}

std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeFile(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

namespace {

json descriptorJson(const MoveDescriptor& d)
{
    json j{{"kind", moveKindName(d.kind)}, {"text", d.text()}};
    switch (d.kind)
    {
        case MoveKind::Whitney:
            j["x"] = d.x;
            j["y"] = d.y;
            j["P"] = d.P;
            j["M"] = d.M;
            break;
        case MoveKind::Cancel:
            j["x"] = d.x;
            j["y"] = d.y;
            j["point"] = d.point;
            break;
        case MoveKind::RemoveCircleFr1:
        case MoveKind::RemoveCircleFr0Pair:
            j["a"] = d.x;
            j["b"] = d.y;
            j["components"] = d.components;
            break;
        case MoveKind::SplitSummand:
            j["objects"] = d.objects;
            break;
    }
    return j;
}

}   // namespace

std::string descriptorToJson(const MoveDescriptor& d)
{
    return descriptorJson(d).dump();
}

MoveDescriptor descriptorFromJson(const std::string& text)
{
    json j = parseJson(text);
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw schemaError("", "descriptor needs a \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    MoveDescriptor d;
    auto str = [&](const char* k) { return getString(j, k, ""); };
    auto list = [&](const char* k) {
        const json& arr = getArray(j, k, "");
        std::vector<std::string> out;
        for (size_t i = 0; i < arr.size(); ++i)
        {
            if (!arr[i].is_string())
                throw schemaError(std::string("/") + k + "/" + std::to_string(i), "expected a string");
            out.push_back(arr[i].get<std::string>());
        }
        return out;
    };
    if (kind == "whitney")
    {
        allowOnly(j, "", {"kind", "x", "y", "P", "M"}, {"text"});
        d.kind = MoveKind::Whitney;
        d.x = str("x");
        d.y = str("y");
        d.P = str("P");
        d.M = str("M");
    }
    else if (kind == "cancel")
    {
        allowOnly(j, "", {"kind", "x", "y"}, {"point", "text"});
        d.kind = MoveKind::Cancel;
        d.x = str("x");
        d.y = str("y");
        if (j.contains("point"))
            d.point = str("point");
    }
    else if (kind == "remove_circle_fr1" || kind == "remove_circle_fr0_pair")
    {
        allowOnly(j, "", {"kind", "a", "b", "components"}, {"text"});
        d.kind = kind == "remove_circle_fr1" ? MoveKind::RemoveCircleFr1 : MoveKind::RemoveCircleFr0Pair;
        d.x = str("a");
        d.y = str("b");
        d.components = list("components");
    }
    else if (kind == "split_summand")
    {
        allowOnly(j, "", {"kind", "objects"}, {"text"});
        d.kind = MoveKind::SplitSummand;
        d.objects = list("objects");
    }
    else
    {
        throw schemaError("/kind", "unknown move kind \"" + kind + "\"");
    }
    return d;
}

std::string encodeTrace(const Trace& trace)
{
    json doc;
    doc["initial"] = trace.initial;
    doc["moves"] = json::array();
    for (const auto& step : trace.steps)
        doc["moves"].push_back(json{{"descriptor", descriptorJson(step.move)}, {"digest", step.digest}});
    doc["result"] = trace.result;
    return doc.dump(2) + "\n";
}

Trace decodeTrace(const std::string& text)
{
    json doc = parseJson(text);
    allowOnly(doc, "", {"initial", "moves", "result"}, {});
    Trace t;
    t.initial = getString(doc, "initial", "");
    const json& moves = getArray(doc, "moves", "");
    for (size_t i = 0; i < moves.size(); ++i)
    {
        std::string path = "/moves/" + std::to_string(i);
        allowOnly(moves[i], path, {"descriptor", "digest"}, {});
        TraceStep s;
        try
        {
            s.move = descriptorFromJson(moves[i]["descriptor"].dump());
        }
        catch (const DecodeError& e)
        {
            throw schemaError(path + "/descriptor", e.what());
        }
        s.digest = getString(moves[i], "digest", path);
        t.steps.push_back(s);
    }
    const json& res = getArray(doc, "result", "");
    for (size_t i = 0; i < res.size(); ++i)
    {
        if (!res[i].is_string())
            throw schemaError("/result/" + std::to_string(i), "expected a string");
        t.result.push_back(res[i].get<std::string>());
    }
    return t;
}

}   // namespace ffc
