#include "ffc/service.hpp"

#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "ffc/algebra.hpp"
#include "ffc/io.hpp"
#include "ffc/moves.hpp"
#include "ffc/recognizer.hpp"

using json = nlohmann::json;

namespace ffc {

struct SessionService::Server
{
    httplib::Server http;
    std::thread worker;
};

namespace {

ApiResponse ok(const json& j, int status = 200)
{
    return {status, j.dump(2) + "\n"};
}

ApiResponse fail(int status, const std::string& code, const std::string& detail)
{
    return {status, json{{"error", code}, {"detail", detail}}.dump() + "\n"};
}

json cohomologyJson(const std::map<int, CohomologyGroup>& groups, Coefficients coeff)
{
    json arr = json::array();
    for (const auto& [deg, g] : groups)
    {
        json t = json::array();
        for (const auto& d : g.torsion)
            t.push_back(d.get_str());
        arr.push_back({{"degree", deg}, {"rank", g.rank}, {"torsion", t},
                       {"text", formatGroup(g, coeff)}});
    }
    return arr;
}

std::vector<std::string> splitPath(const std::string& path)
{
    std::vector<std::string> parts;
    size_t i = 0;
    while (i < path.size())
    {
        size_t j = path.find('/', i);
        if (j == std::string::npos)
            j = path.size();
        if (j > i)
            parts.push_back(path.substr(i, j - i));
        i = j + 1;
    }
    return parts;
}

}   // namespace

SessionService::SessionService() = default;

SessionService::~SessionService()
{
    stop();
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id)
{
    std::shared_lock guard(tableLock_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse SessionService::create(const std::string& body)
{
    FlowCategory cat;
    try
    {
        cat = decodeValid(body);
    }
    catch (const DecodeError& e)
    {
        return fail(422, "invalid_document", e.what());
    }
    catch (const InvalidCategory& e)
    {
        return fail(422, "invalid_document", e.what());
    }
    auto s = std::make_shared<Session>();
    s->trace.initial = digest(cat);
    s->history.push_back(std::move(cat));
    std::string id;
    {
        std::unique_lock guard(tableLock_);
        id = "s" + std::to_string(nextId_++);
        sessions_[id] = s;
    }
    return ok({{"id", id}, {"digest", s->trace.initial}}, 201);
}

ApiResponse SessionService::handle(const std::string& method, const std::string& path,
                                   const std::map<std::string, std::string>& query,
                                   const std::string& body)
{
    auto parts = splitPath(path);
    if (parts.empty() || parts[0] != "sessions")
        return fail(404, "not_found", "no route for " + path);
    if (parts.size() == 1)
    {
        if (method != "POST")
            return fail(404, "not_found", method + " " + path);
        return create(body);
    }
    if (parts.size() > 3)
        return fail(404, "not_found", "no route for " + path);
    auto s = find(parts[1]);
    if (!s)
        return fail(404, "unknown_session", "no session " + parts[1]);
    std::lock_guard guard(s->lock);
    try
    {
        return sessionRequest(*s, method, parts.size() == 3 ? parts[2] : "", query, body);
    }
    catch (const std::exception& e)
    {
        return fail(400, "bad_request", e.what());
    }
}

ApiResponse SessionService::sessionRequest(Session& s, const std::string& method,
                                           const std::string& action,
                                           const std::map<std::string, std::string>& query,
                                           const std::string& body)
{
    const FlowCategory& cur = s.history.back();
    auto route = [&](const char* m, const char* a) { return method == m && action == a; };

    if (route("GET", ""))
        return {200, encode(cur)};

    if (route("GET", "moves"))
    {
        json arr = json::array();
        for (const auto& d : list_moves(cur))
            arr.push_back(json::parse(descriptorToJson(d)));
        return ok(arr);
    }

    if (route("POST", "apply"))
    {
        MoveDescriptor move;
        try
        {
            json j = json::parse(body);
            if (j.is_string())
                move = parseMove(j.get<std::string>(), cur);
            else if (j.is_object() && !j.contains("kind") && j.contains("text"))
                move = parseMove(j.at("text").get<std::string>(), cur);
            else
                move = descriptorFromJson(body);
        }
        catch (const std::exception& e)
        {
            return fail(400, "bad_descriptor", e.what());
        }
        FlowCategory next;
        try
        {
            next = apply(cur, move);
        }
        catch (const MoveError& e)
        {
            return fail(400, "bad_move", e.what());
        }
        catch (const InvalidCategory& e)
        {
            return fail(400, "bad_move", e.what());
        }
        TraceStep step = makeStep(move, next);
        s.history.push_back(std::move(next));
        s.trace.steps.push_back(step);
        return ok({{"category", json::parse(encode(s.history.back()))},
                   {"step", {{"descriptor", json::parse(descriptorToJson(step.move))},
                             {"digest", step.digest}}},
                   {"depth", s.trace.steps.size()}});
    }

    if (route("POST", "undo"))
    {
        if (s.history.size() == 1)
            return fail(400, "nothing_to_undo", "session is at its initial state");
        s.history.pop_back();
        s.trace.steps.pop_back();
        return ok({{"digest", digest(s.history.back())}, {"depth", s.trace.steps.size()}});
    }

    if (route("GET", "homology"))
    {
        Coefficients coeff = Coefficients::Z;
        auto it = query.find("coeff");
        if (it != query.end())
        {
            if (it->second == "Z2")
                coeff = Coefficients::Z2;
            else if (it->second != "Z")
                return fail(400, "bad_request", "coeff must be Z or Z2");
        }
        return ok({{"coeff", coeff == Coefficients::Z ? "Z" : "Z2"},
                   {"groups", cohomologyJson(cohomology(to_complex(cur), coeff), coeff)}});
    }

    if (route("GET", "recognize"))
    {
        auto expr = recognize(cur);
        json j{{"summands", expr.strings()}, {"text", expr.text()},
               {"suspension", expr.suspensionText()}, {"residue", nullptr}};
        if (expr.residue)
        {
            json ids = json::array();
            for (const auto& o : expr.residue->objects)
                ids.push_back(o.id);
            j["residue"] = {{"objects", ids},
                            {"cohomology", cohomologyJson(expr.residueCohomology, Coefficients::Z)}};
        }
        return ok(j);
    }

    if (route("GET", "trace"))
    {
        Trace t = s.trace;
        t.result = recognize(cur).strings();
        return {200, encodeTrace(t)};
    }

    return fail(404, "not_found", method + " /sessions/{id}/" + action);
}

namespace {

void wire(httplib::Server& http, SessionService& svc)
{
    auto dispatch = [&svc](const httplib::Request& req, httplib::Response& res) {
        std::map<std::string, std::string> query;
        for (const auto& [k, v] : req.params)
            query[k] = v;
        ApiResponse r = svc.handle(req.method, req.path, query, req.body);
        res.status = r.status;
        res.set_content(r.body, "application/json");
        res.set_header("Access-Control-Allow-Origin", "*");
    };
    http.Get(R"(/.*)", dispatch);
    http.Post(R"(/.*)", dispatch);
}

}   // namespace

bool SessionService::serve(const std::string& host, int port)
{
    httplib::Server http;
    wire(http, *this);
    return http.listen(host, port);
}

int SessionService::start()
{
    stop();
    server_ = std::make_unique<Server>();
    wire(server_->http, *this);
    int port = server_->http.bind_to_any_port("127.0.0.1");
    if (port < 0)
    {
        server_.reset();
        return -1;
    }
    server_->worker = std::thread([this] { server_->http.listen_after_bind(); });
    server_->http.wait_until_ready();
    return port;
}

void SessionService::stop()
{
    if (!server_)
        return;
    server_->http.stop();
    if (server_->worker.joinable())
        server_->worker.join();
    server_.reset();
}

}   // namespace ffc
