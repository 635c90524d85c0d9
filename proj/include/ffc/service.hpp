/**
 * In-memory move-explorer sessions behind a small JSON HTTP API.
 *
 *   POST /sessions                      body: .ffc document
 *   GET  /sessions/{id}                 current category (canonical encoding)
 *   GET  /sessions/{id}/moves           descriptor list
 *   POST /sessions/{id}/apply           body: descriptor object or text form
 *   POST /sessions/{id}/undo
 *   GET  /sessions/{id}/homology?coeff=Z|Z2
 *   GET  /sessions/{id}/recognize
 *   GET  /sessions/{id}/trace
 *
 * Errors are {"error": code, "detail": text} with status 400, 404 or 422.
 */
#ifndef FFC_SERVICE_HPP
#define FFC_SERVICE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ffc/model.hpp"
#include "ffc/strategy.hpp"

namespace ffc {

struct ApiResponse
{
    int status = 200;
    std::string body;    // JSON
};

class SessionService
{
    public:
        /**
         * Dispatch one request. path excludes the query string; query holds
         * decoded parameters. Safe to call from many threads.
         */
        ApiResponse handle(const std::string& method, const std::string& path,
                           const std::map<std::string, std::string>& query,
                           const std::string& body);

        /** Blocking HTTP server on host:port. Returns false if binding fails. */
        bool serve(const std::string& host, int port);

        /**
         * Start listening on an ephemeral loopback port in a background
         * thread and return the port; stop() shuts it down.
         */
        int start();
        void stop();

        SessionService();
        ~SessionService();

    private:
        struct Session
        {
            std::mutex lock;
            std::vector<FlowCategory> history;
            Trace trace;
        };

        std::shared_ptr<Session> find(const std::string& id);
        ApiResponse create(const std::string& body);
        ApiResponse sessionRequest(Session& s, const std::string& method, const std::string& action,
                                   const std::map<std::string, std::string>& query,
                                   const std::string& body);

        std::shared_mutex tableLock_;
        std::map<std::string, std::shared_ptr<Session> > sessions_;
        long nextId_ = 1;

        struct Server;
        std::unique_ptr<Server> server_;
};

}   // namespace ffc

#endif
