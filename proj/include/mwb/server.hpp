#pragma once

// JSON-over-HTTP front end for SessionStore.
//
//   POST /session               body: origin JSON (see construct)
//   GET  /session/:id
//   POST /session/:id/mutate    body: {"vertex": k}
//   POST /session/:id/undo
//   GET  /session/:id/history
//   GET  /presets
//
// Errors are {"error": message} with 404 (unknown session), 409 (frozen
// vertex, nothing to undo) or 400 (malformed request).

#include <exception>
#include <string>

namespace httplib {
class Server;
}

namespace mwb {

class SessionStore;

/// Status code for an exception raised while serving a request.
int http_status(const std::exception& e);

void install_routes(httplib::Server& server, SessionStore& store);

/// $MWB_PORT when set and valid, else 7373.
int default_port();

}  // namespace mwb
