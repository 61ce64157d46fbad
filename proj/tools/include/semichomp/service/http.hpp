#pragma once

#include <string>

#include "semichomp/service/session.hpp"

namespace httplib {
class Server;
}

namespace semichomp::service {

// Registers the game endpoints:
//   POST   /game              {generators, engineSide, firstMove?}
//   GET    /game/{id}
//   POST   /game/{id}/move    {element}
//   DELETE /game/{id}
//   GET    /classify?gens=...
void register_routes(httplib::Server& server, SessionManager& sessions);

// Blocks until the server stops. Returns false when the port cannot be bound.
bool serve(const std::string& host, int port, SessionManager& sessions);

}  // namespace semichomp::service
