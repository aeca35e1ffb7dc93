// Copyright 2026 The VGPN Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VGPN__SERVICE__HTTP_SERVER_HPP_
#define VGPN__SERVICE__HTTP_SERVER_HPP_

#include "vgpn/service/session_manager.hpp"

#include <memory>
#include <string>

namespace vgpn::service
{

/// JSON-over-HTTP front end of a SessionManager.
///
///   POST   /sessions                       scene document -> {"id"}
///   POST   /sessions/{id}/command          {"text", "aim"?, "frame"?, "mode"?} -> {"outcome", "motion_id"}
///   GET    /sessions/{id}/state
///   GET    /sessions/{id}/events?since=N   -> {"events", "next"}
///   GET    /sessions/{id}/events/stream?since=N   server-sent events
///   POST   /sessions/{id}/step?ticks=N     manual clock only
///   DELETE /sessions/{id}
///
/// Every response body carries `schema_version`. Errors are
/// `{"error": {"code", "message"}}` with 400 for bad input and 404 for
/// unknown sessions.
class HttpServer
{
public:
  explicit HttpServer(SessionManager & manager);
  ~HttpServer();
  HttpServer(const HttpServer &) = delete;
  HttpServer & operator=(const HttpServer &) = delete;

  /// Binds and serves on a background thread. Port 0 picks a free port.
  /// Returns the bound port, or -1 if binding failed.
  int start(const std::string & host, int port);

  /// Binds and serves on the calling thread until stop().
  bool listen(const std::string & host, int port);

  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vgpn::service

#endif  // VGPN__SERVICE__HTTP_SERVER_HPP_
