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

#include "vgpn/service/http_server.hpp"

#include "vgpn/error.hpp"
#include "vgpn/io/json_io.hpp"

#include <httplib.h>

#include <thread>

namespace vgpn::service
{
namespace
{

using io::Json;

void reply(httplib::Response & res, int status, Json body)
{
  body["schema_version"] = io::kSchemaVersion;
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

int status_of(ErrorCode code)
{
  return code == ErrorCode::UnknownSession ? 404 : 400;
}

void reply_error(httplib::Response & res, int status, std::string_view code, const std::string & message)
{
  reply(res, status, Json{{"error", {{"code", std::string(code)}, {"message", message}}}});
}

// Runs a handler, turning library errors and malformed JSON into error replies.
template<typename F>
httplib::Server::Handler guarded(F f)
{
  return [f](const httplib::Request & req, httplib::Response & res) {
    try {
      f(req, res);
    } catch (const Error & e) {
      reply_error(res, status_of(e.code()), to_string(e.code()), e.message());
    } catch (const nlohmann::json::exception & e) {
      reply_error(res, 400, "BadRequest", e.what());
    } catch (const std::invalid_argument & e) {
      reply_error(res, 400, "BadRequest", e.what());
    } catch (const std::out_of_range & e) {
      reply_error(res, 400, "BadRequest", e.what());
    }
  };
}

std::uint64_t since_param(const httplib::Request & req)
{
  return req.has_param("since") ? std::stoull(req.get_param_value("since")) : 0;
}

Gesture gesture_of(const Json & body)
{
  Gesture g;
  if (body.contains("aim") && !body.at("aim").is_null()) {
    const auto & a = body.at("aim");
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
      throw Error(ErrorCode::InvalidFrame, "aim: expected [x, y]");
    }
    g.aim = Eigen::Vector2d(a[0].get<double>(), a[1].get<double>());
  }
  if (body.contains("frame") && !body.at("frame").is_null()) {
    g.frame = io::frame_from_json(body.at("frame"));
  }
  return g;
}

}  // namespace

struct HttpServer::Impl
{
  explicit Impl(SessionManager & m)
  : manager(m)
  {
    server.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
    });
    server.Options(R"(.*)", [](const httplib::Request &, httplib::Response & res) { res.status = 204; });

    server.Get("/health", [](const httplib::Request &, httplib::Response & res) {
      reply(res, 200, Json{{"status", "ok"}});
    });

    server.Post("/sessions", guarded([this](const httplib::Request & req, httplib::Response & res) {
      const std::string id = manager.create_session(Json::parse(req.body));
      reply(res, 201, Json{{"id", id}});
    }));

    server.Post("/sessions/:id/command", guarded([this](const httplib::Request & req, httplib::Response & res) {
      const Json body = Json::parse(req.body);
      if (!body.is_object() || !body.contains("text") || !body.at("text").is_string()) {
        throw Error(ErrorCode::EmptyInput, "text: expected a string");
      }
      std::optional<pipeline::Mode> mode;
      if (body.contains("mode") && !body.at("mode").is_null()) {
        mode = pipeline::mode_from_string(body.at("mode").get<std::string>());
      }
      const auto result = manager.submit(
        req.path_params.at("id"), body.at("text").get<std::string>(), gesture_of(body), mode);
      reply(
        res, 200,
        Json{
          {"outcome", io::to_json(result.outcome)},
          {"motion_id", result.motion_id ? Json(*result.motion_id) : Json(nullptr)}});
    }));

    server.Get("/sessions/:id/state", guarded([this](const httplib::Request & req, httplib::Response & res) {
      reply(res, 200, to_json(manager.state(req.path_params.at("id"))));
    }));

    server.Get("/sessions/:id/events", guarded([this](const httplib::Request & req, httplib::Response & res) {
      const std::uint64_t since = since_param(req);
      const auto events = manager.events(req.path_params.at("id"), since);
      Json list = Json::array();
      for (const auto & e : events) {
        list.push_back(to_json(e));
      }
      reply(res, 200, Json{{"events", list}, {"next", events.empty() ? since : events.back().seq}});
    }));

    server.Get("/sessions/:id/events/stream", guarded([this](const httplib::Request & req, httplib::Response & res) {
      const std::string id = req.path_params.at("id");
      manager.state(id);  // 404 before the stream starts
      auto cursor = std::make_shared<std::uint64_t>(since_param(req));
      res.set_chunked_content_provider(
        "text/event-stream", [this, id, cursor](std::size_t, httplib::DataSink & sink) {
          std::vector<SessionEvent> events;
          try {
            events = manager.wait_for_events(id, *cursor, std::chrono::milliseconds(500));
          } catch (const Error &) {
            sink.done();
            return true;
          }
          if (events.empty()) {
            const std::string ping = ": keep-alive\n\n";
            return sink.write(ping.data(), ping.size());
          }
          for (const auto & e : events) {
            Json doc = to_json(e);
            doc["schema_version"] = io::kSchemaVersion;
            const std::string chunk =
              "id: " + std::to_string(e.seq) + "\nevent: " + e.kind + "\ndata: " + doc.dump() + "\n\n";
            if (!sink.write(chunk.data(), chunk.size())) {
              return false;
            }
            *cursor = e.seq;
          }
          return true;
        });
    }));

    server.Post("/sessions/:id/step", guarded([this](const httplib::Request & req, httplib::Response & res) {
      if (manager.config().clock != ClockMode::Manual) {
        throw Error(ErrorCode::SpecInvalid, "step is only available with the manual clock");
      }
      const std::size_t ticks = req.has_param("ticks") ? std::stoull(req.get_param_value("ticks")) : 1;
      const std::string id = req.path_params.at("id");
      manager.step(id, ticks);
      reply(res, 200, to_json(manager.state(id)));
    }));

    server.Delete("/sessions/:id", guarded([this](const httplib::Request & req, httplib::Response & res) {
      if (!manager.remove(req.path_params.at("id"))) {
        throw Error(ErrorCode::UnknownSession, "no session '" + req.path_params.at("id") + "'");
      }
      reply(res, 200, Json{{"deleted", true}});
    }));
  }

  SessionManager & manager;
  httplib::Server server;
  std::thread thread;
};

HttpServer::HttpServer(SessionManager & manager)
: impl_(std::make_unique<Impl>(manager))
{
}

HttpServer::~HttpServer()
{
  stop();
}

int HttpServer::start(const std::string & host, int port)
{
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (!impl_->server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    return -1;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

bool HttpServer::listen(const std::string & host, int port)
{
  return impl_->server.listen(host, port);
}

void HttpServer::stop()
{
  impl_->server.stop();
  if (impl_->thread.joinable()) {
    impl_->thread.join();
  }
}

}  // namespace vgpn::service
