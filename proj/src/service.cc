// Copyright 2026 The kblink Authors.
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

#include "kblink/service.h"

#include <chrono>

#include "httplib.h"
#include "json.hpp"
#include "kblink/error.h"
#include "kblink/linker.h"
#include "kblink/wire.h"

namespace kblink {

struct LinkService::Server {
  httplib::Server http;
};

LinkService::LinkService(ConfigOverrides file_config,
                         ConfigOverrides cli_config)
    : file_config_(std::move(file_config)),
      cli_config_(std::move(cli_config)),
      server_(std::make_unique<Server>()) {
  server_->http.Post("/link", [this](const httplib::Request &req,
                                     httplib::Response &res) {
    HttpReply reply = HandleLink(req.body);
    res.status = reply.status;
    res.set_content(reply.body, "application/json; charset=utf-8");
  });
  server_->http.Get("/health", [this](const httplib::Request &,
                                      httplib::Response &res) {
    HttpReply reply = HandleHealth();
    res.status = reply.status;
    res.set_content(reply.body, "application/json; charset=utf-8");
  });
}

LinkService::~LinkService() { Stop(); }

void LinkService::SetIndex(std::shared_ptr<const IndexBundle> index) {
  std::lock_guard<std::mutex> lock(mu_);
  index_ = std::move(index);
}

std::shared_ptr<const IndexBundle> LinkService::Index() const {
  std::lock_guard<std::mutex> lock(mu_);
  return index_;
}

bool LinkService::ready() const { return Index() != nullptr; }

HttpReply LinkService::HandleLink(std::string_view body) const {
  std::shared_ptr<const IndexBundle> index = Index();
  if (!index) {
    return {503, ErrorToJson("INDEX_LOADING", "index is still loading")};
  }
  auto started = std::chrono::steady_clock::now();
  try {
    LinkRequest request = ParseLinkRequest(body);
    Linker linker(*index);
    LinkResponse response =
        HandleLinkRequest(linker, request, file_config_, cli_config_);
    response.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started)
            .count();
    return {200, LinkResponseToJson(response)};
  } catch (const CodedError &e) {
    return {400, ErrorToJson(e.code(), e.what())};
  } catch (const std::exception &e) {
    return {500, ErrorToJson("INTERNAL", e.what())};
  }
}

HttpReply LinkService::HandleHealth() const {
  std::shared_ptr<const IndexBundle> index = Index();
  nlohmann::ordered_json out;
  if (!index) {
    out["status"] = "loading";
    out["error"] = {{"code", "INDEX_LOADING"},
                    {"message", "index is still loading"}};
    return {503, out.dump()};
  }
  out["status"] = "ready";
  out["indexVersion"] = index->manifest.index_version;
  out["resourceCount"] = index->graph.num_nodes();
  return {200, out.dump()};
}

int LinkService::Bind(const std::string &host, int port) {
  if (port == 0) return server_->http.bind_to_any_port(host);
  return server_->http.bind_to_port(host, port) ? port : -1;
}

bool LinkService::Run() { return server_->http.listen_after_bind(); }

void LinkService::Stop() {
  if (server_) server_->http.stop();
}

}  // namespace kblink
