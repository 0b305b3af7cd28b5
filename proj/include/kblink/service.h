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

#ifndef KBLINK_SERVICE_H_
#define KBLINK_SERVICE_H_

#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "kblink/index_bundle.h"
#include "kblink/linker_config.h"

namespace kblink {

struct HttpReply {
  int status = 200;
  std::string body;
};

// JSON-over-HTTP front end: POST /link and GET /health. Both answer 503
// until an index has been installed with SetIndex().
class LinkService {
 public:
  LinkService(ConfigOverrides file_config, ConfigOverrides cli_config);
  ~LinkService();

  void SetIndex(std::shared_ptr<const IndexBundle> index);
  bool ready() const;

  HttpReply HandleLink(std::string_view body) const;
  HttpReply HandleHealth() const;

  // Binds the listening socket; port 0 picks a free port. Returns the port,
  // or -1 on failure.
  int Bind(const std::string &host, int port);
  // Serves until Stop(). Requires a successful Bind().
  bool Run();
  void Stop();

 private:
  std::shared_ptr<const IndexBundle> Index() const;

  struct Server;
  ConfigOverrides file_config_;
  ConfigOverrides cli_config_;
  mutable std::mutex mu_;
  std::shared_ptr<const IndexBundle> index_;
  std::unique_ptr<Server> server_;
};

}  // namespace kblink

#endif  // KBLINK_SERVICE_H_
