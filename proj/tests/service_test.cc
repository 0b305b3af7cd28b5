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

#include <filesystem>
#include <thread>

#include <gtest/gtest.h>

#include "httplib.h"
#include "json.hpp"
#include "kblink/service.h"
#include "test_env.h"

namespace kblink {
namespace {

using json = nlohmann::json;

std::shared_ptr<const IndexBundle> MiniKbShared() {
  return std::shared_ptr<const IndexBundle>(&testing::MiniKb(),
                                            [](const IndexBundle *) {});
}

std::string ActorRequest() {
  std::string line = testing::ReadFile(testing::FixturePath("fig2_doc.jsonl"));
  return line.substr(0, line.find('\n'));
}

// Response body with the wall-clock field zeroed.
std::string WithoutTiming(const std::string &body) {
  json j = json::parse(body);
  j["timingMs"] = 0;
  return j.dump();
}

TEST(LinkServiceTest, UnavailableUntilIndexIsSet) {
  LinkService service({}, {});
  EXPECT_FALSE(service.ready());
  HttpReply link = service.HandleLink(ActorRequest());
  EXPECT_EQ(link.status, 503);
  EXPECT_EQ(json::parse(link.body)["error"]["code"], "INDEX_LOADING");
  HttpReply health = service.HandleHealth();
  EXPECT_EQ(health.status, 503);
  EXPECT_EQ(json::parse(health.body)["status"], "loading");

  service.SetIndex(MiniKbShared());
  EXPECT_TRUE(service.ready());
  EXPECT_EQ(service.HandleLink(ActorRequest()).status, 200);
}

TEST(LinkServiceTest, Health) {
  LinkService service({}, {});
  service.SetIndex(MiniKbShared());
  HttpReply health = service.HandleHealth();
  ASSERT_EQ(health.status, 200);
  json j = json::parse(health.body);
  EXPECT_EQ(j["status"], "ready");
  EXPECT_EQ(j["indexVersion"], testing::MiniKb().manifest.index_version);
  EXPECT_EQ(j["resourceCount"].get<uint64_t>(),
            testing::MiniKb().manifest.counts.resources);
}

TEST(LinkServiceTest, ErrorStatuses) {
  LinkService service({}, {});
  service.SetIndex(MiniKbShared());
  struct Case {
    std::string body;
    std::string code;
  };
  for (const Case &c : std::vector<Case>{
           {R"({"text":"Brad Pitt","mentions":[{"start":5,"end":3}]})",
            "SPAN_INVALID"},
           {"{not json", "BAD_JSON"},
           {R"({"text":"a","language":"fr"})", "LANGUAGE_MISMATCH"},
           {R"({"text":"a","configOverrides":{"depth":-1}})",
            "CONFIG_INVALID"}}) {
    HttpReply reply = service.HandleLink(c.body);
    EXPECT_EQ(reply.status, 400) << c.body;
    EXPECT_EQ(json::parse(reply.body)["error"]["code"], c.code) << c.body;
  }
}

TEST(LinkServiceTest, ServiceFlagsOverrideRequests) {
  LinkService service({{"emergent_namespace", "urn:file:"}},
                      {{"emergent_namespace", "urn:cli:"}});
  service.SetIndex(MiniKbShared());
  HttpReply reply = service.HandleLink(
      R"({"text":"Zzyzx","mentions":[{"start":0,"end":5}],)"
      R"("configOverrides":{"emergentNamespace":"urn:req:"}})");
  EXPECT_EQ(json::parse(reply.body)["assignments"][0]["iri"], "urn:cli:Zzyzx");
}

// Matches the golden output of the command-line `link` path.
TEST(LinkServiceTest, SameAnswerAsCommandLine) {
  LinkService service({}, {});
  service.SetIndex(MiniKbShared());
  HttpReply reply = service.HandleLink(ActorRequest());
  std::string golden =
      testing::ReadFile(testing::FixturePath("fig2_expected.jsonl"));
  golden = golden.substr(0, golden.find('\n'));
  // The golden file was written from a saved index; an in-memory bundle has
  // no content digest yet, so only the assignments are compared.
  EXPECT_EQ(json::parse(reply.body)["assignments"],
            json::parse(golden)["assignments"]);
}

class HttpServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    service_ = std::make_unique<LinkService>(ConfigOverrides{},
                                             ConfigOverrides{});
    port_ = service_->Bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { service_->Run(); });
  }
  void TearDown() override {
    service_->Stop();
    if (thread_.joinable()) thread_.join();
  }
  httplib::Client Client() const {
    httplib::Client client("127.0.0.1", port_);
    client.set_read_timeout(30, 0);
    return client;
  }

  std::unique_ptr<LinkService> service_;
  int port_ = -1;
  std::thread thread_;
};

TEST_F(HttpServiceTest, RoutesOverHttp) {
  httplib::Client client = Client();
  auto health = client.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 503);
  auto early = client.Post("/link", ActorRequest(), "application/json");
  ASSERT_TRUE(early);
  EXPECT_EQ(early->status, 503);

  service_->SetIndex(MiniKbShared());
  health = client.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  auto link = client.Post("/link", ActorRequest(), "application/json");
  ASSERT_TRUE(link);
  EXPECT_EQ(link->status, 200);
  EXPECT_EQ(json::parse(link->body)["assignments"].size(), 3u);
  auto bad = client.Post(
      "/link", R"({"text":"Brad Pitt","mentions":[{"start":5,"end":3}]})",
      "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  EXPECT_EQ(json::parse(bad->body)["error"]["code"], "SPAN_INVALID");
  auto missing = client.Get("/nowhere");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
}

TEST_F(HttpServiceTest, ConcurrentIdenticalRequestsAgree) {
  service_->SetIndex(MiniKbShared());
  constexpr int kThreads = 8;
  constexpr int kRequests = 10;
  std::vector<std::vector<std::string>> bodies(kThreads);
  std::vector<std::thread> workers;
  for (int t = 0; t < kThreads; ++t) {
    workers.emplace_back([&, t] {
      httplib::Client client = Client();
      for (int r = 0; r < kRequests; ++r) {
        auto res = client.Post("/link", ActorRequest(), "application/json");
        bodies[t].push_back(res && res->status == 200 ? WithoutTiming(res->body)
                                                      : "failed");
      }
    });
  }
  for (std::thread &w : workers) w.join();
  std::string first = bodies[0][0];
  EXPECT_NE(first, "failed");
  for (const auto &per_thread : bodies) {
    for (const std::string &body : per_thread) EXPECT_EQ(body, first);
  }
}

std::map<std::string, std::string> Snapshot(const std::filesystem::path &dir) {
  std::map<std::string, std::string> out;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    out[entry.path().filename().string()] =
        testing::ReadFile(entry.path().string());
  }
  return out;
}

TEST(LinkServiceTest, ServingLeavesTheIndexUntouched) {
  testing::TempDir dir;
  IndexBundle built = testing::BundleFromNTriples(
      testing::ReadFile(testing::FixturePath("mini_kb.nt")));
  SaveIndexBundle(built, dir.path().string());
  auto before = Snapshot(dir.path());
  {
    LinkService service({}, {});
    service.SetIndex(std::make_shared<const IndexBundle>(
        LoadIndexBundle(dir.path().string())));
    std::string golden =
        testing::ReadFile(testing::FixturePath("fig2_expected.jsonl"));
    golden = golden.substr(0, golden.find('\n'));
    for (int i = 0; i < 20; ++i) {
      EXPECT_EQ(WithoutTiming(service.HandleLink(ActorRequest()).body),
                WithoutTiming(golden));
    }
    EXPECT_EQ(json::parse(service.HandleHealth().body)["indexVersion"],
              built.manifest.index_version);
  }
  EXPECT_EQ(Snapshot(dir.path()), before);
}

}  // namespace
}  // namespace kblink
