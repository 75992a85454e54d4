// Copyright 2026 The erag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ERAG_TESTS_TESTING_CHAT_STUB_HPP_
#define ERAG_TESTS_TESTING_CHAT_STUB_HPP_

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"

namespace erag::testing {

// Local chat-completions server. The handler sees the parsed request body
// and the 1-based attempt number for that exact body, and returns the HTTP
// status plus response body.
class ChatStub {
 public:
  struct Reply {
    int status = 200;
    std::string body;
  };
  using Handler = std::function<Reply(const nlohmann::json&, int attempt)>;

  explicit ChatStub(Handler handler) : handler_(std::move(handler)) {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   int attempt = 0;
                   {
                     std::lock_guard lock(mu_);
                     attempt = ++attempts_[req.body];
                     bodies_.push_back(req.body);
                     auth_.push_back(req.get_header_value("Authorization"));
                   }
                   const Reply reply =
                       handler_(nlohmann::json::parse(req.body), attempt);
                   res.status = reply.status;
                   res.set_content(reply.body, "application/json");
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~ChatStub() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  // Attempts seen per distinct request body.
  std::map<std::string, int> attempts() const {
    std::lock_guard lock(mu_);
    return attempts_;
  }
  std::vector<std::string> bodies() const {
    std::lock_guard lock(mu_);
    return bodies_;
  }
  std::vector<std::string> auth_headers() const {
    std::lock_guard lock(mu_);
    return auth_;
  }

  static Reply Completion(const std::string& text, int prompt_tokens = 0,
                          int completion_tokens = 0, bool usage = true) {
    nlohmann::json body = {
        {"id", "chatcmpl-stub"},
        {"object", "chat.completion"},
        {"choices",
         {{{"index", 0},
           {"message", {{"role", "assistant"}, {"content", text}}},
           {"finish_reason", "stop"}}}}};
    if (usage) {
      body["usage"] = {{"prompt_tokens", prompt_tokens},
                       {"completion_tokens", completion_tokens},
                       {"total_tokens", prompt_tokens + completion_tokens}};
    }
    return {200, body.dump()};
  }

  static Reply Failure(int status, const std::string& message) {
    return {status, nlohmann::json{{"error", {{"message", message}}}}.dump()};
  }

 private:
  Handler handler_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  mutable std::mutex mu_;
  std::map<std::string, int> attempts_;
  std::vector<std::string> bodies_;
  std::vector<std::string> auth_;
};

}  // namespace erag::testing

#endif  // ERAG_TESTS_TESTING_CHAT_STUB_HPP_
