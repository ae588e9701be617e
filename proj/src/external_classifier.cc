// Copyright 2026 The punctseg Authors. All Rights Reserved.
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

#include "punctseg/external_classifier.h"

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstring>

#include <poll.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include "punctseg/error.h"

namespace punctseg {
namespace {

long long now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

int remaining_ms(long long deadline_ms) {
  const long long left = deadline_ms - now_ms();
  if (left <= 0) return 0;
  return left > 1'000'000'000 ? 1'000'000'000 : static_cast<int>(left);
}

}  // namespace

std::string format_protocol_request(WordSpan window) {
  std::string line;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const std::string& w = window[i];
    if (w.empty() || w.find_first_of(" \t\r\n") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "word " + std::to_string(i) +
                      " cannot be sent over the line protocol: '" + w + "'");
    }
    if (i > 0) line.push_back(' ');
    line += w;
  }
  line.push_back('\n');
  return line;
}

std::vector<PunctLabel> parse_protocol_response(std::string_view line,
                                                std::size_t expected) {
  if (line.ends_with('\r')) line.remove_suffix(1);
  std::vector<PunctLabel> labels;
  std::size_t pos = 0;
  while (!line.empty() && pos <= line.size()) {
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view field = line.substr(pos, end - pos);
    auto label = label_from_string(field);
    if (!label) {
      throw Error(ErrorCode::kProtocolBadLabel,
                  "response field " + std::to_string(labels.size()) + " is '" +
                      std::string(field) + "'");
    }
    labels.push_back(*label);
    pos = end + 1;
  }
  if (labels.size() != expected) {
    throw Error(ErrorCode::kProtocolLengthMismatch,
                "got " + std::to_string(labels.size()) + " labels for " +
                    std::to_string(expected) + " words");
  }
  return labels;
}

ExternalClassifier::ExternalClassifier(ExternalAdapterConfig config)
    : config_(std::move(config)) {
  if (!(config_.timeout_seconds > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "timeout must be positive");
  }
  if (config_.command.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "external command is empty");
  }
  if (config_.max_window_words == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max window words must be positive");
  }
}

ExternalClassifier::~ExternalClassifier() { stop(); }

int ExternalClassifier::restarts_used() const {
  std::lock_guard<std::mutex> lock(mu_);
  return restarts_;
}

void ExternalClassifier::start() const {
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw Error(ErrorCode::kIo, std::string("socketpair: ") + std::strerror(errno));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    throw Error(ErrorCode::kIo, std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    // dup2 clears close-on-exec on the new descriptors.
    ::dup2(fds[1], STDIN_FILENO);
    ::dup2(fds[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", config_.command.c_str(),
            static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(fds[1]);
  fd_ = fds[0];
  pid_ = pid;
  ever_started_ = true;
  rx_.clear();
}

void ExternalClassifier::stop() const {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
  if (pid_ > 0) {
    ::kill(pid_, SIGKILL);
    int status = 0;
    while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
    pid_ = -1;
  }
  rx_.clear();
}

void ExternalClassifier::send_all(const std::string& data,
                                  long long deadline_ms) const {
  std::size_t sent = 0;
  while (sent < data.size()) {
    pollfd p{fd_, POLLOUT, 0};
    const int ready = ::poll(&p, 1, remaining_ms(deadline_ms));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kIo, std::string("poll: ") + std::strerror(errno));
    }
    if (ready == 0) throw Error(ErrorCode::kTimeout, "child did not accept the request");
    if (p.revents & (POLLERR | POLLHUP)) throw ChildGone{};
    const ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent,
                             MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      if (errno == EPIPE || errno == ECONNRESET) throw ChildGone{};
      throw Error(ErrorCode::kIo, std::string("send: ") + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
}

std::string ExternalClassifier::read_line(long long deadline_ms) const {
  for (;;) {
    const std::size_t nl = rx_.find('\n');
    if (nl != std::string::npos) {
      std::string line = rx_.substr(0, nl);
      rx_.erase(0, nl + 1);
      return line;
    }
    pollfd p{fd_, POLLIN, 0};
    const int ready = ::poll(&p, 1, remaining_ms(deadline_ms));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kIo, std::string("poll: ") + std::strerror(errno));
    }
    if (ready == 0) {
      throw Error(ErrorCode::kTimeout,
                  "no response within " + std::to_string(config_.timeout_seconds) + " s");
    }
    char buf[4096];
    const ssize_t n = ::recv(fd_, buf, sizeof buf, 0);
    if (n == 0) throw ChildGone{};
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      if (errno == ECONNRESET) throw ChildGone{};
      throw Error(ErrorCode::kIo, std::string("recv: ") + std::strerror(errno));
    }
    rx_.append(buf, static_cast<std::size_t>(n));
  }
}

std::vector<PunctLabel> ExternalClassifier::classify(WordSpan window) const {
  if (window.empty()) {
    throw Error(ErrorCode::kEmptyWindow, "cannot classify an empty window");
  }
  const std::string request = format_protocol_request(window);
  std::lock_guard<std::mutex> lock(mu_);
  for (;;) {
    if (fd_ < 0) {
      if (ever_started_) {
        if (restarts_ >= config_.max_restarts) {
          throw Error(ErrorCode::kProcessDied,
                      "classifier process died; restart budget of " +
                          std::to_string(config_.max_restarts) + " exhausted");
        }
        ++restarts_;
      }
      start();
    }
    const long long deadline =
        now_ms() + static_cast<long long>(config_.timeout_seconds * 1000.0);
    try {
      send_all(request, deadline);
      const std::string line = read_line(deadline);
      return parse_protocol_response(line, window.size());
    } catch (const ChildGone&) {
      stop();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kTimeout) stop();
      throw;
    }
  }
}

}  // namespace punctseg
