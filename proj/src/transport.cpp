#include "dic/transport.hpp"

#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>

#include "dic/errors.hpp"
#include "dic/server.hpp"

namespace dic {

namespace {

bool write_all(int fd, ByteSpan data) {
  std::size_t off = 0;
  while (off < data.size()) {
    const auto k = ::send(fd, data.data() + off, data.size() - off, MSG_NOSIGNAL);
    if (k < 0 && errno == EINTR) continue;
    if (k <= 0) return false;
    off += static_cast<std::size_t>(k);
  }
  return true;
}

// false on EOF before the first byte; TransportError on a short read after it.
bool read_exact(int fd, std::uint8_t* out, std::size_t len) {
  std::size_t off = 0;
  while (off < len) {
    const auto k = ::recv(fd, out + off, len - off, 0);
    if (k < 0 && errno == EINTR) continue;
    if (k < 0) throw TransportError(std::string("recv: ") + std::strerror(errno));
    if (k == 0) {
      if (off == 0) return false;
      throw TransportError("connection closed mid-frame");
    }
    off += static_cast<std::size_t>(k);
  }
  return true;
}

// Reads one frame; empty optional on clean EOF.
std::optional<Bytes> read_frame(int fd) {
  Bytes frame(wire::kFrameHeader);
  if (!read_exact(fd, frame.data(), frame.size())) return std::nullopt;
  const auto len = wire::frame_payload_length(frame);
  frame.resize(wire::kFrameHeader + len);
  if (!read_exact(fd, frame.data() + wire::kFrameHeader, len)) throw TransportError("connection closed mid-frame");
  return frame;
}

}  // namespace

wire::Envelope InProcTransport::roundtrip(const wire::Envelope& req) {
  const auto reply = server_.handle_frame(wire::frame_encode(req));
  try {
    return wire::frame_decode(reply);
  } catch (const DecodeError& e) {
    throw TransportError(std::string("bad reply: ") + e.what());
  }
}

SocketTransport::SocketTransport(std::string host, std::uint16_t port) : host_(std::move(host)), port_(port) {}

SocketTransport::~SocketTransport() { close(); }

void SocketTransport::close() {
  if (fd_ >= 0) ::close(fd_);
  fd_ = -1;
}

void SocketTransport::connect() {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const auto port = std::to_string(port_);
  if (const int rc = ::getaddrinfo(host_.c_str(), port.c_str(), &hints, &res); rc != 0) {
    throw TransportError("resolve " + host_ + ": " + ::gai_strerror(rc));
  }
  int fd = -1;
  for (auto* a = res; a != nullptr; a = a->ai_next) {
    fd = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, a->ai_addr, a->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) throw TransportError("cannot connect to " + host_ + ":" + port);
  const int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  fd_ = fd;
}

wire::Envelope SocketTransport::roundtrip(const wire::Envelope& req) {
  const auto frame = wire::frame_encode(req);
  if (fd_ < 0) connect();
  if (!write_all(fd_, frame)) {
    close();
    throw TransportError("send failed");
  }
  try {
    auto reply = read_frame(fd_);
    if (!reply) throw TransportError("server closed the connection");
    return wire::frame_decode(*reply);
  } catch (const DecodeError& e) {
    close();
    throw TransportError(std::string("bad reply: ") + e.what());
  } catch (...) {
    close();
    throw;
  }
}

SocketServer::SocketServer(CloudServer& server, const std::string& host, std::uint16_t port) : server_(server) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  hints.ai_flags = AI_PASSIVE;
  addrinfo* res = nullptr;
  const auto p = std::to_string(port);
  if (const int rc = ::getaddrinfo(host.empty() ? nullptr : host.c_str(), p.c_str(), &hints, &res); rc != 0) {
    throw TransportError("resolve " + host + ": " + ::gai_strerror(rc));
  }
  for (auto* a = res; a != nullptr; a = a->ai_next) {
    const int fd = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
    if (fd < 0) continue;
    const int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(fd, a->ai_addr, a->ai_addrlen) == 0 && ::listen(fd, 64) == 0) {
      listen_fd_ = fd;
      break;
    }
    ::close(fd);
  }
  ::freeaddrinfo(res);
  if (listen_fd_ < 0) throw TransportError("cannot listen on " + host + ":" + p);

  sockaddr_storage addr{};
  socklen_t len = sizeof addr;
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  if (addr.ss_family == AF_INET) {
    port_ = ntohs(reinterpret_cast<sockaddr_in*>(&addr)->sin_port);
  } else {
    port_ = ntohs(reinterpret_cast<sockaddr_in6*>(&addr)->sin6_port);
  }
}

SocketServer::~SocketServer() { stop(); }

void SocketServer::run() {
  for (;;) {
    const int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) {
      if (errno == EINTR) continue;
      return;  // listener shut down
    }
    std::lock_guard g(mu_);
    if (stopping_) {
      ::close(fd);
      return;
    }
    conns_.push_back(fd);
    workers_.emplace_back([this, fd] { serve_connection(fd); });
  }
}

void SocketServer::start() { acceptor_ = std::thread([this] { run(); }); }

void SocketServer::serve_connection(int fd) {
  try {
    while (auto frame = read_frame(fd)) {
      if (!write_all(fd, server_.handle_frame(*frame))) break;
    }
  } catch (const DecodeError& e) {
    write_all(fd, wire::frame_encode(wire::make_error(SchemeId::mht, e.what())));
  } catch (const std::exception&) {
  }
  ::shutdown(fd, SHUT_RDWR);
}

void SocketServer::stop() {
  {
    std::lock_guard g(mu_);
    if (stopping_) return;
    stopping_ = true;
    if (listen_fd_ >= 0) ::shutdown(listen_fd_, SHUT_RDWR);
    for (const int fd : conns_) ::shutdown(fd, SHUT_RDWR);
  }
  if (acceptor_.joinable()) acceptor_.join();
  for (auto& t : workers_) t.join();
  for (const int fd : conns_) ::close(fd);
  if (listen_fd_ >= 0) ::close(listen_fd_);
  listen_fd_ = -1;
}

Endpoint Endpoint::parse(std::string_view s) {
  if (s == "inproc") return {};
  const auto colon = s.rfind(':');
  if (colon == std::string_view::npos || colon == 0) throw ArgumentError("endpoint must be inproc or host:port");
  const auto port_str = s.substr(colon + 1);
  unsigned port = 0;
  const auto [end, ec] = std::from_chars(port_str.data(), port_str.data() + port_str.size(), port);
  if (ec != std::errc() || end != port_str.data() + port_str.size() || port == 0 || port > 65535) {
    throw ArgumentError("endpoint port must be in 1..65535");
  }
  return {false, std::string(s.substr(0, colon)), static_cast<std::uint16_t>(port)};
}

std::string Endpoint::str() const { return inproc ? "inproc" : host + ":" + std::to_string(port); }

}  // namespace dic
