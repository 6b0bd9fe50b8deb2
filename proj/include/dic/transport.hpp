#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dic/envelope.hpp"

namespace dic {

class CloudServer;

class Transport {
 public:
  virtual ~Transport() = default;
  /// TransportError when the peer cannot be reached or the reply is not a frame.
  virtual wire::Envelope roundtrip(const wire::Envelope& req) = 0;
};

/// Calls the server directly, passing every message through the frame codec.
class InProcTransport final : public Transport {
 public:
  explicit InProcTransport(CloudServer& server) : server_(server) {}
  wire::Envelope roundtrip(const wire::Envelope& req) override;

 private:
  CloudServer& server_;
};

/// One persistent TCP connection.
class SocketTransport final : public Transport {
 public:
  SocketTransport(std::string host, std::uint16_t port);
  ~SocketTransport() override;
  SocketTransport(const SocketTransport&) = delete;
  SocketTransport& operator=(const SocketTransport&) = delete;

  wire::Envelope roundtrip(const wire::Envelope& req) override;

 private:
  void connect();
  void close();

  std::string host_;
  std::uint16_t port_;
  int fd_ = -1;
};

/// TCP front end: one thread per connection, frames handled until EOF.
class SocketServer {
 public:
  /// port 0 picks an ephemeral port.
  SocketServer(CloudServer& server, const std::string& host, std::uint16_t port);
  ~SocketServer();
  SocketServer(const SocketServer&) = delete;
  SocketServer& operator=(const SocketServer&) = delete;

  std::uint16_t port() const { return port_; }
  /// Accept loop; returns after stop().
  void run();
  void start();
  void stop();

 private:
  void serve_connection(int fd);

  CloudServer& server_;
  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
  std::thread acceptor_;
  std::mutex mu_;
  bool stopping_ = false;
  std::vector<int> conns_;
  std::vector<std::thread> workers_;
};

struct Endpoint {
  bool inproc = true;
  std::string host;
  std::uint16_t port = 0;

  /// "inproc" or "host:port"; ArgumentError otherwise.
  static Endpoint parse(std::string_view s);
  std::string str() const;
};

}  // namespace dic
