#pragma once

#include <atomic>
#include <filesystem>

#include "dic/envelope.hpp"
#include "dic/rng.hpp"
#include "dic/store.hpp"

namespace dic {

/// Cloud server. Every request reads its record from disk; response randomness
/// comes from a fresh fork of the base seed per call.
class CloudServer {
 public:
  CloudServer(std::filesystem::path store_root, std::uint64_t seed);

  /// Never throws for bad requests; failures become error envelopes.
  wire::Envelope handle(const wire::Envelope& req);
  /// Frame in, frame out; undecodable frames get an error reply.
  Bytes handle_frame(ByteSpan frame);

  FileStore& store() { return store_; }

 private:
  wire::Envelope dispatch(const wire::Envelope& req);

  FileStore store_;
  Rng base_;
  std::atomic<std::uint64_t> calls_{0};
};

}  // namespace dic
