#pragma once

// On-disk records of the cloud server. Layout, one directory per file
// (hex-encoded name):
//   manifest.bin  "DICR" || version || scheme || BE64 n || BE64 sigma count || blob(name)
//   blocks.bin    n x 32-byte blocks
//   tag.bin       encoded FileTag
//   auths.bin     n x 48-byte authenticators
//   pk.bin        owner's encoded public key
//   tree.bin, root_sig.bin   (mht only)

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "dic/scheme.hpp"

namespace dic {

struct StoredRecord {
  scheme::PublicKey pk;
  scheme::StoredBundle bundle;
};

/// Checks the tag signature against pk, the tag's shape against the bundle,
/// the MHT tree and root signature, and a random-weighted batch check of all
/// authenticators. FormatError on the first failure.
void validate_record(const StoredRecord& rec);

class FileStore {
 public:
  explicit FileStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path record_dir(ByteSpan name) const;

  /// Validates and persists atomically. StoreError on duplicate name.
  void put(const StoredRecord& rec);
  /// StoreError if absent; DecodeError / FormatError on corrupt files.
  StoredRecord load(ByteSpan name) const;
  bool contains(ByteSpan name) const;
  void remove(ByteSpan name);
  std::vector<Bytes> names() const;

 private:
  std::shared_ptr<std::shared_mutex> lock_for(const std::string& key) const;

  std::filesystem::path root_;
  mutable std::mutex locks_mu_;
  mutable std::map<std::string, std::shared_ptr<std::shared_mutex>> locks_;
};

}  // namespace dic
