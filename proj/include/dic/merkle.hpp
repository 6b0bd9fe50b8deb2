#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dic/bytes.hpp"
#include "dic/pairing.hpp"

namespace dic::mht {

// Leaf digest: SHA-256(0x00 || BE64(i) || encode(H(m_i))).
// Node digest: SHA-256(0x01 || left || right).
// A level of odd width promotes its last node unchanged.

struct PathStep {
  Digest sibling;
  bool sibling_on_left;

  bool operator==(const PathStep&) const = default;
};

/// Omega_i: sibling digests from leaf i up to the root. Promoted levels contribute no step.
using MerklePath = std::vector<PathStep>;

Digest leaf_digest(std::uint64_t index, const G1& leaf);
Digest node_digest(const Digest& left, const Digest& right);

class MerkleTree {
 public:
  /// leaves[k] is H(m_{k+1}).
  static MerkleTree build(std::span<const G1> leaves);

  const Digest& root() const { return levels_.back().front(); }
  std::size_t leaf_count() const { return levels_.front().size(); }
  const std::vector<std::vector<Digest>>& levels() const { return levels_; }

  /// Path for 1-based leaf index; ArgumentError when out of range.
  MerklePath path(std::uint64_t index) const;

  Bytes encode() const;
  static MerkleTree decode(ByteSpan bytes);

  bool operator==(const MerkleTree&) const = default;

 private:
  static std::vector<std::vector<Digest>> build_levels(std::vector<Digest> leaves);

  std::vector<std::vector<Digest>> levels_;
};

Digest reconstruct_root(std::uint64_t index, const G1& leaf, const MerklePath& path);

void encode_path(ByteWriter& w, const MerklePath& path);
MerklePath decode_path(ByteReader& r);

}  // namespace dic::mht
