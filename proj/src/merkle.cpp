#include "dic/merkle.hpp"

#include "dic/errors.hpp"

namespace dic::mht {

Digest leaf_digest(std::uint64_t index, const G1& leaf) {
  ByteWriter w;
  w.u8(0x00).u64(index).raw(leaf.to_bytes());
  return sha256(w.bytes());
}

Digest node_digest(const Digest& left, const Digest& right) {
  ByteWriter w;
  w.u8(0x01).raw(left).raw(right);
  return sha256(w.bytes());
}

std::vector<std::vector<Digest>> MerkleTree::build_levels(std::vector<Digest> leaves) {
  std::vector<std::vector<Digest>> levels;
  levels.push_back(std::move(leaves));
  while (levels.back().size() > 1) {
    const auto& below = levels.back();
    std::vector<Digest> up;
    up.reserve((below.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < below.size(); k += 2) up.push_back(node_digest(below[k], below[k + 1]));
    if (below.size() % 2 == 1) up.push_back(below.back());
    levels.push_back(std::move(up));
  }
  return levels;
}

MerkleTree MerkleTree::build(std::span<const G1> leaves) {
  if (leaves.empty()) throw ArgumentError("MerkleTree: no leaves");
  std::vector<Digest> digests;
  digests.reserve(leaves.size());
  for (std::size_t k = 0; k < leaves.size(); ++k) digests.push_back(leaf_digest(k + 1, leaves[k]));
  MerkleTree t;
  t.levels_ = build_levels(std::move(digests));
  return t;
}

MerklePath MerkleTree::path(std::uint64_t index) const {
  if (index < 1 || index > leaf_count()) throw ArgumentError("MerkleTree: leaf index out of range");
  MerklePath out;
  std::size_t pos = index - 1;
  for (std::size_t lvl = 0; lvl + 1 < levels_.size(); ++lvl) {
    const auto& level = levels_[lvl];
    const std::size_t sib = pos ^ 1;
    if (sib < level.size()) out.push_back({level[sib], sib < pos});
    pos /= 2;
  }
  return out;
}

Digest reconstruct_root(std::uint64_t index, const G1& leaf, const MerklePath& path) {
  Digest acc = leaf_digest(index, leaf);
  for (const auto& step : path) {
    acc = step.sibling_on_left ? node_digest(step.sibling, acc) : node_digest(acc, step.sibling);
  }
  return acc;
}

Bytes MerkleTree::encode() const {
  ByteWriter w;
  w.u64(leaf_count());
  for (const auto& level : levels_) {
    for (const auto& d : level) w.raw(d);
  }
  return std::move(w).take();
}

MerkleTree MerkleTree::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  const auto leaves = r.u64();
  if (leaves == 0 || leaves > r.remaining() / 32) throw DecodeError("MerkleTree: bad leaf count");
  MerkleTree t;
  std::size_t width = leaves;
  for (;;) {
    std::vector<Digest> level;
    level.reserve(width);
    for (std::size_t k = 0; k < width; ++k) level.push_back(r.fixed<32>());
    t.levels_.push_back(std::move(level));
    if (width == 1) break;
    width = (width + 1) / 2;
  }
  r.expect_end();
  return t;
}

void encode_path(ByteWriter& w, const MerklePath& path) {
  w.u32(static_cast<std::uint32_t>(path.size()));
  for (const auto& step : path) w.u8(step.sibling_on_left ? 1 : 0).raw(step.sibling);
}

MerklePath decode_path(ByteReader& r) {
  const auto count = r.u32();
  if (count > 64) throw DecodeError("Merkle path too long");
  MerklePath path;
  for (std::uint32_t k = 0; k < count; ++k) {
    const auto side = r.u8();
    if (side > 1) throw DecodeError("Merkle path: bad side flag");
    path.push_back({r.fixed<32>(), side == 1});
  }
  return path;
}

}  // namespace dic::mht
