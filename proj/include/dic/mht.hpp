#pragma once

// Merkle-hash-tree audit scheme: sigma_i = (H(m_i) * u^{m_i})^x, a signed MHT
// root over the leaf hashes H(m_i), and proofs that open those leaf hashes.

#include <span>
#include <vector>

#include "dic/challenge.hpp"
#include "dic/file.hpp"
#include "dic/merkle.hpp"
#include "dic/pairing.hpp"
#include "dic/tag.hpp"
#include "dic/verify_result.hpp"

namespace dic::mht {

struct PublicKey {
  G2 v;
  G2 spk;

  Bytes encode() const;
  static PublicKey decode(ByteSpan bytes);
  bool operator==(const PublicKey&) const = default;
};

struct Keys {
  Scalar x;
  SigKeyPair sig;

  PublicKey pk() const { return {G2::generator().pow(x), sig.spk}; }
};

struct TokenBundle {
  FileTag tag;
  std::vector<G1> sigma;
  MerkleTree tree;
  G1 root_sig;  // H_mht(R)^x
};

struct OpenedLeaf {
  std::uint64_t index;
  G1 leaf;  // H(m_i)
  MerklePath path;

  bool operator==(const OpenedLeaf&) const = default;
};

struct Proof {
  Scalar mu;
  G1 sigma;
  std::vector<OpenedLeaf> opened;
  G1 root_sig;

  /// mu || sigma || count || [(index, leaf, path)...] || root_sig
  Bytes encode() const;
  static Proof decode(ByteSpan bytes);
  bool operator==(const Proof&) const = default;
};

/// H(m_i): the block's canonical 32-byte encoding under the block-hash oracle.
G1 leaf_hash(const Scalar& block);

Keys keygen(Rng& rng);

/// Draws the per-file u, signs (name, n, u), computes authenticators and the
/// signed tree root.
TokenBundle token_gen(const Keys& keys, const BlockVector& file, Rng& rng);

/// ProtocolError when the challenge does not fit the file.
Proof respond(const BlockVector& file, std::span<const G1> sigma, const MerkleTree& tree, const G1& root_sig,
              const Challenge& chal);

VerifyResult verify(const PublicKey& pk, const FileTag& tag, const Challenge& chal, const Proof& proof);

}  // namespace dic::mht
