#pragma once

// Scheme-agnostic view of the five DIC algorithms, dispatching on SchemeId.

#include <optional>
#include <variant>
#include <vector>

#include "dic/blinded.hpp"
#include "dic/gs.hpp"
#include "dic/mht.hpp"

namespace dic::scheme {

using SecretKeys = std::variant<mht::Keys, blinded::Keys, gs::Keys>;
using PublicKey = std::variant<mht::PublicKey, blinded::PublicKey, gs::PublicKey>;
using Proof = std::variant<mht::Proof, blinded::Proof, gs::Response>;

inline constexpr SchemeId kAllSchemes[] = {SchemeId::mht, SchemeId::blinded, SchemeId::gs};

SchemeId scheme_of(const SecretKeys& k);
SchemeId scheme_of(const PublicKey& pk);
SchemeId scheme_of(const Proof& p);

/// Everything the cloud server keeps for one file.
struct StoredBundle {
  BlockVector file;
  FileTag tag;
  std::vector<G1> sigma;
  std::optional<mht::MerkleTree> tree;  // mht only
  std::optional<G1> root_sig;           // mht only

  SchemeId scheme() const { return tag.scheme; }
};

SecretKeys keygen(SchemeId id, Rng& rng);
PublicKey public_key(const SecretKeys& k);

StoredBundle token_gen(const SecretKeys& k, BlockVector file, Rng& rng);

/// Fresh randomness for the blinded and GS responses comes from rng.
Proof respond(const StoredBundle& b, const PublicKey& pk, const Challenge& chal, Rng& rng);

/// n is the block count known to the auditor; the MHT scheme reads it from the signed tag instead.
VerifyResult verify(const PublicKey& pk, const FileTag& tag, std::uint64_t n, const Challenge& chal,
                    const Proof& proof);

Bytes encode_proof(const Proof& p);
Proof decode_proof(SchemeId id, ByteSpan bytes);

/// scheme byte || scheme-specific encoding
Bytes encode_public_key(const PublicKey& pk);
PublicKey decode_public_key(ByteSpan bytes);

/// scheme byte || x || ssk [|| u [|| ck]]. Never includes a commitment trapdoor.
Bytes encode_secret_keys(const SecretKeys& k);
SecretKeys decode_secret_keys(ByteSpan bytes);

}  // namespace dic::scheme
