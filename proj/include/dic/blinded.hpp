#pragma once

// Blinded-response audit scheme: sigma_i = (H(W_i) * u^{m_i})^x with
// W_i = name || BE64(i); the server blinds mu' as mu = r + gamma * mu' with
// R = e(u, v)^r and gamma = h(R).

#include <span>
#include <vector>

#include "dic/challenge.hpp"
#include "dic/file.hpp"
#include "dic/pairing.hpp"
#include "dic/tag.hpp"
#include "dic/verify_result.hpp"

namespace dic::blinded {

struct PublicKey {
  G2 spk;
  G2 v;
  G1 u;

  Bytes encode() const;
  static PublicKey decode(ByteSpan bytes);
  bool operator==(const PublicKey&) const = default;
};

struct Keys {
  Scalar x;
  SigKeyPair sig;
  G1 u;

  PublicKey pk() const { return {sig.spk, G2::generator().pow(x), u}; }
};

struct TokenBundle {
  FileTag tag;
  std::vector<G1> sigma;
};

struct Proof {
  Scalar mu;
  G1 sigma;
  GT R;

  /// mu || sigma || R
  Bytes encode() const;
  static Proof decode(ByteSpan bytes);
  bool operator==(const Proof&) const = default;
};

/// W_i = name || BE64(i)
Bytes block_label(ByteSpan name, std::uint64_t index);
/// H(W_i)
G1 block_hash(ByteSpan name, std::uint64_t index);
/// H(W_i) for i = 1..n
std::vector<G1> block_hashes(ByteSpan name, std::uint64_t n);

/// gamma = h(encode(R))
Scalar blind_challenge(const GT& R);

Keys keygen(Rng& rng);

/// Signs the name and computes authenticators for every block.
TokenBundle token_gen(const Keys& keys, const BlockVector& file);

/// Draws a fresh blinding exponent r.
Proof respond(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk, const Challenge& chal,
              Rng& rng);
/// Deterministic core of respond with caller-chosen r.
Proof respond_with_blind(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk,
                         const Challenge& chal, const Scalar& r);

/// R * e(sigma^gamma, g) == e((prod H(W_i)^{nu_i})^gamma * u^mu, v), gamma = h(R).
VerifyResult verify(const PublicKey& pk, const FileTag& tag, std::uint64_t n, const Challenge& chal,
                    const Proof& proof);

}  // namespace dic::blinded
