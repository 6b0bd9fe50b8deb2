#pragma once

// Witness-indistinguishable audit scheme. The server proves the pairing-product
// equation
//     e(sigma, g) * e(u^{mu'}, v^{-1}) = t_T,   t_T = e(prod H(W_i)^{nu_i}, v)
// with Groth-Sahai commitments to the witness (sigma, u^{mu'}) under the key
// u1 = (u, u^alpha), u2 = (u^tau, u^{tau*alpha}) and the proof
//     pi1 = (1, g^{r11} v^{-r21}),  pi2 = (1, g^{r12} v^{-r22}).
// The auditor checks  c . ((1,g),(1,v^{-1})) == iota_T(t_T) (u . pi)
// entrywise over 2x2 matrices in GT.

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dic/challenge.hpp"
#include "dic/file.hpp"
#include "dic/pairing.hpp"
#include "dic/tag.hpp"
#include "dic/verify_result.hpp"

namespace dic::gs {

using G1Pair = std::array<G1, 2>;
using G2Pair = std::array<G2, 2>;
using GtMatrix = std::array<std::array<GT, 2>, 2>;

enum class KeyMode : std::uint8_t { binding = 0, hiding = 1 };

/// Exponents behind a commitment key. In binding mode u2[1] = u^{tau*alpha}
/// (offset 0); in hiding mode u2[1] = u^{tau*alpha + offset}, offset != 0.
struct Trapdoor {
  Scalar alpha;
  Scalar tau;
  Scalar offset;
};

struct CommitmentKey {
  G1Pair u1;
  G1Pair u2;
  KeyMode mode = KeyMode::binding;
  std::optional<Trapdoor> trapdoor;

  CommitmentKey without_trapdoor() const;

  /// mode || u1 || u2 (never the trapdoor)
  Bytes encode() const;
  static CommitmentKey decode(ByteSpan bytes);
  bool same_public_key(const CommitmentKey& o) const { return u1 == o.u1 && u2 == o.u2 && mode == o.mode; }
};

/// Hiding mode uses offset 1: u2 = (u^tau, u^{tau*alpha + 1}).
CommitmentKey ck_gen(const G1& u, KeyMode mode, Rng& rng, bool retain_trapdoor = false);

/// (sigma, U = u^{mu'})
struct Witness {
  G1 sigma;
  G1 U;

  bool operator==(const Witness&) const = default;
};

struct Commitments {
  G1Pair c1;  // commits sigma with (r11, r12)
  G1Pair c2;  // commits U with (r21, r22)

  bool operator==(const Commitments&) const = default;
};

struct Randomness {
  Scalar r11, r12, r21, r22;

  static Randomness random(Rng& rng);
};

struct Proof {
  G2Pair pi1;
  G2Pair pi2;

  bool operator==(const Proof&) const = default;
};

struct Response {
  Commitments c;
  Proof pi;

  /// c11 || c12 || c21 || c22 || pi1[1] || pi2[1]; the identity first
  /// components of pi are elided and restored on decode.
  Bytes encode() const;
  static Response decode(ByteSpan bytes);
  bool operator==(const Response&) const = default;
};

/// (u1[0]^ra * u2[0]^rb, u1[1]^ra * u2[1]^rb * value); needs no trapdoor.
G1Pair commit_element(const G1& value, const CommitmentKey& ck, const Scalar& ra, const Scalar& rb);
Commitments commit(const Witness& w, const CommitmentKey& ck, const Randomness& r);
Proof prove(const Randomness& r, const G2& g, const G2& v);

/// F((x1,x2),(y1,y2)) = [[e(x1,y1), e(x1,y2)], [e(x2,y1), e(x2,y2)]]
GtMatrix outer_pairing(const G1Pair& x, const G2Pair& y);
/// x . y = F(x[0], y[0]) * F(x[1], y[1]), entrywise.
GtMatrix bullet(const std::array<G1Pair, 2>& x, const std::array<G2Pair, 2>& y);
/// t -> [[1, 1], [1, t]]
GtMatrix iota_t(const GT& t);
GtMatrix entrywise(const GtMatrix& a, const GtMatrix& b);

struct PublicKey {
  G2 spk;
  G2 v;
  G1 u;
  CommitmentKey ck;  // public part only
  G2 v_inv;          // cached v^{-1}

  static PublicKey make(const G2& spk, const G2& v, const G1& u, const CommitmentKey& ck);

  /// ((1, g), (1, v^{-1})), the fixed right operand of the verification.
  std::array<G2Pair, 2> verifier_side() const;

  Bytes encode() const;
  static PublicKey decode(ByteSpan bytes);
};

struct Keys {
  Scalar x;
  SigKeyPair sig;
  G1 u;
  CommitmentKey ck;

  PublicKey pk() const;
};

struct TokenBundle {
  FileTag tag;
  std::vector<G1> sigma;
};

/// The trapdoor is dropped unless retain_trapdoor is set.
Keys keygen(Rng& rng, KeyMode mode = KeyMode::binding, bool retain_trapdoor = false);
TokenBundle token_gen(const Keys& keys, const BlockVector& file);

/// t_T = e(prod H(W_i)^{nu_i}, v); independent of the file contents.
GT target(const PublicKey& pk, ByteSpan name, const Challenge& chal);

/// (sigma, u^{mu'}) for the challenge.
Witness make_witness(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk,
                     const Challenge& chal);

Response respond(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk, const Challenge& chal,
                 Rng& rng);
Response respond_with(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk,
                      const Challenge& chal, const Randomness& r);

struct VerificationMatrices {
  GtMatrix left;   // c . ((1,g),(1,v^{-1}))
  GtMatrix right;  // iota_T(t_T) * (u . pi)
};

VerificationMatrices verification_matrices(const PublicKey& pk, const GT& t_T, const Response& resp);
bool check_equation(const PublicKey& pk, const GT& t_T, const Response& resp);

VerifyResult verify(const PublicKey& pk, const FileTag& tag, std::uint64_t n, const Challenge& chal,
                    const Response& resp);

/// (c12 / c11^alpha, c22 / c21^alpha). CapabilityError without a binding-mode trapdoor.
Witness extract(const Commitments& c, const CommitmentKey& ck);

/// Randomness (r21', r22') under which u^{mu1} yields the same c2 that
/// u^{mu0} produced with (r21, r22). CapabilityError in binding mode or
/// without the trapdoor.
std::pair<Scalar, Scalar> equivocate(const Scalar& mu0, const Scalar& mu1, const Scalar& r21,
                                     const Scalar& r22, const CommitmentKey& ck);

}  // namespace dic::gs
