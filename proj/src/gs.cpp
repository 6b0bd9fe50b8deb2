#include "dic/gs.hpp"

#include "dic/aggregate.hpp"
#include "dic/blinded.hpp"
#include "dic/errors.hpp"
#include "dic/kernels.hpp"
#include "dic/rng.hpp"

namespace dic::gs {

// ---- commitment key --------------------------------------------------------

CommitmentKey CommitmentKey::without_trapdoor() const {
  CommitmentKey out = *this;
  out.trapdoor.reset();
  return out;
}

Bytes CommitmentKey::encode() const {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(mode));
  for (const auto& p : {u1[0], u1[1], u2[0], u2[1]}) w.raw(p.to_bytes());
  return std::move(w).take();
}

CommitmentKey CommitmentKey::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  CommitmentKey ck;
  const auto mode = r.u8();
  if (mode > 1) throw DecodeError("commitment key: unknown mode");
  ck.mode = static_cast<KeyMode>(mode);
  ck.u1 = {G1::from_bytes(r.raw(kG1Bytes)), G1::from_bytes(r.raw(kG1Bytes))};
  ck.u2 = {G1::from_bytes(r.raw(kG1Bytes)), G1::from_bytes(r.raw(kG1Bytes))};
  r.expect_end();
  return ck;
}

CommitmentKey ck_gen(const G1& u, KeyMode mode, Rng& rng, bool retain_trapdoor) {
  if (u.is_identity()) throw ArgumentError("ck_gen: u must not be the identity");
  Trapdoor td;
  td.alpha = Scalar::random_nonzero(rng);
  td.tau = Scalar::random_nonzero(rng);
  td.offset = mode == KeyMode::hiding ? Scalar::from_u64(1) : Scalar();

  CommitmentKey ck;
  ck.mode = mode;
  ck.u1 = {u, u.pow(td.alpha)};
  ck.u2 = {u.pow(td.tau), u.pow(td.tau * td.alpha + td.offset)};
  if (retain_trapdoor) ck.trapdoor = td;
  return ck;
}

// ---- commit / prove --------------------------------------------------------

Randomness Randomness::random(Rng& rng) {
  Randomness r;
  r.r11 = Scalar::random(rng);
  r.r12 = Scalar::random(rng);
  r.r21 = Scalar::random(rng);
  r.r22 = Scalar::random(rng);
  return r;
}

G1Pair commit_element(const G1& value, const CommitmentKey& ck, const Scalar& ra, const Scalar& rb) {
  return {ck.u1[0].pow(ra) * ck.u2[0].pow(rb), ck.u1[1].pow(ra) * ck.u2[1].pow(rb) * value};
}

Commitments commit(const Witness& w, const CommitmentKey& ck, const Randomness& r) {
  return {commit_element(w.sigma, ck, r.r11, r.r12), commit_element(w.U, ck, r.r21, r.r22)};
}

Proof prove(const Randomness& r, const G2& g, const G2& v) {
  return {G2Pair{G2::identity(), g.pow(r.r11) * v.pow(-r.r21)},
          G2Pair{G2::identity(), g.pow(r.r12) * v.pow(-r.r22)}};
}

Bytes Response::encode() const {
  ByteWriter w;
  for (const auto& p : {c.c1[0], c.c1[1], c.c2[0], c.c2[1]}) w.raw(p.to_bytes());
  w.raw(pi.pi1[1].to_bytes()).raw(pi.pi2[1].to_bytes());
  return std::move(w).take();
}

Response Response::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  Response out;
  out.c.c1 = {G1::from_bytes(r.raw(kG1Bytes)), G1::from_bytes(r.raw(kG1Bytes))};
  out.c.c2 = {G1::from_bytes(r.raw(kG1Bytes)), G1::from_bytes(r.raw(kG1Bytes))};
  out.pi.pi1 = {G2::identity(), G2::from_bytes(r.raw(kG2Bytes))};
  out.pi.pi2 = {G2::identity(), G2::from_bytes(r.raw(kG2Bytes))};
  r.expect_end();
  return out;
}

// ---- matrix algebra --------------------------------------------------------

GtMatrix outer_pairing(const G1Pair& x, const G2Pair& y) {
  GtMatrix m;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) m[j][k] = pair(x[j], y[k]);
  }
  return m;
}

GtMatrix bullet(const std::array<G1Pair, 2>& x, const std::array<G2Pair, 2>& y) {
  // Entry (j,k) = e(x[0][j], y[0][k]) * e(x[1][j], y[1][k]), one final exponentiation each.
  std::vector<std::vector<std::pair<G1, G2>>> products;
  products.reserve(4);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) products.push_back({{x[0][j], y[0][k]}, {x[1][j], y[1][k]}});
  }
  const auto gt = kernels::pairing_products(products);
  return GtMatrix{{{gt[0], gt[1]}, {gt[2], gt[3]}}};
}

GtMatrix iota_t(const GT& t) { return GtMatrix{{{GT::one(), GT::one()}, {GT::one(), t}}}; }

GtMatrix entrywise(const GtMatrix& a, const GtMatrix& b) {
  GtMatrix m;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) m[j][k] = a[j][k] * b[j][k];
  }
  return m;
}

// ---- keys ------------------------------------------------------------------

PublicKey PublicKey::make(const G2& spk, const G2& v, const G1& u, const CommitmentKey& ck) {
  return {spk, v, u, ck.without_trapdoor(), v.inverse()};
}

std::array<G2Pair, 2> PublicKey::verifier_side() const {
  return {G2Pair{G2::identity(), G2::generator()}, G2Pair{G2::identity(), v_inv}};
}

Bytes PublicKey::encode() const {
  ByteWriter w;
  w.raw(spk.to_bytes()).raw(v.to_bytes()).raw(u.to_bytes()).raw(ck.encode());
  return std::move(w).take();
}

PublicKey PublicKey::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  const auto spk = G2::from_bytes(r.raw(kG2Bytes));
  const auto v = G2::from_bytes(r.raw(kG2Bytes));
  const auto u = G1::from_bytes(r.raw(kG1Bytes));
  const auto ck = CommitmentKey::decode(r.raw(1 + 4 * kG1Bytes));
  r.expect_end();
  if (!(ck.u1[0] == u)) throw DecodeError("GS public key: commitment key not based on u");
  return make(spk, v, u, ck);
}

PublicKey Keys::pk() const { return PublicKey::make(sig.spk, G2::generator().pow(x), u, ck); }

Keys keygen(Rng& rng, KeyMode mode, bool retain_trapdoor) {
  Keys k;
  k.x = Scalar::random_nonzero(rng);
  k.sig = SigKeyPair::generate(rng);
  k.u = G1::random(rng);
  k.ck = ck_gen(k.u, mode, rng, retain_trapdoor);
  return k;
}

TokenBundle token_gen(const Keys& keys, const BlockVector& file) {
  if (file.n() == 0) throw ArgumentError("token_gen: empty file");
  TokenBundle out;
  out.tag = FileTag::issue(SchemeId::gs, file.name, std::nullopt, std::nullopt, keys.sig.ssk);
  out.sigma = kernels::authenticators(blinded::block_hashes(file.name, file.n()), file.blocks, keys.u, keys.x);
  return out;
}

// ---- protocol --------------------------------------------------------------

GT target(const PublicKey& pk, ByteSpan name, const Challenge& chal) {
  std::vector<G1> hashes;
  hashes.reserve(chal.size());
  for (const auto& e : chal.entries) hashes.push_back(blinded::block_hash(name, e.index));
  return pair(kernels::msm(hashes, chal.coeffs()), pk.v);
}

Witness make_witness(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk,
                     const Challenge& chal) {
  const auto agg = aggregate(file, sigma, chal);
  return {agg.sigma, pk.u.pow(agg.mu)};
}

Response respond(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk, const Challenge& chal,
                 Rng& rng) {
  return respond_with(file, sigma, pk, chal, Randomness::random(rng));
}

Response respond_with(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk,
                      const Challenge& chal, const Randomness& r) {
  const auto w = make_witness(file, sigma, pk, chal);
  return {commit(w, pk.ck, r), prove(r, G2::generator(), pk.v)};
}

VerificationMatrices verification_matrices(const PublicKey& pk, const GT& t_T, const Response& resp) {
  VerificationMatrices m;
  m.left = bullet({resp.c.c1, resp.c.c2}, pk.verifier_side());
  m.right = entrywise(iota_t(t_T), bullet({pk.ck.u1, pk.ck.u2}, {resp.pi.pi1, resp.pi.pi2}));
  return m;
}

bool check_equation(const PublicKey& pk, const GT& t_T, const Response& resp) {
  const auto m = verification_matrices(pk, t_T, resp);
  return m.left == m.right;
}

VerifyResult verify(const PublicKey& pk, const FileTag& tag, std::uint64_t n, const Challenge& chal,
                    const Response& resp) {
  if (tag.scheme != SchemeId::gs || !tag.verify(pk.spk)) return {VerifyStatus::tag_invalid};
  try {
    chal.validate(n);
  } catch (const ProtocolError&) {
    return {VerifyStatus::bad_challenge};
  }
  if (!check_equation(pk, target(pk, tag.name, chal), resp)) return {VerifyStatus::equation_failed};
  return {VerifyStatus::accepted};
}

// ---- trapdoor operations ---------------------------------------------------

Witness extract(const Commitments& c, const CommitmentKey& ck) {
  if (!ck.trapdoor) throw CapabilityError("extract: commitment key has no trapdoor");
  if (ck.mode != KeyMode::binding) throw CapabilityError("extract: key is in hiding mode");
  const Scalar& alpha = ck.trapdoor->alpha;
  return {c.c1[1] / c.c1[0].pow(alpha), c.c2[1] / c.c2[0].pow(alpha)};
}

std::pair<Scalar, Scalar> equivocate(const Scalar& mu0, const Scalar& mu1, const Scalar& r21,
                                     const Scalar& r22, const CommitmentKey& ck) {
  if (!ck.trapdoor) throw CapabilityError("equivocate: commitment key has no trapdoor");
  const auto& td = *ck.trapdoor;
  if (ck.mode != KeyMode::hiding || td.offset.is_zero()) {
    throw CapabilityError("equivocate: binding key admits a single opening");
  }
  // d21 + tau*d22 = 0 and alpha*d21 + (tau*alpha + offset)*d22 = mu0 - mu1
  const Scalar d22 = (mu0 - mu1) * td.offset.inverse();
  const Scalar d21 = -(td.tau * d22);
  return {r21 + d21, r22 + d22};
}

}  // namespace dic::gs
