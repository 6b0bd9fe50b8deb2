#include "dic/blinded.hpp"

#include <array>

#include "dic/aggregate.hpp"
#include "dic/errors.hpp"
#include "dic/kernels.hpp"
#include "dic/rng.hpp"

namespace dic::blinded {

Bytes PublicKey::encode() const {
  ByteWriter w;
  w.raw(spk.to_bytes()).raw(v.to_bytes()).raw(u.to_bytes());
  return std::move(w).take();
}

PublicKey PublicKey::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  PublicKey pk;
  pk.spk = G2::from_bytes(r.raw(kG2Bytes));
  pk.v = G2::from_bytes(r.raw(kG2Bytes));
  pk.u = G1::from_bytes(r.raw(kG1Bytes));
  r.expect_end();
  return pk;
}

Bytes Proof::encode() const {
  ByteWriter w;
  w.raw(mu.to_bytes()).raw(sigma.to_bytes()).raw(R.to_bytes());
  return std::move(w).take();
}

Proof Proof::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  Proof p;
  p.mu = Scalar::from_bytes(r.raw(kScalarBytes));
  p.sigma = G1::from_bytes(r.raw(kG1Bytes));
  p.R = GT::from_bytes(r.raw(kGtBytes));
  r.expect_end();
  return p;
}

Bytes block_label(ByteSpan name, std::uint64_t index) {
  ByteWriter w;
  w.raw(name).u64(index);
  return std::move(w).take();
}

G1 block_hash(ByteSpan name, std::uint64_t index) { return hash_to_g1(kTagBlockHash, block_label(name, index)); }

std::vector<G1> block_hashes(ByteSpan name, std::uint64_t n) {
  std::vector<Bytes> labels;
  labels.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) labels.push_back(block_label(name, i));
  return kernels::hash_points(kTagBlockHash, labels);
}

Scalar blind_challenge(const GT& R) { return hash_to_scalar(kTagBlindHash, R.to_bytes()); }

Keys keygen(Rng& rng) {
  Keys k;
  k.x = Scalar::random_nonzero(rng);
  k.sig = SigKeyPair::generate(rng);
  k.u = G1::random(rng);
  return k;
}

TokenBundle token_gen(const Keys& keys, const BlockVector& file) {
  if (file.n() == 0) throw ArgumentError("token_gen: empty file");
  TokenBundle out;
  out.tag = FileTag::issue(SchemeId::blinded, file.name, std::nullopt, std::nullopt, keys.sig.ssk);
  out.sigma = kernels::authenticators(block_hashes(file.name, file.n()), file.blocks, keys.u, keys.x);
  return out;
}

Proof respond(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk, const Challenge& chal,
              Rng& rng) {
  return respond_with_blind(file, sigma, pk, chal, Scalar::random(rng));
}

Proof respond_with_blind(const BlockVector& file, std::span<const G1> sigma, const PublicKey& pk,
                         const Challenge& chal, const Scalar& r) {
  const auto agg = aggregate(file, sigma, chal);
  Proof p;
  p.R = pair(pk.u, pk.v).pow(r);
  const Scalar gamma = blind_challenge(p.R);
  p.mu = r + gamma * agg.mu;
  p.sigma = agg.sigma;
  return p;
}

VerifyResult verify(const PublicKey& pk, const FileTag& tag, std::uint64_t n, const Challenge& chal,
                    const Proof& proof) {
  if (tag.scheme != SchemeId::blinded || !tag.verify(pk.spk)) return {VerifyStatus::tag_invalid};
  try {
    chal.validate(n);
  } catch (const ProtocolError&) {
    return {VerifyStatus::bad_challenge};
  }
  const Scalar gamma = blind_challenge(proof.R);
  std::vector<G1> hashes;
  hashes.reserve(chal.size());
  for (const auto& e : chal.entries) hashes.push_back(block_hash(tag.name, e.index));
  const G1 rhs = kernels::msm(hashes, chal.coeffs()).pow(gamma) * pk.u.pow(proof.mu);
  // R * e(sigma^gamma, g) * e(rhs, v)^-1 == 1
  const std::array<std::pair<G1, G2>, 2> terms = {std::pair{proof.sigma.pow(gamma), G2::generator()},
                                                   std::pair{rhs.inverse(), pk.v}};
  if (!(proof.R * pairing_product(terms)).is_one()) return {VerifyStatus::equation_failed};
  return {VerifyStatus::accepted};
}

}  // namespace dic::blinded
