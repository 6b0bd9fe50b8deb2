#include "dic/mht.hpp"

#include <array>

#include "dic/aggregate.hpp"
#include "dic/errors.hpp"
#include "dic/kernels.hpp"
#include "dic/rng.hpp"

namespace dic::mht {

namespace {

// e(a, g) == e(b, v)
bool pairing_eq(const G1& a, const G1& b, const G2& v) {
  const std::array<std::pair<G1, G2>, 2> terms = {std::pair{a, G2::generator()}, std::pair{b.inverse(), v}};
  return pairing_product(terms).is_one();
}

G1 root_hash(const Digest& root) { return hash_to_g1(kTagMhtRoot, root); }

}  // namespace

Bytes PublicKey::encode() const {
  ByteWriter w;
  w.raw(v.to_bytes()).raw(spk.to_bytes());
  return std::move(w).take();
}

PublicKey PublicKey::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  PublicKey pk;
  pk.v = G2::from_bytes(r.raw(kG2Bytes));
  pk.spk = G2::from_bytes(r.raw(kG2Bytes));
  r.expect_end();
  return pk;
}

Bytes Proof::encode() const {
  ByteWriter w;
  w.raw(mu.to_bytes()).raw(sigma.to_bytes()).u32(static_cast<std::uint32_t>(opened.size()));
  for (const auto& o : opened) {
    w.u64(o.index).raw(o.leaf.to_bytes());
    encode_path(w, o.path);
  }
  w.raw(root_sig.to_bytes());
  return std::move(w).take();
}

Proof Proof::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  Proof p;
  p.mu = Scalar::from_bytes(r.raw(kScalarBytes));
  p.sigma = G1::from_bytes(r.raw(kG1Bytes));
  const auto count = r.u32();
  if (count > r.remaining() / (8 + kG1Bytes + 4)) throw DecodeError("MHT proof: count exceeds payload");
  for (std::uint32_t k = 0; k < count; ++k) {
    OpenedLeaf o;
    o.index = r.u64();
    o.leaf = G1::from_bytes(r.raw(kG1Bytes));
    o.path = decode_path(r);
    p.opened.push_back(std::move(o));
  }
  p.root_sig = G1::from_bytes(r.raw(kG1Bytes));
  r.expect_end();
  return p;
}

G1 leaf_hash(const Scalar& block) { return hash_to_g1(kTagBlockHash, block.to_bytes()); }

Keys keygen(Rng& rng) {
  Keys k;
  k.x = Scalar::random_nonzero(rng);
  k.sig = SigKeyPair::generate(rng);
  return k;
}

TokenBundle token_gen(const Keys& keys, const BlockVector& file, Rng& rng) {
  if (file.n() == 0) throw ArgumentError("token_gen: empty file");
  const G1 u = G1::random(rng);

  std::vector<Bytes> encoded;
  encoded.reserve(file.n());
  for (const auto& m : file.blocks) {
    const auto e = m.to_bytes();
    encoded.emplace_back(e.begin(), e.end());
  }
  const auto leaves = kernels::hash_points(kTagBlockHash, encoded);

  TokenBundle out;
  out.tag = FileTag::issue(SchemeId::mht, file.name, file.n(), u, keys.sig.ssk);
  out.sigma = kernels::authenticators(leaves, file.blocks, u, keys.x);
  out.tree = MerkleTree::build(leaves);
  out.root_sig = root_hash(out.tree.root()).pow(keys.x);
  return out;
}

Proof respond(const BlockVector& file, std::span<const G1> sigma, const MerkleTree& tree, const G1& root_sig,
              const Challenge& chal) {
  if (tree.leaf_count() != file.n()) throw ProtocolError("MHT respond: tree does not match file");
  const auto agg = aggregate(file, sigma, chal);
  Proof p;
  p.mu = agg.mu;
  p.sigma = agg.sigma;
  p.root_sig = root_sig;
  for (const auto& e : chal.entries) {
    p.opened.push_back({e.index, leaf_hash(file.block(e.index)), tree.path(e.index)});
  }
  return p;
}

VerifyResult verify(const PublicKey& pk, const FileTag& tag, const Challenge& chal, const Proof& proof) {
  if (tag.scheme != SchemeId::mht || !tag.verify(pk.spk)) return {VerifyStatus::tag_invalid};
  try {
    chal.validate(*tag.n);
  } catch (const ProtocolError&) {
    return {VerifyStatus::bad_challenge};
  }
  if (proof.opened.size() != chal.size()) return {VerifyStatus::malformed};
  for (std::size_t k = 0; k < chal.size(); ++k) {
    if (proof.opened[k].index != chal.entries[k].index) return {VerifyStatus::malformed};
  }

  const Digest root = reconstruct_root(proof.opened[0].index, proof.opened[0].leaf, proof.opened[0].path);
  for (std::size_t k = 1; k < proof.opened.size(); ++k) {
    const auto& o = proof.opened[k];
    if (reconstruct_root(o.index, o.leaf, o.path) != root) return {VerifyStatus::root_mismatch};
  }
  if (!pairing_eq(proof.root_sig, root_hash(root), pk.v)) return {VerifyStatus::root_signature_invalid};

  std::vector<G1> leaves;
  leaves.reserve(proof.opened.size());
  for (const auto& o : proof.opened) leaves.push_back(o.leaf);
  const G1 rhs = kernels::msm(leaves, chal.coeffs()) * tag.u->pow(proof.mu);
  if (!pairing_eq(proof.sigma, rhs, pk.v)) return {VerifyStatus::equation_failed};
  return {VerifyStatus::accepted};
}

}  // namespace dic::mht
