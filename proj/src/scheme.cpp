#include "dic/scheme.hpp"

#include "dic/errors.hpp"

namespace dic::scheme {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

SchemeId from_index(std::size_t i) { return kAllSchemes[i]; }

template <class T>
const T& expect(const auto& v, const char* what) {
  if (const auto* p = std::get_if<T>(&v)) return *p;
  throw ArgumentError(std::string(what) + ": scheme mismatch");
}

SigKeyPair sig_from(const Scalar& ssk) { return {ssk, G2::generator().pow(ssk)}; }

}  // namespace

SchemeId scheme_of(const SecretKeys& k) { return from_index(k.index()); }
SchemeId scheme_of(const PublicKey& pk) { return from_index(pk.index()); }
SchemeId scheme_of(const Proof& p) { return from_index(p.index()); }

SecretKeys keygen(SchemeId id, Rng& rng) {
  switch (id) {
    case SchemeId::mht: return mht::keygen(rng);
    case SchemeId::blinded: return blinded::keygen(rng);
    case SchemeId::gs: return gs::keygen(rng);
  }
  throw ArgumentError("keygen: unknown scheme");
}

PublicKey public_key(const SecretKeys& k) {
  return std::visit([](const auto& keys) -> PublicKey { return keys.pk(); }, k);
}

StoredBundle token_gen(const SecretKeys& k, BlockVector file, Rng& rng) {
  StoredBundle out;
  std::visit(overloaded{
                 [&](const mht::Keys& keys) {
                   auto t = mht::token_gen(keys, file, rng);
                   out.tag = std::move(t.tag);
                   out.sigma = std::move(t.sigma);
                   out.tree = std::move(t.tree);
                   out.root_sig = t.root_sig;
                 },
                 [&](const blinded::Keys& keys) {
                   auto t = blinded::token_gen(keys, file);
                   out.tag = std::move(t.tag);
                   out.sigma = std::move(t.sigma);
                 },
                 [&](const gs::Keys& keys) {
                   auto t = gs::token_gen(keys, file);
                   out.tag = std::move(t.tag);
                   out.sigma = std::move(t.sigma);
                 },
             },
             k);
  out.file = std::move(file);
  return out;
}

Proof respond(const StoredBundle& b, const PublicKey& pk, const Challenge& chal, Rng& rng) {
  switch (b.scheme()) {
    case SchemeId::mht:
      if (!b.tree || !b.root_sig) throw ArgumentError("respond: MHT bundle lacks tree");
      return mht::respond(b.file, b.sigma, *b.tree, *b.root_sig, chal);
    case SchemeId::blinded:
      return blinded::respond(b.file, b.sigma, expect<blinded::PublicKey>(pk, "respond"), chal, rng);
    case SchemeId::gs:
      return gs::respond(b.file, b.sigma, expect<gs::PublicKey>(pk, "respond"), chal, rng);
  }
  throw ArgumentError("respond: unknown scheme");
}

VerifyResult verify(const PublicKey& pk, const FileTag& tag, std::uint64_t n, const Challenge& chal,
                    const Proof& proof) {
  if (scheme_of(pk) != tag.scheme) return {VerifyStatus::tag_invalid};
  if (scheme_of(proof) != tag.scheme) return {VerifyStatus::malformed};
  switch (tag.scheme) {
    case SchemeId::mht:
      return mht::verify(std::get<mht::PublicKey>(pk), tag, chal, std::get<mht::Proof>(proof));
    case SchemeId::blinded:
      return blinded::verify(std::get<blinded::PublicKey>(pk), tag, n, chal, std::get<blinded::Proof>(proof));
    case SchemeId::gs:
      return gs::verify(std::get<gs::PublicKey>(pk), tag, n, chal, std::get<gs::Response>(proof));
  }
  return {VerifyStatus::malformed};
}

Bytes encode_proof(const Proof& p) {
  return std::visit([](const auto& x) { return x.encode(); }, p);
}

Proof decode_proof(SchemeId id, ByteSpan bytes) {
  switch (id) {
    case SchemeId::mht: return mht::Proof::decode(bytes);
    case SchemeId::blinded: return blinded::Proof::decode(bytes);
    case SchemeId::gs: return gs::Response::decode(bytes);
  }
  throw DecodeError("proof: unknown scheme");
}

Bytes encode_public_key(const PublicKey& pk) {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(scheme_of(pk)));
  w.raw(std::visit([](const auto& x) { return x.encode(); }, pk));
  return std::move(w).take();
}

PublicKey decode_public_key(ByteSpan bytes) {
  if (bytes.empty()) throw DecodeError("public key: empty");
  const auto body = bytes.subspan(1);
  switch (scheme_from_byte(bytes[0])) {
    case SchemeId::mht: return mht::PublicKey::decode(body);
    case SchemeId::blinded: return blinded::PublicKey::decode(body);
    case SchemeId::gs: return gs::PublicKey::decode(body);
  }
  throw DecodeError("public key: unknown scheme");
}

Bytes encode_secret_keys(const SecretKeys& k) {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(scheme_of(k)));
  std::visit(overloaded{
                 [&](const mht::Keys& keys) { w.raw(keys.x.to_bytes()).raw(keys.sig.ssk.to_bytes()); },
                 [&](const blinded::Keys& keys) {
                   w.raw(keys.x.to_bytes()).raw(keys.sig.ssk.to_bytes()).raw(keys.u.to_bytes());
                 },
                 [&](const gs::Keys& keys) {
                   w.raw(keys.x.to_bytes()).raw(keys.sig.ssk.to_bytes()).raw(keys.u.to_bytes());
                   w.raw(keys.ck.encode());
                 },
             },
             k);
  return std::move(w).take();
}

SecretKeys decode_secret_keys(ByteSpan bytes) {
  ByteReader r(bytes);
  const auto id = scheme_from_byte(r.u8());
  const auto x = Scalar::from_bytes(r.raw(kScalarBytes));
  const auto sig = sig_from(Scalar::from_bytes(r.raw(kScalarBytes)));
  SecretKeys out;
  switch (id) {
    case SchemeId::mht:
      out = mht::Keys{x, sig};
      break;
    case SchemeId::blinded:
      out = blinded::Keys{x, sig, G1::from_bytes(r.raw(kG1Bytes))};
      break;
    case SchemeId::gs: {
      const auto u = G1::from_bytes(r.raw(kG1Bytes));
      auto ck = gs::CommitmentKey::decode(r.raw(1 + 4 * kG1Bytes));
      if (!(ck.u1[0] == u)) throw DecodeError("secret keys: commitment key not based on u");
      out = gs::Keys{x, sig, u, std::move(ck)};
      break;
    }
  }
  r.expect_end();
  return out;
}

}  // namespace dic::scheme
