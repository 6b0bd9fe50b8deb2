#include "dic/tag.hpp"

#include <array>

#include "dic/errors.hpp"
#include "dic/rng.hpp"

namespace dic {

std::string_view scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::mht:
      return "mht";
    case SchemeId::blinded:
      return "blinded";
    case SchemeId::gs:
      return "gs";
  }
  return "unknown";
}

SchemeId parse_scheme(std::string_view name) {
  if (name == "mht") return SchemeId::mht;
  if (name == "blinded") return SchemeId::blinded;
  if (name == "gs") return SchemeId::gs;
  throw ArgumentError("unknown scheme: " + std::string(name));
}

SchemeId scheme_from_byte(std::uint8_t b) {
  if (b < 1 || b > 3) throw DecodeError("unknown scheme id");
  return static_cast<SchemeId>(b);
}

SigKeyPair SigKeyPair::generate(Rng& rng) {
  SigKeyPair kp;
  kp.ssk = Scalar::random_nonzero(rng);
  kp.spk = G2::generator().pow(kp.ssk);
  return kp;
}

G1 ssig_sign(const Scalar& ssk, ByteSpan payload) {
  return hash_to_g1(kTagSignature, payload).pow(ssk);
}

bool ssig_verify(const G2& spk, ByteSpan payload, const G1& sig) {
  if (spk.is_identity() || sig.is_identity()) return false;
  // e(sig, g) * e(H(payload), spk)^-1 == 1
  const std::array<std::pair<G1, G2>, 2> terms = {
      std::pair{sig, G2::generator()},
      std::pair{hash_to_g1(kTagSignature, payload).inverse(), spk}};
  return pairing_product(terms).is_one();
}

FileTag FileTag::issue(SchemeId scheme, ByteSpan name, std::optional<std::uint64_t> n,
                       std::optional<G1> u, const Scalar& ssk) {
  FileTag t;
  t.scheme = scheme;
  t.name.assign(name.begin(), name.end());
  t.n = n;
  t.u = u;
  t.sig = ssig_sign(ssk, t.payload());
  return t;
}

Bytes FileTag::payload() const {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(scheme)).raw(name);
  if (n) w.u64(*n);
  if (u) w.raw(u->to_bytes());
  return std::move(w).take();
}

bool FileTag::verify(const G2& spk) const {
  const bool shape_ok = scheme == SchemeId::mht ? (n && u) : (!n && !u);
  return shape_ok && ssig_verify(spk, payload(), sig);
}

Bytes FileTag::encode() const {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(scheme)).blob(name);
  if (scheme == SchemeId::mht) {
    if (!n || !u) throw ArgumentError("MHT tag requires n and u");
    w.u64(*n).raw(u->to_bytes());
  }
  w.raw(sig.to_bytes());
  return std::move(w).take();
}

FileTag FileTag::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  FileTag t;
  t.scheme = scheme_from_byte(r.u8());
  auto name = r.blob();
  t.name.assign(name.begin(), name.end());
  if (t.scheme == SchemeId::mht) {
    t.n = r.u64();
    t.u = G1::from_bytes(r.raw(kG1Bytes));
  }
  t.sig = G1::from_bytes(r.raw(kG1Bytes));
  r.expect_end();
  return t;
}

}  // namespace dic
