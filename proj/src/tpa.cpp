#include "dic/tpa.hpp"

#include <algorithm>

#include "dic/errors.hpp"

namespace dic {

using wire::MessageType;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::valid: return "True";
    case Verdict::invalid: return "False";
    case Verdict::tag_invalid: return "tag_invalid";
  }
  return "?";
}

namespace {

std::string body_text(const wire::Envelope& env) { return std::string(env.body.begin(), env.body.end()); }

const G2& spk_of(const scheme::PublicKey& pk) {
  return std::visit([](const auto& k) -> const G2& { return k.spk; }, pk);
}

}  // namespace

AuditReport tpa_audit(Transport& t, const scheme::PublicKey& pk, ByteSpan name, std::uint64_t c, Rng& rng) {
  if (c == 0) throw ArgumentError("audit: challenge size must be at least 1");
  const SchemeId id = scheme::scheme_of(pk);
  AuditReport rep;
  rep.status = VerifyStatus::tag_invalid;

  const auto tag_reply = t.roundtrip(wire::make(id, MessageType::get_tag, Bytes(name.begin(), name.end())));
  if (tag_reply.type != MessageType::tag) {
    rep.verdict = Verdict::tag_invalid;
    rep.detail = tag_reply.type == MessageType::error ? body_text(tag_reply) : "unexpected reply to get_tag";
    return rep;
  }
  wire::TagBody tb;
  try {
    tb = wire::TagBody::decode(tag_reply.body);
  } catch (const DecodeError& e) {
    rep.verdict = Verdict::tag_invalid;
    rep.detail = e.what();
    return rep;
  }
  const bool name_ok = std::equal(tb.tag.name.begin(), tb.tag.name.end(), name.begin(), name.end());
  if (tb.tag.scheme != id || !name_ok || !tb.tag.verify(spk_of(pk))) {
    rep.verdict = Verdict::tag_invalid;
    return rep;
  }
  // The MHT tag signs n; the other schemes take it from the server's metadata.
  rep.n = id == SchemeId::mht ? *tb.tag.n : tb.n;
  if (rep.n == 0) {
    rep.verdict = Verdict::tag_invalid;
    rep.detail = "zero block count";
    return rep;
  }
  rep.c = std::min(rep.n, c);
  const auto chal = sample_challenge(rep.n, rep.c, rng);

  const auto reply = t.roundtrip(
      wire::make(id, MessageType::challenge, wire::ChallengeBody{Bytes(name.begin(), name.end()), chal}.encode()));
  rep.verdict = Verdict::invalid;
  rep.status = VerifyStatus::malformed;
  if (reply.type != MessageType::response) {
    rep.detail = reply.type == MessageType::error ? body_text(reply) : "unexpected reply to challenge";
    return rep;
  }
  scheme::Proof proof;
  try {
    proof = scheme::decode_proof(id, reply.body);
  } catch (const DecodeError& e) {
    rep.detail = e.what();
    return rep;
  }
  const auto v = scheme::verify(pk, tb.tag, rep.n, chal, proof);
  rep.status = v.status;
  rep.verdict = v ? Verdict::valid : Verdict::invalid;
  return rep;
}

void upload_file(Transport& t, const scheme::SecretKeys& keys, BlockVector file, Rng& rng) {
  const auto pk = scheme::public_key(keys);
  const auto id = scheme::scheme_of(keys);
  wire::UploadBody body{pk, scheme::token_gen(keys, std::move(file), rng)};
  const auto reply = t.roundtrip(wire::make(id, MessageType::upload, body.encode()));
  if (reply.type == MessageType::error) throw ProtocolError("upload refused: " + body_text(reply));
  if (reply.type != MessageType::upload_ack) throw ProtocolError("upload: unexpected reply");
}

}  // namespace dic
