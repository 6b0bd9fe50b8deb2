#include "dic/envelope.hpp"

#include "dic/errors.hpp"

namespace dic::wire {

std::string_view message_name(MessageType t) {
  switch (t) {
    case MessageType::upload: return "upload";
    case MessageType::upload_ack: return "upload_ack";
    case MessageType::get_tag: return "get_tag";
    case MessageType::tag: return "tag";
    case MessageType::challenge: return "challenge";
    case MessageType::response: return "response";
    case MessageType::verdict: return "verdict";
    case MessageType::error: return "error";
  }
  return "?";
}

Bytes Envelope::encode() const {
  if (body.size() > kMaxBody) throw DecodeError("envelope: body exceeds 16 MiB");
  ByteWriter w;
  w.u8(version).u8(static_cast<std::uint8_t>(scheme)).u8(static_cast<std::uint8_t>(type)).raw(body);
  return std::move(w).take();
}

Envelope Envelope::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  Envelope env;
  env.version = r.u8();
  if (env.version != kVersion) throw DecodeError("envelope: unsupported version");
  env.scheme = scheme_from_byte(r.u8());
  const auto type = r.u8();
  if (type < 1 || type > 8) throw DecodeError("envelope: unknown message type");
  env.type = static_cast<MessageType>(type);
  if (r.remaining() > kMaxBody) throw DecodeError("envelope: body exceeds 16 MiB");
  const auto body = r.raw(r.remaining());
  env.body.assign(body.begin(), body.end());
  return env;
}

Bytes frame_encode(const Envelope& env) {
  const auto payload = env.encode();
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(payload.size())).raw(payload);
  return std::move(w).take();
}

std::size_t frame_payload_length(ByteSpan header) {
  ByteReader r(header);
  const std::size_t len = r.u32();
  r.expect_end();
  if (len > kMaxBody + kEnvelopeHeader) throw DecodeError("frame: length exceeds limit");
  if (len < kEnvelopeHeader) throw DecodeError("frame: length below envelope header");
  return len;
}

Envelope frame_decode(ByteSpan frame) {
  if (frame.size() < kFrameHeader) throw DecodeError("frame: truncated header");
  const auto len = frame_payload_length(frame.first(kFrameHeader));
  const auto rest = frame.subspan(kFrameHeader);
  if (rest.size() < len) throw DecodeError("frame: truncated payload");
  if (rest.size() > len) throw DecodeError("frame: length prefix does not match payload");
  return Envelope::decode(rest);
}

// ---- bodies ----------------------------------------------------------------

void encode_blocks(ByteWriter& w, const std::vector<Scalar>& blocks) {
  for (const auto& m : blocks) w.raw(m.to_bytes());
}

std::vector<Scalar> decode_blocks(ByteReader& r, std::uint64_t n) {
  if (n > r.remaining() / kScalarBytes) throw DecodeError("block count exceeds payload");
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Scalar::from_bytes(r.raw(kScalarBytes)));
  return out;
}

void encode_points(ByteWriter& w, const std::vector<G1>& points) {
  for (const auto& p : points) w.raw(p.to_bytes());
}

std::vector<G1> decode_points(ByteReader& r, std::uint64_t n) {
  if (n > r.remaining() / kG1Bytes) throw DecodeError("point count exceeds payload");
  std::vector<G1> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(G1::from_bytes(r.raw(kG1Bytes)));
  return out;
}

Bytes UploadBody::encode() const {
  ByteWriter w;
  w.blob(scheme::encode_public_key(pk)).blob(bundle.tag.encode()).blob(bundle.file.name);
  w.u64(bundle.file.n());
  encode_blocks(w, bundle.file.blocks);
  w.u64(bundle.sigma.size());
  encode_points(w, bundle.sigma);
  if (bundle.scheme() == SchemeId::mht) {
    if (!bundle.tree || !bundle.root_sig) throw ArgumentError("upload: MHT bundle lacks tree");
    w.blob(bundle.tree->encode()).raw(bundle.root_sig->to_bytes());
  }
  return std::move(w).take();
}

UploadBody UploadBody::decode(SchemeId scheme, ByteSpan bytes) {
  ByteReader r(bytes);
  UploadBody out;
  out.pk = scheme::decode_public_key(r.blob());
  out.bundle.tag = FileTag::decode(r.blob());
  if (scheme::scheme_of(out.pk) != scheme || out.bundle.tag.scheme != scheme) {
    throw DecodeError("upload: scheme mismatch");
  }
  const auto name = r.blob();
  out.bundle.file.name.assign(name.begin(), name.end());
  out.bundle.file.blocks = decode_blocks(r, r.u64());
  out.bundle.sigma = decode_points(r, r.u64());
  if (scheme == SchemeId::mht) {
    out.bundle.tree = mht::MerkleTree::decode(r.blob());
    out.bundle.root_sig = G1::from_bytes(r.raw(kG1Bytes));
  }
  r.expect_end();
  return out;
}

Bytes TagBody::encode() const {
  ByteWriter w;
  w.blob(tag.encode()).u64(n);
  return std::move(w).take();
}

TagBody TagBody::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  TagBody out;
  out.tag = FileTag::decode(r.blob());
  out.n = r.u64();
  r.expect_end();
  return out;
}

Bytes ChallengeBody::encode() const {
  ByteWriter w;
  w.blob(name).raw(chal.encode());
  return std::move(w).take();
}

ChallengeBody ChallengeBody::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  ChallengeBody out;
  const auto name = r.blob();
  out.name.assign(name.begin(), name.end());
  out.chal = Challenge::decode(r.raw(r.remaining()));
  return out;
}

Bytes VerdictBody::encode() const {
  ByteWriter w;
  w.u8(accepted).u8(static_cast<std::uint8_t>(status));
  return std::move(w).take();
}

VerdictBody VerdictBody::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  VerdictBody out;
  const auto a = r.u8();
  const auto s = r.u8();
  r.expect_end();
  if (a > 1 || s > static_cast<std::uint8_t>(VerifyStatus::equation_failed)) throw DecodeError("verdict: bad value");
  out.accepted = a == 1;
  out.status = static_cast<VerifyStatus>(s);
  return out;
}

Envelope make_error(SchemeId scheme, std::string_view message) {
  return make(scheme, MessageType::error, to_bytes(message));
}

Envelope make(SchemeId scheme, MessageType type, Bytes body) { return {kVersion, scheme, type, std::move(body)}; }

}  // namespace dic::wire
