#pragma once

// Wire format. A frame is a 4-byte big-endian length followed by the envelope
// version || scheme || type || body.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dic/scheme.hpp"

namespace dic::wire {

inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kMaxBody = 16u << 20;
inline constexpr std::size_t kEnvelopeHeader = 3;
inline constexpr std::size_t kFrameHeader = 4;

enum class MessageType : std::uint8_t {
  upload = 1,
  upload_ack = 2,
  get_tag = 3,
  tag = 4,
  challenge = 5,
  response = 6,
  verdict = 7,
  error = 8,
};

std::string_view message_name(MessageType t);

struct Envelope {
  std::uint8_t version = kVersion;
  SchemeId scheme = SchemeId::mht;
  MessageType type = MessageType::error;
  Bytes body;

  Bytes encode() const;
  /// DecodeError on a bad version, scheme or type, or an oversized body.
  static Envelope decode(ByteSpan bytes);
  bool operator==(const Envelope&) const = default;
};

/// DecodeError if the body exceeds kMaxBody.
Bytes frame_encode(const Envelope& env);
/// `frame` must hold exactly one frame.
Envelope frame_decode(ByteSpan frame);
/// Envelope length announced by a 4-byte header; DecodeError above the limit.
std::size_t frame_payload_length(ByteSpan header);

// ---- message bodies --------------------------------------------------------

struct UploadBody {
  scheme::PublicKey pk;
  scheme::StoredBundle bundle;

  Bytes encode() const;
  static UploadBody decode(SchemeId scheme, ByteSpan bytes);
};

/// Tag response: the signed tag plus the stored block count.
struct TagBody {
  FileTag tag;
  std::uint64_t n = 0;

  Bytes encode() const;
  static TagBody decode(ByteSpan bytes);
};

struct ChallengeBody {
  Bytes name;
  Challenge chal;

  Bytes encode() const;
  static ChallengeBody decode(ByteSpan bytes);
};

struct VerdictBody {
  bool accepted = false;
  VerifyStatus status = VerifyStatus::accepted;

  Bytes encode() const;
  static VerdictBody decode(ByteSpan bytes);
};

/// Shared codec for the per-file pieces also used by the store.
void encode_blocks(ByteWriter& w, const std::vector<Scalar>& blocks);
std::vector<Scalar> decode_blocks(ByteReader& r, std::uint64_t n);
void encode_points(ByteWriter& w, const std::vector<G1>& points);
std::vector<G1> decode_points(ByteReader& r, std::uint64_t n);

Envelope make_error(SchemeId scheme, std::string_view message);
Envelope make(SchemeId scheme, MessageType type, Bytes body);

}  // namespace dic::wire
