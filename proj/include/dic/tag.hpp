#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dic/bytes.hpp"
#include "dic/pairing.hpp"

namespace dic {

class Rng;

enum class SchemeId : std::uint8_t { mht = 1, blinded = 2, gs = 3 };

std::string_view scheme_name(SchemeId id);
/// "mht" | "blinded" | "gs"; ArgumentError otherwise.
SchemeId parse_scheme(std::string_view name);
/// DecodeError for bytes outside the closed set.
SchemeId scheme_from_byte(std::uint8_t b);

/// Signing key pair of the tag signature scheme (BLS-style over the same
/// pairing groups): sig = H_ssig(payload)^ssk, spk = g^ssk.
struct SigKeyPair {
  Scalar ssk;
  G2 spk;

  static SigKeyPair generate(Rng& rng);
};

G1 ssig_sign(const Scalar& ssk, ByteSpan payload);
bool ssig_verify(const G2& spk, ByteSpan payload, const G1& sig);

/// Signed public metadata for a stored file. The MHT tag carries (n, u); the
/// blinded and GS tags sign the name only.
struct FileTag {
  SchemeId scheme = SchemeId::mht;
  Bytes name;
  std::optional<std::uint64_t> n;
  std::optional<G1> u;
  G1 sig;

  static FileTag issue(SchemeId scheme, ByteSpan name, std::optional<std::uint64_t> n,
                       std::optional<G1> u, const Scalar& ssk);

  /// scheme_id || name || BE64(n) || encode(u), the last two only when present.
  Bytes payload() const;
  bool verify(const G2& spk) const;

  Bytes encode() const;
  static FileTag decode(ByteSpan bytes);

  bool operator==(const FileTag&) const = default;
};

}  // namespace dic
