#pragma once

// The two client roles: the data owner uploads, the third-party auditor
// audits. The auditor only ever sees tags and proofs.

#include <string>
#include <string_view>

#include "dic/rng.hpp"
#include "dic/scheme.hpp"
#include "dic/transport.hpp"

namespace dic {

enum class Verdict { valid, invalid, tag_invalid };

/// "True" | "False" | "tag_invalid"
std::string_view verdict_name(Verdict v);

struct AuditReport {
  Verdict verdict = Verdict::invalid;
  VerifyStatus status = VerifyStatus::malformed;
  std::uint64_t n = 0;
  std::uint64_t c = 0;
  std::string detail;  // server error text, if any
};

/// Fetches and checks the tag (quitting with tag_invalid on any failure),
/// samples a challenge of size min(n, c), and verifies the response.
/// TransportError when the server is unreachable.
AuditReport tpa_audit(Transport& t, const scheme::PublicKey& pk, ByteSpan name, std::uint64_t c, Rng& rng);

/// Runs TokenGen and sends the record. ProtocolError if the server refuses it.
void upload_file(Transport& t, const scheme::SecretKeys& keys, BlockVector file, Rng& rng);

}  // namespace dic
