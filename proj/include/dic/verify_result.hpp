#pragma once

#include <string_view>

namespace dic {

enum class VerifyStatus {
  accepted,
  tag_invalid,
  bad_challenge,
  malformed,
  root_mismatch,
  root_signature_invalid,
  equation_failed,
};

std::string_view status_name(VerifyStatus s);

/// Verifier decision plus the first check that failed.
struct VerifyResult {
  VerifyStatus status = VerifyStatus::accepted;

  explicit operator bool() const { return status == VerifyStatus::accepted; }
  std::string_view reason() const { return status_name(status); }
};

}  // namespace dic
