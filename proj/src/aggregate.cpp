#include "dic/aggregate.hpp"

#include "dic/errors.hpp"
#include "dic/kernels.hpp"
#include "dic/verify_result.hpp"

namespace dic {

std::string_view status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::accepted:
      return "accepted";
    case VerifyStatus::tag_invalid:
      return "tag_invalid";
    case VerifyStatus::bad_challenge:
      return "bad_challenge";
    case VerifyStatus::malformed:
      return "malformed";
    case VerifyStatus::root_mismatch:
      return "root_mismatch";
    case VerifyStatus::root_signature_invalid:
      return "root_signature_invalid";
    case VerifyStatus::equation_failed:
      return "equation_failed";
  }
  return "unknown";
}

Aggregate aggregate(const BlockVector& file, std::span<const G1> sigma, const Challenge& chal) {
  if (sigma.size() != file.n()) throw ProtocolError("authenticator count does not match block count");
  chal.validate(file.n());
  Aggregate out;
  std::vector<G1> bases;
  bases.reserve(chal.size());
  for (const auto& e : chal.entries) {
    out.mu += e.coeff * file.block(e.index);
    bases.push_back(sigma[e.index - 1]);
  }
  out.sigma = kernels::msm(bases, chal.coeffs());
  return out;
}

}  // namespace dic
