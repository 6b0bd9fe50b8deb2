#pragma once

#include <span>

#include "dic/challenge.hpp"
#include "dic/file.hpp"
#include "dic/pairing.hpp"

namespace dic {

/// mu' = sum nu_i m_i and sigma = prod sigma_i^{nu_i} over the challenged set.
struct Aggregate {
  Scalar mu;
  G1 sigma;
};

/// ProtocolError if the challenge does not fit the file or authenticator count.
Aggregate aggregate(const BlockVector& file, std::span<const G1> sigma, const Challenge& chal);

}  // namespace dic
