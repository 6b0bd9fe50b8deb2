#pragma once

#include <cstdint>
#include <vector>

#include "dic/bytes.hpp"
#include "dic/pairing.hpp"

namespace dic {

class Rng;

struct ChallengeEntry {
  std::uint64_t index;  // 1-based block index
  Scalar coeff;

  bool operator==(const ChallengeEntry&) const = default;
};

/// chal = {(i, nu_i)} for i in I, indices strictly increasing.
struct Challenge {
  std::vector<ChallengeEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<Scalar> coeffs() const;

  /// ProtocolError unless 1 <= c <= n and indices are strictly increasing in [1, n].
  void validate(std::uint64_t n) const;

  Bytes encode() const;
  static Challenge decode(ByteSpan bytes);

  bool operator==(const Challenge&) const = default;
};

inline std::uint64_t default_challenge_size(std::uint64_t n) { return n < 10 ? n : 10; }

/// Uniform c-subset of [1, n] with uniform coefficients. ArgumentError unless 1 <= c <= n.
Challenge sample_challenge(std::uint64_t n, std::uint64_t c, Rng& rng);

/// As sample_challenge, conditioned on `required` being in the index set.
Challenge sample_challenge_including(std::uint64_t n, std::uint64_t c, std::uint64_t required, Rng& rng);

}  // namespace dic
