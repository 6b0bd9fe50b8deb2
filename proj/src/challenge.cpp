#include "dic/challenge.hpp"

#include <algorithm>
#include <set>

#include "dic/errors.hpp"
#include "dic/rng.hpp"

namespace dic {

namespace {

// Floyd's algorithm: uniform k-subset of [1, n] not containing `excluded`
// (pass 0 to exclude nothing).
std::set<std::uint64_t> sample_subset(std::uint64_t n, std::uint64_t k, std::uint64_t excluded, Rng& rng) {
  // Sample from a compacted range of size m, then shift past the excluded index.
  const std::uint64_t m = excluded ? n - 1 : n;
  std::set<std::uint64_t> picked;
  for (std::uint64_t j = m - k + 1; j <= m; ++j) {
    std::uint64_t t = rng.below(j) + 1;
    if (!picked.insert(t).second) picked.insert(j);
  }
  if (!excluded) return picked;
  std::set<std::uint64_t> shifted;
  for (auto i : picked) shifted.insert(i >= excluded ? i + 1 : i);
  return shifted;
}

Challenge with_coeffs(const std::set<std::uint64_t>& indices, Rng& rng) {
  Challenge chal;
  for (auto i : indices) chal.entries.push_back({i, Scalar::random(rng)});
  return chal;
}

}  // namespace

std::vector<Scalar> Challenge::coeffs() const {
  std::vector<Scalar> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.coeff);
  return out;
}

void Challenge::validate(std::uint64_t n) const {
  if (entries.empty()) throw ProtocolError("challenge: empty index set");
  if (entries.size() > n) throw ProtocolError("challenge: more indices than blocks");
  std::uint64_t prev = 0;
  for (const auto& e : entries) {
    if (e.index < 1 || e.index > n) throw ProtocolError("challenge: index out of range");
    if (e.index <= prev) throw ProtocolError("challenge: indices not strictly increasing");
    prev = e.index;
  }
}

Bytes Challenge::encode() const {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(entries.size()));
  for (const auto& e : entries) w.u64(e.index).raw(e.coeff.to_bytes());
  return std::move(w).take();
}

Challenge Challenge::decode(ByteSpan bytes) {
  ByteReader r(bytes);
  const auto count = r.u32();
  if (count > r.remaining() / (8 + kScalarBytes)) throw DecodeError("challenge: count exceeds payload");
  Challenge chal;
  chal.entries.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    const auto index = r.u64();
    chal.entries.push_back({index, Scalar::from_bytes(r.raw(kScalarBytes))});
  }
  r.expect_end();
  return chal;
}

Challenge sample_challenge(std::uint64_t n, std::uint64_t c, Rng& rng) {
  if (c == 0 || c > n) throw ArgumentError("sample_challenge: need 1 <= c <= n");
  return with_coeffs(sample_subset(n, c, 0, rng), rng);
}

Challenge sample_challenge_including(std::uint64_t n, std::uint64_t c, std::uint64_t required, Rng& rng) {
  if (c == 0 || c > n) throw ArgumentError("sample_challenge: need 1 <= c <= n");
  if (required < 1 || required > n) throw ArgumentError("sample_challenge: required index out of range");
  auto indices = sample_subset(n, c - 1, required, rng);
  indices.insert(required);
  return with_coeffs(indices, rng);
}

}  // namespace dic
