#pragma once

// Reference computations used only by tests. Each one avoids the code path it
// checks: MSM by repeated exponentiation, the GT matrix product by eight single
// pairings, the Merkle root by recursion over digests, expand_message_xmd
// straight from its definition.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "dic/bytes.hpp"
#include "dic/gs.hpp"
#include "dic/merkle.hpp"
#include "dic/pairing.hpp"

namespace oracle {

using namespace dic;

inline G1 naive_msm(std::span<const G1> bases, std::span<const Scalar> exps) {
  G1 acc;
  for (std::size_t i = 0; i < bases.size(); ++i) acc = acc * bases[i].pow(exps[i]);
  return acc;
}

inline gs::GtMatrix naive_bullet(const std::array<gs::G1Pair, 2>& x, const std::array<gs::G2Pair, 2>& y) {
  gs::GtMatrix m;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) m[j][k] = pair(x[0][j], y[0][k]) * pair(x[1][j], y[1][k]);
  }
  return m;
}

inline Digest merkle_root(std::vector<Digest> level) {
  while (level.size() > 1) {
    std::vector<Digest> up;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      Bytes buf{0x01};
      buf.insert(buf.end(), level[i].begin(), level[i].end());
      buf.insert(buf.end(), level[i + 1].begin(), level[i + 1].end());
      up.push_back(sha256(buf));
    }
    if (level.size() % 2 == 1) up.push_back(level.back());
    level = std::move(up);
  }
  return level.front();
}

inline Digest leaf_digest(std::uint64_t index, const G1& leaf) {
  Bytes buf{0x00};
  for (int s = 56; s >= 0; s -= 8) buf.push_back(static_cast<std::uint8_t>(index >> s));
  const auto enc = leaf.to_bytes();
  buf.insert(buf.end(), enc.begin(), enc.end());
  return sha256(buf);
}

// expand_message_xmd with SHA-256 (b_in_bytes 32, s_in_bytes 64).
inline Bytes expand_message_xmd(dic::ByteSpan msg, std::string_view dst, std::size_t len) {
  const std::size_t ell = (len + 31) / 32;
  Bytes dst_prime(dst.begin(), dst.end());
  dst_prime.push_back(static_cast<std::uint8_t>(dst.size()));
  Bytes b0_in(64, 0);
  b0_in.insert(b0_in.end(), msg.begin(), msg.end());
  b0_in.push_back(static_cast<std::uint8_t>(len >> 8));
  b0_in.push_back(static_cast<std::uint8_t>(len));
  b0_in.push_back(0);
  b0_in.insert(b0_in.end(), dst_prime.begin(), dst_prime.end());
  const Digest b0 = sha256(b0_in);

  Bytes out;
  Digest prev{};
  for (std::size_t i = 1; i <= ell; ++i) {
    Bytes in;
    for (std::size_t k = 0; k < 32; ++k) in.push_back(i == 1 ? b0[k] : static_cast<std::uint8_t>(b0[k] ^ prev[k]));
    in.push_back(static_cast<std::uint8_t>(i));
    in.insert(in.end(), dst_prime.begin(), dst_prime.end());
    prev = sha256(in);
    out.insert(out.end(), prev.begin(), prev.end());
  }
  out.resize(len);
  return out;
}

// Big-endian integer mod p by Horner's rule in Scalar arithmetic.
inline Scalar reduce_be(dic::ByteSpan bytes) {
  const Scalar base = Scalar::from_u64(256);
  Scalar acc;
  for (const auto b : bytes) acc = acc * base + Scalar::from_u64(b);
  return acc;
}

}  // namespace oracle
