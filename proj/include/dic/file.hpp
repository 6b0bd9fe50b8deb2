#pragma once

#include <cstddef>
#include <vector>

#include "dic/bytes.hpp"
#include "dic/pairing.hpp"

namespace dic {

// 31 bytes read big-endian is always below the 255-bit group order.
inline constexpr std::size_t kBlockBytes = 31;

/// A named file as a sequence of n >= 1 blocks m_1..m_n in Z_p.
struct BlockVector {
  Bytes name;
  std::vector<Scalar> blocks;

  std::size_t n() const { return blocks.size(); }
  /// 1-based block access.
  const Scalar& block(std::size_t i) const { return blocks.at(i - 1); }

  bool operator==(const BlockVector&) const = default;
};

/// Splits data into 31-byte blocks. The final data block is zero-padded and a
/// trailing block holding the original byte length (big-endian) is appended.
BlockVector chunk_file(ByteSpan data, ByteSpan name);

/// Inverse of chunk_file; FormatError when the padding or length block is
/// inconsistent.
Bytes reassemble_file(const BlockVector& bv);

}  // namespace dic
