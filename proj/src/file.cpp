#include "dic/file.hpp"

#include <algorithm>

#include "dic/errors.hpp"

namespace dic {

namespace {

Scalar block_from_chunk(ByteSpan chunk) {
  Scalar::Encoding enc{};
  std::copy(chunk.begin(), chunk.end(), enc.end() - static_cast<std::ptrdiff_t>(chunk.size()));
  return Scalar::from_bytes(enc);
}

}  // namespace

BlockVector chunk_file(ByteSpan data, ByteSpan name) {
  if (data.empty()) throw ArgumentError("chunk_file: empty input");
  BlockVector bv;
  bv.name.assign(name.begin(), name.end());
  for (std::size_t off = 0; off < data.size(); off += kBlockBytes) {
    std::array<std::uint8_t, kBlockBytes> chunk{};
    const std::size_t len = std::min(kBlockBytes, data.size() - off);
    std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(off), len, chunk.begin());
    bv.blocks.push_back(block_from_chunk(chunk));
  }
  bv.blocks.push_back(Scalar::from_u64(data.size()));
  return bv;
}

Bytes reassemble_file(const BlockVector& bv) {
  if (bv.blocks.size() < 2) throw FormatError("reassemble_file: missing data or length block");

  auto is_short = [](const Scalar::Encoding& enc, std::size_t lead) {
    return std::all_of(enc.begin(), enc.begin() + static_cast<std::ptrdiff_t>(lead),
                       [](std::uint8_t b) { return b == 0; });
  };

  const auto len_enc = bv.blocks.back().to_bytes();
  if (!is_short(len_enc, 24)) throw FormatError("reassemble_file: length block out of range");
  std::uint64_t length = 0;
  for (std::size_t i = 24; i < 32; ++i) length = length << 8 | len_enc[i];

  const std::size_t data_blocks = bv.blocks.size() - 1;
  if (length == 0 || length > data_blocks * kBlockBytes || length <= (data_blocks - 1) * kBlockBytes) {
    throw FormatError("reassemble_file: length block does not match block count");
  }

  Bytes out;
  out.reserve(data_blocks * kBlockBytes);
  for (std::size_t i = 0; i < data_blocks; ++i) {
    const auto enc = bv.blocks[i].to_bytes();
    if (enc[0] != 0) throw FormatError("reassemble_file: data block exceeds 31 bytes");
    out.insert(out.end(), enc.begin() + 1, enc.end());
  }
  if (!std::all_of(out.begin() + static_cast<std::ptrdiff_t>(length), out.end(),
                   [](std::uint8_t b) { return b == 0; })) {
    throw FormatError("reassemble_file: non-zero padding");
  }
  out.resize(length);
  return out;
}

}  // namespace dic
