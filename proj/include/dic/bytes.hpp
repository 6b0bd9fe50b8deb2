#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dic {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

Bytes to_bytes(std::string_view s);
std::string to_hex(ByteSpan data);
Bytes from_hex(std::string_view hex);

Digest sha256(ByteSpan data);

// Appends big-endian integers and raw byte runs.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint8_t v);
  ByteWriter& u32(std::uint32_t v);
  ByteWriter& u64(std::uint64_t v);
  ByteWriter& raw(ByteSpan data);
  // u32 length prefix followed by the data.
  ByteWriter& blob(ByteSpan data);

  template <std::size_t N>
  ByteWriter& raw(const std::array<std::uint8_t, N>& a) {
    return raw(ByteSpan(a.data(), a.size()));
  }

  const Bytes& bytes() const& { return out_; }
  Bytes take() && { return std::move(out_); }

 private:
  Bytes out_;
};

// Cursor over an immutable buffer; every read throws DecodeError on underrun.
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  ByteSpan raw(std::size_t n);
  ByteSpan blob();

  template <std::size_t N>
  std::array<std::uint8_t, N> fixed() {
    std::array<std::uint8_t, N> out{};
    auto s = raw(N);
    std::copy(s.begin(), s.end(), out.begin());
    return out;
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  // Throws DecodeError if unread bytes remain.
  void expect_end() const;

 private:
  ByteSpan data_;
  std::size_t pos_ = 0;
};

}  // namespace dic
