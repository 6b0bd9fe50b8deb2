#pragma once

// Pairing-group arithmetic over BLS12-381 (Type-3: no efficient map G2 -> G1).
// All groups are written multiplicatively: `a * b` is the group operation and
// `a.pow(s)` is exponentiation by a scalar.

#include <blst.h>

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "dic/bytes.hpp"

namespace dic {

class Rng;

inline constexpr std::size_t kScalarBytes = 32;
inline constexpr std::size_t kG1Bytes = 48;
inline constexpr std::size_t kG2Bytes = 96;
inline constexpr std::size_t kGtBytes = 576;

/// Element of Z_p, p the 255-bit prime group order.
class Scalar {
 public:
  using Encoding = std::array<std::uint8_t, kScalarBytes>;

  Scalar();  // zero

  static Scalar from_u64(std::uint64_t v);
  /// Canonical 32-byte big-endian encoding; values >= p are rejected.
  static Scalar from_bytes(ByteSpan bytes);
  /// Reduces an arbitrary-length big-endian integer mod p.
  static Scalar reduce(ByteSpan bytes);
  static Scalar random(Rng& rng);
  /// Uniform in Z_p \ {0}.
  static Scalar random_nonzero(Rng& rng);

  Encoding to_bytes() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  /// Throws ArgumentError on zero.
  Scalar inverse() const;

  bool is_zero() const;
  bool operator==(const Scalar& o) const;

  /// Little-endian bytes as consumed by blst's point multiplication.
  blst_scalar le_scalar() const;

 private:
  blst_fr v_;
};

class G1 {
 public:
  using Encoding = std::array<std::uint8_t, kG1Bytes>;

  G1();  // identity
  explicit G1(const blst_p1& p) : p_(p) {}

  static G1 identity() { return G1(); }
  static G1 generator();
  static G1 random(Rng& rng);
  /// Compressed encoding; rejects off-curve, non-subgroup and non-canonical input.
  static G1 from_bytes(ByteSpan bytes);

  G1 operator*(const G1& o) const;
  G1& operator*=(const G1& o);
  G1 operator/(const G1& o) const { return *this * o.inverse(); }
  G1 pow(const Scalar& s) const;
  G1 inverse() const;

  bool is_identity() const;
  bool operator==(const G1& o) const;

  Encoding to_bytes() const;
  blst_p1_affine affine() const;
  const blst_p1& raw() const { return p_; }

 private:
  blst_p1 p_;
};

class G2 {
 public:
  using Encoding = std::array<std::uint8_t, kG2Bytes>;

  G2();  // identity
  explicit G2(const blst_p2& p) : p_(p) {}

  static G2 identity() { return G2(); }
  static G2 generator();
  static G2 random(Rng& rng);
  static G2 from_bytes(ByteSpan bytes);

  G2 operator*(const G2& o) const;
  G2& operator*=(const G2& o);
  G2 operator/(const G2& o) const { return *this * o.inverse(); }
  G2 pow(const Scalar& s) const;
  G2 inverse() const;

  bool is_identity() const;
  bool operator==(const G2& o) const;

  Encoding to_bytes() const;
  blst_p2_affine affine() const;
  const blst_p2& raw() const { return p_; }

 private:
  blst_p2 p_;
};

/// Element of the order-p target subgroup of F_{p^12}^*.
class GT {
 public:
  using Encoding = std::array<std::uint8_t, kGtBytes>;

  GT();  // one
  explicit GT(const blst_fp12& v) : v_(v) {}

  static GT one() { return GT(); }
  /// Twelve 48-byte big-endian base-field coordinates; checks subgroup membership.
  static GT from_bytes(ByteSpan bytes);
  static GT random(Rng& rng);

  GT operator*(const GT& o) const;
  GT& operator*=(const GT& o);
  GT operator/(const GT& o) const { return *this * o.inverse(); }
  GT pow(const Scalar& s) const;
  GT inverse() const;

  bool is_one() const;
  bool operator==(const GT& o) const;

  Encoding to_bytes() const;
  const blst_fp12& raw() const { return v_; }

 private:
  blst_fp12 v_;
};

/// Group order, generators and curve name.
struct PairingContext {
  std::string_view curve_id;
  Scalar::Encoding order;  // big-endian p
  G1 g1;
  G2 g;
};

const PairingContext& pairing_context();

GT pair(const G1& a, const G2& b);

/// prod_i e(a_i, b_i) with one shared final exponentiation.
GT pairing_product(std::span<const std::pair<G1, G2>> terms);

// Random-oracle domain tags.
inline constexpr std::string_view kTagBlockHash = "DIC/H";
inline constexpr std::string_view kTagBlindHash = "DIC/h";
inline constexpr std::string_view kTagMhtRoot = "DIC/MHT";
inline constexpr std::string_view kTagSignature = "DIC/SSig";

/// RFC 9380 hash-to-curve (BLS12381G1_XMD:SHA-256_SSWU_RO_) with the tag as DST.
G1 hash_to_g1(std::string_view domain_tag, ByteSpan msg);
/// expand_message_xmd to 48 bytes, reduced mod p.
Scalar hash_to_scalar(std::string_view domain_tag, ByteSpan msg);

/// prod_i bases[i]^exps[i]; ArgumentError on empty input or length mismatch.
G1 msm(std::span<const G1> bases, std::span<const Scalar> exps);

}  // namespace dic
