#include "dic/pairing.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

#include <blst.h>

#include "dic/errors.hpp"
#include "dic/rng.hpp"

namespace dic {

namespace {

// r = 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001
constexpr Scalar::Encoding kOrder = {
    0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8,
    0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe,
    0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};

constexpr std::size_t kOrderBits = 255;

const std::uint8_t* tag_ptr(std::string_view tag) {
  return reinterpret_cast<const std::uint8_t*>(tag.data());
}

}  // namespace

// ---- Scalar ----------------------------------------------------------------

Scalar::Scalar() { std::memset(&v_, 0, sizeof v_); }

Scalar Scalar::from_u64(std::uint64_t v) {
  const std::uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar s;
  blst_fr_from_uint64(&s.v_, limbs);
  return s;
}

Scalar Scalar::from_bytes(ByteSpan bytes) {
  if (bytes.size() != kScalarBytes) throw DecodeError("scalar: expected 32 bytes");
  blst_scalar raw;
  blst_scalar_from_bendian(&raw, bytes.data());
  if (!blst_scalar_fr_check(&raw)) throw DecodeError("scalar: value not below group order");
  Scalar s;
  blst_fr_from_scalar(&s.v_, &raw);
  return s;
}

Scalar Scalar::reduce(ByteSpan bytes) {
  blst_scalar raw;
  std::memset(&raw, 0, sizeof raw);
  if (!bytes.empty()) blst_scalar_from_be_bytes(&raw, bytes.data(), bytes.size());
  Scalar s;
  blst_fr_from_scalar(&s.v_, &raw);
  return s;
}

Scalar Scalar::random(Rng& rng) {
  std::array<std::uint8_t, 64> wide{};
  rng.fill(wide);
  return reduce(wide);
}

Scalar Scalar::random_nonzero(Rng& rng) {
  for (;;) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

Scalar::Encoding Scalar::to_bytes() const {
  blst_scalar raw;
  blst_scalar_from_fr(&raw, &v_);
  Encoding out{};
  blst_bendian_from_scalar(out.data(), &raw);
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  blst_fr_add(&r.v_, &v_, &o.v_);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  blst_fr_sub(&r.v_, &v_, &o.v_);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  blst_fr_mul(&r.v_, &v_, &o.v_);
  return r;
}

Scalar Scalar::operator-() const { return Scalar() - *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArgumentError("scalar: inverse of zero");
  Scalar r;
  blst_fr_eucl_inverse(&r.v_, &v_);
  return r;
}

bool Scalar::is_zero() const { return *this == Scalar(); }

bool Scalar::operator==(const Scalar& o) const {
  return std::memcmp(&v_, &o.v_, sizeof v_) == 0;
}

blst_scalar Scalar::le_scalar() const {
  blst_scalar raw;
  blst_scalar_from_fr(&raw, &v_);
  return raw;
}

// ---- G1 --------------------------------------------------------------------

G1::G1() { std::memset(&p_, 0, sizeof p_); }

G1 G1::generator() { return G1(*blst_p1_generator()); }

G1 G1::random(Rng& rng) { return generator().pow(Scalar::random(rng)); }

G1 G1::from_bytes(ByteSpan bytes) {
  if (bytes.size() != kG1Bytes) throw DecodeError("G1: expected 48 bytes");
  blst_p1_affine a;
  if (blst_p1_uncompress(&a, bytes.data()) != BLST_SUCCESS) throw DecodeError("G1: invalid encoding");
  if (!blst_p1_affine_in_g1(&a)) throw DecodeError("G1: point not in prime-order subgroup");
  blst_p1 p;
  blst_p1_from_affine(&p, &a);
  G1 out(p);
  auto again = out.to_bytes();
  if (!std::equal(again.begin(), again.end(), bytes.begin())) throw DecodeError("G1: non-canonical encoding");
  return out;
}

G1 G1::operator*(const G1& o) const {
  G1 r;
  blst_p1_add_or_double(&r.p_, &p_, &o.p_);
  return r;
}

G1& G1::operator*=(const G1& o) {
  blst_p1_add_or_double(&p_, &p_, &o.p_);
  return *this;
}

G1 G1::pow(const Scalar& s) const {
  auto k = s.le_scalar();
  G1 r;
  blst_p1_mult(&r.p_, &p_, k.b, kOrderBits);
  return r;
}

G1 G1::inverse() const {
  G1 r(*this);
  blst_p1_cneg(&r.p_, true);
  return r;
}

bool G1::is_identity() const { return blst_p1_is_inf(&p_); }

bool G1::operator==(const G1& o) const { return blst_p1_is_equal(&p_, &o.p_); }

G1::Encoding G1::to_bytes() const {
  Encoding out{};
  blst_p1_compress(out.data(), &p_);
  return out;
}

blst_p1_affine G1::affine() const {
  blst_p1_affine a;
  blst_p1_to_affine(&a, &p_);
  return a;
}

// ---- G2 --------------------------------------------------------------------

G2::G2() { std::memset(&p_, 0, sizeof p_); }

G2 G2::generator() { return G2(*blst_p2_generator()); }

G2 G2::random(Rng& rng) { return generator().pow(Scalar::random(rng)); }

G2 G2::from_bytes(ByteSpan bytes) {
  if (bytes.size() != kG2Bytes) throw DecodeError("G2: expected 96 bytes");
  blst_p2_affine a;
  if (blst_p2_uncompress(&a, bytes.data()) != BLST_SUCCESS) throw DecodeError("G2: invalid encoding");
  if (!blst_p2_affine_in_g2(&a)) throw DecodeError("G2: point not in prime-order subgroup");
  blst_p2 p;
  blst_p2_from_affine(&p, &a);
  G2 out(p);
  auto again = out.to_bytes();
  if (!std::equal(again.begin(), again.end(), bytes.begin())) throw DecodeError("G2: non-canonical encoding");
  return out;
}

G2 G2::operator*(const G2& o) const {
  G2 r;
  blst_p2_add_or_double(&r.p_, &p_, &o.p_);
  return r;
}

G2& G2::operator*=(const G2& o) {
  blst_p2_add_or_double(&p_, &p_, &o.p_);
  return *this;
}

G2 G2::pow(const Scalar& s) const {
  auto k = s.le_scalar();
  G2 r;
  blst_p2_mult(&r.p_, &p_, k.b, kOrderBits);
  return r;
}

G2 G2::inverse() const {
  G2 r(*this);
  blst_p2_cneg(&r.p_, true);
  return r;
}

bool G2::is_identity() const { return blst_p2_is_inf(&p_); }

bool G2::operator==(const G2& o) const { return blst_p2_is_equal(&p_, &o.p_); }

G2::Encoding G2::to_bytes() const {
  Encoding out{};
  blst_p2_compress(out.data(), &p_);
  return out;
}

blst_p2_affine G2::affine() const {
  blst_p2_affine a;
  blst_p2_to_affine(&a, &p_);
  return a;
}

// ---- GT --------------------------------------------------------------------

GT::GT() : v_(*blst_fp12_one()) {}

GT GT::from_bytes(ByteSpan bytes) {
  if (bytes.size() != kGtBytes) throw DecodeError("GT: expected 576 bytes");
  blst_fp12 v;
  const std::uint8_t* in = bytes.data();
  for (auto& fp6 : v.fp6) {
    for (auto& fp2 : fp6.fp2) {
      for (auto& fp : fp2.fp) {
        blst_fp_from_bendian(&fp, in);
        std::uint8_t check[48];
        blst_bendian_from_fp(check, &fp);
        if (std::memcmp(check, in, 48) != 0) throw DecodeError("GT: non-canonical coordinate");
        in += 48;
      }
    }
  }
  if (!blst_fp12_in_group(&v)) throw DecodeError("GT: element not in target subgroup");
  return GT(v);
}

GT GT::random(Rng& rng) {
  return pair(G1::generator(), G2::generator()).pow(Scalar::random(rng));
}

GT GT::operator*(const GT& o) const {
  GT r;
  blst_fp12_mul(&r.v_, &v_, &o.v_);
  return r;
}

GT& GT::operator*=(const GT& o) {
  blst_fp12_mul(&v_, &v_, &o.v_);
  return *this;
}

GT GT::pow(const Scalar& s) const {
  auto k = s.le_scalar();
  GT acc;
  bool started = false;
  for (int bit = static_cast<int>(kOrderBits) - 1; bit >= 0; --bit) {
    if (started) blst_fp12_cyclotomic_sqr(&acc.v_, &acc.v_);
    if ((k.b[bit / 8] >> (bit % 8)) & 1) {
      if (started) {
        blst_fp12_mul(&acc.v_, &acc.v_, &v_);
      } else {
        acc.v_ = v_;
        started = true;
      }
    }
  }
  return acc;
}

GT GT::inverse() const {
  // Unitary elements: the inverse is the conjugate.
  GT r(*this);
  blst_fp12_conjugate(&r.v_);
  return r;
}

bool GT::is_one() const { return blst_fp12_is_one(&v_); }

bool GT::operator==(const GT& o) const { return blst_fp12_is_equal(&v_, &o.v_); }

GT::Encoding GT::to_bytes() const {
  Encoding out{};
  std::uint8_t* p = out.data();
  for (const auto& fp6 : v_.fp6) {
    for (const auto& fp2 : fp6.fp2) {
      for (const auto& fp : fp2.fp) {
        blst_bendian_from_fp(p, &fp);
        p += 48;
      }
    }
  }
  return out;
}

// ---- pairing & oracles -----------------------------------------------------

const PairingContext& pairing_context() {
  static const PairingContext ctx{"BLS12-381", kOrder, G1::generator(), G2::generator()};
  return ctx;
}

GT pair(const G1& a, const G2& b) {
  if (a.is_identity() || b.is_identity()) return GT::one();
  auto pa = a.affine();
  auto pb = b.affine();
  blst_fp12 ml, out;
  blst_miller_loop(&ml, &pb, &pa);
  blst_final_exp(&out, &ml);
  return GT(out);
}

GT pairing_product(std::span<const std::pair<G1, G2>> terms) {
  std::vector<blst_p1_affine> ps;
  std::vector<blst_p2_affine> qs;
  ps.reserve(terms.size());
  qs.reserve(terms.size());
  for (const auto& [a, b] : terms) {
    if (a.is_identity() || b.is_identity()) continue;
    ps.push_back(a.affine());
    qs.push_back(b.affine());
  }
  if (ps.empty()) return GT::one();
  std::vector<const blst_p1_affine*> pp;
  std::vector<const blst_p2_affine*> qp;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    pp.push_back(&ps[i]);
    qp.push_back(&qs[i]);
  }
  blst_fp12 ml, out;
  blst_miller_loop_n(&ml, qp.data(), pp.data(), ps.size());
  blst_final_exp(&out, &ml);
  return GT(out);
}

G1 hash_to_g1(std::string_view domain_tag, ByteSpan msg) {
  if (domain_tag.empty()) throw ArgumentError("hash_to_g1: empty domain tag");
  blst_p1 out;
  blst_hash_to_g1(&out, msg.data(), msg.size(), tag_ptr(domain_tag), domain_tag.size(), nullptr, 0);
  return G1(out);
}

Scalar hash_to_scalar(std::string_view domain_tag, ByteSpan msg) {
  if (domain_tag.empty()) throw ArgumentError("hash_to_scalar: empty domain tag");
  std::array<std::uint8_t, 48> wide{};
  blst_expand_message_xmd(wide.data(), wide.size(), msg.data(), msg.size(), tag_ptr(domain_tag),
                          domain_tag.size());
  return Scalar::reduce(wide);
}

G1 msm(std::span<const G1> bases, std::span<const Scalar> exps) {
  if (bases.size() != exps.size()) throw ArgumentError("msm: bases and exponents differ in length");
  if (bases.empty()) throw ArgumentError("msm: empty input");

  std::vector<blst_p1_affine> points;
  std::vector<blst_scalar> scalars;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].is_identity() || exps[i].is_zero()) continue;
    points.push_back(bases[i].affine());
    scalars.push_back(exps[i].le_scalar());
  }
  if (points.empty()) return G1::identity();
  if (points.size() < 4) {
    G1 acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
      blst_p1 p, t;
      blst_p1_from_affine(&p, &points[i]);
      blst_p1_mult(&t, &p, scalars[i].b, kOrderBits);
      acc *= G1(t);
    }
    return acc;
  }
  std::vector<const blst_p1_affine*> pp;
  std::vector<const std::uint8_t*> sp;
  for (std::size_t i = 0; i < points.size(); ++i) {
    pp.push_back(&points[i]);
    sp.push_back(scalars[i].b);
  }
  std::vector<limb_t> scratch(blst_p1s_mult_pippenger_scratch_sizeof(points.size()) / sizeof(limb_t) + 1);
  blst_p1 out;
  blst_p1s_mult_pippenger(&out, pp.data(), points.size(), sp.data(), kOrderBits, scratch.data());
  return G1(out);
}

}  // namespace dic
