#include <doctest.h>

#include <blst.h>

#include <set>

#include "dic/errors.hpp"
#include "dic/kernels.hpp"
#include "dic/pairing.hpp"
#include "dic/rng.hpp"
#include "oracles.hpp"

using namespace dic;

namespace {

std::string affine_x_hex(const G1& p) {
  const auto a = p.affine();
  std::array<std::uint8_t, 96> raw{};
  blst_p1_affine_serialize(raw.data(), &a);
  return to_hex(ByteSpan(raw.data(), 48));
}

}  // namespace

TEST_CASE("pairing context") {
  const auto& ctx = pairing_context();
  CHECK(ctx.curve_id == "BLS12-381");
  CHECK(to_hex(ctx.order) == "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
  CHECK_FALSE(ctx.g1.is_identity());
  CHECK_FALSE(ctx.g.is_identity());
  CHECK_FALSE(pair(ctx.g1, ctx.g).is_one());
}

TEST_CASE("scalar field") {
  Rng rng(11);
  const Scalar a = Scalar::random(rng), b = Scalar::random(rng);
  CHECK(a + b - b == a);
  CHECK(a * Scalar::from_u64(1) == a);
  CHECK(a + (-a) == Scalar());
  CHECK(Scalar::random_nonzero(rng) * Scalar::from_u64(3) * Scalar::from_u64(3).inverse() != Scalar());
  CHECK_THROWS_AS((void)Scalar().inverse(), ArgumentError);

  const auto order = pairing_context().order;
  CHECK_THROWS_AS((void)Scalar::from_bytes(order), DecodeError);
  CHECK(Scalar::reduce(order).is_zero());
  CHECK_THROWS_AS((void)Scalar::from_bytes(Bytes(31, 0)), DecodeError);
  CHECK(Scalar::from_bytes(a.to_bytes()) == a);

  Bytes wide(64);
  rng.fill(wide);
  CHECK(Scalar::reduce(wide) == oracle::reduce_be(wide));
}

TEST_CASE("bilinearity") {
  const auto& ctx = pairing_context();
  CHECK(pair(G1::identity(), ctx.g).is_one());
  CHECK(pair(ctx.g1, G2::identity()).is_one());
  const Scalar two = Scalar::from_u64(2);
  CHECK(pair(ctx.g1.pow(two), ctx.g) == pair(ctx.g1, ctx.g).pow(two));

  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const G1 a = G1::random(rng);
    const G2 b = G2::random(rng);
    const Scalar s = Scalar::random(rng), t = Scalar::random(rng);
    REQUIRE(pair(a.pow(s), b.pow(t)) == pair(a, b).pow(s * t));
    REQUIRE(pair(ctx.g1.pow(s), ctx.g.pow(t)) == pair(ctx.g1.pow(t), ctx.g.pow(s)));
  }
}

TEST_CASE("pairing product matches single pairings") {
  Rng rng(13);
  std::vector<std::pair<G1, G2>> terms;
  GT expect;
  for (int k = 0; k < 20; ++k) {
    terms.emplace_back(G1::random(rng), G2::random(rng));
    expect *= pair(terms.back().first, terms.back().second);
    REQUIRE(pairing_product(terms) == expect);
  }
  terms.emplace_back(G1::identity(), G2::random(rng));
  terms.emplace_back(G1::random(rng), G2::identity());
  CHECK(pairing_product(terms) == expect);
  CHECK(pairing_product({}).is_one());
}

TEST_CASE("hash to G1") {
  const Bytes m = to_bytes("block");
  CHECK(hash_to_g1(kTagBlockHash, m) == hash_to_g1(kTagBlockHash, m));
  CHECK_FALSE(hash_to_g1(kTagBlockHash, m) == hash_to_g1(kTagMhtRoot, m));
  CHECK_FALSE(hash_to_g1(kTagBlockHash, m) == hash_to_g1(kTagBlockHash, to_bytes("blocl")));
  const G1 h = hash_to_g1(kTagSignature, m);
  CHECK(G1::from_bytes(h.to_bytes()) == h);
  CHECK_THROWS_AS((void)hash_to_g1("", m), ArgumentError);

  // RFC 9380 J.9.1 (BLS12381G1_XMD:SHA-256_SSWU_RO_)
  constexpr std::string_view dst = "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_";
  CHECK(affine_x_hex(hash_to_g1(dst, Bytes{})) ==
        "052926add2207b76ca4fa57a8734416c8dc95e24501772c814278700eed6d1e4e8cf62d9c09db0fac349612b759e79a1");
  CHECK(affine_x_hex(hash_to_g1(dst, to_bytes("abc"))) ==
        "03567bc5ef9c690c2ab2ecdf6a96ef1c139cc0b2f284dca0a9a7943388a49a3aee664ba5379a7655d3c68900be2f6903");
}

TEST_CASE("hash to scalar") {
  // RFC 9380 K.1
  CHECK(to_hex(oracle::expand_message_xmd({}, "QUUX-V01-CS02-with-expander-SHA256-128", 32)) ==
        "68a985b87eb6b46952128911f2a4412bbc302a9d759667f87f7a21d803f07235");

  Rng rng(14);
  for (int k = 0; k < 20; ++k) {
    Bytes msg(static_cast<std::size_t>(k * 7));
    rng.fill(msg);
    const Scalar s = hash_to_scalar(kTagBlindHash, msg);
    REQUIRE(s == hash_to_scalar(kTagBlindHash, msg));
    REQUIRE(s == oracle::reduce_be(oracle::expand_message_xmd(msg, kTagBlindHash, 48)));
  }
  CHECK_FALSE(hash_to_scalar(kTagBlindHash, Bytes{1}) == hash_to_scalar(kTagBlockHash, Bytes{1}));
  CHECK_THROWS_AS((void)hash_to_scalar("", Bytes{1}), ArgumentError);
}

TEST_CASE("msm") {
  Rng rng(15);
  const G1 b = G1::random(rng);
  const std::vector<G1> one{b};
  CHECK(msm(one, std::vector<Scalar>{Scalar::from_u64(1)}) == b);

  for (std::size_t len = 1; len <= 16; ++len) {
    std::vector<G1> bases;
    std::vector<Scalar> exps, zeros(len);
    for (std::size_t i = 0; i < len; ++i) {
      bases.push_back(G1::random(rng));
      exps.push_back(Scalar::random(rng));
    }
    REQUIRE(msm(bases, exps) == oracle::naive_msm(bases, exps));
    REQUIRE(msm(bases, zeros).is_identity());
  }
  std::vector<G1> two(2, b);
  CHECK_THROWS_AS((void)msm(two, std::vector<Scalar>(3)), ArgumentError);
  CHECK_THROWS_AS((void)msm({}, {}), ArgumentError);
}

TEST_CASE("canonical encodings") {
  const auto& ctx = pairing_context();
  const GT e = pair(ctx.g1, ctx.g);
  CHECK(G1::from_bytes(ctx.g1.to_bytes()) == ctx.g1);
  CHECK(G2::from_bytes(ctx.g.to_bytes()) == ctx.g);
  CHECK(GT::from_bytes(e.to_bytes()) == e);
  CHECK(G1::from_bytes(G1::identity().to_bytes()).is_identity());
  CHECK(G2::from_bytes(G2::identity().to_bytes()).is_identity());
  CHECK(GT::from_bytes(GT::one().to_bytes()).is_one());
  CHECK_THROWS_AS((void)G1::from_bytes(Bytes(47)), DecodeError);
  CHECK_THROWS_AS((void)GT::from_bytes(Bytes(kGtBytes)), DecodeError);

  // Every single-bit flip of an encoding either fails to decode or yields another element.
  const auto g1 = ctx.g1.to_bytes();
  for (std::size_t bit = 0; bit < g1.size() * 8; ++bit) {
    auto f = g1;
    f[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool same = false;
    try {
      same = G1::from_bytes(f) == ctx.g1;
    } catch (const DecodeError&) {
    }
    REQUIRE_FALSE(same);
  }
  const auto gt = e.to_bytes();
  for (std::size_t bit = 0; bit < gt.size() * 8; bit += 13) {
    auto f = gt;
    f[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool same = false;
    try {
      same = GT::from_bytes(f) == e;
    } catch (const DecodeError&) {
    }
    REQUIRE_FALSE(same);
  }
}

TEST_CASE("encodings are injective on random elements") {
  Rng rng(16);
  std::set<Bytes> s1, s2, st;
  for (int k = 0; k < 1000; ++k) {
    const G1 a = G1::random(rng);
    const G2 b = G2::random(rng);
    const GT c = GT::random(rng);
    const auto ea = a.to_bytes();
    const auto eb = b.to_bytes();
    const auto ec = c.to_bytes();
    REQUIRE(G1::from_bytes(ea) == a);
    REQUIRE(G2::from_bytes(eb) == b);
    REQUIRE(GT::from_bytes(ec) == c);
    s1.emplace(ea.begin(), ea.end());
    s2.emplace(eb.begin(), eb.end());
    st.emplace(ec.begin(), ec.end());
  }
  CHECK(s1.size() == 1000);
  CHECK(s2.size() == 1000);
  CHECK(st.size() == 1000);
}

TEST_CASE("sha256 known answer") {
  CHECK(to_hex(sha256(to_bytes("abc"))) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
