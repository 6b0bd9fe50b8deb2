#include <doctest.h>

#include <array>

#include "dic/challenge.hpp"
#include "dic/errors.hpp"
#include "dic/file.hpp"
#include "dic/rng.hpp"
#include "dic/scheme.hpp"
#include "dic/tag.hpp"

using namespace dic;

namespace {

// Block value of a chunk read big-endian after left-padding to 32 bytes.
Scalar block_of(ByteSpan chunk) {
  Scalar::Encoding e{};
  std::copy(chunk.begin(), chunk.end(), e.begin() + 1);
  return Scalar::from_bytes(e);
}

}  // namespace

TEST_CASE("chunking follows the padding rule") {
  SUBCASE("31 zero bytes: one data block and the length block") {
    const auto bv = chunk_file(Bytes(31, 0), to_bytes("z"));
    REQUIRE(bv.n() == 2);
    CHECK(bv.block(1).is_zero());
    CHECK(bv.block(2) == Scalar::from_u64(31));
  }
  SUBCASE("62 bytes: two data blocks and the length block") {
    Bytes d(62);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<std::uint8_t>(0xa0 + i);
    const auto bv = chunk_file(d, to_bytes("f"));
    REQUIRE(bv.n() == 3);
    CHECK(bv.block(1) == block_of(ByteSpan(d).first(31)));
    CHECK(bv.block(2) == block_of(ByteSpan(d).subspan(31)));
    CHECK(bv.block(3) == Scalar::from_u64(62));
    CHECK(reassemble_file(bv) == d);
  }
  SUBCASE("partial last chunk is zero padded on the right") {
    Bytes d(40, 0x11);
    const auto bv = chunk_file(d, to_bytes("p"));
    REQUIRE(bv.n() == 3);
    Bytes last(31, 0);
    std::fill_n(last.begin(), 9, 0x11);
    CHECK(bv.block(2) == block_of(last));
    CHECK(bv.block(3) == Scalar::from_u64(40));
  }
  CHECK(chunk_file(Bytes{7}, to_bytes("n")).name == to_bytes("n"));
  CHECK_THROWS_AS((void)chunk_file(Bytes{}, to_bytes("e")), ArgumentError);
}

TEST_CASE("chunk and reassemble are inverse") {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    Bytes d(1 + rng.below(400));
    rng.fill(d);
    REQUIRE(reassemble_file(chunk_file(d, to_bytes("r"))) == d);
  }
}

TEST_CASE("reassemble rejects malformed block vectors") {
  CHECK_THROWS_AS((void)reassemble_file(BlockVector{}), FormatError);
  CHECK_THROWS_AS((void)reassemble_file(BlockVector{to_bytes("x"), {Scalar::from_u64(1)}}), FormatError);

  const auto good = chunk_file(Bytes(40, 0x22), to_bytes("t"));
  auto bad_pad = good;
  Bytes last(31, 0);
  std::fill_n(last.begin(), 9, 0x22);
  last[30] = 1;
  bad_pad.blocks[1] = block_of(last);
  CHECK_THROWS_AS((void)reassemble_file(bad_pad), FormatError);

  auto bad_len = good;
  bad_len.blocks.back() = Scalar::from_u64(100);
  CHECK_THROWS_AS((void)reassemble_file(bad_len), FormatError);
  bad_len.blocks.back() = Scalar::from_u64(31);
  CHECK_THROWS_AS((void)reassemble_file(bad_len), FormatError);

  auto wide = good;
  wide.blocks[0] = Scalar::from_u64(1) - Scalar::from_u64(2);
  CHECK_THROWS_AS((void)reassemble_file(wide), FormatError);
}

TEST_CASE("ssig") {
  Rng rng(22);
  const auto kp = SigKeyPair::generate(rng);
  CHECK(kp.spk == G2::generator().pow(kp.ssk));
  const Bytes msg = to_bytes("name||n||u");
  const G1 sig = ssig_sign(kp.ssk, msg);
  CHECK(ssig_verify(kp.spk, msg, sig));
  CHECK_FALSE(ssig_verify(SigKeyPair::generate(rng).spk, msg, sig));
  for (std::size_t bit = 0; bit < msg.size() * 8; ++bit) {
    auto m = msg;
    m[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    REQUIRE_FALSE(ssig_verify(kp.spk, m, sig));
  }
  const auto enc = sig.to_bytes();
  for (std::size_t bit = 0; bit < enc.size() * 8; bit += 5) {
    auto e = enc;
    e[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool ok = false;
    try {
      ok = ssig_verify(kp.spk, msg, G1::from_bytes(e));
    } catch (const DecodeError&) {
    }
    REQUIRE_FALSE(ok);
  }
  CHECK_FALSE(ssig_verify(kp.spk, msg, G1::identity()));
}

TEST_CASE("file tags from every scheme verify and resist mutation") {
  Rng rng(23);
  for (const auto id : scheme::kAllSchemes) {
    CAPTURE(scheme_name(id));
    const auto sk = scheme::keygen(id, rng);
    const auto bundle = scheme::token_gen(sk, chunk_file(Bytes(50, 3), to_bytes("tagged")), rng);
    const auto spk = std::visit([](const auto& k) { return k.pk().spk; }, sk);
    REQUIRE(bundle.tag.scheme == id);
    REQUIRE(bundle.tag.verify(spk));
    CHECK(bundle.tag.n.has_value() == (id == SchemeId::mht));
    CHECK(bundle.tag.u.has_value() == (id == SchemeId::mht));

    const auto enc = bundle.tag.encode();
    CHECK(FileTag::decode(enc) == bundle.tag);
    for (std::size_t i = 0; i < enc.size(); ++i) {
      auto e = enc;
      e[i] ^= 0x5a;
      bool ok = false;
      try {
        ok = FileTag::decode(e).verify(spk);
      } catch (const DecodeError&) {
      }
      REQUIRE_FALSE(ok);
    }
  }
}

TEST_CASE("tag payload layout") {
  Rng rng(24);
  const auto kp = SigKeyPair::generate(rng);
  const G1 u = G1::random(rng);
  const auto mht_tag = FileTag::issue(SchemeId::mht, to_bytes("ab"), 5, u, kp.ssk);
  Bytes expect{1, 'a', 'b', 0, 0, 0, 0, 0, 0, 0, 5};
  const auto ue = u.to_bytes();
  expect.insert(expect.end(), ue.begin(), ue.end());
  CHECK(mht_tag.payload() == expect);
  CHECK(FileTag::issue(SchemeId::gs, to_bytes("ab"), std::nullopt, std::nullopt, kp.ssk).payload() ==
        Bytes{3, 'a', 'b'});
}

TEST_CASE("challenge sampling") {
  Rng rng(25);
  const auto full = sample_challenge(4, 4, rng);
  REQUIRE(full.size() == 4);
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(full.entries[i].index == i + 1);
  const auto single = sample_challenge(1, 1, rng);
  REQUIRE(single.size() == 1);
  CHECK(single.entries[0].index == 1);

  Rng a(99), b(99);
  CHECK(sample_challenge(50, 10, a) == sample_challenge(50, 10, b));

  CHECK_THROWS_AS((void)sample_challenge(3, 4, rng), ArgumentError);
  CHECK_THROWS_AS((void)sample_challenge(3, 0, rng), ArgumentError);
  CHECK(default_challenge_size(4) == 4);
  CHECK(default_challenge_size(64) == 10);

  for (int k = 0; k < 200; ++k) {
    const auto c = sample_challenge(20, 1 + rng.below(20), rng);
    REQUIRE_NOTHROW(c.validate(20));
    const auto inc = sample_challenge_including(20, 3, 17, rng);
    REQUIRE_NOTHROW(inc.validate(20));
    bool has = false;
    for (const auto& e : inc.entries) has |= e.index == 17;
    REQUIRE(has);
  }
}

TEST_CASE("challenge indices are uniform") {
  // n = 8, c = 3, 10^4 draws: each index expected 3750 times.
  Rng rng(26);
  std::array<double, 8> counts{};
  constexpr int draws = 10000;
  for (int k = 0; k < draws; ++k) {
    for (const auto& e : sample_challenge(8, 3, rng).entries) counts[e.index - 1] += 1;
  }
  const double expected = draws * 3.0 / 8.0;
  double chi2 = 0;
  for (const double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 7 degrees of freedom; 24.32 is the 0.999 quantile.
  CHECK(chi2 < 24.32);
}

TEST_CASE("challenge validation and encoding") {
  Rng rng(27);
  const auto c = sample_challenge(30, 6, rng);
  CHECK(Challenge::decode(c.encode()) == c);
  CHECK(c.encode().size() == 4 + 6 * (8 + 32));

  Challenge bad;
  CHECK_THROWS_AS(bad.validate(5), ProtocolError);
  bad.entries = {{2, Scalar()}, {2, Scalar()}};
  CHECK_THROWS_AS(bad.validate(5), ProtocolError);
  bad.entries = {{3, Scalar()}, {2, Scalar()}};
  CHECK_THROWS_AS(bad.validate(5), ProtocolError);
  bad.entries = {{0, Scalar()}};
  CHECK_THROWS_AS(bad.validate(5), ProtocolError);
  bad.entries = {{6, Scalar()}};
  CHECK_THROWS_AS(bad.validate(5), ProtocolError);

  auto enc = c.encode();
  enc.pop_back();
  CHECK_THROWS_AS((void)Challenge::decode(enc), DecodeError);
}

TEST_CASE("rng streams") {
  Rng a(5), b(5);
  CHECK(a.next_u64() == b.next_u64());
  CHECK(a.fork(1).next_u64() == b.fork(1).next_u64());
  CHECK(a.fork(1).next_u64() != a.fork(2).next_u64());
  for (int k = 0; k < 1000; ++k) REQUIRE(a.below(7) < 7);
}
