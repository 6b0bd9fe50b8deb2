#include <doctest.h>

#include "dic/blinded.hpp"
#include "dic/errors.hpp"
#include "dic/games.hpp"
#include "oracles.hpp"

using namespace dic;

namespace {

BlockVector random_file(std::uint64_t n, Rng& rng) { return {games::random_name(rng), games::random_blocks(n, rng)}; }

G1 aggregate_sigma(std::span<const G1> sigma, const Challenge& chal) {
  G1 acc;
  for (const auto& e : chal.entries) acc = acc * sigma[e.index - 1].pow(e.coeff);
  return acc;
}

Scalar aggregate_mu(const BlockVector& f, const Challenge& chal) {
  Scalar acc;
  for (const auto& e : chal.entries) acc += e.coeff * f.block(e.index);
  return acc;
}

}  // namespace

TEST_CASE("blinded labels") {
  const Bytes name{'a', 'b'};
  const Bytes w = blinded::block_label(name, 3);
  CHECK(w == Bytes{'a', 'b', 0, 0, 0, 0, 0, 0, 0, 3});
  CHECK(blinded::block_hash(name, 3) == hash_to_g1(kTagBlockHash, w));
  const auto hs = blinded::block_hashes(name, 5);
  REQUIRE(hs.size() == 5);
  for (std::uint64_t i = 1; i <= 5; ++i) CHECK(hs[i - 1] == blinded::block_hash(name, i));
  CHECK(blinded::blind_challenge(GT::one()) == hash_to_scalar(kTagBlindHash, GT::one().to_bytes()));
}

TEST_CASE("blinded keygen and tokens") {
  Rng rng(51);
  const auto k = blinded::keygen(rng);
  Rng a(1), b(2);
  CHECK_FALSE(blinded::keygen(a).u == blinded::keygen(b).u);
  CHECK(blinded::PublicKey::decode(k.pk().encode()) == k.pk());

  auto file = random_file(6, rng);
  file.blocks[0] = Scalar();
  const auto t = blinded::token_gen(k, file);
  REQUIRE(t.tag.verify(k.sig.spk));
  CHECK(t.sigma[0] == blinded::block_hash(file.name, 1).pow(k.x));
  for (std::uint64_t i = 1; i <= 6; ++i) {
    REQUIRE(pair(t.sigma[i - 1], G2::generator()) ==
            pair(blinded::block_hash(file.name, i) * k.u.pow(file.block(i)), k.pk().v));
  }
}

TEST_CASE("blinded respond") {
  Rng rng(52);
  const auto k = blinded::keygen(rng);
  const auto pk = k.pk();
  const auto file = random_file(8, rng);
  const auto t = blinded::token_gen(k, file);
  const auto chal = sample_challenge(8, 5, rng);

  const auto p0 = blinded::respond_with_blind(file, t.sigma, pk, chal, Scalar());
  CHECK(p0.R.is_one());
  CHECK(p0.mu == blinded::blind_challenge(GT::one()) * aggregate_mu(file, chal));
  CHECK(p0.sigma == aggregate_sigma(t.sigma, chal));

  const Challenge unit{{{2, Scalar::from_u64(1)}}};
  CHECK(blinded::respond(file, t.sigma, pk, unit, rng).sigma == t.sigma[1]);

  const auto r = Scalar::random(rng);
  const auto p = blinded::respond_with_blind(file, t.sigma, pk, chal, r);
  CHECK(p.R == pair(pk.u, pk.v).pow(r));
  const auto gamma = blinded::blind_challenge(p.R);
  CHECK(p.mu == r + gamma * aggregate_mu(file, chal));
  // R * e(sigma^gamma, g) = e(u, v)^r * e(sigma, g)^gamma
  CHECK(p.R * pair(p.sigma.pow(gamma), G2::generator()) ==
        pair(pk.u, pk.v).pow(r) * pair(p.sigma, G2::generator()).pow(gamma));
  CHECK(blinded::Proof::decode(p.encode()) == p);
}

TEST_CASE("blinded verify") {
  Rng rng(53);
  const auto k = blinded::keygen(rng);
  const auto pk = k.pk();
  const auto file = random_file(10, rng);
  const auto t = blinded::token_gen(k, file);
  const auto chal = sample_challenge(10, 4, rng);
  const auto p = blinded::respond(file, t.sigma, pk, chal, rng);
  REQUIRE(blinded::verify(pk, t.tag, 10, chal, p));

  auto bumped = p;
  bumped.mu += Scalar::from_u64(1);
  CHECK(blinded::verify(pk, t.tag, 10, chal, bumped).status == VerifyStatus::equation_failed);
  auto rerolled = p;
  rerolled.R = GT::random(rng);
  CHECK(blinded::verify(pk, t.tag, 10, chal, rerolled).status == VerifyStatus::equation_failed);
  auto moved = p;
  moved.sigma = moved.sigma * G1::generator();
  CHECK_FALSE(blinded::verify(pk, t.tag, 10, chal, moved));

  const auto other = random_file(10, rng);
  const auto t_other = blinded::token_gen(k, other);
  CHECK_FALSE(blinded::verify(pk, t_other.tag, 10, chal, p));
  CHECK(blinded::verify(blinded::keygen(rng).pk(), t.tag, 10, chal, p).status == VerifyStatus::tag_invalid);
  CHECK(blinded::verify(pk, t.tag, 3, chal, p).status == VerifyStatus::bad_challenge);
}

TEST_CASE("blinded completeness on random instances") {
  Rng rng(54);
  const auto k = blinded::keygen(rng);
  const auto pk = k.pk();
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + rng.below(64);
    const auto file = random_file(n, rng);
    const auto t = blinded::token_gen(k, file);
    const auto chal = sample_challenge(n, 1 + rng.below(std::min<std::uint64_t>(n, 10)), rng);
    REQUIRE(blinded::verify(pk, t.tag, n, chal, blinded::respond(file, t.sigma, pk, chal, rng)));
  }
}

TEST_CASE("blinded rejects every single-block tamper at n = 8, c = 8") {
  Rng rng(55);
  const auto k = blinded::keygen(rng);
  const auto pk = k.pk();
  const auto file = random_file(8, rng);
  const auto t = blinded::token_gen(k, file);
  for (std::uint64_t j = 1; j <= 8; ++j) {
    auto bad = file;
    bad.blocks[j - 1] += Scalar::from_u64(1 + rng.below(1000));
    const auto chal = sample_challenge(8, 8, rng);
    REQUIRE_FALSE(blinded::verify(pk, t.tag, 8, chal, blinded::respond(bad, t.sigma, pk, chal, rng)));
  }
}
