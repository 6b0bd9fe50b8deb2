#include <doctest.h>

#include "dic/errors.hpp"
#include "dic/games.hpp"
#include "dic/mht.hpp"
#include "oracles.hpp"

using namespace dic;

namespace {

BlockVector random_file(std::uint64_t n, Rng& rng) { return {games::random_name(rng), games::random_blocks(n, rng)}; }

bool authenticator_ok(const G1& sigma, const G1& base, const G1& u, const Scalar& m, const G2& v) {
  return pair(sigma, G2::generator()) == pair(base * u.pow(m), v);
}

}  // namespace

TEST_CASE("mht keygen") {
  Rng rng(41);
  const auto k = mht::keygen(rng);
  CHECK(k.pk().v == G2::generator().pow(k.x));
  CHECK(k.sig.spk == G2::generator().pow(k.sig.ssk));
  Rng a(1), b(2);
  CHECK_FALSE(mht::keygen(a).x == mht::keygen(b).x);
  CHECK(mht::PublicKey::decode(k.pk().encode()) == k.pk());
}

TEST_CASE("merkle tree") {
  Rng rng(42);
  std::vector<G1> leaves;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    leaves.push_back(hash_to_g1(kTagBlockHash, Scalar::random(rng).to_bytes()));
    const auto tree = mht::MerkleTree::build(leaves);
    std::vector<Digest> digests;
    for (std::uint64_t i = 1; i <= n; ++i) digests.push_back(oracle::leaf_digest(i, leaves[i - 1]));
    REQUIRE(tree.root() == oracle::merkle_root(digests));
    for (std::uint64_t i = 1; i <= n; ++i) {
      REQUIRE(mht::reconstruct_root(i, leaves[i - 1], tree.path(i)) == tree.root());
    }
    REQUIRE(mht::MerkleTree::decode(tree.encode()) == tree);
  }
  const auto one = mht::MerkleTree::build(std::span(leaves).first(1));
  CHECK(one.root() == mht::leaf_digest(1, leaves[0]));
  CHECK(one.path(1).empty());

  const auto five = mht::MerkleTree::build(std::span(leaves).first(5));
  CHECK(five.path(5).size() == 1);  // promoted twice, paired once at the top
  CHECK_THROWS_AS((void)five.path(0), ArgumentError);
  CHECK_THROWS_AS((void)five.path(6), ArgumentError);
  CHECK_FALSE(mht::reconstruct_root(2, leaves[0], five.path(1)) == five.root());

  ByteWriter w;
  mht::encode_path(w, five.path(3));
  ByteReader r(w.bytes());
  CHECK(mht::decode_path(r) == five.path(3));
}

TEST_CASE("mht token generation") {
  Rng rng(43);
  const auto k = mht::keygen(rng);
  auto file = random_file(7, rng);
  file.blocks[2] = Scalar();
  const auto t = mht::token_gen(k, file, rng);
  REQUIRE(t.tag.verify(k.sig.spk));
  CHECK(*t.tag.n == 7);
  CHECK(t.sigma[2] == mht::leaf_hash(Scalar()).pow(k.x));
  for (std::uint64_t i = 1; i <= 7; ++i) {
    REQUIRE(authenticator_ok(t.sigma[i - 1], mht::leaf_hash(file.block(i)), *t.tag.u, file.block(i), k.pk().v));
  }
  CHECK(t.root_sig == hash_to_g1(kTagMhtRoot, t.tree.root()).pow(k.x));
  CHECK(mht::leaf_hash(file.block(1)) == hash_to_g1(kTagBlockHash, file.block(1).to_bytes()));

  const auto one = random_file(1, rng);
  const auto single = mht::token_gen(k, one, rng);
  CHECK(single.tree.root() == mht::leaf_digest(1, mht::leaf_hash(one.block(1))));
}

TEST_CASE("mht respond") {
  Rng rng(44);
  const auto k = mht::keygen(rng);
  const auto file = random_file(6, rng);
  const auto t = mht::token_gen(k, file, rng);

  const Challenge unit{{{4, Scalar::from_u64(1)}}};
  const auto p = mht::respond(file, t.sigma, t.tree, t.root_sig, unit);
  CHECK(p.mu == file.block(4));
  CHECK(p.sigma == t.sigma[3]);
  REQUIRE(p.opened.size() == 1);
  CHECK(p.opened[0].leaf == mht::leaf_hash(file.block(4)));

  const Challenge zeros{{{1, Scalar()}, {5, Scalar()}}};
  const auto z = mht::respond(file, t.sigma, t.tree, t.root_sig, zeros);
  CHECK(z.mu.is_zero());
  CHECK(z.sigma.is_identity());

  const Challenge out_of_range{{{7, Scalar::from_u64(1)}}};
  CHECK_THROWS_AS((void)mht::respond(file, t.sigma, t.tree, t.root_sig, out_of_range), ProtocolError);
}

TEST_CASE("mht verify accepts honest and rejects mutated proofs") {
  Rng rng(45);
  const auto k = mht::keygen(rng);
  const auto file = random_file(9, rng);
  const auto t = mht::token_gen(k, file, rng);
  const auto chal = sample_challenge(9, 4, rng);
  const auto p = mht::respond(file, t.sigma, t.tree, t.root_sig, chal);
  REQUIRE(mht::verify(k.pk(), t.tag, chal, p));
  CHECK(mht::Proof::decode(p.encode()) == p);

  auto bumped = p;
  bumped.mu += Scalar::from_u64(1);
  CHECK(mht::verify(k.pk(), t.tag, chal, bumped).status == VerifyStatus::equation_failed);

  const Challenge one{{{3, Scalar::random(rng)}}};
  auto single = mht::respond(file, t.sigma, t.tree, t.root_sig, one);
  REQUIRE(mht::verify(k.pk(), t.tag, one, single));
  auto& step = single.opened[0].path[0];
  step.sibling[0] ^= 1;
  CHECK(mht::verify(k.pk(), t.tag, one, single).status == VerifyStatus::root_signature_invalid);

  auto swapped = p;
  std::swap(swapped.opened[0].path[0], swapped.opened[0].path[1]);
  CHECK_FALSE(mht::verify(k.pk(), t.tag, chal, swapped));

  auto reordered = p;
  std::swap(reordered.opened[0], reordered.opened[1]);
  CHECK(mht::verify(k.pk(), t.tag, chal, reordered).status == VerifyStatus::malformed);

  CHECK(mht::verify(mht::keygen(rng).pk(), t.tag, chal, p).status == VerifyStatus::tag_invalid);
  const Challenge bad{{{10, Scalar::from_u64(1)}}};
  CHECK(mht::verify(k.pk(), t.tag, bad, p).status == VerifyStatus::bad_challenge);
}

TEST_CASE("mht completeness on random instances") {
  Rng rng(46);
  const auto k = mht::keygen(rng);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + rng.below(64);
    const auto file = random_file(n, rng);
    const auto t = mht::token_gen(k, file, rng);
    const auto chal = sample_challenge(n, 1 + rng.below(std::min<std::uint64_t>(n, 10)), rng);
    REQUIRE(mht::verify(k.pk(), t.tag, chal, mht::respond(file, t.sigma, t.tree, t.root_sig, chal)));
  }
}

TEST_CASE("mht rejects every single-block tamper at n = 8, c = 8") {
  Rng rng(47);
  const auto k = mht::keygen(rng);
  const auto file = random_file(8, rng);
  const auto t = mht::token_gen(k, file, rng);
  for (std::uint64_t j = 1; j <= 8; ++j) {
    auto bad = file;
    bad.blocks[j - 1] += Scalar::from_u64(1 + rng.below(1000));
    const auto chal = sample_challenge(8, 8, rng);
    REQUIRE_FALSE(mht::verify(k.pk(), t.tag, chal, mht::respond(bad, t.sigma, t.tree, t.root_sig, chal)));
  }
}
