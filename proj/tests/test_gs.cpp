#include <doctest.h>

#include "dic/blinded.hpp"
#include "dic/errors.hpp"
#include "dic/games.hpp"
#include "dic/gs.hpp"
#include "oracles.hpp"

using namespace dic;

namespace {

BlockVector random_file(std::uint64_t n, Rng& rng) { return {games::random_name(rng), games::random_blocks(n, rng)}; }

// e(sigma, g) * e(U, v^{-1}) == t_T
bool satisfies_equation(const gs::Witness& w, const G2& v, const GT& t_T) {
  return pair(w.sigma, G2::generator()) * pair(w.U, v.inverse()) == t_T;
}

struct Instance {
  gs::Keys keys;
  gs::PublicKey pk;
  BlockVector file;
  gs::TokenBundle token;
  Challenge chal;
};

Instance make_instance(Rng& rng, std::uint64_t n, std::uint64_t c, gs::KeyMode mode = gs::KeyMode::binding,
                       bool retain = false) {
  Instance in;
  in.keys = gs::keygen(rng, mode, retain);
  in.pk = in.keys.pk();
  in.file = random_file(n, rng);
  in.token = gs::token_gen(in.keys, in.file);
  in.chal = sample_challenge(n, c, rng);
  return in;
}

}  // namespace

TEST_CASE("gs commitment keys") {
  Rng rng(61);
  const G1 u = G1::random(rng);
  const auto b = gs::ck_gen(u, gs::KeyMode::binding, rng, true);
  REQUIRE(b.trapdoor);
  const auto& tb = *b.trapdoor;
  CHECK(b.u1[0] == u);
  CHECK(b.u1[1] == u.pow(tb.alpha));
  CHECK(b.u2[0] == u.pow(tb.tau));
  CHECK(b.u2[1] == u.pow(tb.tau * tb.alpha));
  CHECK(b.u2[1] == b.u1[1].pow(tb.tau));
  CHECK(tb.offset.is_zero());

  const auto h = gs::ck_gen(u, gs::KeyMode::hiding, rng, true);
  const auto& th = *h.trapdoor;
  CHECK(h.u2[1] == u.pow(th.tau * th.alpha + Scalar::from_u64(1)));
  CHECK(th.offset == Scalar::from_u64(1));

  CHECK_FALSE(gs::ck_gen(u, gs::KeyMode::binding, rng).trapdoor);
  const auto stripped = b.without_trapdoor();
  CHECK_FALSE(stripped.trapdoor);
  CHECK(stripped.same_public_key(b));
  const auto round = gs::CommitmentKey::decode(b.encode());
  CHECK(round.same_public_key(b));
  CHECK_FALSE(round.trapdoor);
  CHECK(b.encode().size() == 1 + 4 * kG1Bytes);
}

TEST_CASE("gs commitments") {
  Rng rng(62);
  const auto ck = gs::ck_gen(G1::random(rng), gs::KeyMode::binding, rng, true);
  const gs::Witness w{G1::random(rng), G1::random(rng)};

  const auto zero = gs::commit(w, ck, gs::Randomness{});
  CHECK(zero.c1[0].is_identity());
  CHECK(zero.c1[1] == w.sigma);
  CHECK(zero.c2[1] == w.U);

  const auto r = gs::Randomness::random(rng);
  const auto c = gs::commit(w, ck, r);
  CHECK(c.c1[0] == ck.u1[0].pow(r.r11) * ck.u2[0].pow(r.r12));
  CHECK(c.c1[1] == ck.u1[1].pow(r.r11) * ck.u2[1].pow(r.r12) * w.sigma);
  CHECK_FALSE(c == gs::commit(w, ck, gs::Randomness::random(rng)));

  const auto p = gs::prove(r, G2::generator(), G2::random(rng));
  CHECK(p.pi1[0].is_identity());
  CHECK(p.pi2[0].is_identity());
}

TEST_CASE("gs matrix helpers") {
  Rng rng(63);
  for (int trial = 0; trial < 5; ++trial) {
    const std::array<gs::G1Pair, 2> x{gs::G1Pair{G1::random(rng), G1::random(rng)},
                                      gs::G1Pair{G1::random(rng), G1()}};
    const std::array<gs::G2Pair, 2> y{gs::G2Pair{G2(), G2::random(rng)},
                                      gs::G2Pair{G2::random(rng), G2::random(rng)}};
    REQUIRE(gs::bullet(x, y) == oracle::naive_bullet(x, y));
  }
  const GT t = GT::random(rng);
  const auto m = gs::iota_t(t);
  CHECK(m[0][0].is_one());
  CHECK(m[0][1].is_one());
  CHECK(m[1][0].is_one());
  CHECK(m[1][1] == t);
  const auto prod = gs::entrywise(gs::iota_t(t), gs::iota_t(t.inverse()));
  CHECK(prod == gs::iota_t(GT::one()));
}

TEST_CASE("gs target") {
  Rng rng(64);
  const auto in = make_instance(rng, 6, 3);
  const Challenge zeros{{{1, Scalar()}, {4, Scalar()}}};
  CHECK(gs::target(in.pk, in.file.name, zeros).is_one());
  const Challenge unit{{{5, Scalar::from_u64(1)}}};
  CHECK(gs::target(in.pk, in.file.name, unit) == pair(blinded::block_hash(in.file.name, 5), in.pk.v));

  // same name and n, different contents: identical target
  BlockVector other{in.file.name, games::random_blocks(6, rng)};
  const auto t0 = gs::target(in.pk, in.file.name, in.chal);
  CHECK(t0.to_bytes() == gs::target(in.pk, other.name, in.chal).to_bytes());
  CHECK(satisfies_equation(gs::make_witness(in.file, in.token.sigma, in.pk, in.chal), in.pk.v, t0));
}

TEST_CASE("gs verify") {
  Rng rng(65);
  const auto in = make_instance(rng, 9, 5);
  const auto resp = gs::respond(in.file, in.token.sigma, in.pk, in.chal, rng);
  REQUIRE(gs::verify(in.pk, in.token.tag, 9, in.chal, resp));

  const auto enc = resp.encode();
  CHECK(enc.size() == 4 * kG1Bytes + 2 * kG2Bytes);
  CHECK(gs::Response::decode(enc) == resp);

  auto c12 = resp;
  c12.c.c1[1] = c12.c.c1[1] * G1::generator();
  CHECK(gs::verify(in.pk, in.token.tag, 9, in.chal, c12).status == VerifyStatus::equation_failed);
  auto pi2 = resp;
  pi2.pi.pi2[1] = pi2.pi.pi2[1] * G2::generator();
  CHECK(gs::verify(in.pk, in.token.tag, 9, in.chal, pi2).status == VerifyStatus::equation_failed);

  const auto wrong_chal = sample_challenge(9, 5, rng);
  if (!(wrong_chal == in.chal)) CHECK_FALSE(gs::verify(in.pk, in.token.tag, 9, wrong_chal, resp));
  CHECK(gs::verify(gs::keygen(rng).pk(), in.token.tag, 9, in.chal, resp).status == VerifyStatus::tag_invalid);

  const auto m = gs::verification_matrices(in.pk, gs::target(in.pk, in.file.name, in.chal), resp);
  CHECK(m.left == m.right);
  CHECK(gs::PublicKey::decode(in.pk.encode()).encode() == in.pk.encode());
}

TEST_CASE("gs completeness and extraction on random instances") {
  Rng rng(66);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + rng.below(64);
    auto in = make_instance(rng, n, 1 + rng.below(std::min<std::uint64_t>(n, 10)), gs::KeyMode::binding, true);
    const auto r = gs::Randomness::random(rng);
    const auto resp = gs::respond_with(in.file, in.token.sigma, in.pk, in.chal, r);
    REQUIRE(gs::verify(in.pk, in.token.tag, n, in.chal, resp));
    const auto w = gs::make_witness(in.file, in.token.sigma, in.pk, in.chal);
    const auto got = gs::extract(resp.c, in.keys.ck);
    REQUIRE(got == w);
    REQUIRE(satisfies_equation(got, in.pk.v, gs::target(in.pk, in.file.name, in.chal)));
  }
}

TEST_CASE("gs extract") {
  Rng rng(67);
  const auto ck = gs::ck_gen(G1::random(rng), gs::KeyMode::binding, rng, true);
  const gs::Witness w{G1::random(rng), G1::random(rng)};
  CHECK(gs::extract(gs::commit(w, ck, gs::Randomness{}), ck) == w);
  CHECK(gs::extract(gs::commit(w, ck, gs::Randomness::random(rng)), ck) == w);
  CHECK_THROWS_AS((void)gs::extract(gs::commit(w, ck, gs::Randomness{}), ck.without_trapdoor()), CapabilityError);
  const auto hiding = gs::ck_gen(G1::random(rng), gs::KeyMode::hiding, rng, true);
  CHECK_THROWS_AS((void)gs::extract(gs::commit(w, hiding, gs::Randomness{}), hiding), CapabilityError);
}

TEST_CASE("gs equivocate") {
  Rng rng(68);
  const G1 u = G1::random(rng);
  const auto ck = gs::ck_gen(u, gs::KeyMode::hiding, rng, true);
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu0 = Scalar::random(rng), mu1 = Scalar::random(rng);
    const auto r21 = Scalar::random(rng), r22 = Scalar::random(rng);
    const auto c2 = gs::commit_element(u.pow(mu0), ck, r21, r22);
    const auto [s21, s22] = gs::equivocate(mu0, mu1, r21, r22, ck);
    const auto re = gs::commit_element(u.pow(mu1), ck, s21, s22);
    REQUIRE(re[0].to_bytes() == c2[0].to_bytes());
    REQUIRE(re[1].to_bytes() == c2[1].to_bytes());
  }
  const auto mu = Scalar::random(rng), r21 = Scalar::random(rng), r22 = Scalar::random(rng);
  const auto same = gs::equivocate(mu, mu, r21, r22, ck);
  CHECK(same.first == r21);
  CHECK(same.second == r22);

  const auto binding = gs::ck_gen(u, gs::KeyMode::binding, rng, true);
  CHECK_THROWS_AS((void)gs::equivocate(mu, mu, r21, r22, binding), CapabilityError);
  CHECK_THROWS_AS((void)gs::equivocate(mu, mu, r21, r22, ck.without_trapdoor()), CapabilityError);
}

TEST_CASE("gs hiding-mode keys still verify") {
  Rng rng(69);
  const auto in = make_instance(rng, 5, 5, gs::KeyMode::hiding);
  CHECK(gs::verify(in.pk, in.token.tag, 5, in.chal, gs::respond(in.file, in.token.sigma, in.pk, in.chal, rng)));
}
