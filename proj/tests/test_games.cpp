#include <doctest.h>

#include <cmath>

#include "dic/blinded.hpp"
#include "dic/errors.hpp"
#include "dic/games.hpp"
#include "dic/gs.hpp"

using namespace dic;

namespace {

// Wraps a shipped adversary and overrides selected behaviour.
class Wrapper : public games::Adversary {
 public:
  explicit Wrapper(std::unique_ptr<games::Adversary> inner) : inner_(std::move(inner)) {}
  std::string_view name() const override { return "wrapper"; }
  std::pair<std::vector<Scalar>, std::vector<Scalar>> choose_files(const scheme::PublicKey& pk,
                                                                   Rng& rng) override {
    return inner_->choose_files(pk, rng);
  }
  Challenge choose_challenge(const scheme::PublicKey& pk, const FileTag& tag, std::uint64_t n, Rng& rng) override {
    return inner_->choose_challenge(pk, tag, n, rng);
  }
  games::Guess guess(const scheme::PublicKey& pk, const FileTag& tag, const Challenge& chal,
                     const scheme::Proof& proof, Rng& rng) override {
    return inner_->guess(pk, tag, chal, proof, rng);
  }

 protected:
  std::unique_ptr<games::Adversary> inner_;
};

class FixedFiles final : public games::Adversary {
 public:
  FixedFiles(std::vector<Scalar> f0, std::vector<Scalar> f1) : f0_(std::move(f0)), f1_(std::move(f1)) {}
  std::string_view name() const override { return "fixed"; }
  std::pair<std::vector<Scalar>, std::vector<Scalar>> choose_files(const scheme::PublicKey&, Rng&) override {
    return {f0_, f1_};
  }
  games::Guess guess(const scheme::PublicKey&, const FileTag&, const Challenge&, const scheme::Proof&,
                     Rng&) override {
    return {};
  }
  std::vector<std::vector<Scalar>> queries;
  std::size_t answers_seen = 0;
  std::vector<std::vector<Scalar>> phase1_queries(const scheme::PublicKey&, Rng&) override { return queries; }
  void observe_phase1(const std::vector<scheme::StoredBundle>& a) override { answers_seen = a.size(); }

 private:
  std::vector<Scalar> f0_, f1_;
};

std::vector<Scalar> blocks(std::initializer_list<std::uint64_t> v) {
  std::vector<Scalar> out;
  for (auto x : v) out.push_back(Scalar::from_u64(x));
  return out;
}

}  // namespace

TEST_CASE("adversary names") {
  for (auto k : {games::AdversaryKind::random, games::AdversaryKind::fig2, games::AdversaryKind::fig4}) {
    CHECK(games::parse_adversary(games::adversary_name(k)) == k);
    CHECK(games::make_adversary(k)->name() == games::adversary_name(k));
  }
  CHECK_THROWS_AS(games::parse_adversary("fig3"), ArgumentError);
  CHECK_THROWS_AS(games::random_guesser(0), ArgumentError);
}

TEST_CASE("wilson radius") {
  constexpr double z = 1.959963984540054;
  for (std::uint64_t n : {10u, 200u, 1000u}) {
    const double t = static_cast<double>(n);
    const double center = (t + z * z / 2) / (t + z * z);
    CHECK(center - games::wilson_radius(n, n) == doctest::Approx(t / (t + z * z)).epsilon(1e-12));
  }
  CHECK(games::wilson_radius(100, 200) == doctest::Approx(z / (1 + z * z / 200) * std::sqrt(0.25 / 200 + z * z / 160000)));
  CHECK(games::wilson_radius(0, 0) == 0);
}

TEST_CASE("published distinguishers win against their schemes") {
  const Rng rng(71);
  const auto fig2 = games::estimate_advantage(SchemeId::mht, games::factory(games::AdversaryKind::fig2), 200, rng);
  CHECK(fig2.successes >= 199);
  CHECK(fig2.applicable == 200);
  const auto fig4 =
      games::estimate_advantage(SchemeId::blinded, games::factory(games::AdversaryKind::fig4), 200, rng);
  CHECK(fig4.successes >= 199);
  CHECK(fig4.applicable == 200);
}

TEST_CASE("distinguishers do not apply to the commitment scheme") {
  const Rng rng(72);
  for (auto k : {games::AdversaryKind::fig2, games::AdversaryKind::fig4}) {
    const auto est = games::estimate_advantage(SchemeId::gs, games::factory(k), 100, rng);
    CHECK(est.applicable == 0);
    CHECK(est.advantage <= 0.15);
  }
  const auto fig2_blinded =
      games::estimate_advantage(SchemeId::blinded, games::factory(games::AdversaryKind::fig2), 20, rng);
  CHECK(fig2_blinded.applicable == 0);
}

TEST_CASE("random guesser") {
  const Rng rng(73);
  const auto est = games::estimate_advantage(SchemeId::mht, games::factory(games::AdversaryKind::random), 200, rng);
  CHECK(est.successes >= 70);
  CHECK(est.successes <= 130);
  CHECK(est.radius > 0);
}

TEST_CASE("estimates are reproducible and match the serial reference") {
  const Rng rng(74);
  const auto f = games::factory(games::AdversaryKind::fig4);
  const auto a = games::estimate_advantage(SchemeId::blinded, f, 24, rng);
  const auto b = games::estimate_advantage(SchemeId::blinded, f, 24, rng);
  const auto s = games::serial::estimate_advantage(SchemeId::blinded, f, 24, rng);
  CHECK(a.transcripts == b.transcripts);
  CHECK(a.transcripts == s.transcripts);
  CHECK(a.successes == s.successes);
  const auto other = games::estimate_advantage(SchemeId::blinded, f, 24, Rng(75));
  CHECK_FALSE(a.transcripts == other.transcripts);
}

TEST_CASE("game rejects invalid adversary choices") {
  Rng rng(76);
  FixedFiles same(blocks({1, 2}), blocks({1, 2}));
  CHECK_THROWS_AS(games::run_zk_game(SchemeId::mht, same, rng), GameError);
  FixedFiles uneven(blocks({1, 2}), blocks({1, 2, 3}));
  CHECK_THROWS_AS(games::run_zk_game(SchemeId::blinded, uneven, rng), GameError);
  FixedFiles empty({}, {});
  CHECK_THROWS_AS(games::run_zk_game(SchemeId::gs, empty, rng), GameError);

  FixedFiles queried(blocks({1, 2}), blocks({3, 4}));
  queried.queries = {blocks({3, 4})};
  CHECK_THROWS_AS(games::run_zk_game(SchemeId::mht, queried, rng), GameError);

  FixedFiles ok(blocks({1, 2}), blocks({3, 4}));
  ok.queries = {blocks({5}), blocks({6, 7, 8})};
  const auto res = games::run_zk_game(SchemeId::gs, ok, rng);
  CHECK(ok.answers_seen == 2);
  CHECK((res.b == 0 || res.b == 1));

  struct BadChallenge final : Wrapper {
    using Wrapper::Wrapper;
    Challenge choose_challenge(const scheme::PublicKey&, const FileTag&, std::uint64_t n, Rng&) override {
      return Challenge{{{n + 1, Scalar::from_u64(1)}}};
    }
  } bad(games::random_guesser());
  CHECK_THROWS_AS(games::run_zk_game(SchemeId::blinded, bad, rng), GameError);
}

TEST_CASE("degenerate single-block challenge still distinguishes") {
  struct Unit final : Wrapper {
    using Wrapper::Wrapper;
    Challenge choose_challenge(const scheme::PublicKey&, const FileTag&, std::uint64_t, Rng&) override {
      return Challenge{{{1, Scalar::from_u64(1)}}};
    }
  };
  Rng rng(77);
  for (int i = 0; i < 10; ++i) {
    Unit fig2(games::mht_hash_distinguisher());
    REQUIRE(games::run_zk_game(SchemeId::mht, fig2, rng).success());
    Unit fig4(games::blinded_recompute_distinguisher());
    REQUIRE(games::run_zk_game(SchemeId::blinded, fig4, rng).success());
  }
}

TEST_CASE("soundness game") {
  Rng rng(78);
  const BlockVector file{games::random_name(rng), games::random_blocks(6, rng)};
  for (auto id : scheme::kAllSchemes) {
    CHECK_THROWS_AS(games::run_soundness_game(id, file, {3, file.block(3)}, 2, rng), GameError);
    CHECK_THROWS_AS(games::run_soundness_game(id, file, {7, Scalar::from_u64(1)}, 2, rng), GameError);
    const auto out = games::run_soundness_game(id, file, {3, file.block(3) + Scalar::from_u64(1)}, 3, rng);
    CHECK_FALSE(out.accepted);
    if (id == SchemeId::mht) {
      CHECK((out.status == VerifyStatus::root_mismatch || out.status == VerifyStatus::root_signature_invalid));
    } else {
      CHECK(out.status == VerifyStatus::equation_failed);
    }
    CHECK(out.extracted_valid.has_value() == (id == SchemeId::gs));
    if (out.extracted_valid) CHECK_FALSE(*out.extracted_valid);
  }
  const Rng base(79);
  for (auto id : scheme::kAllSchemes) {
    const auto s = games::run_soundness_trials(id, 20, 8, 4, base);
    CHECK(s.accepted == 0);
    CHECK(s.extraction_mismatches == 0);
  }
  const auto p = games::run_soundness_trials(SchemeId::gs, 6, 5, 2, base);
  const auto q = games::serial::run_soundness_trials(SchemeId::gs, 6, 5, 2, base);
  CHECK(p.accepted == q.accepted);
  CHECK(p.trials == q.trials);
}

// Replays the co-CDH reduction behind authenticator unforgeability with a
// programmed oracle: H(W_j) = g1^{r_j} / u^{m_j}, so sigma_j = (g1^x)^{r_j} is
// computable from g1^x alone. A forgery (sigma*, mu*) with mu* != m_j yields
// u^x = (sigma* / sigma_j)^{1 / (mu* - m_j)}.
TEST_CASE("co-CDH reduction algebra") {
  Rng rng(80);
  const auto x = Scalar::random_nonzero(rng);
  const G1 g1 = G1::random(rng);
  const G1 u = G1::random(rng);
  const G2 v = G2::generator().pow(x);
  const G1 g1x = g1.pow(x);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = Scalar::random(rng);
    const auto m = Scalar::random(rng);
    const G1 h = g1.pow(r) / u.pow(m);
    const G1 sigma = g1x.pow(r);
    REQUIRE(pair(sigma, G2::generator()) == pair(h * u.pow(m), v));

    const auto mu_star = m + Scalar::random_nonzero(rng);
    const G1 forged = (h * u.pow(mu_star)).pow(x);  // forger knows x here
    REQUIRE(pair(forged, G2::generator()) == pair(h * u.pow(mu_star), v));

    const G1 recovered = (forged / sigma).pow((mu_star - m).inverse());
    REQUIRE(recovered == u.pow(x));
  }
}
