#include "dic/games.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>

#include "dic/errors.hpp"

namespace dic::games {

// ---- adversaries -----------------------------------------------------------

std::vector<std::vector<Scalar>> Adversary::phase1_queries(const scheme::PublicKey&, Rng&) { return {}; }

void Adversary::observe_phase1(const std::vector<scheme::StoredBundle>&) {}

Challenge Adversary::choose_challenge(const scheme::PublicKey&, const FileTag&, std::uint64_t n, Rng& rng) {
  return sample_challenge(n, default_challenge_size(n), rng);
}

Bytes random_name(Rng& rng) {
  std::array<std::uint8_t, 8> raw{};
  rng.fill(raw);
  return to_bytes("zk-" + to_hex(raw));
}

std::vector<Scalar> random_blocks(std::uint64_t n, Rng& rng) {
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Scalar::random(rng));
  return out;
}

namespace {

Guess coin(Rng& rng, bool applicable) { return {static_cast<int>(rng.below(2)), applicable}; }

// F0 and F1 with m_i^(0) != m_i^(1) for every i.
std::pair<std::vector<Scalar>, std::vector<Scalar>> distinct_files(std::uint64_t n, Rng& rng) {
  auto f0 = random_blocks(n, rng);
  std::vector<Scalar> f1;
  f1.reserve(n);
  for (const auto& m : f0) {
    Scalar other;
    do {
      other = Scalar::random(rng);
    } while (other == m);
    f1.push_back(other);
  }
  return {std::move(f0), std::move(f1)};
}

class BaseAdversary : public Adversary {
 public:
  explicit BaseAdversary(std::uint64_t n) : n_(n) {
    if (n == 0) throw ArgumentError("adversary: n_blocks must be positive");
  }

  std::pair<std::vector<Scalar>, std::vector<Scalar>> choose_files(const scheme::PublicKey&, Rng& rng) override {
    auto files = distinct_files(n_, rng);
    f0_ = files.first;
    return files;
  }

 protected:
  std::uint64_t n_;
  std::vector<Scalar> f0_;
};

class RandomGuesser final : public BaseAdversary {
 public:
  using BaseAdversary::BaseAdversary;
  std::string_view name() const override { return "random"; }
  Guess guess(const scheme::PublicKey&, const FileTag&, const Challenge&, const scheme::Proof&, Rng& rng) override {
    return coin(rng, true);
  }
};

class MhtHashDistinguisher final : public BaseAdversary {
 public:
  using BaseAdversary::BaseAdversary;
  std::string_view name() const override { return "fig2"; }
  Guess guess(const scheme::PublicKey&, const FileTag&, const Challenge&, const scheme::Proof& proof,
              Rng& rng) override {
    const auto* p = std::get_if<mht::Proof>(&proof);
    if (p == nullptr || p->opened.empty()) return coin(rng, false);
    const auto& o = p->opened.front();
    if (o.index == 0 || o.index > f0_.size()) return coin(rng, false);
    return {o.leaf == mht::leaf_hash(f0_[o.index - 1]) ? 0 : 1, true};
  }
};

class BlindedRecomputeDistinguisher final : public BaseAdversary {
 public:
  using BaseAdversary::BaseAdversary;
  std::string_view name() const override { return "fig4"; }
  Guess guess(const scheme::PublicKey& pk, const FileTag& tag, const Challenge& chal, const scheme::Proof& proof,
              Rng& rng) override {
    const auto* p = std::get_if<blinded::Proof>(&proof);
    const auto* key = std::get_if<blinded::PublicKey>(&pk);
    if (p == nullptr || key == nullptr) return coin(rng, false);
    Scalar mu0;
    std::vector<G1> hashes;
    for (const auto& e : chal.entries) {
      mu0 += e.coeff * f0_.at(e.index - 1);
      hashes.push_back(blinded::block_hash(tag.name, e.index));
    }
    const G1 lhs = msm(hashes, chal.coeffs()) * key->u.pow(mu0);
    const std::array<std::pair<G1, G2>, 2> terms = {std::pair{lhs, key->v},
                                                     std::pair{p->sigma.inverse(), G2::generator()}};
    return {pairing_product(terms).is_one() ? 0 : 1, true};
  }
};

}  // namespace

std::string_view adversary_name(AdversaryKind k) {
  switch (k) {
    case AdversaryKind::random: return "random";
    case AdversaryKind::fig2: return "fig2";
    case AdversaryKind::fig4: return "fig4";
  }
  return "?";
}

AdversaryKind parse_adversary(std::string_view s) {
  if (s == "random") return AdversaryKind::random;
  if (s == "fig2") return AdversaryKind::fig2;
  if (s == "fig4") return AdversaryKind::fig4;
  throw ArgumentError("unknown adversary: " + std::string(s));
}

std::unique_ptr<Adversary> random_guesser(std::uint64_t n) { return std::make_unique<RandomGuesser>(n); }
std::unique_ptr<Adversary> mht_hash_distinguisher(std::uint64_t n) {
  return std::make_unique<MhtHashDistinguisher>(n);
}
std::unique_ptr<Adversary> blinded_recompute_distinguisher(std::uint64_t n) {
  return std::make_unique<BlindedRecomputeDistinguisher>(n);
}

std::unique_ptr<Adversary> make_adversary(AdversaryKind k, std::uint64_t n) {
  switch (k) {
    case AdversaryKind::random: return random_guesser(n);
    case AdversaryKind::fig2: return mht_hash_distinguisher(n);
    case AdversaryKind::fig4: return blinded_recompute_distinguisher(n);
  }
  throw ArgumentError("unknown adversary");
}

AdversaryFactory factory(AdversaryKind k, std::uint64_t n) {
  return [k, n] { return make_adversary(k, n); };
}

// ---- zero-knowledge game ---------------------------------------------------

GameResult run_zk_game(SchemeId id, Adversary& adv, Rng& rng) {
  Rng sim = rng.fork(0);
  Rng adv_rng = rng.fork(1);

  const auto sk = scheme::keygen(id, sim);
  const auto pk = scheme::public_key(sk);

  auto queries = adv.phase1_queries(pk, adv_rng);
  std::vector<scheme::StoredBundle> answers;
  answers.reserve(queries.size());
  for (auto& q : queries) {
    if (q.empty()) throw GameError("phase 1 query with no blocks");
    answers.push_back(scheme::token_gen(sk, BlockVector{random_name(sim), q}, sim));
  }
  adv.observe_phase1(answers);

  auto [f0, f1] = adv.choose_files(pk, adv_rng);
  if (f0.empty() || f1.empty()) throw GameError("challenge files must be non-empty");
  if (f0.size() != f1.size()) throw GameError("challenge files must have equal block counts");
  if (f0 == f1) throw GameError("challenge files must differ");
  for (const auto& q : queries) {
    if (q == f0 || q == f1) throw GameError("challenge file was queried in phase 1");
  }

  GameResult res;
  res.b = static_cast<int>(sim.below(2));
  const std::uint64_t n = f0.size();
  const auto bundle = scheme::token_gen(sk, BlockVector{random_name(sim), res.b ? f1 : f0}, sim);

  const auto chal = adv.choose_challenge(pk, bundle.tag, n, adv_rng);
  try {
    chal.validate(n);
  } catch (const ProtocolError& e) {
    throw GameError(std::string("adversary challenge rejected: ") + e.what());
  }
  const auto proof = scheme::respond(bundle, pk, chal, sim);
  const auto g = adv.guess(pk, bundle.tag, chal, proof, adv_rng);
  if (g.bit != 0 && g.bit != 1) throw GameError("guess must be 0 or 1");
  res.b_guess = g.bit;
  res.applicable = g.applicable;

  res.tag = bundle.tag.encode();
  res.chal = chal.encode();
  res.proof = scheme::encode_proof(proof);
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(res.b)).u8(static_cast<std::uint8_t>(res.b_guess)).u8(res.applicable);
  w.blob(res.tag).blob(res.chal).blob(res.proof);
  res.transcript_hash = sha256(w.bytes());
  return res;
}

double wilson_radius(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return 0;
  constexpr double z = 1.959963984540054;
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  return z / (1 + z * z / t) * std::sqrt(p * (1 - p) / t + z * z / (4 * t * t));
}

namespace {

AdvantageEstimate summarize(const std::vector<GameResult>& results) {
  AdvantageEstimate est;
  est.trials = results.size();
  ByteWriter all;
  for (const auto& r : results) {
    est.successes += r.success();
    est.applicable += r.applicable;
    all.raw(r.transcript_hash);
  }
  est.advantage = std::abs(static_cast<double>(est.successes) / static_cast<double>(est.trials) - 0.5);
  est.radius = wilson_radius(est.successes, est.trials);
  est.transcripts = sha256(all.bytes());
  return est;
}

GameResult one_trial(SchemeId id, const AdversaryFactory& make, const Rng& rng, std::uint64_t i) {
  Rng trial = rng.fork(i);
  auto adv = make();
  return run_zk_game(id, *adv, trial);
}

// Runs body(i) for i in [0, count) across threads; rethrows the first failure.
template <class F>
void parallel_trials(std::uint64_t count, F&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    try {
      body(static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical(dic_games_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

AdvantageEstimate estimate_advantage(SchemeId id, const AdversaryFactory& make, std::uint64_t trials,
                                     const Rng& rng) {
  if (trials == 0) throw ArgumentError("estimate_advantage: trials must be positive");
  std::vector<GameResult> results(trials);
  parallel_trials(trials, [&](std::uint64_t i) { results[i] = one_trial(id, make, rng, i); });
  return summarize(results);
}

namespace serial {

AdvantageEstimate estimate_advantage(SchemeId id, const AdversaryFactory& make, std::uint64_t trials,
                                     const Rng& rng) {
  if (trials == 0) throw ArgumentError("estimate_advantage: trials must be positive");
  std::vector<GameResult> results;
  results.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) results.push_back(one_trial(id, make, rng, i));
  return summarize(results);
}

}  // namespace serial

// ---- soundness game --------------------------------------------------------

SoundnessOutcome run_soundness_game(SchemeId id, const BlockVector& original, const TamperSpec& tamper,
                                    std::uint64_t c, Rng& rng) {
  const std::uint64_t n = original.n();
  if (n == 0) throw GameError("soundness game: empty file");
  if (tamper.index < 1 || tamper.index > n) throw GameError("soundness game: tamper index out of range");
  if (tamper.replacement == original.block(tamper.index)) {
    throw GameError("soundness game: replacement equals the original block");
  }
  if (c < 1 || c > n) throw GameError("soundness game: challenge size out of range");

  // Phase 1: honest tokens. The GS challenger keeps the extraction trapdoor.
  const scheme::SecretKeys sk =
      id == SchemeId::gs ? scheme::SecretKeys(gs::keygen(rng, gs::KeyMode::binding, true)) : scheme::keygen(id, rng);
  const auto pk = scheme::public_key(sk);
  auto bundle = scheme::token_gen(sk, original, rng);

  // Phase 2: the server alters block j and keeps everything else.
  bundle.file.blocks[tamper.index - 1] = tamper.replacement;
  const auto chal = sample_challenge_including(n, c, tamper.index, rng);
  const auto proof = scheme::respond(bundle, pk, chal, rng);

  SoundnessOutcome out;
  const auto verdict = scheme::verify(pk, bundle.tag, n, chal, proof);
  out.accepted = static_cast<bool>(verdict);
  out.status = verdict.status;

  if (id == SchemeId::gs) {
    const auto& keys = std::get<gs::Keys>(sk);
    const auto& gpk = std::get<gs::PublicKey>(pk);
    const auto w = gs::extract(std::get<gs::Response>(proof).c, keys.ck);
    const GT t_T = gs::target(gpk, bundle.tag.name, chal);
    const std::array<std::pair<G1, G2>, 2> terms = {std::pair{w.sigma, G2::generator()},
                                                     std::pair{w.U, gpk.v_inv}};
    out.extracted_valid = pairing_product(terms) == t_T;
  }
  return out;
}

namespace {

SoundnessOutcome soundness_trial(SchemeId id, std::uint64_t n_blocks, std::uint64_t c, const Rng& rng,
                                 std::uint64_t i) {
  Rng trial = rng.fork(i);
  BlockVector file{random_name(trial), random_blocks(n_blocks, trial)};
  TamperSpec t{1 + trial.below(n_blocks), Scalar()};
  do {
    t.replacement = Scalar::random(trial);
  } while (t.replacement == file.block(t.index));
  return run_soundness_game(id, file, t, c, trial);
}

void tally(SoundnessSummary& s, const SoundnessOutcome& o) {
  ++s.trials;
  s.accepted += o.accepted;
  if (o.extracted_valid && *o.extracted_valid != o.accepted) ++s.extraction_mismatches;
}

void check_trials(std::uint64_t trials, std::uint64_t n_blocks, std::uint64_t c) {
  if (trials == 0 || n_blocks == 0) throw ArgumentError("soundness trials: trials and n_blocks must be positive");
  if (c < 1 || c > n_blocks) throw ArgumentError("soundness trials: need 1 <= c <= n_blocks");
}

}  // namespace

SoundnessSummary run_soundness_trials(SchemeId id, std::uint64_t trials, std::uint64_t n_blocks,
                                      std::uint64_t c, const Rng& rng) {
  check_trials(trials, n_blocks, c);
  std::vector<SoundnessOutcome> outcomes(trials);
  parallel_trials(trials, [&](std::uint64_t i) { outcomes[i] = soundness_trial(id, n_blocks, c, rng, i); });
  SoundnessSummary s;
  for (const auto& o : outcomes) tally(s, o);
  return s;
}

namespace serial {

SoundnessSummary run_soundness_trials(SchemeId id, std::uint64_t trials, std::uint64_t n_blocks,
                                      std::uint64_t c, const Rng& rng) {
  check_trials(trials, n_blocks, c);
  SoundnessSummary s;
  for (std::uint64_t i = 0; i < trials; ++i) tally(s, soundness_trial(id, n_blocks, c, rng, i));
  return s;
}

}  // namespace serial

}  // namespace dic::games
