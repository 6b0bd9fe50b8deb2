#pragma once

// Executable security games: the zero-knowledge (file indistinguishability)
// game, the two published distinguishers, advantage estimation, and the
// tampering soundness game.

#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dic/rng.hpp"
#include "dic/scheme.hpp"

namespace dic::games {

struct Guess {
  int bit = 0;
  bool applicable = true;  // false when the adversary fell back to a coin flip
};

/// Adversary in the zero-knowledge game. The game assigns a fresh random name
/// shared by both challenge files, so the adversary chooses block contents only.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string_view name() const = 0;

  /// Phase 1: block lists to receive tokens for. Default: none.
  virtual std::vector<std::vector<Scalar>> phase1_queries(const scheme::PublicKey& pk, Rng& rng);
  virtual void observe_phase1(const std::vector<scheme::StoredBundle>& answers);

  /// Phase 2: two distinct files with the same block count.
  virtual std::pair<std::vector<Scalar>, std::vector<Scalar>> choose_files(const scheme::PublicKey& pk,
                                                                           Rng& rng) = 0;
  /// Default: uniform challenge of size min(n, 10).
  virtual Challenge choose_challenge(const scheme::PublicKey& pk, const FileTag& tag, std::uint64_t n, Rng& rng);
  virtual Guess guess(const scheme::PublicKey& pk, const FileTag& tag, const Challenge& chal,
                      const scheme::Proof& proof, Rng& rng) = 0;
};

using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

enum class AdversaryKind { random, fig2, fig4 };

std::string_view adversary_name(AdversaryKind k);
/// "random" | "fig2" | "fig4"; ArgumentError otherwise.
AdversaryKind parse_adversary(std::string_view s);

/// Coin-flipping baseline.
std::unique_ptr<Adversary> random_guesser(std::uint64_t n_blocks = 4);
/// Compares the opened leaf hash against H(m_i^(0)).
std::unique_ptr<Adversary> mht_hash_distinguisher(std::uint64_t n_blocks = 4);
/// Recomputes mu'_0 and checks e(prod H(W_i)^{nu_i} u^{mu'_0}, v) == e(sigma, g).
std::unique_ptr<Adversary> blinded_recompute_distinguisher(std::uint64_t n_blocks = 4);
std::unique_ptr<Adversary> make_adversary(AdversaryKind k, std::uint64_t n_blocks = 4);
AdversaryFactory factory(AdversaryKind k, std::uint64_t n_blocks = 4);

struct GameResult {
  int b = 0;
  int b_guess = 0;
  bool applicable = true;
  Bytes tag;    // encoded t_b
  Bytes chal;   // encoded challenge
  Bytes proof;  // encoded proof
  Digest transcript_hash{};

  bool success() const { return b == b_guess; }
};

/// GameError if the adversary's files are equal, differ in length, are empty,
/// or were queried in Phase 1, or if its challenge does not fit the file.
GameResult run_zk_game(SchemeId scheme, Adversary& adv, Rng& rng);

struct AdvantageEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t applicable = 0;  // trials where the adversary's attack applied
  double advantage = 0;          // |successes / trials - 1/2|
  double radius = 0;             // 95% Wilson half-width of the success rate
  Digest transcripts{};          // hash over all per-trial transcript hashes, in trial order
};

/// 95% Wilson score half-width for `successes` out of `trials`.
double wilson_radius(std::uint64_t successes, std::uint64_t trials);

/// Trial i runs on rng.fork(i); trials run in parallel.
AdvantageEstimate estimate_advantage(SchemeId scheme, const AdversaryFactory& make, std::uint64_t trials,
                                     const Rng& rng);

struct TamperSpec {
  std::uint64_t index;  // 1-based
  Scalar replacement;   // must differ from the original block
};

struct SoundnessOutcome {
  bool accepted = false;
  VerifyStatus status = VerifyStatus::accepted;
  /// GS only: whether the witness extracted from the response satisfies the
  /// pairing-product equation for the challenge's target.
  std::optional<bool> extracted_valid;
};

/// Tokens are generated for `original`; the server then replaces one block and
/// answers honestly over the tampered data with the original authenticators
/// (and original tree). The challenge always contains the tampered index.
/// GameError on an invalid TamperSpec.
SoundnessOutcome run_soundness_game(SchemeId scheme, const BlockVector& original, const TamperSpec& tamper,
                                    std::uint64_t c, Rng& rng);

struct SoundnessSummary {
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  std::uint64_t extraction_mismatches = 0;  // GS: accepted != extracted_valid
};

/// Random files of n_blocks blocks, random tamper index and replacement; trial i
/// runs on rng.fork(i).
SoundnessSummary run_soundness_trials(SchemeId scheme, std::uint64_t trials, std::uint64_t n_blocks,
                                      std::uint64_t c, const Rng& rng);

/// Random file name used by the games.
Bytes random_name(Rng& rng);
std::vector<Scalar> random_blocks(std::uint64_t n, Rng& rng);

namespace serial {
AdvantageEstimate estimate_advantage(SchemeId scheme, const AdversaryFactory& make, std::uint64_t trials,
                                     const Rng& rng);
SoundnessSummary run_soundness_trials(SchemeId scheme, std::uint64_t trials, std::uint64_t n_blocks,
                                      std::uint64_t c, const Rng& rng);
}  // namespace serial

}  // namespace dic::games
