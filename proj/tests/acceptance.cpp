// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "dic/blinded.hpp"
#include "dic/games.hpp"
#include "dic/gs.hpp"
#include "dic/server.hpp"
#include "dic/tpa.hpp"
#include "dic/transport.hpp"
#include "temp_dir.hpp"

using namespace dic;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::uint64_t kMaxBlocks = 64;
constexpr std::uint64_t kMaxChallenge = 10;
constexpr std::uint64_t kCompletenessInstances = 200;
constexpr std::uint64_t kAttackTrials = 200;
constexpr std::uint64_t kAttackMinSuccesses = 199;
constexpr double kMaxPrivateAdvantage = 0.10;
constexpr std::uint64_t kSoundnessTrials = 200;
constexpr std::uint64_t kSoundnessBlocks = 16;
constexpr std::uint64_t kExtractions = 200;
constexpr std::uint64_t kEquivocations = 100;
constexpr std::uint64_t kDerivationInstances = 50;
constexpr std::uint64_t kCorruptions = 120;
constexpr std::uint64_t kCorruptionMaxBlocks = 10;

struct Outcome {
  bool pass;
  std::string detail;
};

BlockVector random_file(std::uint64_t n, Rng& rng) { return {games::random_name(rng), games::random_blocks(n, rng)}; }

bool eq2(const gs::Witness& w, const G2& v, const GT& t_T) {
  return pair(w.sigma, G2::generator()) * pair(w.U, v.inverse()) == t_T;
}

Outcome completeness(Rng rng) {
  TempDir tmp;
  CloudServer server(tmp.path, rng.next_u64());
  InProcTransport t(server);
  std::string detail;
  bool pass = true;
  for (auto id : scheme::kAllSchemes) {
    const auto sk = scheme::keygen(id, rng);
    const auto pk = scheme::public_key(sk);
    std::uint64_t ok = 0;
    for (std::uint64_t i = 0; i < kCompletenessInstances; ++i) {
      const auto file = random_file(1 + rng.below(kMaxBlocks), rng);
      upload_file(t, sk, file, rng);
      ok += tpa_audit(t, pk, file.name, 1 + rng.below(kMaxChallenge), rng).verdict == Verdict::valid;
    }
    pass = pass && ok == kCompletenessInstances;
    detail += std::string(scheme_name(id)) + "=" + std::to_string(ok) + "/" + std::to_string(kCompletenessInstances) + " ";
  }
  return {pass, detail};
}

Outcome attack(SchemeId id, games::AdversaryKind kind, const Rng& rng) {
  const auto est = games::estimate_advantage(id, games::factory(kind), kAttackTrials, rng);
  return {est.successes >= kAttackMinSuccesses && est.applicable == kAttackTrials,
          std::to_string(est.successes) + "/" + std::to_string(est.trials) + " correct guesses"};
}

Outcome gs_privacy(Rng rng) {
  bool pass = true;
  std::string detail;
  for (auto kind : {games::AdversaryKind::fig2, games::AdversaryKind::fig4}) {
    const auto est = games::estimate_advantage(SchemeId::gs, games::factory(kind), kAttackTrials, rng.fork(static_cast<std::uint64_t>(kind)));
    pass = pass && est.advantage <= kMaxPrivateAdvantage;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s advantage=%.4f (radius %.4f) ", std::string(games::adversary_name(kind)).c_str(),
                  est.advantage, est.radius);
    detail += buf;
  }
  // Two files under one name: the target is byte-identical and both witnesses satisfy it.
  std::uint64_t identical = 0;
  const std::uint64_t cases = 20;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const auto keys = gs::keygen(rng);
    const auto pk = keys.pk();
    const auto n = 1 + rng.below(kMaxBlocks);
    const auto f0 = random_file(n, rng);
    BlockVector f1{f0.name, games::random_blocks(n, rng)};
    const auto t0 = gs::token_gen(keys, f0), t1 = gs::token_gen(keys, f1);
    const auto chal = sample_challenge(n, std::min(n, kMaxChallenge), rng);
    const auto tt0 = gs::target(pk, f0.name, chal), tt1 = gs::target(pk, f1.name, chal);
    identical += tt0.to_bytes() == tt1.to_bytes() && eq2(gs::make_witness(f0, t0.sigma, pk, chal), pk.v, tt0) &&
                 eq2(gs::make_witness(f1, t1.sigma, pk, chal), pk.v, tt1);
  }
  pass = pass && identical == cases;
  detail += "t_T identical " + std::to_string(identical) + "/" + std::to_string(cases);
  return {pass, detail};
}

Outcome soundness(const Rng& rng) {
  bool pass = true;
  std::string detail;
  for (auto id : scheme::kAllSchemes) {
    const auto s = games::run_soundness_trials(id, kSoundnessTrials, kSoundnessBlocks, kMaxChallenge,
                                               rng.fork(static_cast<std::uint64_t>(id)));
    pass = pass && s.accepted == 0 && s.extraction_mismatches == 0;
    detail += std::string(scheme_name(id)) + " accepted=" + std::to_string(s.accepted) + "/" +
              std::to_string(s.trials) + " ";
  }
  return {pass, detail};
}

Outcome extraction(Rng rng) {
  std::uint64_t exact = 0, satisfied = 0;
  for (std::uint64_t i = 0; i < kExtractions; ++i) {
    const auto keys = gs::keygen(rng, gs::KeyMode::binding, true);
    const auto pk = keys.pk();
    const auto n = 1 + rng.below(kMaxBlocks);
    const auto file = random_file(n, rng);
    const auto tok = gs::token_gen(keys, file);
    const auto chal = sample_challenge(n, 1 + rng.below(std::min(n, kMaxChallenge)), rng);
    const auto w = gs::make_witness(file, tok.sigma, pk, chal);
    const auto c = gs::commit(w, keys.ck, gs::Randomness::random(rng));
    const auto got = gs::extract(c, keys.ck);
    exact += got == w;
    satisfied += eq2(got, pk.v, gs::target(pk, file.name, chal));
  }
  return {exact == kExtractions && satisfied == kExtractions,
          "exact=" + std::to_string(exact) + " satisfying=" + std::to_string(satisfied) + " of " +
              std::to_string(kExtractions)};
}

Outcome hiding(Rng rng) {
  std::uint64_t same = 0;
  for (std::uint64_t i = 0; i < kEquivocations; ++i) {
    const G1 u = G1::random(rng);
    const auto ck = gs::ck_gen(u, gs::KeyMode::hiding, rng, true);
    const auto mu0 = Scalar::random(rng), mu1 = Scalar::random(rng);
    const auto r21 = Scalar::random(rng), r22 = Scalar::random(rng);
    const auto c2 = gs::commit_element(u.pow(mu0), ck, r21, r22);
    const auto [s21, s22] = gs::equivocate(mu0, mu1, r21, r22, ck);
    const auto re = gs::commit_element(u.pow(mu1), ck, s21, s22);
    same += !(mu0 == mu1) && re[0].to_bytes() == c2[0].to_bytes() && re[1].to_bytes() == c2[1].to_bytes();
  }
  return {same == kEquivocations, std::to_string(same) + "/" + std::to_string(kEquivocations) + " bit-exact"};
}

Outcome derivation(Rng rng) {
  std::uint64_t ok = 0;
  for (std::uint64_t i = 0; i < kDerivationInstances; ++i) {
    const auto keys = gs::keygen(rng, gs::KeyMode::binding, true);
    const auto pk = keys.pk();
    const auto& td = *keys.ck.trapdoor;
    const auto n = 1 + rng.below(kMaxBlocks);
    const auto file = random_file(n, rng);
    const auto tok = gs::token_gen(keys, file);
    const auto chal = sample_challenge(n, std::min(n, kMaxChallenge), rng);
    const auto r = gs::Randomness::random(rng);
    const auto resp = gs::respond_with(file, tok.sigma, pk, chal, r);
    const auto t_T = gs::target(pk, file.name, chal);
    const auto m = gs::verification_matrices(pk, t_T, resp);

    const G2 g = G2::generator();
    const G1& u = pk.u;
    const auto& c = resp.c;
    const auto& pi = resp.pi;
    const Scalar a = r.r11 + td.tau * r.r12;
    const Scalar b = r.r21 + td.tau * r.r22;
    const GT e_ug = pair(u, g), e_uvinv = pair(u, pk.v.inverse());

    bool good = true;
    // (1,1): e(c11, 1) e(c21, 1) = 1 = e(u, 1) e(u^tau, 1)
    good = good && m.left[0][0].is_one() && m.right[0][0].is_one();
    // (1,2): e(c11, g) e(c21, v^-1) = e(u, pi1) e(u^tau, pi2) = e(u,g)^a e(u,v^-1)^b
    const GT l12 = pair(c.c1[0], g) * pair(c.c2[0], pk.v.inverse());
    const GT r12 = pair(u, pi.pi1[1]) * pair(u.pow(td.tau), pi.pi2[1]);
    good = good && l12 == m.left[0][1] && r12 == m.right[0][1] && l12 == r12 && l12 == e_ug.pow(a) * e_uvinv.pow(b);
    // (2,1): 1 = 1
    good = good && m.left[1][0].is_one() && m.right[1][0].is_one();
    // (2,2): e(c12, g) e(c22, v^-1) = t_T e(u^alpha, pi1) e(u^{tau alpha}, pi2)
    const GT l22 = pair(c.c1[1], g) * pair(c.c2[1], pk.v.inverse());
    const GT r22 = t_T * pair(u.pow(td.alpha), pi.pi1[1]) * pair(u.pow(td.tau * td.alpha), pi.pi2[1]);
    good = good && l22 == m.left[1][1] && r22 == m.right[1][1] && l22 == r22 &&
           l22 == t_T * e_ug.pow(td.alpha * a) * e_uvinv.pow(td.alpha * b);
    good = good && m.left == m.right && gs::check_equation(pk, t_T, resp);
    ok += good;
  }
  return {ok == kDerivationInstances, std::to_string(ok) + "/" + std::to_string(kDerivationInstances) +
                                          " instances match entrywise"};
}

Outcome fault_injection(Rng rng) {
  TempDir tmp;
  CloudServer server(tmp.path, rng.next_u64());
  InProcTransport t(server);
  std::vector<scheme::SecretKeys> sks;
  for (auto id : scheme::kAllSchemes) sks.push_back(scheme::keygen(id, rng));
  std::uint64_t detected = 0;
  std::string missed;
  for (std::uint64_t i = 0; i < kCorruptions; ++i) {
    const auto& sk = sks[i % sks.size()];
    const auto pk = scheme::public_key(sk);
    const auto n = 1 + rng.below(kCorruptionMaxBlocks);
    const auto file = random_file(n, rng);
    upload_file(t, sk, file, rng);
    std::vector<fs::path> parts;
    for (const auto& e : fs::directory_iterator(server.store().record_dir(file.name))) parts.push_back(e.path());
    std::sort(parts.begin(), parts.end());
    const auto& target = parts[rng.below(parts.size())];
    const auto bit = rng.below(fs::file_size(target) * 8);
    {
      std::fstream f(target, std::ios::in | std::ios::out | std::ios::binary);
      f.seekg(static_cast<std::streamoff>(bit / 8));
      char ch;
      f.get(ch);
      f.seekp(static_cast<std::streamoff>(bit / 8));
      f.put(static_cast<char>(ch ^ (1 << (bit % 8))));
    }
    const auto rep = tpa_audit(t, pk, file.name, n, rng);
    if (rep.verdict != Verdict::valid) {
      ++detected;
    } else {
      missed += " " + target.filename().string() + ":" + std::to_string(bit);
    }
  }
  return {detected == kCorruptions && kCorruptions >= 100,
          std::to_string(detected) + "/" + std::to_string(kCorruptions) + " corruptions detected" + missed};
}

}  // namespace

int main() {
  const Rng root(kSeed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"completeness", [&] { return completeness(root.fork(1)); }},
      {"hash-comparison attack on mht",
       [&] { return attack(SchemeId::mht, games::AdversaryKind::fig2, root.fork(2)); }},
      {"recompute-and-pair attack on blinded",
       [&] { return attack(SchemeId::blinded, games::AdversaryKind::fig4, root.fork(3)); }},
      {"gs privacy", [&] { return gs_privacy(root.fork(4)); }},
      {"soundness", [&] { return soundness(root.fork(5)); }},
      {"extraction", [&] { return extraction(root.fork(6)); }},
      {"perfect hiding", [&] { return hiding(root.fork(7)); }},
      {"correctness derivation", [&] { return derivation(root.fork(8)); }},
      {"fault injection", [&] { return fault_injection(root.fork(9)); }},
  };
  std::printf("seed=%llu\n", static_cast<unsigned long long>(kSeed));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
