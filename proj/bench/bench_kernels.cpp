// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "dic/blinded.hpp"
#include "dic/games.hpp"
#include "dic/kernels.hpp"

using namespace dic;

namespace {

struct Inputs {
  std::vector<G1> bases;
  std::vector<Scalar> exps;
  std::vector<Bytes> labels;
  G1 u;
  Scalar x;

  explicit Inputs(std::int64_t n) {
    Rng rng(static_cast<std::uint64_t>(n));
    const auto name = games::random_name(rng);
    for (std::int64_t i = 0; i < n; ++i) {
      bases.push_back(G1::random(rng));
      exps.push_back(Scalar::random(rng));
      labels.push_back(blinded::block_label(name, static_cast<std::uint64_t>(i + 1)));
    }
    u = G1::random(rng);
    x = Scalar::random(rng);
  }
};

template <bool Parallel>
void BM_HashPoints(benchmark::State& st) {
  const Inputs in(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(Parallel ? kernels::hash_points(kTagBlockHash, in.labels)
                                      : kernels::serial::hash_points(kTagBlockHash, in.labels));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_Authenticators(benchmark::State& st) {
  const Inputs in(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(Parallel ? kernels::authenticators(in.bases, in.exps, in.u, in.x)
                                      : kernels::serial::authenticators(in.bases, in.exps, in.u, in.x));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_Msm(benchmark::State& st) {
  const Inputs in(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(Parallel ? kernels::msm(in.bases, in.exps) : kernels::serial::msm(in.bases, in.exps));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_PairingProducts(benchmark::State& st) {
  Rng rng(9);
  std::vector<std::vector<std::pair<G1, G2>>> products(4);
  for (auto& p : products) {
    for (int k = 0; k < 2; ++k) p.emplace_back(G1::random(rng), G2::random(rng));
  }
  for (auto _ : st) {
    benchmark::DoNotOptimize(Parallel ? kernels::pairing_products(products)
                                      : kernels::serial::pairing_products(products));
  }
}

template <bool Parallel>
void BM_AdvantageEstimate(benchmark::State& st) {
  const Rng rng(11);
  const auto f = games::factory(games::AdversaryKind::fig4);
  const auto trials = static_cast<std::uint64_t>(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(Parallel ? games::estimate_advantage(SchemeId::blinded, f, trials, rng)
                                      : games::serial::estimate_advantage(SchemeId::blinded, f, trials, rng));
  }
}

}  // namespace

BENCHMARK(BM_HashPoints<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_HashPoints<true>)->Arg(64)->Arg(256);
BENCHMARK(BM_Authenticators<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_Authenticators<true>)->Arg(64)->Arg(256);
BENCHMARK(BM_Msm<false>)->Arg(10)->Arg(64)->Arg(256);
BENCHMARK(BM_Msm<true>)->Arg(10)->Arg(64)->Arg(256);
BENCHMARK(BM_PairingProducts<false>);
BENCHMARK(BM_PairingProducts<true>);
BENCHMARK(BM_AdvantageEstimate<false>)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdvantageEstimate<true>)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
