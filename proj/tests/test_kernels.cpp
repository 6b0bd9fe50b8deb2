#include <doctest.h>

#include <omp.h>

#include "dic/kernels.hpp"
#include "dic/rng.hpp"
#include "oracles.hpp"

using namespace dic;

TEST_CASE("parallel kernels agree with the serial references") {
  Rng rng(31);
  for (const std::size_t n : {1u, 3u, 8u, 33u, 100u}) {
    CAPTURE(n);
    std::vector<Bytes> msgs;
    std::vector<Scalar> blocks;
    for (std::size_t i = 0; i < n; ++i) {
      Bytes m(1 + i % 40);
      rng.fill(m);
      msgs.push_back(m);
      blocks.push_back(Scalar::random(rng));
    }
    const auto bases = kernels::hash_points(kTagBlockHash, msgs);
    REQUIRE(bases == kernels::serial::hash_points(kTagBlockHash, msgs));

    const G1 u = G1::random(rng);
    const Scalar x = Scalar::random_nonzero(rng);
    const auto sigma = kernels::authenticators(bases, blocks, u, x);
    REQUIRE(sigma == kernels::serial::authenticators(bases, blocks, u, x));
    REQUIRE(sigma.back() == (bases.back() * u.pow(blocks.back())).pow(x));

    const G1 agg = kernels::msm(sigma, blocks);
    REQUIRE(agg == kernels::serial::msm(sigma, blocks));
    REQUIRE(agg == oracle::naive_msm(sigma, blocks));
  }
}

TEST_CASE("parallel pairing products") {
  Rng rng(32);
  std::vector<std::vector<std::pair<G1, G2>>> products(9);
  for (std::size_t k = 0; k < products.size(); ++k) {
    for (std::size_t j = 0; j < k % 4; ++j) products[k].emplace_back(G1::random(rng), G2::random(rng));
  }
  const auto par = kernels::pairing_products(products);
  REQUIRE(par == kernels::serial::pairing_products(products));
  for (std::size_t k = 0; k < products.size(); ++k) {
    GT e;
    for (const auto& [a, b] : products[k]) e *= pair(a, b);
    REQUIRE(par[k] == e);
  }
}

TEST_CASE("kernels agree under several thread counts") {
  Rng rng(33);
  std::vector<G1> bases;
  std::vector<Scalar> exps;
  for (int i = 0; i < 64; ++i) {
    bases.push_back(G1::random(rng));
    exps.push_back(Scalar::random(rng));
  }
  const G1 expect = oracle::naive_msm(bases, exps);
  const int saved = omp_get_max_threads();
  for (const int t : {1, 2, 3, 4}) {
    omp_set_num_threads(t);
    REQUIRE(kernels::msm(bases, exps) == expect);
  }
  omp_set_num_threads(saved);
}
