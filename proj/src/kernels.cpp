#include "dic/kernels.hpp"

#include <omp.h>

#include "dic/errors.hpp"

namespace dic::kernels {

namespace {

// Below this many items thread start-up costs more than it saves.
constexpr std::ptrdiff_t kParallelMin = 8;

void check_lengths(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw ArgumentError(std::string(what) + ": input lengths differ");
}

}  // namespace

std::vector<G1> hash_points(std::string_view tag, std::span<const Bytes> msgs) {
  std::vector<G1> out(msgs.size());
  const auto count = static_cast<std::ptrdiff_t>(msgs.size());
#pragma omp parallel for schedule(static) if (count >= kParallelMin)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = hash_to_g1(tag, msgs[i]);
  return out;
}

std::vector<G1> authenticators(std::span<const G1> bases, std::span<const Scalar> blocks, const G1& u,
                               const Scalar& x) {
  check_lengths(bases.size(), blocks.size(), "authenticators");
  std::vector<G1> out(bases.size());
  const auto count = static_cast<std::ptrdiff_t>(bases.size());
#pragma omp parallel for schedule(static) if (count >= kParallelMin)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = (bases[i] * u.pow(blocks[i])).pow(x);
  return out;
}

G1 msm(std::span<const G1> bases, std::span<const Scalar> exps) {
  check_lengths(bases.size(), exps.size(), "msm");
  if (bases.empty()) throw ArgumentError("msm: empty input");
  const auto count = static_cast<std::ptrdiff_t>(bases.size());
  const int threads = count >= 4 * kParallelMin ? omp_get_max_threads() : 1;
  if (threads <= 1) return dic::msm(bases, exps);

  std::vector<G1> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    const auto t = omp_get_thread_num();
    const auto nt = omp_get_num_threads();
    const std::ptrdiff_t lo = count * t / nt;
    const std::ptrdiff_t hi = count * (t + 1) / nt;
    if (hi > lo) {
      partial[static_cast<std::size_t>(t)] =
          dic::msm(bases.subspan(lo, hi - lo), exps.subspan(lo, hi - lo));
    }
  }
  G1 acc;
  for (const auto& p : partial) acc *= p;
  return acc;
}

std::vector<GT> pairing_products(std::span<const std::vector<std::pair<G1, G2>>> products) {
  std::vector<GT> out(products.size());
  const auto count = static_cast<std::ptrdiff_t>(products.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = pairing_product(products[i]);
  return out;
}

namespace serial {

std::vector<G1> hash_points(std::string_view tag, std::span<const Bytes> msgs) {
  std::vector<G1> out;
  out.reserve(msgs.size());
  for (const auto& m : msgs) out.push_back(hash_to_g1(tag, m));
  return out;
}

std::vector<G1> authenticators(std::span<const G1> bases, std::span<const Scalar> blocks, const G1& u,
                               const Scalar& x) {
  check_lengths(bases.size(), blocks.size(), "authenticators");
  std::vector<G1> out;
  out.reserve(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) out.push_back((bases[i] * u.pow(blocks[i])).pow(x));
  return out;
}

G1 msm(std::span<const G1> bases, std::span<const Scalar> exps) {
  check_lengths(bases.size(), exps.size(), "msm");
  if (bases.empty()) throw ArgumentError("msm: empty input");
  G1 acc;
  for (std::size_t i = 0; i < bases.size(); ++i) acc *= bases[i].pow(exps[i]);
  return acc;
}

std::vector<GT> pairing_products(std::span<const std::vector<std::pair<G1, G2>>> products) {
  std::vector<GT> out;
  out.reserve(products.size());
  for (const auto& terms : products) {
    GT acc;
    for (const auto& [a, b] : terms) acc *= pair(a, b);
    out.push_back(acc);
  }
  return out;
}

}  // namespace serial

}  // namespace dic::kernels
