#pragma once

// Data-parallel kernels used by token generation, aggregation and
// verification. Each kernel has a serial reference in kernels::serial with
// the same contract; tests check the two agree and bench/ compares their speed.

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dic/bytes.hpp"
#include "dic/pairing.hpp"

namespace dic::kernels {

/// out[i] = hash_to_g1(tag, msgs[i])
std::vector<G1> hash_points(std::string_view tag, std::span<const Bytes> msgs);

/// sigma_i = (bases[i] * u^{blocks[i]})^x
std::vector<G1> authenticators(std::span<const G1> bases, std::span<const Scalar> blocks, const G1& u,
                               const Scalar& x);

/// prod_i bases[i]^exps[i], split into per-thread Pippenger partial sums.
G1 msm(std::span<const G1> bases, std::span<const Scalar> exps);

/// One pairing product per entry of `products`.
std::vector<GT> pairing_products(std::span<const std::vector<std::pair<G1, G2>>> products);

namespace serial {

std::vector<G1> hash_points(std::string_view tag, std::span<const Bytes> msgs);
std::vector<G1> authenticators(std::span<const G1> bases, std::span<const Scalar> blocks, const G1& u,
                               const Scalar& x);
/// Naive product of powers.
G1 msm(std::span<const G1> bases, std::span<const Scalar> exps);
std::vector<GT> pairing_products(std::span<const std::vector<std::pair<G1, G2>>> products);

}  // namespace serial

}  // namespace dic::kernels
