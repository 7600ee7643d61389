#pragma once

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ppos/exact.hpp"

namespace ppos {

// monomial in the algebra generators: sorted indices >= 2 (index 1 is the unit)
using Monomial = std::vector<int>;
// left monomial tensor right generator
using TensorKey = std::pair<Monomial, int>;

// coproduct of the n-th generator, read off the bounded pointed-partition
// poset: each element contributes its lower interval (a product, encoded by
// block sizes) tensor its upper interval (encoded by the block count)
std::map<TensorKey, Int> coproduct_structural(int n);

// the same coefficients from composition of exponential power series
std::map<TensorKey, Int> coproduct_series(int n);

bool check_coassociative(int n);
bool check_counit(int n);

// entry [n] = n-th coefficient of the compositional inverse of x*exp(x),
// scaled by (n-1)!; pairs with the Moebius value of the bounded interval
std::vector<Int> mobius_generators(int maxn);

nlohmann::ordered_json coproduct_json(int n);

}  // namespace ppos
