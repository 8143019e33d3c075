#pragma once

#include <cstdint>

#include "fairmatch/types.hpp"

namespace fairmatch {

struct GeneratorConfig {
    std::size_t orders = 10;  // per side
    Price price_min = 1;
    Price price_max = 1000;
    Quantity qty_max = 20;
};

/// Random admissible book, deterministic for a given seed. Ids run 1..n on
/// each side; timestamps are a random permutation of 1..2n split between the
/// sides, so they are distinct across the whole book. Throws
/// std::invalid_argument on an empty price range or qty_max == 0.
OrderDomain generate_domain(const GeneratorConfig& config, std::uint64_t seed);

}  // namespace fairmatch
