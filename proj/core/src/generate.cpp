#include "fairmatch/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fairmatch {

OrderDomain generate_domain(const GeneratorConfig& config, std::uint64_t seed) {
    if (config.price_min > config.price_max) throw std::invalid_argument("price_min exceeds price_max");
    if (config.qty_max == 0) throw std::invalid_argument("qty_max must be at least 1");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Price> price(config.price_min, config.price_max);
    std::uniform_int_distribution<Quantity> qty(1, config.qty_max);

    const std::size_t n = config.orders;
    std::vector<Timestamp> times(2 * n);
    std::iota(times.begin(), times.end(), Timestamp{1});
    std::shuffle(times.begin(), times.end(), rng);

    OrderDomain domain;
    domain.bids.reserve(n);
    domain.asks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Quantity q = qty(rng);
        domain.bids.emplace_back(i + 1, times[i], q, price(rng));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Quantity q = qty(rng);
        domain.asks.emplace_back(i + 1, times[n + i], q, price(rng));
    }
    return domain;
}

}  // namespace fairmatch
