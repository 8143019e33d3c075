#include "fairmatch/properties.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace fairmatch {

namespace {

std::unordered_map<OrderId, const Order*> index_by_id(std::span<const Order> orders) {
    std::unordered_map<OrderId, const Order*> index;
    index.reserve(orders.size());
    for (const auto& o : orders) index.emplace(o.id(), &o);
    return index;
}

PredicateResult check_fair_side(const Matching& m, std::span<const Order> orders, Side side) {
    require_admissible(orders, side);
    const auto traded = traded_quantities(m, side);

    // The least competitive participant. Any order strictly more competitive
    // than some participant is strictly more competitive than this one.
    const Order* last = nullptr;
    for (const auto& o : orders) {
        if (!traded.contains(o.id())) continue;
        if (last == nullptr || strictly_more_competitive(side, *last, o)) last = &o;
    }

    PredicateResult result;
    if (last == nullptr) return result;
    for (const auto& o : orders) {
        if (!strictly_more_competitive(side, o, *last)) continue;
        const auto it = traded.find(o.id());
        const Quantity filled = it == traded.end() ? 0 : it->second;
        if (filled == o.quantity()) continue;
        ViolationDetail d{side == Side::Bid ? ViolationKind::UnfairBid : ViolationKind::UnfairAsk};
        (side == Side::Bid ? d.bid_id : d.ask_id) = o.id();
        d.other_id = last->id();
        d.expected = o.quantity();
        d.actual = filled;
        result.details.push_back(d);
    }
    return result;
}

// Quantity-weighted step function over sorted prices.
struct PriceLadder {
    std::vector<Price> prices;       // ascending
    std::vector<Quantity> prefix;    // prefix[i] = sum of quantities of prices[0..i)

    explicit PriceLadder(std::span<const Order> orders) {
        std::vector<std::pair<Price, Quantity>> pq;
        pq.reserve(orders.size());
        for (const auto& o : orders) pq.emplace_back(o.price(), o.quantity());
        std::sort(pq.begin(), pq.end());
        prefix.push_back(0);
        for (const auto& [p, q] : pq) {
            prices.push_back(p);
            prefix.push_back(checked_add(prefix.back(), q));
        }
    }

    Quantity at_or_below(Price p) const {
        return prefix[std::upper_bound(prices.begin(), prices.end(), p) - prices.begin()];
    }
    Quantity at_or_above(Price p) const {
        return prefix.back() - prefix[std::lower_bound(prices.begin(), prices.end(), p) - prices.begin()];
    }
};

}  // namespace

const char* to_string(ViolationKind kind) noexcept {
    switch (kind) {
        case ViolationKind::NotOverDomain: return "NotOverDomain";
        case ViolationKind::QuantityExceeded: return "QuantityExceeded";
        case ViolationKind::PriceOutOfRange: return "PriceOutOfRange";
        case ViolationKind::NotTradable: return "NotTradable";
        case ViolationKind::NonUniformPrice: return "NonUniformPrice";
        case ViolationKind::UnfairBid: return "UnfairBid";
        case ViolationKind::UnfairAsk: return "UnfairAsk";
        case ViolationKind::BoundExceeded: return "BoundExceeded";
    }
    return "Unknown";
}

std::string ViolationDetail::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (transaction) os << " transaction=" << *transaction;
    if (bid_id) os << " bid=" << *bid_id;
    if (ask_id) os << " ask=" << *ask_id;
    if (other_id) os << " other=" << *other_id;
    if (price) os << " price=" << *price;
    os << " expected=" << expected << " actual=" << actual;
    return os.str();
}

PredicateResult check_valid_matching(const Matching& m, const OrderDomain& domain) {
    require_admissible(domain);
    const auto bids = index_by_id(domain.bids);
    const auto asks = index_by_id(domain.asks);

    PredicateResult result;
    auto& out = result.details;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& t = m[i];
        const auto bit = bids.find(t.bid_id());
        const auto ait = asks.find(t.ask_id());
        if (bit == bids.end() || ait == asks.end()) {
            ViolationDetail d{ViolationKind::NotOverDomain, i, t.bid_id(), t.ask_id()};
            d.actual = t.quantity();
            out.push_back(d);
            continue;
        }
        const Order& b = *bit->second;
        const Order& a = *ait->second;
        if (!is_tradable(b, a)) {
            ViolationDetail d{ViolationKind::NotTradable, i, b.id(), a.id()};
            d.expected = a.price();
            d.actual = b.price();
            out.push_back(d);
        } else if (t.price() < a.price() || t.price() > b.price()) {
            ViolationDetail d{ViolationKind::PriceOutOfRange, i, b.id(), a.id()};
            d.price = t.price();
            d.expected = a.price();
            d.actual = t.price();
            out.push_back(d);
        }
        if (const Quantity cap = std::min(b.quantity(), a.quantity()); t.quantity() > cap) {
            ViolationDetail d{ViolationKind::QuantityExceeded, i, b.id(), a.id()};
            d.expected = cap;
            d.actual = t.quantity();
            out.push_back(d);
        }
    }

    const auto bid_totals = traded_quantities(m, Side::Bid);
    for (const auto& b : domain.bids) {
        const auto it = bid_totals.find(b.id());
        if (it != bid_totals.end() && it->second > b.quantity()) {
            ViolationDetail d{ViolationKind::QuantityExceeded, std::nullopt, b.id()};
            d.expected = b.quantity();
            d.actual = it->second;
            out.push_back(d);
        }
    }
    const auto ask_totals = traded_quantities(m, Side::Ask);
    for (const auto& a : domain.asks) {
        const auto it = ask_totals.find(a.id());
        if (it != ask_totals.end() && it->second > a.quantity()) {
            ViolationDetail d{ViolationKind::QuantityExceeded, std::nullopt, std::nullopt, a.id()};
            d.expected = a.quantity();
            d.actual = it->second;
            out.push_back(d);
        }
    }
    return result;
}

PredicateResult check_uniform(const Matching& m) {
    PredicateResult result;
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i].price() == m[0].price()) continue;
        ViolationDetail d{ViolationKind::NonUniformPrice, i, m[i].bid_id(), m[i].ask_id()};
        d.price = m[i].price();
        d.expected = m[0].price();
        d.actual = m[i].price();
        result.details.push_back(d);
    }
    return result;
}

PredicateResult check_fair_bids(const Matching& m, std::span<const Order> bids) {
    return check_fair_side(m, bids, Side::Bid);
}

PredicateResult check_fair_asks(const Matching& m, std::span<const Order> asks) {
    return check_fair_side(m, asks, Side::Ask);
}

PredicateResult check_fair(const Matching& m, const OrderDomain& domain) {
    auto result = check_fair_bids(m, domain.bids);
    auto asks = check_fair_asks(m, domain.asks);
    result.details.insert(result.details.end(), asks.details.begin(), asks.details.end());
    return result;
}

bool demand_supply_bound_holds(const Matching& m, const OrderDomain& domain, Price price) {
    require_admissible(domain);
    const Quantity d = demand(domain.bids, price);
    const Quantity s = supply(domain.asks, price);
    Quantity bound = 0;
    if (__builtin_add_overflow(d, s, &bound)) return true;
    return vol_transactions(m) <= bound;
}

PredicateResult check_demand_supply_bound(const Matching& m, const OrderDomain& domain) {
    require_admissible(domain);
    const PriceLadder bids(domain.bids);
    const PriceLadder asks(domain.asks);
    const Quantity volume = vol_transactions(m);

    std::vector<Price> candidates{0};
    candidates.insert(candidates.end(), bids.prices.begin(), bids.prices.end());
    candidates.insert(candidates.end(), asks.prices.begin(), asks.prices.end());
    const Price top = *std::max_element(candidates.begin(), candidates.end());
    if (top != std::numeric_limits<Price>::max()) candidates.push_back(top + 1);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    PredicateResult result;
    for (const Price p : candidates) {
        Quantity bound = 0;
        if (__builtin_add_overflow(bids.at_or_above(p), asks.at_or_below(p), &bound)) continue;
        if (volume <= bound) continue;
        ViolationDetail d{ViolationKind::BoundExceeded};
        d.price = p;
        d.expected = bound;
        d.actual = volume;
        result.details.push_back(d);
    }
    return result;
}

bool supply_property_holds(std::span<const Transaction> pending, std::span<const Order> asks) {
    const PriceLadder ladder(asks);
    std::vector<std::pair<Price, Quantity>> trades;
    trades.reserve(pending.size());
    for (const auto& t : pending) trades.emplace_back(t.price(), t.quantity());
    std::sort(trades.begin(), trades.end());
    Quantity cumulative = 0;
    for (std::size_t i = 0; i < trades.size(); ++i) {
        cumulative = checked_add(cumulative, trades[i].second);
        if (i + 1 < trades.size() && trades[i + 1].first == trades[i].first) continue;
        if (ladder.at_or_below(trades[i].first) < cumulative) return false;
    }
    return true;
}

bool demand_property_holds(std::span<const Transaction> pending, std::span<const Order> bids) {
    const PriceLadder ladder(bids);
    std::vector<std::pair<Price, Quantity>> trades;
    trades.reserve(pending.size());
    for (const auto& t : pending) trades.emplace_back(t.price(), t.quantity());
    std::sort(trades.begin(), trades.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    Quantity cumulative = 0;
    for (std::size_t i = 0; i < trades.size(); ++i) {
        cumulative = checked_add(cumulative, trades[i].second);
        if (i + 1 < trades.size() && trades[i + 1].first == trades[i].first) continue;
        if (ladder.at_or_above(trades[i].first) < cumulative) return false;
    }
    return true;
}

}  // namespace fairmatch
