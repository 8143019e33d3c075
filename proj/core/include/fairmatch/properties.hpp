#pragma once

// Executable predicates over matchings: validity, uniformity, fairness and
// the demand-supply bound. Each check returns structured details so callers
// can report root causes, plus a boolean shorthand.

#include <optional>
#include <string>
#include <vector>

#include "fairmatch/orders.hpp"
#include "fairmatch/types.hpp"

namespace fairmatch {

enum class ViolationKind : std::uint8_t {
    NotOverDomain,     // transaction references an id missing from the book
    QuantityExceeded,  // per-transaction or per-order capacity exceeded
    PriceOutOfRange,   // transaction price outside [ask price, bid price]
    NotTradable,       // bid price below ask price
    NonUniformPrice,
    UnfairBid,
    UnfairAsk,
    BoundExceeded,     // volume above demand + supply at some price
};

const char* to_string(ViolationKind kind) noexcept;

struct ViolationDetail {
    explicit ViolationDetail(ViolationKind k, std::optional<std::size_t> txn = {}, std::optional<OrderId> bid = {},
                             std::optional<OrderId> ask = {})
        : kind(k), transaction(txn), bid_id(bid), ask_id(ask) {}

    ViolationKind kind;
    std::optional<std::size_t> transaction;  // index into the checked matching
    std::optional<OrderId> bid_id;
    std::optional<OrderId> ask_id;
    // For UnfairBid/UnfairAsk: the least competitive participant that traded
    // while the subject order was not fully filled.
    std::optional<OrderId> other_id;
    std::optional<Price> price;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;

    std::string describe() const;
};

struct PredicateResult {
    std::vector<ViolationDetail> details;

    bool ok() const noexcept { return details.empty(); }
    explicit operator bool() const noexcept { return ok(); }
};

/// Transaction-level validity plus per-order capacity. Throws
/// InadmissibleDomain when the domain is not admissible.
PredicateResult check_valid_matching(const Matching& m, const OrderDomain& domain);
inline bool is_valid_matching(const Matching& m, const OrderDomain& domain) {
    return check_valid_matching(m, domain).ok();
}

PredicateResult check_uniform(const Matching& m);
inline bool is_uniform(const Matching& m) { return check_uniform(m).ok(); }

/// Whenever an order strictly less competitive than some order traded, that
/// order must be fully traded. Equally competitive orders impose nothing.
/// Throws InadmissibleDomain when ids or timestamps repeat on the side.
PredicateResult check_fair_bids(const Matching& m, std::span<const Order> bids);
PredicateResult check_fair_asks(const Matching& m, std::span<const Order> asks);
PredicateResult check_fair(const Matching& m, const OrderDomain& domain);

inline bool is_fair_bids(const Matching& m, std::span<const Order> bids) { return check_fair_bids(m, bids).ok(); }
inline bool is_fair_asks(const Matching& m, std::span<const Order> asks) { return check_fair_asks(m, asks).ok(); }
inline bool is_fair(const Matching& m, const OrderDomain& domain) { return check_fair(m, domain).ok(); }

/// Vol(m) <= demand(bids, price) + supply(asks, price).
bool demand_supply_bound_holds(const Matching& m, const OrderDomain& domain, Price price);

/// Scans every price where demand or supply can change: 0, each order price
/// and one past the largest price. Reports one BoundExceeded detail per
/// failing price.
PredicateResult check_demand_supply_bound(const Matching& m, const OrderDomain& domain);

/// Vol(asks priced <= p) >= Vol(transactions priced <= p) for every
/// transaction price p in `pending`.
bool supply_property_holds(std::span<const Transaction> pending, std::span<const Order> asks);
/// Vol(bids priced >= p) >= Vol(transactions priced >= p) for every
/// transaction price p in `pending`.
bool demand_property_holds(std::span<const Transaction> pending, std::span<const Order> bids);

}  // namespace fairmatch
