#pragma once

// Matching engines for multi-unit double auctions.
//
// All entry points run in O(n log n) for n orders: a sort followed by a single
// linear pass. The recursive formulations are realized as loops over sorted
// vectors with a residual quantity for the element on top.

#include <functional>
#include <optional>
#include <stdexcept>
#include <span>
#include <vector>

#include "fairmatch/types.hpp"

namespace fairmatch {

enum class BookOrder : std::uint8_t {
    BidsDescending,  // most competitive bid first
    AsksDescending,  // most competitive ask first
    AsksAscending,   // least competitive ask first
};

/// A book sorted by one of the competitiveness orders. Only constructible
/// through the sorting factories, so the sort annotation can be trusted.
class SortedBook {
public:
    static SortedBook bids_descending(std::span<const Order> bids);
    static SortedBook asks_descending(std::span<const Order> asks);
    static SortedBook asks_ascending(std::span<const Order> asks);

    BookOrder order_kind() const noexcept { return kind_; }
    std::span<const Order> orders() const noexcept { return orders_; }

private:
    SortedBook(std::vector<Order> orders, BookOrder kind) : orders_(std::move(orders)), kind_(kind) {}

    std::vector<Order> orders_;
    BookOrder kind_;
};

/// Thrown by foa/fob when the input matching has more volume than the side
/// it is being reassigned to.
class SupplyShortfall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Greedy top-of-book matcher. Pops the top bid and ask; when the bid cannot
/// pay the ask's price the ask is dropped, otherwise min(qty) trades at the
/// ask's limit price and any remainder goes back on top. Stops when either
/// side is empty. Output is appended to `init`.
///
/// Throws std::invalid_argument unless `bids` is BidsDescending and `asks`
/// is one of the ask orders.
Matching match(const SortedBook& bids, const SortedBook& asks, Matching init = {});

/// Called once per reassignment step with the pending transactions (residual
/// first, in processing order) and the orders not yet consumed.
using ReassignObserver = std::function<void(std::span<const Transaction> pending, std::span<const Order> remaining)>;

/// Reassigns the ask side of `m` so the result is fair on asks. Transactions
/// are taken in increasing price order and the most competitive asks are
/// consumed first; transaction prices and per-bid totals are preserved.
/// Throws SupplyShortfall when Vol(m) > Vol(asks).
Matching foa(const Matching& m, std::span<const Order> asks, const ReassignObserver& observer = {});

/// Mirror of foa on the bid side: transactions in decreasing price order,
/// most competitive bids first. Preserves per-ask totals and prices.
Matching fob(const Matching& m, std::span<const Order> bids, const ReassignObserver& observer = {});

/// foa(fob(m, bids), asks): a fair matching with the volume of `m`.
/// Throws InadmissibleDomain when the domain is not admissible.
Matching fair(const Matching& m, const OrderDomain& domain);

/// Replaces every transaction price with `price`.
Matching assign_price(Price price, const Matching& m);

struct UniformAuction {
    Matching matching;
    std::optional<Price> clearing_price;  // absent when nothing trades
};

/// Call auction: fair, uniform, and of maximum volume among uniform matchings.
/// Clears at the last matched ask's limit price.
UniformAuction um(const OrderDomain& domain);

/// Fair matching of maximum volume; transaction prices are not uniform.
Matching mm(const OrderDomain& domain);

}  // namespace fairmatch
