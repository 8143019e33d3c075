#pragma once

// Order predicates, admissibility and quantity accounting.

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fairmatch/types.hpp"

namespace fairmatch {

/// Sum with overflow detection; throws std::overflow_error.
Quantity checked_add(Quantity a, Quantity b);

inline bool is_tradable(const Order& bid, const Order& ask) noexcept { return bid.price() >= ask.price(); }

/// Price-time priority on bids. Reflexive on equal price and timestamp.
inline bool bid_more_competitive(const Order& b1, const Order& b2) noexcept {
    return b1.price() > b2.price() || (b1.price() == b2.price() && b1.timestamp() <= b2.timestamp());
}

/// Price-time priority on asks. Reflexive on equal price and timestamp.
inline bool ask_more_competitive(const Order& a1, const Order& a2) noexcept {
    return a1.price() < a2.price() || (a1.price() == a2.price() && a1.timestamp() <= a2.timestamp());
}

/// Orders with the same price and timestamp impose no priority on each other.
inline bool equally_competitive(const Order& o1, const Order& o2) noexcept {
    return o1.price() == o2.price() && o1.timestamp() == o2.timestamp();
}

inline bool strictly_more_competitive(Side side, const Order& o1, const Order& o2) noexcept {
    const bool weak = side == Side::Bid ? bid_more_competitive(o1, o2) : ask_more_competitive(o1, o2);
    return weak && !equally_competitive(o1, o2);
}

struct AdmissibilityIssue {
    enum class Kind : std::uint8_t { DuplicateId, DuplicateTimestamp };
    Kind kind;
    Side side;
    std::uint64_t value;  // the repeated id or timestamp
    std::size_t occurrences;

    friend bool operator==(const AdmissibilityIssue&, const AdmissibilityIssue&) = default;
};

/// Every repeated id and timestamp, per side. Empty iff the domain is admissible.
struct AdmissibilityReport {
    std::vector<AdmissibilityIssue> issues;

    bool admissible() const noexcept { return issues.empty(); }
    std::string describe() const;
};

AdmissibilityReport check_admissible(const OrderDomain& domain);
/// Same checks restricted to one side's orders.
AdmissibilityReport check_admissible(std::span<const Order> orders, Side side);

/// Thrown by operations whose precondition is an admissible domain.
class InadmissibleDomain : public std::invalid_argument {
public:
    explicit InadmissibleDomain(AdmissibilityReport report);
    const AdmissibilityReport& report() const noexcept { return report_; }

private:
    AdmissibilityReport report_;
};

/// Throws InadmissibleDomain unless check_admissible() comes back clean.
void require_admissible(const OrderDomain& domain);
void require_admissible(std::span<const Order> orders, Side side);

Quantity vol_orders(std::span<const Order> orders);
Quantity vol_transactions(std::span<const Transaction> transactions);
inline Quantity vol_transactions(const Matching& m) { return vol_transactions(m.transactions()); }

Quantity qty_bid(const Matching& m, OrderId bid_id);
Quantity qty_ask(const Matching& m, OrderId ask_id);
Quantity qty_pair(const Matching& m, OrderId bid_id, OrderId ask_id);

using QuantityById = std::unordered_map<OrderId, Quantity>;

/// Traded quantity per participating order id on one side, in one pass.
QuantityById traded_quantities(const Matching& m, Side side);

/// Total bid quantity priced at or above `price`.
Quantity demand(std::span<const Order> bids, Price price);
/// Total ask quantity priced at or below `price`.
Quantity supply(std::span<const Order> asks, Price price);

}  // namespace fairmatch
