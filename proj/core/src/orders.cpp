#include "fairmatch/orders.hpp"

#include <algorithm>
#include <sstream>

namespace fairmatch {

namespace {

// Sorted scan for repeated values; reports each repeated value once.
void collect_duplicates(std::vector<std::uint64_t> values, AdmissibilityIssue::Kind kind, Side side,
                        std::vector<AdmissibilityIssue>& out) {
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i + 1;
        while (j < values.size() && values[j] == values[i]) ++j;
        if (j - i > 1) out.push_back({kind, side, values[i], j - i});
        i = j;
    }
}

void check_side(std::span<const Order> orders, Side side, std::vector<AdmissibilityIssue>& out) {
    std::vector<std::uint64_t> ids;
    std::vector<std::uint64_t> times;
    ids.reserve(orders.size());
    times.reserve(orders.size());
    for (const auto& o : orders) {
        ids.push_back(o.id());
        times.push_back(o.timestamp());
    }
    collect_duplicates(std::move(ids), AdmissibilityIssue::Kind::DuplicateId, side, out);
    collect_duplicates(std::move(times), AdmissibilityIssue::Kind::DuplicateTimestamp, side, out);
}

}  // namespace

Quantity checked_add(Quantity a, Quantity b) {
    Quantity sum = 0;
    if (__builtin_add_overflow(a, b, &sum)) throw std::overflow_error("quantity sum overflows 64 bits");
    return sum;
}

std::string AdmissibilityReport::describe() const {
    std::ostringstream os;
    for (const auto& issue : issues) {
        os << to_string(issue.side) << " side: "
           << (issue.kind == AdmissibilityIssue::Kind::DuplicateId ? "duplicate id " : "duplicate timestamp ")
           << issue.value << " (" << issue.occurrences << " occurrences)\n";
    }
    return os.str();
}

AdmissibilityReport check_admissible(const OrderDomain& domain) {
    AdmissibilityReport report;
    check_side(domain.bids, Side::Bid, report.issues);
    check_side(domain.asks, Side::Ask, report.issues);
    return report;
}

AdmissibilityReport check_admissible(std::span<const Order> orders, Side side) {
    AdmissibilityReport report;
    check_side(orders, side, report.issues);
    return report;
}

InadmissibleDomain::InadmissibleDomain(AdmissibilityReport report)
    : std::invalid_argument("order domain is not admissible:\n" + report.describe()), report_(std::move(report)) {}

void require_admissible(const OrderDomain& domain) {
    auto report = check_admissible(domain);
    if (!report.admissible()) throw InadmissibleDomain(std::move(report));
}

void require_admissible(std::span<const Order> orders, Side side) {
    auto report = check_admissible(orders, side);
    if (!report.admissible()) throw InadmissibleDomain(std::move(report));
}

Quantity vol_orders(std::span<const Order> orders) {
    Quantity total = 0;
    for (const auto& o : orders) total = checked_add(total, o.quantity());
    return total;
}

Quantity vol_transactions(std::span<const Transaction> transactions) {
    Quantity total = 0;
    for (const auto& t : transactions) total = checked_add(total, t.quantity());
    return total;
}

Quantity qty_bid(const Matching& m, OrderId bid_id) {
    Quantity total = 0;
    for (const auto& t : m) {
        if (t.bid_id() == bid_id) total = checked_add(total, t.quantity());
    }
    return total;
}

Quantity qty_ask(const Matching& m, OrderId ask_id) {
    Quantity total = 0;
    for (const auto& t : m) {
        if (t.ask_id() == ask_id) total = checked_add(total, t.quantity());
    }
    return total;
}

Quantity qty_pair(const Matching& m, OrderId bid_id, OrderId ask_id) {
    Quantity total = 0;
    for (const auto& t : m) {
        if (t.bid_id() == bid_id && t.ask_id() == ask_id) total = checked_add(total, t.quantity());
    }
    return total;
}

QuantityById traded_quantities(const Matching& m, Side side) {
    QuantityById totals;
    totals.reserve(m.size());
    for (const auto& t : m) {
        auto& slot = totals[side == Side::Bid ? t.bid_id() : t.ask_id()];
        slot = checked_add(slot, t.quantity());
    }
    return totals;
}

Quantity demand(std::span<const Order> bids, Price price) {
    Quantity total = 0;
    for (const auto& b : bids) {
        if (b.price() >= price) total = checked_add(total, b.quantity());
    }
    return total;
}

Quantity supply(std::span<const Order> asks, Price price) {
    Quantity total = 0;
    for (const auto& a : asks) {
        if (a.price() <= price) total = checked_add(total, a.quantity());
    }
    return total;
}

}  // namespace fairmatch
