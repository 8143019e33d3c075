#include "fairmatch/checker.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "fairmatch/algorithms.hpp"

namespace fairmatch {

namespace {

struct LiveOrder {
    Order order;
    bool alive;
};

// Orders of one side in first-NEW order; deleted slots are kept but dead.
struct SideBook {
    std::vector<LiveOrder> slots;
    std::map<OrderId, std::size_t> live;  // id -> slot

    void emit(std::vector<Order>& out) const {
        for (const auto& s : slots) {
            if (s.alive) out.push_back(s.order);
        }
    }
};

Price resolve_price(const RawOrderEvent& e) {
    if (e.price) return *e.price;
    return e.side == Side::Bid ? kMarketBidPrice : Price{0};
}

void compare_side(std::span<const Order> orders, Side side, const Matching& reference, const Matching& exchange,
                  std::vector<Discrepancy>& out) {
    const auto ref = traded_quantities(reference, side);
    const auto ex = traded_quantities(exchange, side);
    auto lookup = [](const QuantityById& m, OrderId id) {
        const auto it = m.find(id);
        return it == m.end() ? Quantity{0} : it->second;
    };
    for (const auto& o : orders) {
        const Quantity r = lookup(ref, o.id());
        const Quantity e = lookup(ex, o.id());
        if (r != e) out.push_back({o.id(), side, r, e});
    }
}

}  // namespace

PreprocessResult preprocess(std::span<const RawOrderEvent> events) {
    std::vector<std::size_t> order(events.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return events[x].timestamp < events[y].timestamp; });

    Timestamp latest = 0;
    for (const auto& e : events) latest = std::max(latest, e.timestamp);

    PreprocessResult result;
    SideBook books[2];
    for (const std::size_t idx : order) {
        const auto& e = events[idx];
        auto& book = books[e.side == Side::Bid ? 0 : 1];
        const auto it = book.live.find(e.id);
        const std::string who = std::string(to_string(e.side)) + " " + std::to_string(e.id);

        if (e.action != EventAction::Delete && e.quantity == 0) {
            result.issues.push_back({idx, "zero quantity for " + who});
            continue;
        }
        switch (e.action) {
            case EventAction::New:
                if (it != book.live.end()) {
                    result.issues.push_back({idx, "new order for live " + who});
                    break;
                }
                book.live.emplace(e.id, book.slots.size());
                book.slots.push_back({Order(e.id, e.timestamp, e.quantity, resolve_price(e)), true});
                break;
            case EventAction::Update:
                if (it == book.live.end()) {
                    result.issues.push_back({idx, "update for unknown " + who});
                    break;
                }
                book.slots[it->second].order = Order(e.id, e.timestamp, e.quantity, resolve_price(e));
                if (e.timestamp == latest) {
                    result.notes.push_back("update for " + who + " carries the latest timestamp " +
                                           std::to_string(latest));
                }
                break;
            case EventAction::Delete:
                if (it == book.live.end()) {
                    result.issues.push_back({idx, "delete for unknown " + who});
                    break;
                }
                book.slots[it->second].alive = false;
                book.live.erase(it);
                break;
        }
    }
    books[0].emit(result.domain.bids);
    books[1].emit(result.domain.asks);
    result.admissibility = check_admissible(result.domain);
    return result;
}

const char* to_string(CheckMode mode) noexcept { return mode == CheckMode::Uniform ? "uniform" : "maximum"; }

std::string_view verdict_message(Verdict verdict) noexcept {
    return verdict == Verdict::Compliant ? kCompliantMessage : kViolationMessage;
}

CheckReport check_tradebook(const OrderDomain& domain, const Matching& exchange, CheckMode mode) {
    require_admissible(domain);

    CheckReport report;
    report.mode = mode;
    Matching reference;
    if (mode == CheckMode::Uniform) {
        auto auction = um(domain);
        reference = std::move(auction.matching);
        report.clearing_price = auction.clearing_price;
    } else {
        reference = mm(domain);
    }

    report.validity_details = check_valid_matching(exchange, domain).details;
    report.uniform = is_uniform(exchange);
    report.volume_reference = vol_transactions(reference);
    report.volume_exchange = vol_transactions(exchange);
    compare_side(domain.bids, Side::Bid, reference, exchange, report.discrepancies);
    compare_side(domain.asks, Side::Ask, reference, exchange, report.discrepancies);

    const bool violated = !report.validity_details.empty() || (mode == CheckMode::Uniform && !report.uniform) ||
                          report.volume_mismatch() || !report.discrepancies.empty();
    report.verdict = violated ? Verdict::Violation : Verdict::Compliant;
    return report;
}

void write_report(std::ostream& os, const CheckReport& report) {
    os << "mode=" << to_string(report.mode) << '\n';
    os << "verdict=" << (report.verdict == Verdict::Compliant ? "compliant" : "violation") << '\n';
    os << "message=" << verdict_message(report.verdict) << '\n';
    os << "uniform=" << (report.uniform ? "true" : "false") << '\n';
    os << "volume_reference=" << report.volume_reference << '\n';
    os << "volume_exchange=" << report.volume_exchange << '\n';
    os << "volume_match=" << (report.volume_mismatch() ? "false" : "true") << '\n';
    if (report.mode == CheckMode::Uniform) {
        os << "clearing_price=";
        if (report.clearing_price) {
            os << *report.clearing_price;
        } else {
            os << "none";
        }
        os << '\n';
    }
    os << "discrepancies=" << report.discrepancies.size() << '\n';
    os << "validity_failures=" << report.validity_details.size() << '\n';
    for (const auto& d : report.discrepancies) {
        os << "discrepancy," << d.id << ',' << (d.side == Side::Bid ? 'B' : 'A') << ',' << d.reference << ','
           << d.exchange << '\n';
    }
    for (const auto& v : report.validity_details) os << "validity," << v.describe() << '\n';
    for (const auto& n : report.notes) os << "note," << n << '\n';
}

std::string format_report(const CheckReport& report) {
    std::ostringstream os;
    write_report(os, report);
    return os.str();
}

}  // namespace fairmatch
