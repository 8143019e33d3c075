#include "fairmatch/algorithms.hpp"

#include <algorithm>

#include "fairmatch/orders.hpp"

namespace fairmatch {

namespace {

// Price and timestamp never tie on an admissible side, so an unstable sort
// already yields a unique order. Inadmissible input still sorts
// deterministically, just not by input position.
template <typename Less>
std::vector<Order> sorted_copy(std::span<const Order> orders, Less less) {
    std::vector<Order> out(orders.begin(), orders.end());
    std::sort(out.begin(), out.end(), less);
    return out;
}

// Pending transactions and unconsumed orders as seen at one reassignment step.
void notify(const ReassignObserver& observer, std::span<const Transaction> txns, std::size_t i, Quantity txn_left,
            std::span<const Order> orders, std::size_t j, Quantity order_left) {
    std::vector<Transaction> pending;
    pending.reserve(txns.size() - i);
    pending.push_back(txns[i].with_quantity(txn_left));
    pending.insert(pending.end(), txns.begin() + static_cast<std::ptrdiff_t>(i) + 1, txns.end());
    std::vector<Order> remaining;
    remaining.reserve(orders.size() - j);
    remaining.push_back(orders[j].with_quantity(order_left));
    remaining.insert(remaining.end(), orders.begin() + static_cast<std::ptrdiff_t>(j) + 1, orders.end());
    observer(pending, remaining);
}

// Walks the sorted transactions and sorted orders in lockstep, moving each
// transaction's quantity onto the orders from the top down. `rebind` builds
// the output transaction from (source transaction, order, quantity).
template <typename Rebind>
Matching reassign(std::span<const Transaction> txns, std::span<const Order> orders, const ReassignObserver& observer,
                  Rebind rebind) {
    std::vector<Transaction> out;
    out.reserve(txns.size() + orders.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Quantity txn_left = txns.empty() ? 0 : txns[0].quantity();
    Quantity order_left = orders.empty() ? 0 : orders[0].quantity();
    while (i < txns.size() && j < orders.size()) {
        if (observer) notify(observer, txns, i, txn_left, orders, j, order_left);
        const Quantity q = std::min(txn_left, order_left);
        out.push_back(rebind(txns[i], orders[j], q));
        txn_left -= q;
        order_left -= q;
        if (txn_left == 0 && ++i < txns.size()) txn_left = txns[i].quantity();
        if (order_left == 0 && ++j < orders.size()) order_left = orders[j].quantity();
    }
    return Matching(std::move(out));
}

Transaction rebind_ask(const Transaction& t, const Order& a, Quantity q) {
    return Transaction(t.bid_id(), a.id(), q, t.price());
}

}  // namespace

SortedBook SortedBook::bids_descending(std::span<const Order> bids) {
    return {sorted_copy(bids,
                        [](const Order& x, const Order& y) {
                            return x.price() > y.price() || (x.price() == y.price() && x.timestamp() < y.timestamp());
                        }),
            BookOrder::BidsDescending};
}

SortedBook SortedBook::asks_descending(std::span<const Order> asks) {
    return {sorted_copy(asks,
                        [](const Order& x, const Order& y) {
                            return x.price() < y.price() || (x.price() == y.price() && x.timestamp() < y.timestamp());
                        }),
            BookOrder::AsksDescending};
}

SortedBook SortedBook::asks_ascending(std::span<const Order> asks) {
    return {sorted_copy(asks,
                        [](const Order& x, const Order& y) {
                            return x.price() > y.price() || (x.price() == y.price() && x.timestamp() > y.timestamp());
                        }),
            BookOrder::AsksAscending};
}

Matching match(const SortedBook& bids, const SortedBook& asks, Matching init) {
    if (bids.order_kind() != BookOrder::BidsDescending) {
        throw std::invalid_argument("match: bid book must be sorted by decreasing competitiveness");
    }
    if (asks.order_kind() == BookOrder::BidsDescending) {
        throw std::invalid_argument("match: ask book carries a bid ordering");
    }
    const auto b = bids.orders();
    const auto a = asks.orders();

    std::vector<Transaction> out(init.begin(), init.end());
    out.reserve(out.size() + b.size() + a.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Quantity bid_left = b.empty() ? 0 : b[0].quantity();
    Quantity ask_left = a.empty() ? 0 : a[0].quantity();
    while (i < b.size() && j < a.size()) {
        if (b[i].price() < a[j].price()) {
            if (++j < a.size()) ask_left = a[j].quantity();
            continue;
        }
        const Quantity q = std::min(bid_left, ask_left);
        out.emplace_back(b[i].id(), a[j].id(), q, a[j].price());
        bid_left -= q;
        ask_left -= q;
        if (bid_left == 0 && ++i < b.size()) bid_left = b[i].quantity();
        if (ask_left == 0 && ++j < a.size()) ask_left = a[j].quantity();
    }
    return Matching(std::move(out));
}

Matching foa(const Matching& m, std::span<const Order> asks, const ReassignObserver& observer) {
    if (vol_transactions(m) > vol_orders(asks)) {
        throw SupplyShortfall("foa: matching volume exceeds total ask quantity");
    }
    std::vector<Transaction> txns(m.begin(), m.end());
    std::stable_sort(txns.begin(), txns.end(),
                     [](const Transaction& x, const Transaction& y) { return x.price() < y.price(); });
    const auto book = SortedBook::asks_descending(asks);
    return reassign(txns, book.orders(), observer, rebind_ask);
}

Matching fob(const Matching& m, std::span<const Order> bids, const ReassignObserver& observer) {
    if (vol_transactions(m) > vol_orders(bids)) {
        throw SupplyShortfall("fob: matching volume exceeds total bid quantity");
    }
    std::vector<Transaction> txns(m.begin(), m.end());
    std::stable_sort(txns.begin(), txns.end(),
                     [](const Transaction& x, const Transaction& y) { return x.price() > y.price(); });
    const auto book = SortedBook::bids_descending(bids);
    return reassign(txns, book.orders(), observer, [](const Transaction& t, const Order& b, Quantity q) {
        return Transaction(b.id(), t.ask_id(), q, t.price());
    });
}

Matching fair(const Matching& m, const OrderDomain& domain) {
    require_admissible(domain);
    return foa(fob(m, domain.bids), domain.asks);
}

Matching assign_price(Price price, const Matching& m) {
    std::vector<Transaction> out;
    out.reserve(m.size());
    for (const auto& t : m) out.push_back(t.with_price(price));
    return Matching(std::move(out));
}

UniformAuction um(const OrderDomain& domain) {
    require_admissible(domain);
    auto raw = match(SortedBook::bids_descending(domain.bids), SortedBook::asks_descending(domain.asks));
    if (raw.empty()) return {};
    const Price clearing = raw.back().price();
    return {assign_price(clearing, raw), clearing};
}

Matching mm(const OrderDomain& domain) {
    require_admissible(domain);
    const auto asks = SortedBook::asks_ascending(domain.asks);
    const auto raw = match(SortedBook::bids_descending(domain.bids), asks);

    // Same result as foa(raw, domain.asks) without its two sorts. The ask
    // book reversed is the descending book, and raw prices never increase
    // along the walk, so reversing the transactions and then each run of
    // equal prices gives the stable increasing-price order.
    std::vector<Order> descending(asks.orders().rbegin(), asks.orders().rend());
    std::vector<Transaction> txns(raw.begin(), raw.end());
    std::reverse(txns.begin(), txns.end());
    for (auto run = txns.begin(); run != txns.end();) {
        const auto end = std::find_if(run, txns.end(), [&](const Transaction& t) { return t.price() != run->price(); });
        std::reverse(run, end);
        run = end;
    }
    return reassign(txns, descending, {}, rebind_ask);
}

}  // namespace fairmatch
