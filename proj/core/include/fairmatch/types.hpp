#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace fairmatch {

using OrderId = std::uint64_t;
using Timestamp = std::uint64_t;  // microseconds, lower is earlier
using Quantity = std::uint64_t;
using Price = std::uint64_t;      // smallest currency unit

/// Limit price substituted for a market bid. Market asks get price 0.
inline constexpr Price kMarketBidPrice = std::numeric_limits<Price>::max();

enum class Side : std::uint8_t { Bid, Ask };

const char* to_string(Side side) noexcept;

/// One side of a trade request. Quantity is always at least one.
class Order {
public:
    /// Throws std::invalid_argument when quantity is zero.
    Order(OrderId id, Timestamp timestamp, Quantity quantity, Price price);

    OrderId id() const noexcept { return id_; }
    Timestamp timestamp() const noexcept { return timestamp_; }
    Quantity quantity() const noexcept { return quantity_; }
    Price price() const noexcept { return price_; }

    /// Same order with a different remaining quantity.
    Order with_quantity(Quantity quantity) const { return {id_, timestamp_, quantity, price_}; }

    friend bool operator==(const Order&, const Order&) = default;

private:
    OrderId id_;
    Timestamp timestamp_;
    Quantity quantity_;
    Price price_;
};

/// A matched bid/ask pair. Quantity is always at least one.
class Transaction {
public:
    /// Throws std::invalid_argument when quantity is zero.
    Transaction(OrderId bid_id, OrderId ask_id, Quantity quantity, Price price);

    OrderId bid_id() const noexcept { return bid_id_; }
    OrderId ask_id() const noexcept { return ask_id_; }
    Quantity quantity() const noexcept { return quantity_; }
    Price price() const noexcept { return price_; }

    Transaction with_quantity(Quantity quantity) const { return {bid_id_, ask_id_, quantity, price_}; }
    Transaction with_price(Price price) const { return {bid_id_, ask_id_, quantity_, price}; }

    friend bool operator==(const Transaction&, const Transaction&) = default;

private:
    OrderId bid_id_;
    OrderId ask_id_;
    Quantity quantity_;
    Price price_;
};

/// The bid and ask books under consideration. Sequences, not sets: duplicate
/// detection is the job of check_admissible().
struct OrderDomain {
    std::vector<Order> bids;
    std::vector<Order> asks;

    friend bool operator==(const OrderDomain&, const OrderDomain&) = default;
};

/// An ordered sequence of transactions.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Transaction> transactions) : transactions_(std::move(transactions)) {}

    std::span<const Transaction> transactions() const noexcept { return transactions_; }
    std::size_t size() const noexcept { return transactions_.size(); }
    bool empty() const noexcept { return transactions_.empty(); }

    auto begin() const noexcept { return transactions_.begin(); }
    auto end() const noexcept { return transactions_.end(); }
    const Transaction& operator[](std::size_t i) const { return transactions_[i]; }
    const Transaction& back() const { return transactions_.back(); }

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Transaction> transactions_;
};

}  // namespace fairmatch
