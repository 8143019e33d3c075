#include "fairmatch/types.hpp"

#include <stdexcept>
#include <string>

namespace fairmatch {

const char* to_string(Side side) noexcept { return side == Side::Bid ? "bid" : "ask"; }

Order::Order(OrderId id, Timestamp timestamp, Quantity quantity, Price price)
    : id_(id), timestamp_(timestamp), quantity_(quantity), price_(price) {
    if (quantity == 0) {
        throw std::invalid_argument("order " + std::to_string(id) + " has zero quantity");
    }
}

Transaction::Transaction(OrderId bid_id, OrderId ask_id, Quantity quantity, Price price)
    : bid_id_(bid_id), ask_id_(ask_id), quantity_(quantity), price_(price) {
    if (quantity == 0) {
        throw std::invalid_argument("transaction (" + std::to_string(bid_id) + ", " + std::to_string(ask_id) +
                                    ") has zero quantity");
    }
}

}  // namespace fairmatch
