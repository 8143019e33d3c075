#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "fairmatch/orders.hpp"
#include "instances.hpp"

namespace fairmatch {
namespace {

using testing::two_pair_domain;

TEST(OrderTest, ZeroQuantityIsRejected) {
    EXPECT_THROW(Order(1, 1, 0, 10), std::invalid_argument);
    EXPECT_THROW(Transaction(1, 1, 0, 10), std::invalid_argument);
    EXPECT_NO_THROW(Order(1, 1, 1, 0));
}

TEST(OrderTest, Tradable) {
    EXPECT_TRUE(is_tradable(Order(1, 1, 1, 100), Order(1, 2, 1, 70)));
    EXPECT_FALSE(is_tradable(Order(2, 1, 1, 85), Order(2, 2, 1, 90)));
    EXPECT_TRUE(is_tradable(Order(3, 1, 1, 42), Order(3, 2, 1, 42)));
}

TEST(OrderTest, BidCompetitiveness) {
    EXPECT_TRUE(bid_more_competitive(Order(1, 5, 1, 100), Order(2, 1, 1, 85)));
    EXPECT_TRUE(bid_more_competitive(Order(1, 2, 1, 90), Order(2, 7, 1, 90)));
    EXPECT_FALSE(bid_more_competitive(Order(1, 7, 1, 90), Order(2, 2, 1, 90)));
}

TEST(OrderTest, AskCompetitiveness) {
    EXPECT_TRUE(ask_more_competitive(Order(1, 3, 1, 70), Order(2, 1, 1, 90)));
    EXPECT_TRUE(ask_more_competitive(Order(1, 1, 1, 70), Order(2, 9, 1, 70)));
    EXPECT_FALSE(ask_more_competitive(Order(1, 1, 1, 90), Order(2, 9, 1, 70)));
}

TEST(OrderTest, EqualPriceAndTimeIsNotStrict) {
    const Order x(1, 4, 1, 50);
    const Order y(2, 4, 3, 50);
    EXPECT_TRUE(bid_more_competitive(x, y));
    EXPECT_TRUE(bid_more_competitive(y, x));
    EXPECT_FALSE(strictly_more_competitive(Side::Bid, x, y));
    EXPECT_FALSE(strictly_more_competitive(Side::Ask, y, x));
}

TEST(AdmissibilityTest, DuplicateBidIdIsReported) {
    OrderDomain d{{Order(7, 1, 1, 10), Order(7, 2, 1, 11)}, {}};
    const auto report = check_admissible(d);
    ASSERT_EQ(report.issues.size(), 1u);
    EXPECT_EQ(report.issues[0].kind, AdmissibilityIssue::Kind::DuplicateId);
    EXPECT_EQ(report.issues[0].side, Side::Bid);
    EXPECT_EQ(report.issues[0].value, 7u);
    EXPECT_EQ(report.issues[0].occurrences, 2u);
    EXPECT_THROW(require_admissible(d), InadmissibleDomain);
}

TEST(AdmissibilityTest, DuplicateTimestampsPerSide) {
    OrderDomain d{{}, {Order(1, 9, 1, 10), Order(2, 9, 1, 11), Order(3, 9, 1, 12)}};
    const auto report = check_admissible(d);
    ASSERT_EQ(report.issues.size(), 1u);
    EXPECT_EQ(report.issues[0].kind, AdmissibilityIssue::Kind::DuplicateTimestamp);
    EXPECT_EQ(report.issues[0].side, Side::Ask);
    EXPECT_EQ(report.issues[0].occurrences, 3u);
}

TEST(AdmissibilityTest, CleanDomains) {
    EXPECT_TRUE(check_admissible(two_pair_domain()).admissible());
    EXPECT_TRUE(check_admissible(OrderDomain{}).admissible());
    // Id and timestamp namespaces are per side.
    OrderDomain shared{{Order(1, 1, 1, 10)}, {Order(1, 1, 1, 10)}};
    EXPECT_TRUE(check_admissible(shared).admissible());
}

TEST(AccountingTest, VolOrders) {
    EXPECT_EQ(vol_orders({}), 0u);
    EXPECT_EQ(vol_orders(two_pair_domain().bids), 2u);
    const std::vector<Order> two{Order(1, 1, 3, 1), Order(2, 2, 5, 1)};
    EXPECT_EQ(vol_orders(two), 8u);
}

TEST(AccountingTest, VolTransactions) {
    EXPECT_EQ(vol_transactions(Matching{}), 0u);
    EXPECT_EQ(vol_transactions(Matching({Transaction(1, 1, 1, 70)})), 1u);
    EXPECT_EQ(vol_transactions(Matching({Transaction(1, 1, 2, 70), Transaction(2, 2, 1, 70)})), 3u);
}

TEST(AccountingTest, PerOrderQuantities) {
    const Price p = 100;
    EXPECT_EQ(qty_bid(Matching({Transaction(2, 2, 2, p)}), 2), 2u);
    EXPECT_EQ(qty_ask(Matching{}, 5), 0u);
    const Matching m({Transaction(2, 2, 1, p), Transaction(2, 1, 1, p)});
    EXPECT_EQ(qty_pair(m, 2, 1), 1u);
    EXPECT_EQ(qty_pair(m, 1, 1), 0u);
    EXPECT_EQ(qty_bid(m, 2), 2u);
    EXPECT_EQ(qty_ask(m, 1), 1u);
}

TEST(AccountingTest, OverflowIsAFault) {
    const Quantity big = std::numeric_limits<Quantity>::max() / 2 + 1;
    const std::vector<Order> orders{Order(1, 1, big, 1), Order(2, 2, big, 1)};
    EXPECT_THROW(vol_orders(orders), std::overflow_error);
    EXPECT_THROW(checked_add(std::numeric_limits<Quantity>::max(), 1), std::overflow_error);
}

TEST(AccountingTest, DemandAndSupply) {
    const auto d = two_pair_domain();
    EXPECT_EQ(demand(d.bids, 90), 1u);
    EXPECT_EQ(supply(d.asks, 90), 2u);
    EXPECT_EQ(demand(d.bids, 0), vol_orders(d.bids));
    EXPECT_EQ(supply(d.asks, 0), 0u);
    const std::vector<Order> with_zero{Order(1, 1, 4, 0), Order(2, 2, 1, 5)};
    EXPECT_EQ(supply(with_zero, 0), 4u);
    EXPECT_EQ(demand({}, 10), 0u);
    EXPECT_EQ(supply({}, 10), 0u);
}

TEST(AccountingProperty, StrictCompetitivenessIsATotalOrderOnAdmissibleSides) {
    testing::Rng rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const auto d = testing::random_domain(rng, {.max_orders = 12, .max_price = 30});
        for (const auto side : {Side::Bid, Side::Ask}) {
            const auto& orders = side == Side::Bid ? d.bids : d.asks;
            for (const auto& x : orders) {
                for (const auto& y : orders) {
                    if (&x == &y) continue;
                    const bool xy = strictly_more_competitive(side, x, y);
                    const bool yx = strictly_more_competitive(side, y, x);
                    ASSERT_NE(xy, yx);
                    for (const auto& z : orders) {
                        if (xy && strictly_more_competitive(side, y, z)) {
                            ASSERT_TRUE(strictly_more_competitive(side, x, z));
                        }
                    }
                }
            }
        }
    }
}

TEST(AccountingProperty, VolumesAreAdditiveAndConserved) {
    testing::Rng rng(12);
    for (int iter = 0; iter < 300; ++iter) {
        const auto d = testing::random_domain(rng);
        std::vector<Order> both = d.bids;
        both.insert(both.end(), d.asks.begin(), d.asks.end());
        ASSERT_EQ(vol_orders(both), vol_orders(d.bids) + vol_orders(d.asks));

        const auto m = testing::random_valid_matching(d, rng);
        Quantity by_bid = 0;
        for (const auto& [id, q] : traded_quantities(m, Side::Bid)) by_bid += q;
        Quantity by_ask = 0;
        for (const auto& [id, q] : traded_quantities(m, Side::Ask)) by_ask += q;
        ASSERT_EQ(by_bid, vol_transactions(m));
        ASSERT_EQ(by_ask, vol_transactions(m));

        Quantity sum_over_bids = 0;
        for (const auto& b : d.bids) sum_over_bids += qty_bid(m, b.id());
        ASSERT_EQ(sum_over_bids, vol_transactions(m));
    }
}

}  // namespace
}  // namespace fairmatch
