#pragma once

// Compliance checking of an exchange's trade book against the reference
// matching. Per-order traded quantities of fair matchings with equal volume
// coincide, so the exchange's book is compared on per-order totals only;
// who trades with whom is never inspected.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairmatch/orders.hpp"
#include "fairmatch/properties.hpp"
#include "fairmatch/types.hpp"

namespace fairmatch {

inline constexpr std::string_view kCompliantMessage = "Matching does not violate the guidelines";
inline constexpr std::string_view kViolationMessage = "Violation detected!";

enum class EventAction : std::uint8_t { New, Update, Delete };

/// One line of an order-book event log. A missing price is a market order.
/// Quantity is ignored for deletes.
struct RawOrderEvent {
    OrderId id = 0;
    Timestamp timestamp = 0;
    Quantity quantity = 0;
    std::optional<Price> price;
    Side side = Side::Bid;
    EventAction action = EventAction::New;

    friend bool operator==(const RawOrderEvent&, const RawOrderEvent&) = default;
};

struct EventIssue {
    std::size_t event_index;  // position in the input sequence
    std::string reason;
};

struct PreprocessResult {
    OrderDomain domain;
    std::vector<EventIssue> issues;     // events that could not be applied
    AdmissibilityReport admissibility;  // post-replay constraint failures
    std::vector<std::string> notes;
};

/// Replays events in timestamp order (input order breaks ties) and keeps the
/// final state of each live order. An update replaces quantity and price and
/// takes the update's timestamp. Market asks are priced 0, market bids
/// kMarketBidPrice. Updates stamped with the latest timestamp in the log are
/// noted, since exchanges have been seen to inject such entries at auction
/// time.
PreprocessResult preprocess(std::span<const RawOrderEvent> events);

enum class CheckMode : std::uint8_t { Uniform, Maximum };
enum class Verdict : std::uint8_t { Compliant, Violation };

const char* to_string(CheckMode mode) noexcept;
std::string_view verdict_message(Verdict verdict) noexcept;

struct Discrepancy {
    OrderId id;
    Side side;
    Quantity reference;
    Quantity exchange;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct CheckReport {
    CheckMode mode = CheckMode::Uniform;
    Verdict verdict = Verdict::Compliant;
    bool uniform = true;
    Quantity volume_reference = 0;
    Quantity volume_exchange = 0;
    std::optional<Price> clearing_price;  // reference clearing price, uniform mode
    std::vector<Discrepancy> discrepancies;
    std::vector<ViolationDetail> validity_details;
    std::vector<std::string> notes;

    bool volume_mismatch() const noexcept { return volume_reference != volume_exchange; }
};

/// Violation if the exchange's book is not a valid matching, is not uniform
/// (uniform mode only), differs in volume from the reference, or differs in
/// any order's traded quantity. Throws InadmissibleDomain.
CheckReport check_tradebook(const OrderDomain& domain, const Matching& exchange, CheckMode mode);

/// key=value lines, then one `discrepancy,` row per differing order and one
/// `validity,` row per validity failure.
void write_report(std::ostream& os, const CheckReport& report);
std::string format_report(const CheckReport& report);

}  // namespace fairmatch
