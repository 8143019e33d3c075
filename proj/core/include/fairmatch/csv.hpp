#pragma once

// CSV formats:
//   orders  id,timestamp,quantity,price          price may be MKT
//   events  id,timestamp,quantity,price,side,action   side B|A, action N|U|D,
//           price may be blank on deletes
//   trades  bid_id,ask_id,quantity,price
// A header line is required unless the file is completely empty. Blank lines
// are skipped; surrounding whitespace in fields is ignored.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairmatch/checker.hpp"
#include "fairmatch/types.hpp"

namespace fairmatch::csv {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

inline constexpr const char* kOrdersHeader = "id,timestamp,quantity,price";
inline constexpr const char* kEventsHeader = "id,timestamp,quantity,price,side,action";
inline constexpr const char* kTradesHeader = "bid_id,ask_id,quantity,price";

/// MKT resolves to 0 for asks and kMarketBidPrice for bids.
std::vector<Order> read_orders(std::istream& in, Side side);
std::vector<RawOrderEvent> read_events(std::istream& in);
Matching read_trades(std::istream& in);

void write_orders(std::ostream& out, std::span<const Order> orders);
void write_trades(std::ostream& out, const Matching& trades);

/// File variants; a missing or unreadable file throws std::runtime_error.
std::vector<Order> load_orders(const std::filesystem::path& path, Side side);
std::vector<RawOrderEvent> load_events(const std::filesystem::path& path);
Matching load_trades(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace fairmatch::csv
