#include "fairmatch/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace fairmatch::csv {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::uint64_t parse_natural(std::string_view field, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
    }
    return value;
}

std::optional<Price> parse_price(std::string_view field, std::size_t line) {
    if (field == "MKT") return std::nullopt;
    return parse_natural(field, line, "price");
}

// Calls `row(fields, line_number)` for each data row after checking the header.
template <typename Row>
void for_each_row(std::istream& in, std::string_view header, std::size_t columns, Row row) {
    std::string line;
    std::size_t number = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++number;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (!seen_header) {
            std::string normalized;
            for (const auto f : split(text)) {
                if (!normalized.empty()) normalized += ',';
                normalized += f;
            }
            if (normalized != header) {
                throw ParseError(number, "expected header '" + std::string(header) + "'");
            }
            seen_header = true;
            continue;
        }
        const auto fields = split(text);
        if (fields.size() != columns) {
            throw ParseError(number, "expected " + std::to_string(columns) + " fields, got " +
                                         std::to_string(fields.size()));
        }
        row(fields, number);
    }
    if (in.bad()) throw std::runtime_error("read error");
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

// Rewraps a ParseError with the file name in front.
template <typename F>
auto with_path(const std::filesystem::path& path, F f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.message());
    }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

std::vector<Order> read_orders(std::istream& in, Side side) {
    std::vector<Order> orders;
    for_each_row(in, kOrdersHeader, 4, [&](const auto& f, std::size_t line) {
        const auto qty = parse_natural(f[2], line, "quantity");
        if (qty == 0) throw ParseError(line, "quantity must be at least 1");
        const auto price = parse_price(f[3], line);
        orders.emplace_back(parse_natural(f[0], line, "id"), parse_natural(f[1], line, "timestamp"), qty,
                            price ? *price : (side == Side::Bid ? kMarketBidPrice : Price{0}));
    });
    return orders;
}

std::vector<RawOrderEvent> read_events(std::istream& in) {
    std::vector<RawOrderEvent> events;
    for_each_row(in, kEventsHeader, 6, [&](const auto& f, std::size_t line) {
        RawOrderEvent e;
        e.id = parse_natural(f[0], line, "id");
        e.timestamp = parse_natural(f[1], line, "timestamp");
        e.quantity = parse_natural(f[2], line, "quantity");
        if (f[4] == "B") {
            e.side = Side::Bid;
        } else if (f[4] == "A") {
            e.side = Side::Ask;
        } else {
            throw ParseError(line, "side must be B or A");
        }
        if (f[5] == "N") {
            e.action = EventAction::New;
        } else if (f[5] == "U") {
            e.action = EventAction::Update;
        } else if (f[5] == "D") {
            e.action = EventAction::Delete;
        } else {
            throw ParseError(line, "action must be N, U or D");
        }
        // Deletes carry no price; allow the field to be left blank.
        if (!(e.action == EventAction::Delete && f[3].empty())) e.price = parse_price(f[3], line);
        if (e.action != EventAction::Delete && e.quantity == 0) {
            throw ParseError(line, "quantity must be at least 1");
        }
        events.push_back(e);
    });
    return events;
}

Matching read_trades(std::istream& in) {
    std::vector<Transaction> trades;
    for_each_row(in, kTradesHeader, 4, [&](const auto& f, std::size_t line) {
        const auto qty = parse_natural(f[2], line, "quantity");
        if (qty == 0) throw ParseError(line, "quantity must be at least 1");
        trades.emplace_back(parse_natural(f[0], line, "bid_id"), parse_natural(f[1], line, "ask_id"), qty,
                            parse_natural(f[3], line, "price"));
    });
    return Matching(std::move(trades));
}

void write_orders(std::ostream& out, std::span<const Order> orders) {
    out << kOrdersHeader << '\n';
    for (const auto& o : orders) {
        out << o.id() << ',' << o.timestamp() << ',' << o.quantity() << ',' << o.price() << '\n';
    }
}

void write_trades(std::ostream& out, const Matching& trades) {
    out << kTradesHeader << '\n';
    for (const auto& t : trades) {
        out << t.bid_id() << ',' << t.ask_id() << ',' << t.quantity() << ',' << t.price() << '\n';
    }
}

std::vector<Order> load_orders(const std::filesystem::path& path, Side side) {
    auto in = open_input(path);
    return with_path(path, [&] { return read_orders(in, side); });
}

std::vector<RawOrderEvent> load_events(const std::filesystem::path& path) {
    auto in = open_input(path);
    return with_path(path, [&] { return read_events(in); });
}

Matching load_trades(const std::filesystem::path& path) {
    auto in = open_input(path);
    return with_path(path, [&] { return read_trades(in); });
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace fairmatch::csv
