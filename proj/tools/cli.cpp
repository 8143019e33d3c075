#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairmatch/algorithms.hpp"
#include "fairmatch/checker.hpp"
#include "fairmatch/csv.hpp"
#include "fairmatch/generate.hpp"
#include "fairmatch/orders.hpp"

namespace fairmatch::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
    std::string bids;
    std::string asks;
    std::string trades;
    std::string raw;
    std::string out;
    std::string dir;
    CheckMode mode = CheckMode::Uniform;
    std::uint64_t seed = 0;
    GeneratorConfig gen;
    Price price = 0;
};

// Raised inside a command to leave with a given status after printing.
struct ExitWith {
    int status;
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int auction(const RunConfig& cfg);
    int check(const RunConfig& cfg);
    int gen(const RunConfig& cfg);
    int bound(const RunConfig& cfg);

private:
    OrderDomain load_domain(const std::string& bids, const std::string& asks, const std::string& raw,
                            std::vector<std::string>* notes = nullptr);
    void require_admissible_or_exit(const OrderDomain& domain, const std::string& label);
    int auction_one(const OrderDomain& domain, CheckMode mode, const std::string& out_path,
                    const std::string& label);
    int check_one(const OrderDomain& domain, const Matching& trades, CheckMode mode, std::vector<std::string> notes,
                  const std::string& report_path, const std::string& label);

    std::ostream& out_;
    std::ostream& err_;
};

std::string prefixed(const std::string& label, std::string_view text) {
    return label.empty() ? std::string(text) : label + ": " + std::string(text);
}

// Instrument stems in `dir` that have every file extension in `exts`.
std::vector<std::string> instruments(const fs::path& dir, std::initializer_list<const char*> exts) {
    if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
    std::vector<std::string> stems;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".bid") continue;
        const auto stem = entry.path().stem().string();
        const bool complete = std::all_of(exts.begin(), exts.end(), [&](const char* ext) {
            return fs::exists(dir / (stem + ext));
        });
        if (!complete) throw std::runtime_error("instrument " + stem + " is missing an input file");
        stems.push_back(stem);
    }
    std::sort(stems.begin(), stems.end());
    return stems;
}

// Worst status across instruments: input errors, then inadmissible, then violations.
int combine(int a, int b) {
    auto rank = [](int s) {
        switch (s) {
            case kExitInput: return 3;
            case kExitInadmissible: return 2;
            case kExitViolation: return 1;
            default: return 0;
        }
    };
    return rank(a) >= rank(b) ? a : b;
}

OrderDomain Runner::load_domain(const std::string& bids, const std::string& asks, const std::string& raw,
                                std::vector<std::string>* notes) {
    if (!raw.empty()) {
        const auto events = csv::load_events(raw);
        auto result = preprocess(events);
        for (const auto& issue : result.issues) {
            err_ << "warning: event " << issue.event_index << ": " << issue.reason << '\n';
        }
        if (notes != nullptr) *notes = std::move(result.notes);
        return std::move(result.domain);
    }
    if (bids.empty() || asks.empty()) {
        err_ << "error: both --bids and --asks (or --raw) are required\n";
        throw ExitWith{kExitInput};
    }
    return {csv::load_orders(bids, Side::Bid), csv::load_orders(asks, Side::Ask)};
}

void Runner::require_admissible_or_exit(const OrderDomain& domain, const std::string& label) {
    const auto report = check_admissible(domain);
    if (report.admissible()) return;
    err_ << prefixed(label, "order domain is not admissible") << '\n' << report.describe();
    throw ExitWith{kExitInadmissible};
}

int Runner::auction_one(const OrderDomain& domain, CheckMode mode, const std::string& out_path,
                        const std::string& label) {
    require_admissible_or_exit(domain, label);
    Matching trades;
    std::optional<Price> clearing;
    if (mode == CheckMode::Uniform) {
        auto result = um(domain);
        trades = std::move(result.matching);
        clearing = result.clearing_price;
    } else {
        trades = mm(domain);
    }

    std::ostringstream summary;
    if (mode == CheckMode::Uniform) {
        summary << "clearing_price=";
        if (clearing) {
            summary << *clearing;
        } else {
            summary << "none";
        }
        summary << '\n';
    }
    summary << "volume=" << vol_transactions(trades) << '\n';

    std::ostringstream csv_text;
    csv::write_trades(csv_text, trades);
    if (out_path.empty()) {
        out_ << csv_text.str();
        err_ << summary.str();
    } else {
        csv::write_file_atomic(out_path, csv_text.str());
        std::istringstream lines(summary.str());
        for (std::string line; std::getline(lines, line);) out_ << prefixed(label, line) << '\n';
    }
    return kExitOk;
}

int Runner::auction(const RunConfig& cfg) {
    if (cfg.dir.empty()) {
        return auction_one(load_domain(cfg.bids, cfg.asks, cfg.raw), cfg.mode, cfg.out, "");
    }
    if (cfg.out.empty()) {
        err_ << "error: --dir requires --out DIR for the trade files\n";
        return kExitInput;
    }
    fs::create_directories(cfg.out);
    int status = kExitOk;
    for (const auto& stem : instruments(cfg.dir, {".ask"})) {
        const fs::path dir(cfg.dir);
        try {
            const auto domain = load_domain((dir / (stem + ".bid")).string(), (dir / (stem + ".ask")).string(), "");
            status = combine(status, auction_one(domain, cfg.mode, (fs::path(cfg.out) / (stem + ".trade")).string(),
                                                 stem));
        } catch (const ExitWith& e) {
            status = combine(status, e.status);
        } catch (const std::runtime_error& e) {
            err_ << prefixed(stem, e.what()) << '\n';
            status = combine(status, kExitInput);
        }
    }
    return status;
}

int Runner::check_one(const OrderDomain& domain, const Matching& trades, CheckMode mode,
                      std::vector<std::string> notes, const std::string& report_path, const std::string& label) {
    require_admissible_or_exit(domain, label);
    auto report = check_tradebook(domain, trades, mode);
    report.notes = std::move(notes);
    out_ << prefixed(label, verdict_message(report.verdict)) << '\n';
    if (!report_path.empty()) csv::write_file_atomic(report_path, format_report(report));
    return report.verdict == Verdict::Compliant ? kExitOk : kExitViolation;
}

int Runner::check(const RunConfig& cfg) {
    if (cfg.dir.empty()) {
        if (cfg.trades.empty()) {
            err_ << "error: --trades is required\n";
            return kExitInput;
        }
        std::vector<std::string> notes;
        const auto domain = load_domain(cfg.bids, cfg.asks, cfg.raw, &notes);
        const auto trades = csv::load_trades(cfg.trades);
        return check_one(domain, trades, cfg.mode, std::move(notes), cfg.out, "");
    }
    if (!cfg.out.empty()) fs::create_directories(cfg.out);
    int status = kExitOk;
    for (const auto& stem : instruments(cfg.dir, {".ask", ".trade"})) {
        const fs::path dir(cfg.dir);
        try {
            const auto domain = load_domain((dir / (stem + ".bid")).string(), (dir / (stem + ".ask")).string(), "");
            const auto trades = csv::load_trades(dir / (stem + ".trade"));
            const auto report_path = cfg.out.empty() ? std::string() : (fs::path(cfg.out) / (stem + ".report")).string();
            status = combine(status, check_one(domain, trades, cfg.mode, {}, report_path, stem));
        } catch (const ExitWith& e) {
            status = combine(status, e.status);
        } catch (const std::runtime_error& e) {
            err_ << prefixed(stem, e.what()) << '\n';
            status = combine(status, kExitInput);
        }
    }
    return status;
}

int Runner::gen(const RunConfig& cfg) {
    const auto domain = generate_domain(cfg.gen, cfg.seed);
    std::ostringstream bids;
    std::ostringstream asks;
    csv::write_orders(bids, domain.bids);
    csv::write_orders(asks, domain.asks);
    const fs::path prefix(cfg.out);
    if (prefix.has_parent_path()) fs::create_directories(prefix.parent_path());
    csv::write_file_atomic(prefix.string() + ".bid", bids.str());
    csv::write_file_atomic(prefix.string() + ".ask", asks.str());
    out_ << "wrote " << prefix.string() << ".bid and " << prefix.string() << ".ask (" << cfg.gen.orders
         << " orders per side)\n";
    return kExitOk;
}

int Runner::bound(const RunConfig& cfg) {
    const auto domain = load_domain(cfg.bids, cfg.asks, cfg.raw);
    require_admissible_or_exit(domain, "");
    const Quantity d = demand(domain.bids, cfg.price);
    const Quantity s = supply(domain.asks, cfg.price);
    const Quantity total = checked_add(d, s);
    out_ << "price=" << cfg.price << '\n';
    out_ << "demand=" << d << '\n';
    out_ << "supply=" << s << '\n';
    out_ << "bound=" << total << '\n';
    if (cfg.trades.empty()) return kExitOk;

    const auto trades = csv::load_trades(cfg.trades);
    const Quantity volume = vol_transactions(trades);
    out_ << "volume=" << volume << '\n';
    const bool holds = volume <= total;
    out_ << "bound_check=" << (holds ? "PASS" : "FAIL") << '\n';
    return holds ? kExitOk : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fair double-auction matching and trade-book compliance checking", "fairmatch"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::map<std::string, CheckMode> modes{{"uniform", CheckMode::Uniform}, {"maximum", CheckMode::Maximum}};
    auto add_book_inputs = [&](CLI::App* sub) {
        sub->add_option("--bids", cfg.bids, "Bids CSV (id,timestamp,quantity,price)");
        sub->add_option("--asks", cfg.asks, "Asks CSV (id,timestamp,quantity,price)");
        sub->add_option("--raw", cfg.raw, "Raw order events CSV, replayed instead of --bids/--asks");
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", cfg.mode, "uniform (call auction) or maximum (maximum volume)")
            ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    };

    auto* auction = app.add_subcommand("auction", "Run a call auction or maximum-volume matching");
    add_book_inputs(auction);
    add_mode(auction);
    auction->add_option("--out", cfg.out, "Trades CSV output (directory with --dir); stdout if omitted");
    auction->add_option("--dir", cfg.dir, "Batch directory of <s>.bid/<s>.ask files");

    auto* check = app.add_subcommand("check", "Check an exchange trade book against the reference matching");
    add_book_inputs(check);
    add_mode(check);
    check->add_option("--trades", cfg.trades, "Exchange trades CSV (bid_id,ask_id,quantity,price)");
    check->add_option("--out", cfg.out, "Report file (directory with --dir)");
    check->add_option("--dir", cfg.dir, "Batch directory of <s>.bid/<s>.ask/<s>.trade files");

    auto* gen = app.add_subcommand("gen", "Generate a random admissible order book");
    gen->add_option("--seed", cfg.seed, "RNG seed")->required();
    gen->add_option("--orders", cfg.gen.orders, "Orders per side")->capture_default_str();
    gen->add_option("--price-min", cfg.gen.price_min, "Lowest limit price")->capture_default_str();
    gen->add_option("--price-max", cfg.gen.price_max, "Highest limit price")->capture_default_str();
    gen->add_option("--qty-max", cfg.gen.qty_max, "Largest order quantity")->capture_default_str();
    gen->add_option("--out", cfg.out, "Output prefix; writes PREFIX.bid and PREFIX.ask")->required();

    auto* bound = app.add_subcommand("bound", "Print demand, supply and the volume bound at a price");
    add_book_inputs(bound);
    bound->add_option("--price", cfg.price, "Price at which to evaluate demand and supply")->required();
    bound->add_option("--trades", cfg.trades, "Trades CSV whose volume is checked against the bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    Runner runner(out, err);
    try {
        if (*auction) return runner.auction(cfg);
        if (*check) return runner.check(cfg);
        if (*gen) return runner.gen(cfg);
        return runner.bound(cfg);
    } catch (const ExitWith& e) {
        return e.status;
    } catch (const InadmissibleDomain& e) {
        err << e.what();
        return kExitInadmissible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace fairmatch::cli
