#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fairmatch/csv.hpp"
#include "fairmatch/orders.hpp"

namespace fairmatch {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fairmatch_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        write("pair.bid", "id,timestamp,quantity,price\n1,1,1,100\n2,2,1,85\n");
        write("pair.ask", "id,timestamp,quantity,price\n1,3,1,70\n2,4,1,90\n");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const {
        fs::create_directories((dir_ / name).parent_path());
        std::ofstream(dir_ / name) << text;
    }

    static std::string read(const std::string& p) {
        std::ifstream in(p);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    static Outcome run(std::vector<std::string> args) {
        args.insert(args.begin(), "fairmatch");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return {status, out.str(), err.str()};
    }

    fs::path dir_;
};

TEST_F(CliTest, AuctionUniform) {
    const auto r = run({"auction", "--bids", path("pair.bid"), "--asks", path("pair.ask"), "--out", path("t.csv")});
    EXPECT_EQ(r.status, cli::kExitOk);
    EXPECT_EQ(r.out, "clearing_price=70\nvolume=1\n");
    EXPECT_EQ(read(path("t.csv")), "bid_id,ask_id,quantity,price\n1,1,1,70\n");
}

TEST_F(CliTest, AuctionMaximumToStdout) {
    const auto r = run({"auction", "--bids", path("pair.bid"), "--asks", path("pair.ask"), "--mode", "maximum"});
    EXPECT_EQ(r.status, cli::kExitOk);
    EXPECT_EQ(r.out, "bid_id,ask_id,quantity,price\n2,1,1,70\n1,2,1,90\n");
    EXPECT_EQ(r.err, "volume=2\n");
}

TEST_F(CliTest, AuctionOnEmptyBook) {
    write("e.bid", "");
    write("e.ask", "id,timestamp,quantity,price\n");
    const auto r = run({"auction", "--bids", path("e.bid"), "--asks", path("e.ask"), "--out", path("t.csv")});
    EXPECT_EQ(r.status, cli::kExitOk);
    EXPECT_EQ(r.out, "clearing_price=none\nvolume=0\n");
    EXPECT_EQ(read(path("t.csv")), "bid_id,ask_id,quantity,price\n");
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(run({"auction", "--bids", path("nope.bid"), "--asks", path("pair.ask")}).status, cli::kExitInput);
    EXPECT_EQ(run({"auction", "--bids", path("pair.bid")}).status, cli::kExitInput);
    EXPECT_EQ(run({"auction", "--bids", path("pair.bid"), "--asks", path("pair.ask"), "--mode", "best"}).status,
              cli::kExitInput);
    EXPECT_EQ(run({}).status, cli::kExitInput);
    write("bad.bid", "id,timestamp,quantity,price\n1,1,0,10\n");
    const auto r = run({"auction", "--bids", path("bad.bid"), "--asks", path("pair.ask")});
    EXPECT_EQ(r.status, cli::kExitInput);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, InadmissibleBook) {
    write("dup.bid", "id,timestamp,quantity,price\n1,1,1,100\n1,2,1,85\n");
    const auto r = run({"auction", "--bids", path("dup.bid"), "--asks", path("pair.ask")});
    EXPECT_EQ(r.status, cli::kExitInadmissible);
    EXPECT_NE(r.err.find("not admissible"), std::string::npos);
}

TEST_F(CliTest, CheckCompliantAndMutated) {
    write("ok.trade", "bid_id,ask_id,quantity,price\n1,1,1,70\n");
    const auto ok = run({"check", "--bids", path("pair.bid"), "--asks", path("pair.ask"), "--trades", path("ok.trade"),
                         "--out", path("ok.report")});
    EXPECT_EQ(ok.status, cli::kExitOk);
    EXPECT_EQ(ok.out, "Matching does not violate the guidelines\n");
    EXPECT_NE(read(path("ok.report")).find("verdict=compliant\n"), std::string::npos);

    write("bad.trade", "bid_id,ask_id,quantity,price\n2,1,1,70\n");
    const auto bad = run({"check", "--bids", path("pair.bid"), "--asks", path("pair.ask"), "--trades",
                          path("bad.trade")});
    EXPECT_EQ(bad.status, cli::kExitViolation);
    EXPECT_EQ(bad.out, "Violation detected!\n");

    EXPECT_EQ(run({"check", "--bids", path("pair.bid"), "--asks", path("pair.ask")}).status, cli::kExitInput);
}

TEST_F(CliTest, CheckFromRawEvents) {
    write("events.csv",
          "id,timestamp,quantity,price,side,action\n"
          "1,1,1,100,B,N\n2,2,1,85,B,N\n1,3,1,70,A,N\n2,4,1,90,A,N\n3,5,1,60,A,N\n3,6,0,,A,D\n");
    write("ok.trade", "bid_id,ask_id,quantity,price\n1,1,1,70\n");
    const auto r = run({"check", "--raw", path("events.csv"), "--trades", path("ok.trade")});
    EXPECT_EQ(r.status, cli::kExitOk);
    EXPECT_EQ(r.out, "Matching does not violate the guidelines\n");
}

TEST_F(CliTest, DirectoryMode) {
    write("in/x.bid", read(path("pair.bid")));
    write("in/x.ask", read(path("pair.ask")));
    write("in/y.bid", "id,timestamp,quantity,price\n1,1,2,10\n");
    write("in/y.ask", "id,timestamp,quantity,price\n1,1,2,10\n");
    const auto a = run({"auction", "--dir", path("in"), "--out", path("in")});
    EXPECT_EQ(a.status, cli::kExitOk);
    EXPECT_EQ(a.out, "x: clearing_price=70\nx: volume=1\ny: clearing_price=10\ny: volume=2\n");

    write("in/y.trade", "bid_id,ask_id,quantity,price\n1,1,1,10\n");
    const auto c = run({"check", "--dir", path("in"), "--out", path("reports")});
    EXPECT_EQ(c.status, cli::kExitViolation);
    EXPECT_EQ(c.out, "x: Matching does not violate the guidelines\ny: Violation detected!\n");
    EXPECT_TRUE(fs::exists(path("reports/y.report")));
}

TEST_F(CliTest, GenIsDeterministic) {
    ASSERT_EQ(run({"gen", "--seed", "7", "--orders", "25", "--out", path("a/book")}).status, cli::kExitOk);
    ASSERT_EQ(run({"gen", "--seed", "7", "--orders", "25", "--out", path("b/book")}).status, cli::kExitOk);
    EXPECT_EQ(read(path("a/book.bid")), read(path("b/book.bid")));
    EXPECT_EQ(read(path("a/book.ask")), read(path("b/book.ask")));
    ASSERT_EQ(run({"gen", "--seed", "8", "--orders", "25", "--out", path("c/book")}).status, cli::kExitOk);
    EXPECT_NE(read(path("a/book.bid")), read(path("c/book.bid")));

    ASSERT_EQ(run({"gen", "--seed", "1", "--orders", "0", "--out", path("z")}).status, cli::kExitOk);
    EXPECT_EQ(read(path("z.bid")), "id,timestamp,quantity,price\n");
    EXPECT_EQ(run({"gen", "--seed", "1", "--price-min", "9", "--price-max", "3", "--out", path("w")}).status,
              cli::kExitInput);
}

TEST_F(CliTest, GeneratedBooksAreAdmissible) {
    for (int seed = 0; seed < 1000; ++seed) {
        const auto prefix = path("g");
        ASSERT_EQ(run({"gen", "--seed", std::to_string(seed), "--orders", "20", "--out", prefix}).status, cli::kExitOk);
        const OrderDomain d{csv::load_orders(prefix + ".bid", Side::Bid), csv::load_orders(prefix + ".ask", Side::Ask)};
        ASSERT_TRUE(check_admissible(d).admissible()) << seed;
        ASSERT_EQ(d.bids.size(), 20u);
    }
}

TEST_F(CliTest, Bound) {
    const auto r = run({"bound", "--bids", path("pair.bid"), "--asks", path("pair.ask"), "--price", "90"});
    EXPECT_EQ(r.status, cli::kExitOk);
    EXPECT_EQ(r.out, "price=90\ndemand=1\nsupply=2\nbound=3\n");

    const auto high = run({"bound", "--bids", path("pair.bid"), "--asks", path("pair.ask"), "--price", "1000"});
    EXPECT_NE(high.out.find("demand=0\n"), std::string::npos);

    write("big.trade", "bid_id,ask_id,quantity,price\n1,1,4,80\n");
    const auto fail = run({"bound", "--bids", path("pair.bid"), "--asks", path("pair.ask"), "--price", "90",
                           "--trades", path("big.trade")});
    EXPECT_EQ(fail.status, cli::kExitViolation);
    EXPECT_NE(fail.out.find("volume=4\nbound_check=FAIL\n"), std::string::npos);
}

}  // namespace
}  // namespace fairmatch
