#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = gdom::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("gdom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const auto p = (dir_ / name).string();
        std::ofstream(p) << text;
        return p;
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, GenGolden) {
    const auto r = run({"gen", "path:3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3 2\n0 1\n1 2\n");
    const auto j = run({"gen", "path:3", "--json"});
    EXPECT_EQ(j.out, "{\"edges\":[[0,1],[1,2]],\"n\":3,\"name\":\"P3\"}\n");
}

TEST_F(CliTest, GrundyWitnessAndModes) {
    const auto g = write("c5.txt", run({"gen", "cycle:5"}).out);
    const auto r = run({"grundy", "--witness", g});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find("# nodes")), "value=3\nwitness=0 1 2\n");
    const auto p4 = write("p4.txt", run({"gen", "path:4"}).out);
    EXPECT_EQ(run({"grundy", "--mode", "open", p4}).out.substr(0, 8), "value=4\n");
    // K_1 has no total dominating sequence.
    const auto k1 = write("k1.txt", "1 0\n");
    EXPECT_EQ(run({"grundy", "--mode", "open", k1}).code, 1);
}

TEST_F(CliTest, ThreadsDoNotChangeOutput) {
    const auto gp = write("p3.txt", run({"gen", "path:3"}).out);
    const auto gc = write("c4.txt", run({"gen", "cycle:4"}).out);
    const auto prod = run({"product", "--kind", "strong", gp, gc});
    ASSERT_EQ(prod.code, 0);
    EXPECT_EQ(prod.out.substr(0, prod.out.find('\n')), "# kind=strong nG=3 nH=4");
    const auto pf = write("prod.txt", prod.out);
    auto strip = [](const std::string& s) { return s.substr(0, s.find("# nodes")); };
    const auto one = run({"grundy", "--witness", "--threads", "1", pf});
    const auto four = run({"grundy", "--witness", "--threads", "4", pf});
    EXPECT_EQ(strip(one.out), strip(four.out));
    EXPECT_EQ(one.out.substr(0, 8), "value=4\n");
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"no-such-verb"}).code, 1);
    EXPECT_EQ(run({"gen", "blob:3"}).code, 1);
    EXPECT_EQ(run({"formula", "thm_cart_grid", "4", "3"}).code, 1);
    EXPECT_EQ(run({"formula", "thm_cart_grid", "x", "3"}).code, 1);
    const auto big = write("k70.txt", run({"gen", "complete:70"}).out);
    const auto r = run({"grundy", big});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("resource limit"), std::string::npos);
    EXPECT_EQ(run({"grundy", "--max-order", "300", big}).code, 1);
    EXPECT_EQ(run({"grundy", "--max-order", "128", big}).code, 0);
    EXPECT_EQ(run({"grundy", path("missing.txt")}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, CheckSeq) {
    const auto g = write("p3.txt", run({"gen", "path:3"}).out);
    const auto s = write("s.txt", "0 2\n");
    EXPECT_EQ(run({"check-seq", g, s}).out, "legal=true dominating=true length=2 a_value=2\nfootprints=0:0 1:0 2:2\n");
    const auto bad = write("bad.txt", "1 0\n");
    const auto r = run({"check-seq", g, bad});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("legal=false"), std::string::npos);
    EXPECT_NE(r.out.find("first_illegal=1"), std::string::npos);
}

TEST_F(CliTest, BoundsAndFormula) {
    const auto g = write("p4.txt", run({"gen", "path:4"}).out);
    const auto h = write("p3.txt", run({"gen", "path:3"}).out);
    const auto r = run({"bounds", "--kind", "lex", g, h, "--exact"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("exact thm_lex_formula=5\n"), std::string::npos);
    EXPECT_NE(r.out.find("consistent=true"), std::string::npos);
    EXPECT_NE(r.out.find("solved=5 bracketed=true"), std::string::npos);
    EXPECT_EQ(run({"formula", "thm_cart_torus_odd", "5"}).out, "value=16 exactness=exact\n");
    EXPECT_NE(run({"formula", "--list"}).out.find("cor_direct_CC(k,l) lower"), std::string::npos);
}

TEST_F(CliTest, ConstructPipeline) {
    const auto seq = path("seq.txt");
    const auto host = path("host.txt");
    const auto c = run({"construct", "odd_torus", "5", "--emit-seq", seq, "--emit-graph", host});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "construct=odd_torus order=25 length=16");
    EXPECT_NE(c.out.find("legal=true dominating=true"), std::string::npos);
    const auto r = run({"check-seq", host, seq});
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "legal=true dominating=true length=16 a_value=1");
    for (const std::string id : {"cartesian", "lex", "direct", "strong"}) {
        const auto x = run({"construct", id, "path:3", "cycle:4"});
        EXPECT_EQ(x.code, 0) << id << x.err;
        EXPECT_NE(x.out.find("legal=true dominating=true"), std::string::npos) << id;
    }
    EXPECT_EQ(run({"construct", "odd_torus", "4"}).code, 1);
    EXPECT_EQ(run({"construct", "direct", "path:3", "complete:1"}).code, 1);
}

TEST_F(CliTest, ScanAndIso) {
    const auto s = run({"scan", "--max-n", "3", "--families", "path:2;cycle:3"});
    EXPECT_EQ(s.code, 0) << s.err;
    EXPECT_NE(s.out.find("summary pairs=8 "), std::string::npos);
    EXPECT_EQ(run({"scan", "--max-n", "3", "--pairs", "bogus"}).code, 1);
    const auto i = run({"iso-check", "--kind", "grid", "--factors", "3,3", "--exhaustive"});
    EXPECT_EQ(i.code, 0) << i.err;
    EXPECT_NE(i.out.find("checked=84 violations=0"), std::string::npos);
    EXPECT_EQ(run({"iso-check", "--kind", "cube", "--factors", "3"}).code, 1);
}
