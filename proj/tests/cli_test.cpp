#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dcl/construction.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome run(const std::string& args) {
    std::string cmd = std::string(DCL_CLI_PATH) + " " + args + " 2>/dev/null";
    Outcome r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name) { return std::string(DCL_SAMPLES_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("dcl_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, VerifyR1) {
    Outcome r = run("verify --r 1 --threads 1 --cert " + path("c.json"));
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::json::parse(slurp(path("c.json")));
    EXPECT_EQ(j["t"], 27889);
    EXPECT_EQ(j["r"], 1);
    EXPECT_EQ(j["distinct"], true);
    EXPECT_EQ(j["counts"]["total_cycles"], 2412593);
    EXPECT_EQ(j["edges"]["direct"], 337752597179 + 892447);
    EXPECT_NE(r.out.find("verdict: VERIFIED"), std::string::npos);
}

TEST_F(CliTest, VerifyRejectsBadT) {
    EXPECT_EQ(run("verify --t 170").code, 1);
    EXPECT_EQ(run("verify --t 169").code, 1);
    EXPECT_EQ(run("verify --r 0").code, 1);
    EXPECT_EQ(run("verify --t 27889 --n 5").code, 1);
    EXPECT_EQ(run("verify").code, 1);
    EXPECT_EQ(run("verify --r 1 --extra-plain 22t").code, 1);
}

TEST_F(CliTest, VerifyExploratoryT169) {
    Outcome r = run("verify --t 169 --exploratory --cert " + path("c.json"));
    EXPECT_TRUE(r.code == 0 || r.code == 2) << r.code;
    auto j = nlohmann::json::parse(slurp(path("c.json")));
    EXPECT_EQ(j["t"], 169);
    EXPECT_EQ(j["r"], 0);
    EXPECT_EQ(j["distinct"], j["collisions"].empty());
}

TEST_F(CliTest, VerifyPlantedCollisionExitsTwo) {
    Outcome r = run("verify --r 1 --exploratory --extra-plain 22t --cert " + path("c.json"));
    EXPECT_EQ(r.code, 2);
    auto j = nlohmann::json::parse(slurp(path("c.json")));
    EXPECT_EQ(j["distinct"], false);
    ASSERT_EQ(j["collisions"].size(), 1u);
    EXPECT_EQ(j["collisions"][0]["length"], 22 * 27889);
}

TEST_F(CliTest, CertificateOnStdout) {
    Outcome r = run("verify --r 1");
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema_version"], 1);
}

TEST_F(CliTest, GadgetDerive) {
    Outcome a = run("gadget derive --family a");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(lines(a.out).size(), 78u);
    Outcome b = run("gadget derive --family b");
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(lines(b.out).size(), 66u);
    EXPECT_EQ(lines(a.out)[0], "144t+13i+1464\tFullCycle");

    Outcome spec = run("gadget derive --spec " + sample("family_a_shape.gadget"));
    EXPECT_EQ(spec.out, a.out);

    Outcome at = run("gadget derive --family a --t 27889 --i 24404");
    EXPECT_EQ(at.code, 0);
    EXPECT_EQ(lines(at.out)[0], "144t+13i+1464\tFullCycle\t" + std::to_string(144 * 27889 + 13 * 24404 + 1464));
    EXPECT_EQ(run("gadget derive --family a --t 27890 --i 24404").code, 2);
    EXPECT_EQ(run("gadget derive --family c").code, 1);
    EXPECT_EQ(run("gadget derive").code, 1);
}

TEST_F(CliTest, GadgetInstantiateThenEnumerate) {
    Outcome inst = run("gadget instantiate --spec " + sample("toy.gadget") + " --t 0 --i 0 --out " + path("toy.edges"));
    ASSERT_EQ(inst.code, 0);
    EXPECT_EQ(slurp(path("toy.edges")).substr(0, 3), "13\n");

    Outcome en = run("enumerate " + path("toy.edges"));
    EXPECT_EQ(en.code, 2);  // 9 and 10 repeat
    std::vector<std::string> enumerated = lines(en.out);

    Outcome der = run("gadget derive --spec " + sample("toy.gadget") + " --t 0 --i 0");
    std::vector<std::string> derived;
    for (const auto& l : lines(der.out)) derived.push_back(l.substr(l.rfind('\t') + 1));
    std::sort(derived.begin(), derived.end(), [](const auto& x, const auto& y) { return std::stoi(x) < std::stoi(y); });
    EXPECT_EQ(enumerated, derived);
    EXPECT_EQ(enumerated, (std::vector<std::string>{"5", "6", "9", "9", "10", "10"}));
}

TEST_F(CliTest, GadgetInstantiateErrors) {
    EXPECT_EQ(run("gadget instantiate --family a --t 27889 --i 24404 --size-cap 1000 --out " + path("a.edges")).code,
              1);
    EXPECT_EQ(run("gadget instantiate --spec " + path("missing.gadget")).code, 1);
    EXPECT_EQ(run("gadget validate --family a --t 27889 --i 24404").code, 0);
    EXPECT_EQ(run("gadget validate --family a --t 27890 --i 24404").code, 2);
}

TEST_F(CliTest, EnumerateAndDistinct) {
    Outcome tri = run("enumerate " + sample("triangle.edges"));
    EXPECT_EQ(tri.code, 0);
    EXPECT_EQ(tri.out, "3\n");
    Outcome d = run("distinct " + sample("triangle.edges"));
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.out, "DISTINCT\n");

    Outcome bow = run("distinct " + sample("bowtie.edges"));
    EXPECT_EQ(bow.code, 2);
    EXPECT_EQ(lines(bow.out).at(0), "COLLISION 3");

    Outcome k4 = run("distinct " + sample("k4.edges"));
    EXPECT_EQ(k4.code, 2);
    EXPECT_EQ(lines(k4.out).at(0), "COLLISION 3");

    EXPECT_EQ(run("distinct " + sample("k4.edges") + " --max-cycles 3").code, 1);
    EXPECT_EQ(run("enumerate " + sample("toy.gadget")).code, 1);  // not an edge list
}

TEST_F(CliTest, PlantedGadgetCollision) {
    ASSERT_EQ(run("gadget instantiate --spec " + sample("planted_collision.gadget") + " --out " + path("p.edges")).code,
              0);
    Outcome d = run("distinct " + path("p.edges"));
    EXPECT_EQ(d.code, 2);
    EXPECT_EQ(lines(d.out).at(0), "COLLISION 8");
    EXPECT_EQ(lines(d.out).size(), 3u);
}

TEST_F(CliTest, Bound) {
    Outcome r = run("bound --n 3");
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 2u);
    std::istringstream row(ls[1]);
    std::string n, shi, lai_t;
    row >> n >> shi >> lai_t;
    EXPECT_EQ(n, "3");
    EXPECT_EQ(shi, "4");
    EXPECT_EQ(lai_t, "-");
    EXPECT_NE(r.out.find("sqrt(16384/6911) = 1.539712"), std::string::npos);
    EXPECT_NE(r.out.find("<= 1.98"), std::string::npos);

    Outcome big = run("bound --n 337752597179 10 --csv " + path("b.csv"));
    EXPECT_EQ(big.code, 0);
    auto csv = lines(slurp(path("b.csv")));
    ASSERT_EQ(csv.size(), 3u);
    EXPECT_EQ(csv[0], "n,shi_lower,lai_lower_t,lai_lower,lai_upper_m,lai_upper");
    EXPECT_EQ(csv[1].rfind("337752597179,", 0), 0u);
    EXPECT_NE(csv[1].find(",27889,337753489626,"), std::string::npos) << csv[1];
    EXPECT_EQ(csv[2].rfind("10,14,,,", 0), 0u) << csv[2];

    EXPECT_EQ(run("bound").code, 1);
    EXPECT_EQ(run("bound --n x").code, 1);
}

TEST_F(CliTest, SpectrumDump) {
    Outcome r = run("spectrum --r 1 --threads 2 --out " + path("s.txt"));
    ASSERT_EQ(r.code, 0);
    auto ls = lines(slurp(path("s.txt")));
    ASSERT_EQ(ls.size(), 2412593u);
    EXPECT_EQ(ls.front(), "1");
    EXPECT_TRUE(std::is_sorted(ls.begin(), ls.end(),
                               [](const auto& a, const auto& b) { return std::stoll(a) < std::stoll(b); }));
}

TEST_F(CliTest, Tables) {
    Outcome r = run("tables");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("family_a: 78/78 matched"), std::string::npos);
    EXPECT_NE(r.out.find("family_b: 66/66 matched"), std::string::npos);
}

TEST_F(CliTest, Usage) {
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}
