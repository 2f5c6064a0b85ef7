/*
   Copyright 2026 The mvsurf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <mvsurf/mvsurf.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("mvsurf_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
    const auto err = scratch() / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + MVSURF_CLI_PATH + std::string(" ") + args + " 2>" + err.string();
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    return r;
}

fs::path write(const std::string& name, const std::string& body) {
    const auto p = scratch() / name;
    std::ofstream(p) << body;
    return p;
}

const std::string kTri2 = R"({"points": [[0,0],[2,0],[0,2]]})";
const std::string kTri3 = R"({"points": [[0,0],[3,0],[0,3]], "chain": {"start": 2, "edges": 1}})";

}  // namespace

TEST(CliBuild, TensorF) {
    const auto r = run("build F --m 2 --n 1");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"], 8);
    EXPECT_EQ(j["cols"], 8);
    EXPECT_NE(r.err.find("F: 8x8"), std::string::npos);
}

TEST(CliBuild, GeneralQTriangle) {
    const auto tri = write("tri.json", kTri2);
    const auto r = run("build Q --support " + tri.string() + " --chain 2:1 --delete \"(1,0),(0,1)\"");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["rows"], 21);
    EXPECT_NE(r.err.find("21x21"), std::string::npos);
}

TEST(CliBuild, UsageErrors) {
    EXPECT_EQ(run("build F --m 0 --n 1").code, 2);
    EXPECT_EQ(run("build X --m 1 --n 1").code, 2);
    EXPECT_EQ(run("build F --m 1 --n 1 --prime 100").code, 2);
    const auto tri = write("tri_nochain.json", kTri2);
    const auto r = run("build F --support " + tri.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("chain"), std::string::npos);
    const auto wrong = run("build F --support " + tri.string() + " --chain 2:1 --delete \"(1,0)\"");
    EXPECT_EQ(wrong.code, 2);
}

TEST(CliBuild, BadSupportJsonReportsLine) {
    const auto bad = write("bad.json", "{\n  \"points\": [[0,0],\n    [1,,0]]\n}\n");
    const auto r = run("build F --support " + bad.string() + " --chain 1:1");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliBuild, FormatsAndOutFile) {
    const auto csv = run("build F --m 1 --n 1 --format csv");
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "row,\"x^(0,0)\",\"x^(0,1)\",\"x^(1,0)\",\"x^(1,1)\"");
    const auto text = run("build Q --m 1 --n 1 --format text");
    ASSERT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("x^(0,0)*F1^2"), std::string::npos);
    const auto out = scratch() / "f.json";
    ASSERT_EQ(run("build corner --m 2 --n 3 --out " + out.string()).code, 0);
    EXPECT_EQ(nlohmann::json::parse(slurp(out))["col_labels"][3], "x^(2,3)");
}

TEST(CliBuild, AssignmentAndDixon) {
    std::string a = "{";
    for (int i = 1; i <= 4; ++i)
        for (const char* p : {"0,0", "0,1", "1,0", "1,1"}) a += "\"c[" + std::to_string(i) + "][" + p + "]\": " + std::to_string(i) + ",";
    a.back() = '}';
    const auto ap = write("assign.json", a);
    const auto r = run("build F --m 1 --n 1 --assign " + ap.string());
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["entries"][2][0], 3);
    EXPECT_EQ(j["prime"], mvsurf::kDefaultPrime);
    const auto d = run("build dixon --m 2 --n 1 --seed 3");
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(nlohmann::json::parse(d.out)["rows"], 4);
    EXPECT_EQ(run("build dixon --m 2 --n 1 --seed 3").out, d.out);
}

TEST(CliVerify, IdentityPasses) {
    const auto r = run("verify identity --m 3 --n 2 --trials 20 --seed 7");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["reports"][0]["params"]["seed"], 7);
    EXPECT_TRUE(j["reports"][0]["timing"].contains("wall_ms"));
}

TEST(CliVerify, MutationFails) { EXPECT_EQ(run("verify identity --m 2 --n 1 --trials 3 --mutate 5").code, 1); }

TEST(CliVerify, UnknownCheckIsUsageError) { EXPECT_EQ(run("verify bogus").code, 2); }

TEST(CliVerify, ScanTable) {
    const auto tri = write("tri3.json", kTri3);
    const auto out = scratch() / "scan.json";
    const auto r = run("verify scan --support " + tri.string() + " --chain 2:1 --cap 100 --trials 3 --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(slurp(out));
    EXPECT_EQ(j["reports"][0]["observed"]["rows"], 20);
    EXPECT_EQ(j["reports"][0]["observed"]["table"].size(), 20u);
    EXPECT_NE(r.out.find("scan"), std::string::npos);  // table on stdout
}

TEST(CliVerify, ByteIdenticalModuloTiming) {
    const std::string cmd = "verify multidegree --m 2 --n 2 --trials 3 --seed 11";
    const auto a = run(cmd), b = run(cmd);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(mvsurf::strip_timing(nlohmann::json::parse(a.out)).dump(),
              mvsurf::strip_timing(nlohmann::json::parse(b.out)).dump());
}

TEST(CliVerify, EnvSeedOverrides) {
    const auto r = run("verify corner --m 1 --n 1 --trials 2 --seed 3", "MVSURF_SEED=99");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["reports"][0]["params"]["seed"], 99);
    EXPECT_EQ(run("verify corner --m 1 --n 1", "MVSURF_SEED=abc").code, 2);
}

TEST(CliVerify, AllAtSmallestBidegree) {
    const auto r = run("verify all --max-mn 1 --trials 3 --format text");
    EXPECT_EQ(r.code, 0) << r.out;
    for (const char* c : {"identity", "corner", "isobaric", "multidegree", "valuation", "general", "symbolic", "scan"})
        EXPECT_NE(r.out.find(c), std::string::npos) << c;
}

TEST(CliVerify, ValuationMismatchExitsOne) { EXPECT_EQ(run("verify valuation --m 2 --n 1 --axis 1 --trials 2").code, 1); }

TEST(CliVerify, InconclusiveExitCode) {
    // over F_2 the single corner trial finds Delta = 0 on every draw for this seed
    const auto r = run("verify corner --m 1 --n 1 --prime 2 --trials 1 --seed 47");
    EXPECT_EQ(r.code, 3) << r.out;
}
