// Copyright 2026 The ssrc-bqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#ifndef SSRC_BQC_CLI
#error "SSRC_BQC_CLI must name the CLI executable"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + " \"" SSRC_BQC_CLI "\" " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::vector<std::string>> csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream l(line);
        std::string cell;
        while (std::getline(l, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, AlgebraCheck) {
    for (int n : {0, 1, 10, 64}) {
        const auto r = run("algebra-check --photons " + std::to_string(n));
        EXPECT_EQ(r.status, 0) << n;
        const auto rows = csv(r.out);
        ASSERT_EQ(rows.size(), 2u);
        EXPECT_EQ(rows[0][0], "N");
        EXPECT_LT(std::stod(rows[1][3]), 1e-10);
    }
    EXPECT_EQ(run("algebra-check --photons 65").status, 2);
}

TEST(Cli, KerrScan) {
    const auto r = run("kerr-scan --photons 2 --eta-grid 0:pi/4:3");
    ASSERT_EQ(r.status, 0);
    const auto rows = csv(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "eta,probability,entropy_bits,phase_extracted");
    EXPECT_EQ(rows[1][2], "0");
    EXPECT_NEAR(std::stod(rows[2][2]), 1.0, 1e-9);
    EXPECT_NEAR(std::stod(rows[2][3]), std::numbers::pi, 1e-9);
}

TEST(Cli, KerrPhaseDoesNotDependOnN) {
    const auto a = csv(run("kerr-scan --photons 3 --eta-grid 0.05:1.5:7").out);
    const auto b = csv(run("kerr-scan --photons 4 --eta-grid 0.05:1.5:7").out);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 1; i < a.size(); ++i) {
        EXPECT_EQ(a[i][0], b[i][0]);
        EXPECT_NEAR(std::stod(a[i][3]), std::stod(b[i][3]), 1e-9);
    }
}

TEST(Cli, KerrScanCap) {
    EXPECT_EQ(run("kerr-scan --photons 9 --eta 0.1").status, 2);
    EXPECT_EQ(run("kerr-scan --photons 4 --eta 0.1 --cap 3").status, 2);
    EXPECT_EQ(run("kerr-scan --photons 4 --eta 0.1", "SSRC_BQC_CAP=3").status, 2);
    EXPECT_EQ(run("kerr-scan --photons 3 --eta 0.1", "SSRC_BQC_CAP=3").status, 0);
    EXPECT_EQ(run("kerr-scan --photons 4 --eta 0.1 --cap 4", "SSRC_BQC_CAP=3").status, 0);
    EXPECT_EQ(run("kerr-scan --photons 3 --eta 0.1", "SSRC_BQC_CAP=abc").status, 2);
}

TEST(Cli, CoherentLimit) {
    const auto r = run("coherent-limit --photons 100,1000,10000 --alpha 1 --kmax 5");
    ASSERT_EQ(r.status, 0);
    const auto rows = csv(r.out);
    ASSERT_EQ(rows.size(), 1u + 3 * 6);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"N", "k", "exact", "poisson", "abs_err"}));
    EXPECT_NEAR(std::stod(rows[2][4]), 1.5e-3, 1e-4);  // N=100, k=1
    for (size_t i = 13; i < rows.size(); ++i) {
        EXPECT_LT(std::stod(rows[i][4]), 1e-4);
    }

    const auto zero = run("coherent-limit --photons 10,20 --alpha 0 --kmax 3");
    EXPECT_EQ(zero.status, 0);
    for (const auto &row : csv(zero.out)) {
        if (row[0] != "N") {
            EXPECT_EQ(row[4], "0");
        }
    }
    EXPECT_EQ(run("coherent-limit --photons 4,100 --alpha 2").status, 2);
}

TEST(Cli, CatTableAndGhz) {
    const std::string ghz = testing::TempDir() + "ssrc_cli_ghz.json";
    const auto r = run("cat --photons 2 --ghz-out " + ghz);
    ASSERT_EQ(r.status, 0);
    const auto rows = csv(r.out);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"N", "alpha_sq", "overlap_exact", "overlap_gaussian_approx"}));
    EXPECT_EQ(rows[1][2], "1");
    const auto j = nlohmann::json::parse(slurp(ghz));
    const auto &amps = j["plus"]["state"]["amps"];
    ASSERT_EQ(amps.size(), 4u);
    EXPECT_NEAR(amps[0]["re"].get<double>(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(amps[3]["re"].get<double>(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(amps[1]["re"].get<double>()), 0, 1e-12);

    EXPECT_EQ(run("cat --photons 6").status, 0);
    EXPECT_EQ(run("cat --photons 9 --ghz-out " + ghz).status, 2);
}

TEST(Cli, JsonFormat) {
    const auto r = run("kerr-scan --photons 2 --eta pi/8 --format json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_NEAR(j["rows"][0]["entropy_bits"].get<double>(), 1, 1e-9);
}

TEST(Cli, DeterministicOutputFiles) {
    const std::string a = testing::TempDir() + "ssrc_cli_a.csv";
    const std::string b = testing::TempDir() + "ssrc_cli_b.csv";
    ASSERT_EQ(run("kerr-scan --photons 3 --eta-grid 0:1:9 --out " + a).status, 0);
    ASSERT_EQ(run("kerr-scan --photons 3 --eta-grid 0:1:9 --out " + b).status, 0);
    const auto ta = slurp(a);
    EXPECT_FALSE(ta.empty());
    EXPECT_EQ(ta, slurp(b));
    EXPECT_EQ(ta.find('\r'), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("kerr-scan --photons 2").status, 2);
    EXPECT_EQ(run("kerr-scan --photons 2 --eta-grid 0:1").status, 2);
    EXPECT_EQ(run("kerr-scan --photons 2 --eta 0.1 --tol -1").status, 2);
    EXPECT_EQ(run("algebra-check --photons 2 --format xml").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}
