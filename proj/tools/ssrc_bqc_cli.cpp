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


// ssrc_bqc: reproducible runs of the simulator checks, emitting CSV or JSON.
//
// Exit status: 0 when every residual check passes, 1 when a check fails,
// 2 on bad usage or a library precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssrcbqc/ssrcbqc.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ssrc_status s, const char *what) {
    if (s != SSRC_OK) {
        throw LibraryError(std::string(what) + ": " + ssrc_status_name(s) + ": " + ssrc_last_error());
    }
}

struct QubitsDeleter {
    void operator()(ssrc_qubits *q) const {
        ssrc_qubits_free(q);
    }
};
using QubitsPtr = std::unique_ptr<ssrc_qubits, QubitsDeleter>;

json qubits_json(const ssrc_qubits *q) {
    char *s = nullptr;
    check(ssrc_qubits_to_json(q, &s), "qubits_to_json");
    json j = json::parse(s);
    ssrc_string_free(s);
    return j;
}

std::string fmt(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Accepts plain reals and multiples of pi: "0.3", "pi", "pi/8", "3*pi/4", "-pi".
double parse_real(const std::string &text) {
    std::string s = text;
    double sign = 1;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        sign = s[0] == '-' ? -1 : 1;
        s.erase(0, 1);
    }
    const auto pi_at = s.find("pi");
    auto number = [&](const std::string &t) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception &) {
            throw UsageError("cannot parse number '" + text + "'");
        }
        if (used != t.size() || !std::isfinite(v)) {
            throw UsageError("cannot parse number '" + text + "'");
        }
        return v;
    };
    if (pi_at == std::string::npos) {
        return sign * number(s);
    }
    double scale = 1;
    if (pi_at > 0) {
        if (s[pi_at - 1] != '*') {
            throw UsageError("cannot parse number '" + text + "'");
        }
        scale = number(s.substr(0, pi_at - 1));
    }
    const std::string rest = s.substr(pi_at + 2);
    double divisor = 1;
    if (!rest.empty()) {
        if (rest[0] != '/') {
            throw UsageError("cannot parse number '" + text + "'");
        }
        divisor = number(rest.substr(1));
        if (divisor == 0) {
            throw UsageError("division by zero in '" + text + "'");
        }
    }
    return sign * scale * std::numbers::pi / divisor;
}

// start:stop:steps, steps points with both ends included.
std::vector<double> parse_grid(const std::string &text) {
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos) {
        throw UsageError("grid must be start:stop:steps, got '" + text + "'");
    }
    const double start = parse_real(text.substr(0, a));
    const double stop = parse_real(text.substr(a + 1, b - a - 1));
    const double steps_real = parse_real(text.substr(b + 1));
    const int steps = static_cast<int>(steps_real);
    if (steps < 1 || steps != steps_real) {
        throw UsageError("grid steps must be a positive integer, got '" + text + "'");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid.push_back(steps == 1 ? start : start + (stop - start) * i / (steps - 1));
    }
    return grid;
}

struct Options {
    std::vector<int> photons;
    std::string eta;
    std::string eta_grid;
    std::string alpha;
    std::string alpha_grid;
    int kmax = 5;
    std::string out;
    std::string ghz_out;
    std::string format = "csv";
    double tol = 1e-9;
    std::optional<int> cap;
};

int resolve_cap(const Options &o) {
    if (o.cap) {
        if (*o.cap < 1) {
            throw UsageError("--cap must be positive");
        }
        return *o.cap;
    }
    if (const char *env = std::getenv("SSRC_BQC_CAP"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 1000) {
            throw UsageError(std::string("SSRC_BQC_CAP must be a positive integer, got '") + env + "'");
        }
        return static_cast<int>(v);
    }
    return ssrc_default_cap();
}

int single_photons(const Options &o) {
    if (o.photons.size() != 1) {
        throw UsageError("--photons takes exactly one value for this command");
    }
    return o.photons.front();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    f << text;
}

class Table {
   public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void row(std::vector<double> values) {
        rows_.push_back(std::move(values));
    }

    std::string csv() const {
        std::ostringstream s;
        for (size_t i = 0; i < header_.size(); ++i) {
            s << (i ? "," : "") << header_[i];
        }
        s << '\n';
        for (const auto &r : rows_) {
            for (size_t i = 0; i < r.size(); ++i) {
                s << (i ? "," : "") << fmt(r[i]);
            }
            s << '\n';
        }
        return s.str();
    }

    json rows_json() const {
        json out = json::array();
        for (const auto &r : rows_) {
            json o = json::object();
            for (size_t i = 0; i < r.size(); ++i) {
                o[header_[i]] = std::isnan(r[i]) ? json(nullptr) : json(r[i]);
            }
            out.push_back(o);
        }
        return out;
    }

   private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

void emit(const Options &o, const std::string &command, const Table &table, bool pass, json extra = json::object()) {
    if (o.format == "json") {
        json j = {{"command", command}, {"pass", pass}, {"rows", table.rows_json()}};
        for (auto it = extra.begin(); it != extra.end(); ++it) {
            j[it.key()] = it.value();
        }
        write_output(o.out, j.dump(2) + "\n");
    } else {
        write_output(o.out, table.csv());
    }
}

int report(bool pass, const std::string &what) {
    if (!pass) {
        std::cerr << "ssrc_bqc: check failed: " << what << '\n';
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_algebra_check(const Options &o) {
    const int n = single_photons(o);
    if (n < 0 || n > 64) {
        throw UsageError("algebra-check needs 0 <= N <= 64");
    }
    ssrc_algebra_report r{};
    check(ssrc_algebra_check(n, &r), "algebra_check");
    const bool pass = r.hermiticity <= o.tol && r.commutator <= o.tol && r.casimir <= o.tol && r.unitarity <= o.tol;
    Table t({"N", "hermiticity", "commutator", "casimir", "unitarity"});
    t.row({static_cast<double>(n), r.hermiticity, r.commutator, r.casimir, r.unitarity});
    emit(o, "algebra-check", t, pass, {{"tol", o.tol}});
    return report(pass, "su(2) residual above tolerance");
}

int cmd_kerr_scan(const Options &o) {
    const int n = single_photons(o);
    const int cap = resolve_cap(o);
    std::vector<double> etas;
    if (!o.eta_grid.empty()) {
        etas = parse_grid(o.eta_grid);
    } else if (!o.eta.empty()) {
        etas = {parse_real(o.eta)};
    } else {
        throw UsageError("kerr-scan needs --eta or --eta-grid");
    }

    Table t({"eta", "probability", "entropy_bits", "phase_extracted"});
    bool pass = true;
    const double two_pi = 2 * std::numbers::pi;
    for (double eta : etas) {
        double prob = 0;
        ssrc_qubits *raw = nullptr;
        check(ssrc_kerr_then_project(n, eta, cap, &prob, &raw), "kerr_then_project");
        QubitsPtr q(raw);
        const int site = 1;
        double entropy = 0;
        check(ssrc_qubits_entropy(q.get(), &site, 1, &entropy), "entropy");
        double phase = std::nan("");
        if (ssrc_qubits_controlled_phase(q.get(), 1, 2, &phase) != SSRC_OK) {
            pass = false;
            phase = std::nan("");
        } else {
            const double expected = std::fmod(std::fmod(8 * eta, two_pi) + two_pi, two_pi);
            double d = std::fabs(phase - expected);
            d = std::min(d, two_pi - d);
            pass = pass && d <= o.tol;
        }
        t.row({eta, prob, entropy, phase});
    }
    emit(o, "kerr-scan", t, pass, {{"N", n}, {"tol", o.tol}});
    return report(pass, "extracted phase differs from 8*eta mod 2pi");
}

int cmd_coherent_limit(const Options &o) {
    if (o.photons.empty()) {
        throw UsageError("coherent-limit needs --photons N1,N2,...");
    }
    if (o.kmax < 0) {
        throw UsageError("--kmax must be non-negative");
    }
    const double alpha = o.alpha.empty() ? 1.0 : parse_real(o.alpha);
    std::vector<int> ns = o.photons;
    std::sort(ns.begin(), ns.end());
    if (!(alpha * alpha < ns.front())) {
        throw UsageError("coherent-limit needs |alpha|^2 < min(N)");
    }

    Table t({"N", "k", "exact", "poisson", "abs_err"});
    std::vector<std::vector<double>> err(static_cast<size_t>(o.kmax) + 1);
    const ssrc_complex a{alpha, 0.0};
    for (int n : ns) {
        for (int k = 0; k <= std::min(o.kmax, n); ++k) {
            ssrc_complex exact{}, poisson{};
            check(ssrc_coherent_limit_exact(n, a, k, &exact), "coherent_limit_exact");
            check(ssrc_poisson_amplitude(a, k, &poisson), "poisson_amplitude");
            const double e = std::hypot(exact.re - poisson.re, exact.im - poisson.im);
            err[static_cast<size_t>(k)].push_back(e);
            t.row({static_cast<double>(n), static_cast<double>(k), exact.re, poisson.re, e});
        }
    }
    // Per k, the error must shrink as N grows unless it is already below tol.
    bool pass = true;
    for (const auto &e : err) {
        for (size_t i = 1; i < e.size(); ++i) {
            pass = pass && (e[i] < e[i - 1] || e[i] <= o.tol);
        }
    }
    emit(o, "coherent-limit", t, pass, {{"alpha", alpha}, {"tol", o.tol}});
    return report(pass, "abs_err not decreasing in N");
}

int cmd_cat(const Options &o) {
    const int n = single_photons(o);
    if (n < 1) {
        throw UsageError("cat needs N >= 1");
    }
    const int cap = resolve_cap(o);
    // (alpha, |alpha|^2) pairs; the default grid is |alpha|^2 = 0, 1/2, 1, ..., N.
    std::vector<std::pair<double, double>> grid;
    if (!o.alpha_grid.empty() || !o.alpha.empty()) {
        const auto alphas = o.alpha_grid.empty() ? std::vector<double>{parse_real(o.alpha)} : parse_grid(o.alpha_grid);
        for (double a : alphas) {
            grid.emplace_back(a, a * a);
        }
    } else {
        for (int i = 0; i <= 2 * n; ++i) {
            grid.emplace_back(std::sqrt(0.5 * i), 0.5 * i);
        }
    }

    Table t({"N", "alpha_sq", "overlap_exact", "overlap_gaussian_approx"});
    bool pass = true;
    for (const auto &[alpha, alpha_sq] : grid) {
        const ssrc_complex a{alpha, 0.0};
        ssrc_complex exact{};
        check(ssrc_cat_overlap(n, a, &exact), "cat_overlap");
        if (n <= cap) {
            ssrc_complex numeric{};
            check(ssrc_cat_overlap_numeric(n, a, cap, &numeric), "cat_overlap_numeric");
            pass = pass && std::hypot(numeric.re - exact.re, numeric.im - exact.im) <= o.tol;
        }
        t.row({static_cast<double>(n), alpha_sq, exact.re, std::exp(-2 * alpha_sq)});
    }

    json extra = {{"tol", o.tol}};
    if (!o.ghz_out.empty() || o.format == "json") {
        json ghz = {{"N", n}};
        for (int sign : {+1, -1}) {
            double prob = 0;
            ssrc_qubits *raw = nullptr;
            check(ssrc_cat_to_bqc(n, sign, cap, &prob, &raw), "cat_to_bqc");
            QubitsPtr q(raw);
            const int site = 1;
            double entropy = 0;
            check(ssrc_qubits_entropy(q.get(), &site, 1, &entropy), "entropy");
            pass = pass && std::fabs(entropy - 1.0) <= o.tol;
            const char *key = sign > 0 ? "plus" : "minus";
            ghz[key] = {{"probability", prob}, {"entropy_bits", entropy}, {"state", qubits_json(q.get())}};
        }
        if (!o.ghz_out.empty()) {
            write_output(o.ghz_out, ghz.dump(2) + "\n");
        }
        if (o.format == "json") {
            extra["ghz"] = ghz;
        }
    }
    emit(o, "cat", t, pass, extra);
    return report(pass, "cat overlap or GHZ extraction outside tolerance");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fixed-photon-number bosonic simulator and qubit extraction checks", "ssrc_bqc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ssrc_version());

    Options o;
    auto common = [&](CLI::App *sub) {
        sub->add_option("--out", o.out, "Output file (default stdout)");
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
    };
    auto with_cap = [&](CLI::App *sub) {
        sub->add_option_function<int>("--cap", [&](const int &v) { o.cap = v; },
                                      "Photon cap for Fock expansions (default 8, env SSRC_BQC_CAP)");
    };

    auto *alg = app.add_subcommand("algebra-check", "Angular-momentum algebra and gate unitarity residuals");
    alg->add_option("--photons", o.photons, "Photon number N")->required();
    common(alg);

    auto *kerr = app.add_subcommand("kerr-scan", "Kerr gate, extraction, entropy and controlled phase over eta");
    kerr->add_option("--photons", o.photons, "Photon number N")->required();
    kerr->add_option("--eta", o.eta, "Single eta (accepts pi multiples, e.g. pi/8)");
    kerr->add_option("--eta-grid", o.eta_grid, "start:stop:steps, both ends included");
    common(kerr);
    with_cap(kerr);

    auto *coh = app.add_subcommand("coherent-limit", "Fixed-N amplitudes against Poisson amplitudes");
    coh->add_option("--photons", o.photons, "Comma-separated photon numbers")->required()->delimiter(',');
    coh->add_option("--alpha", o.alpha, "Real coherent amplitude (default 1)");
    coh->add_option("--kmax", o.kmax, "Largest k (default 5)");
    common(coh);

    auto *cat = app.add_subcommand("cat", "Fixed-N cat overlaps and GHZ extraction");
    cat->add_option("--photons", o.photons, "Photon number N")->required();
    cat->add_option("--alpha", o.alpha, "Single real alpha");
    cat->add_option("--alpha-grid", o.alpha_grid, "start:stop:steps over alpha");
    cat->add_option("--ghz-out", o.ghz_out, "Write the GHZ extraction JSON here");
    common(cat);
    with_cap(cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (alg->parsed()) return cmd_algebra_check(o);
        if (kerr->parsed()) return cmd_kerr_scan(o);
        if (coh->parsed()) return cmd_coherent_limit(o);
        if (cat->parsed()) return cmd_cat(o);
    } catch (const UsageError &e) {
        std::cerr << "ssrc_bqc: " << e.what() << '\n';
    } catch (const LibraryError &e) {
        std::cerr << "ssrc_bqc: " << e.what() << '\n';
    }
    return kExitUsage;
}
