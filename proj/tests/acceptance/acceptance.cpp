// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include "golden_cases.hpp"
#include "kvtools/cli.hpp"
#include "kvtools/random.hpp"
#include "kvtools/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
    bool pass;
    std::string detail;
};

kvtools::SuiteOptions options(std::map<std::string, long> params = {}) {
    kvtools::SuiteOptions o;
    o.seed = kvtools::suite_seed();
    o.jobs = std::max(1u, std::thread::hardware_concurrency());
    o.params = std::move(params);
    return o;
}

// Runs a suite and applies an optional wall-clock budget in seconds.
Line suite_line(const std::string& name, std::map<std::string, long> params = {}, double budget = 0) {
    const auto start = Clock::now();
    const kvtools::SuiteReport rep = kvtools::find_suite(name).run(options(std::move(params)));
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream d;
    d << name << " " << rep.passed() << "/" << rep.cases.size();
    char buf[32];
    std::snprintf(buf, sizeof buf, " in %.2fs", secs);
    d << buf;
    if (budget > 0) d << " (budget " << budget << "s)";
    bool pass = rep.ok() && (budget <= 0 || secs < budget);
    for (const auto& c : rep.cases) {
        if (!c.pass) {
            d << "; first failure: " << c.label;
            break;
        }
    }
    return {pass, d.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string run_binary(const std::string& args) {
    const std::string cmd = std::string(KVERTEX_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "";
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
    return out;
}

Line cli_determinism() {
    const std::string golden = KVERTEX_GOLDEN_DIR;
    std::size_t golden_ok = 0, repeat_ok = 0;
    std::string bad;
    const auto& cases = kvtest::golden_cases();
    for (const auto& c : cases) {
        std::vector<std::string> args = c.args;
        for (auto& a : args) {
            if (a.rfind("@golden/", 0) == 0) a = golden + "/" + a.substr(8);
        }
        std::ostringstream out, err;
        const int code = kvtools::run(args, out, err);
        if (code == kvtools::kOk && out.str() == slurp(golden + "/" + c.name + ".out")) {
            ++golden_ok;
        } else if (bad.empty()) {
            bad = "golden " + std::string(c.name);
        }
    }
    const std::vector<std::string> repeated = {
        "suite residue-oracle --seed 7 --count 40 --jobs 4", "suite axioms --seed 7 --count 3 --jobs 4", "suite lie --seed 7 --count 3 --jobs 4",
        "suite conner-floyd --seed 7 --count 20 --jobs 4",   "suite wallcross --seed 7 --jobs 4",
    };
    for (const auto& args : repeated) {
        const std::string a = run_binary(args), b = run_binary(args);
        if (!a.empty() && a == b) {
            ++repeat_ok;
        } else if (bad.empty()) {
            bad = "repeat " + args;
        }
    }
    std::ostringstream d;
    d << "golden " << golden_ok << "/" << cases.size() << ", repeated runs identical " << repeat_ok << "/" << repeated.size();
    if (!bad.empty()) d << "; first failure: " << bad;
    return {golden_ok == cases.size() && repeat_ok == repeated.size(), d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Line()>>> criteria = {
        {"residue constraint family", [] { return suite_line("residue-constraints", {{"nmax", 6}, {"kmax", 4}}, 5); }},
        {"residue comparison at roots of unity", [] { return suite_line("residue-comparison"); }},
        {"closed-form residue vs oracle", [] { return suite_line("residue-oracle", {{"count", 200}}, 30); }},
        {"diagonal expansion laws", [] { return suite_line("diagonal-expansion", {{"order", 12}}); }},
        {"Hopf algebra", [] { return suite_line("hopf"); }},
        {"vertex algebra axioms", [] { return suite_line("axioms", {{"count", 20}, {"max-total", 4}}, 60); }},
        {"reduced kernels", [] { return suite_line("reduced", {{"count", 20}, {"max-total", 4}}); }},
        {"Lie algebra", [] { return suite_line("lie", {{"count", 10}}); }},
        {"Conner-Floyd classes", [] { return suite_line("conner-floyd", {{"count", 50}}); }},
        {"wall-crossing round trip", [] { return suite_line("wallcross", {}, 10); }},
        {"CLI determinism and golden files", [] { return cli_determinism(); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Line l;
        try {
            l = criteria[i].second();
        } catch (const std::exception& e) {
            l = {false, std::string("exception: ") + e.what()};
        }
        all &= l.pass;
        std::cout << (l.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << l.detail << std::endl;
    }
    return all ? 0 : 1;
}
