#pragma once

#include "kvertex/laurent.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kvtools {

struct CaseResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<CaseResult> cases;

    std::size_t passed() const;
    bool ok() const { return passed() == cases.size(); }
    // One line per case, then "PASS n/m" or "FAIL n/m".
    std::string render(bool failures_only = false) const;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::map<std::string, long> params;

    long get(const std::string& key, long fallback) const;
};

using CaseFn = std::function<CaseResult()>;

// Runs cases on a worker pool; results keep the input order.
std::vector<CaseResult> run_cases(const std::vector<CaseFn>& cases, unsigned jobs);

struct SuiteInfo {
    std::string name;
    std::string description;
    std::vector<std::string> params;
    std::function<SuiteReport(const SuiteOptions&)> run;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo& find_suite(const std::string& name);

// var = (1 - x), or var^{-1} = (1 - x) when inverse is set.
struct AdicSubst {
    std::string var;
    std::string x;
    bool inverse = false;
};

// Apply the substitutions (negative powers become binomial series) and keep
// only terms of total degree < order in the new variables.
kvertex::LaurentPoly adic_truncate(const kvertex::LaurentPoly& p, const std::vector<AdicSubst>& subst, int order);

}  // namespace kvtools
