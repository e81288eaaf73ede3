#pragma once

#include <string>
#include <vector>

namespace kvtest {

// Arguments starting with "@golden/" are resolved against the golden directory.
struct GoldenCase {
    const char* name;
    std::vector<std::string> args;
};

inline const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"residue_k", {"residue", "--kind", "k", "1/((1-z)*(1-t*z))"}},
        {"residue_naive", {"residue", "--kind", "naive", "1/((1-z)*(1-t*z))"}},
        {"residue_oracle", {"residue", "--kind", "oracle", "--order", "10", "1/(1-zeta3*z)^2"}},
        {"expand_one", {"expand", "--at", "one", "--order", "3", "z^-1"}},
        {"expand_infinity", {"expand", "--at", "infinity", "--order", "3", "1/(1-z)"}},
        {"pfrac", {"pfrac", "1/((1-z)*(1-t*z))"}},
        {"pfrac_cyclotomic", {"pfrac", "1/(1-z^2)"}},
        {"hopf_star", {"hopf", "star", "1", "1"}},
        {"hopf_coproduct", {"hopf", "coproduct", "2"}},
        {"vertex_kernel", {"vertex", "--quiver", "@golden/a2.quiver", "--f", "1@e1", "--g", "1@e2", "--kernel"}},
        {"vertex_shuffle", {"vertex", "--quiver", "@golden/jordan.quiver", "--f", "s_{1,1}@e1", "--g", "s_{1,1}@e1"}},
        {"bracket", {"bracket", "--quiver", "@golden/a2.quiver", "--f", "1@e1", "--g", "1@e2"}},
        {"axioms_skew",
         {"axioms", "--quiver", "@golden/jordan.quiver", "--f", "s_{1,1}@e1", "--g", "s_{1,1}@e1", "--h", "1@e1", "--axiom", "skew"}},
        {"wallcross_forward", {"wallcross", "forward", "--table", "@golden/one_vertex_table.json", "--frames", "1"}},
        {"wallcross_partitions", {"wallcross", "partitions", "--alpha", "(1,1)", "--rank", "1,1", "--slope", "0,0", "--frames", "1,2"}},
        {"wallcross_quiver",
         {"wallcross", "forward", "--mode", "quiver", "--quiver", "@golden/a2.quiver", "--table", "@golden/a2_quiver_table.json", "--frames",
          "1,2"}},
        {"suite_constraints", {"suite", "residue-constraints", "--nmax", "6", "--kmax", "4"}},
    };
    return cases;
}

}  // namespace kvtest
