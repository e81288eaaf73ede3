#include "kvtools/cli.hpp"

#include "kvertex/bgm.hpp"
#include "kvertex/expr.hpp"
#include "kvertex/quiver.hpp"
#include "kvertex/residue.hpp"
#include "kvertex/wallcross.hpp"
#include "kvtools/random.hpp"
#include "kvtools/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace kvtools {

using namespace kvertex;
using json = nlohmann::ordered_json;

namespace {

// Input that could not be read as an expression, quiver, element or table.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Quiver load_quiver(const std::string& path) {
    try {
        return Quiver::parse(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

// "poly@e<vertex>" or "poly@(d1,d2,...)".
GradedElement parse_element(const Quiver& q, const std::string& text) {
    const auto at = text.rfind('@');
    if (at == std::string::npos) throw InputError("element '" + text + "' lacks a grade, expected poly@e<vertex> or poly@(d1,...)");
    const std::string g = text.substr(at + 1);
    DimVector alpha(q.size(), 0);
    if (!g.empty() && g[0] == 'e') {
        const int i = q.index_of(g.substr(1));
        if (i < 0) throw InputError("unknown vertex '" + g.substr(1) + "'");
        alpha[static_cast<std::size_t>(i)] = 1;
    } else if (!g.empty() && g[0] == '(') {
        try {
            alpha = parse_dim(g);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (alpha.size() != q.size()) throw InputError("grade " + g + " does not match the quiver's vertex count");
    } else {
        throw InputError("malformed grade '" + g + "'");
    }
    return {alpha, parse_laurent(text.substr(0, at))};
}

std::string element_string(const GradedElement& e) { return e.poly().to_string() + "@" + dim_to_string(e.alpha()); }

void add_expr(CLI::App* cmd, std::string& expr) { cmd->add_option("expr", expr, "expression, e.g. \"1/((1-z)*(1-t*z))\"")->required(); }

// ---- wallcross -----------------------------------------------------------

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    for (const auto& p : split(s, ',')) out.push_back(std::stol(p));
    return out;
}

StabilityData parse_stability(std::size_t nv, const std::string& rank, const std::string& slope, const std::string& frames) {
    std::vector<long> r = rank.empty() ? std::vector<long>(nv, 1) : parse_longs(rank);
    std::vector<Rational> t(nv, Rational(0));
    if (!slope.empty()) {
        t.clear();
        for (const auto& p : split(slope, ',')) t.push_back(parse_rational(p));
    }
    std::vector<std::vector<long>> f;
    if (frames.empty()) {
        f.emplace_back(nv, 1);
    } else {
        for (const auto& row : split(frames, ';')) f.push_back(parse_longs(row));
    }
    if (r.size() != nv || t.size() != nv) throw InputError("stability data must have one entry per vertex");
    return {r, t, f};
}

template <class V, class F>
InvariantTable<V> load_table(const std::string& path, F&& value) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    if (!j.is_object()) throw InputError(path + ": table must be a JSON object");
    InvariantTable<V> t;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string()) throw InputError(path + ": value for " + k + " must be a string");
        DimVector a;
        try {
            a = parse_dim(k);
        } catch (const std::invalid_argument& e) {
            throw InputError(path + ": " + e.what());
        }
        if (is_zero(a)) throw InputError(path + ": grade 0 is not allowed in a table");
        t.emplace(a, value(a, v.template get<std::string>()));
    }
    if (t.empty()) throw InputError(path + ": empty table");
    return t;
}

template <class V, class F>
std::string dump_table(const InvariantTable<V>& t, F&& str) {
    json j = json::object();
    for (const auto& [a, v] : t) j[dim_to_string(a)] = str(v);
    return j.dump(2);
}

struct WallcrossArgs {
    std::string action;
    std::string table, table2, quiver;
    std::string mode = "free";
    std::string rank, slope, frames;
    std::string alpha;
    std::size_t k = 0, k2 = 1;
};

template <class A, class Parse, class Str>
int wallcross_with(const A& alg, const WallcrossArgs& w, Parse&& parse, Str&& str, std::ostream& out) {
    using V = typename A::Value;
    const auto t1 = load_table<V>(w.table, parse);
    const std::size_t nv = t1.begin()->first.size();
    const StabilityData stab = parse_stability(nv, w.rank, w.slope, w.frames);
    if (w.k >= stab.frames.size() || (w.action == "residual" && w.k2 >= stab.frames.size()))
        throw std::invalid_argument("frame index out of range");
    if (w.action == "forward") {
        out << dump_table(forward_table(alg, t1, w.k, stab), str) << "\n";
    } else if (w.action == "invert") {
        out << dump_table(invert_transform(alg, t1, w.k, stab), str) << "\n";
    } else {
        if (w.table2.empty()) throw InputError("residual needs --table2");
        const auto t2 = load_table<V>(w.table2, parse);
        std::vector<DimVector> which;
        if (!w.alpha.empty()) {
            which.push_back(parse_dim(w.alpha));
        } else {
            for (const auto& [a, v] : t1) which.push_back(a);
        }
        for (const auto& a : which) out << dim_to_string(a) << " " << str(master_identity_residual(alg, t1, t2, w.k, w.k2, a, stab)) << "\n";
    }
    return kOk;
}

int wallcross_cmd(const WallcrossArgs& w, std::ostream& out) {
    if (w.action == "partitions") {
        if (w.alpha.empty()) throw InputError("partitions needs --alpha");
        DimVector alpha;
        try {
            alpha = parse_dim(w.alpha);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        const StabilityData stab = parse_stability(alpha.size(), w.rank, w.slope, w.frames);
        for (const auto& p : ordered_partitions(alpha, stab)) {
            std::string line;
            for (const auto& a : p) line += (line.empty() ? "" : " ") + dim_to_string(a);
            out << line << "\n";
        }
        return kOk;
    }
    if (w.table.empty()) throw InputError("--table is required");
    if (w.mode == "free") {
        return wallcross_with(
            FreeAlgebra{}, w,
            [](const DimVector&, const std::string& s) {
                try {
                    return parse_free_lie(s);
                } catch (const std::invalid_argument& e) {
                    throw InputError(e.what());
                }
            },
            [](const FreeLie& v) { return v.to_string(); }, out);
    }
    if (w.quiver.empty()) throw InputError("--mode quiver needs --quiver");
    const QuiverAlgebra alg(load_quiver(w.quiver));
    return wallcross_with(
        alg, w, [](const DimVector& a, const std::string& s) { return GradedElement(a, parse_laurent(s)); },
        [](const GradedElement& v) { return v.poly().to_string(); }, out);
}

std::string hopf_op(const std::string& op, const std::vector<long>& n, int order) {
    auto need = [&](std::size_t k) {
        if (n.size() != k) throw InputError("hopf " + op + " takes " + std::to_string(k) + " integer argument(s)");
    };
    auto idx = [](long k) {
        if (k < 0) throw InputError("phi index must be nonnegative");
        return PhiElement::basis(k);
    };
    if (op == "pair") {
        need(2);
        return to_string(phi_pair(idx(n[0]), n[1]));
    }
    if (op == "star") {
        need(2);
        return star(idx(n[0]), idx(n[1])).to_string();
    }
    if (op == "coproduct") {
        need(1);
        std::string s;
        for (const auto& [a, b] : coproduct(idx(n[0]))) s += (s.empty() ? "" : " + ") + a.to_string() + "(x)" + b.to_string();
        return s;
    }
    if (op == "ch") {
        need(1);
        return chern_character(idx(n[0])).to_string();
    }
    if (op == "numerical") {
        need(1);
        return to_numerical(idx(n[0])).to_string("deg_s");
    }
    if (op == "from-numerical") {
        std::vector<Rational> c;
        for (long x : n) c.emplace_back(x);
        return from_numerical(NumericalPoly(c)).to_string();
    }
    if (op == "translation") {
        need(1);
        return translation_pairing(n[0], order).to_string();
    }
    throw InputError("unknown hopf operation '" + op + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact multiplicative vertex algebra toolkit", "kvertex"};
    app.require_subcommand(1);

    std::string expr, kind = "k", at = "zero", var = "z";
    int order = 10;

    auto* residue = app.add_subcommand("residue", "residue of a rational function in z");
    residue->add_option("--kind", kind, "k, naive, coh or oracle")->check(CLI::IsMember({"k", "naive", "coh", "oracle"}));
    residue->add_option("--order", order, "series order for --kind oracle");
    residue->add_option("--var", var, "expansion variable");
    add_expr(residue, expr);

    auto* expand = app.add_subcommand("expand", "expand at z = 0, infinity or 1");
    expand->add_option("--at", at, "zero, infinity or one")->check(CLI::IsMember({"zero", "infinity", "one"}));
    expand->add_option("--order", order, "number of terms");
    expand->add_option("--var", var, "expansion variable");
    add_expr(expand, expr);

    auto* pfrac = app.add_subcommand("pfrac", "partial fractions over cyclotomic covers");
    pfrac->add_option("--var", var, "expansion variable");
    add_expr(pfrac, expr);

    std::string op;
    std::vector<long> ints;
    auto* hopf = app.add_subcommand("hopf", "phi-basis operations: pair, star, coproduct, ch, numerical, from-numerical, translation");
    hopf->add_option("op", op)->required();
    hopf->add_option("args", ints)->allow_extra_args();
    hopf->add_option("--order", order, "order for translation");

    std::string quiver, fs, gs, hs, axiom = "all", convention = "substitution";
    bool kernel = false;
    auto* vertex = app.add_subcommand("vertex", "Y(f,z)g on a quiver");
    vertex->add_option("--quiver", quiver)->required();
    vertex->add_option("--f", fs)->required();
    vertex->add_option("--g", gs)->required();
    vertex->add_flag("--kernel", kernel, "include the Theta kernel");

    auto* bracket_cmd = app.add_subcommand("bracket", "residue Lie bracket of degree-0 elements");
    bracket_cmd->add_option("--quiver", quiver)->required();
    bracket_cmd->add_option("--f", fs)->required();
    bracket_cmd->add_option("--g", gs)->required();

    auto* axioms = app.add_subcommand("axioms", "check vertex algebra axioms on given elements");
    axioms->set_help_flag("--help", "print help");
    axioms->add_option("--quiver", quiver)->required();
    axioms->add_option("--f", fs)->required();
    axioms->add_option("--g", gs)->required();
    axioms->add_option("--h", hs)->required();
    axioms->add_option("--axiom", axiom)->check(CLI::IsMember({"all", "vacuum", "skew", "weak-assoc", "locality"}));
    axioms->add_option("--convention", convention, "translation convention")->check(CLI::IsMember({"substitution", "inverse"}));

    WallcrossArgs wa;
    auto* wall = app.add_subcommand("wallcross", "wall-crossing transforms on invariant tables");
    wall->add_option("action", wa.action)->required()->check(CLI::IsMember({"forward", "invert", "residual", "partitions"}));
    wall->add_option("--table", wa.table, "JSON table (not used by partitions)");
    wall->add_option("--table2", wa.table2, "second JSON table for residual");
    wall->add_option("--mode", wa.mode)->check(CLI::IsMember({"free", "quiver"}));
    wall->add_option("--quiver", wa.quiver);
    wall->add_option("--rank", wa.rank, "rank weights, comma separated");
    wall->add_option("--slope", wa.slope, "slope weights, comma separated");
    wall->add_option("--frames", wa.frames, "frame weights, rows separated by ';'");
    wall->add_option("--k", wa.k, "frame index");
    wall->add_option("--k2", wa.k2, "second frame index for residual");
    wall->add_option("--alpha", wa.alpha, "class, e.g. (1,1)");

    std::string suite_name;
    SuiteOptions so;
    so.seed = 0;
    bool list = false, failures_only = false;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::map<std::string, long> params;
    auto* suite = app.add_subcommand("suite", "run a property suite");
    suite->add_option("name", suite_name);
    suite->add_flag("--list", list, "list suites");
    suite->add_option("--seed", seed, "overrides KVERTEX_SUITE_SEED");
    suite->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    suite->add_flag("--failures-only", failures_only, "print failing cases and the summary only");
    for (const char* p : {"nmax", "kmax", "count", "order", "max-total"}) suite->add_option(std::string("--") + p, params[p]);
    bool naive = false;
    suite->add_flag("--naive", naive, "residue-constraints with the naive residue");

    std::vector<std::string> argv_store{"kvertex"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        if (*residue) {
            const RationalFunction f = parse_rational_function(expr, var);
            if (kind == "k") {
                out << residue_k(f).to_string() << "\n";
            } else if (kind == "naive") {
                out << residue_naive(f).to_string() << "\n";
            } else if (kind == "oracle") {
                out << residue_k_oracle(f, order).to_string() << "\n";
            } else {
                if (!f.is_laurent()) throw std::domain_error("cohomological residue needs poles only at " + var + " = 0");
                out << residue_coh(f.prefactor(), var).to_string() << "\n";
            }
        } else if (*expand) {
            const Point p = at == "zero" ? Point::Zero : at == "infinity" ? Point::Infinity : Point::One;
            out << expand_at(parse_rational_function(expr, var), p, order).to_string() << "\n";
        } else if (*pfrac) {
            out << partial_fractions(parse_rational_function(expr, var)).to_string() << "\n";
        } else if (*hopf) {
            out << hopf_op(op, ints, order) << "\n";
        } else if (*vertex) {
            const Quiver q = load_quiver(quiver);
            const GradedElement f = parse_element(q, fs), g = parse_element(q, gs);
            if (kernel) {
                out << vertex_kernel(q, f, g).to_string() << "\n";
            } else {
                const ZGraded r = vertex_shuffle(as_zgraded(f), as_zgraded(g), Monomial::var("z"));
                out << r.poly.to_string() << "@" << dim_to_string(r.alpha) << "\n";
            }
        } else if (*bracket_cmd) {
            const Quiver q = load_quiver(quiver);
            out << element_string(lie_bracket(q, parse_element(q, fs), parse_element(q, gs))) << "\n";
        } else if (*axioms) {
            const Quiver q = load_quiver(quiver);
            const GradedElement f = parse_element(q, fs), g = parse_element(q, gs), h = parse_element(q, hs);
            const DegreeSign sign = convention == "substitution" ? DegreeSign::Substitution : DegreeSign::Inverse;
            const std::vector<std::pair<std::string, Axiom>> all{
                {"vacuum", Axiom::Vacuum}, {"skew", Axiom::Skew}, {"weak-assoc", Axiom::WeakAssoc}, {"locality", Axiom::Locality}};
            bool ok = true;
            for (const auto& [name, ax] : all) {
                if (axiom != "all" && axiom != name) continue;
                const AxiomResult r = axiom_check(q, ax, f, g, h, sign);
                ok = ok && r.pass;
                out << (r.pass ? "PASS " : "FAIL ") << name;
                if (!r.pass) out << ": " << r.witness;
                out << "\n";
            }
            return ok ? kOk : kEvalError;
        } else if (*wall) {
            return wallcross_cmd(wa, out);
        } else if (*suite) {
            if (list) {
                for (const auto& s : suites()) out << s.name << "  " << s.description << "\n";
                return kOk;
            }
            if (suite_name.empty()) throw InputError("suite name required (see suite --list)");
            const SuiteInfo& info = [&]() -> const SuiteInfo& {
                try {
                    return find_suite(suite_name);
                } catch (const std::invalid_argument& e) {
                    throw InputError(e.what());
                }
            }();
            so.seed = suite->count("--seed") ? seed : suite_seed();
            so.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
            for (const auto& [k, v] : params) {
                if (suite->count("--" + k)) so.params[k] = v;
            }
            if (naive) so.params["naive"] = 1;
            const SuiteReport rep = info.run(so);
            out << rep.render(failures_only);
            return rep.ok() ? kOk : kEvalError;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kEvalError;
    }
    return kOk;
}

}  // namespace kvtools
