#include "braidcover/braid.hpp"
#include "braidcover/burau.hpp"
#include "braidcover/json_io.hpp"
#include "braidcover/ordering.hpp"
#include "braidcover/topology.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace braidcover;

// Exit codes: 0 success, 1 failed verification, 2 usage or parse error,
// 3 precondition violation or step-limit exhaustion, 4 internal invariant
// breach.
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

struct CommonOpts {
    int strands = 0;
    std::string format = "table";
    std::string expression;
    long long step_limit = kDefaultStepLimit;
    int max_power = 6;
    std::optional<long long> denom_bound;
    bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_word = true) {
    if (needs_word) {
        cmd->add_option("-n,--strands", o.strands, "Strand count the expression lives on")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("expression", o.expression, "Braid expression")->required();
    }
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->add_option("--step-limit", o.step_limit, "Handle reduction step budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

BraidWord word_of(const CommonOpts& o) {
    return flatten(parse_expr(o.expression), o.strands);
}

std::string letters_line(const BraidWord& w) {
    std::string s;
    for (int e : w.letters()) {
        if (!s.empty()) s += " ";
        s += std::to_string(e);
    }
    return s;
}

std::string cycle_type_line(const Permutation& p) {
    std::string s;
    for (int len : p.cycle_type()) {
        if (!s.empty()) s += "+";
        s += std::to_string(len);
    }
    return s;
}

void print_word(const BraidWord& w, bool as_json) {
    if (as_json) {
        std::cout << json(w).dump(2) << "\n";
        return;
    }
    std::cout << "strands: " << w.strands() << "\n"
              << "length: " << w.length() << "\n"
              << "letters: " << letters_line(w) << "\n";
}

int cmd_parse(const CommonOpts& o) {
    print_word(word_of(o), o.json());
    return 0;
}

int cmd_invariants(const CommonOpts& o) {
    BraidWord w = word_of(o);
    Permutation perm = permutation(w);
    int components = perm.cycle_count();
    bool knot = components == 1;
    Page page = page_of(w.strands());
    bool odd = w.strands() % 2 == 1;

    std::optional<LaurentPoly> alex;
    std::optional<BigInt> det;
    std::optional<BigInt> h1;
    if (knot) {
        alex = alexander_polynomial(w);
        det = knot_determinant(w);
        if (odd) h1 = h1_order(w);
    }

    if (o.json()) {
        json j{{"strands", w.strands()},
               {"length", w.length()},
               {"exponent_sum", exponent_sum(w)},
               {"cycle_type", perm.cycle_type()},
               {"components", components},
               {"knot", knot},
               {"positive", is_positive_word(w)},
               {"page", page},
               {"alexander", alex ? json(*alex) : json(nullptr)},
               {"determinant", det ? json(det->str()) : json(nullptr)},
               {"h1_order", h1 ? json(h1->str()) : json(nullptr)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "strands: " << w.strands() << "\n"
              << "length: " << w.length() << "\n"
              << "exponent_sum: " << exponent_sum(w) << "\n"
              << "cycle_type: " << cycle_type_line(perm) << "\n"
              << "components: " << components << "\n"
              << "knot: " << (knot ? "true" : "false") << "\n"
              << "positive: " << (is_positive_word(w) ? "true" : "false") << "\n"
              << "page: genus " << page.genus << ", boundary " << page.boundary_components
              << ", euler " << page.euler_characteristic << "\n"
              << "alexander: " << (alex ? alex->str() : "-") << "\n"
              << "determinant: " << (det ? det->str() : "-") << "\n"
              << "h1_order: " << (h1 ? h1->str() : "-") << "\n";
    return 0;
}

int cmd_burau(const CommonOpts& o, bool at_minus_one) {
    BraidWord w = word_of(o);
    if (at_minus_one) {
        IntMatrix m = burau_at_minus1(w);
        if (o.json()) {
            std::cout << json(m).dump(2) << "\n";
            return 0;
        }
        std::cout << "ring: int\nrows: " << m.rows() << "\ncols: " << m.cols() << "\n";
        for (int i = 0; i < m.rows(); ++i) {
            std::cout << "row " << i << ":";
            for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " | " : " ") << m.at(i, j).str();
            std::cout << "\n";
        }
        return 0;
    }
    PolyMatrix m = burau_word(w);
    if (o.json()) {
        std::cout << json(m).dump(2) << "\n";
        return 0;
    }
    std::cout << "ring: laurent\nrows: " << m.rows() << "\ncols: " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        std::cout << "row " << i << ":";
        for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " | " : " ") << m.at(i, j).str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_alexander(const CommonOpts& o) {
    LaurentPoly p = alexander_polynomial(word_of(o));
    if (o.json()) {
        std::cout << json(p).dump(2) << "\n";
        return 0;
    }
    std::cout << "alexander: " << p.str() << "\n";
    return 0;
}

int cmd_floor(const CommonOpts& o) {
    long long f = dehornoy_floor(word_of(o), o.step_limit);
    if (o.json()) {
        std::cout << json{{"floor", f}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "floor: " << f << "\n";
    return 0;
}

int cmd_fdtc(const CommonOpts& o, bool require_bh) {
    BraidWord w = word_of(o);
    bool odd = w.strands() % 2 == 1;
    if (require_bh && !odd)
        throw DomainError("Birman-Hilden halving requires an odd strand count");
    FdtcEstimate e = fdtc(w, o.max_power, o.denom_bound, o.step_limit);
    std::optional<FdtcEstimate> bh;
    if (odd) bh = bh_fdtc(e, w.strands());

    if (o.json()) {
        json j(e);
        j["bh"] = bh ? json(*bh) : json(nullptr);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "lower: " << e.lower.str() << "\n"
              << "upper: " << e.upper.str() << "\n"
              << "pinned: " << (e.pinned ? e.pinned->str() : "-") << "\n"
              << "power_used: " << e.power_used << "\n";
    if (bh) {
        std::cout << "bh_lower: " << bh->lower.str() << "\n"
                  << "bh_upper: " << bh->upper.str() << "\n"
                  << "bh_pinned: " << (bh->pinned ? bh->pinned->str() : "-") << "\n";
    }
    return 0;
}

int cmd_markov(const CommonOpts& o, const std::string& move) {
    BraidWord w = word_of(o);
    if (move == "stab+" || move == "stab-") {
        BraidWord r = markov_stabilize(w, move == "stab+" ? 1 : -1);
        if (o.json()) {
            json j{{"applicable", true}, {"word", r}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "applicable: true\n";
            print_word(r, false);
        }
        return 0;
    }
    std::optional<BraidWord> r = markov_destabilize(w);
    if (o.json()) {
        json j{{"applicable", r.has_value()}, {"word", r ? json(*r) : json(nullptr)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "applicable: " << (r ? "true" : "false") << "\n";
    if (r) print_word(*r, false);
    return 0;
}

int cmd_verify(const CommonOpts& o, int k_max) {
    if (k_max < 0) throw DomainError("k-max must be non-negative");
    if (k_max > 50) {
        std::cerr << "warning: capping k-max at 50; symbolic computations grow quickly\n";
        k_max = 50;
    }
    FdtcOptions fopts;
    fopts.max_power = o.max_power;
    fopts.denominator_bound = o.denom_bound;
    fopts.step_limit = o.step_limit;

    std::vector<DeterminantTableRow> table;
    if (k_max >= 1) table = verify_prop41(k_max);
    std::vector<Theorem12Report> pairs;
    for (int k = 0; k <= k_max; ++k) pairs.push_back(theorem12_report(k, fopts));

    bool all_pass = true;
    for (const auto& r : table) all_pass = all_pass && r.pass;
    for (const auto& r : pairs) all_pass = all_pass && r.pass;

    if (o.json()) {
        json j{{"determinant_table", table}, {"open_book_pairs", pairs}, {"all_pass", all_pass}};
        std::cout << j.dump(2) << "\n";
        return all_pass ? 0 : kExitVerifyFailed;
    }

    std::cout << "determinant table (predicted 4k^2+4k-1):\n";
    for (const auto& r : table)
        std::cout << "  k=" << r.k << " det(beta(" << 2 * r.k + 1 << "," << 2 * r.k + 3
                  << "))=" << r.det_a.str() << " det(beta(" << 2 * r.k + 3 << "," << 2 * r.k + 1
                  << "))=" << r.det_b.str() << " predicted=" << r.predicted.str() << " "
                  << (r.pass ? "PASS" : "FAIL") << "\n";
    std::cout << "open book pairs (genus k+1 vs genus k, same double branched cover):\n";
    for (const auto& r : pairs) {
        std::cout << "  k=" << r.k << " genus=" << r.high_genus.page.genus << "/"
                  << r.low_genus.page.genus << " stein=" << (r.both_stein ? "yes" : "no")
                  << " det_equal=" << (r.equal_determinant ? "yes" : "no")
                  << " alex_equal=" << (r.equal_alexander ? "yes" : "no") << " fdtc=[";
        const auto& hi = r.high_genus.fdtc_cover;
        const auto& lo = r.low_genus.fdtc_cover;
        std::cout << (hi && hi->pinned ? hi->pinned->str() : "?") << ", "
                  << (lo && lo->pinned ? lo->pinned->str() : "?") << "] "
                  << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact braid invariants of double branched covers: Burau, Alexander, "
                 "Dehornoy floors, fractional Dehn twist coefficients"};
    app.require_subcommand(1);

    CommonOpts parse_o, inv_o, burau_o, alex_o, fdtc_o, floor_o, markov_o, verify_o;

    CLI::App* c_parse = app.add_subcommand("parse", "Parse an expression and print the word");
    add_common(c_parse, parse_o);

    CLI::App* c_inv = app.add_subcommand("invariants", "Closure invariants of a braid word");
    add_common(c_inv, inv_o);

    CLI::App* c_burau = app.add_subcommand("burau", "Reduced Burau matrix of a word");
    add_common(c_burau, burau_o);
    bool symbolic = false, at_minus_one = false;
    CLI::Option* opt_sym = c_burau->add_flag("--symbolic", symbolic, "Matrix over Z[t,1/t] (default)");
    c_burau->add_flag("--at-minus-one", at_minus_one, "Integer matrix at t = -1")->excludes(opt_sym);

    CLI::App* c_alex = app.add_subcommand("alexander", "Alexander polynomial of a knot closure");
    add_common(c_alex, alex_o);

    CLI::App* c_fdtc = app.add_subcommand("fdtc", "Fractional Dehn twist coefficient enclosure");
    add_common(c_fdtc, fdtc_o);
    bool bh_flag = false;
    c_fdtc->add_flag("--bh", bh_flag, "Require the Birman-Hilden halved value (odd strand count)");
    c_fdtc->add_option("--max-power", fdtc_o.max_power, "Highest power of the word to bound with")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    long long fdtc_denom = 0;
    CLI::Option* opt_denom =
        c_fdtc->add_option("--denom-bound", fdtc_denom, "Denominator bound for pinning")
            ->check(CLI::PositiveNumber);

    CLI::App* c_floor = app.add_subcommand("floor", "Dehornoy floor of a word");
    add_common(c_floor, floor_o);

    CLI::App* c_markov = app.add_subcommand("markov", "Apply a Markov move");
    std::string move;
    c_markov->add_option("move", move, "One of stab+, stab-, destab")
        ->required()
        ->check(CLI::IsMember({"stab+", "stab-", "destab"}));
    add_common(c_markov, markov_o);

    CLI::App* c_verify = app.add_subcommand(
        "verify", "Check the determinant table and the genus-dropping open book pairs");
    add_common(c_verify, verify_o, false);
    int k_max = 5;
    c_verify->add_option("--k-max", k_max, "Largest family index k")->capture_default_str();
    c_verify->add_option("--max-power", verify_o.max_power, "FDTC power bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    long long verify_denom = 0;
    CLI::Option* opt_vdenom =
        c_verify->add_option("--denom-bound", verify_denom, "FDTC denominator bound")
            ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (*opt_denom) fdtc_o.denom_bound = fdtc_denom;
    if (*opt_vdenom) verify_o.denom_bound = verify_denom;

    try {
        if (c_parse->parsed()) return cmd_parse(parse_o);
        if (c_inv->parsed()) return cmd_invariants(inv_o);
        if (c_burau->parsed()) return cmd_burau(burau_o, at_minus_one);
        if (c_alex->parsed()) return cmd_alexander(alex_o);
        if (c_fdtc->parsed()) return cmd_fdtc(fdtc_o, bh_flag);
        if (c_floor->parsed()) return cmd_floor(floor_o);
        if (c_markov->parsed()) return cmd_markov(markov_o, move);
        if (c_verify->parsed()) return cmd_verify(verify_o, k_max);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StepLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
