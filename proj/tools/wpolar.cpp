// wpolar: Wiener polarity index toolkit for chemical trees.
//
// Subcommands: compute, enumerate, bound, construct, verify, rules.
// Exit status: 0 on success (and zero violations for verify), 2 when a verify
// campaign records violations, 1 on usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wpolar/wpolar.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << data;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener polarity index toolkit for chemical trees"};
    app.require_subcommand(1);

    // compute
    std::string compute_input, compute_method = "edge";
    auto* compute = app.add_subcommand("compute", "evaluate W_p of one tree");
    compute->add_option("--input", compute_input, "edge-list file, or - for stdin")->required();
    compute->add_option("--method", compute_method, "edge|distance|both")
        ->check(CLI::IsMember({"edge", "distance", "both"}));

    // enumerate
    int en_n = 0;
    int en_b = -1, en_k = -1;
    std::string en_emit = "trees";
    long long en_cap = -1;
    auto* enumerate = app.add_subcommand("enumerate", "stream all chemical trees of an order");
    enumerate->add_option("--n", en_n, "vertex count")->required();
    enumerate->add_option("--b", en_b, "filter: branching-vertex count");
    enumerate->add_option("--k", en_k, "filter: segment count");
    enumerate->add_option("--emit", en_emit, "trees|census|count")
        ->check(CLI::IsMember({"trees", "census", "count"}));
    enumerate->add_option("--cap", en_cap, "stop after this many trees");

    // bound
    std::string bd_which;
    int bd_n = 0, bd_b = -1, bd_k = -1;
    auto* bound = app.add_subcommand("bound", "closed-form extremal value");
    bound->add_option("--which", bd_which, "max-b|min-b|max-k")
        ->required()
        ->check(CLI::IsMember({"max-b", "min-b", "max-k"}));
    bound->add_option("--n", bd_n, "vertex count")->required();
    bound->add_option("--b", bd_b, "branching-vertex count");
    bound->add_option("--k", bd_k, "segment count");

    // construct
    std::string cf_family, cf_out;
    int cf_n = 0, cf_b = -1, cf_k = -1;
    auto* construct = app.add_subcommand("construct", "write an extremal family representative");
    construct->add_option("--family", cf_family, "bt1|bt2|bnb|ct1|ct2|ct3")
        ->required()
        ->check(CLI::IsMember({"bt1", "bt2", "bnb", "ct1", "ct2", "ct3"}));
    construct->add_option("--n", cf_n, "vertex count")->required();
    construct->add_option("--b", cf_b, "branching-vertex count");
    construct->add_option("--k", cf_k, "segment count");
    construct->add_option("--out", cf_out, "output file (default stdout)");

    // verify
    std::string vf_which, vf_format = "csv", vf_out;
    int vf_min = 0, vf_max = 0;
    bool vf_minkemp = false;
    auto* verify = app.add_subcommand("verify", "formula-vs-brute-force campaigns");
    verify->add_option("--which", vf_which, "bounds|rules|wp-equiv")
        ->required()
        ->check(CLI::IsMember({"bounds", "rules", "wp-equiv"}));
    verify->add_flag("--min-k-empirical", vf_minkemp,
                     "with bounds: add the empirical minimum-for-k table");
    verify->add_option("--n-min", vf_min, "first order")->required();
    verify->add_option("--n-max", vf_max, "last order")->required();
    verify->add_option("--format", vf_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", vf_out, "output file (default stdout)");

    // rules
    bool rules_list = false;
    auto* rules = app.add_subcommand("rules", "rewrite-rule catalog");
    rules->add_flag("--list", rules_list, "print the catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);     // prints the message; 0 for --help
        return code == 0 ? 0 : 1;
    }

    try {
        using namespace wpolar;

        if (*compute) {
            Tree t = parse_edge_list(read_input(compute_input));
            if (compute_method == "edge")
                std::cout << wp_edge(t) << '\n';
            else if (compute_method == "distance")
                std::cout << wp_distance(t) << '\n';
            else
                std::cout << wp_edge(t) << ' ' << wp_distance(t) << '\n';
            return 0;
        }

        if (*enumerate) {
            if (en_b >= 0 && en_k >= 0) {
                std::cerr << "at most one of --b and --k may be set\n";
                return 1;
            }
            EnumerationQuery q;
            q.n = en_n;
            if (en_b >= 0) q.b = en_b;
            if (en_k >= 0) q.k = en_k;
            if (en_cap >= 0) q.cap = en_cap;
            if (en_emit == "count") {
                std::cout << count_chemical_trees(q) << '\n';
            } else if (en_emit == "census") {
                std::cout << "n,b,k,n1,n2,n3,n4,wp\n";
                enumerate_chemical_trees(q, [&](const Tree& t) {
                    DegreeCensus c = degree_census(t);
                    int k = t.n < 2 ? 1 : segment_count(t);
                    std::cout << t.n << ',' << branching_count(t) << ',' << k << ',' << c.n1
                              << ',' << c.n2 << ',' << c.n3 << ',' << c.n4 << ','
                              << wp_edge(t) << '\n';
                });
            } else {
                enumerate_chemical_trees(q, [&](const Tree& t) {
                    std::cout << serialize_edge_list(t);
                });
            }
            return 0;
        }

        if (*bound) {
            std::optional<BoundResult> r;
            int param = 0;
            if (bd_which == "max-b" || bd_which == "min-b") {
                if (bd_b < 0) {
                    std::cerr << "--b is required for " << bd_which << '\n';
                    return 1;
                }
                param = bd_b;
                r = (bd_which == "max-b") ? max_wp_given_b(bd_n, bd_b)
                                          : min_wp_given_b(bd_n, bd_b);
            } else {
                if (bd_k < 0) {
                    std::cerr << "--k is required for max-k\n";
                    return 1;
                }
                param = bd_k;
                r = max_wp_given_k(bd_n, bd_k);
            }
            if (!r) {
                std::cerr << "formula inapplicable for the given parameters\n";
                return 1;
            }
            nlohmann::json j;
            j["which"] = bd_which;
            j["n"] = bd_n;
            j[(bd_which == "max-k") ? "k" : "b"] = param;
            j["value"] = r->value;
            j["direction"] = r->upper ? "upper" : "lower";
            j["regime"] = r->regime;
            j["family"] = family_name(r->family);
            std::cout << j.dump() << '\n';
            return 0;
        }

        if (*construct) {
            if ((cf_b < 0) == (cf_k < 0)) {
                std::cerr << "exactly one of --b and --k must be set\n";
                return 1;
            }
            Family f = *family_from_name(cf_family);
            int param = cf_b >= 0 ? cf_b : cf_k;
            bool wants_b = (f == Family::BT1 || f == Family::BT2 || f == Family::Bnb);
            if (wants_b != (cf_b >= 0)) {
                std::cerr << "family " << cf_family << " takes " << (wants_b ? "--b" : "--k")
                          << '\n';
                return 1;
            }
            auto t = construct_family(f, cf_n, param);
            if (!t) {
                std::cerr << "family unrealizable for the given parameters\n";
                return 1;
            }
            write_output(cf_out, serialize_edge_list(*t));
            return 0;
        }

        if (*verify) {
            std::vector<VerificationReport> reps;
            if (vf_which == "rules") {
                reps.push_back(verify_rules(vf_min, vf_max));
            } else if (vf_which == "wp-equiv") {
                reps.push_back(verify_wp_equivalence(vf_min, vf_max));
            } else {
                reps.push_back(verify_bounds(vf_min, vf_max, BoundCampaign::MaxB));
                reps.push_back(verify_bounds(vf_min, vf_max, BoundCampaign::MinB));
                reps.push_back(verify_bounds(vf_min, vf_max, BoundCampaign::MaxK));
                if (vf_minkemp)
                    reps.push_back(verify_bounds(vf_min, vf_max, BoundCampaign::MinKEmpirical));
            }
            long long violations = 0;
            std::string out;
            if (vf_format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reps) {
                    arr.push_back(report_json(r));
                    violations += r.violations;
                }
                out = arr.dump(2);
                out += '\n';
            } else {
                bool merged_header = vf_which == "bounds";
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    std::string csv = report_csv(reps[i]);
                    if (merged_header && i > 0) csv.erase(0, csv.find('\n') + 1);
                    out += csv;
                    violations += reps[i].violations;
                }
            }
            write_output(vf_out, out);
            return violations > 0 ? 2 : 0;
        }

        if (*rules) {
            (void)rules_list;
            std::cout << "rule,preserves,sign,label\n";
            for (const auto& r : rule_catalog()) {
                std::string preserves = r.preserves == PreservedConstraint::BranchingCount
                                            ? "branching-count"
                                            : "segment-count";
                std::string sign;
                switch (r.sign) {
                    case DeltaSign::Negative: sign = "negative"; break;
                    case DeltaSign::NonPositive: sign = "non-positive"; break;
                    case DeltaSign::Positive: sign = "positive"; break;
                    case DeltaSign::NonNegative: sign = "non-negative"; break;
                }
                std::cout << csv_row({r.name, preserves, sign, r.label});
            }
            return 0;
        }
    } catch (const wpolar::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
