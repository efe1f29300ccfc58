#include "qssep/cli.hpp"

#include "qssep/combinatorics.hpp"
#include "qssep/cumulants.hpp"
#include "qssep/loop_polynomials.hpp"
#include "qssep/polynomial.hpp"
#include "qssep/schroeder.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace qssep::cli {

namespace {

struct Options {
    std::string sigma;
    std::optional<int> n;
    std::optional<int> k;
    std::string algo = "trees";
    std::string format = "text";
    bool prime = false;
    std::string x;
    int jobs = 1;
    std::string tree;
    std::optional<std::string> diagonals;
};

std::string json_int_list(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(values[j]);
    }
    return out + "]";
}

std::string json_blocks(const std::vector<Block>& blocks) {
    std::string out = "[";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out += ',';
        out += json_int_list(blocks[b]);
    }
    return out + "]";
}

std::string json_quote(const std::string& s) { return "\"" + s + "\""; }

// Terms array of the JSON serialization, without the enclosing object.
std::string json_terms(const MultilinearPolynomial& p) {
    const std::string whole = serialize(p, Format::json);
    const std::string prefix = "{\"terms\":";
    return whole.substr(prefix.size(), whole.size() - prefix.size() - 1);
}

// Loop polynomial of sigma on any support; the exchange walk runs on {1..n} and is renamed back.
MultilinearPolynomial loop_polynomial(const CyclicPermutation& sigma, int k, Algorithm algo) {
    switch (algo) {
        case Algorithm::trees: return q_via_trees(sigma, k);
        case Algorithm::cumulants: return q_via_cumulants(sigma, k);
        case Algorithm::exchange: {
            const auto support = sigma.support();
            std::map<int, int> to_rank, from_rank;
            for (std::size_t j = 0; j < support.size(); ++j) {
                to_rank[support[j]] = static_cast<int>(j) + 1;
                from_rank[static_cast<int>(j) + 1] = support[j];
            }
            const auto family = generate_all(static_cast<int>(support.size()));
            return rename_variables(family.at(sigma.relabeled(to_rank)), from_rank);
        }
    }
    throw std::invalid_argument("unknown algorithm");
}

int require_n(const Options& o) {
    if (!o.n) throw std::invalid_argument("-n is required");
    return *o.n;
}

CyclicPermutation require_sigma(const Options& o) {
    if (o.sigma.empty()) throw std::invalid_argument("--sigma is required");
    return parse_cycle(o.sigma);
}

int cmd_compute(const Options& o, std::ostream& out) {
    const auto sigma = require_sigma(o);
    const auto format = parse_format(o.format);
    const auto q = loop_polynomial(sigma, o.k.value_or(sigma.word().front()), parse_algorithm(o.algo));
    if (format == Format::json) {
        out << "{\"n\":" << sigma.size() << ",\"sigma\":" << json_int_list(sigma.word())
            << ",\"terms\":" << json_terms(q) << "}\n";
    } else {
        out << serialize(q, format) << "\n";
    }
    return kExitOk;
}

int cmd_classes(const Options& o, std::ostream& out) {
    const int n = require_n(o);
    const auto format = parse_format(o.format);
    const auto classes = equivalence_classes(compute_family(n, parse_algorithm(o.algo), o.jobs));
    if (format == Format::json) {
        out << "{\"n\":" << n << ",\"classes\":[";
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (c) out << ',';
            out << "{\"terms\":" << json_terms(classes[c].polynomial) << ",\"cycles\":[";
            for (std::size_t j = 0; j < classes[c].cycles.size(); ++j) {
                if (j) out << ',';
                out << json_int_list(classes[c].cycles[j].word());
            }
            out << "]}";
        }
        out << "]}\n";
        return kExitOk;
    }
    for (const auto& cls : classes) {
        out << serialize(cls.polynomial, format) << " |";
        for (const auto& sigma : cls.cycles) out << ' ' << sigma.to_string();
        out << "\n";
    }
    out << "CYCLES=" << all_cycles(n).size() << " CLASSES=" << classes.size() << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const int n = require_n(o);
    const auto report = verify_family(n, compute_family(n, parse_algorithm(o.algo), o.jobs), o.jobs);
    out << report.to_text();
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_trees(const Options& o, std::ostream& out) {
    const int n = require_n(o);
    const auto format = parse_format(o.format);
    const auto trees = o.prime ? enumerate_prime_trees(n) : enumerate_trees(n);
    if (format == Format::json) {
        out << "{\"leaves\":" << n << ",\"prime\":" << (o.prime ? "true" : "false") << ",\"trees\":[";
        for (std::size_t j = 0; j < trees.size(); ++j) {
            if (j) out << ',';
            out << json_quote(trees[j].to_string());
        }
        out << "]}\n";
        return kExitOk;
    }
    for (const auto& t : trees) {
        out << t.to_string();
        if (!t.is_leaf()) out << "\t" << tree_partition(t).to_string();
        out << "\n";
    }
    out << "TREES=" << trees.size() << "\n";
    return kExitOk;
}

int cmd_nc(const Options& o, std::ostream& out) {
    const int n = require_n(o);
    const auto format = parse_format(o.format);
    const auto partitions = enumerate_nc(n);
    if (format == Format::json) {
        out << "{\"n\":" << n << ",\"partitions\":[";
        for (std::size_t j = 0; j < partitions.size(); ++j) {
            if (j) out << ',';
            out << "{\"blocks\":" << json_blocks(partitions[j].blocks())
                << ",\"kreweras\":" << json_blocks(kreweras(partitions[j]).blocks())
                << ",\"mobius\":" << mobius_nc(partitions[j]).str() << "}";
        }
        out << "]}\n";
        return kExitOk;
    }
    for (const auto& pi : partitions) {
        out << pi.to_string() << "\t" << kreweras(pi).to_string() << "\t" << mobius_nc(pi).str() << "\n";
    }
    out << "PARTITIONS=" << partitions.size() << "\n";
    return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const auto sigma = require_sigma(o);
    const auto format = parse_format(o.format);
    const auto support = sigma.support();
    std::vector<Rational> values;
    std::stringstream in(o.x);
    for (std::string item; std::getline(in, item, ',');) values.push_back(parse_rational(item));
    if (values.size() != support.size()) {
        throw std::invalid_argument("--x needs " + std::to_string(support.size()) + " values, got " +
                                    std::to_string(values.size()));
    }
    std::map<int, Rational> point;
    for (std::size_t j = 0; j < support.size(); ++j) point[support[j]] = values[j];

    const int k = o.k.value_or(sigma.word().front());
    const Rational value = evaluate(q_via_trees(sigma, k), point);

    // The cumulant identity holds on ordered points inside [0, 1].
    const bool ordered = std::is_sorted(values.begin(), values.end()) && values.front() >= 0 && values.back() <= 1;
    std::optional<Rational> cumulant;
    if (ordered) {
        auto orbit = sigma.orbit_from(k);
        std::rotate(orbit.begin(), orbit.begin() + 1, orbit.end());  // s(k), ..., k
        std::vector<Rational> args;
        for (int label : orbit) args.push_back(point.at(label));
        cumulant = numeric_free_cumulant_min(args);
    }
    const bool match = !cumulant || *cumulant == value;
    if (format == Format::json) {
        out << "{\"value\":" << json_quote(to_string(value)) << ",\"cumulant\":"
            << (cumulant ? json_quote(to_string(*cumulant)) : std::string("null"))
            << ",\"match\":" << (cumulant ? (match ? "true" : "false") : "null") << "}\n";
    } else {
        out << "value=" << to_string(value) << "\n";
        if (cumulant) {
            out << "cumulant=" << to_string(*cumulant) << "\n" << "match=" << (match ? "yes" : "no") << "\n";
        } else {
            out << "cumulant=skipped (point is not ordered in [0,1])\n";
        }
    }
    return match ? kExitOk : kExitVerificationFailed;
}

Dissection parse_dissection(const std::string& text, int polygon_size) {
    static const std::regex item(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*,?)");
    std::set<Dissection::Diagonal> diagonals;
    auto begin = std::sregex_iterator(text.begin(), text.end(), item);
    std::size_t consumed = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        if (static_cast<std::size_t>(it->position()) != consumed) break;
        consumed += it->length();
        diagonals.emplace(std::stoi((*it)[1]), std::stoi((*it)[2]));
    }
    if (consumed != text.size()) {
        throw std::invalid_argument("malformed diagonal list '" + text + "'");
    }
    return Dissection(polygon_size, std::move(diagonals));
}

int cmd_dissect(const Options& o, std::ostream& out) {
    if (!o.tree.empty()) {
        const auto t = SchroederTree::parse(o.tree);
        const auto d = tree_to_dissection(t);
        out << "polygon=" << d.polygon_size() << " diagonals=" << d.to_string()
            << " prime=" << (is_prime(t) ? "yes" : "no") << "\n";
        return kExitOk;
    }
    const int n = require_n(o);
    if (o.diagonals) {
        out << dissection_to_tree(parse_dissection(*o.diagonals, n + 1)).to_string() << "\n";
        return kExitOk;
    }
    const auto trees = o.prime ? enumerate_prime_trees(n) : enumerate_trees(n);
    for (const auto& t : trees) {
        const auto d = tree_to_dissection(t);
        out << t.to_string() << "\t" << (d.diagonals().empty() ? "-" : d.to_string()) << "\t"
            << (is_prime(t) ? "prime" : "-") << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Loop polynomials of cyclic permutations: compute, verify, enumerate."};
    app.name("qssep");
    app.require_subcommand(1, 1);
    Options o;

    auto add_n = [&](CLI::App* sub, const std::string& what) { return sub->add_option("-n", o.n, what); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text | latex | json")->check(CLI::IsMember({"text", "latex", "json"}));
    };
    auto add_algo = [&](CLI::App* sub) {
        sub->add_option("--algo", o.algo, "trees | cumulants | exchange")
            ->check(CLI::IsMember({"trees", "cumulants", "exchange"}));
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    };

    auto* compute = app.add_subcommand("compute", "loop polynomial of one cycle");
    compute->add_option("--sigma", o.sigma, "cycle word, e.g. 1,3,2,4")->required();
    compute->add_option("--k", o.k, "starting index (default: least index)");
    add_algo(compute);
    add_format(compute);

    auto* classes = app.add_subcommand("classes", "group all cycles of length n by polynomial");
    add_n(classes, "cycle length")->required();
    add_algo(classes);
    add_format(classes);
    add_jobs(classes);

    auto* verify = app.add_subcommand("verify", "check the loop-polynomial axioms for all cycles of length n");
    add_n(verify, "cycle length")->required();
    add_algo(verify);
    add_jobs(verify);

    auto* trees = app.add_subcommand("trees", "enumerate Schroeder trees with n leaves");
    add_n(trees, "number of leaves")->required();
    trees->add_flag("--prime", o.prime, "prime trees only");
    add_format(trees);

    auto* nc = app.add_subcommand("nc", "non-crossing partitions with Kreweras complement and Mobius value");
    add_n(nc, "ground set size")->required();
    add_format(nc);

    auto* eval = app.add_subcommand("eval", "evaluate a loop polynomial and compare with the free cumulant");
    eval->add_option("--sigma", o.sigma, "cycle word")->required();
    eval->add_option("--x", o.x, "values p/q, one per support index in increasing order")->required();
    eval->add_option("--k", o.k, "starting index (default: least index)");
    add_format(eval);

    auto* dissect = app.add_subcommand("dissect", "tree <-> polygon dissection");
    add_n(dissect, "number of leaves (polygon has n+1 vertices)");
    dissect->add_option("--tree", o.tree, "tree such as ((* *) *)");
    dissect->add_option("--diagonals", o.diagonals, "diagonals such as (1,6),(3,6)");
    dissect->add_flag("--prime", o.prime, "prime trees only");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(o, out);
        if (*classes) return cmd_classes(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*trees) return cmd_trees(o, out);
        if (*nc) return cmd_nc(o, out);
        if (*eval) return cmd_eval(o, out);
        if (*dissect) return cmd_dissect(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // an internal consistency check of the exchange walk failed
        err << "verification error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace qssep::cli
