#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopffill/classify.hpp"
#include "hopffill/config_search.hpp"
#include "hopffill/continued_fraction.hpp"
#include "hopffill/errors.hpp"
#include "hopffill/filling.hpp"
#include "hopffill/legendrian.hpp"
#include "hopffill/numeric.hpp"
#include "hopffill/openbook.hpp"
#include "hopffill/serialize.hpp"

namespace hopffill::cli {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline long long parse_long(const std::string& s) { return to_int64(parse_int(s)); }

inline std::vector<long long> parse_csv(const std::string& s) {
    std::vector<long long> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_long(part));
    return out;
}

// "1:0,0:2" -> {(1,0), (0,2)}
inline std::vector<std::pair<long long, long long>> parse_stabs(const std::string& s) {
    std::vector<std::pair<long long, long long>> out;
    for (const auto& part : split(s, ',')) {
        const auto halves = split(part, ':');
        if (halves.size() != 2)
            throw InvalidInput("stabilizations must be splus:sminus pairs, got '" + part + "'");
        out.emplace_back(parse_long(halves[0]), parse_long(halves[1]));
    }
    return out;
}

// Rows separated by ';', entries by ',': "-3,1;1,-4".
inline IntMatrix parse_matrix(const std::string& s) {
    std::vector<std::vector<Int>> rows;
    for (const auto& row : split(s, ';')) {
        std::vector<Int> entries;
        for (const auto& e : split(row, ',')) entries.push_back(parse_int(e));
        rows.push_back(std::move(entries));
    }
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<Int> flat;
    for (auto& row : rows) {
        if (row.size() != cols) throw InvalidInput("matrix rows have unequal lengths");
        for (auto& v : row) flat.push_back(std::move(v));
    }
    return IntMatrix(rows.size(), cols, std::move(flat));
}

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "--inner n1;n2;s,p1" -> three label sets.
inline std::vector<Curve> parse_hole_sets(const PlanarPage& page, const std::string& s,
                                          std::size_t expected) {
    std::vector<Curve> sets;
    for (const auto& part : split(s, ';')) {
        std::vector<std::string> labels;
        for (const auto& l : split(part, ',')) labels.push_back(l);
        sets.push_back(Curve::of_labels(page, labels));
    }
    if (sets.size() != expected)
        throw InvalidInput("expected " + std::to_string(expected) + " hole sets");
    return sets;
}

inline ChainSurgery parse_chain(const std::string& chain, const std::string& stabs) {
    return make_chain(parse_csv(chain), parse_stabs(stabs));
}

} // namespace detail

// Runs one CLI invocation. Returns 0 on success, 1 on a domain error (the
// error name goes to the diagnostic stream), 2 on a usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"invariants of Stein fillings of lens spaces from contact (-1)-surgery"
                 " on Legendrian Hopf links"};
    app.require_subcommand(1);

    std::string format = "human";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "structured"}))
            ->capture_default_str();
    };
    const auto structured = [&] { return format == "structured"; };

    // cf <p> <q>
    std::string arg_p, arg_q;
    auto* cmd_cf = app.add_subcommand("cf", "negative continued fraction expansion of p/q");
    cmd_cf->add_option("p", arg_p)->required();
    cmd_cf->add_option("q", arg_q)->required();
    add_format(cmd_cf);

    // cfval <a1,...,an>
    std::string arg_terms;
    auto* cmd_cfval = app.add_subcommand("cfval", "evaluate a continued fraction to p/q");
    cmd_cfval->add_option("terms", arg_terms, "comma-separated terms")->required();
    add_format(cmd_cfval);

    // structures <a1,a2>
    std::string arg_structures;
    auto* cmd_structures =
        app.add_subcommand("structures", "tight structures from stabilization choices");
    cmd_structures->add_option("terms", arg_structures, "comma-separated framing terms")
        ->required();
    add_format(cmd_structures);

    // d3 --chain a1,a2 --stabs s:s,s:s | --matrix rows --rot vec --chi n --sigma n
    std::string arg_chain, arg_stabs, arg_matrix, arg_rot;
    long long arg_chi = 0, arg_sigma = 0;
    auto* cmd_d3 = app.add_subcommand("d3", "d3 invariant of the surgered contact structure");
    auto* opt_chain = cmd_d3->add_option("--chain", arg_chain, "framing terms a1,a2,...");
    auto* opt_stabs = cmd_d3->add_option("--stabs", arg_stabs, "per-component splus:sminus");
    auto* opt_matrix = cmd_d3->add_option("--matrix", arg_matrix, "rows like '-3,1;1,-4'");
    auto* opt_rot = cmd_d3->add_option("--rot", arg_rot, "rotation vector");
    auto* opt_chi = cmd_d3->add_option("--chi", arg_chi, "Euler characteristic");
    auto* opt_sigma = cmd_d3->add_option("--sigma", arg_sigma, "signature");
    opt_chain->needs(opt_stabs);
    opt_matrix->needs(opt_rot)->needs(opt_chi)->needs(opt_sigma);
    opt_matrix->excludes(opt_chain);
    add_format(cmd_d3);

    // monodromy <a1> <a2>
    long long arg_a1 = 0, arg_a2 = 0;
    auto* cmd_monodromy =
        app.add_subcommand("monodromy", "canonical positive factorization for the chain (a1,a2)");
    cmd_monodromy->add_option("a1", arg_a1)->required();
    cmd_monodromy->add_option("a2", arg_a2)->required();
    add_format(cmd_monodromy);

    // profile <file>
    std::string arg_file;
    auto* cmd_profile =
        app.add_subcommand("profile", "single and joint multiplicities of a factorization");
    cmd_profile->add_option("file", arg_file, "factorization document ('-' for stdin)")
        ->required();
    add_format(cmd_profile);

    // lantern <file> --inner S1;S2;S3
    std::string arg_inner;
    auto* cmd_lantern = app.add_subcommand("lantern", "apply a lantern substitution");
    cmd_lantern->add_option("file", arg_file, "factorization document ('-' for stdin)")
        ->required();
    cmd_lantern->add_option("--inner", arg_inner, "three disjoint hole sets S1;S2;S3")
        ->required();
    add_format(cmd_lantern);

    // filling <file>
    auto* cmd_filling =
        app.add_subcommand("filling", "invariants of the Stein filling of a factorization");
    cmd_filling->add_option("file", arg_file, "factorization document ('-' for stdin)")
        ->required();
    add_format(cmd_filling);

    // configs <a1> <a2> [--raw]
    bool arg_raw = false;
    auto* cmd_configs = app.add_subcommand(
        "configs", "homology configurations realizing the canonical profile of (a1,a2)");
    cmd_configs->add_option("a1", arg_a1)->required();
    cmd_configs->add_option("a2", arg_a2)->required();
    cmd_configs->add_flag("--raw", arg_raw, "list raw configurations instead of orbits");
    add_format(cmd_configs);

    // classify --chain a1,a2 --stabs ...
    auto* cmd_classify =
        app.add_subcommand("classify", "Stein filling classification for a two-component chain");
    cmd_classify->add_option("--chain", arg_chain, "framing terms a1,a2")->required();
    cmd_classify->add_option("--stabs", arg_stabs, "per-component splus:sminus")->required();
    add_format(cmd_classify);

    std::vector<const char*> argv;
    argv.push_back("hopffill");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_cf->parsed()) {
            const ContinuedFraction cf = cf_expand(parse_int(arg_p), parse_int(arg_q));
            if (structured()) {
                Json doc;
                doc["p"] = detail::parse_long(arg_p);
                doc["q"] = detail::parse_long(arg_q);
                doc["terms"] = cf.terms();
                out << dump_document(doc);
            } else {
                out << cf.str() << "\n";
            }
        } else if (cmd_cfval->parsed()) {
            const ContinuedFraction cf(detail::parse_csv(arg_terms));
            const auto [p, q] = cf_value(cf);
            if (structured()) {
                Json doc;
                doc["terms"] = cf.terms();
                doc["p"] = to_int64(p);
                doc["q"] = to_int64(q);
                out << dump_document(doc);
            } else {
                out << "(" << p << "," << q << ")\n";
            }
        } else if (cmd_structures->parsed()) {
            const ContinuedFraction cf(detail::parse_csv(arg_structures));
            const StructureEnumeration s = enumerate_structures(cf);
            if (structured())
                out << dump_document(structures_to_json(cf, s));
            else
                out << structures_to_text(cf, s);
        } else if (cmd_d3->parsed()) {
            Rational value;
            if (*opt_matrix) {
                IntMatrix q = detail::parse_matrix(arg_matrix);
                std::vector<Int> rot;
                for (long long r : detail::parse_csv(arg_rot)) rot.emplace_back(r);
                value = d3(D3Input{std::move(q), std::move(rot), arg_chi, arg_sigma});
            } else if (*opt_chain) {
                value = d3_of_chain(detail::parse_chain(arg_chain, arg_stabs));
            } else {
                err << "usage error: d3 needs either --chain/--stabs or --matrix/--rot/--chi/--sigma\n";
                return 2;
            }
            if (structured()) {
                Json doc;
                doc["d3"] = to_string(value);
                out << dump_document(doc);
            } else {
                out << to_string(value) << "\n";
            }
        } else if (cmd_monodromy->parsed()) {
            out << dump_document(factorization_to_json(canonical_hopf_factorization(arg_a1, arg_a2)));
        } else if (cmd_profile->parsed()) {
            const Factorization f = parse_factorization(detail::read_input(arg_file));
            const MultiplicityProfile profile = multiplicity_profile(f);
            if (structured())
                out << dump_document(profile_to_json(profile));
            else
                out << profile_to_text(profile);
        } else if (cmd_lantern->parsed()) {
            const Factorization f = parse_factorization(detail::read_input(arg_file));
            const auto inner = detail::parse_hole_sets(f.page(), arg_inner, 3);
            const Factorization g = lantern_substitute(f, inner[0], inner[1], inner[2]);
            out << dump_document(factorization_to_json(g));
        } else if (cmd_filling->parsed()) {
            const Factorization f = parse_factorization(detail::read_input(arg_file));
            const FillingInvariants inv = filling_invariants(f);
            if (structured())
                out << dump_document(invariants_to_json(inv));
            else
                out << invariants_to_text(inv);
        } else if (cmd_configs->parsed()) {
            const Factorization canonical = canonical_hopf_factorization(arg_a1, arg_a2);
            const SymmetryMode mode =
                arg_raw ? SymmetryMode::Raw : SymmetryMode::UpToProfileSymmetry;
            const ConfigQuery query(canonical.page(), multiplicity_profile(canonical), mode);
            const ConfigResult result = enumerate_configs(query);
            if (structured())
                out << dump_document(configs_to_json(canonical.page(), result, mode));
            else
                out << configs_to_text(result, mode);
        } else if (cmd_classify->parsed()) {
            const ClassificationReport report =
                classify(detail::parse_chain(arg_chain, arg_stabs));
            if (structured())
                out << dump_document(report_to_json(report));
            else
                out << report_to_text(report);
        }
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace hopffill::cli
