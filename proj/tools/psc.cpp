#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "psc/dot.hpp"
#include "psc/lemma_lab.hpp"
#include "psc/pipeline.hpp"

namespace {

using nlohmann::ordered_json;

psc::ApprovalProfile read_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw psc::parse_error("cannot open file: " + path, 0, 0);
    return psc::parse_approval_matrix(in);
}

// First meaningful line "n", then one triple per line "i j k".
psc::NbInstance read_nb_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw psc::parse_error("cannot open file: " + path, 0, 0);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::array<int, 3>> triples;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<long> vals;
        long v;
        while (tokens >> v) vals.push_back(v);
        if (!tokens.eof())
            throw psc::parse_error("non-integer token", line_no, 1);
        if (vals.empty()) continue;
        if (n < 0) {
            if (vals.size() != 1 || vals[0] < 1)
                throw psc::parse_error("header: expected the ground set size", line_no, 1);
            n = static_cast<int>(vals[0]);
            continue;
        }
        if (vals.size() != 3)
            throw psc::parse_error("expected a triple \"i j k\"", line_no, 1);
        triples.push_back({static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                           static_cast<int>(vals[2])});
    }
    if (n < 0) throw psc::parse_error("empty input", line_no == 0 ? 1 : line_no, 1);
    return psc::make_nb_instance(n, std::move(triples));
}

psc::Axis parse_axis_list(const std::string& text, int n) {
    psc::Axis axis;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            axis.order.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("axis: expected a comma-separated list of voter ids");
        }
    }
    psc::check_axis(axis, n);
    return axis;
}

std::string axis_to_string(const psc::Axis& axis) {
    std::string out;
    for (std::size_t i = 0; i < axis.order.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(axis.order[i]);
    }
    return out;
}

std::string pair_to_string(std::pair<int, int> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

void print_linear_profile(const psc::LinearProfile& lin) {
    for (const auto& ballot : lin.ranking) {
        for (std::size_t i = 0; i < ballot.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << ballot[i];
        }
        std::cout << '\n';
    }
}

void print_reject(const psc::RecognitionReject& reject) {
    if (const auto* clash = std::get_if<psc::ComplementClash>(&reject.reason)) {
        std::cout << "REJECT complement-clash\n";
        std::cout << "witness: " << pair_to_string(clash->path.front()) << " ~ "
                  << pair_to_string(clash->path.back()) << "\n";
        std::cout << "path:";
        for (auto p : clash->path) std::cout << ' ' << pair_to_string(p);
        std::cout << "\n";
    } else {
        const auto& mono = std::get<psc::MonochromaticCycle>(reject.reason);
        std::cout << "REJECT monochromatic-cycle\n";
        std::cout << "color: " << mono.color + 1 << "\n";
        std::cout << "cycle:";
        for (std::size_t i = 0; i <= mono.cycle.size(); ++i) {
            if (i) std::cout << " ->";
            std::cout << ' ' << mono.cycle[i % mono.cycle.size()];
        }
        std::cout << "\n";
    }
}

int brute_force_cap(int fallback) {
    if (const char* env = std::getenv("PSC_BRUTE_CAP")) {
        int cap = std::atoi(env);
        if (cap < 1) throw std::invalid_argument("PSC_BRUTE_CAP: expected a positive integer");
        return cap;
    }
    return fallback;
}

int run_recognize(const std::string& file, bool emit_axis, bool emit_profile, bool as_json) {
    auto outcome = psc::recognize_psc(read_profile(file));
    if (as_json) {
        ordered_json doc;
        if (const auto* acc = std::get_if<psc::RecognitionAccept>(&outcome)) {
            doc["outcome"] = "accept";
            doc["axis"] = acc->axis.order;
            doc["linear_profile"] = acc->linear.ranking;
        } else {
            const auto& reject = std::get<psc::RecognitionReject>(outcome);
            doc["outcome"] = "reject";
            if (const auto* clash = std::get_if<psc::ComplementClash>(&reject.reason)) {
                doc["reason"]["kind"] = "complement-clash";
                auto& path = doc["reason"]["path"];
                path = ordered_json::array();
                for (auto p : clash->path) path.push_back({p.first, p.second});
            } else {
                const auto& mono = std::get<psc::MonochromaticCycle>(reject.reason);
                doc["reason"]["kind"] = "monochromatic-cycle";
                doc["reason"]["color"] = mono.color + 1;
                doc["reason"]["cycle"] = mono.cycle;
            }
        }
        std::cout << doc.dump(2) << "\n";
        return std::holds_alternative<psc::RecognitionAccept>(outcome) ? 0 : 1;
    }
    if (const auto* acc = std::get_if<psc::RecognitionAccept>(&outcome)) {
        std::cout << "ACCEPT\n";
        if (emit_axis) std::cout << "axis: " << axis_to_string(acc->axis) << "\n";
        if (emit_profile) print_linear_profile(acc->linear);
        return 0;
    }
    print_reject(std::get<psc::RecognitionReject>(outcome));
    return 1;
}

int run_extend(const std::string& file, const std::string& axis_text) {
    auto profile = psc::to_weak_order(read_profile(file));
    auto axis = parse_axis_list(axis_text, profile.n);
    if (auto w = psc::find_ssc_violation(profile, axis)) {
        std::cout << "NOT-SSC\n";
        std::cout << "witness: i=" << w->i << " j=" << w->j << " k=" << w->k << " a=" << w->a
                  << " b=" << w->b << "\n";
        return 1;
    }
    print_linear_profile(psc::extend_to_single_crossing(profile, axis));
    return 0;
}

int run_check_ssc(const std::string& file, const std::string& axis_text) {
    auto profile = psc::to_weak_order(read_profile(file));
    auto axis = parse_axis_list(axis_text, profile.n);
    if (auto w = psc::find_ssc_violation(profile, axis)) {
        std::cout << "NOT-SSC\n";
        std::cout << "witness: i=" << w->i << " j=" << w->j << " k=" << w->k << " a=" << w->a
                  << " b=" << w->b << "\n";
        return 1;
    }
    std::cout << "SSC\n";
    return 0;
}

int run_solve_nb(const std::string& file, bool brute) {
    auto inst = read_nb_instance(file);
    std::optional<psc::Axis> axis;
    if (brute)
        axis = psc::brute_force_solve(inst, brute_force_cap(9));
    else
        axis = psc::fpt_solve_instance(inst);
    if (!axis) {
        std::cout << "UNSATISFIABLE\n";
        return 1;
    }
    if (!psc::order_satisfies(inst, *axis))
        throw psc::internal_error("solver returned an unsatisfying order");
    std::cout << "SATISFIABLE\n";
    std::cout << "axis: " << axis_to_string(*axis) << "\n";
    return 0;
}

int run_oracle_compare(const std::string& file) {
    auto profile = read_profile(file);
    bool recognized = psc::accepted(psc::recognize_psc(profile));
    bool brute = psc::brute_force_psc(profile, brute_force_cap(8)).has_value();
    if (recognized == brute) {
        std::cout << "AGREE " << (recognized ? "accept" : "reject") << "\n";
        return 0;
    }
    std::cout << "DISAGREE recognize=" << (recognized ? "accept" : "reject")
              << " brute-force=" << (brute ? "accept" : "reject") << "\n";
    return 3;
}

int run_lemma_check(const std::string& id_text) {
    auto id = psc::parse_lemma_id(id_text);
    if (!id) throw std::invalid_argument("unknown template id: " + id_text);
    auto report = psc::enumerate_lemma_cases(*id);
    std::cout << "consistent=" << report.consistent_count()
              << " violations=" << report.violation_count << "\n";
    return report.violation_count == 0 ? 0 : 3;
}

int run_export_dot(const std::string& file, const std::string& graph_kind,
                   const std::string& orientation_bits, bool nb_input) {
    psc::NbInstance inst =
        nb_input ? read_nb_instance(file) : psc::extract_nb_constraints(read_profile(file));
    auto fg = psc::build_formula_graph(inst);
    if (graph_kind == "formula") {
        if (!orientation_bits.empty())
            throw std::invalid_argument("--orientation applies to the colorful graph only");
        std::cout << psc::formula_graph_dot(fg);
        return 0;
    }
    auto partitioned = psc::complementary_pairs_partition(fg);
    if (const auto* clash = std::get_if<psc::ComplementClash>(&partitioned)) {
        print_reject(psc::RecognitionReject{*clash});
        return 1;
    }
    auto cg = psc::build_colorful_graph(std::get<psc::ComplementaryPartition>(partitioned));
    std::optional<psc::Orientation> o;
    if (!orientation_bits.empty()) {
        if (static_cast<int>(orientation_bits.size()) != cg.color_count())
            throw std::invalid_argument("--orientation: expected one bit per color (" +
                                        std::to_string(cg.color_count()) + ")");
        psc::Orientation parsed;
        for (char bit : orientation_bits) {
            if (bit != '0' && bit != '1')
                throw std::invalid_argument("--orientation: bits must be 0 or 1");
            parsed.flip.push_back(bit == '1');
        }
        o = parsed;
    }
    std::cout << psc::colorful_graph_dot(cg, o);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"possibly single-crossing recognition for approval ballots"};
    app.require_subcommand(1);

    int rc = 0;

    auto* recognize = app.add_subcommand(
        "recognize", "decide whether the ballots admit a single-crossing extension");
    std::string rec_file;
    bool emit_axis = false, emit_profile = false, as_json = false;
    recognize->add_option("file", rec_file, "approval matrix file")->required();
    recognize->add_flag("--emit-axis", emit_axis, "print the witnessing voter axis");
    recognize->add_flag("--emit-profile", emit_profile, "print the recovered linear profile");
    recognize->add_flag("--json", as_json, "machine-readable output");
    recognize->callback([&] { rc = run_recognize(rec_file, emit_axis, emit_profile, as_json); });

    auto* extend = app.add_subcommand("extend", "extend ballots along a known axis");
    std::string ext_file, ext_axis;
    extend->add_option("file", ext_file, "approval matrix file")->required();
    extend->add_option("--axis", ext_axis, "comma-separated voter order")->required();
    extend->callback([&] { rc = run_extend(ext_file, ext_axis); });

    auto* check = app.add_subcommand("check-ssc", "check an axis against the ballots");
    std::string chk_file, chk_axis;
    check->add_option("file", chk_file, "approval matrix file")->required();
    check->add_option("--axis", chk_axis, "comma-separated voter order")->required();
    check->callback([&] { rc = run_check_ssc(chk_file, chk_axis); });

    auto* solve = app.add_subcommand("solve-nb", "solve a non-betweenness instance");
    std::string nb_file;
    bool use_brute = false, use_fpt = false;
    solve->add_option("file", nb_file, "instance file: first line n, then triples i j k")
        ->required();
    auto* brute_flag = solve->add_flag("--brute", use_brute, "exhaust all n! orders");
    solve->add_flag("--fpt", use_fpt, "orientation search (default)")->excludes(brute_flag);
    solve->callback([&] { rc = run_solve_nb(nb_file, use_brute); });

    auto* generate = app.add_subcommand("generate", "emit fixture profiles");
    generate->require_subcommand(1);
    auto* gen_cycle = generate->add_subcommand("cycle", "cycle profile on n voters/candidates");
    int cycle_n = 0;
    gen_cycle->add_option("n", cycle_n, "size (>= 2)")->required();
    gen_cycle->callback(
        [&] { std::cout << psc::format_approval_matrix(psc::generate_cycle_profile(cycle_n)); });
    auto* gen_pos = generate->add_subcommand(
        "sc-positive", "profile accepted by construction (thresholded single-crossing ballots)");
    int pos_n = 0, pos_m = 0;
    std::uint64_t pos_seed = 0;
    gen_pos->add_option("n", pos_n, "voters")->required();
    gen_pos->add_option("m", pos_m, "candidates")->required();
    gen_pos->add_option("--seed", pos_seed, "generator seed")->required();
    gen_pos->callback([&] {
        std::cout << psc::format_approval_matrix(psc::generate_sc_positive(pos_n, pos_m, pos_seed));
    });

    auto* oracle = app.add_subcommand("oracle-compare",
                                      "recognition vs the brute-force axis search");
    std::string oracle_file;
    oracle->add_option("file", oracle_file, "approval matrix file")->required();
    oracle->callback([&] { rc = run_oracle_compare(oracle_file); });

    auto* lemma = app.add_subcommand("lemma-check", "run a case-exhaustion template");
    std::string lemma_id;
    lemma->add_option("id", lemma_id, "L13, L14, L15 or L16")->required();
    lemma->callback([&] { rc = run_lemma_check(lemma_id); });

    auto* dot = app.add_subcommand("export-dot", "emit a graph in DOT format");
    std::string dot_file, dot_kind, dot_orient;
    bool dot_nb = false;
    dot->add_option("file", dot_file, "approval matrix file (or instance file with --nb)")
        ->required();
    dot->add_option("--graph", dot_kind, "formula or colorful")
        ->required()
        ->check(CLI::IsMember({"formula", "colorful"}));
    dot->add_option("--orientation", dot_orient, "flip bits, one per color");
    dot->add_flag("--nb", dot_nb, "treat the file as a non-betweenness instance");
    dot->callback([&] { rc = run_export_dot(dot_file, dot_kind, dot_orient, dot_nb); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const psc::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const psc::parse_error& e) {
        if (e.line > 0)
            std::cerr << "parse error at line " << e.line << ": " << e.what() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
