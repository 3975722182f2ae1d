#include "graphfair/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphfair/fixtures.hpp"
#include "graphfair/generate.hpp"
#include "graphfair/io.hpp"
#include "graphfair/oracle.hpp"
#include "graphfair/solve.hpp"

namespace graphfair::cli {

namespace {

using nlohmann::json;

Bundle parse_csv_bundle(const std::string& text) {
    Bundle out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0) {
                throw std::invalid_argument(item);
            }
            out.push_back(static_cast<Vertex>(v));
        } catch (const std::logic_error&) {
            throw InvalidInput("bad vertex '" + item + "' in bundle");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

json info_json(const SolveOutcome& s) {
    json j{{"algo", s.algo}};
    for (const auto& [k, v] : s.info) {
        j[k] = v;
    }
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Connected fair division on item graphs", "graphfair"};
    app.require_subcommand(1);

    bool canonical = false;
    app.add_flag("--canonical", canonical, "Compact single-line JSON output");

    auto* solve_cmd = app.add_subcommand("solve", "Compute an allocation");
    std::string algo = "auto", in_path, out_path;
    solve_cmd->add_option("--algo", algo)->check(CLI::IsMember(algorithm_names()));
    solve_cmd->add_option("--in", in_path)->required();
    solve_cmd->add_option("--out", out_path);
    solve_cmd->add_flag("--canonical", canonical);

    auto* verify_cmd = app.add_subcommand("verify", "Check a fairness criterion");
    std::string criterion = "pmms", alpha = "1/1", alloc_path;
    verify_cmd->add_option("--criterion", criterion)->check(CLI::IsMember({"pmms", "mms", "ef1", "efx"}));
    verify_cmd->add_option("--alpha", alpha);
    verify_cmd->add_option("--in", in_path)->required();
    verify_cmd->add_option("--alloc", alloc_path)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive share values");
    std::string value_kind = "pmms", bundle_csv;
    std::size_t agent = 0, k = 2;
    oracle_cmd->add_option("--value", value_kind)->check(CLI::IsMember({"pmms", "mms", "mu"}));
    oracle_cmd->add_option("--agent", agent);
    oracle_cmd->add_option("--bundle", bundle_csv);
    oracle_cmd->add_option("--k", k);
    oracle_cmd->add_option("--in", in_path)->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    GenOptions gen;
    std::string shape = "path";
    gen_cmd->add_option("--shape", shape)->check(CLI::IsMember({"path", "tree", "cycle", "unicyclic", "star", "gnp"}));
    gen_cmd->add_option("--vertices", gen.vertices);
    gen_cmd->add_option("--agents", gen.agents);
    gen_cmd->add_option("--umax", gen.umax);
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_flag("--identical", gen.identical);
    gen_cmd->add_option("--out", out_path);
    gen_cmd->add_flag("--canonical", canonical);

    auto* bench_cmd = app.add_subcommand("bench", "Realized PMMS ratios over a directory of instances");
    std::string dir;
    bench_cmd->add_option("--dir", dir)->required();
    bench_cmd->add_option("--out", out_path);
    bench_cmd->add_option("--algo", algo)->check(CLI::IsMember(algorithm_names()));

    auto* fixture_cmd = app.add_subcommand("fixture", "Export or check a named instance");
    std::string name;
    bool list = false, check = false;
    fixture_cmd->add_option("--name", name);
    fixture_cmd->add_option("--out", out_path);
    fixture_cmd->add_flag("--list", list);
    fixture_cmd->add_flag("--check", check);
    fixture_cmd->add_flag("--canonical", canonical);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    }

    try {
        if (*solve_cmd) {
            const auto inst = read_instance_file(in_path);
            const auto result = solve(inst, algo);
            emit(out_path, write_allocation(result.allocation, canonical), out);
            if (!out_path.empty() && out_path != "-") {
                out << info_json(result).dump() << "\n";
            }
            return kOk;
        }
        if (*verify_cmd) {
            const auto inst = read_instance_file(in_path);
            const auto alloc = read_allocation_file(alloc_path);
            const auto ratio = FairnessRatio::parse(alpha);
            if (criterion == "efx" && !(ratio == FairnessRatio(1, 1))) {
                throw InvalidInput("EFX is checked with ratio 1 only");
            }
            const auto report = check_fairness(inst, alloc, FairnessCriterion::parse(criterion, ratio));
            json j{{"criterion", criterion}, {"alpha", ratio.to_string()}, {"pass", report.pass}};
            if (report.witness) {
                const auto& w = *report.witness;
                j["witness"] = {{"agent", w.agent}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"deficit", w.deficit}};
                if (w.other >= 0) {
                    j["witness"]["other"] = w.other;
                }
            }
            out << j.dump() << "\n";
            return report.pass ? kOk : kCheckFailed;
        }
        if (*oracle_cmd) {
            const auto inst = read_instance_file(in_path);
            if (agent >= inst.n_agents()) {
                throw InvalidInput("agent index out of range");
            }
            const auto& u = inst.agents[agent];
            Bundle bundle = bundle_csv.empty() ? inst.graph.all_vertices() : parse_csv_bundle(bundle_csv);
            for (Vertex v : bundle) {
                if (static_cast<std::size_t>(v) >= inst.graph.size()) {
                    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
                }
            }
            Value v = 0;
            if (value_kind == "pmms") {
                v = pmms_value(u, inst.graph, bundle);
            } else if (value_kind == "mms") {
                v = mu_k(u, inst.graph, inst.graph.all_vertices(), inst.n_agents());
            } else {
                v = mu_k(u, inst.graph, bundle, k);
            }
            out << v << "\n";
            return kOk;
        }
        if (*gen_cmd) {
            gen.shape = parse_shape(shape);
            emit(out_path, write_instance(generate_instance(gen), canonical), out);
            return kOk;
        }
        if (*bench_cmd) {
            std::vector<std::filesystem::path> files;
            for (const auto& e : std::filesystem::directory_iterator(dir)) {
                if (e.is_regular_file() && e.path().extension() == ".json") {
                    files.push_back(e.path());
                }
            }
            std::sort(files.begin(), files.end());
            json rows = json::array();
            std::map<std::string, Ratio> by_algo;
            std::optional<Ratio> overall;
            for (const auto& f : files) {
                json row{{"file", f.filename().string()}};
                try {
                    const auto inst = read_instance_file(f.string());
                    const auto result = solve(inst, algo);
                    const auto shares = realized_pmms_shares(inst, result.allocation);
                    Ratio r{1, 1};
                    json agents = json::array();
                    for (const auto& s : shares) {
                        agents.push_back({{"utility", s.utility},
                                          {"pmms", s.pmms},
                                          {"ratio_num", s.ratio.num},
                                          {"ratio_den", s.ratio.den}});
                        r = std::min(r, s.ratio);
                    }
                    row["algo"] = result.algo;
                    row["agents"] = agents;
                    row["min_ratio"] = r.to_string();
                    if (!overall || r < *overall) {
                        overall = r;
                    }
                    auto it = by_algo.find(result.algo);
                    if (it == by_algo.end() || r < it->second) {
                        by_algo[result.algo] = r;
                    }
                } catch (const Error& e) {
                    row["skipped"] = e.what();
                }
                rows.push_back(row);
            }
            json per = json::object();
            for (const auto& [a, r] : by_algo) {
                per[a] = r.to_string();
            }
            json report{{"instances", rows}, {"by_algo", per}};
            report["global_min_ratio"] = overall ? json(overall->to_string()) : json(nullptr);
            emit(out_path, report.dump(2) + "\n", out);
            return kOk;
        }
        if (*fixture_cmd) {
            if (list) {
                for (const auto& n : fixture_names()) {
                    out << n << "\n";
                }
                return kOk;
            }
            if (name.empty()) {
                throw InvalidInput("--name is required");
            }
            const auto fx = get_fixture(name);
            if (check) {
                bool all = true;
                for (const auto& o : check_fixture(fx)) {
                    out << (o.pass ? "pass" : "FAIL") << "  " << o.claim << "\n";
                    all = all && o.pass;
                }
                return all ? kOk : kCheckFailed;
            }
            emit(out_path, write_instance(fx.instance, canonical), out);
            return kOk;
        }
    } catch (const SizeGuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kSizeGuard;
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, std::cout, std::cerr);
}

}  // namespace graphfair::cli
