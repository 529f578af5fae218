#include "trisect/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "trisect/catalogue.hpp"
#include "trisect/explorer.hpp"
#include "trisect/io.hpp"
#include "trisect/moves.hpp"
#include "trisect/planner.hpp"

namespace trisect::cli {

namespace {

/// Unreadable or unwritable files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFound : public DomainError {
public:
    explicit NotFound(const std::string& what) : DomainError("NotFound", what) {}
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_text(const std::string& path, Streams& io) {
    if (path == "-") {
        std::ostringstream buf;
        buf << io.in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text, Streams& io) {
    if (path == "-") {
        io.out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) {
        throw IoError("cannot write '" + path + "'");
    }
}

TrisectionState read_state(const std::string& path, Streams& io) {
    return io::state_from_json(io::parse(read_text(path, io)));
}

MoveScript read_script(const std::string& path, Streams& io) {
    return io::script_from_json(io::parse(read_text(path, io)));
}

// Summary lines go to stdout unless stdout carries the JSON payload.
std::ostream& summary_stream(const std::string& output, Streams& io) {
    return output == "-" ? io.err : io.out;
}

void emit_state(const std::string& output, const TrisectionState& state, Streams& io) {
    if (!output.empty()) {
        write_text(output, io::dump(io::to_json(state)), io);
    }
}

void emit_script(const std::string& output, const MoveScript& script, Streams& io) {
    if (!output.empty()) {
        write_text(output, io::dump(io::to_json(script)), io);
    }
}

void print_state_line(std::ostream& os, const TrisectionState& s) {
    os << "profile: " << s.profile().str() << "\n";
}

void show(const TrisectionState& s, std::ostream& os) {
    const Profile p = s.profile();
    const auto& g = s.genera();
    os << "label: " << s.label() << "\n";
    os << "profile: " << p.str() << "\n";
    os << "genera: g12=" << g.g12 << " g13=" << g.g13 << " g23=" << g.g23 << "\n";
    os << "components:";
    for (const auto& c : s.link().components()) os << " " << c.str();
    os << " (b=" << s.b() << ", next_id=" << s.link().next_id() << ")\n";
    os << "feasible: " << (is_feasible(p) ? "yes" : "no") << "\n";
    os << "balanced: " << (p.is_balanced() ? "yes" : "no") << "\n";
    os << "trivial: " << (s.is_trivial() ? "yes" : "no") << "\n";
    os << "history: " << s.history().size() << " move(s)\n";
    for (const auto& note : construction_notes(s.label())) {
        os << "note: " << note << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Streams io{in, out, err};
    CLI::App app{"Combinatorial engine for trisections of closed orientable 3-manifolds", "trisect"};
    app.require_subcommand(1);

    // new
    std::string kind_name;
    std::vector<int> params;
    std::string output;
    auto* cmd_new = app.add_subcommand("new", "Construct a state from the example catalogue");
    cmd_new->add_option("kind", kind_name,
                        "trivial|from-heegaard|split-heegaard|open-book|tunnel|connect-sum|surface-bundle|koda-ozawa")
        ->required();
    cmd_new->add_option("params", params, "Integer parameters of the constructor");
    cmd_new->add_option("-o,--output", output, "Output state file (default: stdout)");

    // show
    std::string input = "-";
    auto* cmd_show = app.add_subcommand("show", "Print profile, genera and derived facts of a state");
    cmd_show->add_option("file", input, "State file");

    // stab / destab
    int handlebody = 0;
    std::string arc_text;
    auto* cmd_stab = app.add_subcommand("stab", "Stabilize one handlebody along an arc class");
    auto* cmd_destab = app.add_subcommand("destab", "Apply a formal destabilization");
    for (auto* cmd : {cmd_stab, cmd_destab}) {
        cmd->add_option("file", input, "State file");
        cmd->add_option("--handlebody", handlebody, "Handlebody index 1..3")->required();
        cmd->add_option("--arc", arc_text, "same:cK or distinct:cK,cL")->required();
        cmd->add_option("-o,--output", output, "Output state file");
    }

    // balance / build-heegaard / fake-stab
    std::string script_out;
    auto* cmd_balance = app.add_subcommand("balance", "Stabilize until all handlebodies have equal genus");
    auto* cmd_build = app.add_subcommand("build-heegaard", "Build the Heegaard splitting by stabilizing one handlebody");
    auto* cmd_fake = app.add_subcommand("fake-stab", "Apply one fake Heegaard stabilization");
    for (auto* cmd : {cmd_balance, cmd_build, cmd_fake}) {
        cmd->add_option("file", input, "State file");
        cmd->add_option("-o,--output", output, "Output state file");
        cmd->add_option("--script", script_out, "Write the applied move script here");
    }
    cmd_build->add_option("--handlebody", handlebody, "Handlebody index 1..3")->required();

    // plan
    std::string file_a;
    std::string file_b;
    int rs_bound = 0;
    auto* cmd_plan = app.add_subcommand("plan", "Common stabilization of two states");
    cmd_plan->add_option("a", file_a, "First state file")->required();
    cmd_plan->add_option("b", file_b, "Second state file")->required();
    cmd_plan->add_option("--rs-bound", rs_bound, "Number of fake Heegaard stabilizations in step 3")->required();
    cmd_plan->add_option("-o,--output", output, "Report file");

    // explore
    std::string start_file;
    std::string target_file;
    int max_sum = 0;
    bool quotient = false;
    auto* cmd_explore = app.add_subcommand("explore", "Breadth-first search over the stabilization graph");
    cmd_explore->add_option("--start", start_file, "Start state file")->required();
    cmd_explore->add_option("--max-sum", max_sum, "Bound on h1+h2+h3")->required();
    cmd_explore->add_option("--shortest-to", target_file, "Find a shortest script to this state");
    cmd_explore->add_option("--script", script_out, "Write the shortest script here");
    cmd_explore->add_flag("--quotient", quotient, "Identify nodes differing by a relabeling of the handlebodies");

    // verify
    int threads = 1;
    auto* cmd_verify = app.add_subcommand("verify", "Exhaustively check the arithmetic properties");
    cmd_verify->add_option("--max-sum", max_sum, "Bound on h1+h2+h3")->required();
    cmd_verify->add_option("-o,--output", output, "Report file");
    cmd_verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

    // replay
    std::string script_in;
    auto* cmd_replay = app.add_subcommand("replay", "Apply a move script to a state");
    cmd_replay->add_option("file", input, "State file")->required();
    cmd_replay->add_option("script", script_in, "Script file")->required();
    cmd_replay->add_option("-o,--output", output, "Output state file");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_new->parsed()) {
            const auto kind = constructor_from_name(kind_name);
            if (!kind) {
                err << "unknown constructor '" << kind_name << "'\n";
                return kExitUsage;
            }
            if (static_cast<int>(params.size()) != constructor_arity(*kind)) {
                err << kind_name << " takes " << constructor_arity(*kind) << " parameter(s)\n";
                return kExitUsage;
            }
            const auto state = construct(*kind, params);
            if (output.empty() || output == "-") {
                write_text("-", io::dump(io::to_json(state)), io);
            } else {
                write_text(output, io::dump(io::to_json(state)), io);
                print_state_line(out, state);
            }
        } else if (cmd_show->parsed()) {
            show(read_state(input, io), out);
        } else if (cmd_stab->parsed() || cmd_destab->parsed()) {
            const auto state = read_state(input, io);
            const Handlebody i = handlebody_from_index(handlebody);
            const ArcClass arc = ArcClass::parse(arc_text);
            auto& summary = summary_stream(output, io);
            TrisectionState next = cmd_stab->parsed() ? apply_stabilization(state, {i, arc})
                                                      : apply_destabilization(state, {i, arc});
            if (cmd_destab->parsed()) {
                summary << "caveat: " << kFormalDestabCaveat << "\n";
            }
            emit_state(output, next, io);
            print_state_line(summary, next);
        } else if (cmd_balance->parsed()) {
            const auto result = balance(read_state(input, io));
            emit_state(output, result.state, io);
            emit_script(script_out, result.script, io);
            auto& summary = summary_stream(output, io);
            print_state_line(summary, result.state);
            summary << "moves: " << result.script.size() << "\n";
        } else if (cmd_build->parsed()) {
            const auto state = read_state(input, io);
            const auto result = build_heegaard(state, handlebody_from_index(handlebody));
            emit_state(output, result.state, io);
            emit_script(script_out, result.script, io);
            auto& summary = summary_stream(output, io);
            print_state_line(summary, result.state);
            summary << "moves: " << result.script.size() << "\n";
            summary << "heegaard genus: " << result.heegaard_genus << "\n";
        } else if (cmd_fake->parsed()) {
            const auto result = fake_heegaard_stab(read_state(input, io));
            emit_state(output, result.state, io);
            emit_script(script_out, result.script, io);
            print_state_line(summary_stream(output, io), result.state);
        } else if (cmd_plan->parsed()) {
            const auto a = read_state(file_a, io);
            const auto b = read_state(file_b, io);
            const auto report = plan_common_stabilization(a, b, rs_bound);
            if (!output.empty()) {
                write_text(output, io::dump(io::to_json(report)), io);
            }
            auto& summary = summary_stream(output, io);
            summary << "final profile: " << report.final_profile.str() << "\n";
            summary << "moves: a=" << report.a.concatenated().size() << " b=" << report.b.concatenated().size()
                    << "\n";
        } else if (cmd_explore->parsed()) {
            const auto start = node_of(read_state(start_file, io));
            auto& summary = summary_stream(script_out, io);
            if (!target_file.empty()) {
                const auto target = node_of(read_state(target_file, io));
                const int bound = std::max(0, max_sum - start.handle_sum());
                const auto script = target.handle_sum() <= max_sum ? shortest_script(start, target, bound)
                                                                    : std::nullopt;
                if (!script) {
                    throw NotFound("no stabilization script from " + start.str() + " to " + target.str() +
                                   " within handle sum " + std::to_string(max_sum));
                }
                summary << "shortest: " << script->size() << " move(s) " << start.str() << " -> " << target.str()
                        << "\n";
                emit_script(script_out, *script, io);
            } else {
                const auto reach = bfs_reachable(start, max_sum, ExploreOptions{quotient});
                summary << "reachable: " << reach.depth.size() << " node(s) with h1+h2+h3 <= " << max_sum
                        << " (parameter shadow" << (quotient ? ", up to relabeling" : "") << ")\n";
                for (const auto& [node, depth] : reach.depth) {
                    summary << "depth " << depth << ": " << node.str() << " profile " << node.profile().str()
                            << "\n";
                }
            }
        } else if (cmd_verify->parsed()) {
            const auto report = verify_properties(max_sum, threads);
            if (!output.empty()) {
                write_text(output, io::dump(io::to_json(report)), io);
            }
            auto& summary = summary_stream(output, io);
            for (const auto& p : report.properties) {
                summary << (p.pass ? "PASS " : "FAIL ") << p.property << " (max_sum " << p.max_sum << "): "
                        << p.detail << "\n";
            }
            if (!report.all_pass()) {
                return kExitDomain;
            }
        } else if (cmd_replay->parsed()) {
            const auto state = read_state(input, io);
            const auto next = replay(state, read_script(script_in, io));
            emit_state(output, next, io);
            print_state_line(summary_stream(output, io), next);
        }
    } catch (const DomainError& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitDomain;
    } catch (const FormatError& e) {
        err << "FormatError: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "IoError: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace trisect::cli
