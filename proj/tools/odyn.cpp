#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "odyn/format.hpp"

namespace {

// exit codes: 0 success, 1 validation failure, 2 usage error
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw odyn::error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw odyn::error("cannot write " + out_path);
    out << text;
}

odyn::DynamicFamily load_family(const std::string& path) {
    return odyn::to_family(odyn::parse_family(read_file(path)));
}

std::string format_subsets(const std::vector<odyn::IdSet>& subsets) {
    std::string out;
    for (const odyn::IdSet& j : subsets) {
        if (!out.empty()) out += " ";
        out += "{";
        bool first = true;
        for (const odyn::Id& i : j) {
            if (!first) out += ",";
            out += i;
            first = false;
        }
        out += "}";
    }
    return out + "\n";
}

std::string format_heaps(const odyn::HeapFamily& heaps) {
    std::string out;
    for (const auto& [i, params] : heaps) {
        out += "HEAP " + i;
        for (const odyn::Id& p : params) out += " " + p;
        out += "\n";
    }
    return out;
}

odyn::GenMode parse_mode(const std::string& mode) {
    if (mode == "p") return odyn::GenMode::primo;
    if (mode == "f") return odyn::GenMode::functional;
    if (mode == "s") return odyn::GenMode::flexible;
    return odyn::GenMode::mono;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"open graphic dynamics toolkit"};
    app.require_subcommand(1);

    std::string file, out_path, mode, component;
    bool strict_edge = false, include_empty = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "family description (.odf)")->required();
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a family file");
    add_common(validate);

    CLI::App* realizations = app.add_subcommand("realizations", "list open realizations");
    add_common(realizations);
    realizations->add_option("--component", component, "component index")->required();

    CLI::App* generate = app.add_subcommand("generate", "emit a generated dynamic");
    add_common(generate);
    generate->add_option("--mode", mode, "p, f, s or m")
        ->required()
        ->check(CLI::IsMember({"p", "f", "s", "m"}));
    generate->add_flag("--strict-edge", strict_edge, "require succession along the mapped edge");

    CLI::App* heaps = app.add_subcommand("heaps", "compute parametric heaps");
    add_common(heaps);
    heaps->add_option("--mode", mode, "f or s")->required()->check(CLI::IsMember({"f", "s"}));

    CLI::App* connective = app.add_subcommand("connective", "connective structure of the interaction");
    add_common(connective);
    connective->add_flag("--include-empty", include_empty, "also report the empty subset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (validate->parsed()) {
            odyn::DynamicFamily f = load_family(file);
            odyn::Diagnostics diags = odyn::validate_family(f);
            for (const auto& d : odyn::validate_interaction(f)) diags.push_back(d);
            if (!diags.empty()) {
                for (const auto& d : diags) std::cerr << d << "\n";
                return kInvalid;
            }
            emit("OK\n", out_path);
        } else if (realizations->parsed()) {
            odyn::DynamicFamily f = load_family(file);
            if (!f.index.count(component)) throw odyn::error("unknown component " + component);
            std::string text;
            for (const auto& r : odyn::enumerate_open_realizations(f.components.at(component)))
                text += r.param + " " + odyn::encode_assignment(r.assignment) + "\n";
            emit(text, out_path);
        } else if (generate->parsed()) {
            odyn::OpenDynamics d =
                odyn::generate(load_family(file), parse_mode(mode), strict_edge);
            emit(odyn::serialize_open_dynamics(d), out_path);
        } else if (heaps->parsed()) {
            odyn::DynamicFamily f = load_family(file);
            emit(format_heaps(mode == "f" ? odyn::functional_heaps(f) : odyn::flexible_heaps(f)),
                 out_path);
        } else if (connective->parsed()) {
            emit(format_subsets(odyn::family_connective_structure(load_family(file), include_empty)),
                 out_path);
        }
    } catch (const odyn::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
