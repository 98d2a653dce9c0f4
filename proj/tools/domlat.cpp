// domlat: build the dominance lattice of integer partitions, its standard
// context, the arrow relations (three independent methods) and the
// one-generated arrow-closed subcontexts.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or cap error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "domlat/closure.hpp"
#include "domlat/context.hpp"
#include "domlat/io.hpp"
#include "domlat/lattice.hpp"
#include "domlat/theorems.hpp"
#include "domlat/verify.hpp"

namespace {

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    }
    if (r.hi < r.lo) {
        throw std::invalid_argument("empty range " + text);
    }
    return r;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write " + out_path);
    }
    file << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dominance lattices of integer partitions: contexts, arrows, subcontexts"};
    app.require_subcommand(1);

    std::string n_arg;
    std::string out_path;
    std::string format;
    std::string method = "covers";
    std::string what = "hasse+arrows";
    std::string generator;
    int lattice_cap = domlat::kDefaultLatticeCap;
    int bf_cap = 25;
    bool count_only = false;
    bool with_covers = false;
    bool count_1x1 = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("n", n_arg, "n or range a..b")->required();
        cmd->add_option("--out", out_path, "write to file instead of stdout");
        cmd->add_option("--lattice-cap", lattice_cap, "max n for full-lattice operations");
        cmd->add_option("--bf-cap", bf_cap, "max n for the definitional brute force");
    };

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list the partitions of n");
    add_common(cmd_enumerate);
    cmd_enumerate->add_flag("--count", count_only, "print only the number of partitions");
    cmd_enumerate->add_flag("--covers", with_covers, "list lower covers per partition");
    cmd_enumerate->add_option("--format", format, "text|json")->default_str("text");

    CLI::App* cmd_context = app.add_subcommand("context", "standard context of the lattice");
    add_common(cmd_context);
    cmd_context->add_option("--format", format, "cxt|csv|json")->default_str("cxt");

    CLI::App* cmd_arrows = app.add_subcommand("arrows", "arrow relations of the standard context");
    add_common(cmd_arrows);
    cmd_arrows->add_option("--method", method, "bruteforce|covers|theorems");

    CLI::App* cmd_verify = app.add_subcommand("verify", "cross-check all methods per n");
    add_common(cmd_verify);

    CLI::App* cmd_render = app.add_subcommand("render", "DOT diagram of the lattice");
    add_common(cmd_render);
    cmd_render->add_option("--what", what, "hasse|hasse+arrows");
    cmd_render->add_option("--format", format, "dot")->default_str("dot");

    CLI::App* cmd_closures = app.add_subcommand("closures", "one-generated arrow-closed subcontexts");
    add_common(cmd_closures);
    cmd_closures->add_option("--generator", generator, "partition to generate from, e.g. 3,3,1");
    cmd_closures->add_flag("--count-1x1", count_1x1, "print only the number of 1x1 subcontexts");

    CLI::App* cmd_report = app.add_subcommand("report", "first occurrence of each arrow pattern");
    add_common(cmd_report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Range range = parse_range(n_arg);
        int n = range.lo;

        if (cmd_enumerate->parsed()) {
            if (count_only) {
                long long count = 0;
                domlat::for_each_partition(n, [&](const domlat::Partition&) { ++count; });
                emit(std::to_string(count) + "\n", out_path);
            } else {
                emit(domlat::render_enumeration(n, with_covers, format == "json", lattice_cap),
                     out_path);
            }
        } else if (cmd_context->parsed()) {
            domlat::FormalContext ctx = domlat::standard_context(n);
            if (format == "csv") {
                std::string corner = "K(L_" + std::to_string(n) + ")";
                emit(domlat::render_csv(ctx, domlat::arrows_via_covers(n), corner), out_path);
            } else if (format == "json") {
                emit(domlat::render_context_json(n, ctx), out_path);
            } else {
                emit(domlat::render_cxt(ctx, "K(L_" + std::to_string(n) + ")"), out_path);
            }
        } else if (cmd_arrows->parsed()) {
            if (method == "theorems") {
                auto arrows = domlat::double_arrows(n);
                auto downs = domlat::single_down_arrows(n);
                auto ups = domlat::single_up_arrows(n);
                arrows.insert(arrows.end(), downs.begin(), downs.end());
                arrows.insert(arrows.end(), ups.begin(), ups.end());
                emit(domlat::render_arrow_lines(arrows), out_path);
            } else if (method == "covers") {
                emit(domlat::render_arrow_lines(domlat::standard_context(n),
                                                domlat::arrows_via_covers(n)),
                     out_path);
            } else if (method == "bruteforce") {
                if (n > bf_cap) {
                    std::cerr << "arrows: n=" << n << " exceeds --bf-cap " << bf_cap << "\n";
                    return 2;
                }
                domlat::FormalContext ctx = domlat::standard_context(n);
                emit(domlat::render_arrow_lines(ctx, domlat::arrows_bruteforce(ctx)), out_path);
            } else {
                std::cerr << "arrows: unknown method " << method << "\n";
                return 2;
            }
        } else if (cmd_verify->parsed()) {
            domlat::VerifyOptions options;
            options.bf_cap = bf_cap;
            options.lattice_cap = lattice_cap;
            auto results = domlat::verify_range(range.lo, range.hi, options);
            std::string text;
            bool all_pass = true;
            for (const auto& r : results) {
                text += r.line + "\n";
                all_pass = all_pass && r.pass;
            }
            emit(text, out_path);
            return all_pass ? 0 : 1;
        } else if (cmd_render->parsed()) {
            emit(domlat::render_dot(n, what != "hasse", lattice_cap), out_path);
        } else if (cmd_closures->parsed()) {
            if (count_1x1) {
                emit(std::to_string(domlat::count_1x1_closures(n)) + "\n", out_path);
            } else {
                emit(domlat::render_closures(n, generator), out_path);
            }
        } else if (cmd_report->parsed()) {
            std::string text;
            for (const auto& row : domlat::first_occurrence_report(range.hi)) {
                text += domlat::to_string(row.pattern.jt) + " " +
                        domlat::to_string(row.pattern.kind) + " " +
                        domlat::to_string(row.pattern.mt) + " first_n=" +
                        std::to_string(row.first_n) + " witness " + domlat::to_string(row.g) +
                        " " + domlat::to_string(row.pattern.kind) + " " +
                        domlat::to_string(row.m) + "\n";
            }
            emit(text, out_path);
        }
        return 0;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
