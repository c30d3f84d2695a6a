/*
 * Copyright 2026 The pgsep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "pgsep/automaton.hpp"
#include "pgsep/counts.hpp"
#include "pgsep/game.hpp"
#include "pgsep/solvers.hpp"
#include "pgsep/statespace.hpp"

namespace pgsep::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("range '" + s + "' is not of the form a..b");
    try {
        std::size_t used = 0;
        const auto a = std::stoll(s.substr(0, dots), &used);
        if (used != dots) throw UsageError("bad range '" + s + "'");
        const auto tail = s.substr(dots + 2);
        const auto b = std::stoll(tail, &used);
        if (used != tail.size()) throw UsageError("bad range '" + s + "'");
        if (a > b) throw UsageError("empty range '" + s + "'");
        return {a, b};
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const UsageError*>(&e)) throw;
        throw UsageError("bad range '" + s + "'");
    }
}

std::vector<int> parse_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw UsageError("bad colour '" + tok + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad colour '" + tok + "'");
        }
    }
    return out;
}

ParityGame read_game(const std::string& path)
{
    if (path == "-") return parse_pgsolver(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return parse_pgsolver(in);
}

Statespace parse_statespace(const std::string& s)
{
    if (s == "original") return Statespace::OriginalLength;
    if (s == "classic") return Statespace::ClassicValueCapped;
    if (s == "concise") return Statespace::Concise;
    throw UsageError("unknown statespace '" + s + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parity game solving with separating automata over witness data structures"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Decide the winner of every vertex");
    std::string solve_file, algo = "zielonka", variant = "colour", update = "basic", direction = "forward";
    std::optional<std::int64_t> solve_e;
    std::size_t cap = kDefaultStatespaceCap;
    std::size_t product_cap = ProductOptions{}.node_cap;
    solve_cmd->add_option("file", solve_file, "PGSolver game file ('-' for stdin)")->required();
    solve_cmd->add_option("--algo", algo, "product, lifting or zielonka");
    solve_cmd->add_option("--variant", variant, "classic, concise or colour");
    solve_cmd->add_option("--update", update, "basic or antagonistic");
    solve_cmd->add_option("--direction", direction, "forward or backward (product only)");
    solve_cmd->add_option("--e", solve_e, "even-chain budget (default: even-coloured vertices)");
    solve_cmd->add_option("--cap", cap, "statespace cap");
    solve_cmd->add_option("--product-cap", product_cap, "product node cap");

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "Run the automaton on a colour word");
    std::string trace_colours;
    std::string trace_variant = "colour", trace_update = "basic";
    std::optional<std::int64_t> trace_e;
    std::optional<int> trace_max, trace_min;
    trace_cmd->add_option("--colours", trace_colours, "comma-separated colours")->required();
    trace_cmd->add_option("--variant", trace_variant, "classic, concise or colour");
    trace_cmd->add_option("--update", trace_update, "basic or antagonistic");
    trace_cmd->add_option("--e", trace_e, "even-chain budget (default: even letters, at least 1)");
    trace_cmd->add_option("--max-colour", trace_max, "largest colour (default: largest letter, at least 2)");
    trace_cmd->add_option("--min-colour", trace_min, "1 or 2 (default 1)");

    // count
    auto* count_cmd = app.add_subcommand("count", "Statespace sizes as CSV");
    std::string table, n_range;
    std::optional<int> count_c;
    std::int64_t step = 1;
    count_cmd->add_option("--table", table, "fixed or linear");
    count_cmd->add_option("--c", count_c, "number of colours");
    count_cmd->add_option("--n-range", n_range, "a..b");
    count_cmd->add_option("--step", step, "increment of n");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "List a statespace in ascending order");
    int enum_min = 1, enum_max = 2;
    std::int64_t enum_e = 1;
    std::string enum_space = "concise";
    bool count_only = false;
    enum_cmd->add_option("--min-colour", enum_min, "1 or 2");
    enum_cmd->add_option("--max-colour", enum_max, "largest colour");
    enum_cmd->add_option("--e", enum_e, "even-chain budget");
    enum_cmd->add_option("--statespace", enum_space, "original, classic or concise");
    enum_cmd->add_option("--cap", cap, "statespace cap");
    enum_cmd->add_flag("--count", count_only, "print only the size");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random game");
    RandomGameConfig gc;
    gc.max_colour = 6;
    gc.max_degree = 3;
    gen_cmd->add_option("--n", gc.vertices, "vertices")->required();
    gen_cmd->add_option("--max-colour", gc.max_colour, "colours are drawn from 1..max");
    gen_cmd->add_option("--min-degree", gc.min_degree, "smallest out-degree");
    gen_cmd->add_option("--max-degree", gc.max_degree, "largest out-degree");
    gen_cmd->add_option("--seed", gc.seed, "random seed");

    // diff
    auto* diff_cmd = app.add_subcommand("diff", "Differential test of all solvers on random games");
    DifferentialConfig dc;
    std::string seeds = "0..99";
    diff_cmd->add_option("--seeds", seeds, "inclusive seed range a..b");
    diff_cmd->add_option("--n-min", dc.min_vertices, "smallest game");
    diff_cmd->add_option("--n-max", dc.max_vertices, "largest game");
    diff_cmd->add_option("--max-colour", dc.max_colour, "largest colour");
    diff_cmd->add_option("--min-degree", dc.min_degree, "smallest out-degree");
    diff_cmd->add_option("--max-degree", dc.max_degree, "largest out-degree");

    std::vector<const char*> argv{"pgsep-cli"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (*solve_cmd) {
            const auto game = normalize_colours(read_game(solve_file)).game;
            SolveRequest req;
            req.algorithm = parse_algorithm(algo);
            req.variant = parse_variant(variant);
            req.update = parse_update_kind(update);
            req.e = solve_e;
            req.statespace_cap = cap;
            req.product.node_cap = product_cap;
            if (direction == "backward")
                req.product.direction = Direction::Backward;
            else if (direction != "forward")
                throw UsageError("unknown direction '" + direction + "'");
            const auto ws = solve(game, req);
            for (int v = 0; v < game.size(); ++v) out << game.id(v) << ": " << to_string(ws.winner[v]) << '\n';
            out << "even: " << ws.won_by(Player::Even).size() << " odd: " << ws.won_by(Player::Odd).size() << '\n';
            return kOk;
        }
        if (*trace_cmd) {
            const auto word = parse_list(trace_colours);
            int mx = 2;
            std::int64_t evens = 0;
            for (int d : word) {
                mx = std::max(mx, d);
                evens += d % 2 == 0 ? 1 : 0;
            }
            const Bounds b(trace_min.value_or(1), trace_max.value_or(mx), trace_e.value_or(std::max<std::int64_t>(1, evens)));
            for (int d : word)
                if (!b.in_colours(d))
                    throw UsageError("colour " + std::to_string(d) + " outside " + std::to_string(b.min_colour()) +
                                     ".." + std::to_string(b.max_colour()));
            const SepAutomaton a(b, parse_variant(trace_variant), parse_update_kind(trace_update), cap);
            const auto t = run_word(a, word);
            out << format_trace(t);
            if (t.accepted()) {
                out << "ACCEPTED at step " << *t.accept_step() << '\n';
                return kOk;
            }
            out << "REJECTED\n";
            return kRejected;
        }
        if (*count_cmd) {
            std::vector<TableRow> rows;
            if (!table.empty()) {
                if (count_c || !n_range.empty()) throw UsageError("--table excludes --c and --n-range");
                if (table == "fixed")
                    rows = table_fixed_colours();
                else if (table == "linear")
                    rows = table_linear_colours();
                else
                    throw UsageError("unknown table '" + table + "'");
            } else {
                if (!count_c || n_range.empty()) throw UsageError("count needs --table or both --c and --n-range");
                const auto [a, b] = parse_range(n_range);
                if (a < 1 || *count_c < 2 || step < 1) throw UsageError("count needs n >= 1, c >= 2 and step >= 1");
                for (std::int64_t n = a; n <= b; n += step) rows.push_back(table_row(static_cast<int>(n), *count_c));
            }
            out << table_csv(rows);
            return kOk;
        }
        if (*enum_cmd) {
            const auto states = enumerate_statespace(Bounds(enum_min, enum_max, enum_e), parse_statespace(enum_space), cap);
            if (count_only)
                out << states.size() << '\n';
            else
                for (const auto& w : states) out << w.to_string() << '\n';
            return kOk;
        }
        if (*gen_cmd) {
            out << serialize_pgsolver(generate_random(gc));
            return kOk;
        }
        if (*diff_cmd) {
            const auto [a, b] = parse_range(seeds);
            if (a < 0) throw UsageError("seeds must be non-negative");
            dc.seed_begin = static_cast<std::uint64_t>(a);
            dc.seed_end = static_cast<std::uint64_t>(b) + 1;
            const auto rep = differential(dc);
            out << rep.to_csv();
            if (rep.disagreements() > 0) {
                err << rep.disagreements() << " game(s) with disagreeing solvers\n";
                return kInvariantViolation;
            }
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::logic_error& e) {
        // invalid_argument and friends come from user input; the rest are internal
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
            err << "error: " << e.what() << '\n';
            return kParseError;
        }
        err << "invariant violation: " << e.what() << '\n';
        return kInvariantViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvariantViolation;
    }
    return kParseError;
}

}  // namespace pgsep::cli
