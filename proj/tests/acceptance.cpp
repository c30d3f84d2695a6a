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

// Acceptance checks. One PASS/FAIL line per criterion, diagnostics indented
// below it. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pgsep/automaton.hpp"
#include "pgsep/counts.hpp"
#include "pgsep/semantics.hpp"
#include "pgsep/solvers.hpp"
#include "pgsep/statespace.hpp"
#include "pgsep/update.hpp"

using namespace pgsep;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why)
    {
        pass = false;
        notes.push_back(why);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

struct Printed {
    int n, c;
    long long old_p, jl_p, new_p;  // -1: not a number in the printed table
};

const std::vector<Printed> kTable1 = {
    {8, 8, 2, 1, -1},           {16, 10, 8, 5, 1},           {32, 10, 33, 18, 5},
    {64, 10, 122, 61, 17},      {128, 10, 432, 187, 52},     {256, 10, 1462, 553, 154},
    {512, 10, 4780, 1579, 439}, {1024, 10, 15157, 4374, 1211}, {2048, 10, 46813, 11829, 3261},
    {4096, 10, 141264, 31326, 8601}, {8192, 10, 417577, 81461, 22282},
    {16384, 10, 1211700, 208470, 56819}, {32768, 10, 3458200, 525991, 142884},
};

const std::vector<Printed> kTable2 = {
    {260, 26, 381, 190, 53},       {280, 28, 622, 318, 90},       {300, 30, 987, 518, 148},
    {320, 32, 11531, 820, 251},    {340, 34, 2323, 1271, 389},    {360, 36, 3456, 1928, 608},
    {380, 38, 5054, 2870, 926},    {400, 40, 7271, 4201, 1759},   {420, 42, 10309, 6053, 2584},
    {440, 44, 14420, 8596, 3724},  {460, 46, 19919, 12047, 5838}, {480, 48, 27199, 16675, 8625},
    {500, 50, 36742, 22818, 12200},
};

std::string str(const BigInt& x) { return x.str(); }

/// Compares one table cell; returns false on mismatch and records it.
bool cell(Outcome& o, const char* col, const Printed& p, long long printed, const BigInt& exact, const BigInt& scale,
          bool counts)
{
    const BigInt fl = exact / scale;
    const BigInt rd = (2 * exact + scale) / (2 * scale);
    if (printed >= 0 && fl == printed) return true;
    std::ostringstream s;
    s << "n=" << p.n << " " << col << ": computed " << str(exact) << " floor " << str(fl) << " printed ";
    if (printed < 0)
        s << "(not a number)";
    else
        s << printed;
    if (printed >= 0 && rd == printed) s << " (matches when rounded)";
    if (counts)
        o.fail(s.str());
    else
        o.note("reported: " + s.str());
    return false;
}

Outcome table1()
{
    Outcome o;
    const auto rows = table_fixed_colours();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto& p = kTable1[i];
        if (r.n != p.n || r.c != p.c) o.fail("row layout differs at " + std::to_string(i));
        cell(o, "Old", p, p.old_p, r.old_exact, 1000, true);
        cell(o, "JL", p, p.jl_p, r.jl_exact, 1000, true);
        cell(o, "New", p, p.new_p, r.new_exact, 1000, false);
    }
    auto anchor = [&](const char* what, const BigInt& got, long long want) {
        if (got != want) o.fail(std::string("anchor ") + what + ": computed " + str(got) + ", expected " + std::to_string(want));
    };
    anchor("Old(1024,10)", table_row(1024, 10).old_exact, 15157187);
    anchor("JL(1024,10)", table_row(1024, 10).jl_exact, 4374526);
    anchor("JL(256,10)", table_row(256, 10).jl_exact, 553984);
    o.note("New/JL at n=32768: " + ratio_string(rows.back().new_exact, rows.back().jl_exact));
    return o;
}

Outcome table2()
{
    Outcome o;
    const auto rows = table_linear_colours();
    const BigInt scale = 1000000;  // the table is in units of 10^6
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto& p = kTable2[i];
        if (r.n != p.n || r.c != p.c) o.fail("row layout differs at " + std::to_string(i));
        cell(o, "Old", p, p.old_p, r.old_exact, scale, p.n != 320);
        cell(o, "JL", p, p.jl_p, r.jl_exact, scale, true);
        cell(o, "New", p, p.new_p, r.new_exact, scale, true);
    }
    return o;
}

Outcome identities()
{
    Outcome o;
    std::size_t checked = 0;
    for (int c = 1; c <= 20; ++c)
        for (int l = 1; l <= 14; ++l) {
            ++checked;
            if (o_total_closed(c, l) != cnt_o(c, l) + 1)
                o.fail("o_total_closed(" + std::to_string(c) + "," + std::to_string(l) + ") != cnt_o + 1");
            if (c < 2) continue;
            if (jl_total_closed(c, l) != cnt_jl(c, l) + 1)
                o.fail("jl_total_closed(" + std::to_string(c) + "," + std::to_string(l) + ") != cnt_jl + 1");
            if (c % 2 == 0 && cnt_12(c, l) != cnt_jl(c, l))
                o.fail("cnt_12(" + std::to_string(c) + "," + std::to_string(l) + ") != cnt_jl");
        }
    for (int c = 2; c <= 12; c += 2)
        for (int l = 2; l <= 12; ++l) {
            ++checked;
            const BigInt len = cnt_len(c, l);
            if (cnt_len_val(c, l, (std::uint64_t{1} << l) - 1) != len)
                o.fail("cnt_len_val(" + std::to_string(c) + "," + std::to_string(l) + ", 2^l-1) != cnt_len");
            if (len % 2 != 0) {
                o.fail("cnt_len(" + std::to_string(c) + "," + std::to_string(l) + ") is odd");
                continue;
            }
            if (cnt_len_val(c, l, std::uint64_t{1} << (l - 1)) != len / 2 + c / 2)
                o.fail("cnt_len_val(" + std::to_string(c) + "," + std::to_string(l) + ", 2^(l-1)) != cnt_len/2 + c");
        }
    o.note(std::to_string(checked) + " parameter pairs");
    return o;
}

struct Space {
    Bounds bounds;
    std::vector<Witness> original, classic, concise;
};

/// Every statespace with min colour 1 or 2, max colour up to 6 and e up to 31.
const std::vector<Space>& spaces()
{
    static const std::vector<Space> all = [] {
        std::vector<Space> v;
        for (int lo = 1; lo <= 2; ++lo)
            for (int hi = lo; hi <= 6; ++hi)
                for (std::int64_t e = 1; e <= 31; ++e) {
                    const Bounds b(lo, hi, e);
                    Space s{b, enumerate_statespace(b, Statespace::OriginalLength), {}, {}};
                    if (hi >= 2) {
                        s.classic = enumerate_statespace(b, Statespace::ClassicValueCapped);
                        s.concise = enumerate_statespace(b, Statespace::Concise);
                    }
                    v.push_back(std::move(s));
                }
        return v;
    }();
    return all;
}

std::string name(const Bounds& b)
{
    return "C=" + std::to_string(b.min_colour()) + ".." + std::to_string(b.max_colour()) + " e=" + std::to_string(b.e());
}

Outcome enumeration()
{
    Outcome o;
    std::size_t n = 0;
    for (const auto& s : spaces()) {
        const auto& b = s.bounds;
        ++n;
        const BigInt want = cnt_o(b.max_colour() - b.min_colour() + 1, b.length());
        if (BigInt(s.original.size()) != want)
            o.fail(name(b) + " original: " + std::to_string(s.original.size()) + " states, cnt_o " + str(want));
        if (b.max_colour() < 2) continue;  // no even colour, no concise formula
        ++n;
        const BigInt cv = cnt_val(2 * (b.max_colour() / 2), static_cast<std::uint64_t>(b.e()));
        if (BigInt(s.concise.size()) != cv)
            o.fail(name(b) + " concise: " + std::to_string(s.concise.size()) + " states, cnt_val " + str(cv));
    }
    o.note(std::to_string(n) + " statespaces compared");
    return o;
}

DifferentialReport& differential_report()
{
    static DifferentialReport rep = [] {
        DifferentialConfig cfg;
        cfg.seed_begin = 0;
        cfg.seed_end = 500;
        cfg.min_vertices = 1;
        cfg.max_vertices = 12;
        cfg.max_colour = 6;
        cfg.min_degree = 1;
        cfg.max_degree = 3;
        return differential(cfg);
    }();
    return rep;
}

Outcome differential_solving()
{
    Outcome o;
    const auto& rep = differential_report();
    for (const auto& row : rep.rows) {
        if (row.agree) continue;
        std::string bad;
        for (const auto& m : row.methods)
            if (m.winner != row.methods.front().winner) bad += " " + m.name;
        o.fail("seed " + std::to_string(row.seed) + ": disagreeing" + bad);
    }
    o.note(std::to_string(rep.rows.size()) + " games, " + std::to_string(rep.disagreements()) + " disagreements");
    return o;
}

Outcome soundness()
{
    Outcome o;
    std::mt19937_64 rng(20260101);
    std::size_t prefixes = 0, states = 0, won = 0, violations = 0, late = 0;
    for (std::uint64_t seed = 0; prefixes < 10000; ++seed) {
        RandomGameConfig gc;
        gc.vertices = 2 + static_cast<int>(seed % 5);
        gc.max_colour = 2 + static_cast<int>(seed % 5);
        gc.min_degree = 1;
        gc.max_degree = std::min(3, gc.vertices);
        gc.seed = seed;
        const auto g = normalize_colours(generate_random(gc)).game;
        const auto bounds = bounds_for(g);
        if (!bounds) continue;
        for (int rep = 0; rep < 4; ++rep) {
            const int len = 1 + static_cast<int>(rng() % 12);
            std::vector<int> path{static_cast<int>(rng() % static_cast<std::uint64_t>(g.size()))};
            while (static_cast<int>(path.size()) < len) {
                const auto s = g.successors(path.back());
                path.push_back(s[rng() % s.size()]);
            }
            const auto col = play_colours(g, path);
            ++prefixes;
            for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour}) {
                const SepAutomaton a(*bounds, v, UpdateKind::Basic);
                const auto t = run_word(a, col);
                for (std::size_t i = 1; i < t.states.size(); ++i) {
                    const std::span<const int> read(col.data(), i);
                    const auto& q = t.states[i];
                    ++states;
                    bool ok;
                    if (q.is_won()) {
                        ++won;
                        ok = longest_even_chain(read) > bounds->e();
                        i = t.states.size();  // later states are Won as well
                    } else {
                        if (longest_even_chain(read) > bounds->e()) ++late;
                        const std::vector<int> r(read.begin(), read.end());
                        ok = v == Variant::Colour ? is_colour_witness(q, r) : is_classic_witness(q, r);
                    }
                    if (!ok && ++violations <= 10)
                        o.fail(std::string(to_string(v)) + " seed " + std::to_string(seed) + " state " + q.to_string() +
                               " after " + std::to_string(i) + " letters");
                }
            }
        }
    }
    if (violations > 10) o.note(std::to_string(violations) + " violations in total");
    o.note(std::to_string(prefixes) + " prefixes, " + std::to_string(states) + " states checked, " +
           std::to_string(won) + " Won");
    o.note(std::to_string(late) + " non-Won states after a prefix whose even chain exceeds e");
    return o;
}

/// witness_cmp must order the sorted enumeration strictly and be a total order.
void check_order(Outcome& o, const std::vector<Witness>& xs, const std::string& what, std::mt19937_64& rng,
                 std::size_t& violations)
{
    auto bad = [&](const std::string& m) {
        if (++violations <= 10) o.fail(what + ": " + m);
    };
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (witness_cmp(xs[i], xs[i + 1]) != Cmp::Less) bad("not strictly ascending at " + xs[i].to_string());
        if (witness_cmp(xs[i + 1], xs[i]) != Cmp::Greater) bad("not antisymmetric at " + xs[i].to_string());
    }
    auto pair = [&](std::size_t i, std::size_t j) {
        const Cmp want = i < j ? Cmp::Less : i > j ? Cmp::Greater : Cmp::Equal;
        if (witness_cmp(xs[i], xs[j]) != want) bad(xs[i].to_string() + " vs " + xs[j].to_string());
    };
    if (xs.size() <= 1500) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < xs.size(); ++j) pair(i, j);
    } else {
        for (int t = 0; t < 400000; ++t) pair(rng() % xs.size(), rng() % xs.size());
    }
}

Outcome order_properties()
{
    Outcome o;
    std::mt19937_64 rng(7);
    std::size_t violations = 0, au_checks = 0;
    auto bad = [&](const std::string& m) {
        if (++violations <= 10) o.fail(m);
    };
    for (int x = 0; x <= 6; ++x)
        for (int y = 0; y <= 6; ++y)
            for (int z = 0; z <= 6; ++z) {
                if (!entry_geq(x, y) && !entry_geq(y, x)) bad("entries not comparable");
                if (x != y && entry_geq(x, y) && entry_geq(y, x)) bad("entry order not antisymmetric");
                if (entry_geq(x, y) && entry_geq(y, z) && !entry_geq(x, z)) bad("entry order not transitive");
            }
    for (const auto& s : spaces()) {
        const auto& b = s.bounds;
        check_order(o, s.original, name(b) + " original", rng, violations);
        if (b.max_colour() < 2) continue;
        check_order(o, s.classic, name(b) + " classic", rng, violations);
        check_order(o, s.concise, name(b) + " concise", rng, violations);
        for (int d = b.min_colour(); d <= b.max_colour(); ++d) {
            for (const auto& c : s.concise) {
                const auto fast = up_capped(c, d, Variant::Colour, b);
                const auto slow = up_capped(c, d, Variant::Concise, b);
                if (!witness_leq(slow, fast))
                    bad(name(b) + " d=" + std::to_string(d) + ": colour update of " + c.to_string() + " below concise");
            }
            for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour}) {
                const auto& xs = v == Variant::Classic ? s.classic : s.concise;
                Witness prev = Witness::blank(b.length());
                for (const auto& x : xs) {
                    const auto ref = au_reference(x, d, v, b);
                    const auto fast = au_fast(x, d, v, b);
                    ++au_checks;
                    if (!witness_leq(prev, ref))
                        bad(name(b) + " " + to_string(v) + " d=" + std::to_string(d) + ": au not monotone at " + x.to_string());
                    if (fast != ref)
                        bad(name(b) + " " + to_string(v) + " d=" + std::to_string(d) + ": au_fast(" + x.to_string() +
                            ") = " + fast.to_string() + ", reference " + ref.to_string());
                    prev = ref;
                }
            }
        }
    }
    if (violations > 10) o.note(std::to_string(violations) + " violations in total");
    o.note(std::to_string(au_checks) + " antagonistic updates compared");
    return o;
}

Outcome convergence()
{
    Outcome o;
    for (std::int64_t e : {4, 8, 16}) {
        const SepAutomaton a(Bounds(2, 2, e), Variant::Colour, UpdateKind::Basic);
        const std::vector<int> word(static_cast<std::size_t>(e + 8), 2);
        const auto t = run_word(a, word);
        const auto step = t.accept_step();
        if (!step || *step != static_cast<std::size_t>(e + 1))
            o.fail("e=" + std::to_string(e) + ": accepted at " + (step ? std::to_string(*step) : std::string("never")) +
                   ", expected " + std::to_string(e + 1));
    }
    const auto& rep = differential_report();
    const auto names = differential_methods();
    auto index = [&](const std::string& n) {
        return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
    };
    const auto ic = index("lifting-colour"), ik = index("lifting-classic");
    std::size_t worse = 0;
    std::uint64_t sum_colour = 0, sum_classic = 0;
    for (const auto& row : rep.rows) {
        const auto c = row.methods.at(ic).steps, k = row.methods.at(ik).steps;
        sum_colour += c;
        sum_classic += k;
        if (c > k && ++worse <= 10)
            o.fail("seed " + std::to_string(row.seed) + ": colour lifting " + std::to_string(c) + " steps, classic " +
                   std::to_string(k));
    }
    if (worse > 10) o.note(std::to_string(worse) + " games where colour lifting took more steps");
    o.note("lifting steps over " + std::to_string(rep.rows.size()) + " games: colour " + std::to_string(sum_colour) +
           ", classic " + std::to_string(sum_classic));
    return o;
}

Outcome truncation()
{
    Outcome o;
    std::size_t n = 0, violations = 0;
    for (const auto& s : spaces())
        for (const auto& b : s.classic) {
            ++n;
            const auto t = truncate1(b);
            if (val(t) != val(b) || even_positions(t) != even_positions(b) || truncate1(t) != t)
                if (++violations <= 10) o.fail(name(s.bounds) + ": " + b.to_string() + " -> " + t.to_string());
        }
    o.note(std::to_string(n) + " classic witnesses");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0: no runtime bound
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> all = {
        {1, "fixed-colour table reproduction", 5, table1},
        {2, "linear-colour table reproduction", 30, table2},
        {3, "counting identities", 0, identities},
        {4, "enumeration sizes equal counting formulas", 60, enumeration},
        {5, "differential solving on 500 random games", 600, differential_solving},
        {6, "basic update soundness on random play prefixes", 0, soundness},
        {7, "order and monotonicity on enumerated statespaces", 0, order_properties},
        {8, "self-loop convergence and lifting step counts", 0, convergence},
        {9, "truncation invariants", 0, truncation},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs > c.limit_s) o.fail("runtime " + std::to_string(secs) + " s over the limit");
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs
             << " s)";
        std::cout << line.str() << '\n';
        for (const auto& n : o.notes) std::cout << "    " << n << '\n';
        std::cout.flush();
        failed += o.pass ? 0 : 1;
    }
    std::cout << (all.size() - static_cast<std::size_t>(failed)) << "/" << all.size() << " criteria passed\n";
    return failed;
}
