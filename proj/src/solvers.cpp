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

#include "pgsep/solvers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace pgsep {

std::vector<int> WinningSets::won_by(Player p) const
{
    std::vector<int> out;
    for (std::size_t v = 0; v < winner.size(); ++v)
        if (winner[v] == p) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<bool> attractor(const ParityGame& g, const std::vector<bool>& target, Player player,
                            const std::vector<bool>& mask)
{
    const int n = g.size();
    auto inside = [&](int v) { return mask.empty() || mask[v]; };
    std::vector<bool> in(n, false);
    std::vector<int> remaining(n, 0);
    std::deque<int> work;
    for (int v = 0; v < n; ++v) {
        if (!inside(v)) continue;
        for (int w : g.successors(v))
            if (inside(w)) ++remaining[v];
        if (target[v]) {
            in[v] = true;
            work.push_back(v);
        }
    }
    while (!work.empty()) {
        const int w = work.front();
        work.pop_front();
        for (int v : g.predecessors(w)) {
            if (!inside(v) || in[v]) continue;
            if (g.owner(v) == player || --remaining[v] == 0) {
                in[v] = true;
                work.push_back(v);
            }
        }
    }
    return in;
}

// ---------------------------------------------------------------------------

namespace {

void zielonka_rec(const ParityGame& g, const std::vector<bool>& sub, std::vector<Player>& win, SolveStats* stats)
{
    if (stats) ++stats->steps;
    const int n = g.size();
    int top = -1;
    for (int v = 0; v < n; ++v)
        if (sub[v]) top = std::max(top, g.colour(v));
    if (top < 0) return;

    const Player p = top % 2 == 0 ? Player::Even : Player::Odd;
    std::vector<bool> u(n, false);
    for (int v = 0; v < n; ++v) u[v] = sub[v] && g.colour(v) == top;
    const auto a = attractor(g, u, p, sub);

    std::vector<bool> rest(n, false);
    for (int v = 0; v < n; ++v) rest[v] = sub[v] && !a[v];
    std::vector<Player> w1(n, p);
    zielonka_rec(g, rest, w1, stats);

    std::vector<bool> opp_region(n, false);
    bool any = false;
    for (int v = 0; v < n; ++v)
        if (rest[v] && w1[v] != p) any = opp_region[v] = true;
    if (!any) {
        for (int v = 0; v < n; ++v)
            if (sub[v]) win[v] = p;
        return;
    }
    const auto b = attractor(g, opp_region, opponent(p), sub);
    std::vector<bool> rest2(n, false);
    for (int v = 0; v < n; ++v) rest2[v] = sub[v] && !b[v];
    zielonka_rec(g, rest2, win, stats);
    for (int v = 0; v < n; ++v)
        if (b[v]) win[v] = opponent(p);
}

}  // namespace

WinningSets zielonka(const ParityGame& g, SolveStats* stats)
{
    WinningSets ws;
    ws.winner.assign(g.size(), Player::Odd);
    zielonka_rec(g, std::vector<bool>(g.size(), true), ws.winner, stats);
    return ws;
}

// ---------------------------------------------------------------------------

namespace {

void check_game_in_bounds(const ParityGame& g, const Bounds& b)
{
    if (g.min_colour() < b.min_colour() || g.max_colour() > b.max_colour())
        throw GameError("game colours " + std::to_string(g.min_colour()) + ".." + std::to_string(g.max_colour()) +
                        " outside automaton colours " + std::to_string(b.min_colour()) + ".." +
                        std::to_string(b.max_colour()));
}

/// Product graph with explicit nodes; node 0.. are created on demand.
struct Product {
    std::vector<int> vertex;
    std::vector<bool> target;
    std::vector<std::vector<int>> succ;

    WinningSets winners(const ParityGame& g, const std::vector<int>& initial) const
    {
        const std::size_t n = vertex.size();
        std::vector<std::vector<int>> pred(n);
        std::vector<int> remaining(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            remaining[x] = static_cast<int>(succ[x].size());
            for (int y : succ[x]) pred[y].push_back(static_cast<int>(x));
        }
        std::vector<bool> in(n, false);
        std::deque<int> work;
        for (std::size_t x = 0; x < n; ++x)
            if (target[x]) {
                in[x] = true;
                work.push_back(static_cast<int>(x));
            }
        while (!work.empty()) {
            const int y = work.front();
            work.pop_front();
            for (int x : pred[y]) {
                if (in[x]) continue;
                if (g.owner(vertex[x]) == Player::Even || --remaining[x] == 0) {
                    in[x] = true;
                    work.push_back(x);
                }
            }
        }
        WinningSets ws;
        ws.winner.resize(g.size());
        for (int v = 0; v < g.size(); ++v) ws.winner[v] = in[initial[v]] ? Player::Even : Player::Odd;
        return ws;
    }
};

template <class State, class Next, class IsTarget>
WinningSets explore_product(const ParityGame& g, const State& init, Next next, IsTarget is_target,
                            std::size_t cap, SolveStats* stats)
{
    Product pr;
    std::map<std::pair<int, State>, int> index;
    std::vector<State> states;
    std::deque<int> work;
    auto intern = [&](int v, const State& s) {
        auto [it, fresh] = index.emplace(std::make_pair(v, s), static_cast<int>(pr.vertex.size()));
        if (fresh) {
            if (pr.vertex.size() >= cap)
                throw CapExceeded("product exceeds cap of " + std::to_string(cap) + " nodes");
            pr.vertex.push_back(v);
            pr.target.push_back(is_target(s));
            pr.succ.emplace_back();
            states.push_back(s);
            work.push_back(it->second);
        }
        return it->second;
    };
    std::vector<int> initial(g.size());
    for (int v = 0; v < g.size(); ++v) initial[v] = intern(v, init);
    while (!work.empty()) {
        const int x = work.front();
        work.pop_front();
        if (pr.target[x]) continue;
        const int v = pr.vertex[x];
        const State s2 = next(states[x], g.colour(v));
        for (int w : g.successors(v)) {
            const int y = intern(w, s2);
            pr.succ[x].push_back(y);
        }
    }
    if (stats) stats->steps += pr.vertex.size();
    return pr.winners(g, initial);
}

}  // namespace

WinningSets solve_product(const ParityGame& g, const SepAutomaton& a, const ProductOptions& opt, SolveStats* stats)
{
    check_game_in_bounds(g, a.bounds());
    if (opt.direction == Direction::Forward) {
        std::map<std::pair<Witness, int>, Witness> memo;
        auto next = [&](const Witness& q, int d) {
            auto key = std::make_pair(q, d);
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, a.step(q, d)).first;
            return it->second;
        };
        return explore_product(
            g, a.initial(), next, [](const Witness& q) { return q.is_won(); }, opt.node_cap, stats);
    }

    // Backward: a set T of automaton states, as a bitmap over the explicit
    // statespace with Won in the last slot.
    const auto states = a.states();
    const int n = static_cast<int>(states.size());
    const int won = n;
    const int lo = a.bounds().min_colour();
    const int colours = a.bounds().colour_count();
    std::vector<std::vector<int>> delta(static_cast<std::size_t>(colours), std::vector<int>(n + 1, won));
    for (int c = 0; c < colours; ++c) {
        for (int q = 0; q < n; ++q) {
            const auto r = a.step(states[q], lo + c);
            if (r.is_won()) continue;
            auto it = std::lower_bound(states.begin(), states.end(), r);
            if (it == states.end() || !(*it == r))
                throw std::logic_error("automaton step left its statespace: " + r.to_string());
            delta[c][q] = static_cast<int>(it - states.begin());
        }
    }
    const auto blank = std::lower_bound(states.begin(), states.end(), a.initial()) - states.begin();

    std::vector<bool> t0(n + 1, false);
    t0[won] = true;
    auto pre = [&](const std::vector<bool>& t, int d) {
        std::vector<bool> out(n + 1, false);
        const auto& row = delta[d - lo];
        for (int q = 0; q <= n; ++q) out[q] = t[row[q]];
        return out;
    };
    return explore_product(
        g, t0, pre, [&](const std::vector<bool>& t) { return static_cast<bool>(t[blank]); }, opt.node_cap, stats);
}

// ---------------------------------------------------------------------------

WinningSets solve_lifting(const ParityGame& g, Variant v, const Bounds& bounds, const LiftingOptions& opt,
                          SolveStats* stats)
{
    check_game_in_bounds(g, bounds);
    bool fast = false;
    try {
        (void)au_reference(bounds.initial(), bounds.min_colour(), v, bounds, opt.reference_cap);
    } catch (const CapExceeded&) {
        fast = true;
    }
    auto au = [&](const Witness& b, int d) {
        return fast ? au_fast(b, d, v, bounds) : au_reference(b, d, v, bounds, opt.reference_cap);
    };

    const int n = g.size();
    std::vector<Witness> mu(n, bounds.initial());
    std::deque<int> work;
    std::vector<bool> queued(n, true);
    for (int x = 0; x < n; ++x) work.push_back(x);
    std::uint64_t lifts = 0;
    while (!work.empty()) {
        const int x = work.front();
        work.pop_front();
        queued[x] = false;
        const bool even = g.owner(x) == Player::Even;
        std::optional<Witness> best;
        for (int w : g.successors(x)) {
            Witness cand = au(mu[w], g.colour(x));
            if (!best)
                best = std::move(cand);
            else
                best = even ? witness_max(*best, cand) : witness_min(*best, cand);
        }
        if (witness_cmp(*best, mu[x]) != Cmp::Greater) continue;
        mu[x] = *best;
        ++lifts;
        for (int u : g.predecessors(x))
            if (!queued[u]) {
                queued[u] = true;
                work.push_back(u);
            }
    }
    if (stats) stats->steps += lifts;
    WinningSets ws;
    ws.winner.resize(n);
    for (int x = 0; x < n; ++x) ws.winner[x] = mu[x].is_won() ? Player::Even : Player::Odd;
    return ws;
}

// ---------------------------------------------------------------------------

std::optional<Bounds> bounds_for(const ParityGame& g, std::optional<std::int64_t> e)
{
    if (g.min_colour() < 1) throw GameError("colours must be positive; normalize the game first");
    const std::int64_t budget = e ? *e : static_cast<std::int64_t>(g.even_vertex_count());
    if (budget < 0) throw std::invalid_argument("even-chain budget must be non-negative");
    if (budget == 0) return std::nullopt;
    const int lo = g.min_colour() % 2 != 0 ? 1 : 2;
    return Bounds(lo, std::max(g.max_colour(), lo), budget);
}

Algorithm parse_algorithm(const std::string& s)
{
    if (s == "zielonka") return Algorithm::Zielonka;
    if (s == "product") return Algorithm::Product;
    if (s == "lifting") return Algorithm::Lifting;
    throw std::invalid_argument("unknown algorithm '" + s + "'");
}

WinningSets solve(const ParityGame& g, const SolveRequest& req, SolveStats* stats)
{
    if (req.algorithm == Algorithm::Zielonka) return zielonka(g, stats);
    const auto b = bounds_for(g, req.e);
    if (!b) {
        WinningSets ws;
        ws.winner.assign(g.size(), Player::Odd);
        return ws;
    }
    if (req.algorithm == Algorithm::Product)
        return solve_product(g, SepAutomaton(*b, req.variant, req.update, req.statespace_cap), req.product, stats);
    LiftingOptions lo;
    lo.reference_cap = std::min(lo.reference_cap, req.statespace_cap);
    return solve_lifting(g, req.variant, *b, lo, stats);
}

}  // namespace pgsep
