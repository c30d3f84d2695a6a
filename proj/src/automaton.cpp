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

#include "pgsep/automaton.hpp"

#include <sstream>

#include "pgsep/solvers.hpp"

namespace pgsep {

const char* to_string(UpdateKind k) { return k == UpdateKind::Basic ? "basic" : "antagonistic"; }

UpdateKind parse_update_kind(const std::string& s)
{
    if (s == "basic") return UpdateKind::Basic;
    if (s == "antagonistic") return UpdateKind::Antagonistic;
    throw std::invalid_argument("unknown update kind '" + s + "'");
}

SepAutomaton::SepAutomaton(Bounds bounds, Variant variant, UpdateKind kind, std::size_t statespace_cap)
    : bounds_(bounds), variant_(variant), kind_(kind), cap_(statespace_cap)
{
    if (kind_ == UpdateKind::Antagonistic) {
        try {
            (void)au_reference(initial(), bounds_.min_colour(), variant_, bounds_, cap_);
        } catch (const CapExceeded&) {
            fast_ = true;
        }
    }
}

Witness SepAutomaton::step(const Witness& q, int d) const
{
    if (kind_ == UpdateKind::Basic) return up_capped(q, d, variant_, bounds_);
    return fast_ ? au_fast(q, d, variant_, bounds_) : au_reference(q, d, variant_, bounds_, cap_);
}

std::vector<Witness> SepAutomaton::states() const
{
    return enumerate_statespace(bounds_, statespace_of(variant_), cap_);
}

std::optional<std::size_t> Trace::accept_step() const
{
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].is_won()) return i;
    return std::nullopt;
}

Trace run_word(const SepAutomaton& a, std::span<const int> word)
{
    for (int d : word) a.bounds().check_colour(d);
    Trace t;
    t.word.assign(word.begin(), word.end());
    t.states.push_back(a.initial());
    for (int d : word) t.states.push_back(a.step(t.states.back(), d));
    return t;
}

std::string format_trace(const Trace& t)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < t.word.size(); ++i)
        out << t.states[i].to_string() << " -> (" << t.word[i] << ") -> " << t.states[i + 1].to_string() << '\n';
    return out.str();
}

SeparationReport check_separation(const SepAutomaton& a, const std::vector<ParityGame>& games, Direction direction)
{
    SeparationReport rep;
    for (std::size_t gi = 0; gi < games.size(); ++gi) {
        const auto& g = games[gi];
        ++rep.games;
        const auto tag = "game " + std::to_string(gi) + ": ";
        if (g.min_colour() < a.bounds().min_colour() || g.max_colour() > a.bounds().max_colour() ||
            static_cast<std::int64_t>(g.even_vertex_count()) > a.bounds().e()) {
            rep.failures.push_back(tag + "outside the automaton's bounds");
            continue;
        }
        const auto oracle = zielonka(g);
        ProductOptions opt;
        opt.direction = direction;
        const auto got = solve_product(g, a, opt);
        for (int v = 0; v < g.size(); ++v) {
            ++rep.vertices;
            if (got.winner[v] != oracle.winner[v])
                rep.failures.push_back(tag + "vertex " + std::to_string(g.id(v)) + " product says " +
                                       to_string(got.winner[v]) + ", oracle says " + to_string(oracle.winner[v]));
        }
    }
    return rep;
}

}  // namespace pgsep
