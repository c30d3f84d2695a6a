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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgsep/automaton.hpp"
#include "pgsep/game.hpp"

namespace pgsep {

struct WinningSets {
    std::vector<Player> winner;  // per vertex
    std::vector<int> won_by(Player p) const;
    bool operator==(const WinningSets& o) const { return winner == o.winner; }
};

struct SolveStats {
    std::uint64_t steps = 0;  // recursive calls, product nodes, or successful lifts
};

/// Least superset of target closed under the attractor rules, inside mask (all vertices if empty).
std::vector<bool> attractor(const ParityGame& g, const std::vector<bool>& target, Player player,
                            const std::vector<bool>& mask = {});

WinningSets zielonka(const ParityGame& g, SolveStats* stats = nullptr);

struct ProductOptions {
    Direction direction = Direction::Forward;
    std::size_t node_cap = 2'000'000;
};

/**
 * Reachability game on (vertex, automaton state) pairs. Moving from v reads
 * the colour of v. Forward mode runs the automaton on the play; backward mode
 * tracks the set of states from which the reversed prefix reaches Won and
 * needs the explicit statespace. Throws CapExceeded.
 */
WinningSets solve_product(const ParityGame& g, const SepAutomaton& a, const ProductOptions& opt = {},
                          SolveStats* stats = nullptr);

struct LiftingOptions {
    /// Statespaces up to this size use the enumerated antagonistic update.
    std::size_t reference_cap = 50'000;
};

/// Least fixpoint of the antagonistic lifting from all-Blank; Even wins where the measure is Won.
WinningSets solve_lifting(const ParityGame& g, Variant v, const Bounds& bounds, const LiftingOptions& opt = {},
                          SolveStats* stats = nullptr);

/// Colour set of g with the budget e (default: even-coloured vertices). Empty when e = 0.
std::optional<Bounds> bounds_for(const ParityGame& g, std::optional<std::int64_t> e = std::nullopt);

enum class Algorithm { Zielonka, Product, Lifting };
Algorithm parse_algorithm(const std::string& s);

struct SolveRequest {
    Algorithm algorithm = Algorithm::Zielonka;
    Variant variant = Variant::Colour;
    UpdateKind update = UpdateKind::Basic;
    std::optional<std::int64_t> e;
    std::size_t statespace_cap = kDefaultStatespaceCap;
    ProductOptions product;
};

/// Dispatch with the e = 0 shortcut (Odd wins everywhere). g must have normalized colours.
WinningSets solve(const ParityGame& g, const SolveRequest& req, SolveStats* stats = nullptr);

// ---------------------------------------------------------------------------

struct DifferentialConfig {
    std::uint64_t seed_begin = 0;
    std::uint64_t seed_end = 0;  // exclusive
    int min_vertices = 1;
    int max_vertices = 12;
    int max_colour = 6;
    int min_degree = 1;
    int max_degree = 3;
};

struct MethodResult {
    std::string name;
    std::vector<Player> winner;
    std::uint64_t steps = 0;
};

struct DifferentialRow {
    std::uint64_t seed = 0;
    int vertices = 0;
    int colours = 0;  // max colour of the game
    std::vector<MethodResult> methods;  // zielonka first
    bool agree = true;
};

struct DifferentialReport {
    std::vector<DifferentialRow> rows;
    std::size_t disagreements() const;
    std::string to_csv() const;
};

/// Names of the ten compared methods, in report order.
std::vector<std::string> differential_methods();

DifferentialReport differential(const DifferentialConfig& cfg);

}  // namespace pgsep
