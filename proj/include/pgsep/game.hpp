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
#include <istream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgsep {

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }
const char* to_string(Player p);

/// Structural violation of the game invariants (no successor, dangling edge, ...).
class GameError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax or consistency error in a PGSolver file; carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/**
 * A parity game (V_e, V_o, E, phi). Vertices are addressed by dense indices
 * 0..n-1; the external PGSolver identifiers are kept alongside. Successor
 * lists are sorted and duplicate-free, so two games compare equal iff they
 * describe the same edge relation.
 *
 * Immutable after construction.
 */
class ParityGame {
public:
    ParityGame() = default;
    ParityGame(std::vector<Player> owners, std::vector<int> colours,
               std::vector<std::vector<int>> successors, std::vector<int> ids = {},
               std::vector<std::string> names = {});

    int size() const { return static_cast<int>(owners_.size()); }
    Player owner(int v) const { return owners_[v]; }
    int colour(int v) const { return colours_[v]; }
    int id(int v) const { return ids_[v]; }
    const std::string& name(int v) const { return names_[v]; }
    std::span<const int> successors(int v) const { return succ_[v]; }
    std::span<const int> predecessors(int v) const { return pred_[v]; }
    const std::vector<int>& colours() const { return colours_; }

    int min_colour() const;
    int max_colour() const;
    /// Number of vertices with an even colour.
    std::uint64_t even_vertex_count() const;
    /// True iff every colour is positive and min colour is 1 or 2.
    bool has_normalized_colours() const;
    /// Same structure with a new colouring.
    ParityGame recoloured(std::vector<int> colours) const;

    bool operator==(const ParityGame& other) const;

private:
    std::vector<Player> owners_;
    std::vector<int> colours_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<int>> pred_;
    std::vector<int> ids_;
    std::vector<std::string> names_;
};

/// Parses the PGSolver exchange format. Throws ParseError.
ParityGame parse_pgsolver(std::istream& in);
ParityGame parse_pgsolver(std::string_view text);

/// Header, one vertex per line, successors ascending, LF endings.
std::string serialize_pgsolver(const ParityGame& g);

struct NormalizedGame {
    ParityGame game;
    std::map<int, int> mapping;  // old colour -> new colour
};

/**
 * Parity- and order-preserving compression of the colours onto a range
 * starting at 1 or 2. Idempotent.
 */
NormalizedGame normalize_colours(const ParityGame& g);

struct RandomGameConfig {
    int vertices = 1;
    int max_colour = 2;
    int min_degree = 1;
    int max_degree = 1;
    std::uint64_t seed = 0;
};

/// Uniform owners and colours in 1..max_colour, distinct successors. Deterministic in seed.
ParityGame generate_random(const RandomGameConfig& cfg);

/// Human-readable list of violated game invariants; empty when valid.
std::vector<std::string> invariant_violations(const ParityGame& g);

/// Consecutive vertices of the prefix are edges of g.
bool is_play_prefix(const ParityGame& g, std::span<const int> vertices);
std::vector<int> play_colours(const ParityGame& g, std::span<const int> vertices);

/// Length of the longest even chain in a finite colour sequence (0 if none).
int longest_even_chain(std::span<const int> colours);

}  // namespace pgsep
