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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgsep/game.hpp"
#include "pgsep/update.hpp"

namespace pgsep {

enum class UpdateKind { Basic, Antagonistic };
enum class Direction { Forward, Backward };

const char* to_string(UpdateKind k);
UpdateKind parse_update_kind(const std::string& s);

/**
 * Deterministic reachability automaton over the colours of bounds: states are
 * witnesses of the variant, initial state all-Blank, target Won.
 */
class SepAutomaton {
public:
    SepAutomaton(Bounds bounds, Variant variant, UpdateKind kind,
                 std::size_t statespace_cap = kDefaultStatespaceCap);

    const Bounds& bounds() const { return bounds_; }
    Variant variant() const { return variant_; }
    UpdateKind kind() const { return kind_; }
    std::size_t statespace_cap() const { return cap_; }

    Witness initial() const { return bounds_.initial(); }
    /// up_capped or au of the variant. Antagonistic steps use the enumerated
    /// statespace when it fits under the cap and the pruned search otherwise.
    Witness step(const Witness& q, int d) const;
    /// Explicit state list (sorted, Won excluded). Throws CapExceeded.
    std::vector<Witness> states() const;

private:
    Bounds bounds_;
    Variant variant_;
    UpdateKind kind_;
    std::size_t cap_;
    bool fast_ = false;
};

struct Trace {
    std::vector<int> word;
    std::vector<Witness> states;  // |word| + 1 states
    bool accepted() const { return !states.empty() && states.back().is_won(); }
    /// Number of letters read when Won was first reached.
    std::optional<std::size_t> accept_step() const;
};

Trace run_word(const SepAutomaton& a, std::span<const int> word);

/// One `state -> (colour) -> state` line per step.
std::string format_trace(const Trace& t);

struct SeparationReport {
    std::size_t games = 0;
    std::size_t vertices = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Product-game winners of the automaton against the recursive oracle on every vertex.
SeparationReport check_separation(const SepAutomaton& a, const std::vector<ParityGame>& games,
                                  Direction direction = Direction::Forward);

}  // namespace pgsep
