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

#include <cstddef>
#include <span>
#include <vector>

#include "pgsep/witness.hpp"

namespace pgsep {

enum class Statespace {
    OriginalLength,      // monotone over C ∪ {_}, length only
    ClassicValueCapped,  // 𝕎: over C⁻ without 1, b_0 even or _, val <= e
    Concise,             // ℂ: 𝕎 with every odd colour at most once
};

const char* to_string(Statespace s);

inline constexpr std::size_t kDefaultStatespaceCap = 1'000'000;

/// Colours usable as entries, in ascending ⪰ order (Blank first).
std::vector<Entry> statespace_entries(const Bounds& bounds, Statespace s);

/**
 * Whether the leading entries (b_k downwards, msf order) can be completed to a
 * member of the statespace. Padding with blanks is always the cheapest completion.
 */
bool prefix_feasible(std::span<const Entry> msf_prefix, const Bounds& bounds, Statespace s);

bool in_statespace(const Witness& b, const Bounds& bounds, Statespace s);

/// Sorted ascending, duplicate-free, Won excluded. Throws CapExceeded.
std::vector<Witness> enumerate_statespace(const Bounds& bounds, Statespace s,
                                          std::size_t cap = kDefaultStatespaceCap);

}  // namespace pgsep
