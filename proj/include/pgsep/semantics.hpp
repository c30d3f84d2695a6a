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

#include <span>

#include "pgsep/witness.hpp"

namespace pgsep {

inline constexpr int kDefaultPrefixCap = 14;

/**
 * Exhaustive checkers for the two witness semantics over the colour sequence
 * of a play prefix. Throw CapExceeded for prefixes longer than cap.
 */
bool is_classic_witness(const Witness& b, std::span<const int> colours, int cap = kDefaultPrefixCap);
bool is_colour_witness(const Witness& b, std::span<const int> colours, int cap = kDefaultPrefixCap);

}  // namespace pgsep
