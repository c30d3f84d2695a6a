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

#include <string>

#include "pgsep/statespace.hpp"
#include "pgsep/witness.hpp"

namespace pgsep {

enum class Variant { Classic, Concise, Colour };

const char* to_string(Variant v);
Variant parse_variant(const std::string& s);
/// 𝕎 for Classic, ℂ otherwise.
Statespace statespace_of(Variant v);

/// Which branch of the raw update produced a result.
enum class Rule {
    Absorb,       // input was Won
    Reset,        // d = max C and odd
    Overflow,     // classic, d even
    CarryOut,     // d even and every entry even: Won
    Local,        // classic, some entry below d
    Stale,        // nothing to do
    OddLocal,     // colour, d odd
    EvenLocal,    // colour, d even with an odd entry below d
    EvenOverflow  // colour, d even otherwise
};

const char* to_string(Rule r);

struct RawUpdate {
    Witness result;
    Rule rule;
    int index;  // the j of the rule, -1 if none
};

RawUpdate explain_classic(const Witness& b, int d, const Bounds& bounds);
RawUpdate explain_colour(const Witness& b, int d, const Bounds& bounds);

Witness ru_classic(const Witness& b, int d, const Bounds& bounds);
Witness ru_concise(const Witness& b, int d, const Bounds& bounds);
Witness ru_colour(const Witness& b, int d, const Bounds& bounds);
Witness ru(Variant v, const Witness& b, int d, const Bounds& bounds);

/// Raw update replaced by Won when its value exceeds e. Won is absorbing.
Witness up_capped(const Witness& b, int d, Variant v, const Bounds& bounds);

/// Minimum of up_capped over all c ⊒ b of the variant's statespace, by enumeration.
/// Throws CapExceeded when the statespace is larger than cap.
Witness au_reference(const Witness& b, int d, Variant v, const Bounds& bounds,
                     std::size_t cap = kDefaultStatespaceCap);

/// Same function as au_reference, computed by a pruned search that never materializes the statespace.
Witness au_fast(const Witness& b, int d, Variant v, const Bounds& bounds);

}  // namespace pgsep
