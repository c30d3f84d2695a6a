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

#include "pgsep/statespace.hpp"

#include <algorithm>

namespace pgsep {

const char* to_string(Statespace s)
{
    switch (s) {
    case Statespace::OriginalLength: return "original";
    case Statespace::ClassicValueCapped: return "classic";
    case Statespace::Concise: return "concise";
    }
    return "?";
}

std::vector<Entry> statespace_entries(const Bounds& bounds, Statespace s)
{
    std::vector<Entry> out{kBlank};
    const int lo = s == Statespace::OriginalLength ? bounds.min_colour() : std::max(2, bounds.min_colour());
    const int hi = s == Statespace::OriginalLength ? bounds.max_colour() : bounds.cminus_max();
    for (int c = hi; c >= lo; --c)
        if (c % 2 != 0) out.push_back(c);
    for (int c = lo; c <= hi; ++c)
        if (c % 2 == 0) out.push_back(c);
    return out;
}

bool prefix_feasible(std::span<const Entry> msf_prefix, const Bounds& bounds, Statespace s)
{
    const int len = bounds.length();
    if (static_cast<int>(msf_prefix.size()) > len) return false;
    const bool capped = s != Statespace::OriginalLength;
    const int lo = capped ? std::max(2, bounds.min_colour()) : bounds.min_colour();
    const int hi = capped ? bounds.cminus_max() : bounds.max_colour();

    Entry last = kBlank;
    std::uint64_t value = 0;
    bool odd_seen = false;
    std::vector<Entry> odds;
    for (std::size_t p = 0; p < msf_prefix.size(); ++p) {
        const Entry x = msf_prefix[p];
        const int index = len - 1 - static_cast<int>(p);
        if (x == kBlank) continue;
        if (x < lo || x > hi) return false;
        if (last != kBlank && x > last) return false;
        if (s == Statespace::Concise && x % 2 != 0) {
            if (std::find(odds.begin(), odds.end(), x) != odds.end()) return false;
            odds.push_back(x);
        }
        if (capped && index == 0 && x % 2 != 0) return false;
        if (!odd_seen) {
            value += std::uint64_t{1} << index;
            odd_seen = x % 2 != 0;
        }
        last = x;
    }
    return !capped || value <= static_cast<std::uint64_t>(bounds.e());
}

bool in_statespace(const Witness& b, const Bounds& bounds, Statespace s)
{
    if (b.is_won() || b.length() != bounds.length()) return false;
    return prefix_feasible(b.entries(), bounds, s);
}

namespace {

void extend(std::vector<Entry>& prefix, const std::vector<Entry>& alphabet, const Bounds& bounds, Statespace s,
            std::size_t cap, std::vector<Witness>& out)
{
    if (static_cast<int>(prefix.size()) == bounds.length()) {
        if (out.size() >= cap)
            throw CapExceeded("statespace exceeds cap of " + std::to_string(cap) + " witnesses");
        out.emplace_back(prefix);
        return;
    }
    // alphabet is in ascending ⪰ order, so the output is produced sorted
    for (Entry x : alphabet) {
        prefix.push_back(x);
        if (prefix_feasible(prefix, bounds, s)) extend(prefix, alphabet, bounds, s, cap, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Witness> enumerate_statespace(const Bounds& bounds, Statespace s, std::size_t cap)
{
    std::vector<Witness> out;
    std::vector<Entry> prefix;
    prefix.reserve(static_cast<std::size_t>(bounds.length()));
    extend(prefix, statespace_entries(bounds, s), bounds, s, cap, out);
    return out;
}

}  // namespace pgsep
