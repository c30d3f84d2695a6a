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

#include "pgsep/semantics.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace pgsep {

namespace {

struct Prefix {
    std::vector<int> col;
    int m;
    // chain[s][q]: longest even chain ending at q with all positions >= s (0 if none)
    std::vector<std::vector<int>> chain;
    // range_max[p][q]: max colour in [p, q]
    std::vector<std::vector<int>> range_max;

    explicit Prefix(std::span<const int> colours, int cap)
        : col(colours.begin(), colours.end()), m(static_cast<int>(colours.size()))
    {
        if (m > cap)
            throw CapExceeded("play prefix of length " + std::to_string(m) + " exceeds checker cap " +
                              std::to_string(cap));
        range_max.assign(m, std::vector<int>(m, 0));
        for (int p = 0; p < m; ++p) {
            int mx = col[p];
            for (int q = p; q < m; ++q) range_max[p][q] = mx = std::max(mx, col[q]);
        }
        chain.assign(m + 1, std::vector<int>(m, 0));
        for (int s = 0; s < m; ++s) {
            for (int q = s; q < m; ++q) {
                if (col[q] % 2 != 0) continue;
                int best = 1;
                for (int p = s; p < q; ++p)
                    if (chain[s][p] > 0 && linked(p, q)) best = std::max(best, chain[s][p] + 1);
                chain[s][q] = best;
            }
        }
    }

    bool linked(int p, int q) const { return range_max[p][q] <= std::max(col[p], col[q]); }

    /// Every colour from q to the end is at most col[q].
    bool dominates_tail(int q) const { return range_max[q][m - 1] <= col[q]; }

    /// Longest even chain inside [s, q) that can be closed by the position q.
    int chain_into(int s, int q) const
    {
        if (col[q] % 2 == 0) return chain[s][q];
        int best = 0;
        for (int p = s; p < q; ++p)
            if (chain[s][p] > 0 && linked(p, q)) best = std::max(best, chain[s][p]);
        return best;
    }
};

}  // namespace

bool is_classic_witness(const Witness& b, std::span<const int> colours, int cap)
{
    if (b.is_won()) throw std::invalid_argument("semantic check of Won");
    const Prefix pr(colours, cap);
    // Choosing the earliest feasible end for every entry is optimal: later
    // entries only need to start after it.
    int start = 0;
    for (int i = b.length() - 1; i >= 0; --i) {
        const Entry x = b.at(i);
        if (x == kBlank) continue;
        if (i >= 31) return false;
        const int need = 1 << i;
        int found = -1;
        for (int q = start; q < pr.m && found < 0; ++q) {
            if (pr.col[q] != x || !pr.dominates_tail(q)) continue;
            if (pr.chain_into(start, q) >= need) found = q;
        }
        if (found < 0) return false;
        start = found + 1;
    }
    return true;
}

namespace {

struct ColourSearch {
    const Prefix& pr;
    std::vector<int> colours;         // present colours, descending
    std::map<int, std::uint64_t> need;  // required sum for the unblocked range starting at a colour
    std::vector<int> len;

    bool feasible() const
    {
        // For each present colour c, lengths of colours in [c, next odd above c) must cover
        // the positions those colours occupy.
        for (std::size_t a = 0; a < colours.size(); ++a) {
            std::uint64_t total = 0;
            for (std::size_t z = a + 1; z-- > 0;) {
                if (z < a && colours[z] % 2 != 0) break;
                total += static_cast<std::uint64_t>(len[z]);
            }
            if (total < need.at(colours[a])) return false;
        }
        return true;
    }

    bool search(std::size_t a, int start)
    {
        if (a == colours.size()) return feasible();
        const int c = colours[a];
        for (int q = start; q < pr.m; ++q) {
            if (pr.col[q] != c || !pr.dominates_tail(q)) continue;
            len[a] = pr.chain_into(start, q);
            if (search(a + 1, q + 1)) return true;
        }
        return false;
    }
};

}  // namespace

bool is_colour_witness(const Witness& b, std::span<const int> colours, int cap)
{
    if (b.is_won()) throw std::invalid_argument("semantic check of Won");
    const Prefix pr(colours, cap);

    std::map<int, std::uint64_t, std::greater<>> weight;  // colour -> sum of 2^position
    for (int i = b.length() - 1; i >= 0; --i) {
        const Entry x = b.at(i);
        if (x == kBlank) continue;
        if (i >= 63) return false;
        weight[x] += std::uint64_t{1} << i;
    }
    ColourSearch cs{pr, {}, {}, {}};
    for (auto [c, w] : weight) cs.colours.push_back(c);
    for (std::size_t a = 0; a < cs.colours.size(); ++a) {
        std::uint64_t total = 0;
        for (std::size_t z = a + 1; z-- > 0;) {
            if (z < a && cs.colours[z] % 2 != 0) break;
            total += weight[cs.colours[z]];
        }
        cs.need[cs.colours[a]] = total;
    }
    cs.len.assign(cs.colours.size(), 0);
    return cs.search(0, 0);
}

}  // namespace pgsep
