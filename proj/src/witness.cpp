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

#include "pgsep/witness.hpp"

#include <charconv>
#include <set>

namespace pgsep {

bool entry_geq(Entry a, Entry b)
{
    if (b == kBlank) return true;
    if (a == kBlank) return false;
    const bool ae = a % 2 == 0, be = b % 2 == 0;
    if (ae) return !be || a >= b;
    return !be && a <= b;
}

Witness::Witness(std::vector<Entry> msf) : e_(std::move(msf))
{
    for (Entry x : e_)
        if (x < 0) throw std::invalid_argument("negative witness entry");
}

Witness Witness::blank(int length)
{
    if (length < 1) throw std::invalid_argument("witness length must be positive");
    return Witness(std::vector<Entry>(static_cast<std::size_t>(length), kBlank));
}

Witness Witness::won()
{
    Witness w;
    w.won_ = true;
    return w;
}

Witness Witness::parse(std::string_view text)
{
    if (text == "Won") return won();
    std::vector<Entry> out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok == "_") {
            out.push_back(kBlank);
        } else {
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size() || v < 1)
                throw std::invalid_argument("bad witness entry '" + std::string(tok) + "'");
            out.push_back(v);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Witness(std::move(out));
}

bool Witness::all_blank() const
{
    if (won_) return false;
    for (Entry x : e_)
        if (x != kBlank) return false;
    return true;
}

std::string Witness::to_string() const
{
    if (won_) return "Won";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ',';
        s += e_[i] == kBlank ? std::string("_") : std::to_string(e_[i]);
    }
    return s;
}

bool Witness::operator<(const Witness& o) const { return witness_cmp(*this, o) == Cmp::Less; }

Cmp witness_cmp(const Witness& b, const Witness& c)
{
    if (b.is_won() || c.is_won()) {
        if (b.is_won() && c.is_won()) return Cmp::Equal;
        return b.is_won() ? Cmp::Greater : Cmp::Less;
    }
    if (b.length() != c.length()) throw std::invalid_argument("comparing witnesses of different length");
    const auto& x = b.entries();
    const auto& y = c.entries();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == y[i]) continue;
        return entry_geq(x[i], y[i]) ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
}

const Witness& witness_max(const Witness& a, const Witness& b)
{
    return witness_cmp(a, b) == Cmp::Less ? b : a;
}

const Witness& witness_min(const Witness& a, const Witness& b)
{
    return witness_cmp(a, b) == Cmp::Greater ? b : a;
}

std::uint64_t val(const Witness& b)
{
    if (b.is_won()) throw std::invalid_argument("val of Won");
    if (b.length() > 63) throw std::invalid_argument("witness too long for val");
    std::uint64_t v = 0;
    for (int i = b.length() - 1; i >= 0; --i) {
        const Entry x = b.at(i);
        if (x == kBlank) continue;
        v += std::uint64_t{1} << i;
        if (x % 2 != 0) break;  // positions below the highest odd one do not count
    }
    return v;
}

std::vector<int> even_positions(const Witness& b)
{
    std::vector<int> out;
    if (b.is_won()) return out;
    for (int i = b.length() - 1; i >= 0; --i)
        if (b.at(i) != kBlank && b.at(i) % 2 == 0) out.push_back(i);
    return out;
}

Witness truncate1(const Witness& b)
{
    if (b.is_won()) return b;
    std::vector<Entry> e = b.entries();
    std::set<Entry> seen;
    for (Entry& x : e) {
        if (x == kBlank || x % 2 == 0) continue;
        if (!seen.insert(x).second) x = kBlank;
    }
    return Witness(std::move(e));
}

bool is_concise(const Witness& b)
{
    if (b.is_won()) return true;
    std::set<Entry> seen;
    for (Entry x : b.entries())
        if (x != kBlank && x % 2 != 0 && !seen.insert(x).second) return false;
    return true;
}

Bounds::Bounds(int min_colour, int max_colour, std::int64_t e) : min_(min_colour), max_(max_colour), e_(e)
{
    if (min_ != 1 && min_ != 2) throw std::invalid_argument("minimal colour must be 1 or 2");
    if (max_ < min_) throw std::invalid_argument("maximal colour below minimal colour");
    if (e_ < 1) throw std::invalid_argument("even-chain budget must be at least 1");
    k_ = 0;
    while ((std::int64_t{2} << k_) <= e_) ++k_;
}

void Bounds::check_colour(int d) const
{
    if (!in_colours(d))
        throw std::invalid_argument("colour " + std::to_string(d) + " outside " + std::to_string(min_) + ".." +
                                    std::to_string(max_));
}

bool Bounds::operator<(const Bounds& o) const
{
    if (min_ != o.min_) return min_ < o.min_;
    if (max_ != o.max_) return max_ < o.max_;
    return e_ < o.e_;
}

}  // namespace pgsep
