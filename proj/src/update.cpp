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

#include "pgsep/update.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace pgsep {

const char* to_string(Variant v)
{
    switch (v) {
    case Variant::Classic: return "classic";
    case Variant::Concise: return "concise";
    case Variant::Colour: return "colour";
    }
    return "?";
}

Variant parse_variant(const std::string& s)
{
    if (s == "classic") return Variant::Classic;
    if (s == "concise") return Variant::Concise;
    if (s == "colour" || s == "color") return Variant::Colour;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

Statespace statespace_of(Variant v)
{
    return v == Variant::Classic ? Statespace::ClassicValueCapped : Statespace::Concise;
}

const char* to_string(Rule r)
{
    switch (r) {
    case Rule::Absorb: return "absorb";
    case Rule::Reset: return "reset";
    case Rule::Overflow: return "overflow";
    case Rule::CarryOut: return "carry-out";
    case Rule::Local: return "local";
    case Rule::Stale: return "stale";
    case Rule::OddLocal: return "odd-local";
    case Rule::EvenLocal: return "even-local";
    case Rule::EvenOverflow: return "even-overflow";
    }
    return "?";
}

namespace {

bool is_even(Entry x) { return x != kBlank && x % 2 == 0; }
bool is_odd(Entry x) { return x != kBlank && x % 2 != 0; }

void check_input(const Witness& b, int d, const Bounds& bounds)
{
    bounds.check_colour(d);
    if (!b.is_won() && b.length() != bounds.length())
        throw std::invalid_argument("witness length " + std::to_string(b.length()) + " does not match bounds (" +
                                    std::to_string(bounds.length()) + ")");
}

/// Lowest index whose entry is not even, or -1.
int lowest_not_even(const Witness& b)
{
    for (int i = 0; i < b.length(); ++i)
        if (!is_even(b.at(i))) return i;
    return -1;
}

Witness keep_above(const Witness& b, int j, Entry at_j)
{
    Witness c = b;
    c.set(j, at_j);
    for (int i = 0; i < j; ++i) c.set(i, kBlank);
    return c;
}

}  // namespace

RawUpdate explain_classic(const Witness& b, int d, const Bounds& bounds)
{
    check_input(b, d, bounds);
    if (b.is_won()) return {b, Rule::Absorb, -1};
    const int L = b.length();
    if (d == bounds.reset_colour()) return {Witness::blank(L), Rule::Reset, -1};

    if (d % 2 == 0) {
        const int j = lowest_not_even(b);
        if (j < 0) return {Witness::won(), Rule::CarryOut, -1};
        bool above_ok = true;
        for (int i = j + 1; i < L; ++i)
            if (b.at(i) != kBlank && b.at(i) < d) above_ok = false;
        if (above_ok) return {keep_above(b, j, d), Rule::Overflow, j};
    }
    for (int j = L - 1; j >= 0; --j) {
        if (b.at(j) != kBlank && b.at(j) < d) return {keep_above(b, j, j == 0 ? kBlank : d), Rule::Local, j};
    }
    return {b, Rule::Stale, -1};
}

RawUpdate explain_colour(const Witness& b, int d, const Bounds& bounds)
{
    check_input(b, d, bounds);
    if (b.is_won()) return {b, Rule::Absorb, -1};
    const int L = b.length();
    if (d == bounds.reset_colour()) return {Witness::blank(L), Rule::Reset, -1};

    if (d % 2 != 0) {
        for (int j = L - 1; j >= 0; --j)
            if (b.at(j) != kBlank && b.at(j) <= d) return {keep_above(b, j, j == 0 ? kBlank : d), Rule::OddLocal, j};
        return {b, Rule::Stale, -1};
    }

    int j = -1;
    for (int i = L - 1; i >= 0 && j < 0; --i)
        if (is_odd(b.at(i)) && b.at(i) < d) j = i;
    if (j >= 0) {
        Witness c = b;
        for (int i = j; i < L; ++i)
            if (c.at(i) != kBlank && c.at(i) < d) c.set(i, d);
        for (int i = 1; i < j; ++i) c.set(i, kBlank);
        c.set(0, d);
        return {c, Rule::EvenLocal, j};
    }

    j = lowest_not_even(b);
    if (j < 0) return {Witness::won(), Rule::CarryOut, -1};
    Witness c = b;
    for (int i = j + 1; i < L; ++i)
        if (c.at(i) != kBlank && c.at(i) <= d) c.set(i, d);
    return {keep_above(c, j, d), Rule::EvenOverflow, j};
}

Witness ru_classic(const Witness& b, int d, const Bounds& bounds) { return explain_classic(b, d, bounds).result; }

Witness ru_concise(const Witness& b, int d, const Bounds& bounds)
{
    return truncate1(explain_classic(b, d, bounds).result);
}

Witness ru_colour(const Witness& b, int d, const Bounds& bounds) { return explain_colour(b, d, bounds).result; }

Witness ru(Variant v, const Witness& b, int d, const Bounds& bounds)
{
    switch (v) {
    case Variant::Classic: return ru_classic(b, d, bounds);
    case Variant::Concise: return ru_concise(b, d, bounds);
    case Variant::Colour: return ru_colour(b, d, bounds);
    }
    throw std::logic_error("bad variant");
}

namespace {

Witness cap_value(Witness r, const Bounds& bounds)
{
    if (r.is_won() || val(r) > static_cast<std::uint64_t>(bounds.e())) return Witness::won();
    return r;
}

}  // namespace

Witness up_capped(const Witness& b, int d, Variant v, const Bounds& bounds)
{
    if (b.is_won()) {
        bounds.check_colour(d);
        return b;
    }
    return cap_value(ru(v, b, d, bounds), bounds);
}

// ---------------------------------------------------------------------------
// Reference antagonistic update

namespace {

struct AuTable {
    std::vector<Witness> states;
    std::vector<std::vector<Witness>> suffix_min;  // [d - min_colour][rank], last slot is Won
};

std::mutex au_mutex;
std::map<std::tuple<Bounds, Variant, std::size_t>, std::shared_ptr<const AuTable>> au_cache;

std::shared_ptr<const AuTable> au_table(const Bounds& bounds, Variant v, std::size_t cap)
{
    const auto key = std::make_tuple(bounds, v, cap);
    {
        std::lock_guard<std::mutex> lock(au_mutex);
        auto it = au_cache.find(key);
        if (it != au_cache.end()) return it->second;
    }
    auto t = std::make_shared<AuTable>();
    t->states = enumerate_statespace(bounds, statespace_of(v), cap);
    const std::size_t n = t->states.size();
    for (int d = bounds.min_colour(); d <= bounds.max_colour(); ++d) {
        auto& sm = t->suffix_min.emplace_back(n + 1, Witness::won());
        for (std::size_t r = n; r-- > 0;) sm[r] = witness_min(up_capped(t->states[r], d, v, bounds), sm[r + 1]);
    }
    std::lock_guard<std::mutex> lock(au_mutex);
    return au_cache.emplace(key, std::move(t)).first->second;
}

}  // namespace

Witness au_reference(const Witness& b, int d, Variant v, const Bounds& bounds, std::size_t cap)
{
    check_input(b, d, bounds);
    if (b.is_won()) return b;
    auto t = au_table(bounds, v, cap);
    const auto rank = static_cast<std::size_t>(
        std::lower_bound(t->states.begin(), t->states.end(), b) - t->states.begin());
    return t->suffix_min[static_cast<std::size_t>(d - bounds.min_colour())][rank];
}

// ---------------------------------------------------------------------------
// Fast antagonistic update: branch and bound over the statespace elements
// above b. A partial witness is fixed from b_k down to some b_p; every update
// of a completion either keeps that prefix (and is then at least the prefix
// padded with blanks) or rewrites at an index j >= p, where the output is
// already determined by the prefix.

namespace {

class AuSearch {
public:
    AuSearch(int d, Variant v, const Bounds& bounds)
        : d_(d), v_(v), s_(statespace_of(v)), bounds_(bounds), L_(bounds.length()),
          alphabet_(statespace_entries(bounds, s_)), best_(Witness::won())
    {
    }

    Witness run(const Witness& b)
    {
        const auto& be = b.entries();
        if (in_statespace(b, bounds_, s_)) best_ = up_capped(b, d_, v_, bounds_);
        std::vector<Entry> q;
        for (int t = 0; t < L_; ++t) {
            if (!prefix_feasible(std::span<const Entry>(be.data(), static_cast<std::size_t>(t)), bounds_, s_)) break;
            q.assign(be.begin(), be.begin() + t);
            for (Entry x : alphabet_) {
                if (x == be[t] || !entry_geq(x, be[t])) continue;
                q.push_back(x);
                if (prefix_feasible(q, bounds_, s_)) explore(q);
                q.pop_back();
            }
        }
        return best_;
    }

private:
    void explore(std::vector<Entry>& q)
    {
        if (witness_cmp(lower_bound(q), best_) != Cmp::Less) return;
        if (static_cast<int>(q.size()) == L_) {
            best_ = witness_min(best_, up_capped(Witness(q), d_, v_, bounds_));
            return;
        }
        for (Entry y : alphabet_) {
            q.push_back(y);
            if (prefix_feasible(q, bounds_, s_)) explore(q);
            q.pop_back();
        }
    }

    Witness padded(const std::vector<Entry>& q) const
    {
        std::vector<Entry> e(q);
        e.resize(static_cast<std::size_t>(L_), kBlank);
        return Witness(std::move(e));
    }

    /// Output form of a rule at index j >= p, already capped.
    void consider(Witness c, Witness& lb) const
    {
        if (v_ == Variant::Concise) c = truncate1(c);
        lb = witness_min(lb, cap_value(std::move(c), bounds_));
    }

    Witness lower_bound(const std::vector<Entry>& q) const
    {
        if (d_ == bounds_.reset_colour()) return Witness::blank(L_);
        Witness lb = padded(q);
        const int p = L_ - static_cast<int>(q.size());
        const Witness base = lb;
        for (int j = p; j < L_; ++j) {
            if (v_ != Variant::Colour) {
                if (d_ % 2 == 0) consider(keep_above(base, j, d_), lb);
                consider(keep_above(base, j, j == 0 ? kBlank : d_), lb);
                continue;
            }
            if (d_ % 2 != 0) {
                consider(keep_above(base, j, j == 0 ? kBlank : d_), lb);
                continue;
            }
            Witness c = base;
            for (int i = j; i < L_; ++i)
                if (c.at(i) != kBlank && c.at(i) < d_) c.set(i, d_);
            if (j >= 1) {
                Witness local = c;
                for (int i = 0; i < j; ++i) local.set(i, kBlank);
                local.set(0, d_);
                consider(std::move(local), lb);
            }
            Witness over = base;
            for (int i = j + 1; i < L_; ++i)
                if (over.at(i) != kBlank && over.at(i) <= d_) over.set(i, d_);
            consider(keep_above(over, j, d_), lb);
        }
        return lb;
    }

    int d_;
    Variant v_;
    Statespace s_;
    const Bounds& bounds_;
    int L_;
    std::vector<Entry> alphabet_;
    Witness best_;
};

}  // namespace

Witness au_fast(const Witness& b, int d, Variant v, const Bounds& bounds)
{
    check_input(b, d, bounds);
    if (b.is_won()) return b;
    return AuSearch(d, v, bounds).run(b);
}

}  // namespace pgsep
