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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pgsep/semantics.hpp"
#include "pgsep/statespace.hpp"
#include "pgsep/update.hpp"

using namespace pgsep;

namespace {

Witness W(const char* s) { return Witness::parse(s); }

/// Outputs of every classic rule instance whose preconditions hold.
std::vector<Witness> classic_rule_outputs(const Witness& b, int d, const Bounds& bounds)
{
    std::vector<Witness> out;
    const int L = b.length();
    auto tail = [&](int j, Entry at) {
        Witness c = b;
        c.set(j, at);
        for (int i = 0; i < j; ++i) c.set(i, kBlank);
        return c;
    };
    auto above_ok = [&](int j) {
        for (int i = j + 1; i < L; ++i)
            if (b.at(i) != kBlank && b.at(i) < d) return false;
        return true;
    };
    if (d % 2 == 0)
        for (int j = 0; j < L; ++j) {
            bool below_even = true;
            for (int i = 0; i < j; ++i) below_even = below_even && b.at(i) != kBlank && b.at(i) % 2 == 0;
            const bool here = b.at(j) == kBlank || b.at(j) % 2 != 0;
            if (below_even && here && above_ok(j)) out.push_back(tail(j, d));
        }
    if (d <= bounds.cminus_max())
        for (int j = 0; j < L; ++j)
            if (b.at(j) != kBlank && d > b.at(j) && above_ok(j)) out.push_back(tail(j, j == 0 ? kBlank : d));
    bool stale = true;
    for (int i = 0; i < L; ++i) stale = stale && (b.at(i) == kBlank || b.at(i) >= d);
    if (stale) out.push_back(b);
    return out;
}

}  // namespace

TEST_CASE("ru_classic examples")
{
    CHECK(ru_classic(W("_,_"), 2, Bounds(1, 4, 3)) == W("_,2"));
    CHECK(explain_classic(W("_,_"), 2, Bounds(1, 4, 3)).rule == Rule::Overflow);
    CHECK(explain_classic(W("_,_"), 2, Bounds(1, 4, 3)).index == 0);
    CHECK(ru_classic(W("2,2"), 3, Bounds(1, 3, 3)) == W("_,_"));
    CHECK(explain_classic(W("2,2"), 3, Bounds(1, 3, 3)).rule == Rule::Reset);
    CHECK(ru_classic(W("6,4,_"), 3, Bounds(1, 6, 7)) == W("6,4,_"));
    CHECK(explain_classic(W("6,4,_"), 3, Bounds(1, 6, 7)).rule == Rule::Stale);
    const auto r = explain_classic(W("6,_,2"), 4, Bounds(1, 6, 7));
    CHECK(r.result == W("6,4,_"));
    CHECK(r.rule == Rule::Overflow);
    CHECK(r.index == 1);
    // the local rule at j = 0 would have produced 6,_,_
    CHECK(witness_cmp(r.result, W("6,_,_")) == Cmp::Greater);
    CHECK_THROWS(ru_classic(W("_,_"), 5, Bounds(1, 4, 3)));
    CHECK_THROWS(ru_classic(W("_,_,_"), 2, Bounds(1, 4, 3)));
}

TEST_CASE("ru_concise examples")
{
    CHECK(ru_concise(W("3,2,2"), 3, Bounds(1, 4, 7)) == W("3,_,_"));
    CHECK(ru_classic(W("3,2,2"), 3, Bounds(1, 4, 7)) == W("3,3,_"));
    CHECK(ru_concise(W("5,3,_"), 4, Bounds(1, 6, 7)) == W("5,4,_"));
    CHECK(ru_concise(Witness::won(), 2, Bounds(1, 6, 7)).is_won());
}

TEST_CASE("ru_colour examples")
{
    CHECK(ru_colour(W("4,_,4,_"), 6, Bounds(1, 6, 15)) == W("6,_,6,6"));
    CHECK(ru_colour(W("6,_,4,2,2"), 8, Bounds(1, 8, 31)) == W("8,8,_,_,_"));
    CHECK(ru_colour(W("4,3,2,2"), 6, Bounds(1, 6, 15)) == W("6,6,_,6"));
    CHECK(explain_colour(W("4,3,2,2"), 6, Bounds(1, 6, 15)).rule == Rule::EvenLocal);
    CHECK(explain_colour(W("4,3,2,2"), 6, Bounds(1, 6, 15)).index == 2);
    CHECK(ru_colour(W("2,2"), 2, Bounds(1, 2, 3)).is_won());
    CHECK(explain_colour(W("2,2"), 2, Bounds(1, 2, 3)).rule == Rule::CarryOut);
    CHECK(ru_colour(W("5,_,_"), 3, Bounds(1, 6, 7)) == W("5,_,_"));
    CHECK(ru_colour(W("5,4,_"), 5, Bounds(1, 6, 7)) == W("5,_,_"));
    CHECK(ru_colour(W("4,2,_"), 3, Bounds(1, 6, 7)) == W("4,3,_"));
    CHECK(explain_colour(W("4,2,_"), 3, Bounds(1, 6, 7)).rule == Rule::OddLocal);
    CHECK(explain_colour(W("4,_,_"), 3, Bounds(1, 6, 7)).rule == Rule::Stale);
}

TEST_CASE("up_capped examples")
{
    CHECK(up_capped(W("2,_"), 2, Variant::Classic, Bounds(1, 2, 2)).is_won());
    CHECK(ru_classic(W("2,_"), 2, Bounds(1, 2, 2)) == W("2,2"));
    CHECK(up_capped(Witness::won(), 1, Variant::Colour, Bounds(1, 2, 2)).is_won());
    CHECK(up_capped(W("4,_,4,_"), 6, Variant::Colour, Bounds(1, 6, 15)) == W("6,_,6,6"));
}

TEST_CASE("au_reference examples")
{
    const Bounds b(1, 2, 1);
    CHECK(au_reference(W("_"), 1, Variant::Concise, b) == W("_"));
    CHECK(au_reference(W("2"), 1, Variant::Concise, b) == W("2"));
    CHECK(au_reference(Witness::won(), 1, Variant::Concise, b).is_won());
    CHECK(au_reference(Witness::won(), 2, Variant::Colour, b).is_won());
    CHECK(au_fast(Witness::won(), 2, Variant::Colour, b).is_won());
    CHECK(au_reference(W("_"), 2, Variant::Concise, b) == W("2"));
    CHECK(au_reference(W("2"), 2, Variant::Concise, b).is_won());
    CHECK_THROWS_AS(au_reference(W("_,_,_,_,_"), 2, Variant::Classic, Bounds(1, 6, 31), 5), CapExceeded);
}

TEST_CASE("au_reference is the minimum over the definition's statespace")
{
    for (int hi = 2; hi <= 5; ++hi)
        for (std::int64_t e : {1, 2, 3, 5, 7}) {
            const Bounds b(1, hi, e);
            for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour}) {
                const auto space = oracle::all_sequences(b.length(), hi, [&](const Witness& w) {
                    return oracle::member(w, v == Variant::Classic ? 1 : 2, 1, hi, e);
                });
                for (const auto& x : space)
                    for (int d = 1; d <= hi; ++d) {
                        Witness best = Witness::won();
                        for (const auto& c : space)
                            if (oracle::compare(c, x) >= 0) {
                                const auto u = up_capped(c, d, v, b);
                                if (oracle::compare(u, best) < 0) best = u;
                            }
                        CHECK(au_reference(x, d, v, b) == best);
                    }
            }
        }
}

TEST_CASE("classic rule choice is the best applicable rule")
{
    for (int hi = 2; hi <= 6; ++hi)
        for (std::int64_t e : {3, 7, 15}) {
            const Bounds b(1, hi, e);
            for (const auto& w : enumerate_statespace(b, Statespace::ClassicValueCapped))
                for (int d = 1; d <= hi; ++d) {
                    const auto r = explain_classic(w, d, b);
                    if (r.rule == Rule::Reset || r.rule == Rule::CarryOut) continue;
                    const auto outs = classic_rule_outputs(w, d, b);
                    REQUIRE_FALSE(outs.empty());
                    Witness best = outs.front();
                    for (const auto& o : outs) best = witness_max(best, o);
                    CHECK(r.result == best);
                }
        }
}

TEST_CASE("truncation commutes with the update and colour dominates")
{
    for (int hi = 2; hi <= 6; ++hi)
        for (std::int64_t e : {1, 3, 4, 8, 15, 16}) {
            const Bounds b(hi % 2 == 0 ? 2 : 1, hi, e);
            for (const auto& c : enumerate_statespace(b, Statespace::ClassicValueCapped))
                for (int d = b.min_colour(); d <= hi; ++d)
                    CHECK(ru_concise(truncate1(c), d, b) == truncate1(ru_classic(c, d, b)));
            for (const auto& c : enumerate_statespace(b, Statespace::Concise))
                for (int d = b.min_colour(); d <= hi; ++d) {
                    const auto fast = up_capped(c, d, Variant::Colour, b);
                    const auto slow = up_capped(c, d, Variant::Concise, b);
                    CHECK(witness_leq(slow, fast));
                    const auto r = up_capped(c, d, Variant::Colour, b);
                    CHECK((r.is_won() || in_statespace(r, b, Statespace::Concise)));
                }
        }
}

TEST_CASE("au_fast equals au_reference and both are monotone")
{
    for (int hi = 2; hi <= 5; ++hi)
        for (std::int64_t e : {2, 4, 6, 9, 16}) {
            const Bounds b(1, hi, e);
            for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour}) {
                const auto space = enumerate_statespace(b, statespace_of(v));
                for (int d = 1; d <= hi; ++d) {
                    Witness prev = Witness::blank(b.length());
                    for (const auto& x : space) {
                        const auto ref = au_reference(x, d, v, b);
                        CHECK(au_fast(x, d, v, b) == ref);
                        CHECK(witness_leq(prev, ref));
                        prev = ref;
                    }
                }
            }
        }
}

TEST_CASE("au_fast handles witnesses outside the statespace")
{
    const Bounds b(1, 4, 5);
    for (const auto& x : oracle::all_sequences(b.length(), 4, [](const Witness&) { return true; }))
        for (int d = 1; d <= 4; ++d)
            for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour})
                CHECK(au_fast(x, d, v, b) == au_reference(x, d, v, b));
}

TEST_CASE("basic updates stay sound along random words")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 1500; ++t) {
        const int hi = 2 + static_cast<int>(rng() % 4);
        const Bounds b(1, hi, 1 + static_cast<std::int64_t>(rng() % 9));
        const auto v = static_cast<Variant>(t % 3);
        const int m = 1 + static_cast<int>(rng() % 10);
        std::vector<int> col;
        Witness w = b.initial();
        for (int s = 0; s < m && !w.is_won(); ++s) {
            col.push_back(1 + static_cast<int>(rng() % hi));
            w = up_capped(w, col.back(), v, b);
            if (w.is_won()) {
                CHECK(longest_even_chain(col) > b.e());
            } else if (v == Variant::Colour) {
                CHECK(is_colour_witness(w, col));
            } else {
                CHECK(is_classic_witness(w, col));
            }
        }
    }
}
