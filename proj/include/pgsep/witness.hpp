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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgsep {

/// An entry is a colour or Blank (0).
using Entry = int;
inline constexpr Entry kBlank = 0;

/// a ⪰ b: every colour beats Blank, evens beat odds, big evens and small odds are better.
bool entry_geq(Entry a, Entry b);

enum class Cmp { Less, Equal, Greater };

/// Thrown when a resource cap (statespace, product size, prefix length) would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Either Won or a sequence b_k..b_0. Entries are held most significant first,
 * so entries()[0] is b_k. at(i) addresses by position, b_0 being the last entry.
 */
class Witness {
public:
    Witness() = default;
    explicit Witness(std::vector<Entry> msf);

    static Witness blank(int length);
    static Witness won();
    /// Inverse of to_string(); throws std::invalid_argument.
    static Witness parse(std::string_view text);

    bool is_won() const { return won_; }
    int length() const { return static_cast<int>(e_.size()); }
    Entry at(int i) const { return e_[e_.size() - 1 - static_cast<std::size_t>(i)]; }
    void set(int i, Entry v) { e_[e_.size() - 1 - static_cast<std::size_t>(i)] = v; }
    const std::vector<Entry>& entries() const { return e_; }
    bool all_blank() const;

    std::string to_string() const;

    bool operator==(const Witness& o) const { return won_ == o.won_ && e_ == o.e_; }
    bool operator<(const Witness& o) const;

private:
    std::vector<Entry> e_;
    bool won_ = false;
};

/// Lexicographic in ⪰ from b_k down; Won is above everything. Throws on length mismatch.
Cmp witness_cmp(const Witness& b, const Witness& c);

inline bool witness_leq(const Witness& b, const Witness& c) { return witness_cmp(b, c) != Cmp::Greater; }
const Witness& witness_max(const Witness& a, const Witness& b);
const Witness& witness_min(const Witness& a, const Witness& b);

/// Sum of 2^i over evenodd(b). Throws std::invalid_argument on Won.
std::uint64_t val(const Witness& b);
/// Positions holding an even colour.
std::vector<int> even_positions(const Witness& b);

/// Keep only the leftmost occurrence of each odd colour.
Witness truncate1(const Witness& b);
/// Each odd colour at most once.
bool is_concise(const Witness& b);

/**
 * Colour set C = {min_colour..max_colour} with min_colour in {1,2} and the
 * even-chain budget e. Witnesses have length k+1 with k = floor(log2 e).
 */
class Bounds {
public:
    Bounds(int min_colour, int max_colour, std::int64_t e);

    int min_colour() const { return min_; }
    int max_colour() const { return max_; }
    std::int64_t e() const { return e_; }
    int k() const { return k_; }
    int length() const { return k_ + 1; }

    bool in_colours(int d) const { return d >= min_ && d <= max_; }
    /// max C if it is odd, else 0 (no reset colour).
    int reset_colour() const { return max_ % 2 != 0 ? max_ : 0; }
    /// Largest element of C⁻.
    int cminus_max() const { return max_ % 2 != 0 ? max_ - 1 : max_; }
    int colour_count() const { return max_ - min_ + 1; }

    Witness initial() const { return Witness::blank(length()); }
    void check_colour(int d) const;

    bool operator==(const Bounds& o) const { return min_ == o.min_ && max_ == o.max_ && e_ == o.e_; }
    bool operator<(const Bounds& o) const;

private:
    int min_;
    int max_;
    std::int64_t e_;
    int k_;
};

}  // namespace pgsep
