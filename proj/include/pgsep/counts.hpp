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
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgsep {

using BigInt = boost::multiprecision::cpp_int;

// All counts exclude the winning state unless named *_total_closed.
// Arguments outside the documented domain throw std::invalid_argument.

/// Length-bounded count for the concise progress measures of Jurdzinski and Lazic. c >= 2, l >= 0.
BigInt cnt_jl(int c, int l);
/// Closed double sum; equals cnt_jl(c, l) + 1.
BigInt jl_total_closed(int c, int l);

/// Original length-bounded witnesses over c colours. c >= 1, l >= 1.
BigInt cnt_o(int c, int l);
/// Closed sum; equals cnt_o(c, l) + 1.
BigInt o_total_closed(int c, int l);

/// Odd colours at most once, no colour above the highest even one. even_c even, >= 2, l >= 1.
BigInt cnt_12(int even_c, int l);
/// Additionally no odd b_0 and no colour 1.
BigInt cnt_len(int even_c, int l);
/// Length and value bounded; v < 2^l.
BigInt cnt_len_val(int even_c, int l, std::uint64_t v);
/// Value bounded only.
BigInt cnt_val(int even_c, std::uint64_t v);

/// Count for the witnesses of Fearnley et al. with length and value bound; v < 2^l.
BigInt cnt_jkssw(int c, int l, std::uint64_t v);

/// ceil(log2(n + 1)), the number of bits of n.
int bit_length(std::uint64_t n);

struct TableRow {
    int n = 0;
    int c = 0;
    BigInt old_exact;
    BigInt jl_exact;
    BigInt new_exact;
};

/// Old = o_total_closed(c, l), JL = jl_total_closed(c, l), New = cnt_val(2 floor(c/2), n) + 1 with l = bit_length(n).
TableRow table_row(int n, int c);
/// n = 8 .. 32768 in powers of two with 10 colours (8 colours at n = 8).
std::vector<TableRow> table_fixed_colours();
/// n = 260 .. 500 in steps of 20 with n/10 colours.
std::vector<TableRow> table_linear_colours();

/// Header plus one line per row; the *_k columns are floor(x / 1000).
std::string table_csv(const std::vector<TableRow>& rows);

/// x / y rounded to the given number of decimals, as text.
std::string ratio_string(const BigInt& x, const BigInt& y, int decimals = 6);

}  // namespace pgsep
