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

#include "pgsep/counts.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace pgsep {

namespace {

std::recursive_mutex memo_mutex;

BigInt pow2(int i) { return BigInt(1) << i; }

BigInt binom(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void require(bool ok, const char* what)
{
    if (!ok) throw std::invalid_argument(what);
}

template <class Key, class F>
BigInt memoized(std::map<Key, BigInt>& memo, const Key& key, F f)
{
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt r = f();
    memo.emplace(key, r);
    return r;
}

std::map<std::pair<int, int>, BigInt> jl_memo, o_memo, m12_memo, len_memo;
std::map<std::tuple<int, int, std::uint64_t>, BigInt> len_val_memo, jkssw_memo;
std::map<std::pair<int, std::uint64_t>, BigInt> val_memo;

}  // namespace

int bit_length(std::uint64_t n)
{
    int b = 0;
    while (n) {
        ++b;
        n >>= 1;
    }
    return b;
}

BigInt cnt_jl(int c, int l)
{
    require(c >= 2 && l >= 0, "cnt_jl needs c >= 2 and l >= 0");
    if (c % 2 != 0) return cnt_jl(c - 1, l);
    return memoized(jl_memo, std::make_pair(c, l), [&]() -> BigInt {
        if (l == 0) return 1;
        if (c == 2) return pow2(l + 1) - 1;
        if (l == 1) return c + 1;
        return cnt_jl(c - 2, l) + 2 * cnt_jl(c, l - 1);
    });
}

BigInt jl_total_closed(int c, int l)
{
    require(c >= 2 && l >= 0, "jl_total_closed needs c >= 2 and l >= 0");
    const int h = c / 2;
    BigInt sum = 2;
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= std::min(i, h); ++j) sum += pow2(i) * binom(h, j) * binom(i - 1, j - 1);
    return sum;
}

BigInt cnt_o(int c, int l)
{
    require(c >= 1 && l >= 1, "cnt_o needs c >= 1 and l >= 1");
    return memoized(o_memo, std::make_pair(c, l), [&]() -> BigInt {
        if (l == 1) return c + 1;
        BigInt r = cnt_o(c, l - 1);
        for (int i = 1; i <= c; ++i) r += cnt_o(i, l - 1);
        return r;
    });
}

BigInt o_total_closed(int c, int l)
{
    require(c >= 1 && l >= 1, "o_total_closed needs c >= 1 and l >= 1");
    BigInt sum = 2;
    for (int i = 1; i <= l; ++i) sum += binom(l, i) * binom(i + c - 1, i);
    return sum;
}

BigInt cnt_12(int even_c, int l)
{
    require(even_c >= 2 && even_c % 2 == 0 && l >= 1, "cnt_12 needs an even colour count >= 2 and l >= 1");
    return memoized(m12_memo, std::make_pair(even_c, l), [&]() -> BigInt {
        if (l == 1) return even_c + 1;
        BigInt r = 0;
        for (int i = 1; i <= even_c / 2; ++i) r += cnt_12(2 * i, l - 1);
        return 1 + 2 * r;
    });
}

BigInt cnt_len(int even_c, int l)
{
    require(even_c >= 2 && even_c % 2 == 0 && l >= 1, "cnt_len needs an even colour count >= 2 and l >= 1");
    return memoized(len_memo, std::make_pair(even_c, l), [&]() -> BigInt {
        if (l == 1) return even_c / 2 + 1;
        BigInt r = 0;
        for (int i = 1; i <= even_c / 2; ++i) r += cnt_len(2 * i, l - 1);
        return 2 * r;
    });
}

BigInt cnt_len_val(int even_c, int l, std::uint64_t v)
{
    require(even_c >= 2 && even_c % 2 == 0 && l >= 0, "cnt_len_val needs an even colour count >= 2");
    require(l < 63 && v < (std::uint64_t{1} << l), "cnt_len_val needs v < 2^l");
    if (v == 0) return 1;
    return memoized(len_val_memo, std::make_tuple(even_c, l, v), [&]() -> BigInt {
        if (l == 1) return even_c / 2 + 1;
        const int L = l - 1;
        const std::uint64_t half = std::uint64_t{1} << L;
        if (v < half) return cnt_len_val(even_c, L, v);
        BigInt r = 0;
        for (int i = 1; i <= even_c / 2; ++i)
            r += cnt_len_val(2 * i, L, v - half) + cnt_len_val(2 * i, L, half - 1);
        return r;
    });
}

BigInt cnt_val(int even_c, std::uint64_t v)
{
    require(even_c >= 2 && even_c % 2 == 0, "cnt_val needs an even colour count >= 2");
    if (v == 0) return 1;
    if (v == 1) return even_c / 2 + 1;
    return memoized(val_memo, std::make_pair(even_c, v), [&]() -> BigInt {
        const std::uint64_t top = std::uint64_t{1} << (bit_length(v) - 1);
        BigInt r = 0;
        for (int i = 1; i <= even_c / 2; ++i) r += cnt_val(2 * i, v - top) + cnt_val(2 * i, top - 1);
        return r;
    });
}

BigInt cnt_jkssw(int c, int l, std::uint64_t v)
{
    require(c >= 1 && l >= 1, "cnt_jkssw needs c >= 1 and l >= 1");
    require(l < 63 && v < (std::uint64_t{1} << l), "cnt_jkssw needs v < 2^l");
    return memoized(jkssw_memo, std::make_tuple(c, l, v), [&]() -> BigInt {
        if (l == 1) return v == 0 ? BigInt(1) : BigInt(c / 2 + 1);
        const int L = l - 1;
        const std::uint64_t half = std::uint64_t{1} << L;
        const int odd_top = (c + 1) / 2;
        BigInt r = 0;
        if (v < half) {
            r = cnt_jkssw(c, L, v);
            for (int i = 2; i <= odd_top; ++i) r += cnt_jkssw(2 * i - 1, L, v);
            return r;
        }
        r = cnt_jkssw(c, L, half - 1);
        for (int i = 1; i <= c / 2; ++i) r += cnt_jkssw(2 * i, L, v - half);
        for (int i = 2; i <= odd_top; ++i) r += cnt_jkssw(2 * i - 1, L, half - 1);
        return r;
    });
}

TableRow table_row(int n, int c)
{
    require(n >= 1 && c >= 2, "table rows need n >= 1 and c >= 2");
    const int l = bit_length(static_cast<std::uint64_t>(n));
    TableRow r;
    r.n = n;
    r.c = c;
    r.old_exact = o_total_closed(c, l);
    r.jl_exact = jl_total_closed(c, l);
    r.new_exact = cnt_val(2 * (c / 2), static_cast<std::uint64_t>(n)) + 1;
    return r;
}

std::vector<TableRow> table_fixed_colours()
{
    std::vector<TableRow> rows;
    for (int n = 8; n <= 32768; n *= 2) rows.push_back(table_row(n, n == 8 ? 8 : 10));
    return rows;
}

std::vector<TableRow> table_linear_colours()
{
    std::vector<TableRow> rows;
    for (int n = 260; n <= 500; n += 20) rows.push_back(table_row(n, n / 10));
    return rows;
}

std::string ratio_string(const BigInt& x, const BigInt& y, int decimals)
{
    if (y == 0) throw std::invalid_argument("ratio with zero denominator");
    BigInt scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    const BigInt q = (x * scale * 2 + y) / (y * 2);
    const BigInt whole = q / scale;
    if (decimals == 0) return whole.str();
    std::string frac = BigInt(q % scale).str();
    frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
    return whole.str() + "." + frac;
}

std::string table_csv(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    out << "n,c,old_exact,jl_exact,new_exact,old_k,jl_k,new_k,new_over_jl\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.c << ',' << r.old_exact << ',' << r.jl_exact << ',' << r.new_exact << ','
            << r.old_exact / 1000 << ',' << r.jl_exact / 1000 << ',' << r.new_exact / 1000 << ','
            << ratio_string(r.new_exact, r.jl_exact) << '\n';
    return out.str();
}

}  // namespace pgsep
