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

#include "pgsep/game.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace pgsep {

const char* to_string(Player p) { return p == Player::Even ? "Even" : "Odd"; }

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

ParityGame::ParityGame(std::vector<Player> owners, std::vector<int> colours,
                       std::vector<std::vector<int>> successors, std::vector<int> ids,
                       std::vector<std::string> names)
    : owners_(std::move(owners)),
      colours_(std::move(colours)),
      succ_(std::move(successors)),
      ids_(std::move(ids)),
      names_(std::move(names))
{
    const auto n = owners_.size();
    if (colours_.size() != n || succ_.size() != n)
        throw GameError("owner, colour and successor tables differ in size");
    if (ids_.empty()) {
        ids_.resize(n);
        for (std::size_t v = 0; v < n; ++v) ids_[v] = static_cast<int>(v);
    }
    if (names_.empty()) names_.resize(n);
    if (ids_.size() != n || names_.size() != n) throw GameError("id or name table has wrong size");

    pred_.assign(n, {});
    for (std::size_t v = 0; v < n; ++v) {
        if (colours_[v] < 0) throw GameError("vertex " + std::to_string(ids_[v]) + " has a negative colour");
        auto& s = succ_[v];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw GameError("vertex " + std::to_string(ids_[v]) + " has no successor");
        for (int w : s) {
            if (w < 0 || static_cast<std::size_t>(w) >= n)
                throw GameError("vertex " + std::to_string(ids_[v]) + " has a dangling successor");
            pred_[w].push_back(static_cast<int>(v));
        }
    }
}

int ParityGame::min_colour() const
{
    return colours_.empty() ? 0 : *std::min_element(colours_.begin(), colours_.end());
}

int ParityGame::max_colour() const
{
    return colours_.empty() ? 0 : *std::max_element(colours_.begin(), colours_.end());
}

std::uint64_t ParityGame::even_vertex_count() const
{
    return static_cast<std::uint64_t>(
        std::count_if(colours_.begin(), colours_.end(), [](int c) { return c % 2 == 0; }));
}

bool ParityGame::has_normalized_colours() const
{
    if (colours_.empty()) return true;
    const int lo = min_colour();
    return lo == 1 || lo == 2;
}

ParityGame ParityGame::recoloured(std::vector<int> colours) const
{
    return ParityGame(owners_, std::move(colours), succ_, ids_, names_);
}

bool ParityGame::operator==(const ParityGame& o) const
{
    return owners_ == o.owners_ && colours_ == o.colours_ && succ_ == o.succ_ && ids_ == o.ids_ &&
           names_ == o.names_;
}

// ---------------------------------------------------------------------------
// PGSolver parsing

namespace {

class StatementReader {
public:
    StatementReader(std::string_view stmt, int line) : s_(stmt), line_(line) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ == s_.size();
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    long long integer(const char* what)
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string tok(s_.substr(start, pos_ - start));
        if (tok.empty() || tok == "-" || tok == "+") fail(std::string("expected ") + what);
        try {
            return std::stoll(tok);
        } catch (const std::out_of_range&) {
            fail(std::string(what) + " out of range");
        }
    }

    std::string word()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string quoted()
    {
        skip_ws();
        ++pos_;  // opening quote
        auto close = s_.find('"', pos_);
        if (close == std::string_view::npos) fail("unterminated vertex name");
        std::string out(s_.substr(pos_, close - pos_));
        pos_ = close + 1;
        return out;
    }

    void expect(char c)
    {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

    int line() const { return line_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

struct RawVertex {
    int id;
    int colour;
    Player owner;
    std::vector<int> succ_ids;
    std::string name;
    int line;
};

}  // namespace

ParityGame parse_pgsolver(std::string_view text)
{
    std::vector<RawVertex> raw;
    long long max_id = -1;
    bool header_seen = false;

    int line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        // Locate the next statement, tracking the line on which it starts.
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            if (text[i] == '\n') ++line;
            ++i;
        }
        if (i >= text.size()) break;
        const int stmt_line = line;
        std::size_t j = i;
        bool in_quote = false;
        while (j < text.size() && (in_quote || text[j] != ';')) {
            if (text[j] == '"') in_quote = !in_quote;
            if (text[j] == '\n') ++line;
            ++j;
        }
        if (j >= text.size()) throw ParseError(stmt_line, "statement is not terminated by ';'");
        StatementReader r(text.substr(i, j - i), stmt_line);
        i = j + 1;

        if (r.peek('p')) {
            if (r.word() != "parity") r.fail("unknown keyword");
            if (header_seen || !raw.empty()) r.fail("'parity' header must come first");
            header_seen = true;
            max_id = r.integer("maximal vertex id");
            if (max_id < 0) r.fail("negative maximal vertex id");
            if (!r.at_end()) r.fail("trailing input after header");
            continue;
        }

        RawVertex v;
        v.line = stmt_line;
        long long id = r.integer("vertex id");
        long long prio = r.integer("priority");
        long long owner = r.integer("owner");
        if (id < 0 || id > std::numeric_limits<int>::max()) r.fail("vertex id out of range");
        if (prio < 0 || prio > std::numeric_limits<int>::max()) r.fail("priority out of range");
        if (owner != 0 && owner != 1) r.fail("owner must be 0 or 1");
        if (header_seen && id > max_id) r.fail("vertex id exceeds the header's maximal id");
        v.id = static_cast<int>(id);
        v.colour = static_cast<int>(prio);
        v.owner = owner == 0 ? Player::Even : Player::Odd;
        if (r.at_end() || r.peek('"')) r.fail("vertex " + std::to_string(id) + " has no successor");
        for (;;) {
            long long s = r.integer("successor id");
            if (s < 0 || s > std::numeric_limits<int>::max()) r.fail("successor id out of range");
            v.succ_ids.push_back(static_cast<int>(s));
            if (!r.peek(',')) break;
            r.expect(',');
        }
        if (r.peek('"')) v.name = r.quoted();
        if (!r.at_end()) r.fail("unexpected trailing input");
        raw.push_back(std::move(v));
    }

    std::sort(raw.begin(), raw.end(), [](const RawVertex& a, const RawVertex& b) { return a.id < b.id; });
    std::map<int, int> index_of;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (!index_of.emplace(raw[k].id, static_cast<int>(k)).second)
            throw ParseError(raw[k].line, "vertex " + std::to_string(raw[k].id) + " declared twice");
    }
    if (raw.empty()) throw ParseError(line, "game has no vertices");

    std::vector<Player> owners;
    std::vector<int> colours, ids;
    std::vector<std::vector<int>> succ;
    std::vector<std::string> names;
    for (const auto& v : raw) {
        owners.push_back(v.owner);
        colours.push_back(v.colour);
        ids.push_back(v.id);
        names.push_back(v.name);
        auto& s = succ.emplace_back();
        for (int sid : v.succ_ids) {
            auto it = index_of.find(sid);
            if (it == index_of.end())
                throw ParseError(v.line, "successor " + std::to_string(sid) + " of vertex " +
                                             std::to_string(v.id) + " is not declared");
            s.push_back(it->second);
        }
    }
    return ParityGame(std::move(owners), std::move(colours), std::move(succ), std::move(ids),
                      std::move(names));
}

ParityGame parse_pgsolver(std::istream& in)
{
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_pgsolver(ss.str());
}

std::string serialize_pgsolver(const ParityGame& g)
{
    std::ostringstream out;
    int max_id = -1;
    for (int v = 0; v < g.size(); ++v) max_id = std::max(max_id, g.id(v));
    out << "parity " << max_id << ";\n";
    for (int v = 0; v < g.size(); ++v) {
        out << g.id(v) << ' ' << g.colour(v) << ' ' << (g.owner(v) == Player::Even ? 0 : 1) << ' ';
        std::vector<int> succ_ids;
        for (int w : g.successors(v)) succ_ids.push_back(g.id(w));
        std::sort(succ_ids.begin(), succ_ids.end());
        for (std::size_t k = 0; k < succ_ids.size(); ++k) out << (k ? "," : "") << succ_ids[k];
        if (!g.name(v).empty()) out << " \"" << g.name(v) << '"';
        out << ";\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------

NormalizedGame normalize_colours(const ParityGame& g)
{
    std::set<int> distinct(g.colours().begin(), g.colours().end());
    NormalizedGame out;
    int target = 0;
    int prev = -1;
    for (int c : distinct) {
        if (prev < 0)
            target = c % 2 == 0 ? 2 : 1;
        else
            target += (c % 2 == prev % 2) ? 2 : 1;
        out.mapping[c] = target;
        prev = c;
    }
    std::vector<int> colours(g.colours());
    for (int& c : colours) c = out.mapping.at(c);
    out.game = g.recoloured(std::move(colours));
    return out;
}

ParityGame generate_random(const RandomGameConfig& cfg)
{
    if (cfg.vertices < 1) throw std::invalid_argument("vertex count must be positive");
    if (cfg.max_colour < 1) throw std::invalid_argument("max colour must be positive");
    if (cfg.min_degree < 1 || cfg.min_degree > cfg.max_degree || cfg.max_degree > cfg.vertices)
        throw std::invalid_argument("out-degree range must lie within [1, n] and be non-empty");

    std::mt19937_64 rng(cfg.seed);
    auto draw = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    const int n = cfg.vertices;
    std::vector<Player> owners(n);
    std::vector<int> colours(n);
    std::vector<std::vector<int>> succ(n);
    std::vector<int> pool(n);
    for (int v = 0; v < n; ++v) {
        owners[v] = draw(0, 1) == 0 ? Player::Even : Player::Odd;
        colours[v] = draw(1, cfg.max_colour);
        const int degree = draw(cfg.min_degree, cfg.max_degree);
        // partial Fisher-Yates: the first `degree` slots become a uniform sample
        for (int w = 0; w < n; ++w) pool[w] = w;
        for (int k = 0; k < degree; ++k) std::swap(pool[k], pool[draw(k, n - 1)]);
        succ[v].assign(pool.begin(), pool.begin() + degree);
    }
    return ParityGame(std::move(owners), std::move(colours), std::move(succ));
}

std::vector<std::string> invariant_violations(const ParityGame& g)
{
    std::vector<std::string> out;
    if (g.size() == 0) out.emplace_back("game has no vertices");
    for (int v = 0; v < g.size(); ++v) {
        if (g.successors(v).empty()) out.push_back("vertex " + std::to_string(g.id(v)) + " has no successor");
        for (int w : g.successors(v))
            if (w < 0 || w >= g.size()) out.push_back("vertex " + std::to_string(g.id(v)) + " has a dangling edge");
        if (g.colour(v) < 1) out.push_back("vertex " + std::to_string(g.id(v)) + " has a non-positive colour");
    }
    if (!g.has_normalized_colours()) out.emplace_back("minimal colour is neither 1 nor 2");
    return out;
}

bool is_play_prefix(const ParityGame& g, std::span<const int> vertices)
{
    if (vertices.empty()) return false;
    for (int v : vertices)
        if (v < 0 || v >= g.size()) return false;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        auto s = g.successors(vertices[i]);
        if (!std::binary_search(s.begin(), s.end(), vertices[i + 1])) return false;
    }
    return true;
}

std::vector<int> play_colours(const ParityGame& g, std::span<const int> vertices)
{
    std::vector<int> out;
    out.reserve(vertices.size());
    for (int v : vertices) out.push_back(g.colour(v));
    return out;
}

int longest_even_chain(std::span<const int> colours)
{
    // chain[q]: longest chain ending at position q. Pairs (p, q) are linked iff
    // every colour in [p, q] is at most max(colour[p], colour[q]).
    const int m = static_cast<int>(colours.size());
    std::vector<int> chain(m, 0);
    int best = 0;
    for (int q = 0; q < m; ++q) {
        if (colours[q] % 2 != 0) continue;
        chain[q] = 1;
        int inner_max = colours[q];
        for (int p = q - 1; p >= 0; --p) {
            inner_max = std::max(inner_max, colours[p]);
            if (colours[p] % 2 == 0 && inner_max <= std::max(colours[p], colours[q]))
                chain[q] = std::max(chain[q], chain[p] + 1);
        }
        best = std::max(best, chain[q]);
    }
    return best;
}

}  // namespace pgsep
