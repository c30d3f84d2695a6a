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

#include <random>
#include <sstream>

#include "pgsep/solvers.hpp"

namespace pgsep {

std::vector<std::string> differential_methods()
{
    std::vector<std::string> out{"zielonka"};
    for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour})
        for (auto k : {UpdateKind::Basic, UpdateKind::Antagonistic})
            out.push_back(std::string("product-") + to_string(v) + "-" + to_string(k));
    for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour})
        out.push_back(std::string("lifting-") + to_string(v));
    return out;
}

std::size_t DifferentialReport::disagreements() const
{
    std::size_t n = 0;
    for (const auto& r : rows) n += r.agree ? 0 : 1;
    return n;
}

std::string DifferentialReport::to_csv() const
{
    std::ostringstream out;
    out << "seed,n,colours";
    for (const auto& m : differential_methods()) out << ',' << m << ',' << m << "_steps";
    out << ",agree\n";
    for (const auto& r : rows) {
        out << r.seed << ',' << r.vertices << ',' << r.colours;
        for (const auto& m : r.methods) {
            out << ',';
            for (Player p : m.winner) out << (p == Player::Even ? '0' : '1');
            out << ',' << m.steps;
        }
        out << ',' << (r.agree ? 1 : 0) << '\n';
    }
    return out.str();
}

DifferentialReport differential(const DifferentialConfig& cfg)
{
    if (cfg.min_vertices < 1 || cfg.max_vertices < cfg.min_vertices)
        throw std::invalid_argument("empty vertex range");
    DifferentialReport rep;
    for (std::uint64_t seed = cfg.seed_begin; seed < cfg.seed_end; ++seed) {
        std::mt19937_64 rng(seed);
        RandomGameConfig gc;
        gc.vertices = std::uniform_int_distribution<int>(cfg.min_vertices, cfg.max_vertices)(rng);
        gc.max_colour = cfg.max_colour;
        gc.min_degree = std::min(cfg.min_degree, gc.vertices);
        gc.max_degree = std::min(cfg.max_degree, gc.vertices);
        gc.seed = seed;
        const auto g = generate_random(gc);

        DifferentialRow row;
        row.seed = seed;
        row.vertices = g.size();
        row.colours = g.max_colour();
        auto run = [&](const std::string& name, const SolveRequest& req) {
            SolveStats st;
            auto ws = solve(g, req, &st);
            row.methods.push_back({name, std::move(ws.winner), st.steps});
        };
        run("zielonka", SolveRequest{});
        for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour})
            for (auto k : {UpdateKind::Basic, UpdateKind::Antagonistic}) {
                SolveRequest req;
                req.algorithm = Algorithm::Product;
                req.variant = v;
                req.update = k;
                run(std::string("product-") + to_string(v) + "-" + to_string(k), req);
            }
        for (auto v : {Variant::Classic, Variant::Concise, Variant::Colour}) {
            SolveRequest req;
            req.algorithm = Algorithm::Lifting;
            req.variant = v;
            run(std::string("lifting-") + to_string(v), req);
        }
        for (const auto& m : row.methods)
            if (m.winner != row.methods.front().winner) row.agree = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace pgsep
