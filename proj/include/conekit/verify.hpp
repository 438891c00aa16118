// Copyright 2026 The conekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONEKIT_VERIFY_HPP
#define CONEKIT_VERIFY_HPP

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conekit/dense.hpp"
#include "conekit/index.hpp"

namespace conekit {

struct Config {
    int size = 6;
    int truncation = 4;
    int budget = 4;
    uint64_t seed = 7;
    int samples = 100;
    ArithmeticMode mode = ArithmeticMode::Exact;
};

/// Throws std::invalid_argument for configurations the suites cannot run.
inline void validate_config(const Config &c) {
    if (c.size < 6 || c.size > 40) {
        throw std::invalid_argument("--size must be between 6 and 40");
    }
    if (c.truncation < 2 || c.truncation > 12) {
        throw std::invalid_argument("--truncation must be between 2 and 12");
    }
    if (c.budget < 0 || c.budget > 6) {
        throw std::invalid_argument("--budget must be between 0 and 6");
    }
    if (c.samples < 1 || c.samples > 100000) {
        throw std::invalid_argument("--samples must be between 1 and 100000");
    }
}

inline std::string mode_name(ArithmeticMode m) {
    return m == ArithmeticMode::Exact ? "exact" : "float";
}

struct CheckRecord {
    std::string check_id;
    std::string claim_tag;
    bool passed = false;
    std::string computed_value;
    std::string expected_value;
    std::string tolerance = "exact";
    double runtime_ms = 0;
};

namespace detail {

template <typename F>
CheckRecord timed(F &&body) {
    auto start = std::chrono::steady_clock::now();
    CheckRecord r = body();
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string ratio(size_t good, size_t total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

/// Symplectic pairing of Z2 x Z2: -1 when the e part of one label meets the
/// m part of the other an odd number of times.
inline int pairing(SectorLabel a, SectorLabel b) {
    return ((a.e * b.m + a.m * b.e) & 1) ? -1 : 1;
}

/// Self-avoiding closed walks of length 4..max_len on the grid
/// [0, w] x [0, h], each returned once as its vertex cycle.
inline std::vector<std::vector<Coord>> grid_polygons(int w, int h, int max_len) {
    auto id = [&](Coord c) { return c.y * (w + 1) + c.x; };
    std::vector<std::vector<Coord>> out;
    std::vector<Coord> walk;
    std::vector<char> used((w + 1) * (h + 1), 0);
    static const Coord steps[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    auto dfs = [&](auto &&self, Coord start) -> void {
        Coord cur = walk.back();
        for (const Coord &d : steps) {
            Coord nx{cur.x + d.x, cur.y + d.y};
            if (nx.x < 0 || nx.y < 0 || nx.x > w || nx.y > h) {
                continue;
            }
            if (nx == start) {
                if (walk.size() >= 4 && id(walk[1]) < id(walk.back())) {
                    out.push_back(walk);
                }
                continue;
            }
            if (used[id(nx)] || id(nx) < id(start) || static_cast<int>(walk.size()) >= max_len) {
                continue;
            }
            used[id(nx)] = 1;
            walk.push_back(nx);
            self(self, start);
            walk.pop_back();
            used[id(nx)] = 0;
        }
    };
    for (int y = 0; y <= h; y++) {
        for (int x = 0; x <= w; x++) {
            walk = {{x, y}};
            used[id({x, y})] = 1;
            dfs(dfs, Coord{x, y});
            used[id({x, y})] = 0;
        }
    }
    return out;
}

/// Loop operator of a vertex cycle (primal) or face cycle (dual), and the
/// sites it encloses by ray casting to the right.
inline std::pair<PauliOperator, std::set<Site>> loop_and_interior(PathKind kind, const std::vector<Coord> &cycle,
                                                                  const Patch &patch) {
    PauliOperator op(patch.num_bonds());
    std::vector<std::pair<Coord, Coord>> vertical;
    for (size_t i = 0; i < cycle.size(); i++) {
        Coord a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (kind == PathKind::Primal) {
            Coord lo = std::min(a, b, [](Coord p, Coord q) { return p.x + p.y < q.x + q.y; });
            op.flip_z(patch.index({lo.x, lo.y, a.x == b.x ? Orientation::North : Orientation::East}));
        } else {
            op.flip_x(*patch.crossing(a, b));
        }
        if (a.x == b.x) {
            vertical.push_back({a, b});
        }
    }
    std::set<Site> inside;
    if (kind == PathKind::Primal) {
        for (size_t k = 0; k < patch.num_plaquettes(); k++) {
            Plaquette p = patch.plaquette(k);
            int crossings = 0;
            for (auto [a, b] : vertical) {
                crossings += a.x > p.x && std::min(a.y, b.y) == p.y;
            }
            if (crossings & 1) {
                inside.insert({SiteKind::Plaquette, p});
            }
        }
    } else {
        for (size_t k = 0; k < patch.num_vertices(); k++) {
            Vertex v = patch.vertex(k);
            int crossings = 0;
            for (auto [a, b] : vertical) {
                crossings += a.x >= v.x && std::min(a.y, b.y) == v.y - 1;
            }
            if (crossings & 1) {
                inside.insert({SiteKind::Star, v});
            }
        }
    }
    return {op, inside};
}

}  // namespace detail

/// Pimsner-Popa constant for k = 1..5 cone bonds and truncations 2..6 plus
/// the configured one.
inline CheckRecord check_index_constant(const Config &cfg) {
    return detail::timed([&] {
        std::set<int> ns{2, 3, 4, 5, 6, cfg.truncation};
        std::set<std::string> lambdas;
        size_t good = 0, total = 0;
        for (size_t k = 1; k <= 5; k++) {
            for (int n : ns) {
                PimsnerPopaResult r = pimsner_popa_constant(index_setup(k, n).action);
                total++;
                lambdas.insert(r.certified() ? to_string(r.lambda) : "uncertified");
                good += r.certified() && r.lambda == Rational(1, 4) && r.index == 4;
            }
        }
        std::string computed;
        for (const auto &l : lambdas) {
            computed += (computed.empty() ? "" : ",") + l;
        }
        return CheckRecord{"index.pimsner_popa", "cone index equals four", good == total,
                           "lambda=" + computed + " certified " + detail::ratio(good, total), "lambda=1/4 certified all"};
    });
}

/// E(X*X) >= X*X / 4 on random elements, sharp at the averaging projection.
inline CheckRecord check_index_samples(const Config &cfg) {
    return detail::timed([&] {
        std::mt19937_64 rng(cfg.seed);
        Rational quarter(1, 4);
        size_t good = 0, total = 0;
        for (size_t k : {size_t{1}, size_t{2}}) {
            auto act = index_setup(k, cfg.truncation).action;
            int count = k == 1 ? cfg.samples : std::max(1, cfg.samples / 10);
            for (int t = 0; t < count; t++) {
                CrossedProductElement x(act);
                for (size_t g = 0; g < act->order(); g++) {
                    x.block(g) = act->algebra().random_element(rng, 3);
                }
                total++;
                good += pimsner_popa_holds(x, quarter, cfg.mode);
            }
        }
        auto act = index_setup(1, cfg.truncation).action;
        CrossedProductElement p(act);
        for (size_t g = 0; g < act->order(); g++) {
            p.block(g) = AlgebraElement(Word{}, Gaussian(quarter));
        }
        bool sharp = pimsner_popa_holds(p, quarter, cfg.mode) &&
                     !pimsner_popa_holds(p, quarter + Rational(1, 1000), cfg.mode);
        return CheckRecord{"index.sampled_bound", "E(X) >= X/4 on positives, optimal", good == total && sharp,
                           detail::ratio(good, total) + (sharp ? " sharp" : " not sharp"),
                           detail::ratio(total, total) + " sharp",
                           cfg.mode == ArithmeticMode::Exact ? "exact" : "1e-9"};
    });
}

inline CheckRecord check_sector_count(const Config &cfg) {
    return detail::timed([&] {
        bool ok = true;
        std::string computed;
        for (int L : {cfg.size, cfg.size + 2, cfg.size + 4}) {
            Patch p = build_patch(L);
            StabilizerGroup group = ground_stabilizers(p);
            Region cone = cone_region(standard_cone(L), p);
            DetectionLoop loop = detection_loop(cone, p);
            EnumerationOptions opt;
            opt.budget = cfg.budget;
            opt.samples = cfg.samples;
            opt.seed = cfg.seed;
            SectorEnumeration out = enumerate_sectors(cone, loop, p, group, opt);
            ok = ok && out.labels.size() == 4 && out.exhaustive_labels.size() == 4 && !out.partial &&
                 out.invariance && out.separation;
            computed += (computed.empty() ? "" : ",") + std::string("L=") + std::to_string(L) + ":" +
                        std::to_string(out.labels.size());
        }
        return CheckRecord{"sectors.four_labels", "four distinct irreducible charges", ok, computed, "4 on each size"};
    });
}

inline CheckRecord check_dimension_sum(const Config &cfg) {
    return detail::timed([&] {
        Patch p = build_patch(cfg.size);
        Rational sum = 0;
        for (SectorLabel a : all_sectors()) {
            Rational d = statistical_dimension(a, standard_cone(cfg.size), p);
            sum += d * d;
        }
        PimsnerPopaResult r = pimsner_popa_constant(index_setup(2, cfg.truncation).action);
        return CheckRecord{"sectors.dimension_sum", "sum of d^2 equals the index", r.certified() && sum == r.index,
                           to_string(sum), to_string(r.index)};
    });
}

inline CheckRecord check_monodromy(const Config &cfg) {
    return detail::timed([&] {
        Patch p = build_patch(cfg.size);
        TransporterGeometry g = TransporterGeometry::build(cfg.truncation);
        bool ok = true;
        std::string computed, expected;
        for (SectorLabel a : all_sectors()) {
            for (SectorLabel b : all_sectors()) {
                int m = monodromy(a, b, p);
                ok = ok && m == detail::pairing(a, b) &&
                     monodromy_via_transporter(a, b, g, cfg.truncation) == detail::pairing(a, b);
                computed += m > 0 ? '+' : '-';
                expected += detail::pairing(a, b) > 0 ? '+' : '-';
            }
            computed += a.index() < 3 ? "/" : "";
            expected += a.index() < 3 ? "/" : "";
        }
        return CheckRecord{"braiding.monodromy", "monodromy is the Z2 x Z2 bicharacter", ok, computed, expected};
    });
}

inline CheckRecord check_degeneracy(const Config &cfg) {
    return detail::timed([&] {
        Patch p = build_patch(cfg.size);
        TransporterGeometry g = TransporterGeometry::build(cfg.truncation);
        std::string computed;
        bool consistent = true;
        for (SectorLabel a : all_sectors()) {
            bool deg = is_degenerate(a, p);
            consistent = consistent && deg == fixes_all_transporters(a, g, cfg.truncation);
            if (deg) {
                computed += (computed.empty() ? "" : ",") + a.name();
            }
        }
        return CheckRecord{"braiding.degeneracy", "only the vacuum is degenerate", consistent && computed == "1",
                           computed.empty() ? "none" : computed, "1"};
    });
}

inline CheckRecord check_s_matrix(const Config &cfg) {
    return detail::timed([&] {
        SMatrix s = s_matrix(build_patch(cfg.size));
        Rational det2 = s.determinant * 16;
        bool ok = s.symmetric && s.unitary && s.invertible && abs(det2) == 16;
        return CheckRecord{"smatrix.invertible", "S is invertible", ok,
                           "det(2S)=" + to_string(det2) + (s.unitary ? " unitary" : " not unitary"),
                           "|det(2S)|=16 unitary"};
    });
}

inline std::vector<CheckRecord> check_paths(const Config &cfg) {
    Patch p = build_patch(cfg.size);
    StabilizerGroup group = ground_stabilizers(p);
    std::vector<CheckRecord> out;
    out.push_back(detail::timed([&] {
        size_t good = 0, total = 0;
        std::mt19937_64 rng(cfg.seed);
        for (PathKind kind : {PathKind::Primal, PathKind::Dual}) {
            std::vector<Coord> sites;
            if (kind == PathKind::Primal) {
                for (size_t k = 0; k < p.num_vertices(); k++) sites.push_back(p.vertex(k));
            } else {
                for (size_t k = 0; k < p.num_plaquettes(); k++) sites.push_back(p.plaquette(k));
            }
            std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
            for (size_t a = 0; a < sites.size(); a++) {
                for (size_t b = 0; b < sites.size(); b++) {
                    Coord u = sites[a], v = sites[b], w = sites[pick(rng)], other = sites[(b + 1) % sites.size()];
                    PauliOperator f = path_operator(find_path(kind, u, v, p), p);
                    PauliOperator r = path_operator(find_path(kind, v, u, p), p);
                    PauliOperator via = path_operator(path_through(kind, {u, w, v}, p), p);
                    PauliOperator moved = path_operator(find_path(kind, u, other, p), p);
                    total += 3;
                    good += states_equal(f, r, group);
                    good += states_equal(f, via, group);
                    good += !states_equal(f, moved, group);
                }
            }
        }
        return CheckRecord{"paths.deformation", "same endpoints give the same state", good == total,
                           detail::ratio(good, total), detail::ratio(total, total)};
    }));
    out.push_back(detail::timed([&] {
        size_t good = 0, total = 0;
        PauliOperator id(p.num_bonds());
        for (PathKind kind : {PathKind::Primal, PathKind::Dual}) {
            int extent = kind == PathKind::Primal ? cfg.size : cfg.size - 1;
            for (const auto &cycle : detail::grid_polygons(extent, extent, 12)) {
                auto [op, inside] = detail::loop_and_interior(kind, cycle, p);
                auto combo = group.decompose(op);
                std::set<Site> used;
                if (combo) {
                    for (size_t k : combo->set_bits()) used.insert(group.sites()[k]);
                }
                total++;
                good += states_equal(op, id, group) && group.stabilizer_phase(op) == 0 && used == inside;
            }
        }
        return CheckRecord{"paths.loops", "contractible loops fix the ground state", good == total,
                           detail::ratio(good, total), detail::ratio(total, total)};
    }));
    out.push_back(detail::timed([&] {
        size_t good = 0, total = 0;
        for (PathKind kind : {PathKind::Primal, PathKind::Dual}) {
            size_t count = kind == PathKind::Primal ? p.num_vertices() : p.num_plaquettes();
            auto site = [&](size_t k) { return kind == PathKind::Primal ? p.vertex(k) : p.plaquette(k); };
            for (size_t a = 0; a < count; a++) {
                for (size_t b = 0; b < count; b++) {
                    if (a == b) continue;
                    PauliOperator f = path_operator(find_path(kind, site(a), site(b), p), p);
                    std::set<Site> want{{kind == PathKind::Primal ? SiteKind::Star : SiteKind::Plaquette, site(a)},
                                        {kind == PathKind::Primal ? SiteKind::Star : SiteKind::Plaquette, site(b)}};
                    auto got = syndrome_sites(f, p);
                    total++;
                    good += std::set<Site>(got.begin(), got.end()) == want && got.size() == 2;
                }
            }
        }
        return CheckRecord{"paths.endpoints", "excitations sit at the path endpoints", good == total,
                           detail::ratio(good, total), detail::ratio(total, total)};
    }));
    return out;
}

inline std::vector<CheckRecord> check_transporters(const Config &cfg) {
    int n_max = std::max(cfg.truncation, 6);
    TransporterGeometry g = TransporterGeometry::build(n_max);
    StabilizerGroup group = ground_stabilizers(g.patch);
    const std::array<SectorLabel, 3> kinds{SectorLabel::electric(), SectorLabel::magnetic(), SectorLabel::fermion()};
    std::vector<CheckRecord> out;
    out.push_back(detail::timed([&] {
        size_t good = 0, total = 0;
        for (SectorLabel kind : kinds) {
            for (int n = 1; n <= n_max; n++) {
                Transporter t = transporter_truncation(kind, n, g);
                total++;
                good += t.op.is_hermitian() && (t.op * t.op).is_identity();
            }
        }
        return CheckRecord{"transporters.square", "V^2 = I", good == total, detail::ratio(good, total),
                           detail::ratio(total, total)};
    }));
    out.push_back(detail::timed([&] {
        std::vector<size_t> local;
        for (size_t b = 0; b < g.patch.num_bonds(); b++) {
            auto ends = g.patch.endpoints(b);
            if (std::max(ends[0].y, ends[1].y) <= g.base + 2) local.push_back(b);
        }
        BitVec mask(g.patch.num_bonds());
        for (size_t b : local) mask.set(b, true);
        std::mt19937_64 rng(cfg.seed);
        size_t good = 0, total = 0;
        for (int s = 0; s < cfg.samples; s++) {
            PauliOperator f = random_pauli_on(mask, rng);
            for (SectorLabel kind : kinds) {
                int first = commutation_sign(transporter_truncation(kind, 3, g).op, f);
                bool stable = true;
                for (int n = 4; n <= n_max; n++) {
                    stable = stable && commutation_sign(transporter_truncation(kind, n, g).op, f) == first;
                }
                total++;
                good += stable;
            }
        }
        return CheckRecord{"transporters.sign_stability", "commutation sign is the same for all large n", good == total,
                           detail::ratio(good, total), detail::ratio(total, total)};
    }));
    out.push_back(detail::timed([&] {
        size_t good = 0, total = 0;
        for (SectorLabel kind : kinds) {
            for (int n = 1; n <= n_max; n++) {
                total++;
                good += transporter_vacuum_identity(transporter_truncation(kind, n, g), g, group);
            }
        }
        Transporter t = transporter_truncation(SectorLabel::electric(), 2, g);
        bool mismatch = !transporter_vacuum_identity(t, comparison_operator(SectorLabel::magnetic(), g), group);
        return CheckRecord{"transporters.vacuum_identity", "V Omega equals the short-route state",
                           good == total && mismatch, detail::ratio(good, total), detail::ratio(total, total)};
    }));
    out.push_back(detail::timed([&] {
        size_t good = 0, total = 0;
        for (int n = 1; n <= n_max; n++) {
            for (int m = 1; m <= n_max; m++) {
                total++;
                good += commutation_sign(transporter_truncation(SectorLabel::magnetic(), n, g).op,
                                         transporter_truncation(SectorLabel::electric(), m, g).op) == 1;
            }
        }
        return CheckRecord{"transporters.commute", "V_X and V_Z commute", good == total, detail::ratio(good, total),
                           detail::ratio(total, total)};
    }));
    out.push_back(detail::timed([&] {
        auto psi = charged_vectors(g);
        size_t good = 0;
        for (size_t a = 0; a < 4; a++) {
            for (size_t b = 0; b < 4; b++) {
                good += overlap(psi[a], psi[b], group) == (a == b ? Overlap::unit(0) : Overlap::zero());
            }
        }
        return CheckRecord{"transporters.orthogonal", "four orthogonal charged vectors", good == 16,
                           detail::ratio(good, 16), "16/16"};
    }));
    return out;
}

inline std::vector<CheckRecord> check_crossed_product(const Config &cfg) {
    int n = std::max(cfg.truncation, 4);
    std::vector<CheckRecord> out;
    out.push_back(detail::timed([&] {
        IndexSetup s = index_setup(3, n);
        std::mt19937_64 rng(cfg.seed);
        size_t good = 0, total = 100;
        for (size_t t = 0; t < total; t++) {
            CrossedProductElement a(s.action), b(s.action);
            for (size_t g = 0; g < 4; g++) {
                a.block(g) = s.action->algebra().random_element(rng, 3);
                b.block(g) = s.action->algebra().random_element(rng, 3);
            }
            good += phi_map(cp_multiply(a, b)) == phi_map(a) * phi_map(b);
        }
        return CheckRecord{"crossed.phi_multiplicative", "phi is multiplicative", good == total,
                           detail::ratio(good, total), detail::ratio(total, total)};
    }));
    out.push_back(detail::timed([&] {
        size_t good = 0, total = 0;
        std::string computed;
        for (size_t k = 1; k <= 3; k++) {
            IndexSetup s = index_setup(k, n);
            StabilizerGroup group = ground_stabilizers(s.geometry.patch);
            InjectivityResult r = phi_injectivity_check(*s.action, group);
            total++;
            good += r.injective && r.isolated;
            computed += (computed.empty() ? "" : ",") + std::string("k=") + std::to_string(k) + ":" +
                        std::to_string(r.rank) + "/" + std::to_string(r.columns);
        }
        return CheckRecord{"crossed.phi_injective", "phi is injective", good == total, computed, "full rank"};
    }));
    return out;
}

/// states_equal and overlap against a dense state vector on the L = 2 patch.
inline CheckRecord check_dense_oracle(const Config &cfg) {
    return detail::timed([&] {
        Patch p = build_patch(2);
        StabilizerGroup group = ground_stabilizers(p);
        DenseState omega = DenseState::ground(p);
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> coin(0, 1), letter(0, 3);
        std::uniform_int_distribution<size_t> bond(0, p.num_bonds() - 1);
        size_t good = 0, total = 200;
        for (size_t t = 0; t < total; t++) {
            PauliOperator a(p.num_bonds());
            for (size_t b = 0; b < p.num_bonds(); b++) a.set_letter(b, "IXYZ"[letter(rng)]);
            a.set_phase_exp(letter(rng));
            PauliOperator q = a;
            for (const auto &gen : group.generators()) {
                if (coin(rng)) q *= gen;
            }
            if (coin(rng)) q *= PauliOperator::single(p.num_bonds(), bond(rng), "XYZ"[letter(rng) % 3]);
            q = q.times_i_pow(letter(rng));
            std::complex<double> ip = omega.apply(a).inner(omega.apply(q));
            bool equal = std::abs(ip - 1.0) < 1e-9;
            good += std::abs(overlap(a, q, group).value() - ip) < 1e-9 && states_equal(q, a, group) == equal;
        }
        return CheckRecord{"stabilizer.dense_oracle", "stabilizer engine matches brute force", good == total,
                           detail::ratio(good, total), detail::ratio(total, total), "1e-9"};
    });
}

/// Every check, in a fixed order.
inline std::vector<CheckRecord> run_all_checks(const Config &cfg) {
    std::vector<CheckRecord> out;
    out.push_back(check_index_constant(cfg));
    out.push_back(check_index_samples(cfg));
    out.push_back(check_sector_count(cfg));
    out.push_back(check_dimension_sum(cfg));
    out.push_back(check_monodromy(cfg));
    out.push_back(check_degeneracy(cfg));
    out.push_back(check_s_matrix(cfg));
    for (auto &r : check_paths(cfg)) out.push_back(std::move(r));
    for (auto &r : check_transporters(cfg)) out.push_back(std::move(r));
    for (auto &r : check_crossed_product(cfg)) out.push_back(std::move(r));
    out.push_back(check_dense_oracle(cfg));
    return out;
}

}  // namespace conekit

#endif
