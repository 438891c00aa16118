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

#include "conekit/anyons.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace conekit;

namespace {

/// Symplectic pairing of Z2 x Z2 charges: a string of type a crosses a loop of
/// type b an odd number of times exactly when the e part of one meets the m
/// part of the other.
int pairing(SectorLabel a, SectorLabel b) {
    return ((a.e * b.m + a.m * b.e) & 1) ? -1 : 1;
}

/// Integer determinant by cofactor expansion.
long long cofactor_det(const std::vector<std::vector<long long>> &m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    long long total = 0;
    for (size_t c = 0; c < n; c++) {
        std::vector<std::vector<long long>> minor;
        for (size_t r = 1; r < n; r++) {
            std::vector<long long> row;
            for (size_t k = 0; k < n; k++) {
                if (k != c) row.push_back(m[r][k]);
            }
            minor.push_back(row);
        }
        total += (c % 2 ? -1 : 1) * m[0][c] * cofactor_det(minor);
    }
    return total;
}

PauliOperator random_pauli_in(const std::vector<size_t> &bonds, size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> letter(0, 3);
    PauliOperator p(n);
    for (size_t b : bonds) p.set_letter(b, "IXYZ"[letter(rng)]);
    return p;
}

}  // namespace

TEST(anyons, labels) {
    ASSERT_EQ(fuse(SectorLabel::electric(), SectorLabel::magnetic()), SectorLabel::fermion());
    for (SectorLabel a : all_sectors()) {
        ASSERT_TRUE(fuse(a, a).is_vacuum());
        ASSERT_EQ(fuse(SectorLabel::vacuum(), a), a);
        ASSERT_EQ(conjugate_sector(a), a);
        ASSERT_EQ(SectorLabel::from_index(a.index()), a);
        ASSERT_EQ(parse_sector(a.name()), a);
        ASSERT_EQ(parse_sector(std::string(1, a.group_letter())), a);
        for (SectorLabel b : all_sectors()) ASSERT_EQ(fuse(a, b), fuse(b, a));
    }
    ASSERT_EQ(SectorLabel::fermion().name(), "eps");
    ASSERT_EQ(SectorLabel::magnetic().group_letter(), 'X');
    ASSERT_THROW(parse_sector("q"), std::invalid_argument);
}

TEST(anyons, transporter_shapes) {
    TransporterGeometry g = TransporterGeometry::build(6);
    Transporter t = transporter_truncation(SectorLabel::electric(), 1, g);
    ASSERT_EQ(t.paths.size(), 1u);
    ASSERT_EQ(t.paths[0].kind, PathKind::Primal);
    ASSERT_EQ(t.paths[0].start, (Coord{g.left, g.base}));
    ASSERT_EQ(t.paths[0].end, (Coord{g.right, g.base}));
    ASSERT_EQ(t.op.weight(), static_cast<size_t>(2 + g.right - g.left));
    ASSERT_THROW(transporter_truncation(SectorLabel::electric(), 0, g), NoRoom);
    ASSERT_THROW(transporter_truncation(SectorLabel::electric(), 7, g), NoRoom);
    ASSERT_THROW(transporter_truncation(SectorLabel::vacuum(), 1, g), std::invalid_argument);
    ASSERT_THROW(TransporterGeometry::build(0), NoRoom);
    ASSERT_FALSE(g.first.bonds.intersects(g.second.bonds));
}

TEST(anyons, transporters_square_to_identity_and_commute) {
    TransporterGeometry g = TransporterGeometry::build(8);
    StabilizerGroup group = ground_stabilizers(g.patch);
    for (int n = 1; n <= g.n_max; n++) {
        Transporter vz = transporter_truncation(SectorLabel::electric(), n, g);
        Transporter vx = transporter_truncation(SectorLabel::magnetic(), n, g);
        Transporter vy = transporter_truncation(SectorLabel::fermion(), n, g);
        for (auto *t : {&vz, &vx, &vy}) {
            ASSERT_TRUE(t->op.is_hermitian());
            ASSERT_TRUE((t->op * t->op).is_identity());
        }
        ASSERT_EQ(vy.op, vx.op * vz.op);
        ASSERT_EQ(commutation_sign(vx.op, vz.op), 1);
        auto sz = syndrome(vz.op, group).syndrome;
        ASSERT_EQ(sz.size(), 2u);
        ASSERT_EQ(sz[0].at, (Coord{g.left, g.base}));
        ASSERT_EQ(sz[1].at, (Coord{g.right, g.base}));
        auto sx = syndrome(vx.op, group).syndrome;
        ASSERT_EQ(sx.size(), 2u);
        for (auto &s : sx) ASSERT_EQ(s.kind, SiteKind::Plaquette);
    }
}

TEST(anyons, transporter_vacuum_identity) {
    TransporterGeometry g = TransporterGeometry::build(6);
    StabilizerGroup group = ground_stabilizers(g.patch);
    for (SectorLabel kind : {SectorLabel::electric(), SectorLabel::magnetic(), SectorLabel::fermion()}) {
        for (int n = 1; n <= g.n_max; n++) {
            ASSERT_TRUE(transporter_vacuum_identity(transporter_truncation(kind, n, g), g, group));
        }
    }
    Transporter t = transporter_truncation(SectorLabel::electric(), 3, g);
    PauliOperator shifted =
        path_operator(path_through(PathKind::Primal, {{g.left, g.base}, {g.left, g.base + 1}, {g.right + 1, g.base + 1}},
                                   g.patch),
                      g.patch);
    ASSERT_FALSE(transporter_vacuum_identity(t, shifted, group));
    ASSERT_FALSE(
        transporter_vacuum_identity(t, comparison_operator(SectorLabel::magnetic(), g), group));
}

TEST(anyons, transporter_sign_stability) {
    TransporterGeometry g = TransporterGeometry::build(9);
    std::vector<size_t> local;
    for (size_t b = 0; b < g.patch.num_bonds(); b++) {
        auto ends = g.patch.endpoints(b);
        if (std::max(ends[0].y, ends[1].y) <= g.base + 3) local.push_back(b);
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; t++) {
        PauliOperator f = random_pauli_in(local, g.patch.num_bonds(), rng);
        for (SectorLabel kind : {SectorLabel::electric(), SectorLabel::magnetic(), SectorLabel::fermion()}) {
            int first = commutation_sign(transporter_truncation(kind, 4, g).op, f);
            for (int n = 5; n <= g.n_max; n++) {
                ASSERT_EQ(commutation_sign(transporter_truncation(kind, n, g).op, f), first);
            }
        }
    }
}

TEST(anyons, charged_vectors_orthonormal) {
    TransporterGeometry g = TransporterGeometry::build(4);
    StabilizerGroup group = ground_stabilizers(g.patch);
    auto psi = charged_vectors(g);
    for (size_t a = 0; a < 4; a++) {
        for (size_t b = 0; b < 4; b++) {
            Overlap o = overlap(psi[a], psi[b], group);
            ASSERT_EQ(o, a == b ? Overlap::unit(0) : Overlap::zero());
        }
    }
}

TEST(anyons, sector_of_state_examples) {
    Patch p = build_patch(8);
    StabilizerGroup group = ground_stabilizers(p);
    Region site = finite_region({p.index({4, 4, Orientation::North})}, p);
    DetectionLoop loop = detection_loop(site, p);
    ASSERT_TRUE(sector_of_state(PauliOperator(p.num_bonds()), loop, p).is_vacuum());
    PauliOperator out = path_operator(find_path(PathKind::Primal, {4, 4}, {0, 4}, p), p);
    ASSERT_EQ(sector_of_state(out, loop, p), SectorLabel::electric());
    ASSERT_EQ(sector_of_state(syndrome(out, group), loop), SectorLabel::electric());
    PauliOperator inside = path_operator(find_path(PathKind::Primal, {4, 4}, {4, 5}, p), p);
    ASSERT_TRUE(sector_of_state(inside, loop, p).is_vacuum());
    PauliOperator dual_out = path_operator(find_path(PathKind::Dual, {4, 4}, {4, -1}, p), p);
    ASSERT_EQ(sector_of_state(dual_out, loop, p), SectorLabel::magnetic());
    ASSERT_EQ(sector_of_state(dual_out * out, loop, p), SectorLabel::fermion());
    int ambiguous = 0;
    for (int x = 3; x >= 0; x--) {
        PauliOperator f = path_operator(find_path(PathKind::Primal, {4, 4}, {x, 4}, p), p);
        try {
            ASSERT_EQ(sector_of_state(f, loop, p), SectorLabel::electric());
        } catch (const AmbiguousCharge &) {
            ambiguous++;
            ASSERT_THROW(sector_of_state(syndrome(f, group), loop), AmbiguousCharge);
        }
    }
    ASSERT_GT(ambiguous, 0);
}

TEST(anyons, charge_additivity) {
    Patch p = build_patch(8);
    Region site = finite_region({p.index({4, 4, Orientation::North})}, p);
    DetectionLoop loop = detection_loop(site, p);
    EscapeStrings esc = escape_strings({4, 4}, p);
    auto make = [&](SectorLabel a) {
        PauliOperator f(p.num_bonds());
        if (a.e) f *= esc.electric;
        if (a.m) f *= esc.magnetic;
        return f;
    };
    for (SectorLabel a : all_sectors()) {
        ASSERT_EQ(sector_of_state(make(a), loop, p), a);
        for (SectorLabel b : all_sectors()) {
            ASSERT_EQ(sector_of_state(make(a) * make(b), loop, p), fuse(a, b));
        }
    }
}

TEST(anyons, enumerate_standard_cone) {
    for (int L : {6, 8, 10}) {
        Patch p = build_patch(L);
        StabilizerGroup group = ground_stabilizers(p);
        Region cone = cone_region(standard_cone(L), p);
        DetectionLoop loop = detection_loop(cone, p);
        SectorEnumeration out = enumerate_sectors(cone, loop, p, group, {});
        ASSERT_EQ(out.labels.size(), 4u) << L;
        ASSERT_EQ(out.exhaustive_labels.size(), 4u) << L;
        ASSERT_FALSE(out.partial);
        ASSERT_TRUE(out.invariance);
        ASSERT_TRUE(out.separation);
        ASSERT_EQ(out.invariance_samples, 400u);
        for (const SectorWitness &w : out.witnesses) {
            ASSERT_EQ(w.star_loop_eigenvalue, w.label.e ? -1 : 1);
            ASSERT_EQ(w.plaquette_loop_eigenvalue, w.label.m ? -1 : 1);
        }
    }
}

TEST(anyons, enumerate_without_escape_is_vacuum_only) {
    Patch p = build_patch(6);
    StabilizerGroup group = ground_stabilizers(p);
    Region cone = cone_region(standard_cone(6), p);
    DetectionLoop loop = detection_loop(cone, p);
    EnumerationOptions opt;
    opt.allow_escape = false;
    SectorEnumeration out = enumerate_sectors(cone, loop, p, group, opt);
    ASSERT_EQ(out.labels, std::vector<SectorLabel>{SectorLabel::vacuum()});
}

TEST(anyons, enumerate_budget_exceeded_is_partial) {
    Patch p = build_patch(6);
    StabilizerGroup group = ground_stabilizers(p);
    Region cone = cone_region(standard_cone(6), p);
    DetectionLoop loop = detection_loop(cone, p);
    EnumerationOptions opt;
    opt.max_candidates = 10;
    SectorEnumeration out = enumerate_sectors(cone, loop, p, group, opt);
    ASSERT_TRUE(out.partial);
    ASSERT_TRUE(out.exhaustive_labels.empty());
    ASSERT_EQ(out.labels.size(), 4u);
}

TEST(anyons, endomorphism_localization) {
    Patch p = build_patch(8);
    ConeSpec spec = standard_cone(8);
    for (SectorLabel a : all_sectors()) {
        SectorEndomorphism rho = localized_endomorphism(a, spec, p);
        ASSERT_TRUE(rho.string.support().is_subset_of(rho.cone.bonds));
        for (size_t b = 0; b < p.num_bonds(); b++) {
            if (rho.cone.contains(b)) continue;
            for (char letter : {'X', 'Y', 'Z'}) {
                PauliOperator s = PauliOperator::single(p.num_bonds(), b, letter);
                ASSERT_EQ(apply_endomorphism(rho, s), s);
            }
        }
    }
}

TEST(anyons, endomorphism_involutive_and_flips) {
    Patch p = build_patch(8);
    ConeSpec spec = standard_cone(8);
    std::mt19937_64 rng(9);
    std::vector<size_t> all(p.num_bonds());
    for (size_t b = 0; b < all.size(); b++) all[b] = b;
    for (SectorLabel a : all_sectors()) {
        SectorEndomorphism rho = localized_endomorphism(a, spec, p);
        for (int t = 0; t < 100; t++) {
            PauliOperator x = random_pauli_in(all, p.num_bonds(), rng);
            ASSERT_EQ(apply_endomorphism(rho, apply_endomorphism(rho, x)), x);
        }
    }
    SectorEndomorphism e = localized_endomorphism(SectorLabel::electric(), spec, p);
    SectorEndomorphism m = localized_endomorphism(SectorLabel::magnetic(), spec, p);
    size_t eb = e.string.support().first_set(), mb = m.string.support().first_set();
    PauliOperator xe = PauliOperator::single(p.num_bonds(), eb, 'X');
    PauliOperator zm = PauliOperator::single(p.num_bonds(), mb, 'Z');
    ASSERT_EQ(apply_endomorphism(e, xe), -xe);
    ASSERT_EQ(apply_endomorphism(m, zm), -zm);
    ASSERT_EQ(apply_endomorphism(e, zm), zm);
}

TEST(anyons, statistical_dimensions) {
    Patch p = build_patch(8);
    Rational sum = 0;
    for (SectorLabel a : all_sectors()) {
        Rational d = statistical_dimension(a, standard_cone(8), p);
        ASSERT_EQ(d, 1);
        sum += d * d;
    }
    ASSERT_EQ(sum, 4);
}

TEST(anyons, monodromy_table) {
    for (int L : {6, 8}) {
        Patch p = build_patch(L);
        for (SectorLabel a : all_sectors()) {
            for (SectorLabel b : all_sectors()) {
                ASSERT_EQ(monodromy(a, b, p), pairing(a, b)) << a.name() << " " << b.name();
            }
        }
    }
    Patch p = build_patch(6);
    ASSERT_EQ(monodromy(SectorLabel::electric(), SectorLabel::magnetic(), p), -1);
    ASSERT_EQ(monodromy(SectorLabel::electric(), SectorLabel::electric(), p), 1);
    ASSERT_EQ(monodromy(SectorLabel::fermion(), SectorLabel::electric(), p), -1);
}

TEST(anyons, monodromy_via_transporters) {
    TransporterGeometry g = TransporterGeometry::build(6);
    for (int n = 1; n <= g.n_max; n++) {
        for (SectorLabel a : all_sectors()) {
            for (SectorLabel b : all_sectors()) {
                ASSERT_EQ(monodromy_via_transporter(a, b, g, n), pairing(a, b)) << a.name() << b.name() << n;
            }
        }
    }
}

TEST(anyons, degeneracy) {
    Patch p = build_patch(6);
    TransporterGeometry g = TransporterGeometry::build(4);
    for (SectorLabel a : all_sectors()) {
        ASSERT_EQ(is_degenerate(a, p), a.is_vacuum());
        ASSERT_EQ(fixes_all_transporters(a, g, 3), a.is_vacuum());
    }
}

TEST(anyons, s_matrix) {
    Patch p = build_patch(6);
    SMatrix s = s_matrix(p);
    std::vector<std::vector<long long>> twice(4, std::vector<long long>(4));
    for (SectorLabel a : all_sectors()) {
        for (SectorLabel b : all_sectors()) {
            twice[a.index()][b.index()] = pairing(a, b);
            ASSERT_EQ(s(a, b), Rational(pairing(a, b), 2));
        }
    }
    ASSERT_EQ(s.total_dimension, 2);
    ASSERT_TRUE(s.symmetric);
    ASSERT_TRUE(s.unitary);
    ASSERT_TRUE(s.invertible);
    long long det2 = cofactor_det(twice);
    ASSERT_EQ(std::llabs(det2), 16);
    ASSERT_EQ(s.determinant * 16, det2);
    for (SectorLabel a : all_sectors()) {
        ASSERT_EQ(s(SectorLabel::vacuum(), a), Rational(1, 2));
        ASSERT_EQ(s(a, SectorLabel::vacuum()), Rational(1, 2));
    }
}
