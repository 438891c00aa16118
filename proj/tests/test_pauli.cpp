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

#include "conekit/pauli.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace conekit;

namespace {

PauliOperator random_pauli(size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> letter(0, 3), phase(0, 3);
    PauliOperator p(n);
    for (size_t b = 0; b < n; b++) {
        p.set_letter(b, "IXYZ"[letter(rng)]);
    }
    p.set_phase_exp(phase(rng));
    return p;
}

/// Dense matrix of a Pauli operator, read from its text form.
oracle::Dense dense(const PauliOperator &p) {
    std::string s = p.str();
    int k = s[2] - '0';
    std::vector<char> letters(s.begin() + 4, s.end());
    return oracle::kron_letters(letters, oracle::i_pow(k));
}

oracle::Dense dagger(const oracle::Dense &m) {
    oracle::Dense out(m.n);
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out.at(c, r) = std::conj(m.at(r, c));
        }
    }
    return out;
}

}  // namespace

TEST(pauli, single_bond_table) {
    PauliOperator x = PauliOperator::single(1, 0, 'X'), z = PauliOperator::single(1, 0, 'Z');
    ASSERT_EQ((x * z).str(), "i^3:Y");
    ASSERT_EQ((z * x).str(), "i^1:Y");
    PauliOperator y = PauliOperator::single(1, 0, 'Y');
    ASSERT_EQ(y.str(), "i^0:Y");
    ASSERT_TRUE(y.is_hermitian());
    ASSERT_TRUE((y * y).is_identity());
    ASSERT_TRUE((x * x).is_identity());
    ASSERT_FALSE((x * z).is_hermitian());
    ASSERT_EQ((x * z) * (x * z), -PauliOperator::identity(1));
}

TEST(pauli, text_round_trip) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; t++) {
        PauliOperator p = random_pauli(9, rng);
        ASSERT_EQ(PauliOperator::parse(p.str()), p);
    }
    ASSERT_EQ(PauliOperator::parse("i^2:IXZY").str(), "i^2:IXZY");
    ASSERT_THROW(PauliOperator::parse("XZ"), std::invalid_argument);
    ASSERT_THROW(PauliOperator::parse("i^4:X"), std::invalid_argument);
    ASSERT_THROW(PauliOperator::parse("i^0:XQ"), std::invalid_argument);
}

TEST(pauli, product_matches_dense_matrices) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; t++) {
        size_t n = 1 + t % 6;
        PauliOperator p = random_pauli(n, rng), q = random_pauli(n, rng);
        ASSERT_LT(oracle::max_diff(dense(p * q), oracle::matmul(dense(p), dense(q))), 1e-12) << p.str() << " " << q.str();
        ASSERT_LT(oracle::max_diff(dense(p.adjoint()), dagger(dense(p))), 1e-12);
        bool herm = oracle::max_diff(dense(p), dagger(dense(p))) < 1e-12;
        ASSERT_EQ(p.is_hermitian(), herm);
    }
}

TEST(pauli, associative_and_square) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; t++) {
        PauliOperator a = random_pauli(20, rng), b = random_pauli(20, rng), c = random_pauli(20, rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        PauliOperator sq = a * a;
        ASSERT_TRUE(sq.is_identity_up_to_phase());
        ASSERT_TRUE(sq.phase_exp() == 0 || sq.phase_exp() == 2);
        if (a.is_hermitian()) {
            ASSERT_TRUE(sq.is_identity());
        }
        ASSERT_TRUE((a * b).support().is_subset_of(a.support() | b.support()));
    }
}

TEST(pauli, commutation_sign_consistent_with_product) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 500; t++) {
        PauliOperator a = random_pauli(15, rng), b = random_pauli(15, rng);
        int s = commutation_sign(a, b);
        ASSERT_EQ(s * commutation_sign(b, a), 1);
        ASSERT_EQ(a * b, s < 0 ? -(b * a) : b * a);
    }
}

TEST(pauli, dimension_mismatch) {
    ASSERT_THROW(PauliOperator(3) * PauliOperator(4), DimensionError);
    ASSERT_THROW(commutation_sign(PauliOperator(3), PauliOperator(4)), DimensionError);
}

TEST(pauli, star_and_plaquette_shapes) {
    Patch p = build_patch(4);
    ASSERT_EQ(star_operator({2, 2}, p).weight(), 4u);
    ASSERT_EQ(star_operator({0, 0}, p).weight(), 2u);
    ASSERT_EQ(star_operator({0, 2}, p).weight(), 3u);
    for (size_t k = 0; k < p.num_plaquettes(); k++) {
        PauliOperator b = plaquette_operator(p.plaquette(k), p);
        ASSERT_EQ(b.weight(), 4u);
        ASSERT_TRUE(b.x().none());
    }
    PauliOperator a = star_operator({1, 1}, p);
    ASSERT_TRUE(a.z().none());
    ASSERT_EQ(a.phase_exp(), 0);
    ASSERT_THROW(star_operator({5, 0}, p), GeometryError);
    ASSERT_THROW(plaquette_operator({4, 0}, p), GeometryError);
}

TEST(pauli, adjacent_star_and_plaquette_commute) {
    Patch p = build_patch(4);
    PauliOperator a = star_operator({1, 1}, p), b = plaquette_operator({1, 1}, p);
    ASSERT_EQ((a.support() & b.support()).popcount(), 2u);
    ASSERT_EQ(commutation_sign(a, b), 1);
    ASSERT_EQ(a * b, b * a);
}

TEST(pauli, all_generators_commute) {
    for (int L = 2; L <= 6; L++) {
        Patch p = build_patch(L);
        std::vector<PauliOperator> ops;
        for (size_t k = 0; k < p.num_vertices(); k++) ops.push_back(star_operator(p.vertex(k), p));
        for (size_t k = 0; k < p.num_plaquettes(); k++) ops.push_back(plaquette_operator(p.plaquette(k), p));
        for (size_t i = 0; i < ops.size(); i++) {
            for (size_t j = 0; j < ops.size(); j++) {
                ASSERT_EQ(commutation_sign(ops[i], ops[j]), 1);
            }
        }
    }
}

TEST(pauli, path_operators) {
    Patch p = build_patch(4);
    ASSERT_TRUE(path_operator(find_path(PathKind::Primal, {1, 1}, {1, 1}, p), p).is_identity());
    PauliOperator one = path_operator(find_path(PathKind::Primal, {1, 1}, {2, 1}, p), p);
    ASSERT_EQ(one, PauliOperator::single(p.num_bonds(), p.index({1, 1, Orientation::East}), 'Z'));
    PauliOperator dual = path_operator(find_path(PathKind::Dual, {0, 1}, {3, 1}, p), p);
    ASSERT_EQ(dual.weight(), 3u);
    ASSERT_EQ(dual.x().popcount(), 3u);
    ASSERT_TRUE(dual.z().none());
    ASSERT_TRUE(dual.is_hermitian());
    ASSERT_TRUE((dual * dual).is_identity());
}

TEST(pauli, primal_crossing_dual_once_anticommutes) {
    Patch p = build_patch(4);
    PauliOperator f = path_operator(find_path(PathKind::Primal, {0, 2}, {4, 2}, p), p);
    PauliOperator g = path_operator(find_path(PathKind::Dual, {1, 3}, {1, 0}, p), p);
    ASSERT_EQ((f.support() & g.support()).popcount(), 1u);
    ASSERT_EQ(commutation_sign(f, g), -1);
}

TEST(pauli, endpoints_anticommute_with_generators) {
    Patch p = build_patch(4);
    for (size_t a = 0; a < p.num_vertices(); a++) {
        for (size_t b = 0; b < p.num_vertices(); b++) {
            if (a == b) continue;
            Vertex u = p.vertex(a), v = p.vertex(b);
            PauliOperator f = path_operator(find_path(PathKind::Primal, u, v, p), p);
            for (size_t s = 0; s < p.num_vertices(); s++) {
                Vertex w = p.vertex(s);
                ASSERT_EQ(commutation_sign(f, star_operator(w, p)) == -1, w == u || w == v);
            }
            for (size_t s = 0; s < p.num_plaquettes(); s++) {
                ASSERT_EQ(commutation_sign(f, plaquette_operator(p.plaquette(s), p)), 1);
            }
        }
    }
    for (size_t a = 0; a < p.num_plaquettes(); a++) {
        for (size_t b = 0; b < p.num_plaquettes(); b++) {
            if (a == b) continue;
            Plaquette u = p.plaquette(a), v = p.plaquette(b);
            PauliOperator f = path_operator(find_path(PathKind::Dual, u, v, p), p);
            for (size_t s = 0; s < p.num_plaquettes(); s++) {
                Plaquette w = p.plaquette(s);
                ASSERT_EQ(commutation_sign(f, plaquette_operator(w, p)) == -1, w == u || w == v);
            }
            for (size_t s = 0; s < p.num_vertices(); s++) {
                ASSERT_EQ(commutation_sign(f, star_operator(p.vertex(s), p)), 1);
            }
        }
    }
}
