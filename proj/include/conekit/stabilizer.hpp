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

#ifndef CONEKIT_STABILIZER_HPP
#define CONEKIT_STABILIZER_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "conekit/pauli.hpp"

namespace conekit {

enum class SiteKind : uint8_t { Star, Plaquette };

struct Site {
    SiteKind kind = SiteKind::Star;
    Coord at;
    auto operator<=>(const Site &) const = default;
};

inline std::string to_string(const Site &s) {
    return (s.kind == SiteKind::Star ? "star" : "plaquette") + to_string(s.at);
}

/// True if F anticommutes with the star at v.
inline bool star_violated(const PauliOperator &f, Vertex v, const Patch &patch) {
    bool odd = false;
    for (size_t b : patch.star_bonds(v)) {
        odd ^= f.z(b);
    }
    return odd;
}

/// True if F anticommutes with the plaquette p.
inline bool plaquette_violated(const PauliOperator &f, Plaquette p, const Patch &patch) {
    bool odd = false;
    for (size_t b : patch.plaquette_bonds(p)) {
        odd ^= f.x(b);
    }
    return odd;
}

/// Inner product of two stabilizer-created states: 0 or a power of i.
struct Overlap {
    bool nonzero = false;
    int i_power = 0;

    static Overlap zero() {
        return {};
    }
    static Overlap unit(int k) {
        return {true, ((k % 4) + 4) % 4};
    }
    std::complex<double> value() const {
        static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return nonzero ? table[i_power] : std::complex<double>{0, 0};
    }
    bool operator==(const Overlap &) const = default;
    std::string str() const {
        static const char *table[4] = {"1", "i", "-1", "-i"};
        return nonzero ? table[i_power] : "0";
    }
};

/// Stabilizer group of the ground state: every star and every plaquette
/// operator, with the star at (L, L) dropped because the product of all stars
/// is the identity.
class StabilizerGroup {
   public:
    StabilizerGroup(const Patch &patch, std::vector<Site> sites, std::vector<PauliOperator> generators)
        : patch_(patch), sites_(std::move(sites)), generators_(std::move(generators)) {
        for (size_t g = 0; g < generators_.size(); g++) {
            BitVec row = symplectic(generators_[g]);
            BitVec combo(generators_.size());
            combo.set(g, true);
            reduce(row, combo);
            size_t col = row.first_set();
            if (col == row.size()) {
                throw ConsistencyError("stabilizer generators are linearly dependent");
            }
            for (auto &p : pivots_) {
                if (p.row.get(col)) {
                    p.row ^= row;
                    p.combo ^= combo;
                }
            }
            pivots_.push_back({col, std::move(row), std::move(combo)});
        }
    }

    const Patch &patch() const {
        return patch_;
    }
    size_t size() const {
        return generators_.size();
    }
    size_t rank() const {
        return pivots_.size();
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    const std::vector<Site> &sites() const {
        return sites_;
    }

    /// Generator combination whose product matches F up to phase, if any.
    std::optional<BitVec> decompose(const PauliOperator &f) const {
        if (f.num_bonds() != patch_.num_bonds()) {
            throw DimensionError("operator lives on a different patch");
        }
        BitVec row = symplectic(f);
        BitVec combo(generators_.size());
        reduce(row, combo);
        if (row.any()) {
            return std::nullopt;
        }
        return combo;
    }

    /// Exact ordered product of the selected generators.
    PauliOperator product(const BitVec &combo) const {
        PauliOperator p(patch_.num_bonds());
        for (size_t g : combo.set_bits()) {
            p *= generators_[g];
        }
        return p;
    }

    /// If F = i^k s for s in the group, returns k.
    std::optional<int> stabilizer_phase(const PauliOperator &f) const {
        auto combo = decompose(f);
        if (!combo) {
            return std::nullopt;
        }
        PauliOperator s = product(*combo);
        if (s.x() != f.x() || s.z() != f.z()) {
            throw ConsistencyError("generator product does not reproduce the operator");
        }
        return ((f.phase_exp() - s.phase_exp()) % 4 + 4) % 4;
    }

   private:
    struct Pivot {
        size_t column;
        BitVec row;
        BitVec combo;
    };

    BitVec symplectic(const PauliOperator &f) const {
        size_t n = f.num_bonds();
        BitVec v(2 * n);
        for (size_t b : f.x().set_bits()) {
            v.set(b, true);
        }
        for (size_t b : f.z().set_bits()) {
            v.set(n + b, true);
        }
        return v;
    }
    void reduce(BitVec &row, BitVec &combo) const {
        for (const auto &p : pivots_) {
            if (row.get(p.column)) {
                row ^= p.row;
                combo ^= p.combo;
            }
        }
    }

    Patch patch_;
    std::vector<Site> sites_;
    std::vector<PauliOperator> generators_;
    std::vector<Pivot> pivots_;
};

inline StabilizerGroup ground_stabilizers(const Patch &patch) {
    if (patch.side() < 2) {
        throw InvalidSize("ground state needs a patch side of at least 2");
    }
    std::vector<Site> sites;
    std::vector<PauliOperator> gens;
    int L = patch.side();
    for (size_t k = 0; k < patch.num_vertices(); k++) {
        Vertex v = patch.vertex(k);
        if (v.x == L && v.y == L) {
            continue;
        }
        sites.push_back({SiteKind::Star, v});
        gens.push_back(star_operator(v, patch));
    }
    for (size_t k = 0; k < patch.num_plaquettes(); k++) {
        Plaquette p = patch.plaquette(k);
        sites.push_back({SiteKind::Plaquette, p});
        gens.push_back(plaquette_operator(p, patch));
    }
    StabilizerGroup group(patch, std::move(sites), std::move(gens));
    if (group.rank() != patch.num_bonds()) {
        throw ConsistencyError("stabilizer rank differs from the bond count");
    }
    return group;
}

/// State F Omega with its excitations.
struct ChargedState {
    PauliOperator representative;
    std::vector<Site> syndrome;
};

/// Stars (all of them, including the one omitted from the generators) and
/// plaquettes anticommuting with F, stars first, each in index order.
inline std::vector<Site> syndrome_sites(const PauliOperator &f, const Patch &patch) {
    std::vector<Site> out;
    for (size_t k = 0; k < patch.num_vertices(); k++) {
        Vertex v = patch.vertex(k);
        if (star_violated(f, v, patch)) {
            out.push_back({SiteKind::Star, v});
        }
    }
    for (size_t k = 0; k < patch.num_plaquettes(); k++) {
        Plaquette p = patch.plaquette(k);
        if (plaquette_violated(f, p, patch)) {
            out.push_back({SiteKind::Plaquette, p});
        }
    }
    return out;
}

/// Syndrome as a bit vector: every star in index order, then every plaquette.
inline BitVec syndrome_bits(const PauliOperator &f, const Patch &patch) {
    BitVec out(patch.num_vertices() + patch.num_plaquettes());
    for (size_t k = 0; k < patch.num_vertices(); k++) {
        if (star_violated(f, patch.vertex(k), patch)) {
            out.set(k, true);
        }
    }
    for (size_t k = 0; k < patch.num_plaquettes(); k++) {
        if (plaquette_violated(f, patch.plaquette(k), patch)) {
            out.set(patch.num_vertices() + k, true);
        }
    }
    return out;
}

inline bool has_syndrome(const PauliOperator &f, const Patch &patch) {
    for (size_t k = 0; k < patch.num_vertices(); k++) {
        if (star_violated(f, patch.vertex(k), patch)) {
            return true;
        }
    }
    for (size_t k = 0; k < patch.num_plaquettes(); k++) {
        if (plaquette_violated(f, patch.plaquette(k), patch)) {
            return true;
        }
    }
    return false;
}

inline ChargedState syndrome(const PauliOperator &f, const StabilizerGroup &group) {
    return {f, syndrome_sites(f, group.patch())};
}

/// <F Omega, G Omega>.
inline Overlap overlap(const PauliOperator &f, const PauliOperator &g, const StabilizerGroup &group) {
    PauliOperator m = f.adjoint() * g;
    if (has_syndrome(m, group.patch())) {
        return Overlap::zero();
    }
    auto k = group.stabilizer_phase(m);
    if (!k) {
        throw ConsistencyError("syndrome-free operator outside the stabilizer group");
    }
    return Overlap::unit(*k);
}

/// F Omega == G Omega.
inline bool states_equal(const PauliOperator &f, const PauliOperator &g, const StabilizerGroup &group) {
    PauliOperator m = g.adjoint() * f;
    if (has_syndrome(m, group.patch())) {
        return false;
    }
    auto k = group.stabilizer_phase(m);
    return k && *k == 0;
}

}  // namespace conekit

#endif
