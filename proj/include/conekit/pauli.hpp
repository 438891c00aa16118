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

#ifndef CONEKIT_PAULI_HPP
#define CONEKIT_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "conekit/bits.hpp"
#include "conekit/geometry.hpp"

namespace conekit {

/// Signed Pauli string i^k * prod_b X_b^{x_b} Z_b^{z_b}, X before Z on each bond.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t num_bonds) : x_(num_bonds), z_(num_bonds) {
    }
    PauliOperator(BitVec x, BitVec z, int phase) : x_(std::move(x)), z_(std::move(z)), phase_(wrap(phase)) {
        if (x_.size() != z_.size()) {
            throw DimensionError("x and z parts differ in length");
        }
    }

    static PauliOperator identity(size_t num_bonds) {
        return PauliOperator(num_bonds);
    }
    /// One of 'X', 'Y', 'Z' on a single bond; 'Y' is the hermitian Pauli Y = iXZ.
    static PauliOperator single(size_t num_bonds, size_t bond, char letter) {
        PauliOperator p(num_bonds);
        p.set_letter(bond, letter);
        return p;
    }

    size_t num_bonds() const {
        return x_.size();
    }
    const BitVec &x() const {
        return x_;
    }
    const BitVec &z() const {
        return z_;
    }
    bool x(size_t b) const {
        return x_.get(b);
    }
    bool z(size_t b) const {
        return z_.get(b);
    }
    int phase_exp() const {
        return phase_;
    }

    /// Overwrites bond b with the given letter, keeping the operator's overall
    /// meaning as stated ('Y' contributes its factor of i).
    void set_letter(size_t b, char letter) {
        if (x_.get(b) && z_.get(b)) {
            phase_ = wrap(phase_ - 1);
        }
        x_.set(b, letter == 'X' || letter == 'Y');
        z_.set(b, letter == 'Z' || letter == 'Y');
        if (letter == 'Y') {
            phase_ = wrap(phase_ + 1);
        } else if (letter != 'X' && letter != 'Z' && letter != 'I') {
            throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
        }
    }
    void flip_x(size_t b) {
        x_.flip(b);
    }
    void flip_z(size_t b) {
        z_.flip(b);
    }
    void set_phase_exp(int k) {
        phase_ = wrap(k);
    }

    BitVec support() const {
        return x_ | z_;
    }
    size_t weight() const {
        return support().popcount();
    }
    size_t num_y() const {
        return (x_ & z_).popcount();
    }
    bool is_identity_up_to_phase() const {
        return x_.none() && z_.none();
    }
    bool is_identity() const {
        return is_identity_up_to_phase() && phase_ == 0;
    }

    bool is_hermitian() const {
        return (phase_ & 1) == (num_y() & 1);
    }
    PauliOperator adjoint() const {
        return PauliOperator(x_, z_, -phase_ + 2 * static_cast<int>(num_y()));
    }
    PauliOperator operator-() const {
        return PauliOperator(x_, z_, phase_ + 2);
    }
    PauliOperator times_i_pow(int k) const {
        return PauliOperator(x_, z_, phase_ + k);
    }

    friend PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
        if (p.num_bonds() != q.num_bonds()) {
            throw DimensionError("Pauli operators act on different bond counts");
        }
        int k = p.phase_ + q.phase_ + 2 * static_cast<int>(p.z_.dot(q.x_));
        return PauliOperator(p.x_ ^ q.x_, p.z_ ^ q.z_, k);
    }
    PauliOperator &operator*=(const PauliOperator &q) {
        if (num_bonds() != q.num_bonds()) {
            throw DimensionError("Pauli operators act on different bond counts");
        }
        phase_ = wrap(phase_ + q.phase_ + 2 * static_cast<int>(z_.dot(q.x_)));
        x_ ^= q.x_;
        z_ ^= q.z_;
        return *this;
    }

    bool operator==(const PauliOperator &) const = default;

    /// "i^k:" followed by one letter per bond; Y is the hermitian Pauli Y.
    std::string str() const {
        std::string letters;
        letters.reserve(num_bonds());
        for (size_t b = 0; b < num_bonds(); b++) {
            bool xb = x_.get(b), zb = z_.get(b);
            letters.push_back(xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
        }
        int k = wrap(phase_ - static_cast<int>(num_y()));
        return "i^" + std::to_string(k) + ":" + letters;
    }
    static PauliOperator parse(std::string_view text) {
        if (text.size() < 4 || text.substr(0, 2) != "i^" || text[3] != ':' || text[2] < '0' || text[2] > '3') {
            throw std::invalid_argument("Pauli text must start with i^k: where k is 0..3");
        }
        std::string_view letters = text.substr(4);
        PauliOperator p(letters.size());
        for (size_t b = 0; b < letters.size(); b++) {
            p.set_letter(b, letters[b]);
        }
        p.phase_ = wrap(p.phase_ + (text[2] - '0'));
        return p;
    }

   private:
    static uint8_t wrap(int k) {
        return static_cast<uint8_t>(((k % 4) + 4) % 4);
    }

    BitVec x_;
    BitVec z_;
    uint8_t phase_ = 0;
};

/// +1 if P and Q commute, -1 if they anticommute.
inline int commutation_sign(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_bonds() != q.num_bonds()) {
        throw DimensionError("Pauli operators act on different bond counts");
    }
    return (p.x().dot(q.z()) ^ p.z().dot(q.x())) ? -1 : 1;
}

inline PauliOperator star_operator(Vertex v, const Patch &patch) {
    PauliOperator p(patch.num_bonds());
    for (size_t b : patch.star_bonds(v)) {
        p.flip_x(b);
    }
    return p;
}

inline PauliOperator plaquette_operator(Plaquette f, const Patch &patch) {
    PauliOperator p(patch.num_bonds());
    for (size_t b : patch.plaquette_bonds(f)) {
        p.flip_z(b);
    }
    return p;
}

/// Z along a primal path, X on every bond a dual path crosses.
inline PauliOperator path_operator(const Path &path, const Patch &patch) {
    PauliOperator p(patch.num_bonds());
    for (size_t b : path.bonds) {
        if (b >= patch.num_bonds()) {
            throw GeometryError("path bond outside patch");
        }
        if (path.kind == PathKind::Primal) {
            p.flip_z(b);
        } else {
            p.flip_x(b);
        }
    }
    return p;
}

}  // namespace conekit

#endif
