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

// Brute-force reference computations used to derive and cross-check test
// expectations. Nothing here calls into the library's algebra: bonds are
// enumerated from coordinates, operators are dense matrices.

#ifndef CONEKIT_TESTS_ORACLES_HPP
#define CONEKIT_TESTS_ORACLES_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

/// (x, y, north?) triples of every bond of an L-patch, by direct enumeration.
inline std::vector<std::tuple<int, int, bool>> enumerate_bonds(int L) {
    std::vector<std::tuple<int, int, bool>> out;
    for (int y = 0; y <= L; y++) {
        for (int x = 0; x <= L; x++) {
            for (bool north : {false, true}) {
                bool ok = north ? y < L : x < L;
                if (ok) {
                    out.emplace_back(x, y, north);
                }
            }
        }
    }
    return out;
}

/// Dense matrix on n qubits, row-major, size 2^n x 2^n.
struct Dense {
    size_t n = 0;
    std::vector<cd> a;

    explicit Dense(size_t qubits) : n(qubits), a(size_t{1} << (2 * qubits)) {
    }
    size_t dim() const {
        return size_t{1} << n;
    }
    cd &at(size_t r, size_t c) {
        return a[r * dim() + c];
    }
    cd at(size_t r, size_t c) const {
        return a[r * dim() + c];
    }
};

/// Kronecker product of single-qubit matrices, qubit 0 least significant.
inline Dense kron_letters(const std::vector<char> &letters, cd scale) {
    static const cd I2[4] = {1, 0, 0, 1};
    static const cd X2[4] = {0, 1, 1, 0};
    static const cd Y2[4] = {0, cd(0, -1), cd(0, 1), 0};
    static const cd Z2[4] = {1, 0, 0, -1};
    size_t n = letters.size();
    Dense m(n);
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            cd v = scale;
            for (size_t q = 0; q < n; q++) {
                const cd *t = letters[q] == 'X' ? X2 : letters[q] == 'Y' ? Y2 : letters[q] == 'Z' ? Z2 : I2;
                v *= t[((r >> q) & 1) * 2 + ((c >> q) & 1)];
            }
            m.at(r, c) = v;
        }
    }
    return m;
}

inline Dense matmul(const Dense &a, const Dense &b) {
    Dense m(a.n);
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t k = 0; k < a.dim(); k++) {
            if (a.at(r, k) == cd(0)) {
                continue;
            }
            for (size_t c = 0; c < a.dim(); c++) {
                m.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        }
    }
    return m;
}

inline double max_diff(const Dense &a, const Dense &b) {
    double d = 0;
    for (size_t k = 0; k < a.a.size(); k++) {
        d = std::max(d, std::abs(a.a[k] - b.a[k]));
    }
    return d;
}

inline cd i_pow(int k) {
    static const cd t[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return t[((k % 4) + 4) % 4];
}

/// Dense state vector over n qubits; qubit b is bit b of the basis index.
using State = std::vector<cd>;

/// Applies i^k prod X^x Z^z (Z first, then X, on each qubit).
inline State apply_pauli(const State &psi, const std::vector<uint8_t> &x, const std::vector<uint8_t> &z, int k) {
    size_t n = x.size();
    uint64_t xm = 0, zm = 0;
    for (size_t q = 0; q < n; q++) {
        xm |= uint64_t{x[q]} << q;
        zm |= uint64_t{z[q]} << q;
    }
    State out(psi.size());
    cd ph = i_pow(k);
    for (uint64_t b = 0; b < psi.size(); b++) {
        if (psi[b] == cd(0)) {
            continue;
        }
        double s = (__builtin_popcountll(zm & b) & 1) ? -1.0 : 1.0;
        out[b ^ xm] += ph * s * psi[b];
    }
    return out;
}

inline cd inner(const State &a, const State &b) {
    cd s = 0;
    for (size_t k = 0; k < a.size(); k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

/// Ground state of the planar patch: start from |0...0> (all plaquettes +1)
/// and project with (1 + A_s)/2 for every star, then normalize.
inline State ground_state(int L) {
    auto bonds = enumerate_bonds(L);
    size_t n = bonds.size();
    auto index_of = [&](int x, int y, bool north) {
        for (size_t k = 0; k < n; k++) {
            if (bonds[k] == std::make_tuple(x, y, north)) {
                return static_cast<long>(k);
            }
        }
        return -1L;
    };
    State psi(size_t{1} << n);
    psi[0] = 1;
    for (int y = 0; y <= L; y++) {
        for (int x = 0; x <= L; x++) {
            uint64_t mask = 0;
            for (auto [bx, by, north] : {std::tuple{x, y, false}, std::tuple{x - 1, y, false}, std::tuple{x, y, true},
                                         std::tuple{x, y - 1, true}}) {
                long k = index_of(bx, by, north);
                if (k >= 0) {
                    mask |= uint64_t{1} << k;
                }
            }
            State next(psi.size());
            for (uint64_t b = 0; b < psi.size(); b++) {
                next[b] += 0.5 * psi[b];
                next[b ^ mask] += 0.5 * psi[b];
            }
            psi = std::move(next);
        }
    }
    double norm = std::sqrt(std::real(inner(psi, psi)));
    for (auto &v : psi) {
        v /= norm;
    }
    return psi;
}

}  // namespace oracle

#endif
