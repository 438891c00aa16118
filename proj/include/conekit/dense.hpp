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

#ifndef CONEKIT_DENSE_HPP
#define CONEKIT_DENSE_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <vector>

#include "conekit/pauli.hpp"

namespace conekit {

/// State vector over every bond of a small patch; bond b is bit b of the
/// basis index.
class DenseState {
   public:
    using Amplitude = std::complex<double>;

    /// Ground state: |0...0> projected by (1 + A_s)/2 for every star.
    static DenseState ground(const Patch &patch) {
        if (patch.num_bonds() > 24) {
            throw DimensionError("dense states are limited to 24 bonds");
        }
        DenseState s(patch.num_bonds());
        s.amp_[0] = 1;
        for (size_t k = 0; k < patch.num_vertices(); k++) {
            uint64_t mask = 0;
            for (size_t b : patch.star_bonds(patch.vertex(k))) {
                mask |= uint64_t{1} << b;
            }
            std::vector<Amplitude> next(s.amp_.size());
            for (uint64_t i = 0; i < s.amp_.size(); i++) {
                next[i] += 0.5 * s.amp_[i];
                next[i ^ mask] += 0.5 * s.amp_[i];
            }
            s.amp_ = std::move(next);
        }
        double norm = std::sqrt(std::real(s.inner(s)));
        for (auto &a : s.amp_) {
            a /= norm;
        }
        return s;
    }

    /// i^k X^x Z^z applied to the state.
    DenseState apply(const PauliOperator &p) const {
        if (p.num_bonds() != n_) {
            throw DimensionError("operator and state have different bond counts");
        }
        uint64_t xm = 0, zm = 0;
        for (size_t b = 0; b < n_; b++) {
            xm |= uint64_t{p.x(b)} << b;
            zm |= uint64_t{p.z(b)} << b;
        }
        static const Amplitude phase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        DenseState out(n_);
        for (uint64_t i = 0; i < amp_.size(); i++) {
            if (amp_[i] == Amplitude(0)) {
                continue;
            }
            double sign = (std::popcount(zm & i) & 1) ? -1.0 : 1.0;
            out.amp_[i ^ xm] += phase[p.phase_exp()] * sign * amp_[i];
        }
        return out;
    }

    Amplitude inner(const DenseState &o) const {
        Amplitude s = 0;
        for (size_t i = 0; i < amp_.size(); i++) {
            s += std::conj(amp_[i]) * o.amp_[i];
        }
        return s;
    }

   private:
    explicit DenseState(size_t n) : n_(n), amp_(size_t{1} << n) {
    }

    size_t n_;
    std::vector<Amplitude> amp_;
};

}  // namespace conekit

#endif
