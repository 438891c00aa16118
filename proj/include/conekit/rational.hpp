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

#ifndef CONEKIT_RATIONAL_HPP
#define CONEKIT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "conekit/errors.hpp"

namespace conekit {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline std::string numerator_str(const Rational &r) {
    return boost::multiprecision::numerator(r).str();
}
inline std::string denominator_str(const Rational &r) {
    return boost::multiprecision::denominator(r).str();
}
/// "p/q", or "p" for integers.
inline std::string to_string(const Rational &r) {
    std::string d = denominator_str(r);
    return d == "1" ? numerator_str(r) : numerator_str(r) + "/" + d;
}
/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string &text) {
    try {
        return Rational(text);
    } catch (const std::exception &) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

/// Exact complex number a + bi with rational parts.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(long v) : re(v), im(0) {
    }
    Gaussian(Rational r) : re(std::move(r)), im(0) {
    }
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    }

    /// i^k for any integer k.
    static Gaussian i_pow(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }

    bool is_zero() const {
        return re == 0 && im == 0;
    }
    bool is_real() const {
        return im == 0;
    }
    Gaussian conj() const {
        return {re, -im};
    }
    Rational norm2() const {
        return re * re + im * im;
    }

    Gaussian operator-() const {
        return {-re, -im};
    }
    Gaussian &operator+=(const Gaussian &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian &operator-=(const Gaussian &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian &operator*=(const Gaussian &o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Gaussian &operator/=(const Gaussian &o) {
        Rational n = o.norm2();
        if (n == 0) {
            throw std::domain_error("division by zero");
        }
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }
    friend Gaussian operator+(Gaussian a, const Gaussian &b) {
        return a += b;
    }
    friend Gaussian operator-(Gaussian a, const Gaussian &b) {
        return a -= b;
    }
    friend Gaussian operator*(Gaussian a, const Gaussian &b) {
        return a *= b;
    }
    friend Gaussian operator/(Gaussian a, const Gaussian &b) {
        return a /= b;
    }
    bool operator==(const Gaussian &o) const {
        return re == o.re && im == o.im;
    }

    std::complex<double> to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }
    std::string str() const {
        if (im == 0) {
            return to_string(re);
        }
        if (re == 0) {
            return to_string(im) + "i";
        }
        return to_string(re) + (im > 0 ? "+" : "") + to_string(im) + "i";
    }
};

/// Dense square matrix over Gaussian rationals.
class GMatrix {
   public:
    GMatrix() = default;
    explicit GMatrix(size_t n) : n_(n), a_(n * n) {
    }
    static GMatrix identity(size_t n) {
        GMatrix m(n);
        for (size_t k = 0; k < n; k++) {
            m(k, k) = 1;
        }
        return m;
    }

    size_t size() const {
        return n_;
    }
    Gaussian &operator()(size_t r, size_t c) {
        return a_[r * n_ + c];
    }
    const Gaussian &operator()(size_t r, size_t c) const {
        return a_[r * n_ + c];
    }

    GMatrix adjoint() const {
        GMatrix m(n_);
        for (size_t r = 0; r < n_; r++) {
            for (size_t c = 0; c < n_; c++) {
                m(c, r) = (*this)(r, c).conj();
            }
        }
        return m;
    }
    bool is_hermitian() const {
        return *this == adjoint();
    }

    friend GMatrix operator*(const GMatrix &a, const GMatrix &b) {
        if (a.n_ != b.n_) {
            throw DimensionError("matrix sizes differ");
        }
        GMatrix m(a.n_);
        for (size_t r = 0; r < a.n_; r++) {
            for (size_t k = 0; k < a.n_; k++) {
                const Gaussian &x = a(r, k);
                if (x.is_zero()) {
                    continue;
                }
                for (size_t c = 0; c < a.n_; c++) {
                    if (!b(k, c).is_zero()) {
                        m(r, c) += x * b(k, c);
                    }
                }
            }
        }
        return m;
    }
    friend GMatrix operator+(GMatrix a, const GMatrix &b) {
        for (size_t k = 0; k < a.a_.size(); k++) {
            a.a_[k] += b.a_[k];
        }
        return a;
    }
    friend GMatrix operator-(GMatrix a, const GMatrix &b) {
        for (size_t k = 0; k < a.a_.size(); k++) {
            a.a_[k] -= b.a_[k];
        }
        return a;
    }
    friend GMatrix operator*(const Gaussian &s, GMatrix a) {
        for (auto &x : a.a_) {
            x *= s;
        }
        return a;
    }
    bool operator==(const GMatrix &o) const {
        return n_ == o.n_ && a_ == o.a_;
    }

   private:
    size_t n_ = 0;
    std::vector<Gaussian> a_;
};

/// Exact positive-semidefiniteness test for a Hermitian matrix.
///
/// Symmetric elimination: every pivot must be nonnegative, and a zero pivot
/// requires its whole row to vanish. Throws DimensionError if not Hermitian.
inline bool is_positive_semidefinite(GMatrix m) {
    if (!m.is_hermitian()) {
        throw DimensionError("positivity test needs a hermitian matrix");
    }
    size_t n = m.size();
    std::vector<bool> done(n, false);
    for (size_t step = 0; step < n; step++) {
        size_t p = n;
        for (size_t k = 0; k < n; k++) {
            if (done[k]) {
                continue;
            }
            const Rational &d = m(k, k).re;
            if (d < 0) {
                return false;
            }
            if (d == 0) {
                for (size_t c = 0; c < n; c++) {
                    if (!done[c] && !m(k, c).is_zero()) {
                        return false;
                    }
                }
                done[k] = true;
                continue;
            }
            if (p == n) {
                p = k;
            }
        }
        if (p == n) {
            return true;
        }
        done[p] = true;
        Rational pivot = m(p, p).re;
        for (size_t r = 0; r < n; r++) {
            if (done[r] || m(r, p).is_zero()) {
                continue;
            }
            Gaussian f = m(r, p) / Gaussian(pivot);
            for (size_t c = 0; c < n; c++) {
                if (!done[c] && !m(p, c).is_zero()) {
                    m(r, c) -= f * m(p, c);
                }
            }
        }
    }
    return true;
}

/// Exact determinant of a rational matrix (row-major, square).
inline Rational determinant(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det = 1;
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && m[p][c] == 0) {
            p++;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; r++) {
            if (m[r][c] == 0) {
                continue;
            }
            Rational f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; k++) {
                m[r][k] -= f * m[c][k];
            }
        }
    }
    return det;
}

/// Incremental exact rank of sparse Gaussian-rational rows.
///
/// Rows are reduced against the pivots collected so far; a row that survives
/// becomes a new pivot.
class SparseRank {
   public:
    using Row = std::map<size_t, Gaussian>;

    explicit SparseRank(size_t num_columns) : num_columns_(num_columns) {
    }

    /// Adds a row; returns true if it raised the rank.
    bool add(Row row) {
        for (auto it = row.begin(); it != row.end();) {
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
        }
        while (!row.empty()) {
            auto lead = row.begin();
            auto piv = pivots_.find(lead->first);
            if (piv == pivots_.end()) {
                Gaussian s = lead->second;
                for (auto &[c, v] : row) {
                    v /= s;
                }
                pivots_.emplace(row.begin()->first, std::move(row));
                return true;
            }
            Gaussian f = lead->second;
            for (const auto &[c, v] : piv->second) {
                Gaussian &t = row[c];
                t -= f * v;
                if (t.is_zero()) {
                    row.erase(c);
                }
            }
        }
        return false;
    }

    size_t rank() const {
        return pivots_.size();
    }
    size_t num_columns() const {
        return num_columns_;
    }
    bool full() const {
        return pivots_.size() == num_columns_;
    }

   private:
    size_t num_columns_;
    std::map<size_t, Row> pivots_;
};

}  // namespace conekit

#endif
