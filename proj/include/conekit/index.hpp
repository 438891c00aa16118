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

#ifndef CONEKIT_INDEX_HPP
#define CONEKIT_INDEX_HPP

#include <Eigen/Dense>
#include <bit>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "conekit/anyons.hpp"

namespace conekit {

/// Pauli word X^x Z^z on the k algebra bonds; bit j is algebra bond j.
struct Word {
    uint32_t x = 0;
    uint32_t z = 0;
    auto operator<=>(const Word &) const = default;
};

/// Finite linear combination of Pauli words with Gaussian-rational weights.
class AlgebraElement {
   public:
    AlgebraElement() = default;
    AlgebraElement(Word w, Gaussian c) {
        add(w, std::move(c));
    }
    static AlgebraElement unit() {
        return AlgebraElement(Word{}, Gaussian(1));
    }

    const std::map<Word, Gaussian> &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    Gaussian coefficient(Word w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Gaussian(0) : it->second;
    }

    void add(Word w, const Gaussian &c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    AlgebraElement &operator+=(const AlgebraElement &o) {
        for (const auto &[w, c] : o.terms_) {
            add(w, c);
        }
        return *this;
    }
    AlgebraElement &operator-=(const AlgebraElement &o) {
        for (const auto &[w, c] : o.terms_) {
            add(w, -c);
        }
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) {
        return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) {
        return a -= b;
    }
    friend AlgebraElement operator*(const Gaussian &s, const AlgebraElement &a) {
        AlgebraElement out;
        for (const auto &[w, c] : a.terms_) {
            out.add(w, s * c);
        }
        return out;
    }
    friend AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b) {
        AlgebraElement out;
        for (const auto &[wa, ca] : a.terms_) {
            for (const auto &[wb, cb] : b.terms_) {
                // Z^za X^xb = (-1)^{|za & xb|} X^xb Z^za.
                Gaussian c = ca * cb;
                if (std::popcount(wa.z & wb.x) & 1) {
                    c = -c;
                }
                out.add({wa.x ^ wb.x, wa.z ^ wb.z}, c);
            }
        }
        return out;
    }
    AlgebraElement adjoint() const {
        AlgebraElement out;
        for (const auto &[w, c] : terms_) {
            Gaussian d = c.conj();
            if (std::popcount(w.x & w.z) & 1) {
                d = -d;
            }
            out.add(w, d);
        }
        return out;
    }
    bool operator==(const AlgebraElement &) const = default;

   private:
    std::map<Word, Gaussian> terms_;
};

/// All operators on k chosen patch bonds, spanned by the 4^k Pauli words.
class FiniteAlgebra {
   public:
    FiniteAlgebra(std::vector<size_t> bonds, size_t patch_bonds) : bonds_(std::move(bonds)), patch_bonds_(patch_bonds) {
        if (bonds_.empty() || bonds_.size() > 12) {
            throw DimensionError("algebra needs between 1 and 12 bonds");
        }
    }

    size_t k() const {
        return bonds_.size();
    }
    size_t dimension() const {
        return size_t{1} << k();
    }
    size_t num_words() const {
        return size_t{1} << (2 * k());
    }
    const std::vector<size_t> &bonds() const {
        return bonds_;
    }
    size_t patch_bonds() const {
        return patch_bonds_;
    }
    Word word(size_t index) const {
        uint32_t mask = static_cast<uint32_t>(dimension() - 1);
        return {static_cast<uint32_t>(index) & mask, static_cast<uint32_t>(index >> k()) & mask};
    }

    PauliOperator embed(Word w) const {
        PauliOperator p(patch_bonds_);
        for (size_t j = 0; j < k(); j++) {
            if ((w.x >> j) & 1) {
                p.flip_x(bonds_[j]);
            }
            if ((w.z >> j) & 1) {
                p.flip_z(bonds_[j]);
            }
        }
        return p;
    }

    /// Matrix on C^(2^k): X^x Z^z |b> = (-1)^{z.b} |b xor x>.
    GMatrix matrix(const AlgebraElement &a) const {
        size_t d = dimension();
        GMatrix m(d);
        for (const auto &[w, c] : a.terms()) {
            for (size_t b = 0; b < d; b++) {
                Gaussian v = (std::popcount(w.z & b) & 1) ? -c : c;
                m(b ^ w.x, b) += v;
            }
        }
        return m;
    }

    template <typename Rng>
    AlgebraElement random_element(Rng &rng, size_t num_terms) const {
        std::uniform_int_distribution<size_t> pick(0, num_words() - 1);
        std::uniform_int_distribution<int> coeff(-2, 2);
        AlgebraElement a;
        for (size_t t = 0; t < num_terms; t++) {
            Word w = word(pick(rng));
            long re = coeff(rng);
            long im = coeff(rng);
            a.add(w, Gaussian(Rational(re), Rational(im)));
        }
        return a;
    }

   private:
    std::vector<size_t> bonds_;
    size_t patch_bonds_;
};

/// k bonds alternating between the two cones, nearest to each apex first.
inline FiniteAlgebra cone_algebra(const TransporterGeometry &g, size_t k) {
    auto sorted = [&](const Region &r, const ConeSpec &c) {
        std::vector<std::pair<Rational, size_t>> items;
        for (size_t b : r.bond_list()) {
            auto [u, v] = g.patch.endpoints(b);
            Rational mx = Rational(u.x + v.x) / 2 - c.apex.x, my = Rational(u.y + v.y) / 2 - c.apex.y;
            items.push_back({mx * mx + my * my, b});
        }
        std::sort(items.begin(), items.end());
        return items;
    };
    auto first = sorted(g.first, g.first_cone), second = sorted(g.second, g.second_cone);
    std::vector<size_t> bonds;
    for (size_t j = 0; bonds.size() < k; j++) {
        if (j >= first.size() && j >= second.size()) {
            throw NoRoom("cones hold fewer than k bonds");
        }
        if (j < first.size() && bonds.size() < k) {
            bonds.push_back(first[j].second);
        }
        if (j < second.size() && bonds.size() < k) {
            bonds.push_back(second[j].second);
        }
    }
    return FiniteAlgebra(bonds, g.patch.num_bonds());
}

/// Subgroup G of Z2 x Z2 acting on an algebra by conjugation with patch
/// Pauli implementers V_g.
class GroupAction {
   public:
    GroupAction(const FiniteAlgebra &algebra, std::vector<SectorLabel> elements, std::vector<PauliOperator> implementers)
        : algebra_(algebra), elements_(std::move(elements)), implementers_(std::move(implementers)) {
        validate();
        for (const PauliOperator &v : implementers_) {
            Word mask;
            for (size_t j = 0; j < algebra_.k(); j++) {
                mask.x |= static_cast<uint32_t>(v.x(algebra_.bonds()[j])) << j;
                mask.z |= static_cast<uint32_t>(v.z(algebra_.bonds()[j])) << j;
            }
            masks_.push_back(mask);
        }
        enumerate_characters();
    }

    const FiniteAlgebra &algebra() const {
        return algebra_;
    }
    size_t order() const {
        return elements_.size();
    }
    const std::vector<SectorLabel> &elements() const {
        return elements_;
    }
    const PauliOperator &implementer(size_t g) const {
        return implementers_[g];
    }
    size_t position(SectorLabel a) const {
        for (size_t j = 0; j < elements_.size(); j++) {
            if (elements_[j] == a) {
                return j;
            }
        }
        throw InvalidAction("label " + a.name() + " is not in the group");
    }
    size_t product(size_t g, size_t h) const {
        return position(fuse(elements_[g], elements_[h]));
    }
    /// Characters as sign tables over the elements.
    const std::vector<std::vector<int>> &characters() const {
        return characters_;
    }

    /// Sign by which V_g conjugates word w.
    int sign(size_t g, Word w) const {
        const Word &m = masks_[g];
        return (std::popcount((m.x & w.z) ^ (m.z & w.x)) & 1) ? -1 : 1;
    }
    AlgebraElement apply(size_t g, const AlgebraElement &a) const {
        AlgebraElement out;
        for (const auto &[w, c] : a.terms()) {
            out.add(w, sign(g, w) < 0 ? -c : c);
        }
        return out;
    }

   private:
    void validate() {
        size_t n = algebra_.patch_bonds();
        if (elements_.empty() || !elements_[0].is_vacuum() || elements_.size() != implementers_.size()) {
            throw InvalidAction("group must list the identity first with one implementer per element");
        }
        for (size_t g = 0; g < elements_.size(); g++) {
            if (implementers_[g].num_bonds() != n) {
                throw DimensionError("implementer lives on a different patch");
            }
            for (size_t h = 0; h < elements_.size(); h++) {
                position(fuse(elements_[g], elements_[h]));
                if (commutation_sign(implementers_[g], implementers_[h]) != 1) {
                    throw InvalidAction("implementers " + elements_[g].name() + " and " + elements_[h].name() +
                                        " do not commute");
                }
            }
        }
        if (!implementers_[0].is_identity()) {
            throw InvalidAction("identity element must act by the identity operator");
        }
        for (size_t g = 0; g < elements_.size(); g++) {
            if (!(implementers_[g] * implementers_[g]).is_identity()) {
                throw InvalidAction("implementer does not square to the identity");
            }
            for (size_t h = 0; h < elements_.size(); h++) {
                if (implementers_[g] * implementers_[h] != implementers_[position(fuse(elements_[g], elements_[h]))]) {
                    throw InvalidAction("implementers do not form a representation of the group");
                }
            }
        }
    }
    void enumerate_characters() {
        size_t m = elements_.size();
        for (size_t bits = 0; bits < (size_t{1} << m); bits++) {
            std::vector<int> chi(m);
            for (size_t g = 0; g < m; g++) {
                chi[g] = ((bits >> g) & 1) ? -1 : 1;
            }
            bool hom = true;
            for (size_t g = 0; g < m && hom; g++) {
                for (size_t h = 0; h < m && hom; h++) {
                    hom = chi[product(g, h)] == chi[g] * chi[h];
                }
            }
            if (hom) {
                characters_.push_back(chi);
            }
        }
    }

    FiniteAlgebra algebra_;
    std::vector<SectorLabel> elements_;
    std::vector<PauliOperator> implementers_;
    std::vector<Word> masks_;
    std::vector<std::vector<int>> characters_;
};

/// Action by the truncated transporters of the listed kinds.
inline GroupAction transporter_action(const FiniteAlgebra &algebra, const TransporterGeometry &g, int n,
                                      std::vector<SectorLabel> elements = all_sector_list()) {
    int top = g.base;
    for (size_t b : algebra.bonds()) {
        for (Vertex v : g.patch.endpoints(b)) {
            top = std::max(top, v.y);
        }
    }
    if (g.base + n <= top) {
        throw NoRoom("truncation " + std::to_string(n) + " does not clear the algebra bonds");
    }
    std::vector<PauliOperator> implementers;
    for (SectorLabel a : elements) {
        implementers.push_back(a.is_vacuum() ? PauliOperator(g.patch.num_bonds()) : transporter_truncation(a, n, g).op);
    }
    return GroupAction(algebra, std::move(elements), std::move(implementers));
}

/// Sum over g of R_g U_g.
class CrossedProductElement {
   public:
    explicit CrossedProductElement(std::shared_ptr<const GroupAction> action)
        : action_(std::move(action)), blocks_(action_->order()) {
    }
    static CrossedProductElement unit(std::shared_ptr<const GroupAction> action) {
        CrossedProductElement x(std::move(action));
        x.blocks_[0] = AlgebraElement::unit();
        return x;
    }
    /// R U_g.
    static CrossedProductElement term(std::shared_ptr<const GroupAction> action, SectorLabel g, AlgebraElement r) {
        CrossedProductElement x(action);
        x.blocks_[action->position(g)] = std::move(r);
        return x;
    }

    const GroupAction &action() const {
        return *action_;
    }
    const std::shared_ptr<const GroupAction> &action_ptr() const {
        return action_;
    }
    const AlgebraElement &block(size_t g) const {
        return blocks_[g];
    }
    AlgebraElement &block(size_t g) {
        return blocks_[g];
    }
    const AlgebraElement &block(SectorLabel g) const {
        return blocks_[action_->position(g)];
    }
    bool is_zero() const {
        for (const auto &b : blocks_) {
            if (!b.is_zero()) {
                return false;
            }
        }
        return true;
    }

    CrossedProductElement &operator+=(const CrossedProductElement &o) {
        check_same(o);
        for (size_t g = 0; g < blocks_.size(); g++) {
            blocks_[g] += o.blocks_[g];
        }
        return *this;
    }
    CrossedProductElement &operator-=(const CrossedProductElement &o) {
        check_same(o);
        for (size_t g = 0; g < blocks_.size(); g++) {
            blocks_[g] -= o.blocks_[g];
        }
        return *this;
    }
    friend CrossedProductElement operator+(CrossedProductElement a, const CrossedProductElement &b) {
        return a += b;
    }
    friend CrossedProductElement operator-(CrossedProductElement a, const CrossedProductElement &b) {
        return a -= b;
    }
    friend CrossedProductElement operator*(const Gaussian &s, CrossedProductElement a) {
        for (auto &b : a.blocks_) {
            b = s * b;
        }
        return a;
    }
    bool operator==(const CrossedProductElement &o) const {
        return action_ == o.action_ && blocks_ == o.blocks_;
    }

    void check_same(const CrossedProductElement &o) const {
        if (action_ != o.action_) {
            throw DimensionError("crossed product elements over different actions");
        }
    }

   private:
    std::shared_ptr<const GroupAction> action_;
    std::vector<AlgebraElement> blocks_;
};

/// (R_g U_g)(S_h U_h) = R_g alpha_g(S_h) U_gh.
inline CrossedProductElement cp_multiply(const CrossedProductElement &a, const CrossedProductElement &b) {
    a.check_same(b);
    const GroupAction &act = a.action();
    CrossedProductElement out(a.action_ptr());
    for (size_t g = 0; g < act.order(); g++) {
        if (a.block(g).is_zero()) {
            continue;
        }
        for (size_t h = 0; h < act.order(); h++) {
            if (b.block(h).is_zero()) {
                continue;
            }
            out.block(act.product(g, h)) += a.block(g) * act.apply(g, b.block(h));
        }
    }
    return out;
}

/// (R U_g)* = alpha_g(R*) U_g, every element being its own inverse.
inline CrossedProductElement cp_adjoint(const CrossedProductElement &a) {
    const GroupAction &act = a.action();
    CrossedProductElement out(a.action_ptr());
    for (size_t g = 0; g < act.order(); g++) {
        out.block(g) = act.apply(g, a.block(g).adjoint());
    }
    return out;
}

/// Keeps the identity block.
inline CrossedProductElement canonical_expectation(const CrossedProductElement &a) {
    CrossedProductElement out(a.action_ptr());
    out.block(0) = a.block(0);
    return out;
}

/// Regular representation on (2^k)^|G|: block (h', h) = alpha_h'(R_{h'h}).
using BlockForm = std::vector<std::vector<AlgebraElement>>;

inline BlockForm regular_blocks(const CrossedProductElement &a) {
    const GroupAction &act = a.action();
    size_t m = act.order();
    BlockForm out(m, std::vector<AlgebraElement>(m));
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            out[r][c] = act.apply(r, a.block(act.product(r, c)));
        }
    }
    return out;
}

inline GMatrix regular_matrix(const CrossedProductElement &a) {
    const GroupAction &act = a.action();
    size_t d = act.algebra().dimension(), m = act.order();
    BlockForm blocks = regular_blocks(a);
    GMatrix out(d * m);
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            GMatrix b = act.algebra().matrix(blocks[r][c]);
            for (size_t i = 0; i < d; i++) {
                for (size_t j = 0; j < d; j++) {
                    out(r * d + i, c * d + j) = b(i, j);
                }
            }
        }
    }
    return out;
}

enum class ArithmeticMode : uint8_t { Exact, Float };

inline constexpr double kFloatTolerance = 1e-9;

/// Positive semidefiniteness in the regular representation.
inline bool is_positive(const GMatrix &m, ArithmeticMode mode) {
    if (mode == ArithmeticMode::Exact) {
        return is_positive_semidefinite(m);
    }
    size_t n = m.size();
    Eigen::MatrixXcd a(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            a(r, c) = m(r, c).to_complex();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -kFloatTolerance;
}

/// E(X*X) - lambda X*X is positive.
inline bool pimsner_popa_holds(const CrossedProductElement &x, const Rational &lambda, ArithmeticMode mode) {
    CrossedProductElement y = cp_multiply(cp_adjoint(x), x);
    CrossedProductElement gap = canonical_expectation(y) - Gaussian(lambda) * y;
    return is_positive(regular_matrix(gap), mode);
}

struct PimsnerPopaResult {
    Rational lambda;
    Rational index;
    bool dual_averaging = false;
    bool witness_projection = false;
    size_t basis_checked = 0;
    size_t k = 0;
    size_t group_order = 0;

    bool certified() const {
        return dual_averaging && witness_projection;
    }
};

/// E(X) = (1/|G|) sum over characters of W_chi X W_chi*, where W_chi is the
/// diagonal phase with entries chi(h); checked on every basis element R_a U_g
/// in the regular representation.
inline bool dual_averaging_identity(const std::shared_ptr<const GroupAction> &action, size_t *checked = nullptr) {
    const GroupAction &act = *action;
    size_t m = act.order();
    const auto &chars = act.characters();
    if (chars.size() != m) {
        return false;
    }
    Gaussian weight(Rational(1, static_cast<long>(m)));
    for (size_t w = 0; w < act.algebra().num_words(); w++) {
        for (size_t g = 0; g < m; g++) {
            CrossedProductElement x(action);
            x.block(g) = AlgebraElement(act.algebra().word(w), Gaussian(1));
            BlockForm lhs = regular_blocks(canonical_expectation(x));
            BlockForm rhs = regular_blocks(x);
            for (size_t r = 0; r < m; r++) {
                for (size_t c = 0; c < m; c++) {
                    long total = 0;
                    for (const auto &chi : chars) {
                        total += chi[r] * chi[c];
                    }
                    rhs[r][c] = (weight * Gaussian(total)) * rhs[r][c];
                }
            }
            if (lhs != rhs) {
                return false;
            }
            if (checked) {
                ++*checked;
            }
        }
    }
    return true;
}

/// P = (1/|G|) sum_g U_g is a nonzero projection with E(P) = (1/|G|) 1.
inline bool witness_projection(const std::shared_ptr<const GroupAction> &action) {
    size_t m = action->order();
    Gaussian weight(Rational(1, static_cast<long>(m)));
    CrossedProductElement p(action);
    for (size_t g = 0; g < m; g++) {
        p.block(g) = AlgebraElement(Word{}, weight);
    }
    bool projection = !p.is_zero() && cp_adjoint(p) == p && cp_multiply(p, p) == p;
    return projection && canonical_expectation(p) == weight * CrossedProductElement::unit(action);
}

/// Best constant lambda in E(X) >= lambda X over positive X, with both
/// certificates. Lambda is reported only when both pass.
inline PimsnerPopaResult pimsner_popa_constant(const std::shared_ptr<const GroupAction> &action) {
    PimsnerPopaResult out;
    out.k = action->algebra().k();
    out.group_order = action->order();
    out.dual_averaging = dual_averaging_identity(action, &out.basis_checked);
    out.witness_projection = witness_projection(action);
    if (out.certified()) {
        out.lambda = Rational(1, static_cast<long>(action->order()));
        out.index = 1 / out.lambda;
    }
    return out;
}

/// Formal complex combination of patch Paulis, keyed by (x, z) with the
/// phase folded into the weight.
class PauliSum {
   public:
    using Key = std::pair<BitVec, BitVec>;

    void add(const PauliOperator &p, const Gaussian &c) {
        if (c.is_zero()) {
            return;
        }
        Gaussian w = c * Gaussian::i_pow(p.phase_exp());
        auto [it, fresh] = terms_.emplace(Key{p.x(), p.z()}, w);
        if (!fresh) {
            it->second += w;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    const std::map<Key, Gaussian> &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    friend PauliSum operator*(const PauliSum &a, const PauliSum &b) {
        PauliSum out;
        for (const auto &[ka, ca] : a.terms_) {
            PauliOperator pa(ka.first, ka.second, 0);
            for (const auto &[kb, cb] : b.terms_) {
                out.add(pa * PauliOperator(kb.first, kb.second, 0), ca * cb);
            }
        }
        return out;
    }
    bool operator==(const PauliSum &) const = default;

   private:
    std::map<Key, Gaussian> terms_;
};

/// Sum over g of R_g V_g on the patch.
inline PauliSum phi_map(const CrossedProductElement &x) {
    const GroupAction &act = x.action();
    PauliSum out;
    for (size_t g = 0; g < act.order(); g++) {
        for (const auto &[w, c] : x.block(g).terms()) {
            out.add(act.algebra().embed(w) * act.implementer(g), c);
        }
    }
    return out;
}

/// Loop around the first cone tip, holding the algebra bonds of that cone.
inline DetectionLoop tip_loop(const TransporterGeometry &g, const FiniteAlgebra &algebra) {
    std::vector<size_t> bonds{
        g.patch.index({g.left, g.base, Orientation::North}),
        g.patch.index({g.left - 1, g.base + 1, Orientation::East}),
        g.patch.index({g.left, g.base + 1, Orientation::East}),
    };
    for (size_t b : algebra.bonds()) {
        if (g.first.contains(b)) {
            bonds.push_back(b);
        }
    }
    return detection_loop(finite_region(bonds, g.patch), g.patch);
}

/// Charges at the first cone tip carried by the nonzero components of
/// phi(X) Omega.
inline std::set<SectorLabel> tip_sectors(const CrossedProductElement &x, const TransporterGeometry &g,
                                         const StabilizerGroup &group) {
    const GroupAction &act = x.action();
    DetectionLoop loop = tip_loop(g, act.algebra());
    std::unordered_map<BitVec, std::pair<PauliOperator, Gaussian>, BitVecHash> states;
    PauliSum image = phi_map(x);
    for (const auto &[key, c] : image.terms()) {
        PauliOperator op(key.first, key.second, 0);
        BitVec syn = syndrome_bits(op, g.patch);
        auto it = states.find(syn);
        if (it == states.end()) {
            states.emplace(syn, std::make_pair(op, c));
        } else {
            Overlap o = overlap(it->second.first, op, group);
            it->second.second += c * Gaussian::i_pow(o.i_power);
        }
    }
    std::set<SectorLabel> out;
    for (const auto &[syn, entry] : states) {
        if (!entry.second.is_zero()) {
            out.insert(sector_of_state(entry.first, loop, g.patch));
        }
    }
    return out;
}

struct InjectivityResult {
    bool injective = false;
    bool isolated = false;
    size_t rank = 0;
    size_t columns = 0;
    size_t test_vectors = 0;
};

/// Decides whether phi(X) F Omega = 0 for every test vector F Omega forces
/// X = 0, with X ranging over all block choices.
///
/// Each basis element a U_g maps F Omega to a multiple of a stabilizer state;
/// states are keyed by syndrome and compared by exact overlaps. The
/// resulting linear map has full column rank iff phi is injective on this
/// family. Isolation holds when every state receives contributions from a
/// single group element only, i.e. the charge at the tip separates the blocks.
inline InjectivityResult phi_injectivity_check(const GroupAction &act, const StabilizerGroup &group) {
    const FiniteAlgebra &alg = act.algebra();
    const Patch &patch = group.patch();
    size_t n = patch.num_bonds();
    InjectivityResult out;
    out.columns = alg.num_words() * act.order();
    std::vector<PauliOperator> family{PauliOperator(n)};
    for (size_t b : alg.bonds()) {
        for (char letter : {'X', 'Y', 'Z'}) {
            family.push_back(PauliOperator::single(n, b, letter));
        }
    }
    out.test_vectors = family.size();
    SparseRank rank(out.columns);
    out.isolated = true;
    for (const PauliOperator &f : family) {
        std::unordered_map<BitVec, size_t, BitVecHash> row_of;
        std::vector<PauliOperator> reference;
        std::vector<SparseRank::Row> rows;
        std::vector<std::set<size_t>> groups;
        for (size_t g = 0; g < act.order(); g++) {
            for (size_t w = 0; w < alg.num_words(); w++) {
                PauliOperator op = alg.embed(alg.word(w)) * act.implementer(g) * f;
                BitVec syn = syndrome_bits(op, patch);
                auto [it, fresh] = row_of.emplace(syn, rows.size());
                Gaussian coeff(1);
                if (fresh) {
                    reference.push_back(op);
                    rows.emplace_back();
                    groups.emplace_back();
                } else {
                    coeff = Gaussian::i_pow(overlap(reference[it->second], op, group).i_power);
                }
                rows[it->second][g * alg.num_words() + w] += coeff;
                groups[it->second].insert(g);
            }
        }
        for (size_t r = 0; r < rows.size(); r++) {
            out.isolated = out.isolated && groups[r].size() == 1;
            if (!rank.full()) {
                rank.add(rows[r]);
            }
        }
    }
    out.rank = rank.rank();
    out.injective = rank.full();
    return out;
}

/// rho_a(rho_a(A)) for A supported in the cone: the expectation onto the
/// image of the cone algebra, with R = I and d = 1.
inline PauliOperator sector_expectation(SectorLabel a, const ConeSpec &cone, const PauliOperator &op, const Patch &patch) {
    SectorEndomorphism rho = localized_endomorphism(a, cone, patch);
    if (!op.support().is_subset_of(rho.cone.bonds)) {
        throw LocalizationError("operator is not supported in the cone");
    }
    return apply_endomorphism(rho, apply_endomorphism(rho, op));
}

/// Everything needed to compute the index for k bonds at truncation n.
struct IndexSetup {
    TransporterGeometry geometry;
    std::shared_ptr<const GroupAction> action;
};

inline IndexSetup index_setup(size_t k, int n, std::vector<SectorLabel> elements = all_sector_list()) {
    TransporterGeometry g = TransporterGeometry::build(n);
    FiniteAlgebra alg = cone_algebra(g, k);
    auto act = std::make_shared<const GroupAction>(transporter_action(alg, g, n, std::move(elements)));
    return {std::move(g), std::move(act)};
}

}  // namespace conekit

#endif
