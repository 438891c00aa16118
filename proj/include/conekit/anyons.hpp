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

#ifndef CONEKIT_ANYONS_HPP
#define CONEKIT_ANYONS_HPP

#include <array>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "conekit/stabilizer.hpp"

namespace conekit {

/// Element of Z2 x Z2. The e part counts star charges, the m part plaquette
/// charges. Transporters built on primal paths carry e and are labelled Z;
/// those on dual paths carry m and are labelled X; Y = XZ is the fermion.
struct SectorLabel {
    uint8_t e = 0;
    uint8_t m = 0;

    static constexpr SectorLabel vacuum() {
        return {0, 0};
    }
    static constexpr SectorLabel electric() {
        return {1, 0};
    }
    static constexpr SectorLabel magnetic() {
        return {0, 1};
    }
    static constexpr SectorLabel fermion() {
        return {1, 1};
    }

    /// Position in the fixed order (vacuum, e, m, eps).
    constexpr size_t index() const {
        return e + 2 * m;
    }
    static constexpr SectorLabel from_index(size_t k) {
        return {static_cast<uint8_t>(k & 1), static_cast<uint8_t>((k >> 1) & 1)};
    }
    bool is_vacuum() const {
        return e == 0 && m == 0;
    }
    std::string name() const {
        static const char *names[4] = {"1", "e", "m", "eps"};
        return names[index()];
    }
    /// I, Z, X, Y.
    char group_letter() const {
        static const char letters[4] = {'I', 'Z', 'X', 'Y'};
        return letters[index()];
    }
    auto operator<=>(const SectorLabel &) const = default;
};

inline constexpr std::array<SectorLabel, 4> all_sectors() {
    return {SectorLabel::vacuum(), SectorLabel::electric(), SectorLabel::magnetic(), SectorLabel::fermion()};
}

inline std::vector<SectorLabel> all_sector_list() {
    auto a = all_sectors();
    return {a.begin(), a.end()};
}

/// Accepts 1/vacuum/I, e/Z, m/X, eps/epsilon/Y.
inline SectorLabel parse_sector(const std::string &text) {
    if (text == "1" || text == "vacuum" || text == "I") {
        return SectorLabel::vacuum();
    }
    if (text == "e" || text == "Z") {
        return SectorLabel::electric();
    }
    if (text == "m" || text == "X") {
        return SectorLabel::magnetic();
    }
    if (text == "eps" || text == "epsilon" || text == "Y") {
        return SectorLabel::fermion();
    }
    throw std::invalid_argument("unknown sector label '" + text + "'");
}

inline SectorLabel fuse(SectorLabel a, SectorLabel b) {
    return {static_cast<uint8_t>(a.e ^ b.e), static_cast<uint8_t>(a.m ^ b.m)};
}

inline SectorLabel conjugate_sector(SectorLabel a) {
    return a;
}

/// Two upward cones side by side on a patch large enough for transporters of
/// length up to n_max, separated by a buffer of free bond columns.
struct TransporterGeometry {
    Patch patch;
    int n_max = 0;
    int base = 0;
    int left = 0;
    int right = 0;
    ConeSpec first_cone;
    ConeSpec second_cone;
    Region first;
    Region second;

    static TransporterGeometry build(int n_max, int min_side = 0) {
        if (n_max < 1) {
            throw NoRoom("transporter length must be at least 1");
        }
        int radius = n_max + 1;
        int half = 0;
        while (5 * half * half < radius * radius) {
            half++;
        }
        half += 1;
        int base = 2;
        int left = half + 2;
        int right = left + 2 * half + 3;
        int side = std::max({min_side, right + half + 2, base + radius + 2});
        Patch patch = build_patch(side);
        auto cone_at = [&](int x) { return ConeSpec{{x, base}, {1, 2}, {-1, 2}, 0, radius}; };
        TransporterGeometry g{patch, n_max, base, left, right, cone_at(left), cone_at(right), {}, {}};
        g.first = cone_region(g.first_cone, patch);
        g.second = cone_region(g.second_cone, patch);
        int max_first = 0, min_second = side;
        for (size_t b : g.first.bond_list()) {
            for (Vertex v : patch.endpoints(b)) {
                max_first = std::max(max_first, v.x);
            }
        }
        for (size_t b : g.second.bond_list()) {
            for (Vertex v : patch.endpoints(b)) {
                min_second = std::min(min_second, v.x);
            }
        }
        if (min_second - max_first < 3) {
            throw NoRoom("cones closer than two free bond columns");
        }
        return g;
    }

    int middle() const {
        return (left + right) / 2;
    }
};

struct Transporter {
    SectorLabel kind;
    int n = 0;
    PauliOperator op;
    std::vector<Path> paths;
};

/// Truncated transporter of the given kind: up the first cone for n steps,
/// across, and back down the second cone. Kind Y is the product of the X and Z
/// transporters; their supports are disjoint so they commute.
inline Transporter transporter_truncation(SectorLabel kind, int n, const TransporterGeometry &g) {
    if (kind.is_vacuum()) {
        throw std::invalid_argument("the vacuum has no transporter");
    }
    if (n < 1 || n > g.n_max) {
        throw NoRoom("truncation " + std::to_string(n) + " outside 1.." + std::to_string(g.n_max));
    }
    Transporter t{kind, n, PauliOperator(g.patch.num_bonds()), {}};
    int top = g.base + n;
    if (kind.e) {
        t.paths.push_back(
            path_through(PathKind::Primal, {{g.left, g.base}, {g.left, top}, {g.right, top}, {g.right, g.base}}, g.patch));
    }
    if (kind.m) {
        t.paths.push_back(path_through(
            PathKind::Dual, {{g.left - 1, g.base}, {g.left - 1, top}, {g.right, top}, {g.right, g.base}}, g.patch));
    }
    for (const Path &p : t.paths) {
        t.op *= path_operator(p, g.patch);
    }
    return t;
}

/// Short route between the same endpoints: one step up each cone and across
/// the bottom of the gap.
inline PauliOperator comparison_operator(SectorLabel kind, const TransporterGeometry &g) {
    PauliOperator op(g.patch.num_bonds());
    int row = g.base + 1;
    if (kind.e) {
        op *= path_operator(find_path(PathKind::Primal, {g.left, g.base}, {g.left, row}, g.patch), g.patch);
        op *= path_operator(find_path(PathKind::Primal, {g.left, row}, {g.right, row}, g.patch), g.patch);
        op *= path_operator(find_path(PathKind::Primal, {g.right, row}, {g.right, g.base}, g.patch), g.patch);
    }
    if (kind.m) {
        op *= path_operator(find_path(PathKind::Dual, {g.left - 1, g.base}, {g.left - 1, row}, g.patch), g.patch);
        op *= path_operator(find_path(PathKind::Dual, {g.left - 1, row}, {g.right, row}, g.patch), g.patch);
        op *= path_operator(find_path(PathKind::Dual, {g.right, row}, {g.right, g.base}, g.patch), g.patch);
    }
    return op;
}

inline bool transporter_vacuum_identity(const Transporter &t, const PauliOperator &comparison,
                                        const StabilizerGroup &group) {
    return states_equal(t.op, comparison, group);
}
inline bool transporter_vacuum_identity(const Transporter &t, const TransporterGeometry &g,
                                        const StabilizerGroup &group) {
    return transporter_vacuum_identity(t, comparison_operator(t.kind, g), group);
}

/// Operators creating one charge of each kind at the first cone tip and its
/// partner in the middle of the gap. Indexed by SectorLabel::index().
inline std::array<PauliOperator, 4> charged_vectors(const TransporterGeometry &g) {
    int row = g.base + 1, mid = g.middle();
    PauliOperator e = path_operator(path_through(PathKind::Primal, {{g.left, g.base}, {g.left, row}, {mid, row}}, g.patch), g.patch);
    PauliOperator m =
        path_operator(path_through(PathKind::Dual, {{g.left - 1, g.base}, {g.left - 1, row}, {mid, row}}, g.patch), g.patch);
    return {PauliOperator(g.patch.num_bonds()), e, m, m * e};
}

/// Charge seen by the loop: parities of the star and plaquette Wilson loops.
inline SectorLabel loop_label(const PauliOperator &f, const DetectionLoop &loop) {
    return {static_cast<uint8_t>(f.z().dot(loop.star_loop)), static_cast<uint8_t>(f.x().dot(loop.plaquette_loop))};
}

inline bool touches_ring(const PauliOperator &f, const DetectionLoop &loop, const Patch &patch) {
    for (Vertex v : loop.ring_stars) {
        if (star_violated(f, v, patch)) {
            return true;
        }
    }
    for (Plaquette p : loop.ring_plaquettes) {
        if (plaquette_violated(f, p, patch)) {
            return true;
        }
    }
    return false;
}

inline SectorLabel sector_of_state(const PauliOperator &f, const DetectionLoop &loop, const Patch &patch) {
    if (touches_ring(f, loop, patch)) {
        throw AmbiguousCharge("excitation sits on the detection annulus");
    }
    return loop_label(f, loop);
}

inline SectorLabel sector_of_state(const ChargedState &state, const DetectionLoop &loop) {
    std::set<Site> ring;
    for (Vertex v : loop.ring_stars) {
        ring.insert({SiteKind::Star, v});
    }
    for (Plaquette p : loop.ring_plaquettes) {
        ring.insert({SiteKind::Plaquette, p});
    }
    for (const Site &s : state.syndrome) {
        if (ring.count(s)) {
            throw AmbiguousCharge("excitation at " + to_string(s) + " sits on the detection annulus");
        }
    }
    return loop_label(state.representative, loop);
}

/// Strings carrying one e and one m charge from an anchor vertex to the
/// nearest side of the patch.
struct EscapeStrings {
    PauliOperator electric;
    PauliOperator magnetic;
};

inline EscapeStrings escape_strings(Vertex anchor, const Patch &patch) {
    int L = patch.side(), x = anchor.x, y = anchor.y;
    if (x < 1 || y < 1 || x > L - 1 || y > L - 1) {
        throw NoRoom("escape anchor must be an interior vertex");
    }
    int down = y, left = x, right = L - x, up = L - y;
    int best = std::min({down, left, right, up});
    Path e, m;
    if (best == down) {
        e = find_path(PathKind::Primal, anchor, {x, 0}, patch);
        m = find_path(PathKind::Dual, {x, y - 1}, {x, -1}, patch);
    } else if (best == left) {
        e = find_path(PathKind::Primal, anchor, {0, y}, patch);
        m = find_path(PathKind::Dual, {x - 1, y}, {-1, y}, patch);
    } else if (best == right) {
        e = find_path(PathKind::Primal, anchor, {L, y}, patch);
        m = find_path(PathKind::Dual, {x, y}, {L, y}, patch);
    } else {
        e = find_path(PathKind::Primal, anchor, {x, L}, patch);
        m = find_path(PathKind::Dual, {x - 1, y}, {x - 1, L}, patch);
    }
    return {path_operator(e, patch), path_operator(m, patch)};
}

/// Vertex where a region's charges are injected: the cone apex if it is a
/// lattice vertex, else the lower endpoint of the region's first bond.
inline Vertex region_anchor(const Region &region, const Patch &patch) {
    if (region.cone) {
        const Point &a = region.cone->apex;
        if (boost::multiprecision::denominator(a.x) == 1 && boost::multiprecision::denominator(a.y) == 1) {
            Vertex v{a.x.convert_to<int>(), a.y.convert_to<int>()};
            if (patch.contains(v)) {
                return v;
            }
        }
    }
    if (region.empty()) {
        throw EmptyRegion("region has no bonds");
    }
    return patch.endpoints(region.bonds.first_set())[0];
}

struct EnumerationOptions {
    int budget = 4;
    int samples = 100;
    uint64_t seed = 7;
    bool allow_escape = true;
    size_t max_candidates = 20'000'000;
};

struct SectorWitness {
    SectorLabel label;
    PauliOperator witness;
    /// Eigenvalues of the star and plaquette loops on the witness state.
    int star_loop_eigenvalue = 1;
    int plaquette_loop_eigenvalue = 1;
};

struct SectorEnumeration {
    std::vector<SectorLabel> labels;
    std::vector<SectorLabel> exhaustive_labels;
    std::vector<SectorWitness> witnesses;
    size_t candidates = 0;
    bool partial = false;
    bool invariance = true;
    bool separation = true;
    size_t invariance_samples = 0;
};

namespace detail {

/// Incremental label/ambiguity tracker for the exhaustive sweep.
class SweepState {
   public:
    SweepState(const DetectionLoop &loop, const Patch &patch) : loop_(loop) {
        size_t n = patch.num_bonds();
        z_sites_.resize(n);
        x_sites_.resize(n);
        size_t site = 0;
        for (Vertex v : loop.ring_stars) {
            for (size_t b : patch.star_bonds(v)) {
                z_sites_[b].push_back(site);
            }
            site++;
        }
        for (Plaquette p : loop.ring_plaquettes) {
            for (size_t b : patch.plaquette_bonds(p)) {
                x_sites_[b].push_back(site);
            }
            site++;
        }
        ring_.assign(site, 0);
    }

    void toggle_x(size_t b) {
        m_ ^= loop_.plaquette_loop.get(b);
        for (size_t s : x_sites_[b]) {
            bump(s);
        }
    }
    void toggle_z(size_t b) {
        e_ ^= loop_.star_loop.get(b);
        for (size_t s : z_sites_[b]) {
            bump(s);
        }
    }
    void toggle(const PauliOperator &p) {
        for (size_t b : p.x().set_bits()) {
            toggle_x(b);
        }
        for (size_t b : p.z().set_bits()) {
            toggle_z(b);
        }
    }
    bool ambiguous() const {
        return odd_sites_ > 0;
    }
    SectorLabel label() const {
        return {e_, m_};
    }

   private:
    void bump(size_t s) {
        ring_[s] ^= 1;
        odd_sites_ += ring_[s] ? 1 : -1;
    }

    const DetectionLoop &loop_;
    std::vector<std::vector<size_t>> z_sites_;
    std::vector<std::vector<size_t>> x_sites_;
    std::vector<uint8_t> ring_;
    long odd_sites_ = 0;
    uint8_t e_ = 0;
    uint8_t m_ = 0;
};

inline double binomial(size_t n, size_t k) {
    double r = 1;
    for (size_t j = 1; j <= k; j++) {
        r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
    }
    return r;
}

}  // namespace detail

/// Pauli operator with a uniformly random letter on each selected bond.
template <typename Rng>
PauliOperator random_pauli_on(const BitVec &bonds, Rng &rng) {
    PauliOperator p(bonds.size());
    std::uniform_int_distribution<int> letter(0, 3);
    for (size_t b : bonds.set_bits()) {
        int k = letter(rng);
        if (k & 1) {
            p.flip_x(b);
        }
        if (k & 2) {
            p.flip_z(b);
        }
    }
    return p;
}

/// Charges reachable from operators on the region plus the escape strings.
///
/// Supports up to `budget` bonds are swept exhaustively when the candidate
/// count stays under the cap; the escape strings themselves always serve as
/// constructive witnesses. Every witness is then checked for invariance under
/// random operators strictly inside the loop, and distinct witnesses for
/// separation.
inline SectorEnumeration enumerate_sectors(const Region &region, const DetectionLoop &loop, const Patch &patch,
                                           const StabilizerGroup &group, const EnumerationOptions &opt) {
    if (!(group.patch() == patch)) {
        throw DimensionError("stabilizer group belongs to a different patch");
    }
    if (region.bonds.intersects(loop.annulus) || !region.bonds.is_subset_of(loop.inside)) {
        throw GeometryError("region is not strictly inside the detection loop");
    }
    SectorEnumeration out;
    size_t n = patch.num_bonds();
    std::vector<PauliOperator> escapes{PauliOperator(n)};
    std::vector<SectorLabel> escape_kinds{SectorLabel::vacuum()};
    if (opt.allow_escape) {
        EscapeStrings esc = escape_strings(region_anchor(region, patch), patch);
        escapes.push_back(esc.electric);
        escapes.push_back(esc.magnetic);
        escapes.push_back(esc.magnetic * esc.electric);
    }

    std::vector<size_t> bonds = region.bond_list();
    double count = 0;
    for (int w = 0; w <= opt.budget && w <= static_cast<int>(bonds.size()); w++) {
        count += detail::binomial(bonds.size(), w) * std::pow(3.0, w);
    }
    count *= static_cast<double>(escapes.size());
    std::set<SectorLabel> seen;
    if (count > static_cast<double>(opt.max_candidates)) {
        out.partial = true;
    } else {
        std::vector<detail::SweepState> states;
        for (const PauliOperator &e : escapes) {
            states.emplace_back(loop, patch);
            states.back().toggle(e);
        }
        auto record = [&]() {
            for (auto &s : states) {
                out.candidates++;
                if (!s.ambiguous()) {
                    seen.insert(s.label());
                }
            }
        };
        auto apply = [&](size_t b, int letter) {
            for (auto &s : states) {
                if (letter & 1) {
                    s.toggle_x(b);
                }
                if (letter & 2) {
                    s.toggle_z(b);
                }
            }
        };
        auto sweep = [&](auto &&self, size_t start, int remaining) -> void {
            record();
            if (remaining == 0) {
                return;
            }
            for (size_t i = start; i < bonds.size(); i++) {
                for (int letter = 1; letter <= 3; letter++) {
                    apply(bonds[i], letter);
                    self(self, i + 1, remaining - 1);
                    apply(bonds[i], letter);
                }
            }
        };
        sweep(sweep, 0, opt.budget);
    }
    out.exhaustive_labels.assign(seen.begin(), seen.end());

    std::mt19937_64 rng(opt.seed);
    for (size_t k = 0; k < escapes.size(); k++) {
        const PauliOperator &f = escapes[k];
        ChargedState state = syndrome(f, group);
        SectorLabel label = sector_of_state(state, loop);
        SectorWitness w{label, f, f.z().dot(loop.star_loop) ? -1 : 1, f.x().dot(loop.plaquette_loop) ? -1 : 1};
        for (int s = 0; s < opt.samples; s++) {
            PauliOperator g = random_pauli_on(loop.inside, rng);
            out.invariance_samples++;
            bool ok = true;
            try {
                ok = sector_of_state(f * g, loop, patch) == label && sector_of_state(g, loop, patch).is_vacuum();
            } catch (const AmbiguousCharge &) {
                ok = false;
            }
            out.invariance = out.invariance && ok;
        }
        seen.insert(label);
        out.witnesses.push_back(std::move(w));
    }
    for (size_t a = 0; a < out.witnesses.size(); a++) {
        for (size_t b = a + 1; b < out.witnesses.size(); b++) {
            const auto &wa = out.witnesses[a], &wb = out.witnesses[b];
            if (wa.label == wb.label) {
                continue;
            }
            SectorLabel diff = loop_label(wa.witness.adjoint() * wb.witness, loop);
            out.separation = out.separation && diff == fuse(wa.label, wb.label) && !diff.is_vacuum();
        }
    }
    out.labels.assign(seen.begin(), seen.end());
    std::sort(out.labels.begin(), out.labels.end(), [](SectorLabel a, SectorLabel b) { return a.index() < b.index(); });
    return out;
}

/// Automorphism A -> s A s^dagger for a string s inside a cone.
struct SectorEndomorphism {
    SectorLabel label;
    Region cone;
    PauliOperator string;
};

/// Canonical string of the given label starting at the cone apex and running
/// along the lattice axis closest to the cone's bisector while it stays in the
/// cone. The e part is a primal Z string, the m part a dual X string.
inline SectorEndomorphism localized_endomorphism(SectorLabel label, const ConeSpec &spec, const Patch &patch) {
    Region region = cone_region(spec, patch);
    SectorEndomorphism rho{label, region, PauliOperator(patch.num_bonds())};
    if (label.is_vacuum()) {
        return rho;
    }
    if (boost::multiprecision::denominator(spec.apex.x) != 1 || boost::multiprecision::denominator(spec.apex.y) != 1) {
        throw GeometryError("charged strings need a cone apex on a lattice vertex");
    }
    int ax = spec.apex.x.convert_to<int>(), ay = spec.apex.y.convert_to<int>();
    double lx = spec.low.dx / std::hypot(spec.low.dx, spec.low.dy), ly = spec.low.dy / std::hypot(spec.low.dx, spec.low.dy);
    double hx = spec.high.dx / std::hypot(spec.high.dx, spec.high.dy),
           hy = spec.high.dy / std::hypot(spec.high.dx, spec.high.dy);
    double bx = lx + hx, by = ly + hy;
    int dx = 0, dy = 0;
    if (std::abs(bx) >= std::abs(by)) {
        dx = bx > 0 ? 1 : -1;
    } else {
        dy = by > 0 ? 1 : -1;
    }
    auto bond_at = [&](Bond b) -> std::optional<size_t> {
        if (!patch.is_valid(b) || !region.contains(patch.index(b))) {
            return std::nullopt;
        }
        return patch.index(b);
    };
    // Step t of the primal string and of the dual string.
    auto primal = [&](int t) -> Bond {
        if (dy == 1) return {ax, ay + t, Orientation::North};
        if (dy == -1) return {ax, ay - 1 - t, Orientation::North};
        if (dx == 1) return {ax + t, ay, Orientation::East};
        return {ax - 1 - t, ay, Orientation::East};
    };
    auto dual = [&](int t) -> Bond {
        if (dy == 1) return {ax, ay + 1 + t, Orientation::East};
        if (dy == -1) return {ax - 1, ay - t, Orientation::East};
        if (dx == 1) return {ax + 1 + t, ay - 1, Orientation::North};
        return {ax - t, ay, Orientation::North};
    };
    if (label.e) {
        size_t len = 0;
        for (int t = 0;; t++) {
            auto b = bond_at(primal(t));
            if (!b) break;
            rho.string.flip_z(*b);
            len++;
        }
        if (len == 0) {
            throw GeometryError("cone too narrow for an e string");
        }
    }
    if (label.m) {
        size_t len = 0;
        for (int t = 0;; t++) {
            auto b = bond_at(dual(t));
            if (!b) break;
            rho.string.flip_x(*b);
            len++;
        }
        if (len == 0) {
            throw GeometryError("cone too narrow for an m string");
        }
    }
    return rho;
}

inline PauliOperator apply_endomorphism(const SectorEndomorphism &rho, const PauliOperator &a) {
    return commutation_sign(rho.string, a) < 0 ? -a : a;
}

/// d(a), certified: the endomorphism maps every single-bond X and Z on the
/// cone to plus or minus itself and squares to the identity there, so it is
/// an automorphism of the cone algebra and the intertwiner R = I solves the
/// conjugate equations with d = 1.
inline Rational statistical_dimension(SectorLabel a, const ConeSpec &cone, const Patch &patch) {
    SectorEndomorphism rho = localized_endomorphism(a, cone, patch);
    size_t n = patch.num_bonds();
    for (size_t b : rho.cone.bond_list()) {
        for (char letter : {'X', 'Z'}) {
            PauliOperator p = PauliOperator::single(n, b, letter);
            PauliOperator image = apply_endomorphism(rho, p);
            if (image.x() != p.x() || image.z() != p.z() || !image.is_hermitian()) {
                throw ConsistencyError("endomorphism leaves the cone algebra");
            }
            if (apply_endomorphism(rho, image) != p) {
                throw ConsistencyError("endomorphism is not involutive");
            }
        }
    }
    PauliOperator r = PauliOperator::identity(n);
    if (r.adjoint() * r != PauliOperator::identity(n)) {
        throw ConsistencyError("conjugate equations fail");
    }
    return Rational(1);
}

/// Setup for braiding: a charge at the patch centre, its escape strings, and
/// Wilson loops around it.
struct BraidingSetup {
    DetectionLoop loop;
    EscapeStrings strings;
};

inline BraidingSetup braiding_setup(const Patch &patch) {
    int c = patch.side() / 2;
    Region site = finite_region({patch.index({c, c, Orientation::North})}, patch);
    DetectionLoop loop = detection_loop(site, patch);
    return {loop, escape_strings({c, c}, patch)};
}

/// String creating charge a at the centre.
inline PauliOperator charge_string(SectorLabel a, const BraidingSetup &s) {
    PauliOperator p(s.strings.electric.num_bonds());
    if (a.e) {
        p *= s.strings.electric;
    }
    if (a.m) {
        p *= s.strings.magnetic;
    }
    return p;
}

/// Closed b-type Wilson loop: the plaquette loop moves e charges, the star
/// loop moves m charges.
inline PauliOperator wilson_loop(SectorLabel b, const BraidingSetup &s) {
    size_t n = s.loop.star_loop.size();
    PauliOperator p(n);
    if (b.e) {
        p *= PauliOperator(BitVec(n), s.loop.plaquette_loop, 0);
    }
    if (b.m) {
        p *= PauliOperator(s.loop.star_loop, BitVec(n), 0);
    }
    return p;
}

inline int monodromy(SectorLabel a, SectorLabel b, const Patch &patch) {
    BraidingSetup s = braiding_setup(patch);
    return commutation_sign(wilson_loop(b, s), charge_string(a, s));
}

/// The same phase read off from the transporters: rho_a(V_b) = phase V_b.
inline int monodromy_via_transporter(SectorLabel a, SectorLabel b, const TransporterGeometry &g, int n) {
    if (b.is_vacuum()) {
        return 1;
    }
    SectorEndomorphism rho = localized_endomorphism(a, g.first_cone, g.patch);
    Transporter t = transporter_truncation(b, n, g);
    PauliOperator image = apply_endomorphism(rho, t.op);
    return image == t.op ? 1 : -1;
}

inline bool is_degenerate(SectorLabel a, const Patch &patch) {
    for (SectorLabel b : all_sectors()) {
        if (monodromy(a, b, patch) != 1) {
            return false;
        }
    }
    return true;
}

/// Degeneracy judged by the transporters: rho_a fixes every V_b.
inline bool fixes_all_transporters(SectorLabel a, const TransporterGeometry &g, int n) {
    for (SectorLabel b : all_sectors()) {
        if (monodromy_via_transporter(a, b, g, n) != 1) {
            return false;
        }
    }
    return true;
}

struct SMatrix {
    std::array<std::array<Rational, 4>, 4> entries;
    Rational total_dimension;
    Rational determinant;
    bool symmetric = false;
    bool invertible = false;
    bool unitary = false;

    const Rational &operator()(SectorLabel a, SectorLabel b) const {
        return entries[a.index()][b.index()];
    }
};

/// S_ab = d_a d_b M(a, b) / D with D^2 = sum of d^2, all exact.
inline SMatrix s_matrix(const Patch &patch) {
    ConeSpec cone = standard_cone(patch.side());
    std::array<Rational, 4> d;
    Rational sum = 0;
    for (SectorLabel a : all_sectors()) {
        d[a.index()] = statistical_dimension(a, cone, patch);
        sum += d[a.index()] * d[a.index()];
    }
    SMatrix s;
    Rational root = 0;
    while (root * root < sum) {
        root += 1;
    }
    if (root * root != sum) {
        throw ConsistencyError("total dimension is not rational");
    }
    s.total_dimension = root;
    for (SectorLabel a : all_sectors()) {
        for (SectorLabel b : all_sectors()) {
            s.entries[a.index()][b.index()] = d[a.index()] * d[b.index()] * monodromy(a, b, patch) / root;
        }
    }
    std::vector<std::vector<Rational>> rows(4, std::vector<Rational>(4));
    s.symmetric = true;
    s.unitary = true;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            rows[r][c] = s.entries[r][c];
            s.symmetric = s.symmetric && s.entries[r][c] == s.entries[c][r];
            Rational dot = 0;
            for (size_t k = 0; k < 4; k++) {
                dot += s.entries[r][k] * s.entries[c][k];
            }
            s.unitary = s.unitary && dot == (r == c ? 1 : 0);
        }
    }
    s.determinant = determinant(rows);
    s.invertible = s.determinant != 0;
    return s;
}

}  // namespace conekit

#endif
