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

#ifndef CONEKIT_GEOMETRY_HPP
#define CONEKIT_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conekit/bits.hpp"
#include "conekit/errors.hpp"
#include "conekit/rational.hpp"

namespace conekit {

/// Integer lattice coordinate. Used for vertices and for plaquettes (by
/// their lower-left corner).
struct Coord {
    int x = 0;
    int y = 0;
    auto operator<=>(const Coord &) const = default;
};
using Vertex = Coord;
using Plaquette = Coord;

inline std::string to_string(Coord c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

enum class Orientation : uint8_t { East, North };

/// Up to four bond indices, stored inline.
struct SmallBonds {
    std::array<size_t, 4> items{};
    size_t count = 0;

    void push(size_t b) {
        items[count++] = b;
    }
    size_t size() const {
        return count;
    }
    size_t *begin() {
        return items.data();
    }
    size_t *end() {
        return items.data() + count;
    }
    const size_t *begin() const {
        return items.data();
    }
    const size_t *end() const {
        return items.data() + count;
    }
    std::vector<size_t> to_vector() const {
        return {begin(), end()};
    }
};

struct Bond {
    int x = 0;
    int y = 0;
    Orientation orientation = Orientation::East;
    auto operator<=>(const Bond &) const = default;
};

/// Counts for a patch of side L, valid for any L >= 1.
struct PatchCounts {
    size_t bonds;
    size_t stars;
    size_t plaquettes;
};
constexpr PatchCounts patch_counts(int side) {
    size_t L = static_cast<size_t>(side);
    return {2 * L * (L + 1), (L + 1) * (L + 1), L * L};
}

/// Square patch with (L+1)x(L+1) vertices.
///
/// Bond numbering: East bonds first, row by row (index y*L + x), then North
/// bonds row by row (index L(L+1) + y*(L+1) + x). Plaquette (x, y) is the face
/// whose lower-left corner is vertex (x, y); coordinates -1 and L name the
/// exterior faces used as dual path endpoints.
class Patch {
   public:
    explicit Patch(int side) : L_(side) {
        if (side < 1) {
            throw InvalidSize("patch side must be positive");
        }
    }

    int side() const {
        return L_;
    }
    size_t num_bonds() const {
        return patch_counts(L_).bonds;
    }
    size_t num_vertices() const {
        return patch_counts(L_).stars;
    }
    size_t num_plaquettes() const {
        return patch_counts(L_).plaquettes;
    }

    bool contains(Vertex v) const {
        return v.x >= 0 && v.y >= 0 && v.x <= L_ && v.y <= L_;
    }
    bool is_interior(Plaquette p) const {
        return p.x >= 0 && p.y >= 0 && p.x < L_ && p.y < L_;
    }
    /// Interior faces plus the ring of exterior faces around the patch.
    bool is_dual_site(Plaquette p) const {
        return p.x >= -1 && p.y >= -1 && p.x <= L_ && p.y <= L_;
    }
    bool is_valid(Bond b) const {
        if (!contains({b.x, b.y})) {
            return false;
        }
        return b.orientation == Orientation::East ? b.x < L_ : b.y < L_;
    }

    size_t index(Bond b) const {
        if (!is_valid(b)) {
            throw GeometryError("bond outside patch at " + to_string(Coord{b.x, b.y}));
        }
        size_t L = L_;
        if (b.orientation == Orientation::East) {
            return b.y * L + b.x;
        }
        return L * (L + 1) + b.y * (L + 1) + b.x;
    }
    Bond bond(size_t k) const {
        size_t L = L_;
        if (k >= num_bonds()) {
            throw GeometryError("bond index out of range");
        }
        if (k < L * (L + 1)) {
            return {static_cast<int>(k % L), static_cast<int>(k / L), Orientation::East};
        }
        k -= L * (L + 1);
        return {static_cast<int>(k % (L + 1)), static_cast<int>(k / (L + 1)), Orientation::North};
    }
    std::array<Vertex, 2> endpoints(size_t k) const {
        Bond b = bond(k);
        Vertex a{b.x, b.y};
        return {a, b.orientation == Orientation::East ? Vertex{b.x + 1, b.y} : Vertex{b.x, b.y + 1}};
    }
    /// The two faces on either side of a bond; one may be exterior.
    std::array<Plaquette, 2> faces(size_t k) const {
        Bond b = bond(k);
        if (b.orientation == Orientation::East) {
            return {Plaquette{b.x, b.y - 1}, Plaquette{b.x, b.y}};
        }
        return {Plaquette{b.x - 1, b.y}, Plaquette{b.x, b.y}};
    }

    size_t vertex_index(Vertex v) const {
        if (!contains(v)) {
            throw GeometryError("vertex outside patch at " + to_string(v));
        }
        return v.y * (L_ + 1) + v.x;
    }
    Vertex vertex(size_t k) const {
        return {static_cast<int>(k % (L_ + 1)), static_cast<int>(k / (L_ + 1))};
    }
    size_t plaquette_index(Plaquette p) const {
        if (!is_interior(p)) {
            throw GeometryError("plaquette outside patch at " + to_string(p));
        }
        return p.y * L_ + p.x;
    }
    Plaquette plaquette(size_t k) const {
        return {static_cast<int>(k % L_), static_cast<int>(k / L_)};
    }

    /// Bonds touching vertex v (2 at corners, 3 on edges, 4 inside), ascending.
    SmallBonds star_bonds(Vertex v) const {
        if (!contains(v)) {
            throw GeometryError("vertex outside patch at " + to_string(v));
        }
        SmallBonds out;
        size_t L = L_, x = v.x, y = v.y;
        size_t north0 = L * (L + 1);
        if (v.y > 0) {
            out.push(north0 + (y - 1) * (L + 1) + x);
        }
        if (v.x > 0) {
            out.push(y * L + x - 1);
        }
        if (v.x < L_) {
            out.push(y * L + x);
        }
        if (v.y < L_) {
            out.push(north0 + y * (L + 1) + x);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::array<size_t, 4> plaquette_bonds(Plaquette p) const {
        if (!is_interior(p)) {
            throw GeometryError("plaquette outside patch at " + to_string(p));
        }
        return {
            index({p.x, p.y, Orientation::East}),
            index({p.x, p.y + 1, Orientation::East}),
            index({p.x, p.y, Orientation::North}),
            index({p.x + 1, p.y, Orientation::North}),
        };
    }

    /// Bond shared by two edge-adjacent dual sites, if it exists.
    std::optional<size_t> crossing(Plaquette a, Plaquette b) const {
        if (!is_dual_site(a) || !is_dual_site(b)) {
            return std::nullopt;
        }
        Bond bd;
        if (a.y == b.y && std::abs(a.x - b.x) == 1) {
            bd = {std::max(a.x, b.x), a.y, Orientation::North};
        } else if (a.x == b.x && std::abs(a.y - b.y) == 1) {
            bd = {a.x, std::max(a.y, b.y), Orientation::East};
        } else {
            return std::nullopt;
        }
        if (!is_valid(bd)) {
            return std::nullopt;
        }
        return index(bd);
    }

    bool operator==(const Patch &) const = default;

   private:
    int L_;
};

inline Patch build_patch(int side) {
    if (side < 2) {
        throw InvalidSize("patch side must be at least 2, got " + std::to_string(side));
    }
    return Patch(side);
}

enum class PathKind : uint8_t { Primal, Dual };

/// Bond chain on the lattice (primal) or crossing dual edges (dual).
struct Path {
    PathKind kind = PathKind::Primal;
    std::vector<size_t> bonds;
    Coord start;
    Coord end;
};

/// GF(2) boundary of a bond chain: vertices (primal) or faces (dual) that
/// meet an odd number of its bonds. Sorted.
inline std::vector<Coord> chain_boundary(PathKind kind, const std::vector<size_t> &bonds, const Patch &patch) {
    std::map<Coord, int> count;
    for (size_t b : bonds) {
        if (kind == PathKind::Primal) {
            for (Vertex v : patch.endpoints(b)) {
                count[v] ^= 1;
            }
        } else {
            for (Plaquette p : patch.faces(b)) {
                count[p] ^= 1;
            }
        }
    }
    std::vector<Coord> out;
    for (auto [c, odd] : count) {
        if (odd) {
            out.push_back(c);
        }
    }
    return out;
}

/// Canonical path from a to b: move along x first, then along y.
inline Path find_path(PathKind kind, Coord a, Coord b, const Patch &patch) {
    if (kind == PathKind::Primal) {
        if (!patch.contains(a) || !patch.contains(b)) {
            throw GeometryError("path endpoint outside patch");
        }
    } else if (!patch.is_dual_site(a) || !patch.is_dual_site(b)) {
        throw GeometryError("dual path endpoint outside patch");
    }
    Path path{kind, {}, a, b};
    Coord cur = a;
    auto step = [&](Coord next) {
        if (kind == PathKind::Primal) {
            Bond bd = next.x != cur.x ? Bond{std::min(cur.x, next.x), cur.y, Orientation::East}
                                      : Bond{cur.x, std::min(cur.y, next.y), Orientation::North};
            path.bonds.push_back(patch.index(bd));
        } else {
            auto crossed = patch.crossing(cur, next);
            if (!crossed) {
                throw GeometryError("dual path leaves the patch between " + to_string(cur) + " and " + to_string(next));
            }
            path.bonds.push_back(*crossed);
        }
        cur = next;
    };
    while (cur.x != b.x) {
        step({cur.x + (b.x > cur.x ? 1 : -1), cur.y});
    }
    while (cur.y != b.y) {
        step({cur.x, cur.y + (b.y > cur.y ? 1 : -1)});
    }
    return path;
}

/// Concatenation of canonical segments through the given waypoints.
inline Path path_through(PathKind kind, const std::vector<Coord> &waypoints, const Patch &patch) {
    if (waypoints.empty()) {
        throw GeometryError("path needs at least one waypoint");
    }
    Path path{kind, {}, waypoints.front(), waypoints.back()};
    for (size_t k = 0; k + 1 < waypoints.size(); k++) {
        Path seg = find_path(kind, waypoints[k], waypoints[k + 1], patch);
        path.bonds.insert(path.bonds.end(), seg.bonds.begin(), seg.bonds.end());
    }
    return path;
}

struct Point {
    Rational x;
    Rational y;
};

/// Integer direction vector (dx, dy).
struct Direction {
    long long dx = 0;
    long long dy = 0;
};

/// Radially truncated angular sector. The sector runs counterclockwise from
/// `low` to `high`; the opening angle must be below a half turn.
struct ConeSpec {
    Point apex;
    Direction low;
    Direction high;
    Rational r_min;
    Rational r_max;
};

namespace detail {

/// Parameter interval of t in [0, 1], with open/closed ends.
struct Interval {
    Rational lo = 0;
    Rational hi = 1;
    bool lo_open = true;
    bool hi_open = true;
    bool empty = false;

    /// Intersects with {t : c0 + c1 t >= 0}.
    void clip(const Rational &c0, const Rational &c1) {
        if (empty) {
            return;
        }
        if (c1 == 0) {
            if (c0 < 0) {
                empty = true;
            }
            return;
        }
        Rational b = -c0 / c1;
        if (c1 > 0) {
            if (b > lo) {
                lo = b;
                lo_open = false;
            }
        } else if (b < hi) {
            hi = b;
            hi_open = false;
        }
        if (lo > hi || (lo == hi && (lo_open || hi_open))) {
            empty = true;
        }
    }
    bool contains(const Rational &t) const {
        if (empty) {
            return false;
        }
        bool above = t > lo || (t == lo && !lo_open);
        bool below = t < hi || (t == hi && !hi_open);
        return above && below;
    }
};

inline Rational cross(const Rational &ax, const Rational &ay, const Rational &bx, const Rational &by) {
    return ax * by - ay * bx;
}

/// Whether the open unit segment from `start` along axis `u` meets the cone.
inline bool segment_meets_cone(const Point &start, int ux, int uy, const ConeSpec &cone) {
    Rational wx = start.x - cone.apex.x;
    Rational wy = start.y - cone.apex.y;
    Rational lx = cone.low.dx, ly = cone.low.dy, hx = cone.high.dx, hy = cone.high.dy;
    Interval t;
    // cross(low, w(t)) >= 0 and cross(w(t), high) >= 0.
    t.clip(cross(lx, ly, wx, wy), cross(lx, ly, ux, uy));
    t.clip(cross(wx, wy, hx, hy), cross(ux, uy, hx, hy));
    if (t.empty) {
        return false;
    }
    // |w(t)|^2 = q0 + 2 q1 t + t^2 is convex in t.
    Rational q0 = wx * wx + wy * wy;
    Rational q1 = wx * ux + wy * uy;
    auto q = [&](const Rational &s) { return q0 + 2 * q1 * s + s * s; };
    Rational q_lo = q(t.lo), q_hi = q(t.hi);
    Rational sup = q_lo > q_hi ? q_lo : q_hi;
    bool sup_hit = (q_lo == sup && !t.lo_open) || (q_hi == sup && !t.hi_open);
    Rational inf;
    bool inf_hit;
    Rational vertex = -q1;
    if (t.contains(vertex)) {
        inf = q(vertex);
        inf_hit = true;
    } else {
        inf = q_lo < q_hi ? q_lo : q_hi;
        inf_hit = (q_lo == inf && !t.lo_open) || (q_hi == inf && !t.hi_open);
    }
    Rational a = cone.r_min * cone.r_min, b = cone.r_max * cone.r_max;
    bool reaches_outer = inf < b || (inf == b && inf_hit);
    bool reaches_inner = sup > a || (sup == a && sup_hit);
    return reaches_outer && reaches_inner;
}

}  // namespace detail

/// Set of patch bonds together with how it was described.
struct Region {
    enum class Kind : uint8_t { Cone, Finite, Union, Complement };
    Kind kind = Kind::Finite;
    BitVec bonds;
    std::optional<ConeSpec> cone;
    std::vector<Region> parts;

    bool contains(size_t bond) const {
        return bonds.get(bond);
    }
    size_t size() const {
        return bonds.popcount();
    }
    bool empty() const {
        return bonds.none();
    }
    std::vector<size_t> bond_list() const {
        return bonds.set_bits();
    }
};

/// Bonds whose open segment meets the sector between r_min and r_max.
inline Region cone_region(const ConeSpec &cone, const Patch &patch) {
    if (detail::cross(cone.low.dx, cone.low.dy, cone.high.dx, cone.high.dy) <= 0) {
        throw GeometryError("cone directions must open counterclockwise by less than a half turn");
    }
    if (cone.r_min < 0 || cone.r_min >= cone.r_max) {
        throw EmptyRegion("cone radii must satisfy 0 <= r_min < r_max");
    }
    Region region{Region::Kind::Cone, BitVec(patch.num_bonds()), cone, {}};
    for (size_t k = 0; k < patch.num_bonds(); k++) {
        Bond b = patch.bond(k);
        bool east = b.orientation == Orientation::East;
        if (detail::segment_meets_cone({b.x, b.y}, east ? 1 : 0, east ? 0 : 1, cone)) {
            region.bonds.set(k, true);
        }
    }
    if (region.empty()) {
        throw EmptyRegion("cone contains no bonds of the patch");
    }
    return region;
}

inline Region finite_region(const std::vector<size_t> &bonds, const Patch &patch) {
    Region region{Region::Kind::Finite, BitVec(patch.num_bonds()), std::nullopt, {}};
    for (size_t b : bonds) {
        if (b >= patch.num_bonds()) {
            throw GeometryError("bond index out of range");
        }
        region.bonds.set(b, true);
    }
    return region;
}

inline Region region_union(const Region &a, const Region &b) {
    Region region{Region::Kind::Union, a.bonds | b.bonds, std::nullopt, {a, b}};
    return region;
}

inline Region region_complement(const Region &a, const Patch &patch) {
    BitVec all(patch.num_bonds());
    for (size_t k = 0; k < patch.num_bonds(); k++) {
        all.set(k, true);
    }
    return Region{Region::Kind::Complement, all ^ a.bonds, std::nullopt, {a}};
}

/// Cone opening upward from (L/2, 2) with slopes +-2 and outer radius L/2 - 1.
inline ConeSpec standard_cone(int side) {
    return ConeSpec{{side / 2, 2}, {1, 2}, {-1, 2}, 0, side / 2 - 1};
}

/// Two closed Wilson loops around a region.
///
/// The enclosed stars are the vertices of the region's bounding box; the
/// enclosed plaquettes fill that box grown by one face on every side. The
/// star loop lives on the spokes leaving the box, the plaquette loop on the
/// perimeter of the grown box. The ring sites are the ones just outside the
/// enclosed sets that the loops also touch; charges there are ambiguous.
struct DetectionLoop {
    std::vector<Vertex> stars;
    std::vector<Plaquette> plaquettes;
    BitVec star_loop;
    BitVec plaquette_loop;
    BitVec annulus;
    BitVec inside;
    std::vector<Vertex> ring_stars;
    std::vector<Plaquette> ring_plaquettes;
};

inline DetectionLoop detection_loop(const Region &region, const Patch &patch) {
    size_t n = patch.num_bonds();
    DetectionLoop loop{{}, {}, BitVec(n), BitVec(n), BitVec(n), BitVec(n), {}, {}};
    if (region.bonds.size() != n) {
        throw DimensionError("region belongs to a different patch");
    }
    if (region.empty()) {
        return loop;
    }
    int x0 = patch.side(), x1 = 0, y0 = patch.side(), y1 = 0;
    for (size_t b : region.bond_list()) {
        for (Vertex v : patch.endpoints(b)) {
            x0 = std::min(x0, v.x);
            x1 = std::max(x1, v.x);
            y0 = std::min(y0, v.y);
            y1 = std::max(y1, v.y);
        }
    }
    int gx0 = x0 - 1, gx1 = x1 + 1, gy0 = y0 - 1, gy1 = y1 + 1;
    if (gx0 < 1 || gy0 < 1 || gx1 > patch.side() - 1 || gy1 > patch.side() - 1) {
        throw NoRoom("region with a one-face margin does not fit strictly inside the patch");
    }
    for (int y = y0; y <= y1; y++) {
        for (int x = x0; x <= x1; x++) {
            loop.stars.push_back({x, y});
            for (size_t b : patch.star_bonds({x, y})) {
                loop.star_loop.flip(b);
            }
        }
    }
    for (int y = gy0; y < gy1; y++) {
        for (int x = gx0; x < gx1; x++) {
            loop.plaquettes.push_back({x, y});
            for (size_t b : patch.plaquette_bonds({x, y})) {
                loop.plaquette_loop.flip(b);
            }
        }
    }
    loop.annulus = loop.star_loop | loop.plaquette_loop;
    for (size_t b = 0; b < n; b++) {
        auto [u, v] = patch.endpoints(b);
        if (u.x >= x0 && u.x <= x1 && u.y >= y0 && u.y <= y1 && v.x >= x0 && v.x <= x1 && v.y >= y0 && v.y <= y1) {
            loop.inside.set(b, true);
        }
    }
    for (int x = gx0; x <= gx1; x++) {
        loop.ring_stars.push_back({x, gy0});
        loop.ring_stars.push_back({x, gy1});
    }
    for (int y = gy0 + 1; y < gy1; y++) {
        loop.ring_stars.push_back({gx0, y});
        loop.ring_stars.push_back({gx1, y});
    }
    for (int x = gx0; x < gx1; x++) {
        loop.ring_plaquettes.push_back({x, gy0 - 1});
        loop.ring_plaquettes.push_back({x, gy1});
    }
    for (int y = gy0; y < gy1; y++) {
        loop.ring_plaquettes.push_back({gx0 - 1, y});
        loop.ring_plaquettes.push_back({gx1, y});
    }
    if (loop.annulus.intersects(region.bonds)) {
        throw ConsistencyError("detection annulus overlaps its region");
    }
    return loop;
}

}  // namespace conekit

#endif
