#include "groves/lattice.hpp"

#include "groves/errors.hpp"
#include "groves/wilson.hpp"

namespace groves {

int lattice_degree(LatticeKind lat) {
    switch (lat) {
        case LatticeKind::square: return 4;
        case LatticeKind::triangular: return 6;
        case LatticeKind::hexagonal: return 3;
    }
    return 0;
}

Generator lattice_generator(LatticeKind lat) {
    return lat == LatticeKind::square ? Generator::inv_pi : Generator::sqrt3_inv_pi;
}

bool is_site(LatticeKind lat, Point p) {
    if (lat != LatticeKind::hexagonal) return true;
    int m = (p.x + p.y) % 3;
    if (m < 0) m += 3;
    return m != 2;
}

int hex_class(Point p) {
    int m = (p.x + p.y) % 3;
    if (m < 0) m += 3;
    return m;
}

std::vector<Point> lattice_neighbors(LatticeKind lat, Point p) {
    std::vector<Point> out;
    for (auto [dx, dy] : step_offsets(lat, p.x, p.y)) out.push_back({p.x + dx, p.y + dy});
    return out;
}

int zipper_transport(LatticeKind lat, Point a, Point b) {
    auto forward = [&](Point u, Point v) -> bool {
        switch (lat) {
            case LatticeKind::square:
                return u.x == 0 && u.y <= 0 && v.x == 1 && v.y == u.y;
            case LatticeKind::triangular:
                return u.x == 0 && u.y <= 0 && v.x == 1 && (v.y == u.y || v.y == u.y - 1);
            case LatticeKind::hexagonal:
                // u = (-k,-2k), v = (1-k,-2k) for some k >= 0.
                return u.y == 2 * u.x && u.x <= 0 && v.x == u.x + 1 && v.y == u.y;
        }
        return false;
    };
    if (forward(a, b)) return 1;
    if (forward(b, a)) return -1;
    return 0;
}

Point rotate_about_start_face(LatticeKind lat, Point p) {
    switch (lat) {
        case LatticeKind::square: return {1 - p.x, 1 - p.y};
        case LatticeKind::triangular: return {1 - p.x, -p.y};
        case LatticeKind::hexagonal: return {2 - p.x, 2 - p.y};
    }
    return p;
}

bool west_of_start_line(LatticeKind lat, Point p) {
    if (lat == LatticeKind::hexagonal) return 2 * p.x - p.y <= 0;
    return p.x <= 0;
}

}  // namespace groves
