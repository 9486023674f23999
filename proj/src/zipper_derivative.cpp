#include "groves/zipper_derivative.hpp"

#include <cstdlib>
#include <string>

#include "groves/errors.hpp"
#include "groves/potential_kernel.hpp"

namespace groves {

namespace {

// Telescoping the marked-edge series.  The half-turn rho about the start
// face maps the marked half-line Z to its northward mirror image rho(Z);
// pairing each term of the series with its image turns the sum over the
// infinite half-line into a sum over the edges of the finite face path from
// the start face F0 to F0 + s, where s = rho(u) - v.  Every face edge
// contributes a "master" term; when a column of the face path slides over
// rho(u) or rho(v) an extra +-gbar(u, v) "sweep" appears, and the final
// west-side indicator mismatch of the rotated pair contributes once more.
// On the triangular lattice the topmost marked edge lies on the rotation
// center, so Z and rho(Z) share it and one master term must be given back.
struct Builder {
    LatticeKind lat;
    Point u, v, u2, v2;
    int window;
    ExactValue guv;  // gbar(u, v)
    ExactValue total;
    std::vector<ZipperEvent>* log;

    ExactValue g(Point a, Point b) const { return gbar(lat, a, b, window); }

    void emit(ZipperEvent::Kind kind, Point a, Point b, const ExactValue& c,
              std::string note) {
        total += c;
        if (log) log->push_back({kind, a, b, c, std::move(note)});
    }

    // -(gbar(u2,a) gbar(b,v2) - gbar(u2,b) gbar(a,v2)) for face edge a -> b.
    void master(Point a, Point b, const char* note) {
        ExactValue m = -(g(u2, a) * g(b, v2) - g(u2, b) * g(a, v2));
        emit(ZipperEvent::Kind::step_edge, a, b, m, note);
    }

    void sweep(int coeff, Point a, Point b, const char* note) {
        if (coeff == 0) return;
        emit(ZipperEvent::Kind::sweep, a, b, guv * ExactValue(coeff), note);
    }
};

// Was the whole column {x = cx, y <= cy} swept east-to-west over w?
bool in_column(Point w, int cx, int cy) { return w.x == cx && w.y <= cy; }

void walk_square(Builder& b, Point s) {
    Point t{0, 0};  // face = unit square with lower-left corner t
    while (t.x != s.x) {
        if (s.x < t.x) {
            b.master({t.x, t.y + 1}, {t.x, t.y}, "west step");
            b.sweep(in_column(b.v2, t.x, t.y) - in_column(b.u2, t.x, t.y),
                    b.u2, b.v2, "column left behind moving west");
            --t.x;
        } else {
            b.master({t.x + 1, t.y}, {t.x + 1, t.y + 1}, "east step");
            b.sweep(in_column(b.u2, t.x + 1, t.y) - in_column(b.v2, t.x + 1, t.y),
                    b.u2, b.v2, "column swallowed moving east");
            ++t.x;
        }
    }
    while (t.y != s.y) {
        if (s.y > t.y) {
            b.master({t.x + 1, t.y + 1}, {t.x, t.y + 1}, "north step");
            ++t.y;
        } else {
            b.master({t.x, t.y}, {t.x + 1, t.y}, "south step");
            --t.y;
        }
    }
}

void walk_triangular(Builder& b, Point s) {
    Point t{0, 0};  // face = upward triangle with corners t, t+(1,0), t+(0,1)
    while (t.x != s.x) {
        if (s.x < t.x) {
            b.master({t.x, t.y + 1}, {t.x, t.y}, "west step");
            b.master({t.x - 1, t.y + 1}, {t.x, t.y}, "west step");
            b.sweep(in_column(b.v2, t.x, t.y) - in_column(b.u2, t.x, t.y),
                    b.u2, b.v2, "column left behind moving west");
            --t.x;
        } else {
            b.master({t.x + 1, t.y}, {t.x, t.y + 1}, "east step");
            b.master({t.x + 1, t.y}, {t.x + 1, t.y + 1}, "east step");
            b.sweep(in_column(b.u2, t.x + 1, t.y) - in_column(b.v2, t.x + 1, t.y),
                    b.u2, b.v2, "column swallowed moving east");
            ++t.x;
        }
    }
    while (t.y != s.y) {
        if (s.y > t.y) {
            b.master({t.x + 1, t.y}, {t.x, t.y + 1}, "north step");
            b.master({t.x + 1, t.y + 1}, {t.x, t.y + 1}, "north step");
            ++t.y;
        } else {
            b.master({t.x, t.y}, {t.x + 1, t.y}, "south step");
            b.master({t.x, t.y}, {t.x + 1, t.y - 1}, "south step");
            --t.y;
        }
    }
}

// Hexagon columns: relative to a base hexagon center c, the sites swept by
// an east-south-east face step are {2 dx - dy in {1, 2}, dy <= -1}.
bool in_hex_column(Point w, Point base) {
    int dx = w.x - base.x, dy = w.y - base.y;
    int d = 2 * dx - dy;
    return (d == 1 || d == 2) && dy <= -1;
}

void walk_hexagonal(Builder& b, Point s) {
    if ((s.x + s.y) % 3 != 0)
        throw Error("internal: hexagonal face displacement off the center sublattice");
    int alpha = (2 * s.x - s.y) / 3;  // east-south-east face steps
    int beta = (s.x + s.y) / 3;       // north face steps
    Point c{1, 1};                    // face = hexagon centered at c
    for (int i = 0; i < std::abs(alpha); ++i) {
        if (alpha > 0) {
            b.master(c + Point{0, -1}, c + Point{1, 0}, "east-south-east step");
            b.sweep(in_hex_column(b.u2, c) - in_hex_column(b.v2, c),
                    b.u2, b.v2, "column swallowed moving east-south-east");
            c = c + Point{1, -1};
        } else {
            b.master(c + Point{0, 1}, c + Point{-1, 0}, "west-north-west step");
            Point base = c + Point{-1, 1};
            b.sweep(in_hex_column(b.v2, base) - in_hex_column(b.u2, base),
                    b.u2, b.v2, "column left behind moving west-north-west");
            c = c + Point{-1, 1};
        }
    }
    for (int i = 0; i < std::abs(beta); ++i) {
        if (beta > 0) {
            b.master(c + Point{1, 1}, c + Point{0, 1}, "north step");
            c = c + Point{1, 2};
        } else {
            b.master(c + Point{-1, -1}, c + Point{0, -1}, "south step");
            c = c + Point{-1, -2};
        }
    }
}

int derivative_window(LatticeKind lat, Point u, Point v) {
    int w = 2 * (lattice_norm(lat, u) + lattice_norm(lat, v)) + 16;
    return w < 64 ? 64 : w;
}

}  // namespace

ExactValue gbar_prime(LatticeKind lat, Point u, Point v,
                      std::vector<ZipperEvent>* log) {
    if (lat == LatticeKind::hexagonal) {
        if (!is_site(lat, u) || !is_site(lat, v))
            throw Error("gbar_prime endpoint is not a lattice site");
    }
    if (u == v) return ExactValue();

    if (lat == LatticeKind::hexagonal && hex_class(u) == hex_class(v)) {
        // The half-turn frame only closes the series when u and v sit on
        // opposite site classes.  Same-class entries follow from the
        // harmonic average of the kernel at v: for v != u,
        //   3 gbar_prime(u,v) = sum_{w ~ v} (gbar_prime(u,w)
        //                                    - tau(w,v) gbar(u,w)),
        // the tau term being the derivative of the marked conductances.
        int window = derivative_window(lat, u, v) + 2;
        ExactValue total;
        for (Point w : lattice_neighbors(lat, v)) {
            int tau = zipper_transport(lat, w, v);
            ExactValue part = gbar_prime(lat, u, w);
            if (tau != 0) part -= gbar(lat, u, w, window) * ExactValue(tau);
            total += part;
            if (log)
                log->push_back({ZipperEvent::Kind::neighbor_average, w, v,
                                part * ExactValue(Rational(2, 3)),
                                "harmonic average over the neighbors of v"});
        }
        return total * ExactValue(Rational(1, 3));
    }

    Builder b;
    b.lat = lat;
    b.u = u;
    b.v = v;
    b.u2 = rotate_about_start_face(lat, u);
    b.v2 = rotate_about_start_face(lat, v);
    b.window = derivative_window(lat, u, v);
    b.guv = gbar(lat, u, v, b.window);
    b.log = log;

    b.emit(ZipperEvent::Kind::rotate, b.u2, b.v2, ExactValue(),
           "half-turn frame of (u, v)");

    Point s = b.u2 - v;
    switch (lat) {
        case LatticeKind::square: walk_square(b, s); break;
        case LatticeKind::triangular: walk_triangular(b, s); break;
        case LatticeKind::hexagonal: walk_hexagonal(b, s); break;
    }

    if (lat == LatticeKind::triangular) {
        // The rotation center is the midpoint of the topmost marked edge
        // ((0,0) -> (1,0)), so the half-line and its mirror image share that
        // edge; give the double-counted master term back once, in the
        // original (not rotated) frame.
        Point a0{0, 0}, b0{1, 0};
        ExactValue m = -(b.g(u, a0) * b.g(b0, v) - b.g(u, b0) * b.g(a0, v));
        b.emit(ZipperEvent::Kind::step_edge, a0, b0, m,
               "shared topmost edge of the half-line and its mirror");
    }

    int flip = (west_of_start_line(lat, b.u2) ? 1 : 0) -
               (west_of_start_line(lat, b.v2) ? 1 : 0);
    b.emit(ZipperEvent::Kind::line_flip, b.u2, b.v2, b.guv * ExactValue(flip),
           "west-side indicator mismatch of the rotated pair");

    return b.total * ExactValue(Rational(1, 2));
}

double gbar_prime_numeric(LatticeKind lat, Point u, Point v, int radius) {
    double total = 0.0;
    for (int k = 0; k <= radius; ++k) {
        Point a, bb;
        switch (lat) {
            case LatticeKind::square:
                a = {0, -k};
                bb = {1, -k};
                break;
            case LatticeKind::triangular:
                a = {0, -k};
                bb = {1, -k};
                break;
            case LatticeKind::hexagonal:
                a = {-k, -2 * k};
                bb = {1 - k, -2 * k};
                break;
            default: throw Error("unknown lattice");
        }
        total += -(gbar_numeric(lat, u, a) * gbar_numeric(lat, bb, v) -
                   gbar_numeric(lat, u, bb) * gbar_numeric(lat, a, v));
        if (lat == LatticeKind::triangular) {
            Point c{1, -k - 1};
            total += -(gbar_numeric(lat, u, a) * gbar_numeric(lat, c, v) -
                       gbar_numeric(lat, u, c) * gbar_numeric(lat, a, v));
        }
    }
    return total;
}

}  // namespace groves
