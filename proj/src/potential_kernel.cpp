#include "groves/potential_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "groves/errors.hpp"

namespace groves {

namespace {

// ---------------------------------------------------------------------------
// Exact tables.  Each lattice's kernel is computed on a fundamental sector of
// its point group and every query is canonicalized into that sector first.
// ---------------------------------------------------------------------------

// Square: sector 0 <= y <= x.  Seeds: a(1,0) = 1/4 and the diagonal
// a(d,d) = a(d-1,d-1) + (1/pi)/(2d-1); harmonicity then fills column by
// column (the relation at (x,y) determines a(x+1,y), with the mirror
// identities closing the axis and near-diagonal cases).
struct SquareTable {
    std::mutex mu;
    std::vector<std::vector<ExactValue>> col;  // col[x][y], 0 <= y <= x

    void extend(int X) {
        if (static_cast<int>(col.size()) > X) return;
        if (col.empty()) {
            col.push_back({ExactValue(0)});
            col.push_back({ExactValue(Rational(1, 4)),
                           ExactValue::term(Generator::inv_pi, 1, Rational(1))});
        }
        for (int x = static_cast<int>(col.size()); x <= X; ++x) {
            std::vector<ExactValue> c(x + 1);
            c[x] = col[x - 1][x - 1] +
                   ExactValue::term(Generator::inv_pi, 1, Rational(1, 2 * x - 1));
            c[x - 1] = ExactValue(2) * col[x - 1][x - 1] - col[x - 1][x - 2];
            for (int y = x - 2; y >= 1; --y)
                c[y] = ExactValue(4) * col[x - 1][y] - col[x - 2][y] - col[x - 1][y + 1] -
                       col[x - 1][y - 1];
            c[0] = ExactValue(4) * col[x - 1][0] - col[x - 2][0] -
                   ExactValue(2) * col[x - 1][1];
            col.push_back(std::move(c));
        }
    }

    ExactValue at(Point p, int window) {
        int x = std::abs(p.x), y = std::abs(p.y);
        if (x < y) std::swap(x, y);
        if (x > window) throw WindowExceeded("potential kernel request at max-norm " +
                                             std::to_string(x) + " exceeds window " +
                                             std::to_string(window));
        std::lock_guard<std::mutex> lock(mu);
        extend(x);
        return col[x][y];
    }
};

// Triangular: sector 0 <= y <= x.  The axis row a(d,0) comes from a
// holonomic recurrence: with B_d the walk-normalized axis value (B = 6a),
//   B_{d+1} - 2 B_d + B_{d-1} = (6/pi) C_d,   B_0 = 0, B_1 = 1,
// where C_d = integral_0^pi cos(dt) sqrt((1-cos t)/(7-cos t)) dt are the
// Fourier cosine coefficients of an algebraic function.  That function
// satisfies the first-order differential equation (7 - 8x + x^2) V' = -3 V,
// which after integrating cos(dt)- and sin(dt)-moments by parts yields
//   (d+2) C_{d+2} = (16d+22) C_{d+1} - 30d C_d + (16d-22) C_{d-1}
//                   - (d-2) C_{d-2},          with C_{-1} = C_1,
// over exact pairs C_d = c0*pi + c1*sqrt(3):
//   C_0 = pi/3,  C_1 = pi - 2 sqrt(3),  C_2 = 11 pi - 20 sqrt(3).
// Rows y >= 1 then fill left to right by harmonicity: the relation at (x,y)
// determines a(x, y+1) from rows y and y-1, the first entry of each row
// coming from the mirror a(y, y+1) = a(y+1, y).  The unused harmonicity
// relation along the diagonal stays available as an independent check.
struct TriTable {
    std::mutex mu;
    std::vector<std::vector<ExactValue>> row;  // row[y][x - y], extent 2K+3-y
    int K = -1;                                // rows 0 .. K+1 built

    static std::vector<ExactValue> axis_values(int N) {
        // C_d as (c0, c1); B in ExactValue form directly (library a = B/6).
        std::vector<std::pair<Rational, Rational>> C = {
            {Rational(1, 3), Rational(0)}, {Rational(1), Rational(-2)},
            {Rational(11), Rational(-20)}};
        for (int d = 1; static_cast<int>(C.size()) <= N; ++d) {
            const auto& cm2 = (d >= 2) ? C[d - 2] : C[1];
            Rational c0 = (Rational(16 * d + 22) * C[d + 1].first -
                           Rational(30 * d) * C[d].first +
                           Rational(16 * d - 22) * C[d - 1].first -
                           Rational(d - 2) * cm2.first) /
                          Rational(d + 2);
            Rational c1 = (Rational(16 * d + 22) * C[d + 1].second -
                           Rational(30 * d) * C[d].second +
                           Rational(16 * d - 22) * C[d - 1].second -
                           Rational(d - 2) * cm2.second) /
                          Rational(d + 2);
            C.push_back({c0, c1});
        }
        std::vector<ExactValue> B(N + 1);
        B[0] = ExactValue(0);
        if (N >= 1) B[1] = ExactValue(1);
        for (int d = 1; d < N; ++d)
            B[d + 1] = ExactValue(2) * B[d] - B[d - 1] + ExactValue(Rational(6) * C[d].first) +
                       ExactValue::term(Generator::sqrt3_inv_pi, 1, Rational(6) * C[d].second);
        for (auto& b : B) b = b * ExactValue(Rational(1, 6));
        return B;
    }

    void build(int Knew) {
        if (Knew <= K) return;
        K = Knew;
        int axis_extent = 2 * K + 3;
        row.assign(K + 2, {});
        row[0] = axis_values(axis_extent);
        // Row 1 from the axis relation 6a(x,0) = a(x+1,0) + a(x-1,0)
        //                                       + 2a(x,1) + 2a(x-1,1).
        row[1].resize(axis_extent - 1 + 1);  // x = 1 .. 2K+2, index x-1
        ExactValue prev = row[0][1];         // a(0,1) = a(1,0) by symmetry
        for (int x = 1; x <= axis_extent - 1; ++x) {
            ExactValue v = (ExactValue(6) * row[0][x] - row[0][x + 1] - row[0][x - 1] -
                            ExactValue(2) * prev) *
                           ExactValue(Rational(1, 2));
            row[1][x - 1] = v;
            prev = v;
        }
        for (int y = 1; y <= K; ++y) {
            int extent = 2 * K + 3 - (y + 1);  // max x of row y+1
            row[y + 1].resize(extent - (y + 1) + 1);
            ExactValue diag_mirror = row[y][1];  // a(y, y+1) = a(y+1, y)
            for (int x = y + 1; x <= extent; ++x) {
                const ExactValue& left =
                    (x == y + 1) ? diag_mirror : row[y + 1][x - 1 - (y + 1)];
                ExactValue v = ExactValue(6) * row[y][x - y] - row[y][x + 1 - y] -
                               row[y][x - 1 - y] - row[y - 1][x - (y - 1)] -
                               row[y - 1][x + 1 - (y - 1)] - left;
                row[y + 1][x - (y + 1)] = v;
            }
        }
    }

    static Point canonical(Point p) {
        Point q = p;
        for (int k = 0; k < 6; ++k) {
            if (k > 0) q = Point{-q.y, q.x + q.y};  // rotate by 60 degrees
            Point m{q.x + q.y, -q.y};               // mirror across the axis
            if (q.y >= 0 && q.x >= q.y) return q;
            if (m.y >= 0 && m.x >= m.y) return m;
        }
        throw Error("triangular canonicalization failed");  // unreachable
    }

    ExactValue at(Point p, int window) {
        Point c = canonical(p);
        int norm = c.x + c.y;  // = max(|x|,|y|,|x+y|) in the sector
        if (norm > window)
            throw WindowExceeded("potential kernel request at norm " + std::to_string(norm) +
                                 " exceeds window " + std::to_string(window));
        std::lock_guard<std::mutex> lock(mu);
        int need = std::max(1, (window - 1) / 2);
        if (need > K) build(need);
        return row[c.y][c.x - c.y];
    }
};

SquareTable& square_table() {
    static SquareTable t;
    return t;
}
TriTable& tri_table() {
    static TriTable t;
    return t;
}

// Hexagonal sites embed in the triangular grid; a kernel value at offset d
// from a class-0 site is 3*a_tri of the class-0 sublattice point (the
// sublattice is a triangular lattice of its own, and each of its steps costs
// three times the hexagonal resistance), and at a class-1 offset it is the
// harmonic average over that site's three class-0 neighbors.
Point third(Point v) { return {(2 * v.x - v.y) / 3, (2 * v.y - v.x) / 3}; }

ExactValue hex_offset_kernel(Point d, int window) {
    switch (hex_class(d)) {
        case 0: return ExactValue(3) * tri_table().at(third(d), window);
        case 1: {
            ExactValue s;
            for (Point eta : {Point{-1, 0}, Point{0, -1}, Point{1, 1}})
                s += tri_table().at(third(d + eta), window);
            return s;
        }
        default:
            throw Error("(" + std::to_string(d.x) + "," + std::to_string(d.y) +
                        ") is not a hexagonal-lattice offset");
    }
}

// ---------------------------------------------------------------------------
// Numeric oracle.  With p = (p1, p2) arranged so the second coordinate
// carries the decay, the lattice Fourier integral reduces to
//   A(p) = (1/pi) * integral_0^pi [1 - cos(m t) rho(t)^n] / s(t) dt
// (walk normalization A = deg * a), where for the square lattice
//   m = p1, n = |p2|, alpha = (1+u)/2, s = sqrt(u(u+2))/2, rho = (1/2)/(alpha+s)
// and for the triangular lattice
//   m = p1 + p2/2, n = |p2|, alpha = (2+u)/3, s = sqrt(u(6+u))/3,
//   rho = (2/3)cos(t/2) / (alpha + s),
// with u = 2 sin^2(t/2).  rho^n dies like e^{-c n t}, so composite
// Gauss-Legendre with oscillation-limited panels near 0 and geometric ones
// beyond needs only a few hundred nodes at any distance.
constexpr double kGLx[8] = {0.0950125098376374401853193, 0.2816035507792589132304605,
                            0.4580167776572273863424194, 0.6178762444026437484466718,
                            0.7554044083550030338951012, 0.8656312023878317438804679,
                            0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGLw[8] = {0.1894506104550684962853967, 0.1826034150449235888667637,
                            0.1691565193950025381893121, 0.1495959888165767320815017,
                            0.1246289712555338720524763, 0.0951585116824927848099251,
                            0.0622535239386478928628438, 0.0271524594117540948517806};

struct KernelIntegrand {
    double m;
    int n;
    bool tri;

    double operator()(double t) const {
        double sh = std::sin(0.5 * t);
        double u = 2.0 * sh * sh;  // 1 - cos t, cancellation-free
        double alpha, s, delta;    // delta = 1 - rho, kept positive-stable
        if (tri) {
            alpha = (2.0 + u) / 3.0;
            s = std::sqrt(u * (6.0 + u)) / 3.0;
            double q = std::sin(0.25 * t);
            double amb = (4.0 * q * q + u) / 3.0;  // alpha - beta
            delta = (amb + s) / (alpha + s);
        } else {
            alpha = (1.0 + u) / 2.0;
            s = std::sqrt(u * (u + 2.0)) / 2.0;
            delta = (0.5 * u + s) / (alpha + s);
        }
        double smt = std::sin(0.5 * m * t);
        double res = 2.0 * smt * smt;  // 1 - cos(mt)
        if (n > 0) {
            double ln = static_cast<double>(n) * std::log1p(-delta);
            res += std::cos(m * t) * (-std::expm1(ln));  // + cos(mt)(1 - rho^n)
        }
        return res / s;
    }
};

double integrate(const KernelIntegrand& f) {
    const double pi = 3.14159265358979323846;
    double am = std::abs(f.m);
    double osc_cap = 2.0 / std::max(1.0, am);
    double tstar = (f.n > 0) ? std::min(pi, 90.0 / f.n) : pi;
    double w0 = std::min({0.5 * osc_cap, 1.0 / (am + f.n + 2.0), 0.05});
    double total = 0.0, t = 0.0;
    while (t < pi) {
        double w = std::max(w0, t);
        if (t < tstar) w = std::min(w, osc_cap);
        w = std::min(w, pi - t);
        double c = t + 0.5 * w, h = 0.5 * w, acc = 0.0;
        for (int i = 0; i < 8; ++i)
            acc += kGLw[i] * (f(c - h * kGLx[i]) + f(c + h * kGLx[i]));
        total += acc * h;
        t += w;
    }
    return total / pi;
}

double square_numeric(Point p) {
    int x = std::abs(p.x), y = std::abs(p.y);
    if (x > y) std::swap(x, y);  // decay on the larger coordinate
    if (y == 0) return 0.0;
    KernelIntegrand f{static_cast<double>(x), y, false};
    return integrate(f) / 4.0;
}

double tri_numeric(Point p) {
    if (p.x == 0 && p.y == 0) return 0.0;
    Point best = p;
    for (int k = 1; k < 6; ++k) {  // rotate to put the weight on |p2|
        p = Point{-p.y, p.x + p.y};
        if (std::abs(p.y) > std::abs(best.y)) best = p;
    }
    KernelIntegrand f{best.x + 0.5 * best.y, std::abs(best.y), true};
    return integrate(f) / 6.0;
}

double hex_numeric(Point d) {
    switch (hex_class(d)) {
        case 0: return 3.0 * tri_numeric(third(d));
        case 1: {
            double s = 0.0;
            for (Point eta : {Point{-1, 0}, Point{0, -1}, Point{1, 1}})
                s += tri_numeric(third(d + eta));
            return s;
        }
        default:
            throw Error("(" + std::to_string(d.x) + "," + std::to_string(d.y) +
                        ") is not a hexagonal-lattice offset");
    }
}

void require_site(LatticeKind lat, Point p, const char* role) {
    if (!is_site(lat, p))
        throw Error(std::string(role) + " (" + std::to_string(p.x) + "," +
                    std::to_string(p.y) + ") is not a lattice site");
}

}  // namespace

int lattice_norm(LatticeKind lat, Point p) {
    int ax = std::abs(p.x), ay = std::abs(p.y);
    if (lat == LatticeKind::square) return std::max(ax, ay);
    return std::max({ax, ay, std::abs(p.x + p.y)});
}

ExactValue potential_kernel(LatticeKind lat, Point p, int window) {
    switch (lat) {
        case LatticeKind::square: return square_table().at(p, window);
        case LatticeKind::triangular: return tri_table().at(p, window);
        case LatticeKind::hexagonal:
            if (lattice_norm(lat, p) > window)
                throw WindowExceeded("potential kernel request at norm " +
                                     std::to_string(lattice_norm(lat, p)) +
                                     " exceeds window " + std::to_string(window));
            return hex_offset_kernel(p, window);
    }
    throw Error("unknown lattice");
}

ExactValue gbar(LatticeKind lat, Point u, Point v, int window) {
    if (lat == LatticeKind::hexagonal) {
        require_site(lat, u, "endpoint");
        require_site(lat, v, "endpoint");
        // The half-turn swapping the classes negates offsets, so a kernel
        // value seen from a class-1 site is the class-0 value of the
        // negated offset.
        Point d = (hex_class(u) == 0) ? v - u : u - v;
        if (lattice_norm(lat, d) > window)
            throw WindowExceeded("kernel offset norm " +
                                 std::to_string(lattice_norm(lat, d)) + " exceeds window " +
                                 std::to_string(window));
        return -hex_offset_kernel(d, window);
    }
    return -potential_kernel(lat, v - u, window);
}

double potential_kernel_numeric(LatticeKind lat, Point p) {
    switch (lat) {
        case LatticeKind::square: return square_numeric(p);
        case LatticeKind::triangular: return tri_numeric(p);
        case LatticeKind::hexagonal: return hex_numeric(p);
    }
    throw Error("unknown lattice");
}

double gbar_numeric(LatticeKind lat, Point u, Point v) {
    if (lat == LatticeKind::hexagonal) {
        require_site(lat, u, "endpoint");
        require_site(lat, v, "endpoint");
        return -hex_numeric(hex_class(u) == 0 ? v - u : u - v);
    }
    return -potential_kernel_numeric(lat, v - u);
}

}  // namespace groves
