#include "curvelab/geometry.hpp"

#include "curvelab/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace curvelab::geometry {

namespace {

struct Cx {
    Real re;
    Real im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx conj(const Cx& a) { return {a.re, -a.im}; }
Real norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Cx operator/(const Cx& a, const Cx& b) {
    const Real n = norm2(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

// Element of SU(1,1): z -> (a z + b) / (conj(b) z + conj(a)).
struct Mobius {
    Cx a;
    Cx b;

    Cx apply(const Cx& z) const { return (a * z + b) / (conj(b) * z + conj(a)); }
};

Mobius operator*(const Mobius& m, const Mobius& n) {
    // [[a, b], [b*, a*]] * [[c, d], [d*, c*]]
    return {m.a * n.a + m.b * conj(n.b), m.a * n.b + m.b * conj(n.a)};
}

Mobius rotation(const Real& angle) {
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    const Real half = angle / 2;
    return {{cos(half), sin(half)}, {Real(0), Real(0)}};
}

Real abs_cx(const Cx& z) {
    using boost::multiprecision::sqrt;
    return sqrt(norm2(z));
}

// Orientation-preserving isometry of the Poincare disk taking 0 to p.
Mobius lift_origin(const Cx& p) {
    using boost::multiprecision::sqrt;
    const Real s = 1 / sqrt(1 - norm2(p));
    return {{s, Real(0)}, {p.re * s, p.im * s}};
}

Mobius inverse(const Mobius& m) { return {conj(m.a), {-m.b.re, -m.b.im}}; }

// The isometry sending a to a2 and b to b2 (requires d(a,b) = d(a2,b2)).
Mobius match(const Cx& a, const Cx& b, const Cx& a2, const Cx& b2) {
    using boost::multiprecision::atan2;
    const Mobius from = inverse(lift_origin(a));
    const Mobius to = inverse(lift_origin(a2));
    const Cx db = from.apply(b);
    const Cx db2 = to.apply(b2);
    const Real turn = atan2(db2.im, db2.re) - atan2(db.im, db.re);
    return lift_origin(a2) * rotation(turn) * from;
}

Real distance(const Cx& a, const Cx& b) {
    using boost::multiprecision::atanh;
    return 2 * atanh(abs_cx(inverse(lift_origin(a)).apply(b)));
}

Real angle_at(const Cx& prev, const Cx& here, const Cx& next) {
    using boost::multiprecision::atan2;
    const Mobius m = inverse(lift_origin(here));
    const Cx p = m.apply(prev);
    const Cx q = m.apply(next);
    // interior angle, polygon counter-clockwise
    Real a = atan2(p.im, p.re) - atan2(q.im, q.re);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    while (a < 0) a += two_pi;
    while (a >= two_pi) a -= two_pi;
    return a;
}

// Gluing constraints of the 4g-gon: paired sides of equal length, angle sum 2pi.
std::vector<Real> gluing_residual(const std::vector<Cx>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<Real> r;
    for (int j = 0; j < n; ++j) {
        if (j % 4 >= 2) continue;
        const int k = Surface::paired_side(j);
        r.push_back(distance(v[j], v[(j + 1) % n]) - distance(v[k], v[(k + 1) % n]));
    }
    Real sum = 0;
    for (int j = 0; j < n; ++j) sum += angle_at(v[(j + n - 1) % n], v[j], v[(j + 1) % n]);
    r.push_back(sum - 2 * boost::math::constants::pi<Real>());
    return r;
}

// Solves A x = b for a small dense system (Gaussian elimination, partial pivoting).
std::vector<Real> solve(std::vector<std::vector<Real>> a, std::vector<Real> b) {
    using boost::multiprecision::abs;
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
        }
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Real f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<Real> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Real s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

// Side pairings and polygon of a fixed generic hyperbolic structure: the
// regular 4g-gon with every vertex nudged by a fixed offset, then projected
// back onto the gluing constraints by minimum-norm Newton steps.
struct Model {
    int genus;
    std::vector<Point> vertices;  // Klein coordinates
    std::vector<Mobius> pairing;  // pairing[s] maps the tile across s onto P
    std::vector<Mobius> letter;   // letter[s] maps P onto the tile across s
    std::vector<Cx> poincare;     // solved vertices, Poincare disk

    // `start`, when given, is a solution at another precision to refine.
    Model(int g, const std::vector<Cx>* start) : genus(g) {
        using boost::multiprecision::abs;
        using boost::multiprecision::cos;
        using boost::multiprecision::pow;
        using boost::multiprecision::sin;
        using boost::multiprecision::sqrt;
        using boost::multiprecision::atanh;
        using boost::multiprecision::tanh;
        const int n = 4 * g;
        const Real pi = boost::math::constants::pi<Real>();
        const Real q = pi / n;
        const Real cot = cos(q) / sin(q);
        const Real cosh_r = cot * cot;
        const Real klein_radius = sqrt(cosh_r * cosh_r - 1) / cosh_r;
        const Real poincare_radius = klein_radius / (1 + sqrt(1 - klein_radius * klein_radius));
        // nudge each vertex in hyperbolic radius and in angle, relative to the
        // polygon's own scale so large genus stays convex
        const Real rho = 2 * atanh(poincare_radius);
        std::vector<Cx> v;
        if (start) {
            for (const Cx& p : *start) v.push_back({Real(p.re), Real(p.im)});
        }
        for (int j = 0; j < n && !start; ++j) {
            const Real phase = Real(13 * j + 7 * j * j + 3) / 10;
            const Real angle = (2 * j - 1) * q + q * cos(phase) / 6;
            const Real r = tanh(rho * (1 + sin(phase) / 40) / 2);
            v.push_back({r * cos(angle), r * sin(angle)});
        }
        const Real target = pow(Real(10), -static_cast<int>(Real::default_precision()) + 8);
        const Real step = pow(Real(10), -static_cast<int>(Real::default_precision() / 2));
        for (int iter = 0;; ++iter) {
            const std::vector<Real> f = gluing_residual(v);
            Real size = 0;
            for (const Real& x : f) size = std::max(size, Real(abs(x)));
            if (size < target) break;
            if (iter == 200) throw DegenerateGeometry("polygon model did not converge");
            // Jacobian by central differences over the 2n real coordinates.
            const std::size_t m = f.size();
            std::vector<std::vector<Real>> jac(m, std::vector<Real>(2 * n));
            for (int c = 0; c < 2 * n; ++c) {
                auto plus = v;
                auto minus = v;
                (c % 2 == 0 ? plus[c / 2].re : plus[c / 2].im) += step;
                (c % 2 == 0 ? minus[c / 2].re : minus[c / 2].im) -= step;
                const auto fp = gluing_residual(plus);
                const auto fm = gluing_residual(minus);
                for (std::size_t r = 0; r < m; ++r) jac[r][c] = (fp[r] - fm[r]) / (2 * step);
            }
            std::vector<std::vector<Real>> jjt(m, std::vector<Real>(m));
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t s = 0; s < m; ++s) {
                    Real acc = 0;
                    for (int c = 0; c < 2 * n; ++c) acc += jac[r][c] * jac[s][c];
                    jjt[r][s] = acc;
                }
            }
            const std::vector<Real> y = solve(jjt, f);
            for (int c = 0; c < 2 * n; ++c) {
                Real delta = 0;
                for (std::size_t r = 0; r < m; ++r) delta += jac[r][c] * y[r];
                (c % 2 == 0 ? v[c / 2].re : v[c / 2].im) -= delta;
            }
        }
        poincare = v;
        for (const Cx& p : v) {
            const Real k = 2 / (1 + norm2(p));
            vertices.push_back({p.re * k, p.im * k});
        }
        for (int s = 0; s < n; ++s) {
            const int t = Surface::paired_side(s);
            // side t onto side s, reversing it: v_t -> v_{s+1}, v_{t+1} -> v_s
            letter.push_back(match(v[t], v[(t + 1) % n], v[(s + 1) % n], v[s]));
        }
        pairing.resize(n);
        for (int s = 0; s < n; ++s) pairing[s] = letter[Surface::paired_side(s)];
    }
};

// Solved vertices on a fixed precision ladder 64 * 2^k, each rung refined
// from the one below, so the structure at any precision is independent of
// the order in which precisions are requested.
const std::vector<Cx>& ladder_solution(int genus, unsigned digits) {
    thread_local std::map<int, std::vector<std::vector<Cx>>> rungs;
    auto& levels = rungs[genus];
    std::size_t k = 0;
    while ((64u << k) < digits) ++k;
    while (levels.size() <= k) {
        const unsigned d = 64u << levels.size();
        PrecisionScope scope(d);
        Model m(genus, levels.empty() ? nullptr : &levels.back());
        levels.push_back(m.poincare);
    }
    return levels[k];
}

const Model& model(int genus) {
    thread_local std::map<std::pair<int, unsigned>, std::unique_ptr<Model>> cache;
    const unsigned digits = Real::default_precision();
    const auto key = std::make_pair(genus, digits);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    const std::vector<Cx>& start = ladder_solution(genus, digits);
    PrecisionScope scope(digits);
    auto made = std::make_unique<Model>(genus, &start);
    return *cache.emplace(key, std::move(made)).first->second;
}

Point to_point(const Cx& z) { return {z.re, z.im}; }

Real cross2(const Real& ax, const Real& ay, const Real& bx, const Real& by) { return ax * by - ay * bx; }

struct SideHit {
    Real t;
    int side;
    Real param;
};

// Intersects the Klein chord from u to v with the polygon boundary.
bool chord_in_polygon(const Model& m, const Cx& u, const Cx& v, const Real& eps, SideHit& in, SideHit& out) {
    using boost::multiprecision::abs;
    const int n = 4 * m.genus;
    const Real dx = v.re - u.re;
    const Real dy = v.im - u.im;
    std::vector<SideHit> hits;
    for (int j = 0; j < n; ++j) {
        const Point& a = m.vertices[j];
        const Point& b = m.vertices[(j + 1) % n];
        const Real ex = b.x - a.x;
        const Real ey = b.y - a.y;
        const Real den = cross2(dx, dy, ex, ey);
        if (abs(den) < eps) continue;
        const Real wx = a.x - u.re;
        const Real wy = a.y - u.im;
        const Real t = cross2(wx, wy, ex, ey) / den;
        const Real s = cross2(wx, wy, dx, dy) / den;
        if (s < -eps || s > 1 + eps) continue;
        if (abs(s) <= eps || abs(s - 1) <= eps) {
            throw DegenerateGeometry("geodesic passes through the vertex");
        }
        hits.push_back({t, j, s});
    }
    if (hits.size() != 2) return false;
    if (hits[0].t > hits[1].t) std::swap(hits[0], hits[1]);
    in = hits[0];
    out = hits[1];
    return true;
}

bool inside(const Model& m, const Point& p, int& violated) {
    const int n = 4 * m.genus;
    for (int j = 0; j < n; ++j) {
        if (cross(m.vertices[j], m.vertices[(j + 1) % n], p) < 0) {
            violated = j;
            return false;
        }
    }
    return true;
}

Point apply_interior(const Mobius& h, const Point& k) {
    using boost::multiprecision::sqrt;
    const Real s = 1 + sqrt(1 - k.x * k.x - k.y * k.y);
    const Cx p = h.apply(Cx{k.x / s, k.y / s});
    const Real f = 2 / (1 + norm2(p));
    return {p.re * f, p.im * f};
}

// Side through which the segment from `a` (in the closure of P) towards `b`
// leaves P, with the segment parameter of the crossing.
int exit_side(const Model& m, const Point& a, const Point& b, const Real& eps, Real& t_out) {
    const int n = 4 * m.genus;
    const Real dx = b.x - a.x;
    const Real dy = b.y - a.y;
    int best = -1;
    for (int j = 0; j < n; ++j) {
        const Point& p = m.vertices[j];
        const Point& q = m.vertices[(j + 1) % n];
        const Real ex = q.x - p.x;
        const Real ey = q.y - p.y;
        const Real den = cross2(dx, dy, ex, ey);
        if (den == 0) continue;
        const Real wx = p.x - a.x;
        const Real wy = p.y - a.y;
        const Real t = cross2(wx, wy, ex, ey) / den;
        const Real s = cross2(wx, wy, dx, dy) / den;
        if (t <= eps || s < 0 || s > 1) continue;
        if (best < 0 || t < t_out) {
            best = j;
            t_out = t;
        }
    }
    if (best < 0) throw DegenerateGeometry("segment does not leave the polygon");
    return best;
}

Point lerp(const Cx& u, const Cx& v, const Real& t) {
    return {u.re + t * (v.re - u.re), u.im + t * (v.im - u.im)};
}

Real distance2(const Cx& a, const Cx& b) { return norm2(a - b); }

} // namespace

Real cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Real tolerance() {
    using boost::multiprecision::pow;
    const unsigned d = Real::default_precision();
    return pow(Real(10), -static_cast<int>(std::max(12u, d / 4)));
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned digits_for_word(int genus, std::span<const int> word_in) {
    using boost::multiprecision::abs;
    using boost::multiprecision::log10;
    const std::vector<int> word = reduce_word(word_in);
    if (word.empty()) return 64;
    double size = 0;
    {
        // the trace grows like exp(length / 2); 40 digits are plenty for its size
        PrecisionScope scope(40);
        const Model& m = model(genus);
        Mobius g{{Real(1), Real(0)}, {Real(0), Real(0)}};
        for (int x : word) g = g * m.letter[x];
        size = abs(g.a.re) > 1 ? static_cast<double>(log10(abs(g.a.re))) : 0.0;
    }
    // forward tracing loses about exp(length) = |tr|^2 over one period
    const double raw = 64 + 3 * size;
    return static_cast<unsigned>((static_cast<std::size_t>(raw) + 31) / 32 * 32);
}

Point polygon_vertex(int genus, int j) { return model(genus).vertices[j % (4 * genus)]; }

bool same_geodesic(const Geodesic& a, const Geodesic& b) {
    const auto sa = a.cutting_sequence();
    const auto sb = b.cutting_sequence();
    if (a.genus != b.genus || sa.size() != sb.size()) return false;
    std::vector<int> doubled(sa);
    doubled.insert(doubled.end(), sa.begin(), sa.end());
    if (std::search(doubled.begin(), doubled.end(), sb.begin(), sb.end()) != doubled.end()) return true;
    std::vector<int> rev;
    for (auto it = sb.rbegin(); it != sb.rend(); ++it) rev.push_back(Surface::paired_side(*it));
    return std::search(doubled.begin(), doubled.end(), rev.begin(), rev.end()) != doubled.end();
}

std::vector<int> Geodesic::cutting_sequence() const {
    std::vector<int> seq;
    seq.reserve(chords.size());
    for (const auto& c : chords) seq.push_back(c.exit_side);
    return seq;
}

std::vector<int> reduce_word(std::span<const int> word) {
    std::vector<int> out;
    for (int x : word) {
        if (!out.empty() && out.back() == Surface::paired_side(x)) {
            out.pop_back();
        } else {
            out.push_back(x);
        }
    }
    std::size_t lo = 0;
    std::size_t hi = out.size();
    while (hi - lo >= 2 && out[lo] == Surface::paired_side(out[hi - 1])) {
        ++lo;
        --hi;
    }
    return {out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi)};
}

bool segment_crossing(const Point& p0, const Point& p1, const Point& q0, const Point& q1, const Real& eps,
                      Crossing& out) {
    using boost::multiprecision::abs;
    const Real dx = p1.x - p0.x;
    const Real dy = p1.y - p0.y;
    const Real ex = q1.x - q0.x;
    const Real ey = q1.y - q0.y;
    const Real den = cross2(dx, dy, ex, ey);
    if (abs(den) < eps * eps) return false;
    const Real wx = q0.x - p0.x;
    const Real wy = q0.y - p0.y;
    const Real t = cross2(wx, wy, ex, ey) / den;
    const Real u = cross2(wx, wy, dx, dy) / den;
    const bool t_in = t > eps && t < 1 - eps;
    const bool u_in = u > eps && u < 1 - eps;
    const bool t_near = t >= -eps && t <= 1 + eps;
    const bool u_near = u >= -eps && u <= 1 + eps;
    if (t_in && u_in) {
        out = {t, u, den > 0 ? 1 : -1};
        return true;
    }
    if (t_near && u_near) throw DegenerateGeometry("segments meet near an endpoint");
    return false;
}

Geodesic realize(int genus, std::span<const int> word_in, unsigned digits) {
    using boost::multiprecision::abs;
    using boost::multiprecision::sqrt;
    PrecisionScope scope(digits);
    const Model& m = model(genus);
    const int n = 4 * genus;
    for (int x : word_in) {
        if (x < 0 || x >= n) throw InvalidInput("side letter out of range");
    }
    const std::vector<int> word = reduce_word(word_in);
    if (word.empty()) throw InvalidInput("loop is null-homotopic");

    Mobius g{{Real(1), Real(0)}, {Real(0), Real(0)}};
    for (int x : word) g = g * m.letter[x];
    const Real eps = tolerance();
    const Real re_a = g.a.re;
    if (abs(re_a) <= 1 + eps) throw InvalidInput("loop is null-homotopic");

    // fixed points (i Im a +- sqrt(Re a^2 - 1)) / conj(b)
    const Real root = sqrt(re_a * re_a - 1);
    Cx z1 = Cx{root, g.a.im} / conj(g.b);
    Cx z2 = Cx{-root, g.a.im} / conj(g.b);
    const Real d1 = norm2(conj(g.b) * z1 + conj(g.a));
    Cx to = d1 > 1 ? z1 : z2;
    Cx from = d1 > 1 ? z2 : z1;

    // Walk from a point of P towards the axis, crossing tiles, until the
    // closest point of the axis to the origin lies in P.
    Point start{Real(1) / 1000, Real(1) / 1700};
    for (int iter = 0;; ++iter) {
        if (iter > 100000) throw DegenerateGeometry("axis reduction did not terminate");
        const Point mid{(from.re + to.re) / 2, (from.im + to.im) / 2};
        int side = -1;
        if (inside(m, mid, side)) break;
        Real t = 0;
        side = exit_side(m, start, mid, eps, t);
        const Point at{start.x + t * (mid.x - start.x), start.y + t * (mid.y - start.y)};
        const Mobius& h = m.pairing[side];
        start = apply_interior(h, at);
        from = h.apply(from);
        to = h.apply(to);
    }

    const Real close = eps;
    const Cx from0 = from;
    const Cx to0 = to;
    std::vector<int> sequence;
    std::vector<std::pair<Cx, Cx>> lines;
    const std::size_t cap = 64 * word.size() + 1024;
    // A near return is only the end of the period when the traced word is
    // conjugate to the input; long curves fellow-travel themselves closely.
    Mobius h{{Real(1), Real(0)}, {Real(0), Real(0)}};
    auto traces_match = [&] { return abs(abs(h.a.re) - abs(re_a)) <= eps * (1 + abs(re_a)); };
    for (;;) {
        SideHit in;
        SideHit out;
        if (!chord_in_polygon(m, from, to, eps, in, out)) {
            throw DegenerateGeometry("traced geodesic left the polygon");
        }
        sequence.push_back(out.side);
        lines.emplace_back(from, to);
        h = h * m.letter[out.side];
        from = m.pairing[out.side].apply(from);
        to = m.pairing[out.side].apply(to);
        if (distance2(from, from0) < close && distance2(to, to0) < close && traces_match()) break;
        if (sequence.size() > cap) throw DegenerateGeometry("geodesic did not close up");
    }
    const std::size_t len = sequence.size();

    // Refine: ideal endpoints are attracting under the cyclic recursion
    // to_k = letter[s_k](to_{k+1}), from_{k+1} = pairing[s_k](from_k).
    std::vector<Cx> tos(len);
    std::vector<Cx> froms(len);
    for (std::size_t k = 0; k < len; ++k) {
        froms[k] = lines[k].first;
        tos[k] = lines[k].second;
    }
    for (int pass = 0; pass < 2; ++pass) {
        Cx cur = tos[0];
        for (std::size_t step = 0; step < len; ++step) {
            const std::size_t k = (len - 1 - step);
            cur = m.letter[sequence[k]].apply(cur);
            tos[k] = cur;
        }
        cur = froms[0];
        for (std::size_t k = 0; k < len; ++k) {
            cur = m.pairing[sequence[k]].apply(cur);
            froms[(k + 1) % len] = cur;
        }
    }

    Geodesic geo;
    geo.genus = genus;
    geo.digits = digits;
    geo.chords.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        SideHit in;
        SideHit out;
        if (!chord_in_polygon(m, froms[k], tos[k], eps, in, out) || out.side != sequence[k] ||
            in.side != Surface::paired_side(sequence[(k + len - 1) % len])) {
            throw DegenerateGeometry("refined chords disagree with the cutting sequence");
        }
        Chord c;
        c.entry_side = in.side;
        c.exit_side = out.side;
        c.from = to_point(froms[k]);
        c.to = to_point(tos[k]);
        c.entry = lerp(froms[k], tos[k], in.t);
        c.exit = lerp(froms[k], tos[k], out.t);
        c.entry_param = in.param;
        c.exit_param = out.param;
        geo.chords.push_back(std::move(c));
    }
    return geo;
}

Geodesic realize_adaptive(int genus, std::span<const int> word) {
    unsigned digits = digits_for_word(genus, word);
    for (int attempt = 0;; ++attempt) {
        try {
            return realize(genus, word, digits);
        } catch (const DegenerateGeometry&) {
            if (attempt >= 4) throw;
            digits *= 2;
        }
    }
}

NormalCurve normal_coordinates(const Surface& surface, const Geodesic& g) {
    PrecisionScope scope(g.digits);
    const Real eps = tolerance();
    NormalCurve c{std::vector<Weight>(surface.num_edges(), 0)};
    const int n = surface.num_polygon_sides();
    const Point v0 = polygon_vertex(g.genus, 0);
    for (const Chord& ch : g.chords) {
        ++c.weights[surface.edge_of_polygon_side(ch.exit_side)];
        for (int k = 2; k <= n - 2; ++k) {
            Crossing x;
            if (segment_crossing(ch.entry, ch.exit, v0, polygon_vertex(g.genus, k), eps, x)) {
                ++c.weights[surface.edge_of_diagonal(k)];
            }
        }
    }
    return c;
}

} // namespace curvelab::geometry
