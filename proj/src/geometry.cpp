#include "ncm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncm/rng.hpp"

namespace ncm::geometry {

namespace {

bool in_circle(const Circle& c, cplx p) {
    return std::abs(p - c.center) <= c.radius + 1e-12 + 4e-16 * c.radius;
}

Circle circle_two(cplx a, cplx b) { return {0.5 * (a + b), 0.5 * std::abs(a - b)}; }

Circle circle_three(cplx a, cplx b, cplx c) {
    const double ax = a.real(), ay = a.imag();
    const double bx = b.real(), by = b.imag();
    const double cx = c.real(), cy = c.imag();
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double scale = std::max({std::abs(a - b), std::abs(b - c), std::abs(a - c)});
    if (std::abs(d) <= 1e-14 * scale * scale) {
        // collinear: the widest pair covers all three
        Circle best = circle_two(a, b);
        for (const Circle& cand : {circle_two(a, c), circle_two(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const cplx center{(a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d,
                      (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d};
    const double r = std::max({std::abs(a - center), std::abs(b - center), std::abs(c - center)});
    return {center, r};
}

}  // namespace

Circle smallest_enclosing_circle(const std::vector<cplx>& points, uint64_t seed) {
    if (points.empty()) throw std::invalid_argument("point set must be nonempty");
    std::vector<cplx> p = points;
    rng::Xoshiro256 gen(seed);
    for (size_t i = p.size() - 1; i > 0; --i)
        std::swap(p[i], p[gen.below(i + 1)]);

    Circle c{p[0], 0.0};
    for (size_t i = 1; i < p.size(); ++i) {
        if (in_circle(c, p[i])) continue;
        c = {p[i], 0.0};
        for (size_t j = 0; j < i; ++j) {
            if (in_circle(c, p[j])) continue;
            c = circle_two(p[i], p[j]);
            for (size_t k = 0; k < j; ++k) {
                if (in_circle(c, p[k])) continue;
                c = circle_three(p[i], p[j], p[k]);
            }
        }
    }
    return c;
}

SpreadResult spread(const ComplexMatrix& a, const ToleranceConfig& tol) {
    const std::vector<cplx> ev = linalg::eig_general(a, tol);
    SpreadResult r{0.0, ev.front(), ev.front()};
    for (size_t i = 0; i < ev.size(); ++i)
        for (size_t j = i + 1; j < ev.size(); ++j) {
            const double d = std::abs(ev[i] - ev[j]);
            if (d > r.value) r = {d, ev[i], ev[j]};
        }
    return r;
}

namespace {

struct Objective {
    const ComplexMatrix& a;
    long evals = 0;

    double operator()(cplx lambda) {
        ++evals;
        return linalg::operator_norm(a.shifted(lambda));
    }
};

struct NmPoint {
    cplx x;
    double f;
};

// standard Nelder-Mead on the complex plane seen as R^2
NmPoint nelder_mead(Objective& f, cplx start, double scale, int max_iters, double value_tol) {
    const cplx offs[3] = {cplx{0, 0}, cplx{scale, 0}, cplx{0, scale}};
    NmPoint s[3];
    for (int i = 0; i < 3; ++i) {
        s[i].x = start + offs[i];
        s[i].f = f(s[i].x);
    }
    auto order = [&] { std::sort(s, s + 3, [](const NmPoint& u, const NmPoint& v) { return u.f < v.f; }); };
    order();
    for (int it = 0; it < max_iters; ++it) {
        if (s[2].f - s[0].f <= value_tol * (1.0 + std::abs(s[0].f)) &&
            std::abs(s[2].x - s[0].x) <= 1e-12 * (1.0 + std::abs(s[0].x)))
            break;
        const cplx centroid = 0.5 * (s[0].x + s[1].x);
        const cplx refl = centroid + (centroid - s[2].x);
        const double fr = f(refl);
        if (fr < s[0].f) {
            const cplx exp_ = centroid + 2.0 * (centroid - s[2].x);
            const double fe = f(exp_);
            s[2] = fe < fr ? NmPoint{exp_, fe} : NmPoint{refl, fr};
        } else if (fr < s[1].f) {
            s[2] = {refl, fr};
        } else {
            const cplx con = centroid + 0.5 * (s[2].x - centroid);
            const double fc = f(con);
            if (fc < s[2].f) {
                s[2] = {con, fc};
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
                    s[i].f = f(s[i].x);
                }
            }
        }
        order();
    }
    return s[0];
}

}  // namespace

ChebyshevResult chebyshev_radius(const ComplexMatrix& a, const ChebyshevOptions& opts,
                                 const ToleranceConfig& tol) {
    const int n = a.dim();
    Objective f{a};

    const std::vector<cplx> ev = linalg::eig_general(a, tol);
    const Circle ec = smallest_enclosing_circle(ev);
    std::vector<cplx> seeds{ec.center, a.trace() / static_cast<double>(n), cplx{0.0, 0.0}};
    seeds.erase(std::unique(seeds.begin(), seeds.end(),
                            [](cplx u, cplx v) { return std::abs(u - v) <= 1e-12; }),
                seeds.end());

    const double scale = std::max({ec.radius, 0.1});
    NmPoint best{seeds[0], f(seeds[0])};
    for (const cplx s : seeds) {
        const NmPoint r = nelder_mead(f, s, 0.5 * scale, opts.nelder_mead_iters, opts.value_tol);
        if (r.f < best.f) best = r;
    }

    // compass polish: eight fixed directions, halving steps
    const cplx dirs[8] = {{1, 0},  {0.7071067811865476, 0.7071067811865476},
                          {0, 1},  {-0.7071067811865476, 0.7071067811865476},
                          {-1, 0}, {-0.7071067811865476, -0.7071067811865476},
                          {0, -1}, {0.7071067811865476, -0.7071067811865476}};
    double step = std::max(1e-3 * scale, 1e-6);
    const double floor_step = opts.final_step * (1.0 + std::abs(best.x));
    while (step > floor_step) {
        bool moved = false;
        for (const cplx d : dirs) {
            const cplx cand = best.x + step * d;
            const double fc = f(cand);
            if (fc < best.f) {
                best = {cand, fc};
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    return {best.x, best.f, f.evals};
}

JungResult jung_check(const std::vector<cplx>& points) {
    if (points.size() < 2) throw std::invalid_argument("jung check needs at least 2 points");
    const Circle c = smallest_enclosing_circle(points);
    double diam = 0.0;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            diam = std::max(diam, std::abs(points[i] - points[j]));
    const double rhs = diam / std::sqrt(3.0);
    return {c.radius, diam, c.radius <= rhs + 1e-10};
}

}  // namespace ncm::geometry
