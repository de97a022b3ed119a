#include "sheafcx/newton.hpp"

#include "sheafcx/errors.hpp"
#include "sheafcx/homology.hpp"
#include "sheafcx/kernels.hpp"
#include "sheafcx/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sheafcx {
namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t dot(const Vec& v, const Monomial& m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * m[i];
    return s;
}

// Normal to the hyperplane spanned by n-1 vectors in Z^n, via signed
// maximal minors.
Vec cofactor_normal(const std::vector<Vec>& spanning, std::size_t n) {
    Vec normal(n, 0);
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t drop = 0; drop < n; ++drop) {
        for (std::size_t r = 0; r < n - 1; ++r) {
            std::size_t c2 = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != drop) minor(r, c2++) = spanning[r][c];
        }
        const std::int64_t det = n == 1 ? 1 : determinant(minor);
        normal[drop] = (drop % 2 == 0) ? det : -det;
    }
    return normal;
}

bool make_nonnegative_primitive(Vec& v) {
    bool pos = false, neg = false;
    for (auto x : v) {
        pos |= x > 0;
        neg |= x < 0;
    }
    if (pos == neg) return false;  // zero vector, or mixed signs
    std::int64_t g = 0;
    for (auto& x : v) {
        if (neg) x = -x;
        g = std::gcd(g, x);
    }
    for (auto& x : v) x /= g;
    return true;
}

std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t n) {
    if (vectors.empty()) return 0;
    IntMatrix m(vectors.size(), n);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = vectors[r][c];
    return rank_over_rationals(m);
}

std::int64_t min_over_generators(const MonomialIdeal& ideal, const Vec& v) {
    std::vector<std::int32_t> w(ideal.ring().stride(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = static_cast<std::int32_t>(v[i]);
    return kernels::active().min_weighted(ideal.packed().data(), ideal.num_generators(),
                                          ideal.ring().stride(), w.data());
}

// All facets of NP(I), including the coordinate facets x_j >= 0 of offset 0.
std::vector<Facet> all_facets(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.ring().num_variables();
    const auto& pts = ideal.generators();
    std::set<Vec> tried;
    std::vector<Facet> facets;

    auto consider = [&](Vec normal) {
        if (!make_nonnegative_primitive(normal)) return;
        if (!tried.insert(normal).second) return;
        const std::int64_t r = min_over_generators(ideal, normal);
        std::vector<Vec> span;
        const Monomial* base = nullptr;
        for (const auto& p : pts) {
            if (dot(normal, p) != r) continue;
            if (!base) {
                base = &p;
                continue;
            }
            Vec d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = p[i] - (*base)[i];
            span.push_back(std::move(d));
        }
        for (std::size_t j = 0; j < n; ++j)
            if (normal[j] == 0) {
                Vec e(n, 0);
                e[j] = 1;
                span.push_back(std::move(e));
            }
        if (span_rank(span, n) == n - 1) facets.push_back({std::move(normal), r});
    };

    if (n == 1) {
        consider(Vec{1});
        return facets;
    }

    // A facet is spanned by k >= 1 of its vertices and n - k recession
    // directions e_j lying in it.
    std::vector<std::size_t> pointIdx, dirIdx;
    auto choose_dirs = [&](auto&& self, std::size_t from, std::size_t need) -> void {
        if (need == 0) {
            std::vector<Vec> span;
            const auto& p0 = pts[pointIdx[0]];
            for (std::size_t t = 1; t < pointIdx.size(); ++t) {
                Vec d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = pts[pointIdx[t]][i] - p0[i];
                span.push_back(std::move(d));
            }
            for (auto j : dirIdx) {
                Vec e(n, 0);
                e[j] = 1;
                span.push_back(std::move(e));
            }
            consider(cofactor_normal(span, n));
            return;
        }
        for (std::size_t j = from; j + need <= n; ++j) {
            dirIdx.push_back(j);
            self(self, j + 1, need - 1);
            dirIdx.pop_back();
        }
    };
    auto choose_points = [&](auto&& self, std::size_t from, std::size_t need) -> void {
        if (need == 0) {
            choose_dirs(choose_dirs, 0, n - pointIdx.size());
            return;
        }
        for (std::size_t i = from; i + need <= pts.size(); ++i) {
            pointIdx.push_back(i);
            self(self, i + 1, need - 1);
            pointIdx.pop_back();
        }
    };
    for (std::size_t k = 1; k <= std::min(n, pts.size()); ++k) choose_points(choose_points, 0, k);
    return facets;
}

}  // namespace

bool NewtonPolyhedron::contains(const Monomial& m) const {
    for (const auto& f : facets)
        if (dot(f.normal, m) < f.offset) return false;
    return true;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("the Newton polyhedron of the zero ideal is empty");
    const std::size_t n = ideal.ring().num_variables();
    NewtonPolyhedron np{ideal, {}, {}};
    const auto facets = all_facets(ideal);
    for (const auto& f : facets)
        if (f.offset > 0) np.facets.push_back(f);
    std::sort(np.facets.begin(), np.facets.end(),
              [](const Facet& a, const Facet& b) { return a.normal > b.normal; });

    for (const auto& p : ideal.generators()) {
        std::vector<Vec> tight;
        for (const auto& f : facets)
            if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
        if (span_rank(tight, n) == n) np.vertices.push_back(p);
    }
    return np;
}

std::vector<ReesValuation> rees_valuations(const MonomialIdeal& ideal) {
    const auto np = newton_polyhedron(ideal);
    const std::size_t n = ideal.ring().num_variables();
    std::vector<ReesValuation> out;
    for (const auto& f : np.facets) {
        ReesValuation v;
        v.normal = f.normal;
        v.coefficient = f.offset;
        for (std::size_t i = 0; i < n; ++i)
            if (f.normal[i] > 0) v.center.push_back(i);
        v.centerDimension = static_cast<int>(n - v.center.size()) - 1;
        out.push_back(std::move(v));
    }
    return out;
}

std::int64_t r_coefficient(const MonomialIdeal& ideal) {
    const auto vals = rees_valuations(ideal);
    if (vals.empty()) throw DomainError("the unit ideal has no Rees valuations");
    std::int64_t r = 0;
    for (const auto& v : vals) r = std::max(r, v.coefficient);
    return r;
}

std::int64_t sheaf_r_coefficient(const MonomialIdeal& ideal) {
    std::int64_t r = 0;
    for (const auto& v : rees_valuations(ideal))
        if (!v.irrelevant()) r = std::max(r, v.coefficient);
    if (r == 0) throw DomainError("the ideal sheaf is the unit ideal; it has no distinguished subvarieties");
    return r;
}

bool closure_contains(const MonomialIdeal& ideal, const Monomial& m) {
    return newton_polyhedron(ideal).contains(m);
}

// Minimal lattice points of NP(I) lie in the box bounded by the vertex
// maxima: a point beyond the box in coordinate j stays in NP after
// subtracting e_j.
MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
    const auto np = newton_polyhedron(ideal);
    const std::size_t n = ideal.ring().num_variables();
    std::vector<std::int32_t> box(n, 0);
    for (const auto& v : np.vertices)
        for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], v[i]);

    std::vector<Monomial> points;
    std::vector<std::int32_t> e(n, 0);
    auto walk = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            Monomial m(e);
            if (np.contains(m)) points.push_back(std::move(m));
            return;
        }
        for (std::int32_t k = 0; k <= box[i]; ++k) {
            e[i] = k;
            self(self, i + 1);
        }
        e[i] = 0;
    };
    walk(walk, 0);
    return MonomialIdeal::from_generators(ideal.ring(), std::move(points));
}

BezoutReport bezout_check(const MonomialIdeal& ideal, const Rational& s) {
    if (s <= 0) throw DomainError("bezout check requires s > 0");
    require_proper_sheaf(ideal, "bezout check of the zero or unit sheaf is undefined");
    const std::size_t n = ideal.ring().projective_dimension();

    auto rpow = [](const Rational& base, std::size_t e) {
        Rational r = 1;
        for (std::size_t k = 0; k < e; ++k) r *= base;
        return r;
    };

    BezoutReport report;
    report.sUsed = s;
    report.lhs = 0;
    for (auto& v : rees_valuations(ideal)) {
        if (v.irrelevant()) {
            report.excluded.push_back(std::move(v));
            continue;
        }
        report.lhs += Rational(v.coefficient) * rpow(s, static_cast<std::size_t>(v.centerDimension));
        report.rCoefficient = std::max(report.rCoefficient, v.coefficient);
    }
    report.rhs = rpow(s, n);
    report.satisfied = report.lhs <= report.rhs;
    report.rBound = rpow(s > 1 ? s : Rational(1), n);
    report.rBoundSatisfied = Rational(report.rCoefficient) <= report.rBound;
    return report;
}

}  // namespace sheafcx
