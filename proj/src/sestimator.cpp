#include "sheafcx/sestimator.hpp"

#include "sheafcx/errors.hpp"
#include "sheafcx/newton.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <numeric>
#include <set>
#include <thread>

namespace sheafcx {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

PowerEntry compute_entry(const MonomialIdeal& ideal, int p, const HomologyOptions& homology) {
    try {
        const MonomialIdeal jp = power(ideal, p);
        PowerEntry e;
        e.dp = generation_degree(jp);
        e.regp = regularity(jp, homology).moduleRegularity;
        e.computedAt = utc_timestamp();
        return e;
    } catch (const ResourceError& err) {
        throw ResourceError("p = " + std::to_string(p) + ": " + err.what());
    }
}

}  // namespace

bool PowerSequence::subadditive() const {
    for (const auto& [l, el] : entries)
        for (const auto& [m, em] : entries) {
            if (m < l) continue;
            auto it = entries.find(l + m);
            if (it != entries.end() && it->second.dp > el.dp + em.dp) return false;
        }
    return true;
}

PowerSequence d_sequence(const MonomialIdeal& ideal, int pmax, const SequenceOptions& options,
                         const PowerSequence* prior) {
    if (pmax < 1) throw DomainError("pmax must be at least 1");
    require_proper_sheaf(ideal, "power sequence of the zero or unit sheaf is undefined");
    if (prior && !(prior->ideal == ideal))
        throw IntegrityError("stored power sequence belongs to a different ideal");

    PowerSequence seq{ideal, {}};
    std::vector<int> missing;
    for (int p = 1; p <= pmax; ++p) {
        if (prior) {
            auto it = prior->entries.find(p);
            if (it != prior->entries.end()) {
                seq.entries[p] = it->second;
                continue;
            }
        }
        missing.push_back(p);
    }

    std::vector<PowerEntry> results(missing.size());
    std::vector<std::exception_ptr> failures(missing.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < missing.size();) {
            try {
                results[k] = compute_entry(ideal, missing[k], options.homology);
            } catch (...) {
                failures[k] = std::current_exception();
            }
        }
    };
    const unsigned threads =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(missing.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    for (std::size_t k = 0; k < missing.size(); ++k) seq.entries[missing[k]] = results[k];

    for (const auto& [p, e] : seq.entries)
        if (e.dp > e.regp)
            throw InternalError("d_" + std::to_string(p) + " = " + std::to_string(e.dp) +
                                " exceeds reg_" + std::to_string(p) + " = " +
                                std::to_string(e.regp));
    if (!seq.subadditive()) throw InternalError("generation degrees are not subadditive");
    return seq;
}

// ---------------------------------------------------------------- curves

std::int64_t chart_valuation(const MonomialIdeal& ideal, std::size_t chart,
                             const std::vector<std::int64_t>& weights) {
    const std::size_t n = ideal.ring().num_variables();
    if (weights.size() + 1 != n) throw StructuralError("chart weights have the wrong length");
    std::int64_t best = -1;
    for (const auto& g : ideal.generators()) {
        std::int64_t v = 0;
        for (std::size_t i = 0, k = 0; i < n; ++i) {
            if (i == chart) continue;
            v += weights[k++] * g[i];
        }
        if (best < 0 || v < best) best = v;
    }
    return std::max<std::int64_t>(best, 0);
}

namespace {

bool primitive_nonzero(const std::vector<std::int64_t>& w) {
    std::int64_t g = 0;
    for (auto x : w) {
        if (x < 0) return false;
        g = std::gcd(g, x);
    }
    return g == 1;
}

std::vector<std::vector<std::int64_t>> small_weights(std::size_t len, std::int64_t maxEntry) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> w(len, 0);
    auto walk = [&](auto&& self, std::size_t i) -> void {
        if (i == len) {
            if (primitive_nonzero(w)) out.push_back(w);
            return;
        }
        for (std::int64_t v = 0; v <= maxEntry; ++v) {
            w[i] = v;
            self(self, i + 1);
        }
        w[i] = 0;
    };
    walk(walk, 0);
    return out;
}

}  // namespace

CurveWitness curve_lower_bound(
    const MonomialIdeal& ideal,
    const std::optional<std::vector<std::vector<std::int64_t>>>& candidates) {
    if (ideal.is_zero()) throw DomainError("curve bound of the zero ideal is undefined");
    const std::size_t n = ideal.ring().num_variables();
    if (n < 2) throw DomainError("curve bounds need at least two variables");

    std::vector<std::vector<std::int64_t>> normals;
    if (!candidates)
        for (const auto& v : rees_valuations(ideal)) normals.push_back(v.normal);
    const auto defaults = candidates ? std::vector<std::vector<std::int64_t>>{}
                                     : small_weights(n - 1, 3);

    CurveWitness best;
    bool have = false;
    auto consider = [&](std::size_t chart, std::vector<std::int64_t> w) {
        std::int64_t g = 0;
        for (auto x : w) g = std::gcd(g, x);
        if (g == 0) return;
        for (auto& x : w) x /= g;
        if (!primitive_nonzero(w)) return;
        const std::int64_t v = chart_valuation(ideal, chart, w);
        const std::int64_t deg = *std::max_element(w.begin(), w.end());
        const Rational bound(v, deg);
        if (!have || bound > best.bound ||
            (bound == best.bound && deg < best.degree)) {
            best = {chart, std::move(w), v, deg, bound};
            have = true;
        }
    };

    for (std::size_t chart = 0; chart < n; ++chart) {
        if (candidates) {
            for (const auto& w : *candidates) {
                if (w.size() + 1 != n) throw StructuralError("candidate weight has the wrong length");
                consider(chart, w);
            }
            continue;
        }
        for (const auto& normal : normals) {
            std::vector<std::int64_t> w;
            for (std::size_t i = 0; i < n; ++i)
                if (i != chart) w.push_back(normal[i]);
            consider(chart, std::move(w));
        }
        for (const auto& w : defaults) consider(chart, w);
    }
    if (!have) best.weights.assign(n - 1, 0);
    return best;
}

// ---------------------------------------------------------------- bracket

SBracket s_bracket(const MonomialIdeal& ideal, int pmax, const Rational& tolerance,
                   const SequenceOptions& options, const PowerSequence* prior) {
    if (tolerance <= 0) throw DomainError("tolerance must be positive");
    SBracket b;
    b.sequence = d_sequence(ideal, pmax, options, prior);
    b.lowerWitness = curve_lower_bound(ideal);
    b.lower = b.lowerWitness.bound;
    b.tolerance = tolerance;
    bool first = true;
    for (const auto& [p, e] : b.sequence.entries) {
        if (p > pmax) continue;
        const Rational ratio(e.dp, p);
        if (first || ratio < b.upper) {
            b.upper = ratio;
            b.upperP = p;
            b.upperD = e.dp;
            first = false;
        }
    }
    if (!(b.lower > 0) || b.lower > b.upper)
        throw InternalError("inconsistent bracket [" + to_exact_string(b.lower) + ", " +
                            to_exact_string(b.upper) + "]");
    b.converged = b.upper - b.lower <= tolerance;
    return b;
}

bool brackets_overlap(const SBracket& a, const SBracket& b) {
    return std::max(a.lower, b.lower) <= std::min(a.upper, b.upper);
}

bool PropertyReport::all_hold() const {
    return productBound && sumBound && firstClosureOverlap && secondClosureOverlap;
}

PropertyReport property_checks(const MonomialIdeal& first, const MonomialIdeal& second, int pmax,
                               const SequenceOptions& options) {
    require_same_ring(first, second);
    const Rational tol(1, 1000);
    auto bracket = [&](const MonomialIdeal& i) { return s_bracket(i, pmax, tol, options); };

    PropertyReport r;
    r.first = bracket(first);
    r.second = bracket(second);
    r.product = bracket(product(first, second));
    const MonomialIdeal s = sum(first, second);
    if (!saturate(s).is_unit()) r.sum = bracket(s);
    r.firstClosure = bracket(integral_closure(first));
    r.secondClosure = bracket(integral_closure(second));

    r.productBound = r.product.lower <= r.first.upper + r.second.upper;
    r.sumBound = !r.sum || r.sum->lower <= std::max(r.first.upper, r.second.upper);
    r.firstClosureOverlap = brackets_overlap(r.first, r.firstClosure);
    r.secondClosureOverlap = brackets_overlap(r.second, r.secondClosure);
    return r;
}

}  // namespace sheafcx
