#include "sheafcx/report.hpp"

#include "sheafcx/errors.hpp"

#include <cstdio>

namespace sheafcx {

Json rational_json(const Rational& q) {
    return Json{{"exact", to_exact_string(q)}, {"decimal", to_decimal_string(q)}};
}

Json quad_json(const QuadIrrational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", q.to_double());
    return Json{{"exact", q.to_string()},
                {"a", to_exact_string(q.a())},
                {"b", to_exact_string(q.b())},
                {"radicand", q.d().str()},
                {"decimal", buf}};
}

Json monomial_json(const Monomial& m, const Ring& ring) { return to_string(m, ring); }

Json ideal_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(to_string(g, ideal.ring()));
    return Json{{"ring", ideal.ring().variable_names()}, {"generators", gens}};
}

Json betti_json(const BettiTable& table, const Ring& ring) {
    Json rows = Json::array();
    for (const auto& [key, rank] : table.entries())
        rows.push_back({{"i", key.first},
                        {"degree", to_string(key.second, ring)},
                        {"totalDegree", key.second.degree()},
                        {"rank", rank}});
    return rows;
}

Json regularity_json(const RegularityReport& r) {
    const Ring& ring = r.saturatedInput.ring();
    return Json{{"regularity", r.moduleRegularity},
                {"witness", {{"i", r.witnessIndex}, {"degree", to_string(r.witnessDegree, ring)}}},
                {"saturation", ideal_json(r.saturatedInput)},
                {"betti", betti_json(r.betti, ring)}};
}

Json facet_json(const ReesValuation& v, const Ring& ring) {
    Json center = Json::array();
    for (auto i : v.center) center.push_back(ring.name(i));
    return Json{{"normal", v.normal},
                {"r", v.coefficient},
                {"center", center},
                {"centerDimension", v.centerDimension},
                {"irrelevant", v.irrelevant()}};
}

Json bezout_json(const BezoutReport& r, const Ring& ring) {
    Json excluded = Json::array();
    for (const auto& v : r.excluded) excluded.push_back(facet_json(v, ring));
    return Json{{"s", rational_json(r.sUsed)},
                {"lhs", rational_json(r.lhs)},
                {"rhs", rational_json(r.rhs)},
                {"satisfied", r.satisfied},
                {"rCoefficient", r.rCoefficient},
                {"rBound", rational_json(r.rBound)},
                {"rBoundSatisfied", r.rBoundSatisfied},
                {"excluded", excluded}};
}

Json adeg_json(const AdegProfile& a) {
    Json by = Json::object();
    for (const auto& [k, v] : a.byCodim) by[std::to_string(k)] = v;
    return Json{{"adeg", by}, {"computedOn", ideal_json(a.computedOn)}};
}

Json standard_pairs_json(const StandardPairDecomposition& sp, const Ring& ring) {
    Json pairs = Json::array();
    for (const auto& p : sp.pairs) {
        Json vars = Json::array();
        for (auto v : p.freeVariables) vars.push_back(ring.name(v));
        pairs.push_back({{"root", to_string(p.root, ring)}, {"free", vars}});
    }
    return pairs;
}

Json nilpotency_json(const NilpotencyReport& r) {
    auto checks = [](const std::map<int, PowerInclusionCheck>& m) {
        Json out = Json::object();
        for (const auto& [p, c] : m)
            out[std::to_string(p)] = {{"exponent", c.exponent},
                                      {"leastExponent", c.leastExponent},
                                      {"holds", c.holds}};
        return out;
    };
    return Json{{"index", r.index},
                {"rCoefficient", r.rCoefficient},
                {"n", r.n},
                {"boundHolds", r.boundHolds},
                {"inclusions", checks(r.inclusions)},
                {"alternateInclusions", checks(r.alternateInclusions)}};
}

Json power_entries_json(const std::map<int, PowerEntry>& entries) {
    Json out = Json::object();
    for (const auto& [p, e] : entries)
        out[std::to_string(p)] = {{"dp", e.dp}, {"regp", e.regp}, {"computedAt", e.computedAt}};
    return out;
}

std::map<int, PowerEntry> power_entries_from_json(const Json& j) {
    std::map<int, PowerEntry> out;
    try {
        for (const auto& [key, v] : j.items()) {
            std::size_t used = 0;
            const int p = std::stoi(key, &used);
            if (used != key.size() || p < 1) throw IntegrityError("bad power key '" + key + "'");
            out[p] = PowerEntry{v.at("dp").get<int>(), v.at("regp").get<int>(),
                                v.value("computedAt", std::string{})};
        }
    } catch (const nlohmann::json::exception& e) {
        throw IntegrityError(std::string("malformed power entries: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw IntegrityError("malformed power key");
    }
    return out;
}

Json curve_json(const CurveWitness& w, const Ring& ring) {
    return Json{{"chart", ring.name(w.chart)},
                {"weights", w.weights},
                {"valuation", w.valuation},
                {"degree", w.degree},
                {"bound", rational_json(w.bound)}};
}

Json bracket_json(const SBracket& b, const Ring& ring) {
    Json ratios = Json::object();
    for (const auto& [p, e] : b.sequence.entries) ratios[std::to_string(p)] = rational_json(Rational(e.dp, p));
    return Json{{"lower", rational_json(b.lower)},
                {"upper", rational_json(b.upper)},
                {"converged", b.converged},
                {"tolerance", rational_json(b.tolerance)},
                {"lowerWitness", curve_json(b.lowerWitness, ring)},
                {"upperWitness", {{"p", b.upperP}, {"dp", b.upperD}}},
                {"sequence", power_entries_json(b.sequence.entries)},
                {"ratios", ratios}};
}

Json property_json(const PropertyReport& r, const Ring& ring) {
    auto brief = [](const SBracket& b) {
        return Json{{"lower", rational_json(b.lower)}, {"upper", rational_json(b.upper)}};
    };
    return Json{{"first", brief(r.first)},
                {"second", brief(r.second)},
                {"product", brief(r.product)},
                {"sum", r.sum ? brief(*r.sum) : Json(nullptr)},
                {"firstClosure", brief(r.firstClosure)},
                {"secondClosure", brief(r.secondClosure)},
                {"productBound", r.productBound},
                {"sumBound", r.sumBound},
                {"firstClosureOverlap", r.firstClosureOverlap},
                {"secondClosureOverlap", r.secondClosureOverlap},
                {"allHold", r.all_hold()},
                {"ring", ring.variable_names()}};
}

Json s_invariant_json(const SInvariantResult& r) {
    return Json{{"s", quad_json(r.s)},
                {"alreadyNef", r.alreadyNef},
                {"discriminant", rational_json(r.discriminant)},
                {"irrational", r.irrational},
                {"probesVerified", r.probesVerified}};
}

Json rescale_json(const RescaleReport& r) {
    return Json{{"original", quad_json(r.original)},
                {"rescaled", quad_json(r.rescaled)},
                {"expected", quad_json(r.expected)},
                {"holds", r.holds}};
}

Json make_report(const std::string& command, Json inputs, Json results, double seconds) {
    return Json{{"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"timings", {{"seconds", seconds}}},
                {"versions", {{"sheafcx", kVersion}}}};
}

}  // namespace sheafcx
