#pragma once

// JSON renderings of results. Exact values are strings ("5/2"); every
// rational also carries a six-place decimal next to it for reading.

#include "sheafcx/assoc.hpp"
#include "sheafcx/homology.hpp"
#include "sheafcx/newton.hpp"
#include "sheafcx/sestimator.hpp"
#include "sheafcx/surface.hpp"

#include <json.hpp>

#include <string>

namespace sheafcx {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json rational_json(const Rational& q);
Json quad_json(const QuadIrrational& q);
Json monomial_json(const Monomial& m, const Ring& ring);
Json ideal_json(const MonomialIdeal& ideal);

Json betti_json(const BettiTable& table, const Ring& ring);
Json regularity_json(const RegularityReport& r);
Json facet_json(const ReesValuation& v, const Ring& ring);
Json bezout_json(const BezoutReport& r, const Ring& ring);
Json adeg_json(const AdegProfile& a);
Json standard_pairs_json(const StandardPairDecomposition& sp, const Ring& ring);
Json nilpotency_json(const NilpotencyReport& r);
Json power_entries_json(const std::map<int, PowerEntry>& entries);
std::map<int, PowerEntry> power_entries_from_json(const Json& j);
Json curve_json(const CurveWitness& w, const Ring& ring);
Json bracket_json(const SBracket& b, const Ring& ring);
Json property_json(const PropertyReport& r, const Ring& ring);
Json s_invariant_json(const SInvariantResult& r);
Json rescale_json(const RescaleReport& r);

/// {command, inputs, results, timings, versions}.
Json make_report(const std::string& command, Json inputs, Json results, double seconds);

}  // namespace sheafcx
