#pragma once

// JSON input parsing and report serialization. Key order is fixed, so equal
// inputs always produce byte-identical output.

#include <string>

#include <json.hpp>

#include "gtsys/action.hpp"
#include "gtsys/hilbert.hpp"
#include "gtsys/resolution.hpp"
#include "gtsys/semigroup.hpp"
#include "gtsys/togliatti.hpp"
#include "gtsys/toric.hpp"

namespace gtsys {

using Json = nlohmann::ordered_json;

/// {"d": int, "weights": [int, ...]}
CyclicAction action_from_json(const Json& j);
/// {"dim": int, "generators": [[int, ...], ...]}
AffineSemigroup semigroup_from_json(const Json& j);

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const ExponentVector& v);
Json to_json(const CyclicAction& a);
Json to_json(const InvariantBasis& b);
Json to_json(const WlpResult& w);
Json to_json(const GtClassification& c);
Json to_json(const Discrepancy& d);
Json to_json(const SurfaceProfile& p);
Json to_json(const HilbertData& h);
Json to_json(const BettiTable& t);
Json to_json(const GeneratorCounts& g);
Json to_json(const RationalSeries& s);
Json to_json(const Binomial& b);
Json to_json(const BinomialGeneratorSet& g);
Json to_json(const AffineSemigroup& h);
Json to_json(const Membership& m);
Json to_json(const NormalityResult& n);
Json to_json(const TrungReport& r);

/// Two-space indented dump with a trailing newline.
std::string render(const Json& j);

}  // namespace gtsys
