#pragma once

#include <json.hpp>

#include "chromabound/bounds.hpp"
#include "chromabound/conjecture.hpp"
#include "chromabound/families.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/poly.hpp"
#include "chromabound/roots.hpp"

namespace chromabound {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rationals are always "num/den" strings.
Json encode(const Rational& r);
/// {"degree", "coefficients"} with coefficients[i] the x^i coefficient.
Json encode(const Poly& p);
Json encode(const Graph& g);
Json encode(const RootInterval& r);
Json encode(const std::optional<RootInterval>& r);
Json encode(const PositivityVerdict& v);
Json encode(const GapVerdict& v);

Json encode(const ThetaSpec& s);
Json encode(const SK4Spec& s);
Json encode(const K3tSpec& s);
Json encode(const CactusSpec& s);
Json encode(const CStarSpec& s);

Json encode(const BoundReport& r);
Json encode(const RootCertificate& c);
Json encode(const ConjectureReport& r);
Json encode(const Sk4Remark& r);
Json encode(const K33Exploration& e);
Json encode(const CandidateReport& r);

/// Spec decoders; every malformed field raises InvalidSpec.
ThetaSpec decode_theta(const Json& j);
SK4Spec decode_sk4(const Json& j);
K3tSpec decode_k3t(const Json& j);
CactusSpec decode_cactus(const Json& j);
CStarSpec decode_cstar(const Json& j);
/// Parses JSON text, raising InvalidSpec on syntax errors.
Json parse_json(std::string_view text);

/// Wraps a payload as {"schema": 1, <key>: payload}.
Json envelope(const std::string& key, Json payload);

}  // namespace chromabound
