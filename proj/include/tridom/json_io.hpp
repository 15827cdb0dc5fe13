#pragma once

#include <json.hpp>

#include "tridom/construct.hpp"
#include "tridom/digraph.hpp"
#include "tridom/search.hpp"
#include "tridom/tournament.hpp"

namespace tridom {

// Reports use ordered JSON so emitted bytes are stable across runs and
// thread counts.
using Json = nlohmann::ordered_json;

Json to_json(const GirthResult& r);
Json to_json(const SkReport& r);
Json to_json(const GirthBoundAudit& r);
Json to_json(const Digraph& d);
Json to_json(const DominationCertificate& c);
Json to_json(const GreedyResult& g);
Json to_json(const PairTailReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const SearchReport& r);

}  // namespace tridom
