#pragma once

// JSON forms of the library's data. Keys are emitted in sorted order so the
// output is byte-stable. Readers throw std::invalid_argument on malformed
// input, including integers outside [-10^6, 10^6].

#include <json.hpp>

#include "burniat/cohomology.hpp"
#include "burniat/collections.hpp"
#include "burniat/delpezzo.hpp"
#include "burniat/effectivity.hpp"
#include "burniat/numerics.hpp"
#include "burniat/tables.hpp"

namespace burniat {

using Json = nlohmann::json;

inline constexpr Int kMaxInputMagnitude = 1'000'000;

Json to_json(const TorsionClass& t);
Json to_json(const DivClass& D);
DivClass divclass_from_json(const Json& j);

Json to_json(const DPClass& D);
DPClass dpclass_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// Tagged "H1-CHAIN".
Json to_json(const ChainCertificate& c);
ChainCertificate chain_from_json(const Json& j);

Json to_json(const IntMatrix& m);
Json to_json(const ExtResult& r);
Json to_json(const ExtTable& t);

Json to_json(const BlockedCollection& c);
/// Accepts {"classes", "blocks", "labels"} or a full verification report
/// (its "collection" member is read). Missing blocks mean one block per class.
BlockedCollection collection_from_json(const Json& j);

Json to_json(const NumericalCollection& n);
/// {"free_parts": [...], "blocks": [...]}; torsion in the classes is ignored.
NumericalCollection numerical_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const AlgebraReport& r);
Json to_json(const K0Report& r);
Json to_json(const LiftSearchResult& r);
Json to_json(const DPCollectionReport& r);
Json to_json(const TorsionChange& t);

}  // namespace burniat
