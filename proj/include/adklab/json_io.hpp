#pragma once

#include <string>

#include <json.hpp>

#include "adklab/builtins.hpp"
#include "adklab/criticality.hpp"
#include "adklab/domain_model.hpp"
#include "adklab/factorization.hpp"
#include "adklab/fractional.hpp"
#include "adklab/inv_group.hpp"
#include "adklab/verify.hpp"

namespace adklab {

using Json = nlohmann::ordered_json;

Json to_json(const Ordinal& o);
Json to_json(const SpectrumSpace& s);
Json to_json(const PointSet& s);
Json to_json(const Rule& r);
Json to_json(const IdealFunction& f);
Json to_json(const TailChain& c);
Json to_json(const PointFamily& f);
Json to_json(const GeneratorSpec& g);
Json to_json(const DomainModel& m);
Json to_json(const FractionalFunction& f);
Json to_json(const ExtNat& v);

Json to_json(const CritReport& r);
Json to_json(const ChainReport& r);
Json to_json(const Factorization& f);
Json to_json(const std::vector<TheoremCheck>& checks);
Json to_json(const KernelCertificate& c);
Json to_json(const RankResult& r);

Ordinal ordinal_from_json(const Json& j);
SpectrumSpace space_from_json(const Json& j);
PointSet point_set_from_json(const Json& j, const SpectrumSpace& s);
IdealFunction function_from_json(const Json& j);
DomainModel model_from_json(const Json& j);

// Ideal input files: either {"function": {...}} or a combination expression
// over the model's generators {"combo": ...}; with both, they must agree.
IdealFunction ideal_from_json(const Json& j, const DomainModel& model);

std::string model_hash(const DomainModel& m);

// Envelope around every CLI payload. The timestamp is informative only and
// excluded from any hashing or comparison.
Json report_envelope(const std::string& command, const DomainModel& model, Json payload);

std::string tool_version();

}  // namespace adklab
