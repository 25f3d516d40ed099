#pragma once

// JSON serialization. Field names are fixed; see docs/report-schema.md.
// Points are hex strings, exact quantities are "num/den" strings.

#include "json.hpp"

#include "freiman/covering.hpp"
#include "freiman/model.hpp"
#include "freiman/pipeline.hpp"
#include "freiman/structure.hpp"

namespace freiman {

using Json = nlohmann::ordered_json;

Json to_json(const Subspace& s);
Json to_json(const Coset& c);
Json to_json(const Embedding& e);
Json to_json(const StepRecord& r);
Json trace_to_json(const std::vector<StepRecord>& trace);
Json to_json(const StructureResult& r);
Json to_json(const Model& m);
Json to_json(const CoverReport& r);
Json to_json(const PipelineReport& r);

// Doubling constant, density and spectrum summaries of A, in span coordinates
// and (when the ambient space fits the dense limit) in ambient coordinates.
Json analyze(const PointSet& a, int dense_limit = kDefaultDenseLimit);

}  // namespace freiman
