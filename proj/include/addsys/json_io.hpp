#pragma once

#include <json.hpp>

#include "addsys/classify.hpp"
#include "addsys/codec.hpp"
#include "addsys/sumset_lab.hpp"
#include "addsys/systems.hpp"
#include "addsys/transforms.hpp"

namespace addsys {

using Json = nlohmann::json;

// Big integers render as JSON numbers when they fit, decimal strings past
// 64 bits.
Json int_to_json(const Int& n);
Int int_from_json(const Json& j);

Json system_to_json(const AdditiveSystem& sys);
Json report_to_json(const VerificationReport& r);
Json representation_to_json(const Representation& r);

Json partition_to_json(const IndexPartition& p);
IndexPartition partition_from_json(const Json& j);
Json dilation_record_to_json(const DilationRecord& r);

Json schedule_to_json(const GeneratorSchedule& s);
GeneratorSchedule schedule_from_json(const Json& j);
Json classification_to_json(const ClassificationResult& r);
ClassificationResult classification_from_json(const Json& j);
Json extraction_step_to_json(const ExtractionStep& s);

Json digits_to_json(const MixedRadixDigits& d);
Json search_outcome_to_json(const SearchProblem& p, const SearchOutcome& o);

}  // namespace addsys
