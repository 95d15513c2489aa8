#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "carleson/admissibility.hpp"
#include "carleson/embedding.hpp"
#include "carleson/measure.hpp"
#include "carleson/orlicz.hpp"
#include "carleson/signal.hpp"
#include "carleson/young.hpp"

namespace carleson::io {

using Json = nlohmann::json;

// All parsers throw InputError with a JSON-pointer-like path on bad shape,
// and let DomainError from the constructors through.
DiscreteMeasure measure_from_json(const Json& j);
Json to_json(const DiscreteMeasure& mu);

DiagonalSystem system_from_json(const Json& j);
Json to_json(const DiagonalSystem& sys);

// A measure is an array of atoms or {"atoms": [...]}; a system has "modes".
std::variant<DiscreteMeasure, DiagonalSystem> load_input(const Json& j);

InputSignal signal_from_json(const Json& j);
Json to_json(const InputSignal& s);

Json to_json(const YoungFunction& phi);
Json to_json(const IntensityTable& t);
Json to_json(const SummabilityResult& r);
Json to_json(const WitnessYoung& w);
Json to_json(const AdmissibilityReport& r);
Json to_json(const EmbeddingEstimate& e);
Json to_json(const ResolvedConstants& c);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& path);

Json read_file(const std::string& path);

}  // namespace carleson::io
