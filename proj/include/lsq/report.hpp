#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lsq/corpus.hpp"
#include "lsq/loops.hpp"
#include "lsq/random_squares.hpp"
#include "lsq/span.hpp"
#include "lsq/subconstituent.hpp"

namespace lsq {

inline constexpr const char* kToolName = "lsq";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "lsq-report/1";

using json = nlohmann::json;

// Shared document envelope; numeric content is reproducible bit-for-bit
// given (input, flags, seed).
json report_envelope(const std::string& command, const LatinSquare& square,
                     const std::string& source,
                     std::optional<uint64_t> seed = std::nullopt);

json to_json(const PropertyRecord& record);
json to_json(const Point& p);
json to_json(const SubPermutation& perm);
json to_json(const CycleStructure& cycles);
json to_json(const RootOfUnity& root);
json to_json(const ModuleTable& table);
json to_json(const WedderburnSignature& signature);
json to_json(const FixedPointProfile& profile);
json to_json(const WedderburnReport& report);
json to_json(const BolCertificate& certificate);
json to_json(const IdentityBaseReport& report);
json to_json(const CorpusEntry& entry);
json to_json(const RipSearchResult& result);

// Structural check of a report document against the published shape; readers
// must tolerate unknown future fields, so extras never fail.
bool validate_report(const json& doc, std::string* why = nullptr);

}  // namespace lsq
