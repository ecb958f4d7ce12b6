#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "sidon/admissibility.hpp"
#include "sidon/classical.hpp"
#include "sidon/extremal.hpp"
#include "sidon/linear_form.hpp"
#include "sidon/system_builder.hpp"

namespace sidon {

// Insertion-ordered JSON keeps the emitted documents byte-stable.
using json = nlohmann::ordered_json;

json to_json(const SidonSet& set);

/// {"mode": "ordered"|"orbit", "modulus": m|null, "counts": {"w": count, ...}}
json to_json(const RepProfile& profile);

/// System wire format: {"phi": [c1,...,ch], "sets": [[...],...], "g": int|null}
json system_to_json(const LinearForm& phi, const SidonSystem& system,
                    std::optional<std::int64_t> g);

struct ParsedSystem {
    LinearForm phi;
    SidonSystem system;
    std::optional<std::int64_t> g;
};

ParsedSystem system_from_json(const json& j);

json to_json(const VerificationReport& report);

/// {"u": int, "Q": int, "witnesses": {"p": u_p, ...}}
json to_json(const AdmissibleProgression& progression);

json to_json(const CrossValidation& validation);

json to_json(const ConstructionCertificate& certificate);

json to_json(const ExtremalResult& result);

json to_json(const OracleComparison& comparison);

json to_json(const DensityRow& row);

/// "value,count" rows, values ascending.
std::string profile_to_csv(const std::map<std::int64_t, std::int64_t>& counts);

/// "n,q,ratio" rows; q empty when absent; ratio fixed to six decimals.
std::string table_to_csv(const std::vector<DensityRow>& rows);

}  // namespace sidon
