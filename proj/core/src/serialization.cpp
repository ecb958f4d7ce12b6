#include "sidon/serialization.hpp"

#include <cstdio>

namespace sidon {

namespace {

json counts_to_json(const std::map<std::int64_t, std::int64_t>& counts) {
    json j = json::object();
    for (const auto& [w, c] : counts) j[std::to_string(w)] = c;
    return j;
}

json checks_to_json(const std::vector<BoundCheck>& checks) {
    json j = json::array();
    for (const auto& check : checks) {
        j.push_back({{"name", check.name}, {"lhs", check.lhs}, {"rhs", check.rhs}, {"pass", check.pass}});
    }
    return j;
}

std::string format_ratio(double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", ratio);
    return buf;
}

}  // namespace

json to_json(const SidonSet& set) {
    return json(set.elements());
}

json to_json(const RepProfile& profile) {
    json j;
    j["mode"] = profile.mode == RepMode::Ordered ? "ordered" : "orbit";
    j["modulus"] = profile.modulus ? json(*profile.modulus) : json(nullptr);
    j["counts"] = counts_to_json(profile.counts);
    return j;
}

json system_to_json(const LinearForm& phi, const SidonSystem& system, std::optional<std::int64_t> g) {
    json j;
    j["phi"] = phi.coeffs();
    j["sets"] = system.sets();
    j["g"] = g ? json(*g) : json(nullptr);
    return j;
}

ParsedSystem system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("phi") || !j.contains("sets")) {
        throw std::invalid_argument("system JSON must contain \"phi\" and \"sets\"");
    }
    LinearForm phi(j.at("phi").get<std::vector<std::int64_t>>());
    SidonSystem system(j.at("sets").get<std::vector<std::vector<std::int64_t>>>());
    std::optional<std::int64_t> g;
    if (j.contains("g") && !j.at("g").is_null()) g = j.at("g").get<std::int64_t>();
    return ParsedSystem{std::move(phi), std::move(system), g};
}

json to_json(const VerificationReport& report) {
    json j;
    j["max_multiplicity"] = report.max_multiplicity;
    j["witness"] = {{"value", report.witness_value}, {"tuples", report.witness_tuples}};
    j["product_size"] = report.product_size;
    j["image_size"] = report.image_size;
    j["bound_checks"] = checks_to_json(report.bound_checks);
    j["profile"] = counts_to_json(report.profile);
    return j;
}

json to_json(const AdmissibleProgression& progression) {
    json j;
    j["u"] = progression.u;
    j["Q"] = progression.modulus;
    json witnesses = json::object();
    for (const auto& [p, up] : progression.witnesses) witnesses[std::to_string(p)] = up;
    j["witnesses"] = witnesses;
    return j;
}

json to_json(const CrossValidation& validation) {
    json j;
    j["progression"] = to_json(validation.progression);
    j["progression_primes"] = validation.progression_primes;
    j["direct_primes"] = validation.direct_primes;
    j["violations"] = validation.violations;
    j["pass"] = validation.pass;
    return j;
}

json to_json(const ConstructionCertificate& certificate) {
    json j;
    j["q"] = certificate.q;
    j["tower"] = {{"p", certificate.p},
                  {"k", certificate.k},
                  {"h", certificate.h},
                  {"irr", certificate.irreducible},
                  {"theta", certificate.theta_encoding}};
    j["lambdas"] = certificate.lambda_encodings;
    j["coefficient_inverses"] = certificate.coefficient_inverses;
    j["exponents"] = certificate.exponents;
    j["verified_multiplicity"] = certificate.verified_multiplicity;
    j["experimental_prime_power"] = certificate.experimental_prime_power;
    return j;
}

json to_json(const ExtremalResult& result) {
    json j;
    j["n"] = result.n;
    j["h"] = result.h;
    j["g"] = result.g;
    j["exact"] = result.exact_value;
    if (!result.witness_system.empty()) {
        j["witness"] = result.witness_system;
    } else {
        j["witness"] = result.witness_set;
    }
    j["nodes_explored"] = result.nodes_explored;
    return j;
}

json to_json(const OracleComparison& comparison) {
    json j;
    j["n"] = comparison.n;
    j["g"] = comparison.g;
    j["construction_q"] = comparison.construction_q ? json(*comparison.construction_q) : json(nullptr);
    j["exact"] = comparison.exact_value;
    j["counting_ceiling"] = comparison.counting_ceiling;
    j["checks"] = checks_to_json(comparison.checks);
    j["pass"] = comparison.pass;
    return j;
}

json to_json(const DensityRow& row) {
    json j;
    j["n"] = row.n;
    j["q"] = row.q ? json(*row.q) : json(nullptr);
    j["ratio"] = row.q ? json(row.ratio) : json(nullptr);
    return j;
}

std::string profile_to_csv(const std::map<std::int64_t, std::int64_t>& counts) {
    std::string out = "value,count\n";
    for (const auto& [w, c] : counts) {
        out += std::to_string(w);
        out += ',';
        out += std::to_string(c);
        out += '\n';
    }
    return out;
}

std::string table_to_csv(const std::vector<DensityRow>& rows) {
    std::string out = "n,q,ratio\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        if (row.q) {
            out += std::to_string(*row.q);
            out += ',';
            out += format_ratio(row.ratio);
        } else {
            out += ',';
        }
        out += '\n';
    }
    return out;
}

}  // namespace sidon
