#ifndef MPTRI_DOCUMENT_HPP
#define MPTRI_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mptri/decomp.hpp"
#include "mptri/oracle.hpp"

namespace mptri {

struct ComponentDoc {
    std::string lower;
    std::string upper;
    long long weight; // negative entries come from the signed path
};

struct MultiplicityDoc {
    std::string lower;
    std::string upper;
    std::optional<std::string> point; // "(x, y)" when rational
    int count = 0;
    long long multiplicity = 0;
};

struct VerificationDoc {
    bool match = false;
    long long oracle_total = 0;
    std::vector<long> shears;
    std::vector<std::string> diff;
};

struct OutputDocument {
    std::vector<std::string> variables;
    std::vector<ComponentDoc> components;
    std::vector<std::string> pending;
    std::optional<std::vector<MultiplicityDoc>> multiplicities;
    std::optional<long long> total_multiplicity;
    std::optional<nlohmann::json> trace;
    std::optional<VerificationDoc> verification;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct RunOptions {
    bool with_trace = false;
    bool with_verify = false;
};

// decompose (bivariate pipeline for two variables, signed otherwise) and
// render the result; multiplicities are reported for all-positive bivariate
// decompositions
OutputDocument run_decompose(const Poly& f1, const Poly& f2, const RunOptions& opts);

} // namespace mptri

#endif
