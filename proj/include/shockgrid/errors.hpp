#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shockgrid {

enum class errc {
    malformed_code,
    scheme_mismatch,
    unknown_code,
    dimension_mismatch,
    axis_misalignment,
    negative_entry,
    bad_threshold,
    unmapped_industry,
    degenerate_input,
    missing_wages,
    bad_share,
    bad_count,
    unknown_scenario,
    malformed_scenario,
    incomplete_coverage,
    schema_error,
    integrity_error,
};

inline std::string_view to_string(errc c) {
    switch (c) {
        case errc::malformed_code: return "MalformedCode";
        case errc::scheme_mismatch: return "SchemeMismatch";
        case errc::unknown_code: return "UnknownCode";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::axis_misalignment: return "AxisMisalignment";
        case errc::negative_entry: return "NegativeEntry";
        case errc::bad_threshold: return "BadThreshold";
        case errc::unmapped_industry: return "UnmappedIndustry";
        case errc::degenerate_input: return "DegenerateInput";
        case errc::missing_wages: return "MissingWages";
        case errc::bad_share: return "BadShare";
        case errc::bad_count: return "BadCount";
        case errc::unknown_scenario: return "UnknownScenario";
        case errc::malformed_scenario: return "MalformedScenario";
        case errc::incomplete_coverage: return "IncompleteCoverage";
        case errc::schema_error: return "SchemaError";
        case errc::integrity_error: return "IntegrityError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace shockgrid
