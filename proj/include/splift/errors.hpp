#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace splift {

// Library error with a stable machine-readable code (used verbatim by the CLI).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
// epsilon machinery
inline constexpr const char* not_coherent = "not_globally_coherent";
inline constexpr const char* not_realizable = "not_automorphically_realizable";
// archimedean packets
inline constexpr const char* not_adams_johnson = "not_adams_johnson";
inline constexpr const char* not_lowest_weight = "not_lowest_weight_packet";
inline constexpr const char* weight_not_discrete = "weight_outside_discrete_range";
// lifting
inline constexpr const char* interval_violation = "interval_hypothesis_violated";
inline constexpr const char* not_discrete_param = "not_a_discrete_parameter";
inline constexpr const char* source_not_realizable = "source_not_realizable";
inline constexpr const char* bad_instance = "named_instance_constraint";
// euler factors / data
inline constexpr const char* missing_hecke = "insufficient_hecke_data";
inline constexpr const char* bad_weight = "unsupported_eigenform_weight";
inline constexpr const char* parse = "parse_error";
inline constexpr const char* domain = "domain_error";
} // namespace errc

} // namespace splift
