#ifndef PARAMSPEC_VERSION_HPP
#define PARAMSPEC_VERSION_HPP

namespace paramspec {

inline constexpr const char* kToolName = "paramspec";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace paramspec

#endif
