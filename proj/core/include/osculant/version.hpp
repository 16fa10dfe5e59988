#pragma once

namespace osculant {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "osculant-report/1";

}  // namespace osculant
