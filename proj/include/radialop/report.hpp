#pragma once

// Command implementations behind the CLI: derivation reports, verification
// suite runs, and expression evaluation, each emitted as human-readable text
// or a stable JSON document ({version, command, inputs, sections, records}).
// Identical flags and seed produce byte-identical JSON.
//
// Exit codes: 0 success / all records pass, 1 verification failure,
// 2 usage or parse error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace radialop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

int cmd_derive(const std::string& dimension_flag, const std::string& format,
               std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& range_flag, const std::string& suite_flag,
               std::uint64_t seed, std::optional<double> tolerance_override,
               const std::string& format, std::ostream& out, std::ostream& err);

int cmd_eval(const std::string& expression, const std::optional<long long>& dimension,
             const std::string& format, std::ostream& out, std::ostream& err);

}  // namespace radialop::cli
