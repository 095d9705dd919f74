#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hurwitz_sos/gram_search.hpp"
#include "hurwitz_sos/numeric_validation.hpp"

namespace hsos::cli {

enum class OutputFormat { Text, Json };

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitUnknown = 4;

int cmd_expand(int p, int r, OutputFormat fmt, std::ostream& out, std::ostream& err);

/// `swap` verifies the A <-> B image of the file's certificate (Tr S_{p, p-r}).
int cmd_verify(const std::string& cert_path, bool swap, OutputFormat fmt, std::ostream& out, std::ostream& err);

/// p and r fall back to the ansatz file when not given. A found certificate is
/// written to `out_path` when that is nonempty.
int cmd_search(std::optional<int> p, std::optional<int> r, const std::string& ansatz_path,
               const SearchOptions& options, const std::string& out_path, OutputFormat fmt, std::ostream& out,
               std::ostream& err);

int cmd_validate(const std::string& cert_path, bool swap, const numeric::TrialConfig& config, OutputFormat fmt,
                 std::ostream& out, std::ostream& err);

int cmd_bmv_check(int p, const numeric::TrialConfig& config, OutputFormat fmt, std::ostream& out,
                  std::ostream& err);

/// "1,2,5" or "1-6" (inclusive), mixed freely: "1-3,8".
std::vector<std::size_t> parse_dims(const std::string& spec);

/// Entry point used by the hurwitz-sos binary; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsos::cli
