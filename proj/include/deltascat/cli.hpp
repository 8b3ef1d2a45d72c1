#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "deltascat/regularization.hpp"

namespace deltascat::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidation = 2,
    kNotConverged = 3,
    kDomainViolation = 4,
};

enum class Subcommand { cross_section, limit_study, sweep };
enum class Method { closed, partial_wave, limit };

struct RunConfig {
    Subcommand subcommand = Subcommand::cross_section;
    double k = 1.0;
    double e0 = -1.0;
    Method method = Method::closed;
    RegularizationMode mode = RegularizationMode::full;
    double eps_start = 1e-2;
    double eps_factor = 1e-1;
    int eps_count = 5;
    double k_min = 0.1;
    double k_max = 10.0;
    int points = 11;
    std::optional<std::string> output_path;
};

/// Fixed 15-significant-digit rendering used in every CSV field.
[[nodiscard]] std::string format_number(double v);

// Each runner writes its CSV table to `out` (or to cfg.output_path) and any
// diagnostic to `err`, and returns an ExitCode.
int run_cross_section(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_limit_study(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a runner.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltascat::cli
