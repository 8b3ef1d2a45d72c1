#include "deltascat/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "deltascat/errors.hpp"
#include "deltascat/scattering.hpp"

namespace deltascat::cli {
namespace {

struct UsageError {
    std::string message;
};

std::string_view method_name(Method m) {
    switch (m) {
        case Method::closed: return "closed";
        case Method::partial_wave: return "partial-wave";
        case Method::limit: return "limit";
    }
    return "unknown";
}

void require(bool ok, const char* message) {
    if (!ok) throw UsageError{message};
}

ScatteringProblem make_problem(double k, double e0) {
    require(std::isfinite(k) && k > 0.0, "--k must be finite and positive");
    require(std::isfinite(e0) && e0 < 0.0, "--e0 must be negative (bound-state energy)");
    return {k, e0};
}

EpsilonSchedule make_schedule(const RunConfig& cfg) {
    require(std::isfinite(cfg.eps_start) && cfg.eps_start > 0.0,
            "--eps-start must be finite and positive");
    require(cfg.eps_factor > 0.0 && cfg.eps_factor < 1.0,
            "--eps-factor must lie strictly between 0 and 1");
    require(cfg.eps_count >= 2, "--eps-count must be at least 2");
    return {cfg.eps_start, cfg.eps_factor, cfg.eps_count};
}

// Writes the finished table either to `out` or to the requested file.
int emit(const RunConfig& cfg, const std::string& table, std::ostream& out, std::ostream& err) {
    if (!cfg.output_path) {
        out << table;
        return kSuccess;
    }
    std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << table)) {
        err << "error: --output: cannot write " << *cfg.output_path << '\n';
        return kValidation;
    }
    return kSuccess;
}

// Runs `body`, mapping library exceptions onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "error: " << e.message << '\n';
        return kValidation;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainViolation;
    } catch (const DegenerateBracketError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainViolation;
    }
}

}  // namespace

std::string format_number(double v) { return fmt::format("{:#.15g}", v); }

int run_cross_section(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ScatteringProblem p = make_problem(cfg.k, cfg.e0);
        double sigma = 0.0;
        bool converged = true;
        switch (cfg.method) {
            case Method::closed: sigma = cross_section_closed(p).sigma; break;
            case Method::partial_wave: sigma = cross_section_partial_wave(p, 0).sigma; break;
            case Method::limit: {
                const EpsilonSchedule schedule = make_schedule(cfg);
                if (cfg.mode != RegularizationMode::truncated_log &&
                    !schedule.fits_series_domain(p)) {
                    throw DomainError("--eps-start puts mu*eps or k*eps above 2");
                }
                const LimitEstimate est = limit_extrapolate(p, schedule, cfg.mode);
                sigma = est.sigma_limit;
                converged = est.converged;
                break;
            }
        }
        std::string table = "k,e0,x,ln_x,method,sigma\n";
        table += fmt::format("{},{},{},{},{},{}\n", format_number(p.k()), format_number(p.e0()),
                             format_number(p.x()), format_number(log_x(p)),
                             method_name(cfg.method), format_number(sigma));
        const int rc = emit(cfg, table, out, err);
        if (rc != kSuccess) return rc;
        if (!converged) {
            err << "error: limit did not converge to relative " << kConvergenceTolerance << '\n';
            return static_cast<int>(kNotConverged);
        }
        return static_cast<int>(kSuccess);
    });
}

int run_limit_study(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ScatteringProblem p = make_problem(cfg.k, cfg.e0);
        const EpsilonSchedule schedule = make_schedule(cfg);
        if (cfg.mode != RegularizationMode::truncated_log && !schedule.fits_series_domain(p)) {
            throw DomainError("--eps-start puts mu*eps or k*eps above 2");
        }
        const double closed = cross_section_closed(p).sigma;
        const LimitEstimate est = limit_extrapolate(p, schedule, cfg.mode);

        std::string table = "eps,sigma_eps,abs_err_vs_closed\n";
        for (const auto& s : est.samples) {
            table += fmt::format("{},{},{}\n", format_number(s.eps), format_number(s.sigma),
                                 format_number(std::abs(s.sigma - closed)));
        }
        table += fmt::format("limit,{},{}\n", format_number(est.sigma_limit),
                             format_number(est.error_estimate));
        const int rc = emit(cfg, table, out, err);
        if (rc != kSuccess) return rc;
        if (!est.converged) {
            err << "error: limit did not converge to relative " << kConvergenceTolerance << '\n';
            return static_cast<int>(kNotConverged);
        }
        return static_cast<int>(kSuccess);
    });
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require(std::isfinite(cfg.k_min) && cfg.k_min > 0.0, "--k-min must be finite and positive");
        require(std::isfinite(cfg.k_max) && cfg.k_max > cfg.k_min, "--k-max must exceed --k-min");
        require(cfg.points >= 2, "--points must be at least 2");
        require(std::isfinite(cfg.e0) && cfg.e0 < 0.0, "--e0 must be negative (bound-state energy)");

        const double span = cfg.k_max / cfg.k_min;
        std::string table = "k,ln_x,delta0,sigma,sigma_times_k\n";
        for (int i = 0; i < cfg.points; ++i) {
            const double t = static_cast<double>(i) / (cfg.points - 1);
            const double k = (i == cfg.points - 1) ? cfg.k_max : cfg.k_min * std::pow(span, t);
            const ScatteringProblem p(k, cfg.e0);
            const double sigma = cross_section_closed(p).sigma;
            table += fmt::format("{},{},{},{},{}\n", format_number(k), format_number(log_x(p)),
                                 format_number(s_wave_phase_shift(p).delta0),
                                 format_number(sigma), format_number(sigma * k));
        }
        return emit(cfg, table, out, err);
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cross sections for scattering off an attractive 2D delta-function potential",
                 "deltascat"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string mode_name = "full";
    std::string output;

    const std::map<std::string, Method> methods{
        {"closed", Method::closed}, {"partial-wave", Method::partial_wave}, {"limit", Method::limit}};

    auto* xs = app.add_subcommand("cross-section", "Total cross section by one route");
    xs->add_option("--k", cfg.k, "Particle momentum")->required();
    xs->add_option("--e0", cfg.e0, "Bound-state energy (negative)")->required();
    xs->add_option("--method", cfg.method, "closed | partial-wave | limit")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));

    auto* ls = app.add_subcommand("limit-study", "Regularized cross section as eps -> 0");
    ls->add_option("--k", cfg.k, "Particle momentum")->required();
    ls->add_option("--e0", cfg.e0, "Bound-state energy (negative)")->required();

    for (auto* sub : {xs, ls}) {
        sub->add_option("--mode", mode_name, "full | asymptotic | truncated_log");
        sub->add_option("--eps-start", cfg.eps_start, "First cutoff separation");
        sub->add_option("--eps-factor", cfg.eps_factor, "Geometric ratio between cutoffs");
        sub->add_option("--eps-count", cfg.eps_count, "Number of cutoffs");
    }

    auto* sw = app.add_subcommand("sweep", "Tabulate sigma and delta0 over geometric k");
    sw->add_option("--e0", cfg.e0, "Bound-state energy (negative)")->required();
    sw->add_option("--k-min", cfg.k_min, "Smallest momentum")->required();
    sw->add_option("--k-max", cfg.k_max, "Largest momentum")->required();
    sw->add_option("--points", cfg.points, "Number of momenta");

    for (auto* sub : {xs, ls, sw}) {
        sub->add_option("--output", output, "Write the table to this file instead of stdout");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }

    const auto mode = parse_mode(mode_name);
    if (!mode) {
        err << "error: --mode must be one of full, asymptotic, truncated_log\n";
        return kValidation;
    }
    cfg.mode = *mode;
    if (!output.empty()) cfg.output_path = output;

    if (xs->parsed()) {
        cfg.subcommand = Subcommand::cross_section;
        return run_cross_section(cfg, out, err);
    }
    if (ls->parsed()) {
        cfg.subcommand = Subcommand::limit_study;
        return run_limit_study(cfg, out, err);
    }
    cfg.subcommand = Subcommand::sweep;
    return run_sweep(cfg, out, err);
}

}  // namespace deltascat::cli
