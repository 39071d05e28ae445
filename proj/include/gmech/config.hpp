#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gmech/algebra.hpp"
#include "gmech/errors.hpp"

// Run configuration for the batch front end. Configs are flat key-value
// text with one section per subcommand:
//
//   # comment
//   seed = 42
//   [rigid-body]
//   inertia = 1,2,3
//   M0 = 0,1,1
//   dt = 1e-3
//   steps = 10000
//
// Keys before the first section are global (out, seed). Every key can also
// be supplied on the command line as --key=value, which overrides the file.
// Unknown keys and duplicate keys are errors; all validated values are
// echoed verbatim into the run manifest.

namespace gmech::cli {

enum class Subcommand { RigidBody, Advected, TrivialEp, Field, OptimalTime, Sweep };

std::string subcommand_name(Subcommand sub);
std::optional<Subcommand> subcommand_from_name(const std::string& name);

struct RigidBodyConfig {
    Vec3 inertia{1.0, 2.0, 3.0}; // principal moments
    Vec3 M0{0.0, 1.0, 1.0};
    double dt = 1e-3;
    int steps = 10000;
};

struct AdvectedConfig {
    Vec3 inertia{1.0, 2.0, 3.0};
    Vec3 mu0{0.0, 1.0, 1.0};
    Vec3 a0{0.0, 0.0, 1.0};
    Vec3 chi{0.0, 0.0, 0.0}; // constant dl/da
    double dt = 1e-3;
    int steps = 10000;
};

struct TrivialEpConfig {
    Vec3 inertia{1.0, 2.0, 3.0};
    Vec3 eta0{0.0, 0.0, 0.0};
    double latA = 0.0, lonA = 0.0; // start point, degrees
    Vec3 X0{0.0, 0.0, 0.0};       // ambient velocity, projected to tangency
    double R = 100.0;
    double alpha = 1e-16;
    double dt = 1e-3;
    int steps = 10000;
};

struct FieldConfig {
    int level = 3;
    Vec3 inertia{1.0, 2.0, 3.0};
    double alpha = 1.0;
    Vec3 eta0{0.0, 0.0, 0.0};  // uniform internal velocity
    Vec3 omega{0.0, 0.0, 0.0}; // rigid-rotation velocity field X = omega x x
    double R = 1.0;
    double dt = 1e-3;
    int steps = 1000;
    int snapshot_every = 0; // 0: final snapshot only
};

struct OptimalTimeConfig {
    double alpha = 1e-16;
    double lambda = 1e-17;
    std::optional<double> L;     // direct arc length...
    std::optional<double> latA, lonA, latB, lonB; // ...or endpoints
    double R = 100.0;
    bool report_reconciled = true;
};

struct SweepConfig {
    std::vector<double> alphas{1e-16};
    std::vector<double> lambdas{1e-17};
    std::vector<double> Ls{104.7198};
};

using SubcommandConfig = std::variant<RigidBodyConfig, AdvectedConfig, TrivialEpConfig,
                                      FieldConfig, OptimalTimeConfig, SweepConfig>;

struct RunConfig {
    Subcommand subcommand;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    SubcommandConfig params;

    /// Resolved key -> value echo (defaults included), fixed order.
    std::vector<std::pair<std::string, std::string>> echo;
};

/// Parses the document, reads the section matching `sub`, applies the
/// command-line overrides, validates, and fills defaults. Throws ParseError,
/// UnknownKey, or ValidationError.
RunConfig parse_config(Subcommand sub, const std::string& text,
                       const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Per-subcommand key listing for --help.
std::string describe_keys(Subcommand sub);

} // namespace gmech::cli
