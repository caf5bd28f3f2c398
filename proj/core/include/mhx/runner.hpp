#pragma once

#include <string>
#include <vector>

#include "mhx/instance_io.hpp"
#include "mhx/orbit.hpp"

namespace mhx {

/// Exit code contract: 0 verdict true / success, 1 verdict false (e.g. not
/// admissible, not a mixed Hodge structure), 2 input error, 3 internal
/// invariant violation.
struct ReportDocument {
    int exit_code = 0;
    nlohmann::json body;
};

struct RunOptions {
    std::vector<Rational> ys = {Rational(1), Rational(2), Rational(4), Rational(8)};
    TraceMode mode = TraceMode::ExactDecoupled;
    unsigned long seed = 0;
    std::optional<Rational> s_exact;
};

/// Dispatches one command against one instance. Never throws: errors are
/// encoded in the exit code and report body.
ReportDocument run(const std::string& command, const InstanceDocument& instance,
                   const RunOptions& options);

/// Commands accepted by run().
const std::vector<std::string>& known_commands();

/// Parses the gen-command flags: weights "0,2", content "0:0;2:1x2t1"
/// (weight : d [x count] [t twist], comma-separated), extensions "2:1,3:1".
/// Content defaults to one d=0 summand per weight; extensions default to a
/// single degree-2 generator when the weight window spans at least 2.
GeneratorSpec parse_generator_spec(const std::string& weights, const std::string& content,
                                   const std::string& extensions, unsigned long seed);

/// Builds, verifies and serializes a split orbit instance.
ReportDocument run_generate(const GeneratorSpec& spec);

/// Parses a comma-separated list of rationals ("1,2,7/2").
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace mhx
