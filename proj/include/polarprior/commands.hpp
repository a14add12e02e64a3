#pragma once

#include <exception>
#include <iosfwd>
#include <string>

#include "polarprior/config.hpp"
#include "polarprior/hmc.hpp"
#include "polarprior/theory.hpp"

namespace polarprior {

/// Executes the configured command, writing artifacts under `output_dir`
/// together with run_log.json (seed, config hash, effective config,
/// versions). On failure writes error.json there and to `err`, and returns 1.
int run_command(const RunConfig& config, std::ostream& err);

/// {"error": <kind>, "message": <text>} on one line.
std::string error_json(const std::exception& e);

PriorTemplate prior_template_from_json(const nlohmann::json& prior);
StructuredPriorSpec prior_spec_from_json(const nlohmann::json& prior);
HmcConfig hmc_config_from_json(const nlohmann::json& hmc, std::uint64_t seed);

/// Posterior summary (mean, sd, 5/50/95% quantiles, ess, split-rhat) per parameter.
nlohmann::json summarize_chain(const ChainOutput& chain);

}  // namespace polarprior
