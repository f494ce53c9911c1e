#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rspunct/bounds.hpp"
#include "rspunct/certificates.hpp"
#include "rspunct/experiments.hpp"
#include "rspunct/oracles.hpp"
#include "rspunct/rs_code.hpp"

namespace rspunct::io {

// Shortest round-trip decimal representation, locale-independent.
std::string format_double(double x);

// Codes: {"p": int, "k": int, "alpha": [int, ...]}.
std::string code_to_json(const RSCode& code);
RSCode code_from_json(const std::string& text);
RSCode load_code(const std::string& path);

// Witnesses: {"center": [...], "offenders": [[...], ...]} resp.
// {"lists": [[...], ...], "offenders": [[...], ...]}.
std::string witness_to_json(const oracles::DecodingWitness& w);
std::string witness_to_json(const oracles::RecoveryWitness& w);

// Oracle verdict: {"decodable": bool, "witness": object|null}.
std::string verdict_to_json(const std::optional<oracles::DecodingWitness>& w);
std::string verdict_to_json(const std::optional<oracles::RecoveryWitness>& w);

// Certificates: {"a": [...], "S": [[...], ...], "gammas_msgs": [[...], ...],
// "c": number-or-"p/q"-string, "h": int}. Codewords are stored as messages
// and re-encoded on load; the index family is re-derived on load.
std::string certificate_to_json(const certs::Certificate& cert, const RSCode& parent);
certs::Certificate certificate_from_json(const std::string& text, const RSCode& parent);
certs::Certificate load_certificate(const std::string& path, const RSCode& parent);

// Parameter plans (all fields; n-dependent ones null when n was not given).
std::string plan_to_json(const bounds::ParamPlan& plan);
std::string infeasible_to_json(const std::string& constraint);

// Experiment configs and outputs.
expt::ExperimentConfig config_from_json(const std::string& text);
std::string summary_to_json(const expt::ExperimentSummary& summary);
std::string trials_to_csv(const expt::ExperimentSummary& summary);
std::string failure_witnesses_to_json(const expt::ExperimentSummary& summary);
std::string sweep_to_csv(const std::vector<expt::SweepRow>& rows, const expt::ExperimentConfig& base,
                         double eps);
std::string curves_to_csv(const std::vector<bounds::CurveRow>& rows, int l, double eps);

std::string read_file(const std::string& path);
// Writes content, guaranteeing exactly one trailing newline.
void write_file(const std::string& path, std::string_view content);

}  // namespace rspunct::io
