// Copyright 2026 The nshare authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nshare {

/// How user load is attributed to an operator's base stations in the
/// per-operator delay integral: each summand carries only that operator's
/// own subscribers, or every active BS serves the aggregate population
/// (the full network-sharing reading).
enum class LoadModel { PerOperator, Aggregate };

enum class EnergyProfile { Hlp, Llp, Custom };

/// Affine BS power model E(U) = q1 + U*(q2 + q3*P).
struct EnergyParams {
    double q1_w = 0.0;   // load-independent draw
    double q2_w = 0.0;   // utilization-proportional draw (compute, cooling)
    double q3 = 0.0;     // transmit-chain coupling, multiplies P
    EnergyProfile profile = EnergyProfile::Custom;
};

/// High load proportionality profile: fixed part is 36% of the maximum
/// draw E_max = q1 + q2 + q3*P. transmit_share splits the load-proportional
/// remainder between q2 and q3*P.
EnergyParams make_hlp(double max_power_w, double transmit_power_w,
                      double transmit_share = 0.5);

/// Low load proportionality profile: fixed part is 75% of E_max.
EnergyParams make_llp(double max_power_w, double transmit_power_w,
                      double transmit_share = 0.5);

EnergyParams make_custom(double q1_w, double q2_w, double q3);

struct RadioParams {
    double transmit_power_w = 20.0;
    std::vector<double> bandwidth_hz;      // one entry per operator
    int reuse_factor = 1;
    double pathloss_exponent = 3.5;        // must exceed 2
    double noise_psd_w_per_hz = 4e-21;
    std::optional<double> noise_power_w;   // overrides the PSD form when set
    double min_distance_m = 1.0;           // pathloss singularity clamp

    double bandwidth_for(std::size_t op) const;
    // Noise power over the per-operator share of spectrum, B_i / k.
    double effective_noise_w(std::size_t op) const;
};

struct OperatorConfig {
    int id = 0;
    double deployed_intensity = 0.0;   // BS per m^2
    double user_intensity = 0.0;       // users per m^2
    double active_fraction = 1.0;      // beta in [0,1]
    EnergyParams energy;
};

struct UserClassSpec {
    std::string label;
    double target_rate_bps = 0.0;   // R0_j
    double target_delay = 0.0;      // 1 / R0_j, seconds per bit
    double share = 0.0;             // gamma_j
    double weight = 0.0;            // R0_j / R0_J, so the last class has w = 1
};

/// Builds the class list from labels, target rates and population shares.
/// Weights and target delays are derived from the rates; the last class is
/// the reference class J with weight 1.
std::vector<UserClassSpec> make_classes(const std::vector<std::string>& labels,
                                        const std::vector<double>& rates_bps,
                                        const std::vector<double>& shares);

/// The full analytical scenario for one time slot.
struct NetworkModel {
    std::vector<OperatorConfig> operators;
    std::vector<UserClassSpec> classes;
    double colocation_fraction = 0.0;   // c in [0,1]
    RadioParams radio;
    LoadModel load_model = LoadModel::PerOperator;
    bool normalize_serving_probs = false;

    std::size_t num_operators() const { return operators.size(); }
    std::size_t num_classes() const { return classes.size(); }

    double total_active_intensity() const;      // sum of beta_i * lambda_i
    double total_deployed_intensity() const;    // sum of lambda_i
    double aggregate_user_intensity() const;    // sum of lambda_u^i
    double weighted_class_load() const;         // sum of gamma_j * w_j
    const UserClassSpec& reference_class() const { return classes.back(); }

    NetworkModel with_active_fractions(const std::vector<double>& beta) const;
    /// Single-operator submodel: operator `op` keeps its own band; the user
    /// intensity may be overridden (operator switchoff serves everyone).
    NetworkModel single_operator(std::size_t op,
                                 std::optional<double> user_intensity = {}) const;
};

/// Checks every structural invariant; returns one message per violation.
/// An empty list means the model is usable by the solvers.
std::vector<std::string> validate_model(const NetworkModel& m);

/// Per-class, per-operator mean ideal per-bit delays plus solver diagnostics.
struct DelaySolution {
    // tau_bar[j][i]: mean ideal per-bit delay of a class-j user served by
    // operator i, seconds per bit.
    std::vector<std::vector<double>> tau_bar;
    std::vector<double> tau_bar_mix;   // mixture over operators, per class
    std::vector<double> p;             // serving probabilities
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    std::string message;

    std::size_t num_classes() const { return tau_bar.size(); }
    std::size_t num_operators() const { return p.size(); }
};

}  // namespace nshare
