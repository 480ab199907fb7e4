/* Copyright 2025 the kvsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kvsim {

// Analytical cost model for transformer inference on accelerator instances.
// Prefill is priced against peak compute, decoding against HBM bandwidth
// (with a compute floor), inter-instance transfers against the interconnect.
// All byte quantities use decimal units (1 GB = 1e9 bytes).

struct DeviceSpec {
  std::string name;
  double peak_flops = 0;      // fp16 FLOP/s per device
  double hbm_capacity = 0;    // bytes per device
  double hbm_bandwidth = 0;   // bytes/s per device
  double link_bandwidth = 0;  // bytes/s of inter-instance interconnect per device
};

struct ModelSpec {
  std::string name;
  double param_count = 0;
  int num_layers = 0;
  int hidden_dim = 0;
  int num_kv_heads = 0;
  int head_dim = 0;
  int bytes_per_value = 0;
};

struct InstanceSpec {
  DeviceSpec device;
  int num_devices = 4;
  int tensor_parallel = 4;
  double memory_reserve_fraction = 0.10;
};

// Achieved fractions of peak; calibration knobs for the three resources.
struct EfficiencyFactors {
  double compute_eff = 0.5;
  double mem_bw_eff = 0.8;
  double link_eff = 0.8;
};

// How inter-instance transfers use the per-device links: striped across all
// devices of an instance (tensor-parallel shards ship in parallel) or a
// single device link.
enum class LinkAggregation { kStriped, kSingleLink };

DeviceSpec device_preset_910b2();
DeviceSpec device_preset_h100();
ModelSpec model_preset_llama2_70b();

void validate(const DeviceSpec& dev);
void validate(const ModelSpec& model);
void validate(const InstanceSpec& inst);
void validate(const EfficiencyFactors& eff);

// Bytes of keys+values appended per token across all layers.
double kv_bytes_per_token(const ModelSpec& model);

// Bytes of model weights resident on an instance.
double weight_bytes(const ModelSpec& model);

// Seconds to prefill a batch of prompts on one instance. Flops are additive
// over prompts and include the quadratic attention term.
double prefill_latency(const ModelSpec& model, const InstanceSpec& inst,
                       const EfficiencyFactors& eff,
                       std::span<const std::int64_t> prompt_lengths);

// Seconds for one decode iteration over a batch with the given resident KV
// lengths: max of the HBM read time (weights + KV) and the compute time.
double decode_step_latency(const ModelSpec& model, const InstanceSpec& inst,
                           const EfficiencyFactors& eff,
                           std::span<const std::int64_t> kv_lengths);

// Seconds to move num_bytes between two instances.
double transfer_latency(double num_bytes, const InstanceSpec& inst,
                        const EfficiencyFactors& eff,
                        LinkAggregation mode = LinkAggregation::kStriped);

// Effective inter-instance bandwidth in bytes/s under the aggregation mode.
double link_bandwidth_bytes_per_s(const InstanceSpec& inst,
                                  const EfficiencyFactors& eff,
                                  LinkAggregation mode = LinkAggregation::kStriped);

// Token budget for KV residency on an instance after reserving memory and
// placing the weights. Throws if the weights do not fit.
std::int64_t kv_capacity_tokens(const ModelSpec& model, const InstanceSpec& inst);

enum class Phase { kPrefill, kDecode };

struct CurvePoint {
  std::int64_t length = 0;
  std::int64_t batch = 0;
  double latency_s = 0;
  double tokens_per_s = 0;
};

// Latency / throughput table over (length x batch), one phase at a time.
std::vector<CurvePoint> throughput_curves(const ModelSpec& model,
                                          const InstanceSpec& inst,
                                          const EfficiencyFactors& eff,
                                          std::span<const std::int64_t> lengths,
                                          std::span<const std::int64_t> batch_sizes,
                                          Phase phase);

}  // namespace kvsim
