#pragma once

#include "sigkit/features.hpp"
#include "sigkit/preprocess.hpp"
#include "sigkit/spectral.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigkit {

enum class PipelineTask { vbcm, eeg_psd, eeg_wpt };

PipelineTask parse_pipeline_task(std::string_view name);
std::string to_string(PipelineTask task);

struct PipelineConfig {
  PipelineTask task = PipelineTask::vbcm;
  std::filesystem::path input_dir;
  std::filesystem::path output;
  Index n_o = 12800;
  double overlap = 0.0;
  std::optional<FilterSpec> filter;
  WelchParams welch;
  std::string wavelet = "db6";
  int wpt_level = 3;
  std::uint64_t seed = 0;  // reserved, nothing stochastic yet
  unsigned threads = 0;    // 0 = hardware concurrency

  static PipelineConfig vbcm_defaults();
  // psd: Welch Hann 250/166/1024 per 500-sample segment. wpt: db6 level 3.
  static PipelineConfig eeg_defaults(PipelineTask task);
};

inline constexpr double kVbcmFs = 64000.0;
inline constexpr double kEegFs = 173.61;

const std::vector<std::string>& vbcm_classes();
// Bonn set directory -> label.
const std::vector<std::pair<std::string, std::string>>& eeg_sets();

// Build the table in memory; run_* also write it to config.output.
FeatureTable build_vbcm_table(const PipelineConfig& config);
FeatureTable build_eeg_table(const PipelineConfig& config);
FeatureTable run_vbcm(const PipelineConfig& config);
FeatureTable run_eeg(const PipelineConfig& config);

}  // namespace sigkit
