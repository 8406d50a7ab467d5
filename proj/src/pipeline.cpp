#include "sigkit/pipeline.hpp"

#include "sigkit/errors.hpp"
#include "sigkit/io.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace sigkit {

namespace fs = std::filesystem;

PipelineTask parse_pipeline_task(std::string_view name) {
  if (name == "vbcm") return PipelineTask::vbcm;
  if (name == "eeg-psd") return PipelineTask::eeg_psd;
  if (name == "eeg-wpt") return PipelineTask::eeg_wpt;
  throw InvalidArgument("unknown pipeline task '" + std::string(name) + "'");
}

std::string to_string(PipelineTask task) {
  switch (task) {
    case PipelineTask::vbcm: return "vbcm";
    case PipelineTask::eeg_psd: return "eeg-psd";
    case PipelineTask::eeg_wpt: return "eeg-wpt";
  }
  return "?";
}

PipelineConfig PipelineConfig::vbcm_defaults() {
  PipelineConfig c;
  c.task = PipelineTask::vbcm;
  c.n_o = 12800;
  c.welch = {WindowKind::hann, 512, 256, 1024};
  return c;
}

PipelineConfig PipelineConfig::eeg_defaults(PipelineTask task) {
  PipelineConfig c;
  c.task = task;
  c.n_o = 500;
  c.welch = {WindowKind::hann, 250, 166, 1024};
  c.wavelet = "db6";
  c.wpt_level = 3;
  return c;
}

const std::vector<std::string>& vbcm_classes() {
  static const std::vector<std::string> classes = {"healthy", "ir", "or", "ir_or"};
  return classes;
}

const std::vector<std::pair<std::string, std::string>>& eeg_sets() {
  static const std::vector<std::pair<std::string, std::string>> sets = {
      {"A", "normal"}, {"B", "normal"}, {"C", "interictal"}, {"D", "interictal"}, {"E", "ictal"}};
  return sets;
}

namespace {

struct Job {
  fs::path path;
  std::string label;
};

std::vector<fs::path> list_files(const fs::path& dir, std::string_view extension) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto name = entry.path().filename().string();
    if (name.empty() || name.front() == '.') continue;
    if (!extension.empty() && entry.path().extension() != extension) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Runs work(i) for every job, storing results by index so the merge order never depends on scheduling.
template <typename Work>
FeatureTable run_jobs(const std::vector<Job>& jobs, std::vector<std::string> names, unsigned threads,
                      Work work) {
  std::vector<std::vector<FeatureVector>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = work(jobs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  FeatureTable table;
  table.names = std::move(names);
  for (auto& rows : results)
    for (auto& row : rows) table.rows.push_back(std::move(row));
  return table;
}

void check_common(const PipelineConfig& config) {
  if (config.n_o < 1) throw InvalidArgument("segment length must be positive");
  if (!(config.overlap >= 0.0 && config.overlap < 1.0)) throw InvalidArgument("overlap must be in [0, 1)");
  if (!fs::is_directory(config.input_dir))
    throw InvalidArgument("input directory '" + config.input_dir.string() + "' does not exist");
}

void write_output(const PipelineConfig& config, const FeatureTable& table) {
  if (!config.output.empty()) write_feature_table(config.output, table);
}

}  // namespace

FeatureTable build_vbcm_table(const PipelineConfig& config) {
  check_common(config);
  std::vector<Job> jobs;
  for (const auto& label : vbcm_classes()) {
    const auto files = list_files(config.input_dir / label, ".csv");
    if (files.empty()) throw MissingClass(label);
    for (const auto& f : files) jobs.push_back({f, label});
  }
  return run_jobs(jobs, psd_feature_names(), config.threads, [&](const Job& job) {
    const Signal x = read_signal_csv(job.path);
    std::vector<FeatureVector> rows;
    if (x.size() < config.n_o) return rows;
    const Signal filtered = config.filter ? apply_filter(x, *config.filter) : x;
    for (const auto& seg : segment(filtered, config.n_o, config.overlap).segments) {
      FeatureVector f = psd_features(seg, config.welch);
      f.label = job.label;
      rows.push_back(std::move(f));
    }
    return rows;
  });
}

FeatureTable build_eeg_table(const PipelineConfig& config) {
  check_common(config);
  if (config.task == PipelineTask::vbcm) throw InvalidArgument("EEG pipeline needs an eeg-psd or eeg-wpt task");
  if (config.task == PipelineTask::eeg_wpt) wavelet_bank(config.wavelet);
  std::vector<Job> jobs;
  for (const auto& [set, label] : eeg_sets()) {
    const auto files = list_files(config.input_dir / set, "");
    if (files.empty()) throw MissingClass(set);
    for (const auto& f : files) jobs.push_back({f, label});
  }
  const bool wpt = config.task == PipelineTask::eeg_wpt;
  auto names = wpt ? wpt_feature_names(config.wpt_level) : psd_feature_names();
  return run_jobs(jobs, std::move(names), config.threads, [&](const Job& job) {
    const Signal x(read_plain_samples(job.path), kEegFs);
    std::vector<FeatureVector> rows;
    if (x.size() < config.n_o) return rows;
    const Signal filtered = config.filter ? apply_filter(x, *config.filter) : x;
    for (const auto& seg : segment(filtered, config.n_o, config.overlap).segments) {
      FeatureVector f = wpt ? wpt_energy_features(seg, config.wavelet, config.wpt_level)
                            : psd_features(seg, config.welch);
      f.label = job.label;
      rows.push_back(std::move(f));
    }
    return rows;
  });
}

FeatureTable run_vbcm(const PipelineConfig& config) {
  FeatureTable table = build_vbcm_table(config);
  write_output(config, table);
  return table;
}

FeatureTable run_eeg(const PipelineConfig& config) {
  FeatureTable table = build_eeg_table(config);
  write_output(config, table);
  return table;
}

}  // namespace sigkit
