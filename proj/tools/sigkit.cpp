#include "sigkit/emd.hpp"
#include "sigkit/errors.hpp"
#include "sigkit/hilbert.hpp"
#include "sigkit/io.hpp"
#include "sigkit/pipeline.hpp"
#include "sigkit/preprocess.hpp"
#include "sigkit/spectral.hpp"
#include "sigkit/wavelet.hpp"
#include "sigkit/wvd.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sigkit;

namespace {

struct TransformArgs {
  std::string input;
  std::string output;
  std::string method;
  Index nfft = 0;
  std::string window = "hann";
  Index seg_len = 256;
  double overlap = 0.5;
  std::string wavelet = "db4";
  int levels = 3;
  std::string scales = "1:64";
  std::string mother = "morlet";
  double sd_threshold = 0.2;
  int max_imfs = 12;
  std::string lag_window = "hamming";
  Index lag_window_len = 0;
};

struct PipelineArgs {
  std::string input;
  std::string output;
  std::string method = "psd";
  std::string wavelet = "db6";
  int level = 3;
  std::string band = "none";
  unsigned threads = 0;
};

struct FilterArgs {
  std::string input;
  std::string output;
  std::string spec;
};

struct GenerateArgs {
  std::string output;
  double fs = 1000.0;
  Index n = 1000;
  std::vector<std::string> tones;
};

// "a:b" -> a, a+1, ..., b
std::vector<double> parse_scales(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("scales must look like first:last");
  const double first = parse_number(text.substr(0, colon));
  const double last = parse_number(text.substr(colon + 1));
  if (!(first > 0.0 && last >= first)) throw InvalidArgument("scales need 0 < first <= last");
  std::vector<double> scales;
  for (double a = first; a <= last + 1e-9; a += 1.0) scales.push_back(a);
  return scales;
}

// A tone as amp,freq[,phase[,start[,length]]]
ToneSpec parse_tone(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) parts.push_back(parse_number(cell));
  if (parts.size() < 2 || parts.size() > 5) throw InvalidArgument("tone must be amp,freq[,phase[,start[,length]]]");
  ToneSpec t;
  t.amplitude = parts[0];
  t.frequency = parts[1];
  if (parts.size() > 2) t.phase = parts[2];
  if (parts.size() > 3) t.start = static_cast<Index>(parts[3]);
  if (parts.size() > 4) t.length = static_cast<Index>(parts[4]);
  return t;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw InvalidArgument("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void run_transform(const TransformArgs& a) {
  const Signal x = read_signal_csv(std::filesystem::path(a.input));
  Output out(a.output);
  std::ostream& os = out.stream();
  const Index nfft = a.nfft > 0 ? a.nfft : x.size();
  const auto& m = a.method;
  if (m == "fft") {
    write_amplitude_csv(os, amplitude_spectrum(x, nfft));
  } else if (m == "stft") {
    const Index nf = a.nfft > 0 ? a.nfft : a.seg_len;
    write_tf_csv(os, stft(x, parse_window(a.window), a.seg_len, a.overlap, nf));
  } else if (m == "psd-periodogram") {
    write_psd_csv(os, periodogram(x, nfft));
  } else if (m == "psd-welch") {
    const Index nf = a.nfft > 0 ? a.nfft : a.seg_len;
    write_psd_csv(os, welch(x, parse_window(a.window), a.seg_len, a.overlap, nf));
  } else if (m == "hilbert") {
    write_hilbert_csv(os, analytic_signal(x));
  } else if (m == "dwt") {
    os << to_json(dwt(x, a.wavelet, a.levels)) << '\n';
  } else if (m == "swt") {
    os << to_json(swt(x, a.wavelet, a.levels)) << '\n';
  } else if (m == "wpt") {
    os << to_json(wpt(x, a.wavelet, a.levels)) << '\n';
  } else if (m == "cwt") {
    const auto scales = parse_scales(a.scales);
    write_tf_csv(os, cwt(x, parse_cwt_mother(a.mother), scales));
  } else if (m == "emd" || m == "hht") {
    SiftConfig cfg;
    cfg.sd_threshold = a.sd_threshold;
    cfg.max_imfs = a.max_imfs;
    if (m == "emd")
      write_imf_csv(os, emd(x, cfg));
    else
      write_tf_csv(os, hht(x, cfg).map);
  } else if (m == "wvd") {
    write_tf_csv(os, wvd(x));
  } else if (m == "pwvd") {
    LagWindow lw = default_lag_window(x.size());
    lw.kind = parse_window(a.lag_window);
    if (a.lag_window_len > 0) lw.length = a.lag_window_len;
    WvdConfig cfg;
    cfg.smoothing_window = lw;
    write_tf_csv(os, pwvd(x, cfg));
  } else {
    throw InvalidArgument("unknown transform method '" + m + "'");
  }
}

void run_filter(const FilterArgs& a) {
  std::string text = a.spec;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InvalidArgument("cannot open filter spec '" + text.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const FilterSpec spec = filter_spec_from_json(text);
  const Signal x = read_signal_csv(std::filesystem::path(a.input));
  Output out(a.output);
  write_signal_csv(out.stream(), apply_filter(x, spec));
}

void run_pipeline(const std::string& which, const PipelineArgs& a) {
  PipelineConfig cfg;
  if (which == "vbcm") {
    cfg = PipelineConfig::vbcm_defaults();
  } else {
    if (a.method != "psd" && a.method != "wpt") throw InvalidArgument("--method must be psd or wpt");
    cfg = PipelineConfig::eeg_defaults(a.method == "psd" ? PipelineTask::eeg_psd : PipelineTask::eeg_wpt);
    cfg.wavelet = a.wavelet;
    cfg.wpt_level = a.level;
    if (a.band != "none") {
      const auto colon = a.band.find(':');
      if (colon == std::string::npos) throw InvalidArgument("--band must be low:high or none");
      FilterSpec f;
      f.kind = FilterKind::bandpass;
      f.low = parse_number(a.band.substr(0, colon));
      f.high = parse_number(a.band.substr(colon + 1));
      if (!(f.low > 0.0 && f.low < f.high)) throw InvalidArgument("--band needs 0 < low < high");
      cfg.filter = f;
    }
  }
  cfg.input_dir = a.input;
  cfg.output = a.output;
  cfg.threads = a.threads;
  if (which == "vbcm")
    run_vbcm(cfg);
  else
    run_eeg(cfg);
}

void run_generate(const GenerateArgs& a) {
  std::vector<ToneSpec> tones;
  for (const auto& t : a.tones) tones.push_back(parse_tone(t));
  Output out(a.output);
  write_signal_csv(out.stream(), generate_composite(tones, a.fs, a.n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigkit: transforms, filters and feature pipelines for 1-D signals"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply one transform to a signal CSV");
  transform->add_option("--input,-i", ta.input, "Signal CSV (fs=<rate> header)")->required();
  transform->add_option("--output,-o", ta.output, "Output file (default stdout)");
  transform->add_option("--method", ta.method)
      ->required()
      ->check(CLI::IsMember({"fft", "stft", "psd-periodogram", "psd-welch", "hilbert", "dwt", "swt", "wpt", "cwt",
                             "emd", "hht", "wvd", "pwvd"}));
  transform->add_option("--nfft", ta.nfft, "FFT length (default: signal or segment length)");
  transform->add_option("--window", ta.window)->check(CLI::IsMember({"rect", "hann", "hamming"}));
  transform->add_option("--seg-len", ta.seg_len);
  transform->add_option("--overlap", ta.overlap, "Fraction in [0,1)");
  transform->add_option("--wavelet", ta.wavelet);
  transform->add_option("--levels", ta.levels);
  transform->add_option("--scales", ta.scales, "first:last, unit step");
  transform->add_option("--mother", ta.mother)->check(CLI::IsMember({"morlet", "ricker"}));
  transform->add_option("--sd-threshold", ta.sd_threshold);
  transform->add_option("--max-imfs", ta.max_imfs);
  transform->add_option("--lag-window", ta.lag_window)->check(CLI::IsMember({"rect", "hann", "hamming"}));
  transform->add_option("--lag-window-len", ta.lag_window_len, "Odd length (default about N/4)");

  FilterArgs fa;
  auto* filter = app.add_subcommand("filter", "Filter a signal CSV");
  filter->add_option("--input,-i", fa.input)->required();
  filter->add_option("--output,-o", fa.output);
  filter->add_option("--filter", fa.spec, "FilterSpec JSON, or @file")->required();

  auto* pipeline = app.add_subcommand("pipeline", "Build a labeled feature table");
  pipeline->require_subcommand(1);
  PipelineArgs va;
  auto* vbcm = pipeline->add_subcommand("vbcm", "Bearing vibration PSD features");
  vbcm->add_option("--input", va.input, "Directory with healthy/ ir/ or/ ir_or/")->required();
  vbcm->add_option("--output", va.output)->required();
  vbcm->add_option("--threads", va.threads);
  PipelineArgs ea;
  auto* eeg = pipeline->add_subcommand("eeg", "EEG PSD or wavelet-packet energy features");
  eeg->add_option("--input", ea.input, "Directory with sets A/ .. E/")->required();
  eeg->add_option("--output", ea.output)->required();
  eeg->add_option("--method", ea.method)->check(CLI::IsMember({"psd", "wpt"}));
  eeg->add_option("--wavelet", ea.wavelet);
  eeg->add_option("--level", ea.level);
  eeg->add_option("--band", ea.band, "low:high or none");
  eeg->add_option("--threads", ea.threads);

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a sum of tones as a signal CSV");
  generate->add_option("--output,-o", ga.output);
  generate->add_option("--fs", ga.fs);
  generate->add_option("--samples,-n", ga.n);
  generate->add_option("--tone", ga.tones, "amp,freq[,phase[,start[,length]]]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*transform) run_transform(ta);
    if (*filter) run_filter(fa);
    if (*vbcm) run_pipeline("vbcm", va);
    if (*eeg) run_pipeline("eeg", ea);
    if (*generate) run_generate(ga);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
