#include "sigkit/io.hpp"

#include "sigkit/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace sigkit {

using nlohmann::json;

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

double parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw InvalidArgument("not a number: '" + std::string(token) + "'");
  return v;
}

Signal read_signal_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  double fs = 0.0;
  bool have_header = false;
  std::vector<double> samples;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    try {
      if (!have_header) {
        if (t.substr(0, 3) != "fs=") throw InvalidArgument("expected 'fs=<rate>' header");
        fs = parse_number(t.substr(3));
        if (!(fs > 0.0) || !std::isfinite(fs)) throw InvalidArgument("sampling rate must be positive and finite");
        have_header = true;
      } else {
        samples.push_back(parse_number(t));
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  if (!have_header) throw ParseError(source, line_no, "missing 'fs=<rate>' header");
  if (samples.empty()) throw ParseError(source, line_no, "no samples");
  return Signal(Eigen::Map<const Vector>(samples.data(), static_cast<Index>(samples.size())), fs);
}

Signal read_signal_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_signal_csv(in, path.string());
}

void write_signal_csv(std::ostream& out, const Signal& x) {
  out << "fs=" << format_number(x.fs()) << '\n';
  for (double v : x.samples()) out << format_number(v) << '\n';
}

void write_signal_csv(const std::filesystem::path& path, const Signal& x) {
  auto out = open_out(path);
  write_signal_csv(out, x);
}

Vector read_plain_samples(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> samples;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    try {
      samples.push_back(parse_number(t));
    } catch (const InvalidArgument& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  if (samples.empty()) throw ParseError(source, line_no, "no samples");
  return Eigen::Map<const Vector>(samples.data(), static_cast<Index>(samples.size()));
}

Vector read_plain_samples(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_plain_samples(in, path.string());
}

void write_amplitude_csv(std::ostream& out, const AmplitudeSpectrum& s) {
  out << "freq,value\n";
  for (Index k = 0; k < s.freqs.size(); ++k)
    out << format_number(s.freqs[k]) << ',' << format_number(s.amplitudes[k]) << '\n';
}

void write_psd_csv(std::ostream& out, const PsdEstimate& psd) {
  out << "freq,value\n";
  for (Index k = 0; k < psd.freqs.size(); ++k)
    out << format_number(psd.freqs[k]) << ',' << format_number(psd.density[k]) << '\n';
}

void write_tf_csv(std::ostream& out, const TimeFrequencyMap& map) {
  const bool scalogram = map.kind == TfKind::scalogram;
  out << (scalogram ? "time,scale," : "time,freq,") << (map.kind == TfKind::hilbert_spectrum ? "energy\n" : "value\n");
  const Vector& rows = scalogram ? map.scales : map.freqs;
  for (Index c = 0; c < map.values.cols(); ++c)
    for (Index r = 0; r < map.values.rows(); ++r)
      out << format_number(map.times[c]) << ',' << format_number(rows[r]) << ','
          << format_number(map.values(r, c)) << '\n';
}

void write_hilbert_csv(std::ostream& out, const AnalyticSignal& a) {
  const Vector env = envelope(a);
  const Vector phase = instantaneous_phase(a);
  const Vector freq = instantaneous_frequency(a);
  out << "time,envelope,phase,frequency\n";
  for (Index i = 0; i < env.size(); ++i)
    out << format_number(static_cast<double>(i) / a.fs) << ',' << format_number(env[i]) << ','
        << format_number(phase[i]) << ',' << format_number(freq[i]) << '\n';
}

void write_imf_csv(std::ostream& out, const ImfSet& set) {
  for (std::size_t i = 0; i < set.imfs.size(); ++i) out << "imf" << (i + 1) << ',';
  out << "residual\n";
  for (Index n = 0; n < set.residual.size(); ++n) {
    for (const auto& imf : set.imfs) out << format_number(imf[n]) << ',';
    out << format_number(set.residual[n]) << '\n';
  }
}

namespace {

json to_array(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Vector from_array(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size()));
}

}  // namespace

std::string to_json(const DwtTree& tree) {
  json j;
  j["type"] = "dwt";
  j["wavelet"] = tree.wavelet;
  j["levels"] = tree.levels;
  j["original_len"] = tree.original_len;
  j["fs"] = tree.fs;
  j["approx"] = to_array(tree.approx);
  j["details"] = json::array();
  for (const auto& d : tree.details) j["details"].push_back(to_array(d));
  return j.dump();
}

std::string to_json(const WptTree& tree) {
  json j;
  j["type"] = "wpt";
  j["wavelet"] = tree.wavelet;
  j["levels"] = tree.levels;
  j["original_len"] = tree.original_len;
  j["fs"] = tree.fs;
  j["level_lengths"] = tree.level_lengths;
  j["leaves"] = json::array();
  for (const auto& l : tree.leaves) j["leaves"].push_back(to_array(l));
  return j.dump();
}

std::string to_json(const SwtCoefficients& coeffs) {
  json j;
  j["type"] = "swt";
  j["wavelet"] = coeffs.wavelet;
  j["levels"] = coeffs.levels;
  j["fs"] = coeffs.fs;
  j["approx"] = to_array(coeffs.approx);
  j["details"] = json::array();
  for (const auto& d : coeffs.details) j["details"].push_back(to_array(d));
  return j.dump();
}

DwtTree dwt_tree_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    DwtTree tree;
    tree.wavelet = j.at("wavelet").get<std::string>();
    tree.levels = j.at("levels").get<int>();
    tree.original_len = j.at("original_len").get<Index>();
    tree.fs = j.value("fs", 1.0);
    tree.approx = from_array(j.at("approx"));
    for (const auto& d : j.at("details")) tree.details.push_back(from_array(d));
    if (static_cast<int>(tree.details.size()) != tree.levels)
      throw InvalidArgument("DWT JSON: detail count does not match levels");
    return tree;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("DWT JSON: ") + e.what());
  }
}

WptTree wpt_tree_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    WptTree tree;
    tree.wavelet = j.at("wavelet").get<std::string>();
    tree.levels = j.at("levels").get<int>();
    tree.original_len = j.at("original_len").get<Index>();
    tree.fs = j.value("fs", 1.0);
    tree.level_lengths = j.at("level_lengths").get<std::vector<Index>>();
    for (const auto& l : j.at("leaves")) tree.leaves.push_back(from_array(l));
    if (tree.leaves.size() != (std::size_t{1} << tree.levels))
      throw InvalidArgument("WPT JSON: leaf count must be 2^levels");
    return tree;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("WPT JSON: ") + e.what());
  }
}

std::string to_json(const FilterSpec& spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  switch (spec.kind) {
    case FilterKind::moving_average:
    case FilterKind::median: j["window"] = spec.window; break;
    case FilterKind::savitzky_golay:
      j["window"] = spec.window;
      j["poly_order"] = spec.poly_order;
      break;
    case FilterKind::bandpass: j["band"] = {spec.low, spec.high}; break;
    case FilterKind::wavelet_threshold:
      j["wavelet"] = spec.wavelet;
      j["level"] = spec.level;
      j["rule"] = "universal";
      j["mode"] = to_string(spec.mode);
      break;
  }
  return j.dump();
}

FilterSpec filter_spec_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    FilterSpec spec;
    spec.kind = parse_filter_kind(j.at("kind").get<std::string>());
    spec.window = j.value("window", spec.window);
    spec.poly_order = j.value("poly_order", spec.poly_order);
    if (j.contains("band")) {
      const auto band = j.at("band").get<std::vector<double>>();
      if (band.size() != 2) throw InvalidArgument("filter JSON: band must be [low, high]");
      spec.low = band[0];
      spec.high = band[1];
    }
    spec.wavelet = j.value("wavelet", spec.wavelet);
    spec.level = j.value("level", spec.level);
    if (j.value("rule", std::string("universal")) != "universal")
      throw InvalidArgument("filter JSON: only the universal threshold rule is supported");
    if (j.contains("mode")) spec.mode = parse_threshold_mode(j.at("mode").get<std::string>());

    const bool windowed = spec.kind == FilterKind::moving_average || spec.kind == FilterKind::median ||
                          spec.kind == FilterKind::savitzky_golay;
    if (windowed && (spec.window < 3 || spec.window % 2 == 0))
      throw InvalidArgument("filter JSON: window must be odd and >= 3");
    if (spec.kind == FilterKind::savitzky_golay && spec.poly_order >= spec.window)
      throw InvalidArgument("filter JSON: poly_order must be smaller than window");
    if (spec.kind == FilterKind::bandpass && !(spec.low > 0.0 && spec.low < spec.high))
      throw InvalidArgument("filter JSON: band must satisfy 0 < low < high");
    return spec;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("filter JSON: ") + e.what());
  }
}

void write_feature_table(std::ostream& out, const FeatureTable& table) {
  for (const auto& name : table.names) out << name << ',';
  out << "label\n";
  for (const auto& row : table.rows) {
    for (double v : row.values) out << format_number(v) << ',';
    out << row.label.value_or("") << '\n';
  }
}

void write_feature_table(const std::filesystem::path& path, const FeatureTable& table) {
  auto out = open_out(path);
  write_feature_table(out, table);
}

FeatureTable read_feature_table(std::istream& in) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  FeatureTable table;
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("<features>", 1, "empty feature table");
  auto header = split(std::string(trim(line)));
  if (header.empty() || header.back() != "label") throw ParseError("<features>", 1, "last column must be 'label'");
  header.pop_back();
  table.names = header;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t(trim(line));
    if (t.empty()) continue;
    auto cells = split(t);
    if (cells.size() != table.names.size() + 1) throw ParseError("<features>", line_no, "wrong column count");
    FeatureVector row;
    row.names = table.names;
    row.values.resize(static_cast<Index>(table.names.size()));
    try {
      for (std::size_t i = 0; i < table.names.size(); ++i) row.values[static_cast<Index>(i)] = parse_number(cells[i]);
    } catch (const InvalidArgument& e) {
      throw ParseError("<features>", line_no, e.what());
    }
    if (!cells.back().empty()) row.label = cells.back();
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace sigkit
