#pragma once

#include "sigkit/core.hpp"
#include "sigkit/emd.hpp"
#include "sigkit/features.hpp"
#include "sigkit/hilbert.hpp"
#include "sigkit/preprocess.hpp"
#include "sigkit/spectral.hpp"
#include "sigkit/wavelet.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sigkit {

// Shortest decimal that parses back to the same double; '.' separator regardless of locale.
std::string format_number(double v);
// Locale-independent parse of a complete token. Throws InvalidArgument on junk.
double parse_number(std::string_view token);

// Signal CSV: `fs=<float>` on the first line, then one sample per line.
Signal read_signal_csv(std::istream& in, const std::string& source = "<stream>");
Signal read_signal_csv(const std::filesystem::path& path);
void write_signal_csv(std::ostream& out, const Signal& x);
void write_signal_csv(const std::filesystem::path& path, const Signal& x);

// One sample per line, no header. Used for Bonn-style EEG text files.
Vector read_plain_samples(std::istream& in, const std::string& source);
Vector read_plain_samples(const std::filesystem::path& path);

void write_amplitude_csv(std::ostream& out, const AmplitudeSpectrum& s);
void write_psd_csv(std::ostream& out, const PsdEstimate& psd);
// (time,freq,value) triplets; scalograms use (time,scale,value).
void write_tf_csv(std::ostream& out, const TimeFrequencyMap& map);
void write_hilbert_csv(std::ostream& out, const AnalyticSignal& a);
// One column per IMF followed by the residual.
void write_imf_csv(std::ostream& out, const ImfSet& set);

std::string to_json(const DwtTree& tree);
std::string to_json(const WptTree& tree);
std::string to_json(const SwtCoefficients& coeffs);
DwtTree dwt_tree_from_json(std::string_view text);
WptTree wpt_tree_from_json(std::string_view text);

std::string to_json(const FilterSpec& spec);
FilterSpec filter_spec_from_json(std::string_view text);

void write_feature_table(std::ostream& out, const FeatureTable& table);
void write_feature_table(const std::filesystem::path& path, const FeatureTable& table);
FeatureTable read_feature_table(std::istream& in);

}  // namespace sigkit
