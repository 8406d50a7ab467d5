#include "sigkit/core.hpp"

#include "sigkit/errors.hpp"

#include <cmath>
#include <string>

namespace sigkit {

Signal::Signal(Vector samples, double fs) : samples_(std::move(samples)), fs_(fs) {
  if (!(fs_ > 0.0) || !std::isfinite(fs_))
    throw InvalidArgument("sampling rate must be positive and finite");
  if (samples_.size() == 0) throw InvalidArgument("signal must be non-empty");
  if (!samples_.allFinite()) throw InvalidArgument("signal contains non-finite samples");
}

namespace {

void check_tone(const ToneSpec& spec, double fs, Index n) {
  if (!(spec.frequency >= 0.0))
    throw InvalidArgument("tone frequency must be non-negative");
  if (spec.frequency >= fs / 2.0)
    throw InvalidArgument("tone frequency " + std::to_string(spec.frequency) +
                          " Hz is not below the Nyquist frequency " + std::to_string(fs / 2.0));
  if (spec.start < 0 || spec.start > n) throw InvalidArgument("tone start outside signal");
  const Index length = spec.length.value_or(n - spec.start);
  if (length < 0 || spec.start + length > n)
    throw InvalidArgument("tone [start, start+length) does not fit in the signal");
}

void add_tone(Vector& out, const ToneSpec& spec, double fs) {
  const Index length = spec.length.value_or(out.size() - spec.start);
  const double omega = 2.0 * kPi * spec.frequency / fs;
  for (Index i = spec.start; i < spec.start + length; ++i)
    out[i] += spec.amplitude * std::sin(omega * static_cast<double>(i) + spec.phase);
}

}  // namespace

Signal generate_sinusoid(const ToneSpec& spec, double fs, Index n) {
  if (!(fs > 0.0)) throw InvalidArgument("sampling rate must be positive");
  if (n < 1) throw InvalidArgument("sample count must be at least 1");
  check_tone(spec, fs, n);
  Vector out = Vector::Zero(n);
  add_tone(out, spec, fs);
  return Signal(std::move(out), fs);
}

Signal generate_composite(std::span<const ToneSpec> specs, double fs, Index n) {
  if (!(fs > 0.0)) throw InvalidArgument("sampling rate must be positive");
  if (n < 1) throw InvalidArgument("sample count must be at least 1");
  for (const auto& spec : specs) check_tone(spec, fs, n);
  Vector out = Vector::Zero(n);
  for (const auto& spec : specs) add_tone(out, spec, fs);
  return Signal(std::move(out), fs);
}

Index segment_hop(Index n_o, double overlap) {
  const auto hop = static_cast<Index>(std::floor(static_cast<double>(n_o) * (1.0 - overlap)));
  return std::max<Index>(1, hop);
}

SegmentSet segment(const Signal& signal, Index n_o, double overlap) {
  if (n_o < 1) throw InvalidArgument("segment length must be at least 1");
  if (n_o > signal.size())
    throw InvalidArgument("segment length " + std::to_string(n_o) + " exceeds signal length " +
                          std::to_string(signal.size()));
  if (!(overlap >= 0.0 && overlap < 1.0)) throw InvalidArgument("overlap must lie in [0, 1)");

  SegmentSet set;
  set.segment_length = n_o;
  set.hop = segment_hop(n_o, overlap);
  set.overlap = overlap;
  set.source_fs = signal.fs();
  for (Index start = 0; start + n_o <= signal.size(); start += set.hop)
    set.segments.emplace_back(signal.samples().segment(start, n_o), signal.fs());
  return set;
}

}  // namespace sigkit
