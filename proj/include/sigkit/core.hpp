#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace sigkit {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXd;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr double kPi = 3.14159265358979323846;

// Uniformly sampled, real-valued, finite, non-empty sequence with its sampling rate.
class Signal {
 public:
  Signal(Vector samples, double fs);

  const Vector& samples() const { return samples_; }
  double fs() const { return fs_; }
  Index size() const { return samples_.size(); }
  double duration() const { return static_cast<double>(samples_.size()) / fs_; }
  double operator[](Index i) const { return samples_[i]; }

 private:
  Vector samples_;
  double fs_;
};

// A sinusoid A*sin(2*pi*f*t + phase) active on [start, start + length).
// An empty length means "until the end of the target signal".
struct ToneSpec {
  double amplitude = 1.0;
  double frequency = 0.0;
  double phase = 0.0;
  Index start = 0;
  std::optional<Index> length;
};

// Tones with frequency >= fs/2 are refused rather than aliased.
Signal generate_sinusoid(const ToneSpec& spec, double fs, Index n);
Signal generate_composite(std::span<const ToneSpec> specs, double fs, Index n);

struct SegmentSet {
  std::vector<Signal> segments;
  Index segment_length = 0;
  Index hop = 0;
  double overlap = 0.0;
  double source_fs = 0.0;

  double segment_duration() const { return static_cast<double>(segment_length) / source_fs; }
};

// Hop is max(1, floor(n_o * (1 - overlap))). A trailing partial window is dropped.
Index segment_hop(Index n_o, double overlap);
SegmentSet segment(const Signal& signal, Index n_o, double overlap = 0.0);

}  // namespace sigkit
