#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spikenet/events.hpp"

namespace spikenet {

struct Frame {
  int width = 0, height = 0;
  std::vector<std::uint8_t> pixels;  // row-major intensities 0..255

  Frame() = default;
  Frame(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}
  std::uint8_t at(int y, int x) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  void set(int y, int x, std::uint8_t v) { pixels[static_cast<std::size_t>(y) * width + x] = v; }
  bool operator==(const Frame&) const = default;
};

struct FrameSequence {
  double fps = 0.0;
  std::vector<Frame> frames;
};

struct EmulatorConfig {
  double contrast_threshold = 0.2;  // log-intensity units
  double log_eps = 1.0;
  std::uint64_t refractory_us = 100;
};

// Log-intensity threshold model: per pixel, whenever ln(I + eps) moves away
// from the reference by at least theta, emit floor(|dL|/theta) events of the
// crossing's sign with timestamps interpolated linearly across the inter-frame
// interval, then advance the reference by that multiple of theta. Events that
// would violate the per-pixel refractory gap are dropped.
EventStream emulate(const FrameSequence& frames, const EmulatorConfig& cfg);

// White dot on black background orbiting the frame center. Frame k is sampled
// at t = k / fps; frame count is round(duration_s * fps) + 1.
FrameSequence synth_rotating_dot(double radius_px, double orbit_px, double rps,
                                 double duration_s, double fps, int width, int height);

// Deterministic bank of moving-bar / orbiting-dot scenes with pairwise
// distinct motion parameters.
std::vector<FrameSequence> synth_pattern_bank(int n_patterns, int width, int height,
                                              std::uint64_t seed, double duration_s = 3.96,
                                              double fps = 250.0);

// Frame directory I/O (PGM P5, frames sorted by filename).
void save_frames_pgm(const FrameSequence& seq, const std::string& dir);
FrameSequence load_frames_pgm(const std::string& dir, double fps);

}  // namespace spikenet
