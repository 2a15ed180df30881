#include "spikenet/emulator.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "spikenet/mathutil.hpp"
#include "spikenet/pgm.hpp"

namespace fs = std::filesystem;

namespace spikenet {

namespace {

void check_sequence(const FrameSequence& seq) {
  if (seq.frames.size() < 2) throw GeometryMismatch("need at least 2 frames");
  if (seq.fps <= 0.0) throw GeometryMismatch("fps must be positive");
  const int w = seq.frames.front().width;
  const int h = seq.frames.front().height;
  if (w <= 0 || h <= 0) throw GeometryMismatch("empty frame geometry");
  for (const Frame& f : seq.frames)
    if (f.width != w || f.height != h) throw GeometryMismatch("frame geometry varies");
}

}  // namespace

EventStream emulate(const FrameSequence& seq, const EmulatorConfig& cfg) {
  check_sequence(seq);
  if (cfg.contrast_threshold <= 0.0) throw Error("emulate: contrast threshold must be > 0");
  if (cfg.log_eps <= 0.0) throw Error("emulate: log_eps must be > 0");

  const int w = seq.frames.front().width;
  const int h = seq.frames.front().height;
  const std::size_t n_px = static_cast<std::size_t>(w) * h;
  const double frame_us = 1e6 / seq.fps;

  std::vector<double> ref(n_px);
  for (std::size_t p = 0; p < n_px; ++p)
    ref[p] = std::log(seq.frames.front().pixels[p] + cfg.log_eps);
  std::vector<std::int64_t> last_emit(n_px, -1);

  EventStream out;
  out.width = static_cast<std::uint16_t>(w);
  out.height = static_cast<std::uint16_t>(h);
  out.duration_us = static_cast<std::uint64_t>(
      std::llround(frame_us * static_cast<double>(seq.frames.size() - 1)));

  for (std::size_t k = 1; k < seq.frames.size(); ++k) {
    const double t_prev = frame_us * static_cast<double>(k - 1);
    const double t_cur = frame_us * static_cast<double>(k);
    const Frame& frame = seq.frames[k];
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const std::size_t p = static_cast<std::size_t>(y) * w + x;
        const double level = std::log(frame.pixels[p] + cfg.log_eps);
        const double diff = level - ref[p];
        const double mag = std::fabs(diff);
        if (mag < cfg.contrast_threshold) continue;
        const int n = static_cast<int>(mag / cfg.contrast_threshold);
        const std::int8_t pol = diff > 0 ? 1 : -1;
        for (int i = 1; i <= n; ++i) {
          const double frac = (i * cfg.contrast_threshold) / mag;
          const std::int64_t t_us =
              std::llround(t_prev + (t_cur - t_prev) * frac);
          if (last_emit[p] >= 0 &&
              t_us - last_emit[p] < static_cast<std::int64_t>(cfg.refractory_us))
            continue;
          last_emit[p] = t_us;
          DvsEvent e;
          e.t = static_cast<std::uint64_t>(t_us);
          e.x = static_cast<std::uint16_t>(x);
          e.y = static_cast<std::uint16_t>(y);
          e.polarity = pol;
          out.events.push_back(e);
        }
        ref[p] += pol * n * cfg.contrast_threshold;
      }
    }
  }

  std::sort(out.events.begin(), out.events.end(),
            [](const DvsEvent& a, const DvsEvent& b) {
              if (a.t != b.t) return a.t < b.t;
              if (a.y != b.y) return a.y < b.y;
              if (a.x != b.x) return a.x < b.x;
              return a.polarity > b.polarity;
            });
  if (!out.events.empty() && out.events.back().t > out.duration_us)
    out.duration_us = out.events.back().t;
  return out;
}

FrameSequence synth_rotating_dot(double radius_px, double orbit_px, double rps,
                                 double duration_s, double fps, int width, int height) {
  if (width <= 0 || height <= 0 || fps <= 0.0 || duration_s <= 0.0 || radius_px <= 0.0)
    throw Error("synth_rotating_dot: nonpositive parameter");
  const double cx = (width - 1) / 2.0;
  const double cy = (height - 1) / 2.0;
  const double reach = orbit_px + radius_px;
  if (cx - reach < 0 || cy - reach < 0 || cx + reach > width - 1 || cy + reach > height - 1)
    throw DotOutOfBounds("orbit " + std::to_string(orbit_px) + " + radius " +
                         std::to_string(radius_px) + " exceeds " + std::to_string(width) +
                         "x" + std::to_string(height));

  const int n_frames = static_cast<int>(std::llround(duration_s * fps)) + 1;
  FrameSequence seq;
  seq.fps = fps;
  seq.frames.reserve(n_frames);
  const double r2 = radius_px * radius_px;
  for (int k = 0; k < n_frames; ++k) {
    const double t = static_cast<double>(k) / fps;
    // Wrap the phase before scaling by 2*pi so whole rotations land exactly
    // on the starting raster.
    const double phase = std::fmod(rps * t, 1.0);
    const double angle = 2.0 * std::numbers::pi * phase;
    const double dx = cx + orbit_px * std::cos(angle);
    const double dy = cy + orbit_px * std::sin(angle);
    Frame f(width, height);
    const int x0 = std::max(0, static_cast<int>(std::floor(dx - radius_px)));
    const int x1 = std::min(width - 1, static_cast<int>(std::ceil(dx + radius_px)));
    const int y0 = std::max(0, static_cast<int>(std::floor(dy - radius_px)));
    const int y1 = std::min(height - 1, static_cast<int>(std::ceil(dy + radius_px)));
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x)
        if ((x - dx) * (x - dx) + (y - dy) * (y - dy) <= r2) f.set(y, x, 255);
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

std::vector<FrameSequence> synth_pattern_bank(int n_patterns, int width, int height,
                                              std::uint64_t seed, double duration_s,
                                              double fps) {
  if (n_patterns < 1) throw Error("synth_pattern_bank: need at least one pattern");
  std::vector<FrameSequence> bank;
  bank.reserve(n_patterns);
  const int n_frames = static_cast<int>(std::llround(duration_s * fps)) + 1;

  for (int i = 0; i < n_patterns; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    const double phase = uniform01(rng);
    // Distinct speeds by construction; jitter only perturbs within a band.
    const double speed = (0.6 + 0.45 * i) * (1.0 + 0.1 * uniform01(rng));
    const int kind = i % 3;

    FrameSequence seq;
    seq.fps = fps;
    seq.frames.reserve(n_frames);
    const int bar_w = 2 + (i % 2);
    for (int k = 0; k < n_frames; ++k) {
      const double t = static_cast<double>(k) / fps;
      Frame f(width, height);
      if (kind == 0) {  // horizontal-moving vertical bar
        const int pos = static_cast<int>(std::floor((phase + speed * t) * width)) % width;
        for (int y = 0; y < height; ++y)
          for (int b = 0; b < bar_w; ++b) f.set(y, (pos + b) % width, 255);
      } else if (kind == 1) {  // vertical-moving horizontal bar
        const int pos = static_cast<int>(std::floor((phase + speed * t) * height)) % height;
        for (int x = 0; x < width; ++x)
          for (int b = 0; b < bar_w; ++b) f.set((pos + b) % height, x, 255);
      } else {  // orbiting dot
        const double cx = (width - 1) / 2.0;
        const double cy = (height - 1) / 2.0;
        const double orbit = std::min(width, height) / 4.0;
        const double radius = std::max(1.5, std::min(width, height) / 8.0);
        const double angle = 2.0 * std::numbers::pi * std::fmod(phase + speed * t, 1.0);
        const double dx = cx + orbit * std::cos(angle);
        const double dy = cy + orbit * std::sin(angle);
        for (int y = 0; y < height; ++y)
          for (int x = 0; x < width; ++x)
            if ((x - dx) * (x - dx) + (y - dy) * (y - dy) <= radius * radius)
              f.set(y, x, 255);
      }
      seq.frames.push_back(std::move(f));
    }
    bank.push_back(std::move(seq));
  }
  return bank;
}

void save_frames_pgm(const FrameSequence& seq, const std::string& dir) {
  fs::create_directories(dir);
  char name[32];
  for (std::size_t k = 0; k < seq.frames.size(); ++k) {
    std::snprintf(name, sizeof(name), "frame_%06zu.pgm", k);
    const Frame& f = seq.frames[k];
    write_pgm((fs::path(dir) / name).string(), f.pixels.data(), f.width, f.height);
  }
}

FrameSequence load_frames_pgm(const std::string& dir, double fps) {
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pgm")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  FrameSequence seq;
  seq.fps = fps;
  for (const fs::path& p : paths) {
    Frame f;
    f.pixels = read_pgm(p.string(), f.width, f.height);
    seq.frames.push_back(std::move(f));
  }
  check_sequence(seq);
  return seq;
}

}  // namespace spikenet
