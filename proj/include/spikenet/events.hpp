#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spikenet/errors.hpp"

namespace spikenet {

// One sensor event. Timestamps are microseconds from stream start.
struct DvsEvent {
  std::uint64_t t = 0;
  std::uint16_t x = 0, y = 0;
  std::int8_t polarity = 1;  // +1 ON, -1 OFF

  bool operator==(const DvsEvent&) const = default;
};

struct EventStream {
  std::uint16_t width = 0, height = 0;
  std::uint64_t duration_us = 0;  // >= t of last event
  std::vector<DvsEvent> events;   // non-decreasing t

  // Throws on any invariant violation (bounds, polarity, ordering, duration).
  void validate() const;
};

// Binary [T x C x H x W] spike occupancy over fixed time windows.
struct SpikeTensor {
  int steps = 0, channels = 1, height = 0, width = 0;
  double window_ms = 33.0;
  std::vector<std::uint8_t> values;

  std::size_t index(int t, int c, int y, int x) const {
    return ((static_cast<std::size_t>(t) * channels + c) * height + y) * width + x;
  }
  std::uint8_t at(int t, int c, int y, int x) const { return values[index(t, c, y, x)]; }
  void set(int t, int c, int y, int x, std::uint8_t v) { values[index(t, c, y, x)] = v; }
  const std::uint8_t* step_data(int t) const {
    return values.data() + static_cast<std::size_t>(t) * channels * height * width;
  }
};

// File codec. Little-endian layout:
//   header: "SPK1", u16 width, u16 height, u32 reserved(=0)   (12 bytes)
//   record: u64 t_us, u16 x, u16 y, i8 polarity, 3 pad bytes  (16 bytes)
// The header carries no duration, so load derives duration_us from the last
// event (0 for an empty body).
EventStream load_events(const std::string& path);
void save_events(const EventStream& stream, const std::string& path);

// Background-activity filter: an event survives iff at least one event
// occurred within Chebyshev distance <= radius of it (its own pixel excluded)
// no more than support_window_us earlier. All input events count as evidence,
// including ones the filter drops.
EventStream denoise(const EventStream& stream, int neighborhood_radius,
                    std::uint64_t support_window_us);

// Center-crop to the largest centered region with the target aspect ratio,
// then floor-rescale coordinates. Events colliding at the same (t, x', y')
// collapse to the first occurrence.
EventStream downsample(const EventStream& stream, std::uint16_t target_w,
                       std::uint16_t target_h);

// Bin [start_us, start_us + steps*window) into a binary spike tensor
// (both polarities merged into channel 0).
SpikeTensor window(const EventStream& stream, double window_ms, int steps,
                   std::uint64_t start_us = 0);

// H*W slice of one step, values 0/1.
std::vector<std::uint8_t> to_binary_frame(const SpikeTensor& tensor, int step);

// PGM P5 export of one step (spikes rendered as 255).
void save_frame_pgm(const SpikeTensor& tensor, int step, const std::string& path);

}  // namespace spikenet
