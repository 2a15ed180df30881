#include "spikenet/events.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "spikenet/pgm.hpp"

namespace spikenet {

namespace {

constexpr char kMagic[4] = {'S', 'P', 'K', '1'};
constexpr std::size_t kHeaderBytes = 12;
constexpr std::size_t kRecordBytes = 16;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

std::uint16_t get_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

void EventStream::validate() const {
  std::uint64_t prev_t = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const DvsEvent& e = events[i];
    if (e.x >= width || e.y >= height)
      throw OutOfBoundsEvent(i, "pixel (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                                    ") outside " + std::to_string(width) + "x" +
                                    std::to_string(height));
    if (e.polarity != 1 && e.polarity != -1)
      throw OutOfBoundsEvent(i, "polarity " + std::to_string(e.polarity));
    if (i > 0 && e.t < prev_t) throw NonMonotoneTimestamp(i);
    prev_t = e.t;
  }
  if (!events.empty() && duration_us < events.back().t)
    throw Error("EventStream duration shorter than last event");
}

EventStream load_events(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (bytes.size() < kHeaderBytes) throw BadMagic("file shorter than header: " + path);
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw BadMagic(path);
  if (get_u32(bytes.data() + 8) != 0) throw BadMagic("nonzero reserved field in " + path);

  EventStream stream;
  stream.width = get_u16(bytes.data() + 4);
  stream.height = get_u16(bytes.data() + 6);

  const std::size_t body = bytes.size() - kHeaderBytes;
  if (body % kRecordBytes != 0)
    throw TruncatedRecord(path + ": " + std::to_string(body % kRecordBytes) +
                          " trailing bytes");
  const std::size_t n = body / kRecordBytes;
  stream.events.reserve(n);
  std::uint64_t prev_t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* rec = bytes.data() + kHeaderBytes + i * kRecordBytes;
    DvsEvent e;
    e.t = get_u64(rec);
    e.x = get_u16(rec + 8);
    e.y = get_u16(rec + 10);
    e.polarity = static_cast<std::int8_t>(rec[12]);
    if (e.x >= stream.width || e.y >= stream.height)
      throw OutOfBoundsEvent(i, "pixel (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                                    ") outside " + std::to_string(stream.width) + "x" +
                                    std::to_string(stream.height));
    if (e.polarity != 1 && e.polarity != -1)
      throw OutOfBoundsEvent(i, "polarity " + std::to_string(e.polarity));
    if (i > 0 && e.t < prev_t) throw NonMonotoneTimestamp(i);
    prev_t = e.t;
    stream.events.push_back(e);
  }
  stream.duration_us = stream.events.empty() ? 0 : stream.events.back().t;
  return stream;
}

void save_events(const EventStream& stream, const std::string& path) {
  stream.validate();
  std::vector<std::uint8_t> bytes;
  bytes.reserve(kHeaderBytes + stream.events.size() * kRecordBytes);
  bytes.insert(bytes.end(), kMagic, kMagic + 4);
  put_u16(bytes, stream.width);
  put_u16(bytes, stream.height);
  put_u32(bytes, 0);
  for (const DvsEvent& e : stream.events) {
    put_u64(bytes, e.t);
    put_u16(bytes, e.x);
    put_u16(bytes, e.y);
    bytes.push_back(static_cast<std::uint8_t>(e.polarity));
    bytes.push_back(0);
    bytes.push_back(0);
    bytes.push_back(0);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoFailure("short write to " + path);
}

EventStream denoise(const EventStream& stream, int neighborhood_radius,
                    std::uint64_t support_window_us) {
  if (neighborhood_radius < 1) throw Error("denoise: radius must be >= 1");
  if (support_window_us == 0) throw Error("denoise: support window must be positive");

  EventStream out;
  out.width = stream.width;
  out.height = stream.height;
  out.duration_us = stream.duration_us;
  if (stream.events.empty()) return out;

  // last_seen[y][x] = timestamp of the most recent event at that pixel, from
  // the raw input, so dropped events still provide support.
  constexpr std::int64_t kNever = -1;
  std::vector<std::int64_t> last_seen(
      static_cast<std::size_t>(stream.width) * stream.height, kNever);

  const int r = neighborhood_radius;
  for (const DvsEvent& e : stream.events) {
    bool supported = false;
    for (int dy = -r; dy <= r && !supported; ++dy) {
      const int ny = static_cast<int>(e.y) + dy;
      if (ny < 0 || ny >= stream.height) continue;
      for (int dx = -r; dx <= r; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int nx = static_cast<int>(e.x) + dx;
        if (nx < 0 || nx >= stream.width) continue;
        const std::int64_t seen = last_seen[static_cast<std::size_t>(ny) * stream.width + nx];
        if (seen != kNever && e.t - static_cast<std::uint64_t>(seen) <= support_window_us) {
          supported = true;
          break;
        }
      }
    }
    if (supported) out.events.push_back(e);
    last_seen[static_cast<std::size_t>(e.y) * stream.width + e.x] =
        static_cast<std::int64_t>(e.t);
  }
  return out;
}

EventStream downsample(const EventStream& stream, std::uint16_t target_w,
                       std::uint16_t target_h) {
  if (target_w == 0 || target_h == 0)
    throw InvalidTarget("zero target dimension");
  if (target_w > stream.width || target_h > stream.height)
    throw InvalidTarget("target larger than source geometry");

  // Largest centered region whose aspect ratio equals target_w : target_h.
  std::uint32_t crop_w, crop_h;
  if (static_cast<std::uint64_t>(stream.width) * target_h >=
      static_cast<std::uint64_t>(stream.height) * target_w) {
    crop_h = stream.height;
    crop_w = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(stream.height) * target_w / target_h);
  } else {
    crop_w = stream.width;
    crop_h = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(stream.width) * target_h / target_w);
  }
  const std::uint32_t off_x = (stream.width - crop_w) / 2;
  const std::uint32_t off_y = (stream.height - crop_h) / 2;

  EventStream out;
  out.width = target_w;
  out.height = target_h;
  out.duration_us = stream.duration_us;

  // Collision collapse: first event at a given (t, x', y') wins.
  constexpr std::int64_t kNever = -1;
  std::vector<std::int64_t> seen_at(static_cast<std::size_t>(target_w) * target_h, kNever);

  for (const DvsEvent& e : stream.events) {
    if (e.x < off_x || e.y < off_y) continue;
    const std::uint32_t cx = e.x - off_x;
    const std::uint32_t cy = e.y - off_y;
    if (cx >= crop_w || cy >= crop_h) continue;
    DvsEvent m = e;
    m.x = static_cast<std::uint16_t>(static_cast<std::uint64_t>(cx) * target_w / crop_w);
    m.y = static_cast<std::uint16_t>(static_cast<std::uint64_t>(cy) * target_h / crop_h);
    std::int64_t& stamp = seen_at[static_cast<std::size_t>(m.y) * target_w + m.x];
    if (stamp != kNever && stamp == static_cast<std::int64_t>(m.t)) continue;
    stamp = static_cast<std::int64_t>(m.t);
    out.events.push_back(m);
  }
  return out;
}

SpikeTensor window(const EventStream& stream, double window_ms, int steps,
                   std::uint64_t start_us) {
  if (window_ms <= 0.0 || steps <= 0) throw Error("window: nonpositive window or steps");
  const double window_us = window_ms * 1000.0;
  const double span_us = window_us * steps;
  if (span_us > static_cast<double>(stream.duration_us - std::min<std::uint64_t>(
                                        start_us, stream.duration_us)) +
                    window_us)
    throw WindowTooLong(std::to_string(steps) + " x " + std::to_string(window_ms) +
                        " ms exceeds stream duration");

  SpikeTensor tensor;
  tensor.steps = steps;
  tensor.channels = 1;
  tensor.height = stream.height;
  tensor.width = stream.width;
  tensor.window_ms = window_ms;
  tensor.values.assign(
      static_cast<std::size_t>(steps) * stream.height * stream.width, 0);

  for (const DvsEvent& e : stream.events) {
    if (e.t < start_us) continue;
    const double rel = static_cast<double>(e.t - start_us);
    if (rel >= span_us) break;
    const int step = static_cast<int>(rel / window_us);
    if (step >= steps) break;
    tensor.set(step, 0, e.y, e.x, 1);
  }
  return tensor;
}

std::vector<std::uint8_t> to_binary_frame(const SpikeTensor& tensor, int step) {
  if (step < 0 || step >= tensor.steps)
    throw IndexOutOfRange("step " + std::to_string(step) + " of " +
                          std::to_string(tensor.steps));
  std::vector<std::uint8_t> frame(
      static_cast<std::size_t>(tensor.height) * tensor.width, 0);
  for (int c = 0; c < tensor.channels; ++c)
    for (int y = 0; y < tensor.height; ++y)
      for (int x = 0; x < tensor.width; ++x)
        if (tensor.at(step, c, y, x)) frame[static_cast<std::size_t>(y) * tensor.width + x] = 1;
  return frame;
}

void save_frame_pgm(const SpikeTensor& tensor, int step, const std::string& path) {
  std::vector<std::uint8_t> frame = to_binary_frame(tensor, step);
  for (std::uint8_t& p : frame) p = p ? 255 : 0;
  write_pgm(path, frame.data(), tensor.width, tensor.height);
}

}  // namespace spikenet
