#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spikenet/events.hpp"
#include "spikenet/tensor.hpp"

namespace spikenet {

struct NeuronConfig {
  double tau = 2.0;
  double v_threshold = 1.0;
  double v_reset = 0.0;

  void validate(bool needs_threshold) const;
};

struct ConvSpec {
  int out_ch = 1, kernel = 1, stride = 1, pad = 0;
};

// Which spike stream a recurrent block convolves.
enum class BlockSource { NetworkInput, Spike1, Spike2 };

struct RecurrentSpec {
  BlockSource source = BlockSource::NetworkInput;
  int out_ch = 2, kernel = 1, stride = 1, pad = 0;
  double tau = 2.0;
};

struct ArchSpec {
  int in_ch = 1, in_h = 80, in_w = 80;
  ConvSpec s1{32, 25, 1, 0};
  ConvSpec s2{32, 25, 1, 0};
  ConvSpec s3{32, 25, 7, 0};
  RecurrentSpec r1{BlockSource::NetworkInput, 2, 30, 8, 3, 2.0};
  RecurrentSpec r2{BlockSource::Spike2, 2, 25, 1, 0, 2.0};
  int n_cells = 38;
  NeuronConfig lif{2.0, 1.0, 0.0};

  // Declared neuron counts checked at construction; -1 skips the check.
  long long expect_spike[3] = {-1, -1, -1};
  long long expect_recurrent[2] = {-1, -1};

  static ArchSpec paper();    // 1x80x80 input, Table-1 counts
  static ArchSpec reduced();  // 1x16x16 input, 4-channel layers, 4 cells
};

struct ConvGeom {
  int in_ch = 0, ih = 0, iw = 0;
  int out_ch = 0, kernel = 1, stride = 1, pad = 0;
  int oh = 0, ow = 0;

  std::size_t out_size() const { return static_cast<std::size_t>(out_ch) * oh * ow; }
  std::size_t in_size() const { return static_cast<std::size_t>(in_ch) * ih * iw; }
  std::size_t weight_count() const {
    return static_cast<std::size_t>(out_ch) * in_ch * kernel * kernel;
  }
  // Nominal synapse count: fan-in x output positions (padding not clipped).
  long long connection_count() const {
    return static_cast<long long>(kernel) * kernel * in_ch * out_ch * oh * ow;
  }
};

ConvGeom make_conv_geom(int in_ch, int ih, int iw, const ConvSpec& spec);

// --- Operation counters -----------------------------------------------------

struct LayerOps {
  std::uint64_t neurons = 0;  // output elements
  std::uint64_t spikes = 0;   // spikes emitted (spike layers only)
  std::uint64_t acs = 0;      // synaptic accumulate operations
  std::uint64_t muls = 0;     // multiplications in the synaptic path

  void add(const LayerOps& o) {
    neurons = o.neurons;
    spikes += o.spikes;
    acs += o.acs;
    muls += o.muls;
  }
};

struct StepTrace {
  LayerOps s1, s2, s3, r1, r2, readout;
};

struct WindowTrace {
  std::vector<StepTrace> steps;
  StepTrace totals;

  std::uint64_t synaptic_muls() const {
    return totals.s1.muls + totals.s2.muls + totals.s3.muls + totals.r1.muls +
           totals.r2.muls + totals.readout.muls;
  }
};

struct SynopSummary {
  std::uint64_t acs_s1 = 0, acs_s2 = 0, acs_s3 = 0, acs_r1 = 0, acs_r2 = 0, acs_readout = 0;
  std::uint64_t spikes_s1 = 0, spikes_s2 = 0, spikes_s3 = 0;
  std::uint64_t synaptic_muls = 0;
  std::uint64_t total_acs() const {
    return acs_s1 + acs_s2 + acs_s3 + acs_r1 + acs_r2 + acs_readout;
  }
};

SynopSummary count_synops(const WindowTrace& trace);

// --- Network ----------------------------------------------------------------

// Spikes: production path, binary layer outputs, accumulate-only synapses.
// Membrane: every neuron runs threshold-free and layers pass membrane
// potentials downstream (smooth path used by gradient checks).
enum class OutputMode { Spikes, Membrane };

struct SpikeLayer {
  ConvGeom geom;
  NeuronConfig cfg;
  std::vector<double> w;  // [out_ch][in_ch][k][k]
  Tensor3 v;              // membrane state
};

struct RecurrentBlock {
  RecurrentSpec spec;
  ConvGeom geom;
  std::vector<double> w;
  std::vector<double> gain;  // one per downstream channel
  Tensor3 m;                 // MP_LIF membrane state
  int down_ch = 0, down_h = 0, down_w = 0;
};

struct SrnnNetwork {
  ArchSpec arch;
  SpikeLayer s1, s2, s3;
  RecurrentBlock r1, r2;
  std::vector<double> w_read;  // [n_cells][n_s3]
  std::vector<double> b_read;  // [n_cells]

  Tensor3 f1, f2;  // feedback currents pending injection at the next step
  bool state_ready = false;
  OutputMode mode = OutputMode::Spikes;

  int n_s3() const { return static_cast<int>(s3.geom.out_size()); }
};

SrnnNetwork build_network(const ArchSpec& arch);
void init_weights(SrnnNetwork& net, std::uint64_t seed);
void reset_state(SrnnNetwork& net);

// Per-step intermediates recorded for backpropagation through time.
struct Rollout {
  int T = 0;
  std::vector<std::vector<std::uint8_t>> in_spk, s1_spk, s2_spk, s3_spk;
  std::vector<Tensor3> cur1, cur2, cur3;    // layer input currents
  std::vector<Tensor3> v1, v2, v3;          // pre-reset membrane potentials
  std::vector<Tensor3> o1, o2, o3;          // membrane-mode layer outputs
  std::vector<Tensor3> r1cur, r2cur;        // recurrent conv outputs
  std::vector<Tensor3> m1, m2;              // MP_LIF membranes after update
  std::vector<Tensor3> f1, f2;              // feedback produced at each step
  Tensor3 in_real;                          // membrane-mode input scratch
};

struct ForwardResult {
  std::vector<double> rates;  // softplus readout, one per cell
  WindowTrace trace;
};

ForwardResult forward_window(SrnnNetwork& net, const SpikeTensor& input,
                             Rollout* rollout = nullptr);

// --- Neuron primitives --------------------------------------------------------

// V <- (1 - 1/tau) V + (1/tau) X; spike where V >= threshold; spiked entries
// reset hard to v_reset. spikes is resized to match v.
void lif_step(Tensor3& v, const Tensor3& current, const NeuronConfig& cfg,
              std::vector<std::uint8_t>& spikes);

// Threshold-free variant; the new membrane is the output.
void mplif_step(Tensor3& v, const Tensor3& current, double tau);

// --- Convolution kernels ------------------------------------------------------

// Gather-accumulate over active input spikes; no multiplication executed.
// acs, when given, is incremented by the number of accumulate ops.
void spike_conv(const std::uint8_t* in, const ConvGeom& g, const double* w, double* out,
                std::uint64_t* acs = nullptr);

// Dense real-input convolution (membrane mode and reference paths).
void dense_conv(const double* in, const ConvGeom& g, const double* w, double* out,
                std::uint64_t* macs = nullptr);

// Serial twin of spike_conv kept as the comparison baseline for tests and the
// kernel benchmark.
void spike_conv_serial(const std::uint8_t* in, const ConvGeom& g, const double* w,
                       double* out, std::uint64_t* acs = nullptr);

// din[i] = sum over covering outputs of gout * w
void conv_backward_input(const double* gout, const ConvGeom& g, const double* w,
                         double* din);
// dw accumulated in place: dw += dconv/dw with binary or real input.
void conv_backward_weights_spike(const double* gout, const ConvGeom& g,
                                 const std::uint8_t* in, double* dw);
void conv_backward_weights_dense(const double* gout, const ConvGeom& g, const double* in,
                                 double* dw);

// --- Checkpoints ---------------------------------------------------------------

// Binary little-endian f64 parameter blob at `path` plus a JSON sidecar
// `path + ".json"` describing the architecture and array layout.
void save_checkpoint(const SrnnNetwork& net, const std::string& path);
SrnnNetwork load_checkpoint(const std::string& path);

struct ParamView {
  std::string name;
  double* data;
  std::size_t size;
};

std::vector<ParamView> parameters(SrnnNetwork& net);

}  // namespace spikenet
