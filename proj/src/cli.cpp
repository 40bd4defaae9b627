#include "spikegate/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spikegate/analysis.hpp"
#include "spikegate/core.hpp"
#include "spikegate/fm.hpp"
#include "spikegate/format.hpp"
#include "spikegate/gates.hpp"
#include "spikegate/ingest.hpp"
#include "spikegate/simulate.hpp"
#include "spikegate/stats.hpp"
#include "spikegate/svg.hpp"


namespace spikegate::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

/// Bad invocation: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_usage_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownProfile:
    case ErrorCode::MissingInputPair:
    case ErrorCode::LengthMismatch:
    case ErrorCode::TooFewInputs:
    case ErrorCode::NyquistViolation:
    case ErrorCode::InvalidParams:
    case ErrorCode::InvalidProfile:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// File helpers

std::string read_file(const std::string& path) {
  if (!fs::is_regular_file(path)) throw UsageError("input file not found: " + path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

template <typename F>
auto with_file_context(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message(), e.row());
  }
}

/// A small numeric CSV: header plus columns.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  [[nodiscard]] const std::vector<double>& column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return columns[i];
    }
    throw std::runtime_error("missing column " + name);
  }
};

Table parse_table(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  long row = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (!have_header) {
      t.header = fields;
      t.columns.resize(fields.size());
      have_header = true;
      continue;
    }
    ++row;
    if (fields.size() != t.header.size()) throw Error(ErrorCode::MalformedRow, "wrong field count", row);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(fields[i].c_str(), &end);
      if (fields[i].empty() || *end != '\0' || errno != 0 || !std::isfinite(v)) {
        throw Error(ErrorCode::MalformedRow, "bad number '" + fields[i] + "'", row);
      }
      t.columns[i].push_back(v);
    }
  }
  if (!have_header) throw Error(ErrorCode::EmptyFile, "no header line");
  return t;
}

/// Column `preferred` if present, otherwise the last column.
std::vector<double> read_column(const std::string& path, const std::string& preferred) {
  return with_file_context(path, [&] {
    const Table t = parse_table(read_file(path));
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      if (t.header[i] == preferred) return t.columns[i];
    }
    return t.columns.back();
  });
}

ingest::Recording load_recording(const std::string& path) {
  const std::string text = read_file(path);
  return with_file_context(path, [&] { return ingest::parse_recording(std::string_view(text)); });
}

// ---------------------------------------------------------------------------
// Output formatting

std::string csv(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  out += '\n';
  return out;
}

std::string n9(double v) { return format_sig9(v); }
std::string tfmt(double v) { return format_time(v); }

ordered_json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_sig9(v);
}

std::string dump(const ordered_json& j) { return j.dump(2, ' ', false) + "\n"; }

void render_table_svg(const fs::path& csv_path, const fs::path& svg_path, const std::string& title,
                      const std::string& x_col, const std::vector<std::string>& y_cols, svg::Style style,
                      const std::string& x_label, const std::string& y_label) {
  // Plots are drawn from the CSV already on disk, never from in-memory values.
  const Table t = parse_table(read_file(csv_path.string()));
  svg::Plot plot{title, x_label, y_label, style, {}};
  for (const auto& y : y_cols) plot.series.push_back({y, t.column(x_col), t.column(y)});
  write_file(svg_path, svg::render(plot));
}

void render_histogram_svg(const fs::path& csv_path, const fs::path& svg_path, const std::string& title,
                          const std::string& x_label) {
  const Table t = parse_table(read_file(csv_path.string()));
  auto edges = t.column("lo");
  const auto& hi = t.column("hi");
  if (!hi.empty()) edges.push_back(hi.back());
  svg::Plot plot{title, x_label, "count", svg::Style::Bars, {{"count", edges, t.column("count")}}};
  write_file(svg_path, svg::render(plot));
}

struct DetectOptions {
  analysis::DetectParams params;
  void add_to(CLI::App* cmd) {
    cmd->add_option("--threshold", params.threshold, "Minimum peak value (mV)")->capture_default_str();
    cmd->add_option("--refractory", params.refractory, "Minimum spike spacing (s)")->capture_default_str();
    cmd->add_option("--smooth", params.smooth_window, "Moving-average width (odd, samples)")->capture_default_str();
    cmd->add_flag("--detrend", params.detrend, "Subtract a linear trend first");
  }
};

// ---------------------------------------------------------------------------
// profiles

ordered_json profile_json(const ProteinoidProfile& p) {
  ordered_json j;
  j["name"] = p.name;
  j["period_mean"] = jnum(p.period_mean);
  j["period_std"] = jnum(p.period_std);
  j["amplitude_mean"] = jnum(p.amplitude_mean);
  j["amplitude_std"] = jnum(p.amplitude_std);
  j["fast_period"] = jnum(p.fast_period);
  j["amplitude_published"] = p.amplitude_published;
  j["reference_nll"] = p.reference_nll ? jnum(*p.reference_nll) : ordered_json(nullptr);
  return j;
}

ProteinoidProfile profile_from_json(const std::string& path) {
  const auto j = nlohmann::json::parse(read_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw UsageError(path + ": profile file is not a JSON object");
  ProteinoidProfile p;
  try {
    p.name = j.value("name", std::string("custom"));
    p.period_mean = j.at("period_mean").get<double>();
    p.period_std = j.at("period_std").get<double>();
    p.amplitude_mean = j.at("amplitude_mean").get<double>();
    p.amplitude_std = j.at("amplitude_std").get<double>();
    p.fast_period = j.value("fast_period", 128.0);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  p.validate();
  return p;
}

int cmd_profiles(bool as_json, std::ostream& out) {
  if (as_json) {
    ordered_json arr = ordered_json::array();
    for (const auto& [name, p] : builtin_profiles()) arr.push_back(profile_json(p));
    out << dump(arr);
    return kExitOk;
  }
  out << "name,period_mean_s,period_std_s,amplitude_mean_mV,amplitude_std_mV,fast_period_s\n";
  for (const auto& [name, p] : builtin_profiles()) {
    out << csv({name, n9(p.period_mean), n9(p.period_std), n9(p.amplitude_mean), n9(p.amplitude_std),
                n9(p.fast_period)});
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string profile;
  std::string profile_file;
  std::string schedule;
  double duration = 0.0;
  std::optional<unsigned long long> seed;
  double noise = 0.05;
  simulate::LightPeriodFactors factors;
  double spike_tau = 60.0;
  std::string out;
};

int cmd_simulate(const SimulateArgs& a, std::uint64_t seed, std::ostream& out) {
  if (a.profile.empty() == a.profile_file.empty()) throw UsageError("give exactly one of --profile, --profile-file");
  simulate::SimParams p;
  p.profile = a.profile.empty() ? profile_from_json(a.profile_file) : find_profile(a.profile);
  if (!a.schedule.empty()) {
    const std::string text = read_file(a.schedule);
    p.schedule = with_file_context(a.schedule, [&] { return ingest::parse_schedule(std::string_view(text)); });
  }
  p.duration = a.duration;
  p.seed = seed;
  p.noise_std = a.noise;
  p.light_period_factor = a.factors;
  p.spike_tau = a.spike_tau;
  const auto trace = simulate::synth_proteinoid(p);
  const std::vector<TimeSeries> channels{trace};
  write_file(a.out, ingest::write_recording(channels));
  out << "wrote " << trace.size() << " samples (seed " << seed << ") to " << a.out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string recording;
  DetectOptions detect;
  std::size_t bins = 20;
  double rate_bin = 3600.0;
  std::string out;
  bool plot = false;
};

std::string histogram_csv(const analysis::Histogram& h) {
  std::string s = "lo,hi,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    s += csv({n9(h.edges[i]), n9(h.edges[i + 1]), std::to_string(h.counts[i])});
  }
  return s;
}

void analyze_channel(const TimeSeries& ts, const std::string& name, const AnalyzeArgs& a, const fs::path& dir,
                     std::ostream& out) {
  const auto train = analysis::detect_spikes(ts, a.detect.params);
  const auto per = analysis::periods(train);

  std::string spikes_csv = "time_s,amplitude_mV\n";
  std::vector<double> amps;
  for (const auto& s : train.spikes()) {
    spikes_csv += csv({tfmt(s.time), n9(s.amplitude)});
    amps.push_back(s.amplitude);
  }
  write_file(dir / "spikes.csv", spikes_csv);

  std::string periods_csv = "period_s\n";
  for (double p : per) periods_csv += n9(p) + "\n";
  write_file(dir / "periods.csv", periods_csv);

  write_file(dir / "histogram.csv", histogram_csv(analysis::histogram(per, analysis::auto_edges(per, a.bins))));
  write_file(dir / "amplitude_histogram.csv",
             histogram_csv(analysis::histogram(amps, analysis::auto_edges(amps, a.bins))));

  ordered_json q;
  if (per.empty()) {
    q["q25"] = nullptr;
    q["median"] = nullptr;
    q["q75"] = nullptr;
  } else {
    const auto qs = analysis::quartiles(per);
    q["q25"] = jnum(qs.q25);
    q["median"] = jnum(qs.median);
    q["q75"] = jnum(qs.q75);
  }
  q["n"] = per.size();
  write_file(dir / "quartiles.json", dump(q));

  std::string fft_csv = "frequency_hz,magnitude\n";
  std::optional<double> dominant;
  if (ts.size() >= 2) {
    const auto spec = analysis::fft_spectrum(ts);
    for (std::size_t k = 0; k < spec.frequencies.size(); ++k) {
      fft_csv += csv({n9(spec.frequencies[k]), n9(spec.magnitudes[k])});
    }
    try {
      dominant = analysis::dominant_frequency(ts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoPeak) throw;
    }
  }
  write_file(dir / "fft.csv", fft_csv);

  std::string rates_csv = "center_s,width_s,count,rate_hz\n";
  const double t_end = ts.t0() + static_cast<double>(ts.size()) * ts.dt();
  if (!ts.empty()) {
    for (const auto& b : analysis::binned_rate(train, ts.t0(), t_end, a.rate_bin)) {
      rates_csv += csv({n9(b.center), n9(b.width), std::to_string(b.count), n9(b.rate)});
    }
  }
  write_file(dir / "rates.csv", rates_csv);

  ordered_json summary;
  summary["channel"] = name;
  summary["samples"] = ts.size();
  summary["spikes"] = train.size();
  summary["mean_period_s"] = per.empty() ? ordered_json(nullptr) : jnum(stats::mean(per));
  summary["dominant_frequency_hz"] = dominant ? jnum(*dominant) : ordered_json(nullptr);
  summary["mean_firing_rate_hz"] =
      ts.empty() ? ordered_json(nullptr) : jnum(analysis::mean_firing_rate(train, ts.t0(), t_end - ts.t0()));
  write_file(dir / "summary.json", dump(summary));

  if (a.plot) {
    render_table_svg(dir / "spikes.csv", dir / "spikes.svg", name + " detected spikes", "time_s", {"amplitude_mV"},
                     svg::Style::Points, "time (s)", "amplitude (mV)");
    render_histogram_svg(dir / "histogram.csv", dir / "histogram.svg", name + " periods", "period (s)");
    render_histogram_svg(dir / "amplitude_histogram.csv", dir / "amplitude_histogram.svg", name + " amplitudes",
                         "amplitude (mV)");
    render_table_svg(dir / "fft.csv", dir / "fft.svg", name + " spectrum", "frequency_hz", {"magnitude"},
                     svg::Style::Line, "frequency (Hz)", "magnitude (mV)");
    render_table_svg(dir / "rates.csv", dir / "rates.svg", name + " spike rate", "center_s", {"rate_hz"},
                     svg::Style::Points, "time (s)", "rate (Hz)");
  }
  out << name << ": " << train.size() << " spikes, " << per.size() << " periods\n";
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  if (a.bins == 0) throw UsageError("--bins must be >= 1");
  if (!(a.rate_bin > 0.0)) throw UsageError("--rate-bin must be > 0");
  a.detect.params.validate();
  const auto rec = load_recording(a.recording);
  for (std::size_t c = 0; c < rec.channels.size(); ++c) {
    analyze_channel(rec.channels[c], rec.channel_names[c], a, fs::path(a.out) / rec.channel_names[c], out);
  }
  if (a.plot) {
    const fs::path trace_csv(a.recording);
    for (const auto& name : rec.channel_names) {
      render_table_svg(trace_csv, fs::path(a.out) / name / "trace.svg", name + " potential", "time_s", {name},
                       svg::Style::Line, "time (s)", "potential (mV)");
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gates

std::vector<gates::StimulusTrial> load_trials(const std::string& path) {
  const std::string text = read_file(path);
  return with_file_context(path, [&] {
    std::vector<gates::StimulusTrial> trials;
    std::istringstream in(text);
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      if (line.rfind("onset_s", 0) == 0) continue;
      ++row;
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::MalformedRow, "expected onset_s,input_label", row);
      char* end = nullptr;
      const std::string onset_text = line.substr(0, comma);
      const double onset = std::strtod(onset_text.c_str(), &end);
      if (onset_text.empty() || *end != '\0' || !std::isfinite(onset)) {
        throw Error(ErrorCode::MalformedRow, "bad onset", row);
      }
      std::string label = line.substr(comma + 1);
      while (!label.empty() && label.back() == ' ') label.pop_back();
      while (!label.empty() && label.front() == ' ') label.erase(label.begin());
      auto parsed = gates::parse_input_label(label);
      if (!parsed) throw Error(ErrorCode::MalformedRow, "unknown input label '" + label + "'", row);
      trials.push_back({onset, *parsed});
    }
    return trials;
  });
}

struct GatesArgs {
  std::string recording;
  std::string trials;
  DetectOptions detect;
  double window = gates::kSimultaneityWindow;
  std::size_t channel = 1;
  std::string out;
};

int cmd_gates(const GatesArgs& a, std::ostream& out) {
  if (!(a.window > 0.0)) throw UsageError("--window must be > 0");
  a.detect.params.validate();
  const auto rec = load_recording(a.recording);
  if (a.channel < 1 || a.channel > rec.channels.size()) throw UsageError("--channel out of range");
  const auto trials = load_trials(a.trials);
  const auto train = analysis::detect_spikes(rec.channels[a.channel - 1], a.detect.params);
  const auto report = gates::mine_gate(train, trials, a.window);
  const std::string json = gates::to_json(report) + "\n";
  if (!a.out.empty()) write_file(a.out, json);
  out << json;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// logic

struct LogicArgs {
  std::vector<std::string> periods;
  double threshold = gates::kPeriodThreshold;
  std::string convention = "below_is_1";
  std::string out;
};

int cmd_logic(const LogicArgs& a, std::ostream& out) {
  const auto convention = gates::parse_convention(a.convention);
  if (!convention) throw UsageError("--convention must be below_is_1 or above_is_1");
  std::vector<gates::BitVector> inputs;
  for (const auto& path : a.periods) {
    inputs.push_back(gates::binarize_periods(read_column(path, "period_s"), a.threshold, *convention));
  }
  const auto t = gates::eval_logic(inputs);
  std::string s = "index";
  for (std::size_t k = 0; k < inputs.size(); ++k) s += ",in" + std::to_string(k + 1);
  for (std::size_t k = 0; k < inputs.size(); ++k) s += ",NOT_in" + std::to_string(k + 1);
  s += ",AND,OR,XOR,NAND,NOR,XNOR\n";
  const auto b = [](bool v) { return v ? "1" : "0"; };
  for (std::size_t i = 0; i < t.and_.size(); ++i) {
    s += std::to_string(i);
    for (const auto& in : t.inputs) s += std::string(",") + b(in[i]);
    for (const auto& in : t.nots) s += std::string(",") + b(in[i]);
    for (const auto* col : {&t.and_, &t.or_, &t.xor_, &t.nand, &t.nor, &t.xnor}) s += std::string(",") + b((*col)[i]);
    s += "\n";
  }
  if (a.out.empty()) {
    out << s;
  } else {
    write_file(a.out, s);
    out << "wrote " << t.and_.size() << " rows to " << a.out << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fm

struct FmArgs {
  std::string message;
  std::string periods;
  fm::FmParams params;
  std::size_t hold = 200;
  std::size_t discard = 100;
  std::string out;
  bool plot = false;
};

int cmd_fm(const FmArgs& a, std::ostream& out) {
  if (a.message.empty() == a.periods.empty()) throw UsageError("give exactly one of --message, --periods");
  if (a.hold == 0) throw UsageError("--hold must be >= 1");
  if (auto err = fm::nyquist_ok(a.params)) throw *err;

  std::vector<double> message;
  std::optional<fm::AffineMap> map;
  if (!a.message.empty()) {
    message = read_column(a.message, "m");
  } else {
    const auto per = read_column(a.periods, "period_s");
    if (per.empty()) throw Error(ErrorCode::EmptyMessage, a.periods + ": no periods");
    map = fm::minmax_to_unit(per);
    std::vector<double> unit;
    for (double v : per) unit.push_back(map->apply(v));
    message = fm::hold(unit, a.hold);
  }
  const auto mod = fm::fm_modulate(message, a.params);
  const auto est = fm::fm_demodulate(mod.samples, a.params);
  const double fs_hz = a.params.sample_rate_hz;

  const fs::path dir(a.out);
  std::string mod_csv = "t_s,signal\n";
  std::string dem_csv = "t_s,message,estimate\n";
  for (std::size_t i = 0; i < mod.samples.size(); ++i) {
    const double t = static_cast<double>(i) / fs_hz;
    mod_csv += csv({tfmt(t), n9(mod.samples[i])});
    dem_csv += csv({tfmt(t), n9(std::clamp(message[i], -1.0, 1.0)), n9(est[i])});
  }
  write_file(dir / "modulated.csv", mod_csv);
  write_file(dir / "demodulated.csv", dem_csv);

  // Edge samples carry the Hilbert-transform and filter transients.
  std::vector<double> interior_est;
  std::vector<double> interior_msg;
  for (std::size_t i = a.discard; i + a.discard < est.size(); ++i) {
    interior_est.push_back(est[i]);
    interior_msg.push_back(std::clamp(message[i], -1.0, 1.0));
  }
  ordered_json j;
  if (interior_est.size() >= 2) {
    const double corr = stats::correlation(interior_msg, interior_est);
    ordered_json fit_json = nullptr;
    try {
      const auto fit = stats::fit_gaussian(interior_est);
      fit_json = ordered_json{{"mu", jnum(fit.mu)}, {"sigma", jnum(fit.sigma)}, {"nll", jnum(fit.nll)}, {"n", fit.n}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateData) throw;
    }
    j["fit"] = fit_json;
    j["correlation"] = jnum(corr);
    out << "round-trip correlation: " << format_sig9(round_sig9(corr)) << "\n";
  } else {
    j["fit"] = nullptr;
    j["correlation"] = nullptr;
    out << "round-trip correlation: n/a (message shorter than 2*discard)\n";
  }
  j["samples"] = message.size();
  j["discarded_edge_samples"] = a.discard;
  j["clipped"] = mod.clipped;
  j["carrier_hz"] = jnum(a.params.carrier_hz);
  j["deviation_hz"] = jnum(a.params.deviation_hz);
  j["sample_rate_hz"] = jnum(fs_hz);
  j["normalization"] = map ? ordered_json{{"scale", jnum(map->scale)}, {"offset", jnum(map->offset)}}
                           : ordered_json(nullptr);
  j["reference"] = ordered_json{{"mu", -0.0008}, {"sigma", 0.7076}, {"note", "published fit, metadata only"}};
  write_file(dir / "pdf-fit.json", dump(j));

  if (a.plot) {
    render_table_svg(dir / "demodulated.csv", dir / "demodulated.svg", "FM round trip", "t_s", {"message", "estimate"},
                     svg::Style::Line, "time (s)", "message");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// phase / pendulum

struct PhaseArgs {
  std::string recording;
  std::size_t channel = 1;
  std::size_t smooth = 5;
  std::string out;
};

int cmd_phase(const PhaseArgs& a, std::ostream& out) {
  if (a.smooth < 1 || a.smooth % 2 == 0) throw UsageError("--smooth must be odd and >= 1");
  const auto rec = load_recording(a.recording);
  if (a.channel < 1 || a.channel > rec.channels.size()) throw UsageError("--channel out of range");
  const auto& ts = rec.channels[a.channel - 1];
  const auto portrait = analysis::phase_portrait(ts, a.smooth);
  const auto jumps = analysis::phase_jumps(portrait);

  const fs::path dir(a.out);
  std::string s = "t_s,x_mV,v_mV_per_s\n";
  for (std::size_t i = 0; i < portrait.points.size(); ++i) {
    s += csv({tfmt(ts.time_at(i)), n9(portrait.points[i].x), n9(portrait.points[i].v)});
  }
  write_file(dir / "portrait.csv", s);
  ordered_json j;
  j["channel"] = rec.channel_names[a.channel - 1];
  j["points"] = portrait.points.size();
  j["max_step"] = jnum(jumps.max_step);
  j["median_step"] = jnum(jumps.median_step);
  j["jump_ratio"] = jnum(jumps.ratio);
  write_file(dir / "phase.json", dump(j));
  render_table_svg(dir / "portrait.csv", dir / "portrait.svg", "phase portrait", "x_mV", {"v_mV_per_s"},
                   svg::Style::Line, "potential (mV)", "dV/dt (mV/s)");
  out << "jump ratio (max/median step): " << format_sig9(round_sig9(jumps.ratio)) << "\n";
  return kExitOk;
}

struct PendulumArgs {
  simulate::PendulumParams params{1.0, 0.0, 1.0, 0.0, 0.01, 10000};
  std::string out;
};

int cmd_pendulum(const PendulumArgs& a, std::ostream& out) {
  const auto trace = simulate::pendulum(a.params);
  const fs::path dir(a.out);
  std::string s = "t_s,x,v\n";
  for (std::size_t i = 0; i < trace.displacement.size(); ++i) {
    s += csv({tfmt(trace.displacement.time_at(i)), n9(trace.displacement[i]), n9(trace.velocity[i])});
  }
  write_file(dir / "pendulum.csv", s);
  render_table_svg(dir / "pendulum.csv", dir / "portrait.svg", "pendulum phase portrait", "x", {"v"},
                   svg::Style::Line, "displacement", "velocity");
  out << "wrote " << trace.displacement.size() << " states to " << (dir / "pendulum.csv").string() << "\n";
  return kExitOk;
}

std::uint64_t resolve_seed(const std::optional<unsigned long long>& flag,
                           const std::map<std::string, std::string>& env) {
  if (flag) return *flag;
  if (auto it = env.find("SPIKEGATE_SEED"); it != env.end()) {
    const std::string& text = it->second;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (text.empty() || *end != '\0' || errno != 0 || text.front() == '-') {
      throw UsageError("SPIKEGATE_SEED must be a non-negative integer");
    }
    return v;
  }
  return kDefaultSeed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env) {
  CLI::App app{"Spike-train analysis, gate mining and FM tools for proteinoid recordings", "spikegate"};
  app.require_subcommand(1);

  bool profiles_json = false;
  auto* profiles = app.add_subcommand("profiles", "List built-in proteinoid profiles");
  profiles->add_flag("--json", profiles_json, "Emit JSON instead of CSV");

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Generate a synthetic recording");
  simulate_cmd->add_option("--profile", sim.profile, "Built-in profile name");
  simulate_cmd->add_option("--profile-file", sim.profile_file, "JSON profile file");
  simulate_cmd->add_option("--schedule", sim.schedule, "Light schedule file");
  simulate_cmd->add_option("--duration", sim.duration, "Duration (s)")->required()->check(CLI::NonNegativeNumber);
  simulate_cmd->add_option("--seed", sim.seed, "RNG seed (overrides SPIKEGATE_SEED)");
  simulate_cmd->add_option("--noise", sim.noise, "Noise std (mV)")->capture_default_str();
  simulate_cmd->add_option("--factor-white", sim.factors.white, "Gap multiplier under white light")->capture_default_str();
  simulate_cmd->add_option("--factor-black", sim.factors.black, "Gap multiplier under black light")->capture_default_str();
  simulate_cmd->add_option("--factor-off", sim.factors.off, "Gap multiplier with no light")->capture_default_str();
  simulate_cmd->add_option("--spike-tau", sim.spike_tau, "Burst decay constant (s)")->capture_default_str();
  simulate_cmd->add_option("--out", sim.out, "Output recording CSV")->required();

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Detect spikes and compute statistics per channel");
  analyze->add_option("--recording", an.recording, "Recording CSV")->required();
  an.detect.add_to(analyze);
  analyze->add_option("--bins", an.bins, "Histogram bins")->capture_default_str();
  analyze->add_option("--rate-bin", an.rate_bin, "Spike-rate bin (s)")->capture_default_str();
  analyze->add_option("--out", an.out, "Output directory")->required();
  analyze->add_flag("--plot", an.plot, "Also write SVG plots");

  GatesArgs ga;
  auto* gates_cmd = app.add_subcommand("gates", "Mine a two-input gate from stimulation trials");
  gates_cmd->add_option("--recording", ga.recording, "Recording CSV")->required();
  gates_cmd->add_option("--trials", ga.trials, "Trials file (onset_s,input_label)")->required();
  ga.detect.add_to(gates_cmd);
  gates_cmd->add_option("--window", ga.window, "Response window (s)")->capture_default_str();
  gates_cmd->add_option("--channel", ga.channel, "1-based channel index")->capture_default_str();
  gates_cmd->add_option("--out", ga.out, "GateReport JSON path");

  LogicArgs lo;
  auto* logic = app.add_subcommand("logic", "Threshold period vectors and evaluate logic gates");
  logic->add_option("--periods", lo.periods, "Periods CSV (repeat for each input)")->required();
  logic->add_option("--threshold", lo.threshold, "Period threshold (s)")->capture_default_str();
  logic->add_option("--convention", lo.convention, "below_is_1 | above_is_1")->capture_default_str();
  logic->add_option("--out", lo.out, "Logic-table CSV path (stdout if omitted)");

  FmArgs fa;
  auto* fm_cmd = app.add_subcommand("fm", "Frequency-modulate a message and demodulate it back");
  fm_cmd->add_option("--message", fa.message, "Message CSV, one sample per row (column m)");
  fm_cmd->add_option("--periods", fa.periods, "Periods CSV, min-max normalized to [-1, 1]");
  fm_cmd->add_option("--carrier", fa.params.carrier_hz, "Carrier (Hz)")->capture_default_str();
  fm_cmd->add_option("--deviation", fa.params.deviation_hz, "Frequency deviation (Hz)")->capture_default_str();
  fm_cmd->add_option("--fs", fa.params.sample_rate_hz, "Sample rate (Hz)")->capture_default_str();
  fm_cmd->add_option("--hold", fa.hold, "Samples per period value")->capture_default_str();
  fm_cmd->add_option("--discard", fa.discard, "Edge samples excluded from fit/correlation")->capture_default_str();
  fm_cmd->add_option("--out", fa.out, "Output directory")->required();
  fm_cmd->add_flag("--plot", fa.plot, "Also write an SVG plot");

  PhaseArgs ph;
  auto* phase = app.add_subcommand("phase", "Phase portrait (potential vs derivative) of a recording");
  phase->add_option("--recording", ph.recording, "Recording CSV")->required();
  phase->add_option("--channel", ph.channel, "1-based channel index")->capture_default_str();
  phase->add_option("--smooth", ph.smooth, "Moving-average width (odd)")->capture_default_str();
  phase->add_option("--out", ph.out, "Output directory")->required();

  PendulumArgs pe;
  auto* pend = app.add_subcommand("pendulum", "Damped pendulum reference portrait");
  pend->add_option("--omega", pe.params.omega, "Natural frequency (rad/s)")->capture_default_str();
  pend->add_option("--zeta", pe.params.zeta, "Damping ratio")->capture_default_str();
  pend->add_option("--theta0", pe.params.theta0, "Initial displacement")->capture_default_str();
  pend->add_option("--v0", pe.params.v0, "Initial velocity")->capture_default_str();
  pend->add_option("--dt", pe.params.dt, "Step (s)")->capture_default_str();
  pend->add_option("--steps", pe.params.n, "Step count")->capture_default_str();
  pend->add_option("--out", pe.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (profiles->parsed()) return cmd_profiles(profiles_json, out);
    if (simulate_cmd->parsed()) return cmd_simulate(sim, resolve_seed(sim.seed, env), out);
    if (analyze->parsed()) return cmd_analyze(an, out);
    if (gates_cmd->parsed()) return cmd_gates(ga, out);
    if (logic->parsed()) return cmd_logic(lo, out);
    if (fm_cmd->parsed()) return cmd_fm(fa, out);
    if (phase->parsed()) return cmd_phase(ph, out);
    if (pend->parsed()) return cmd_pendulum(pe, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_code(e.code()) ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> env;
  if (const char* seed = std::getenv("SPIKEGATE_SEED")) env["SPIKEGATE_SEED"] = seed;
  return run(argc, argv, out, err, env);
}

}  // namespace spikegate::cli
