#include "spikegate/gates.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace spikegate::gates {

std::string_view to_string(InputLabel label) noexcept {
  switch (label) {
    case InputLabel::Pair01: return "01";
    case InputLabel::Pair10: return "10";
    case InputLabel::Pair11: return "11";
    case InputLabel::White: return "white";
    case InputLabel::Black: return "black";
    case InputLabel::BlackWhite: return "black_white";
    case InputLabel::None: return "none";
  }
  return "none";
}

std::optional<InputLabel> parse_input_label(std::string_view text) noexcept {
  if (text == "01") return InputLabel::Pair01;
  if (text == "10") return InputLabel::Pair10;
  if (text == "11") return InputLabel::Pair11;
  if (text == "white") return InputLabel::White;
  if (text == "black") return InputLabel::Black;
  if (text == "black_white") return InputLabel::BlackWhite;
  if (text == "none") return InputLabel::None;
  return std::nullopt;
}

void validate_trials(std::span<const StimulusTrial> trials) {
  for (std::size_t i = 0; i < trials.size(); ++i) {
    if (!std::isfinite(trials[i].onset)) throw Error(ErrorCode::InvalidParams, "non-finite trial onset");
    if (i > 0 && !(trials[i].onset > trials[i - 1].onset)) {
      throw Error(ErrorCode::InvalidParams, "trial onsets must strictly increase");
    }
  }
}

std::vector<double> group_simultaneous(const SpikeTrain& train, double window) {
  if (!(window > 0.0)) throw Error(ErrorCode::InvalidParams, "window must be > 0");
  std::vector<double> events;
  for (const auto& s : train.spikes()) {
    if (events.empty() || !(s.time - events.back() < window)) events.push_back(s.time);
  }
  return events;
}

bool response_bit(std::span<const double> events, const StimulusTrial& trial, double window) {
  return std::any_of(events.begin(), events.end(),
                     [&](double t) { return t >= trial.onset && t < trial.onset + window; });
}

GateClass classify_gate(bool s01, bool s10, bool s11) noexcept {
  const int code = (s01 ? 4 : 0) | (s10 ? 2 : 0) | (s11 ? 1 : 0);
  switch (code) {
    case 0b111: return GateClass::Or;
    case 0b101: return GateClass::SelectY;
    case 0b110: return GateClass::Xor;
    case 0b011: return GateClass::SelectX;
    case 0b100: return GateClass::NotXAndY;
    case 0b010: return GateClass::XAndNotY;
    case 0b001: return GateClass::And;
    default: return GateClass::ConstFalse;
  }
}

ResponseTriple responses_for(GateClass gate) noexcept {
  switch (gate) {
    case GateClass::Or: return {true, true, true};
    case GateClass::SelectY: return {true, false, true};
    case GateClass::Xor: return {true, true, false};
    case GateClass::SelectX: return {false, true, true};
    case GateClass::NotXAndY: return {true, false, false};
    case GateClass::XAndNotY: return {false, true, false};
    case GateClass::And: return {false, false, true};
    case GateClass::ConstFalse: return {false, false, false};
  }
  return {};
}

std::string_view gate_name(GateClass gate) noexcept {
  switch (gate) {
    case GateClass::Or: return "OR";
    case GateClass::SelectY: return "SELECT_Y";
    case GateClass::Xor: return "XOR";
    case GateClass::SelectX: return "SELECT_X";
    case GateClass::NotXAndY: return "NOTX_AND_Y";
    case GateClass::XAndNotY: return "X_AND_NOTY";
    case GateClass::And: return "AND";
    case GateClass::ConstFalse: return "CONST_FALSE";
  }
  return "CONST_FALSE";
}

std::string_view gate_expression(GateClass gate) noexcept {
  switch (gate) {
    case GateClass::Or: return "x+y";
    case GateClass::SelectY: return "y";
    case GateClass::Xor: return "x⊕y";
    case GateClass::SelectX: return "x";
    case GateClass::NotXAndY: return "x̄y";
    case GateClass::XAndNotY: return "xȳ";
    case GateClass::And: return "xy";
    case GateClass::ConstFalse: return "0";
  }
  return "0";
}

GateReport mine_gate(const SpikeTrain& train, std::span<const StimulusTrial> trials, double window) {
  validate_trials(trials);
  const auto times = train.times();
  bool seen[3] = {false, false, false};
  bool bit[3] = {false, false, false};
  for (const auto& trial : trials) {
    int slot = -1;
    switch (trial.input) {
      case InputLabel::Pair01: slot = 0; break;
      case InputLabel::Pair10: slot = 1; break;
      case InputLabel::Pair11: slot = 2; break;
      default: break;
    }
    if (slot < 0) continue;
    seen[slot] = true;
    bit[slot] = bit[slot] || response_bit(times, trial, window);
  }
  static constexpr const char* kPairs[3] = {"01", "10", "11"};
  for (int i = 0; i < 3; ++i) {
    if (!seen[i]) throw Error(ErrorCode::MissingInputPair, std::string("no trials for input pair (") + kPairs[i] + ")");
  }
  GateReport r;
  r.s01 = bit[0];
  r.s10 = bit[1];
  r.s11 = bit[2];
  r.gate = classify_gate(r.s01, r.s10, r.s11);
  r.expression = std::string(gate_expression(r.gate));
  return r;
}

std::string to_json(const GateReport& report) {
  nlohmann::ordered_json j;
  j["s01"] = report.s01;
  j["s10"] = report.s10;
  j["s11"] = report.s11;
  j["gate"] = std::string(gate_name(report.gate));
  j["expression"] = report.expression;
  return j.dump();
}

std::optional<BitConvention> parse_convention(std::string_view text) noexcept {
  if (text == "below_is_1") return BitConvention::BelowIsOne;
  if (text == "above_is_1") return BitConvention::AboveIsOne;
  return std::nullopt;
}

BitVector binarize_periods(std::span<const double> periods, double threshold, BitConvention convention) {
  if (!std::isfinite(threshold) || threshold <= 0.0) throw Error(ErrorCode::InvalidParams, "threshold must be > 0");
  BitVector out;
  out.reserve(periods.size());
  for (double p : periods) out.push_back(convention == BitConvention::BelowIsOne ? p < threshold : p > threshold);
  return out;
}

LogicTable eval_logic(std::span<const BitVector> inputs) {
  if (inputs.size() < 2) throw Error(ErrorCode::TooFewInputs, "need at least two inputs");
  const std::size_t n = inputs.front().size();
  for (const auto& in : inputs) {
    if (in.size() != n) throw Error(ErrorCode::LengthMismatch, "inputs differ in length");
  }
  LogicTable t;
  t.inputs.assign(inputs.begin(), inputs.end());
  for (const auto& in : inputs) {
    BitVector inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = !in[i];
    t.nots.push_back(std::move(inv));
  }
  t.and_.resize(n);
  t.or_.resize(n);
  t.xor_.resize(n);
  t.nand.resize(n);
  t.nor.resize(n);
  t.xnor.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool all = true;
    bool any = false;
    bool parity = false;
    for (const auto& in : inputs) {
      all = all && in[i];
      any = any || in[i];
      parity = parity != in[i];
    }
    t.and_[i] = all;
    t.or_[i] = any;
    t.xor_[i] = parity;
    t.nand[i] = !all;
    t.nor[i] = !any;
    t.xnor[i] = !parity;
  }
  return t;
}

}  // namespace spikegate::gates
