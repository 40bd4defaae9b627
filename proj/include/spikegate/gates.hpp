#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spikegate/core.hpp"

namespace spikegate::gates {

/// Simultaneity scale: spikes closer than this count as one event, and a
/// stimulus response is looked for this long after onset.
inline constexpr double kSimultaneityWindow = 3000.0;  // s
/// Period threshold separating "spike" from "no spike" periods.
inline constexpr double kPeriodThreshold = 3423.0;  // s

enum class InputLabel { Pair01, Pair10, Pair11, White, Black, BlackWhite, None };

[[nodiscard]] std::string_view to_string(InputLabel label) noexcept;
[[nodiscard]] std::optional<InputLabel> parse_input_label(std::string_view text) noexcept;

struct StimulusTrial {
  double onset = 0.0;  // s
  InputLabel input = InputLabel::Pair01;
};

/// Throws Error(InvalidParams) unless onsets are finite and strictly increasing.
void validate_trials(std::span<const StimulusTrial> trials);

/// Greedy left-to-right grouping: a spike joins the open group iff it is less
/// than `window` after the group's first spike. One event per group, at its
/// first spike's time.
[[nodiscard]] std::vector<double> group_simultaneous(const SpikeTrain& train, double window = kSimultaneityWindow);

/// True iff some event lies in [onset, onset + window).
[[nodiscard]] bool response_bit(std::span<const double> events, const StimulusTrial& trial,
                                double window = kSimultaneityWindow);

/// Table of two-input gates realised by (01, 10, 11) responses.
[[nodiscard]] GateClass classify_gate(bool s01, bool s10, bool s11) noexcept;

struct ResponseTriple {
  bool s01 = false;
  bool s10 = false;
  bool s11 = false;
  friend bool operator==(const ResponseTriple&, const ResponseTriple&) = default;
};

/// Inverse of classify_gate.
[[nodiscard]] ResponseTriple responses_for(GateClass gate) noexcept;

[[nodiscard]] std::string_view gate_name(GateClass gate) noexcept;
/// Notation for the gate: "x+y", "y", "x⊕y", "x", "x̄y", "xȳ", "xy", "0".
[[nodiscard]] std::string_view gate_expression(GateClass gate) noexcept;

struct GateReport {
  bool s01 = false;
  bool s10 = false;
  bool s11 = false;
  GateClass gate = GateClass::ConstFalse;
  std::string expression;
};

/// Per input pair, the response bit is the OR over that pair's trials,
/// evaluated on the raw spike times; then classify_gate. Trials with other
/// labels are ignored. Throws Error(MissingInputPair).
[[nodiscard]] GateReport mine_gate(const SpikeTrain& train, std::span<const StimulusTrial> trials,
                                   double window = kSimultaneityWindow);

/// {"s01":..,"s10":..,"s11":..,"gate":"AND","expression":"xy"} in that order.
[[nodiscard]] std::string to_json(const GateReport& report);

enum class BitConvention { BelowIsOne, AboveIsOne };

[[nodiscard]] std::optional<BitConvention> parse_convention(std::string_view text) noexcept;

using BitVector = std::vector<bool>;

/// BelowIsOne: 1 iff period < threshold. AboveIsOne: 1 iff period > threshold.
/// A period equal to the threshold is 0 under both. Throws Error(InvalidParams)
/// unless threshold > 0.
[[nodiscard]] BitVector binarize_periods(std::span<const double> periods, double threshold = kPeriodThreshold,
                                         BitConvention convention = BitConvention::BelowIsOne);

struct LogicTable {
  std::vector<BitVector> inputs;
  std::vector<BitVector> nots;  // NOT of each input
  BitVector and_;               // all inputs
  BitVector or_;                // any input
  BitVector xor_;               // odd parity
  BitVector nand;
  BitVector nor;
  BitVector xnor;
};

/// Elementwise n-ary logic over k >= 2 equal-length inputs.
/// Throws Error(TooFewInputs) or Error(LengthMismatch).
[[nodiscard]] LogicTable eval_logic(std::span<const BitVector> inputs);

}  // namespace spikegate::gates
