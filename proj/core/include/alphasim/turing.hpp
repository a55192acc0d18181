#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "alphasim/tape.hpp"

namespace alphasim {

/// One entry of the transition table: write, shift, next state — or the
/// distinguished halt target "!" which writes and stops the machine.
struct TmNext {
  Symbol write;
  Move move;
  std::string next;
  friend bool operator==(const TmNext&, const TmNext&) = default;
};
struct TmHalt {
  Symbol write;
  friend bool operator==(const TmHalt&, const TmHalt&) = default;
};
using TmEntry = std::variant<TmNext, TmHalt>;

/// A particular single-tape Turing machine ⟨Q, Σ, q0, t, F⟩ with the
/// movement alphabet {G, D, N}. F is metadata for decision problems; only
/// "!" entries halt execution.
struct TmScheme {
  std::vector<std::string> states;
  Alphabet alphabet{Alphabet::binary()};
  std::string initial;
  std::set<std::string> finals;
  std::map<std::pair<std::string, Symbol>, TmEntry> transitions;

  const TmEntry* find(const std::string& state, Symbol read) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Report-style check of every scheme invariant: Q ∩ Σ = ∅, q0 ∈ Q,
/// F ⊆ Q, transition endpoints and written symbols known.
ValidationReport tm_validate(const TmScheme& scheme);

struct TmConfig {
  Tape tape;
  Head head{0, Discipline::ReadWriteBidirectional, true};
  std::string state;
  std::uint64_t step_count{0};
};

struct TraceStep {
  std::string state;
  std::int64_t position{0};
  Symbol read;
  Symbol written;
  std::optional<Move> move;  // absent on the halting step
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

enum class StepKind : std::uint8_t { Next, Halted, Stuck };

struct StepResult {
  StepKind kind;
  std::optional<TraceStep> trace;  // present for Next and Halted
};

/// Applies exactly one dérivation, mutating the config in place.
StepResult tm_step(const TmScheme& scheme, TmConfig& config);

struct Halted {
  std::string final_state;
};
struct OutOfFuel {};
struct Stuck {
  std::string state;
  Symbol read;
  std::int64_t position;
};

struct RunResult {
  std::variant<Halted, OutOfFuel, Stuck> outcome;
  Tape final_tape;
  std::int64_t final_position{0};
  std::uint64_t steps{0};
  std::vector<TraceStep> trace;

  bool halted() const { return std::holds_alternative<Halted>(outcome); }
};

RunResult tm_run(const TmScheme& scheme, Tape initial, std::int64_t start,
                 std::uint64_t max_steps);

/// The addition machine's table exactly as printed: three states, the
/// erase-rewind loop, halt on '*' in q0. Its run on l^a * l^b leaves only
/// the second block (see docs/formats.md for the discrepancy note).
TmScheme fig_addition_verbatim();

/// Corrected unary addition: erase one leading stick, rewrite '*' as 'l' on
/// halt; l^a * l^b becomes a contiguous l^(a+b).
TmScheme unary_addition();

/// Machine-spec text format: states/alphabet/initial/finals lines plus
/// transition rows "(state, read) -> (write, move, next|!)".
TmScheme parse_tm_scheme(const std::string& text,
                         const std::string& filename = "<string>");
std::string format_tm_scheme(const TmScheme& scheme);

}  // namespace alphasim
