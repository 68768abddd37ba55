#ifndef KSTATE_BATCH_HPP
#define KSTATE_BATCH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kstate/diagram.hpp"
#include "kstate/invariants.hpp"
#include "kstate/polynomial.hpp"
#include "kstate/states.hpp"

namespace kstate {

enum class InputFormat { pd, gauss };
enum class OutputFormat { text, json, csv };

struct ComputeOptions {
  InputFormat format = InputFormat::pd;
  bool count_states = false;
  bool alexander = false;
  bool signature = false;
  bool hfk = false;
  bool hfplus = false;
  bool d1 = false;
  bool obstruct = false;
  bool hopf = false;
  std::optional<int> sigma_override;  // external signature for obstruction
  bool assume_fibered = false;
  std::optional<int> marked_edge;
  std::optional<int> outer_face;
  void select_all() {
    count_states = alexander = signature = hfk = hfplus = d1 = obstruct = hopf = true;
  }
  bool anything_selected() const {
    return count_states || alexander || signature || hfk || hfplus || d1 ||
           obstruct || hopf;
  }
};

// One input line's worth of results.  Alternating-only invariants carry a
// "not applicable" note instead of a value when the formulas do not apply.
struct BatchRecord {
  std::string name;
  std::string source;
  std::optional<PlanarDiagram> diagram;
  std::string error;  // parse/processing diagnostic; empty on success

  std::optional<BigInt> state_count;
  std::optional<LaurentPolynomial> gamma;
  std::optional<bool> alternating;
  std::optional<int> sigma;
  std::string sigma_note;
  std::optional<std::vector<HfkEntry>> hfk;
  std::string hfk_note;
  std::optional<HfPlusSummary> hfplus;
  std::string hfplus_note;
  std::optional<int> d1;
  std::string d1_note;
  std::optional<ObstructionReport> obstruction;
  std::optional<int> obstruction_sigma;
  std::string obstruction_note;
  std::optional<HopfInvariant> hopf;
  std::string hopf_note;
};

// Parse one diagram line per the selected format and decoration overrides.
PlanarDiagram parse_line(const std::string& line, const ComputeOptions& opts);

// Batch driver: one record per non-blank input line.  Comment text after
// '#' names the record; otherwise "line N" is used.
std::vector<BatchRecord> run_compute(std::istream& in, const ComputeOptions& opts);

std::string render_text(const std::vector<BatchRecord>& records);
std::string render_json(const std::vector<BatchRecord>& records);
std::string render_csv(const std::vector<BatchRecord>& records);

// `states` subcommand payloads.
struct StatesRecord {
  std::string name;
  std::string error;
  std::vector<KauffmanState> states;  // all states, or just the canonical one
  std::optional<std::size_t> clock_edges;
  std::optional<bool> clock_connected;
};

std::vector<StatesRecord> run_states(std::istream& in, const ComputeOptions& opts,
                                     bool canonical_only, bool clock);
std::string render_states_text(const std::vector<StatesRecord>& records);
std::string render_states_json(const std::vector<StatesRecord>& records);

// `verify` subcommand: oracle cross-checks and structural properties.
struct VerifyRow {
  std::string name;
  std::string check;
  enum class Status { pass, fail, skip } status;
  std::string detail;
};

std::vector<VerifyRow> run_verify(std::istream& in, const ComputeOptions& opts);
std::string render_verify_text(const std::vector<VerifyRow>& rows);
bool verify_all_passed(const std::vector<VerifyRow>& rows);

}  // namespace kstate

#endif
