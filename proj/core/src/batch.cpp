#include "kstate/batch.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "kstate/oracle.hpp"

namespace kstate {

namespace {

using nlohmann::ordered_json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// The trailing '#' comment names a record.
std::string line_name(const std::string& line, int number) {
  auto pos = line.find('#');
  if (pos != std::string::npos) {
    std::string name = trim(line.substr(pos + 1));
    if (!name.empty()) return name;
  }
  return "line " + std::to_string(number);
}

ordered_json json_poly(const LaurentPolynomial& p) {
  return ordered_json::parse(p.to_json());
}

ordered_json json_hfk(const std::vector<HfkEntry>& table) {
  ordered_json j = ordered_json::array();
  for (const auto& e : table)
    j.push_back({e.s2, e.m2, static_cast<std::int64_t>(e.rank)});
  return j;
}

ordered_json json_hfplus(const HfPlusSummary& h) {
  ordered_json j;
  j["sigma"] = h.sigma;
  j["mirrored"] = h.mirrored;
  j["b0"] = static_cast<std::int64_t>(h.b0);
  j["b0_degree2"] = h.b0_degree2;
  j["towers2"] = {h.tower1_bottom2, h.tower2_bottom2};
  j["per_s"] = ordered_json::array();
  for (const auto& ps : h.per_s) {
    ordered_json e;
    e["s"] = ps.s;
    e["b"] = static_cast<std::int64_t>(ps.b);
    e["b_parity"] = ps.b_parity;
    e["delta"] = ps.delta_s;
    j["per_s"].push_back(e);
  }
  return j;
}

struct Line {
  std::string text;
  std::string name;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;  // blank or comment-only lines are not records
    lines.push_back({raw, line_name(raw, number)});
  }
  return lines;
}

}  // namespace

PlanarDiagram parse_line(const std::string& line, const ComputeOptions& opts) {
  PlanarDiagram d = (opts.format == InputFormat::gauss)
                        ? PlanarDiagram::from_gauss(line)
                        : PlanarDiagram::from_pd(line);
  if (opts.marked_edge || opts.outer_face) {
    int marked = opts.marked_edge.value_or(d.marked_edge());
    int outer = opts.outer_face.value_or(-1);
    if (!opts.outer_face) {
      auto [f1, f2] = d.edge_faces(marked);
      outer = std::min(f1, f2);
    }
    d = d.with_decoration(marked, outer);
  }
  return d;
}

std::vector<BatchRecord> run_compute(std::istream& in, const ComputeOptions& opts) {
  std::vector<BatchRecord> records;
  for (const auto& line : read_lines(in)) {
    BatchRecord rec;
    rec.name = line.name;
    rec.source = line.text;
    try {
      rec.diagram = parse_line(line.text, opts);
    } catch (const std::exception& e) {
      rec.error = e.what();
      records.push_back(std::move(rec));
      continue;
    }
    const PlanarDiagram& d = *rec.diagram;
    try {
      rec.alternating = d.is_alternating();
      if (opts.count_states)
        rec.state_count = BigInt(static_cast<long>(enumerate_states(d).size()));
      if (opts.alexander || opts.obstruct || opts.hfk) rec.gamma = state_sum(d);
      if (opts.signature || opts.hfk) {
        try {
          rec.sigma = signature_alternating(d);
        } catch (const NotApplicable& e) {
          rec.sigma_note = e.what();
        }
      }
      if (opts.hfk) {
        try {
          rec.hfk = hfk_table(d);
        } catch (const NotApplicable& e) {
          rec.hfk_note = e.what();
        }
      }
      if (opts.hfplus) {
        try {
          rec.hfplus = hf_plus_zero_surgery(d);
        } catch (const NotApplicable& e) {
          rec.hfplus_note = e.what();
        }
      }
      if (opts.d1) {
        try {
          rec.d1 = d_one_surgery(d);
        } catch (const NotApplicable& e) {
          rec.d1_note = e.what();
        }
      }
      if (opts.obstruct) {
        try {
          if (d.component_count() != 1)
            throw NotApplicable("obstruction: knot polynomial required");
          int sigma = opts.sigma_override ? *opts.sigma_override
                                          : signature_goeritz(d);
          rec.obstruction_sigma = sigma;
          rec.obstruction = obstruction(*rec.gamma, sigma);
        } catch (const std::exception& e) {
          rec.obstruction_note = e.what();
        }
      }
      if (opts.hopf) {
        try {
          rec.hopf = hopf_invariant(d, opts.assume_fibered);
        } catch (const NotApplicable& e) {
          rec.hopf_note = e.what();
        }
      }
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string render_text(const std::vector<BatchRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    out << r.name << ":";
    if (!r.error.empty()) {
      out << " error: " << r.error << "\n";
      continue;
    }
    out << "\n";
    if (r.alternating) out << "  alternating: " << (*r.alternating ? "yes" : "no") << "\n";
    if (r.state_count) out << "  states: " << *r.state_count << "\n";
    if (r.gamma) out << "  gamma: " << r.gamma->to_string() << "\n";
    if (r.sigma)
      out << "  sigma: " << *r.sigma << "\n";
    else if (!r.sigma_note.empty())
      out << "  sigma: not applicable (" << r.sigma_note << ")\n";
    if (r.hfk) {
      out << "  hfk:";
      for (const auto& e : *r.hfk)
        out << " [2s=" << e.s2 << " 2m=" << e.m2 << " rank=" << e.rank << "]";
      out << "\n";
    } else if (!r.hfk_note.empty()) {
      out << "  hfk: not applicable (" << r.hfk_note << ")\n";
    }
    if (r.hfplus) {
      const auto& h = *r.hfplus;
      out << "  hfplus: sigma=" << h.sigma << (h.mirrored ? " (mirrored)" : "")
          << " b0=" << h.b0 << " b0_degree2=" << h.b0_degree2 << " towers2=["
          << h.tower1_bottom2 << "," << h.tower2_bottom2 << "]";
      for (const auto& ps : h.per_s)
        out << " s=" << ps.s << ":b=" << ps.b << ",delta=" << ps.delta_s
            << ",parity=" << ps.b_parity;
      out << "\n";
    } else if (!r.hfplus_note.empty()) {
      out << "  hfplus: not applicable (" << r.hfplus_note << ")\n";
    }
    if (r.d1)
      out << "  d1: " << *r.d1 << "\n";
    else if (!r.d1_note.empty())
      out << "  d1: not applicable (" << r.d1_note << ")\n";
    if (r.obstruction) {
      out << "  obstruction(sigma=" << *r.obstruction_sigma
          << "): " << (r.obstruction->pass ? "pass" : "fail");
      for (const auto& v : r.obstruction->violations)
        out << " [s=" << v.s << " excess=" << v.excess << "]";
      if (!r.obstruction->top_coefficient_bound_ok)
        out << " [top-coefficient bound violated]";
      out << "\n";
    } else if (!r.obstruction_note.empty()) {
      out << "  obstruction: not applicable (" << r.obstruction_note << ")\n";
    }
    if (r.hopf)
      out << "  hopf: " << r.hopf->h << (r.hopf->tight ? " (tight)" : " (overtwisted)")
          << "\n";
    else if (!r.hopf_note.empty())
      out << "  hopf: not applicable (" << r.hopf_note << ")\n";
  }
  return out.str();
}

std::string render_json(const std::vector<BatchRecord>& records) {
  ordered_json out = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["name"] = r.name;
    if (!r.error.empty()) {
      j["error"] = r.error;
      out.push_back(j);
      continue;
    }
    if (r.alternating) j["alternating"] = *r.alternating;
    if (r.state_count) j["states"] = static_cast<std::int64_t>(*r.state_count);
    if (r.gamma) j["gamma"] = json_poly(*r.gamma);
    if (r.sigma) j["sigma"] = *r.sigma;
    if (r.hfk) j["hfk"] = json_hfk(*r.hfk);
    if (r.hfplus) j["hfplus"] = json_hfplus(*r.hfplus);
    if (r.d1) j["d1"] = *r.d1;
    if (r.obstruction) {
      j["obstruction"] = ordered_json::parse(r.obstruction->to_json());
      j["obstruction"]["sigma"] = *r.obstruction_sigma;
    }
    if (r.hopf) {
      j["hopf"] = ordered_json();
      j["hopf"]["h"] = r.hopf->h;
      j["hopf"]["tight"] = r.hopf->tight;
    }
    if (r.diagram) j["diagram"] = ordered_json::parse(r.diagram->to_json());
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string render_csv(const std::vector<BatchRecord>& records) {
  // One row per Alexander grading; summary-only records emit one row.
  std::ostringstream out;
  out << "name,2s,2m,rank,b,b_parity,delta,sigma,d1,error\n";
  for (const auto& r : records) {
    if (!r.error.empty()) {
      out << r.name << ",,,,,,,,," << '"' << r.error << '"' << "\n";
      continue;
    }
    std::string sigma = r.sigma ? std::to_string(*r.sigma) : "";
    std::string d1 = r.d1 ? std::to_string(*r.d1) : "";
    if (r.hfk) {
      for (const auto& e : *r.hfk) {
        std::string b, parity, delta_s;
        if (r.hfplus && e.s2 % 2 == 0) {
          int s = e.s2 / 2;
          if (s == 0) {
            b = r.hfplus->b0.str();
          } else {
            for (const auto& ps : r.hfplus->per_s)
              if (ps.s == std::abs(s)) {
                b = ps.b.str();
                parity = std::to_string(ps.b_parity);
                delta_s = std::to_string(ps.delta_s);
              }
          }
        }
        out << r.name << "," << e.s2 << "," << e.m2 << "," << e.rank << "," << b
            << "," << parity << "," << delta_s << "," << sigma << "," << d1 << ",\n";
      }
    } else {
      out << r.name << ",,,,,,," << sigma << "," << d1 << ",\n";
    }
  }
  return out.str();
}

std::vector<StatesRecord> run_states(std::istream& in, const ComputeOptions& opts,
                                     bool canonical_only, bool clock) {
  std::vector<StatesRecord> records;
  for (const auto& line : read_lines(in)) {
    StatesRecord rec;
    rec.name = line.name;
    try {
      PlanarDiagram d = parse_line(line.text, opts);
      if (canonical_only)
        rec.states.push_back(canonical_state(d));
      else
        rec.states = enumerate_states(d);
      if (clock) {
        rec.clock_edges = clock_edge_count(d);
        rec.clock_connected = clock_connected(d);
      }
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string render_states_text(const std::vector<StatesRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    out << r.name << ":";
    if (!r.error.empty()) {
      out << " error: " << r.error << "\n";
      continue;
    }
    out << " " << r.states.size() << " state(s)\n";
    for (const auto& x : r.states) {
      out << "  quadrants=[";
      for (std::size_t i = 0; i < x.quadrant.size(); ++i)
        out << (i ? "," : "") << int(x.quadrant[i]);
      out << "] 2S=" << x.filtration2 << " 2M=" << x.grading2 << "\n";
    }
    if (r.clock_edges)
      out << "  clock: " << r.states.size() << " nodes, " << *r.clock_edges
          << " edges, " << (*r.clock_connected ? "connected" : "disconnected")
          << "\n";
  }
  return out.str();
}

std::string render_states_json(const std::vector<StatesRecord>& records) {
  ordered_json out = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["name"] = r.name;
    if (!r.error.empty()) {
      j["error"] = r.error;
      out.push_back(j);
      continue;
    }
    j["states"] = ordered_json::array();
    for (const auto& x : r.states) j["states"].push_back(ordered_json::parse(x.to_json()));
    if (r.clock_edges) {
      j["clock"]["edges"] = *r.clock_edges;
      j["clock"]["connected"] = *r.clock_connected;
    }
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

namespace {

void add_row(std::vector<VerifyRow>& rows, const std::string& name,
             const std::string& check, VerifyRow::Status status,
             const std::string& detail = "") {
  rows.push_back({name, check, status, detail});
}

void verify_diagram(std::vector<VerifyRow>& rows, const std::string& name,
                    const PlanarDiagram& d) {
  using Status = VerifyRow::Status;
  auto states = enumerate_states(d);

  // Exhaustive search agrees with the backtracking enumerator.
  try {
    auto brute = brute_force_states(d);
    bool same = brute.size() == states.size() &&
                std::equal(brute.begin(), brute.end(), states.begin());
    add_row(rows, name, "brute-force states", same ? Status::pass : Status::fail,
            std::to_string(brute.size()) + " vs " + std::to_string(states.size()));
  } catch (const GuardExceeded& e) {
    add_row(rows, name, "brute-force states", Status::skip, e.what());
  }

  // Matrix-tree count agrees with the enumerator.
  auto coloring = d.checkerboard();
  BigInt trees = kirchhoff_count(d.black_graph(coloring));
  add_row(rows, name, "matrix-tree count",
          trees == BigInt(states.size()) ? Status::pass : Status::fail,
          trees.str() + " vs " + std::to_string(states.size()));

  // State sum invariants (normalization asserted inside state_sum).
  LaurentPolynomial gamma;
  try {
    gamma = state_sum(d);
    add_row(rows, name, "state sum normalization", Status::pass);
  } catch (const std::exception& e) {
    add_row(rows, name, "state sum normalization", Status::fail, e.what());
    return;
  }
  BigInt det = determinant(gamma);
  if (d.is_alternating())
    add_row(rows, name, "alternating determinant = state count",
            det == BigInt(states.size()) ? Status::pass : Status::fail,
            det.str() + " vs " + std::to_string(states.size()));
  else
    add_row(rows, name, "state count >= coefficient sum",
            gamma.sum_abs_coeffs() <= BigInt(states.size()) ? Status::pass
                                                            : Status::fail);

  // Canonical state: validity and zero grading are asserted inside.
  try {
    canonical_state(d);
    add_row(rows, name, "canonical state grading 0", Status::pass);
  } catch (const std::exception& e) {
    add_row(rows, name, "canonical state grading 0", Status::fail, e.what());
  }

  // Signature oracle against the alternating formula and under mirroring.
  int sig_oracle = signature_goeritz(d);
  if (d.is_alternating() && d.is_reduced()) {
    int sig_formula = signature_alternating(d);
    add_row(rows, name, "Goeritz signature = alternating formula",
            sig_oracle == sig_formula ? Status::pass : Status::fail,
            std::to_string(sig_oracle) + " vs " + std::to_string(sig_formula));
  }
  if (d.crossing_count() > 0) {
    int sig_mirror = signature_goeritz(d.mirror());
    add_row(rows, name, "signature negates under mirror",
            sig_mirror == -sig_oracle ? Status::pass : Status::fail,
            std::to_string(sig_oracle) + " / " + std::to_string(sig_mirror));
  }

  // 2(M-S) is constant over states and equals sigma for alternating inputs.
  if (d.is_alternating() && d.is_reduced()) {
    int sigma = signature_alternating(d);
    bool ok = true;
    for (const auto& x : states)
      if (x.grading2 - x.filtration2 != sigma) ok = false;
    add_row(rows, name, "2(M-S) = sigma", ok ? Status::pass : Status::fail);
  }

  // Clock theorem on small diagrams.
  if (d.crossing_count() <= 9) {
    bool connected = clock_connected(d);
    add_row(rows, name, "clock graph connected",
            connected ? Status::pass : Status::fail);
    bool deltas_ok = true;
    for (const auto& x : states)
      for (const auto& y : transpositions(d, x)) {
        if (std::abs(x.grading2 - y.grading2) != 2) deltas_ok = false;
        if (std::abs(x.filtration2 - y.filtration2) > 2) deltas_ok = false;
      }
    add_row(rows, name, "transposition grading steps",
            deltas_ok ? Status::pass : Status::fail);
  } else {
    add_row(rows, name, "clock graph connected", Status::skip, "more than 9 crossings");
  }

  // Decoration invariance of the state sum.
  if (d.crossing_count() > 0 && d.crossing_count() <= 9) {
    bool ok = true;
    for (int e = 1; e <= d.edge_count() && ok; ++e) {
      auto [f1, f2] = d.edge_faces(e);
      for (int outer : {f1, f2}) {
        auto redecorated = d.with_decoration(e, outer);
        if (!(state_sum(redecorated) == gamma)) {
          ok = false;
          break;
        }
      }
    }
    add_row(rows, name, "decoration invariance", ok ? Status::pass : Status::fail);
  } else if (d.crossing_count() > 9) {
    add_row(rows, name, "decoration invariance", Status::skip, "more than 9 crossings");
  }

  // Total Floer rank of an alternating knot equals the state count.
  if (d.is_alternating() && d.is_reduced() && d.component_count() == 1) {
    auto table = hfk_table(d);
    BigInt total = 0;
    for (const auto& e : table) total += e.rank;
    add_row(rows, name, "hfk total rank = state count",
            total == BigInt(states.size()) ? Status::pass : Status::fail,
            total.str() + " vs " + std::to_string(states.size()));
  }
}

}  // namespace

std::vector<VerifyRow> run_verify(std::istream& in, const ComputeOptions& opts) {
  std::vector<VerifyRow> rows;
  for (const auto& line : read_lines(in)) {
    try {
      PlanarDiagram d = parse_line(line.text, opts);
      verify_diagram(rows, line.name, d);
    } catch (const std::exception& e) {
      add_row(rows, line.name, "parse", VerifyRow::Status::fail, e.what());
    }
  }
  return rows;
}

std::string render_verify_text(const std::vector<VerifyRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    const char* status = r.status == VerifyRow::Status::pass   ? "PASS"
                         : r.status == VerifyRow::Status::fail ? "FAIL"
                                                               : "SKIP";
    out << status << "  " << r.name << ": " << r.check;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
  }
  return out.str();
}

bool verify_all_passed(const std::vector<VerifyRow>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const VerifyRow& r) {
    return r.status == VerifyRow::Status::fail;
  });
}

}  // namespace kstate
