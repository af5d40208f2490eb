#include "ic/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ic/error.hpp"
#include "ic/gf.hpp"
#include "ic/instance.hpp"
#include "ic/mcd.hpp"
#include "ic/rational.hpp"
#include "ic/schemes.hpp"
#include "ic/sets.hpp"
#include "ic/umcd.hpp"
#include "ic/verify.hpp"

namespace ic {
namespace {

using nlohmann::json;

const std::vector<std::string>& scheme_ids() {
  static const std::vector<std::string> ids = {"umcd", "mds",        "mais",  "pcc",
                                               "fpcc", "recursive",  "icc",   "icc-scalar",
                                               "pumcd", "fpumcd",    "minrank2"};
  return ids;
}

// Table row order mirrors the scheme-comparison table: coarsest bound first,
// then the fractional refinements, the lower bound, and our scheme last.
const std::vector<std::string>& compare_default() {
  static const std::vector<std::string> ids = {"mds",  "pcc",       "icc-scalar", "fpcc",
                                               "icc",  "recursive", "mais",       "umcd"};
  return ids;
}

json json_rational(const Rational& r) {
  return json{{"num", r.num_str()}, {"den", r.den_str()}, {"display", r.display()}};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  out.flush();
  if (!out) throw Error("write failed: " + path);
}

TieBreak parse_tie_break(const std::string& s) {
  if (s == "lowest") return TieBreak::lowest_index();
  if (s == "all") return TieBreak::exhaustive_min();
  const std::string prefix = "seeded:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string tail = s.substr(prefix.size());
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
      try {
        return TieBreak::seeded(std::stoull(tail));
      } catch (const std::exception&) {
        // falls through to the usage error below
      }
    }
  }
  throw CLI::ValidationError("--tie-break expects lowest, seeded:<n>, or all");
}

// One source per command: a bundled instance id or an .ic file path.
struct Source {
  std::string named;
  std::string path;

  void attach(CLI::App* cmd) {
    auto* n = cmd->add_option("--named", named, "bundled instance id (I1..I10)");
    auto* f = cmd->add_option("--instance", path, "path to an .ic instance file");
    n->excludes(f);
  }

  Instance load() const {
    if (named.empty() && path.empty())
      throw CLI::RequiredError("one of --named / --instance");
    if (!named.empty()) return named_instance(named);
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file: " + path);
    return parse_instance(in);
  }

  const std::string& label() const { return named.empty() ? path : named; }
};

struct SchemeOutcome {
  Rational rate;
  std::vector<std::string> trace;  // construction detail for --trace
  uint64_t branches = 0;           // schedules explored (umcd under --tie-break all)
  bool has_branches = false;
};

std::vector<std::string> cover_trace(const Cover& cover) {
  std::vector<std::string> lines;
  for (const auto& e : cover.entries)
    lines.push_back("gamma=" + e.weight.to_string() + " rate=" + e.local_rate.to_string() +
                    " members=" + format_set(e.members));
  return lines;
}

SchemeOutcome compute_scheme(const Instance& inst, const std::string& id, const TieBreak& tb) {
  SchemeOutcome o;
  if (id == "umcd") {
    UmcdResult res = run_umcd(inst, tb);
    o.rate = Rational(res.rate);
    o.trace = split_lines(format_schedule(res));
    if (tb.kind == TieBreak::Kind::ExhaustiveMin) {
      o.branches = res.branches_explored;
      o.has_branches = true;
    }
  } else if (id == "mds") {
    o.rate = Rational(mds_rate(inst));
  } else if (id == "mais") {
    o.rate = Rational(mais_bound(inst));
  } else if (id == "pcc") {
    auto [r, part] = pcc_rate(inst);
    o.rate = Rational(r);
    o.trace = {"partition: " + part.format()};
  } else if (id == "fpcc") {
    auto [r, cover] = fpcc_rate(inst);
    o.rate = r;
    o.trace = cover_trace(cover);
  } else if (id == "recursive") {
    o.rate = recursive_rate(inst);
  } else if (id == "icc") {
    IccResult res = icc_rate(inst);
    o.rate = res.rate;
    for (const auto& e : res.cover)
      o.trace.push_back("gamma=" + e.weight.to_string() + " rate=" +
                        std::to_string(e.structure.rate) + " members=" +
                        format_set(e.structure.members) + " inner=" +
                        format_set(e.structure.inner));
  } else if (id == "icc-scalar") {
    IccScalarResult res = icc_rate_scalar(inst);
    o.rate = Rational(res.rate);
    for (const auto& b : res.blocks)
      o.trace.push_back("rate=" + std::to_string(b.rate) + " members=" + format_set(b.members) +
                        " inner=" + format_set(b.inner));
  } else if (id == "pumcd") {
    auto [r, part] = pumcd_rate(inst, tb);
    o.rate = Rational(r);
    o.trace = {"partition: " + part.format()};
  } else if (id == "fpumcd") {
    auto [r, cover] = fpumcd_rate(inst, tb);
    o.rate = r;
    o.trace = cover_trace(cover);
  } else if (id == "minrank2") {
    o.rate = Rational(minrank_gf2_bruteforce(inst));
  } else {
    throw Error("unknown scheme: " + id);  // options validate first; belt and braces
  }
  return o;
}

void print_aligned(std::ostream& out,
                   const std::vector<std::pair<std::string, std::string>>& rows) {
  size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& r : rows)
    out << r.first << std::string(width - r.first.size() + 2, ' ') << r.second << "\n";
}

// ---- rate ----------------------------------------------------------------

struct RateOpts {
  Source src;
  std::string scheme;
  std::string tb = "lowest";
  bool trace = false;
  bool as_json = false;
};

int cmd_rate(std::ostream& out, const RateOpts& opt) {
  Instance inst = opt.src.load();
  SchemeOutcome o = compute_scheme(inst, opt.scheme, parse_tie_break(opt.tb));
  if (opt.as_json) {
    json j{{"command", "rate"},
           {"source", opt.src.label()},
           {"m", inst.m()},
           {"scheme", opt.scheme},
           {"rate", json_rational(o.rate)}};
    if (o.has_branches) j["branches"] = o.branches;
    if (opt.trace) j["trace"] = o.trace;
    out << j.dump() << "\n";
  } else {
    out << o.rate.display() << "\n";
    if (o.has_branches) out << "branches explored: " << o.branches << "\n";
    if (opt.trace)
      for (const auto& line : o.trace) out << line << "\n";
  }
  return 0;
}

// ---- compare -------------------------------------------------------------

struct CompareOpts {
  Source src;
  std::vector<std::string> schemes;
  std::string tb = "lowest";
  bool as_json = false;
};

int cmd_compare(std::ostream& out, const CompareOpts& opt) {
  Instance inst = opt.src.load();
  TieBreak tb = parse_tie_break(opt.tb);
  const std::vector<std::string>& ids = opt.schemes.empty() ? compare_default() : opt.schemes;
  std::vector<std::pair<std::string, Rational>> rows;
  for (const auto& id : ids) rows.emplace_back(id, compute_scheme(inst, id, tb).rate);
  if (opt.as_json) {
    json jrows = json::array();
    for (const auto& [id, rate] : rows)
      jrows.push_back(json{{"scheme", id}, {"rate", json_rational(rate)}});
    out << json{{"command", "compare"},
                {"source", opt.src.label()},
                {"m", inst.m()},
                {"rows", jrows}}
               .dump()
        << "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> table;
    for (const auto& [id, rate] : rows) table.emplace_back(id, rate.display());
    print_aligned(out, table);
  }
  return 0;
}

// ---- encode --------------------------------------------------------------

struct EncodeOpts {
  Source src;
  uint64_t q = 0;  // 0 = pick next prime at or above the guarantee bound
  std::string tb = "lowest";
  std::string out_path;
  bool as_json = false;
};

int cmd_encode(std::ostream& out, const EncodeOpts& opt) {
  Instance inst = opt.src.load();
  UmcdResult sched = run_umcd(inst, parse_tie_break(opt.tb));
  const uint64_t guarantee = std::max<uint64_t>(sched.q_min, 2);
  const bool explicit_q = opt.q != 0;
  const uint64_t q = explicit_q ? opt.q : next_prime_at_least(guarantee);
  McdOptions mopt;
  // An explicit --q is taken at face value: below the guarantee the synthesis
  // may still succeed, and a genuine veto exhaustion surfaces as an error.
  mopt.allow_small_q = explicit_q;
  FieldMatrix h = mcd(sched.support, q, mopt);
  const bool below = q < sched.q_min;
  std::vector<std::string> schedule = split_lines(format_schedule(sched));
  if (opt.as_json) {
    json j{{"command", "encode"}, {"source", opt.src.label()},
           {"m", inst.m()},       {"r", sched.rate},
           {"q_min", sched.q_min}, {"q", q},
           {"below_guarantee", below}, {"schedule", schedule},
           {"matrix", h.to_text()}};
    if (!opt.out_path.empty()) {
      write_file(opt.out_path, h.to_text());
      j["out"] = opt.out_path;
    }
    out << j.dump() << "\n";
  } else {
    out << "r=" << sched.rate << "\n";
    out << "q_min=" << sched.q_min << "\n";
    out << "q=" << q << "\n";
    if (below) out << "note: q=" << q << " is below the guarantee bound q_min=" << sched.q_min
                   << "\n";
    out << "schedule:\n";
    for (const auto& line : schedule) out << line << "\n";
    if (opt.out_path.empty()) {
      out << "matrix:\n" << h.to_text();
    } else {
      write_file(opt.out_path, h.to_text());
      out << "wrote matrix to " << opt.out_path << "\n";
    }
  }
  return 0;
}

// ---- verify --------------------------------------------------------------

struct VerifyOpts {
  Source src;
  std::string matrix_path;
  std::string tb = "lowest";
  bool as_json = false;
};

int cmd_verify(std::ostream& out, const VerifyOpts& opt) {
  Instance inst = opt.src.load();
  FieldMatrix h = FieldMatrix::parse_text(read_file(opt.matrix_path));
  UmcdResult sched = run_umcd(inst, parse_tie_break(opt.tb));
  PipelineReport rep = verify_code_against_schedule(inst, sched, h);
  // Per-prefix decodable sets via the rank test; meaningless if the matrix
  // does not even have one column per message.
  std::vector<IndexSet> decodable;
  if (rep.failing_check != "shape") {
    DecodabilityReport table = decodability_table(inst, h, DecodeMethod::Rank);
    for (const auto& row : table.verdict) {
      IndexSet s;
      for (int i = 1; i <= inst.m(); ++i)
        if (row[i - 1]) s.push_back(i);
      decodable.push_back(std::move(s));
    }
  }
  if (opt.as_json) {
    json j{{"command", "verify"},
           {"source", opt.src.label()},
           {"matrix", opt.matrix_path},
           {"ok", rep.ok},
           {"failing", rep.failing_check},
           {"detail", rep.detail},
           {"r", rep.rate},
           {"q", rep.q},
           {"exhaustive_checked", rep.exhaustive_checked}};
    if (rep.failing_check != "shape") {
      json jdec = json::array();
      for (const auto& s : decodable) jdec.push_back(s);
      j["decodable"] = jdec;
    }
    out << j.dump() << "\n";
  } else {
    out << "ok: " << (rep.ok ? "yes" : "no") << "\n";
    if (!rep.ok) {
      out << "failing: " << rep.failing_check << "\n";
      out << "detail: " << rep.detail << "\n";
    }
    out << "r=" << rep.rate << "\n";
    out << "q=" << rep.q << "\n";
    out << "exhaustive check: " << (rep.exhaustive_checked ? "ran" : "skipped (message space over cap)")
        << "\n";
    for (size_t k = 0; k < decodable.size(); ++k)
      out << "decodable after prefix " << k + 1 << ": " << format_set(decodable[k]) << "\n";
  }
  return rep.ok ? 0 : 1;
}

// ---- gen -----------------------------------------------------------------

struct GenOpts {
  std::string family;
  int l = 1;
  std::string out_path;
  bool as_json = false;
};

int cmd_gen(std::ostream& out, const GenOpts& opt) {
  Instance inst = opt.family == "i6" ? gen_class_i6(opt.l) : gen_class_i7(opt.l);
  const std::string text = inst.to_ic();
  if (opt.as_json) {
    json j{{"command", "gen"}, {"family", opt.family}, {"l", opt.l},
           {"m", inst.m()},    {"ic", text},           {"instance", inst.to_json()}};
    if (!opt.out_path.empty()) {
      write_file(opt.out_path, text);
      j["out"] = opt.out_path;
    }
    out << j.dump() << "\n";
  } else if (opt.out_path.empty()) {
    out << text;
  } else {
    write_file(opt.out_path, text);
    out << "wrote instance to " << opt.out_path << "\n";
  }
  return 0;
}

// ---- bench ---------------------------------------------------------------

struct BenchOpts {
  std::string family;
  std::string range;
  bool as_json = false;
};

std::pair<int, int> parse_l_range(const std::string& s) {
  const size_t dots = s.find("..");
  bool ok = dots != std::string::npos && dots > 0 && dots + 2 < s.size();
  int lo = 0, hi = 0;
  if (ok) {
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    ok = a.find_first_not_of("0123456789") == std::string::npos &&
         b.find_first_not_of("0123456789") == std::string::npos;
    if (ok) {
      try {
        lo = std::stoi(a);
        hi = std::stoi(b);
      } catch (const std::exception&) {
        ok = false;
      }
      ok = ok && lo >= 1 && hi >= lo;
    }
  }
  if (!ok) throw CLI::ValidationError("--l-range expects a..b with 1 <= a <= b");
  return {lo, hi};
}

// A cell holds an exact value or records that its scheme refused the size.
struct BenchCell {
  Rational value;
  bool capped = false;
};

template <typename F>
BenchCell bench_cell(F&& f) {
  try {
    return {f(), false};
  } catch (const CapExceeded&) {
    return {Rational(0), true};
  }
}

std::string cell_text(const BenchCell& c) { return c.capped ? "(cap)" : c.value.display(); }

json cell_json(const BenchCell& c) {
  return c.capped ? json(nullptr) : json_rational(c.value);
}

int cmd_bench(std::ostream& out, const BenchOpts& opt) {
  auto [lo, hi] = parse_l_range(opt.range);
  json jrows = json::array();
  for (int l = lo; l <= hi; ++l) {
    Instance inst = opt.family == "i6" ? gen_class_i6(l) : gen_class_i7(l);
    const int u = umcd_rate(inst);
    if (opt.family == "i6") {
      BenchCell rec = bench_cell([&] { return recursive_rate(inst); });
      BenchCell gap = rec.capped ? BenchCell{Rational(0), true}
                                 : BenchCell{rec.value - Rational(u), false};
      if (opt.as_json) {
        jrows.push_back(json{{"l", l}, {"m", inst.m()}, {"umcd", u},
                             {"recursive", cell_json(rec)}, {"gap", cell_json(gap)}});
      } else {
        out << "l=" << l << " m=" << inst.m() << " umcd=" << u
            << " recursive=" << cell_text(rec) << " gap=" << cell_text(gap) << "\n";
      }
    } else {
      BenchCell fp = bench_cell([&] { return fpcc_rate(inst).first; });
      BenchCell ic = bench_cell([&] { return icc_rate(inst).rate; });
      BenchCell gap = ic.capped ? BenchCell{Rational(0), true}
                                : BenchCell{ic.value - Rational(u), false};
      if (opt.as_json) {
        jrows.push_back(json{{"l", l}, {"m", inst.m()}, {"umcd", u},
                             {"fpcc", cell_json(fp)}, {"icc", cell_json(ic)},
                             {"gap", cell_json(gap)}});
      } else {
        out << "l=" << l << " m=" << inst.m() << " umcd=" << u << " fpcc=" << cell_text(fp)
            << " icc=" << cell_text(ic) << " gap=" << cell_text(gap) << "\n";
      }
    }
  }
  if (opt.as_json)
    out << json{{"command", "bench"}, {"family", opt.family}, {"rows", jrows}}.dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index coding: broadcast rates, encoding matrices, instance tools"};
  app.name("ic");
  app.require_subcommand(1);
  int rc = 0;

  RateOpts ro;
  auto* rate = app.add_subcommand("rate", "Broadcast rate of one scheme on one instance");
  ro.src.attach(rate);
  rate->add_option("--scheme", ro.scheme, "scheme id")
      ->required()
      ->check(CLI::IsMember(scheme_ids()));
  rate->add_option("--tie-break", ro.tb, "transmitter tie rule: lowest | seeded:<n> | all");
  rate->add_flag("--trace", ro.trace, "print construction detail (schedule, partition, cover)");
  rate->add_flag("--json", ro.as_json, "machine-readable output");
  rate->callback([&] { rc = cmd_rate(out, ro); });

  CompareOpts co;
  auto* compare = app.add_subcommand("compare", "Rates of several schemes side by side");
  co.src.attach(compare);
  compare->add_option("--schemes", co.schemes, "comma-separated scheme ids")
      ->delimiter(',')
      ->check(CLI::IsMember(scheme_ids()));
  compare->add_option("--tie-break", co.tb, "transmitter tie rule: lowest | seeded:<n> | all");
  compare->add_flag("--json", co.as_json, "machine-readable output");
  compare->callback([&] { rc = cmd_compare(out, co); });

  EncodeOpts eo;
  auto* encode = app.add_subcommand("encode", "Synthesize an encoding matrix");
  eo.src.attach(encode);
  encode->add_option("--q", eo.q,
                     "prime field size; default: next prime at or above the guarantee bound");
  encode->add_option("--tie-break", eo.tb, "transmitter tie rule: lowest | seeded:<n> | all");
  encode->add_option("--out", eo.out_path, "write the matrix to this file instead of stdout");
  encode->add_flag("--json", eo.as_json, "machine-readable output");
  encode->callback([&] { rc = cmd_encode(out, eo); });

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Check a matrix file against an instance");
  vo.src.attach(verify);
  verify->add_option("--matrix", vo.matrix_path, "matrix file to check")->required();
  verify->add_option("--tie-break", vo.tb, "transmitter tie rule: lowest | seeded:<n> | all");
  verify->add_flag("--json", vo.as_json, "machine-readable output");
  verify->callback([&] { rc = cmd_verify(out, vo); });

  GenOpts go;
  auto* gen = app.add_subcommand("gen", "Emit a parameterized family instance");
  gen->add_option("--family", go.family, "instance family")
      ->required()
      ->check(CLI::IsMember({"i6", "i7"}));
  gen->add_option("--l", go.l, "family parameter, l >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", go.out_path, "write the .ic text to this file instead of stdout");
  gen->add_flag("--json", go.as_json, "machine-readable output");
  gen->callback([&] { rc = cmd_gen(out, go); });

  BenchOpts bo;
  auto* bench = app.add_subcommand("bench", "Scheme-gap table across a family parameter range");
  bench->add_option("--family", bo.family, "instance family")
      ->required()
      ->check(CLI::IsMember({"i6", "i7"}));
  bench->add_option("--l-range", bo.range, "inclusive parameter range a..b")->required();
  bench->add_flag("--json", bo.as_json, "machine-readable output");
  bench->callback([&] { rc = cmd_bench(out, bo); });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace ic
