// Command-line front end: analysis of single functions, classification,
// 5-to-9 extension, automaton evolution, and the census sweeps.
//
// Exit codes: 0 on success, 2 for usage errors, 3 for invalid data
// (malformed tables, out-of-range arguments, unreadable files).

#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bfca/bfca.hpp"

namespace {

bfca::TruthTable parse_table(const std::string& text, int arity) {
  if (text.rfind("0b", 0) == 0) return bfca::TruthTable::from_binary(text, arity);
  return bfca::TruthTable::from_hex(text, arity);
}

const char* yesno(bool v) { return v ? "yes" : "no"; }

std::string table_id(const bfca::TruthTable& t) {
  return t.arity() >= 2 ? t.to_hex() : t.to_binary();
}

void print_profile_lines(std::ostream& out, const bfca::TruthTable& t,
                         const bfca::PropertyProfile& p) {
  out << "weight: " << t.weight() << "\n";
  out << "balanced: " << yesno(p.balanced) << "\n";
  out << "degree: " << p.degree << "\n";
  out << "nonlinear: " << yesno(p.nonlinear) << "\n";
  out << "ci1: " << yesno(p.ci1) << "\n";
  out << "sac: " << yesno(p.sac) << "\n";
  out << "pc_order: " << p.pc_order << "\n";
}

bfca::ReportFormat parse_format(const std::string& name) {
  return name == "table" ? bfca::ReportFormat::table : bfca::ReportFormat::csv;
}

void print_reports(std::ostream& out, const bfca::ClassCounters& counters,
                   const bfca::ClassRegistry& reg, bfca::ReportFormat format,
                   const std::string& shape, bool include_empty) {
  const bool five = shape == "five" || shape == "both";
  const bool pres = shape == "preservation" || shape == "both";
  if (five) {
    out << "# five-variable census\n";
    out << bfca::render_report(counters, bfca::ReportShape::five_var, format,
                               reg, include_empty);
  }
  if (five && pres) out << "\n";
  if (pres) {
    out << "# preservation census\n";
    out << bfca::render_report(counters, bfca::ReportShape::preservation,
                               format, reg, include_empty);
  }
}

struct ProgressPrinter {
  bool quiet = false;
  void operator()(std::uint64_t done, std::uint64_t total) const {
    if (quiet) return;
    const std::uint64_t stride = total > 100 ? total / 100 : 1;
    if (done % stride == 0 || done == total)
      std::cerr << "progress: " << done << "/" << total << " chunks\n";
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean function toolkit for 5-neighborhood automaton rules"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string registry_path;
  app.add_option("--registry", registry_path,
                 "Class table CSV (defaults to the built-in table)");

  // analyze
  std::string an_table;
  int an_arity = 5;
  bool an_csv = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze one function");
  analyze->add_option("table", an_table, "Truth table, hex or 0b binary")
      ->required();
  analyze->add_option("--arity", an_arity, "Number of variables (1-9)")
      ->required();
  analyze->add_flag("--csv", an_csv, "One CSV row instead of the block");

  // classify
  std::string cl_table;
  auto* classify = app.add_subcommand(
      "classify", "Affine class of a 5-variable function");
  classify->add_option("table", cl_table, "Truth table, hex or 0b binary")
      ->required();

  // extend
  std::string ex_table;
  bool ex_compare = false;
  auto* extend = app.add_subcommand(
      "extend", "9-variable extension of a 5-variable rule");
  extend->add_option("table", ex_table, "Truth table, hex or 0b binary")
      ->required();
  extend->add_flag("--compare", ex_compare,
                   "Also report which properties survive the extension");

  // evolve
  std::string ev_rule, ev_initial = "single", ev_boundary = "circular";
  int ev_arity = 5, ev_width = 0, ev_steps = 20;
  auto* evolve = app.add_subcommand("evolve", "Print an automaton evolution");
  evolve->add_option("rule", ev_rule, "Rule table, hex or 0b binary")
      ->required();
  evolve->add_option("--arity", ev_arity, "Rule arity (odd)")->required();
  evolve->add_option("--width", ev_width, "Row width in cells")->required();
  evolve->add_option("--steps", ev_steps, "Number of steps");
  evolve->add_option("--initial", ev_initial,
                     "Initial row as 0/1 or ./# characters, or 'single'");
  evolve->add_option("--boundary", ev_boundary, "circular or truncating")
      ->check(CLI::IsMember({"circular", "truncating"}));

  // class-sweep
  std::string cs_class, cs_format = "table";
  int cs_workers = 1;
  std::uint64_t cs_limit = 4000000;
  auto* class_sweep = app.add_subcommand(
      "class-sweep", "Census of one affine class by orbit enumeration");
  class_sweep->add_option("class", cs_class, "Class representative (hex)")
      ->required();
  class_sweep->add_option("--workers", cs_workers, "Worker threads");
  class_sweep->add_option("--limit", cs_limit, "Orbit size limit");
  class_sweep->add_option("--format", cs_format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));

  // sweep
  std::uint64_t sw_begin = 0, sw_end = 1ull << 32, sw_sample = 0,
                sw_seed = 1, sw_chunk = 1u << 20, sw_every = 1;
  int sw_workers = 1;
  std::string sw_checkpoint, sw_resume_path, sw_out, sw_format = "table";
  bool sw_quiet = false;
  std::string sw_range;
  auto* sweep = app.add_subcommand(
      "sweep", "Census over a rule range or a pseudorandom sample");
  auto* range_opt =
      sweep->add_option("--range", sw_range, "Rule range as begin:end (end exclusive)");
  auto* begin_opt = sweep->add_option("--begin", sw_begin,
                                      "First rule word (default 0)")
                        ->excludes(range_opt);
  auto* end_opt = sweep->add_option("--end", sw_end,
                                    "One past the last rule word (default 2^32)")
                      ->excludes(range_opt);
  auto* sample_opt =
      sweep->add_option("--sample", sw_sample, "Sample this many rules instead")
          ->excludes(range_opt);
  sweep->add_option("--seed", sw_seed, "Sampling seed")->needs(sample_opt);
  sweep->add_option("--workers", sw_workers, "Worker threads");
  sweep->add_option("--chunk-size", sw_chunk, "Rules per work chunk");
  sweep->add_option("--checkpoint", sw_checkpoint,
                    "Checkpoint file to write during the run");
  sweep->add_option("--resume", sw_resume_path,
                    "Continue from this checkpoint file (and keep writing to "
                    "it, unless --checkpoint names another)")
      ->excludes(range_opt)
      ->excludes(begin_opt)
      ->excludes(end_opt)
      ->excludes(sample_opt);
  sweep->add_option("--checkpoint-every", sw_every,
                    "Folded chunks between checkpoint writes");
  sweep->add_option("--out", sw_out, "Write final counters to this file");
  sweep->add_option("--format", sw_format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));
  sweep->add_flag("--quiet", sw_quiet, "No progress lines on stderr");

  // report
  std::string rp_file, rp_shape = "both", rp_format = "table";
  auto* report = app.add_subcommand("report", "Render a counters file");
  report->add_option("file", rp_file, "Counters/checkpoint file")->required();
  report->add_option("--shape", rp_shape, "five, preservation or both")
      ->check(CLI::IsMember({"five", "preservation", "both"}));
  report->add_option("--format", rp_format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::optional<bfca::ClassRegistry> custom;
    if (!registry_path.empty())
      custom = bfca::ClassRegistry::from_csv_file(registry_path);
    const bfca::ClassRegistry& reg =
        custom ? *custom : bfca::ClassRegistry::builtin();

    if (*analyze) {
      const bfca::TruthTable t = parse_table(an_table, an_arity);
      const bfca::PropertyProfile p = property_profile(t);
      if (an_csv) {
        std::cout << bfca::kProfileCsvHeader << "\n"
                  << profile_csv_row(table_id(t), p) << "\n";
      } else {
        std::cout << (t.arity() >= 2 ? "hex: " + t.to_hex()
                                     : "binary: " + t.to_binary())
                  << "\n";
        std::cout << "arity: " << t.arity() << "\n";
        print_profile_lines(std::cout, t, p);
        std::cout << "anf: " << anf(t).to_string() << "\n";
        const bfca::WalshSpectrum s = walsh_spectrum(t);
        std::int32_t max_abs = 0;
        for (const std::int32_t v : s.coefficients)
          max_abs = std::max(max_abs, v < 0 ? -v : v);
        std::cout << "walsh_s0: " << s[0] << "\n";
        std::cout << "walsh_max_abs: " << max_abs << "\n";
      }
    }

    if (*classify) {
      std::cout << reg.classify(parse_table(cl_table, 5)) << "\n";
    }

    if (*extend) {
      const bfca::TruthTable rule = parse_table(ex_table, 5);
      const bfca::TruthTable g = extend_5_to_9(rule);
      std::cout << "rule: " << rule.to_hex() << "\n";
      std::cout << "class: " << reg.classify(rule) << "\n";
      std::cout << "extended: " << g.to_hex() << "\n";
      print_profile_lines(std::cout, g, property_profile(g));
      if (ex_compare) {
        const bfca::PreservationRecord rec = preservation_record(rule, reg);
        std::cout << "preserved:"
                  << " balanced=" << yesno(rec.preserved.balanced)
                  << " ci1=" << yesno(rec.preserved.ci1)
                  << " sac=" << yesno(rec.preserved.sac)
                  << " pc2=" << yesno(rec.preserved.pc2)
                  << " pc3=" << yesno(rec.preserved.pc3)
                  << " pc4=" << yesno(rec.preserved.pc4)
                  << " pc5=" << yesno(rec.preserved.pc5)
                  << " degree_ge=" << yesno(rec.preserved.degree_ge)
                  << " nonlinear=" << yesno(rec.preserved.nonlinear) << "\n";
      }
    }

    if (*evolve) {
      const bfca::TruthTable rule = parse_table(ev_rule, ev_arity);
      if (rule.arity() % 2 == 0)
        throw bfca::DomainError("evolve needs an odd rule arity");
      if (ev_width < 1) throw bfca::DomainError("width must be positive");
      bfca::CAState state;
      state.rule = rule;
      state.boundary = ev_boundary == "circular" ? bfca::Boundary::circular
                                                 : bfca::Boundary::truncating;
      if (ev_steps < 0) throw bfca::DomainError("steps must be non-negative");
      if (state.boundary == bfca::Boundary::truncating &&
          ev_steps > 0 &&
          static_cast<long long>(ev_width) <
              static_cast<long long>(rule.arity() - 1) * ev_steps + 1)
        throw bfca::DomainError(
            "width " + std::to_string(ev_width) + " is too small for " +
            std::to_string(ev_steps) + " truncating steps");
      state.cells.assign(static_cast<std::size_t>(ev_width), 0);
      if (ev_initial == "single") {
        state.cells[static_cast<std::size_t>(ev_width) / 2] = 1;
      } else {
        if (ev_initial.size() != static_cast<std::size_t>(ev_width))
          throw bfca::ParseError("initial row must have width " +
                                 std::to_string(ev_width));
        for (std::size_t i = 0; i < ev_initial.size(); ++i) {
          const char c = ev_initial[i];
          if (c == '1' || c == '#') state.cells[i] = 1;
          else if (c != '0' && c != '.')
            throw bfca::ParseError(std::string("invalid cell character '") +
                                   c + "'");
        }
      }
      std::cout << bfca::render_row(state.cells) << "\n";
      for (int s = 0; s < ev_steps; ++s) {
        state = ca_step(state);
        std::cout << bfca::render_row(state.cells) << "\n";
      }
    }

    if (*class_sweep) {
      const int idx = reg.index_of_hex(cs_class);
      if (idx < 0)
        throw bfca::DomainError("'" + cs_class +
                                "' is not a class representative");
      const bfca::ClassCounters counters = run_class_sweep(
          idx, reg, cs_workers, static_cast<std::size_t>(cs_limit));
      print_reports(std::cout, counters, reg, parse_format(cs_format), "both",
                    false);
    }

    if (*sweep) {
      if (sweep->count("--range")) {
        const std::size_t colon = sw_range.find(':');
        std::size_t a = 0, b = 0;
        bool good = colon != std::string::npos;
        if (good) {
          try {
            sw_begin = std::stoull(sw_range.substr(0, colon), &a);
            sw_end = std::stoull(sw_range.substr(colon + 1), &b);
          } catch (const std::exception&) {
            good = false;
          }
          good = good && a == colon && b == sw_range.size() - colon - 1;
        }
        if (!good)
          throw bfca::ParseError("range must be begin:end, got '" + sw_range + "'");
      }
      bfca::SweepOptions opt;
      opt.workers = sw_workers;
      opt.chunk_size = sw_chunk;
      opt.checkpoint_path = sw_checkpoint;
      opt.checkpoint_every = sw_every;
      ProgressPrinter progress{sw_quiet};
      opt.progress = progress;

      bfca::SweepResult result;
      const bool resumed = sweep->count("--resume") > 0;
      bfca::SweepCheckpoint prev;
      if (resumed) {
        prev = read_checkpoint(sw_resume_path, reg);
        result = resume_sweep(sw_resume_path, opt, reg);
      } else if (sweep->count("--sample")) {
        result = run_sampled_sweep(sw_sample, sw_seed, opt, reg);
      } else {
        result = run_sweep(sw_begin, sw_end, opt, reg);
      }
      if (!sw_out.empty()) {
        bfca::SweepCheckpoint cp;
        if (resumed) {
          cp = prev;  // keep the original range and sampling provenance
        } else {
          cp.range_begin = sw_begin;
          cp.range_end = result.next_index;
          if (sweep->count("--sample")) {
            cp.range_begin = 0;
            cp.range_end = sw_sample;
            cp.sampled = true;
            cp.sample_seed = sw_seed;
          }
          cp.chunk_size = sw_chunk;
        }
        cp.next_index = result.next_index;
        cp.counters = result.counters;
        write_checkpoint(sw_out, cp, reg);
      }
      print_reports(std::cout, result.counters, reg, parse_format(sw_format),
                    "both", true);
    }

    if (*report) {
      const bfca::SweepCheckpoint cp = read_checkpoint(rp_file, reg);
      print_reports(std::cout, cp.counters, reg, parse_format(rp_format),
                    rp_shape, true);
    }
  } catch (const bfca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
