// Acceptance checks. Each numbered criterion prints exactly one PASS/FAIL
// line; the exit code is the number of failures. The exhaustive 2^32 census
// is expensive and runs only with --full-sweep-only (everything else is
// skipped in that mode).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bfca/bfca.hpp"
#include "census_expected.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace {

int failures = 0;

void verdict(int idx, const std::string& name, bool ok,
             const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << name;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n" << std::flush;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << s << "s";
  return out.str();
}

// --- criterion 1: worked example through the CLI, plus the timing bound ----

void criterion_worked_example() {
  const std::string expect = "anf: x0x1x2 + x0x1 + x0 + x1";
  const auto run =
      testsupport::run_command(std::string(BFCA_CLI_PATH) + " analyze 6e --arity 3");
  bool cli_ok = run.exit_code == 0;
  if (cli_ok) {
    bool found = false;
    std::istringstream in(run.output);
    for (std::string line; std::getline(in, line);)
      if (line == expect) found = true;
    cli_ok = found;
  }

  const bfca::TruthTable rule110 = bfca::TruthTable::from_hex("6e", 3);
  const std::size_t reps = 1000;
  std::size_t sink = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < reps; ++i) sink += anf(rule110).to_string().size();
  const double per_call = seconds_since(t0) / static_cast<double>(reps);
  const bool fast_ok =
      per_call < 1e-3 && sink == reps * (expect.size() - std::strlen("anf: "));

  verdict(1, "analyze 6e prints the rule-110 normal form", cli_ok && fast_ok,
          cli_ok ? (fast_ok ? "" : "computation above 1 ms") : "missing line");
}

// --- criteria 2-5: orbit enumeration and censuses of the small classes -----

void criteria_enumerable_classes() {
  const bfca::ClassRegistry& reg = bfca::ClassRegistry::builtin();
  bool counts_ok = true, census_ok = true, preserved_ok = true, deg1_ok = true;
  std::string counts_bad, census_bad, preserved_bad, deg1_bad;

  const auto t0 = std::chrono::steady_clock::now();
  double orbit_seconds = 0;

  for (const auto& e : census_expected::kEnumerable) {
    const int idx = reg.index_of_hex(e.rep);
    if (idx < 0) {
      counts_ok = false;
      counts_bad = std::string(e.rep) + " not in registry";
      continue;
    }
    const auto o0 = std::chrono::steady_clock::now();
    const std::vector<std::uint32_t> orbit =
        orbit_enumerate(bfca::TruthTable::from_hex(e.rep, 5), 2'600'000);
    orbit_seconds += seconds_since(o0);
    if (orbit.size() != e.members) {
      counts_ok = false;
      counts_bad = std::string(e.rep) + " gave " + std::to_string(orbit.size());
    }

    const bfca::ClassCounters counters = sweep_rule_list(orbit, 1, reg);
    const bfca::ClassCounters::Row& row = counters.rows[idx];
    const bfca::ClassCounters::Row total = counters.total();
    if (total.members != orbit.size() || row.members != orbit.size()) {
      census_ok = false;
      census_bad = std::string(e.rep) + " members leaked to another class";
    }
    if (row.sac != e.sac || row.ci1 != e.ci1 || row.balanced != e.balanced ||
        row.pc[0] != e.pc2 || row.pc[1] != e.pc3 || row.pc[2] != e.pc4 ||
        row.pc[3] != e.pc5 ||
        reg.info(idx).rep_degree != e.degree) {
      census_ok = false;
      census_bad = e.rep;
    }
    if (row.sac_pres != e.sac_pres || row.ci1_pres != e.ci1_pres ||
        row.balanced_pres != e.balanced_pres ||
        row.pc_pres[0] != 0 || row.pc_pres[1] != 0 || row.pc_pres[2] != 0 ||
        row.pc_pres[3] != 0 ||
        row.deg_ge_pres != e.deg_ge_pres ||
        row.nonlinear_pres != e.nonlinear_pres) {
      preserved_ok = false;
      preserved_bad = e.rep;
    }

    if (std::strcmp(e.rep, "aa55aa55") == 0) {
      // Every balanced member of the linear class must extend to a
      // balanced 9-variable function.
      std::uint64_t balanced5 = 0, balanced9 = 0;
      for (const std::uint32_t r : orbit) {
        const bfca::TruthTable t = bfca::TruthTable::from_u32(r, 5);
        if (!is_balanced(t)) continue;
        ++balanced5;
        balanced9 += is_balanced(extend_5_to_9(t));
      }
      deg1_ok = balanced5 == 62 && balanced9 == 62;
      deg1_bad = std::to_string(balanced9) + "/" + std::to_string(balanced5) +
                 " stayed balanced";
    }
  }

  const double elapsed = seconds_since(t0);
  counts_ok = counts_ok && orbit_seconds < 600;
  verdict(2, "orbit sizes match for all 15 enumerable classes", counts_ok,
          counts_ok ? fmt_seconds(orbit_seconds) : counts_bad);
  verdict(3, "5-variable census rows match for the enumerable classes",
          census_ok, census_ok ? "" : census_bad);
  preserved_ok = preserved_ok && elapsed < 1800;
  verdict(4, "preservation rows match for the enumerable classes",
          preserved_ok, preserved_ok ? fmt_seconds(elapsed) : preserved_bad);
  verdict(5, "all 62 degree-1 balanced rules extend to balanced functions",
          deg1_ok, deg1_ok ? "" : deg1_bad);
}

// --- criterion 6: fast paths against their literal reference versions ------

void criterion_oracles() {
  std::mt19937_64 rng(271828);
  bool ok = true;
  std::string bad;

  for (const int arity : {3, 5, 9}) {
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      const bfca::TruthTable t = testsupport::random_table(rng, arity);

      const bfca::WalshSpectrum s = walsh_spectrum(t);
      for (std::uint32_t w = 0; w < t.size(); ++w)
        if (s[w] != oracles::walsh_naive(t, w)) {
          ok = false;
          bad = "walsh arity " + std::to_string(arity);
          break;
        }

      const bfca::AnfPolynomial p = anf(t);
      for (std::uint32_t x = 0; x < t.size() && ok; ++x)
        if (oracles::anf_eval_naive(p, x) != t.bit(x)) {
          ok = false;
          bad = "anf arity " + std::to_string(arity);
        }

      if (ok && arity == 5 && !(extend_5_to_9(t) == oracles::extend_via_ca(t))) {
        ok = false;
        bad = "extension of " + t.to_hex();
      }
    }
  }
  verdict(6, "transforms and extension agree with reference evaluators", ok,
          bad);
}

// --- criterion 7: signature distinctness and classification stability ------

void criterion_classification() {
  const bfca::ClassRegistry& reg = bfca::ClassRegistry::builtin();
  bool ok = true;
  std::string bad;

  for (int i = 0; i < reg.size() && ok; ++i)
    for (int j = i + 1; j < reg.size() && ok; ++j)
      if (!(reg.signature_of(i) < reg.signature_of(j)) &&
          !(reg.signature_of(j) < reg.signature_of(i))) {
        ok = false;
        bad = "signatures collide: " + reg.info(i).rep_hex + " vs " +
              reg.info(j).rep_hex;
      }

  std::mt19937_64 rng(1234);
  for (int i = 0; i < reg.size() && ok; ++i) {
    const bfca::TruthTable rep = bfca::TruthTable::from_hex(reg.info(i).rep_hex, 5);
    for (int k = 0; k < 100; ++k) {
      const bfca::AffineTransform tr = bfca::random_transform(rng);
      if (reg.classify_index(apply_transform(rep, tr)) != i) {
        ok = false;
        bad = reg.info(i).rep_hex + " misclassified under a random transform";
        break;
      }
    }
  }
  verdict(7, "48 distinct signatures, classification invariant under maps",
          ok, bad);
}

// --- criterion 8: worker-count determinism and checkpoint resume -----------

void criterion_determinism() {
  const std::uint64_t begin = 7'000'000, end = begin + (1u << 20);
  bool ok = true;
  std::string bad;

  bfca::SweepOptions opt;
  opt.chunk_size = 1u << 16;

  opt.workers = 1;
  const bfca::SweepResult one = run_sweep(begin, end, opt);
  for (const int workers : {4, 16}) {
    opt.workers = workers;
    const bfca::SweepResult w = run_sweep(begin, end, opt);
    if (!(w.counters == one.counters)) {
      ok = false;
      bad = std::to_string(workers) + " workers diverged";
    }
  }

  if (ok) {
    const std::string path = "acceptance_ckpt.txt";
    bfca::SweepOptions first;
    first.workers = 4;
    first.chunk_size = 1u << 16;
    first.checkpoint_path = path;
    first.stop_after_chunks = 5;
    const bfca::SweepResult partial = run_sweep(begin, end, first);
    if (partial.completed) {
      ok = false;
      bad = "interrupted run claims completion";
    } else {
      bfca::SweepOptions rest;
      rest.workers = 4;
      const bfca::SweepResult resumed = bfca::resume_sweep(path, rest);
      if (!resumed.completed || !(resumed.counters == one.counters)) {
        ok = false;
        bad = "resumed counters differ from the one-shot run";
      }
    }
    std::remove(path.c_str());
  }
  verdict(8, "sweeps are deterministic across workers and resume", ok, bad);
}

// --- criterion 9: sampled census against the full-space proportions --------

void criterion_sampled() {
  const std::uint64_t n = 10'000'000;
  bfca::SweepOptions opt;
  opt.workers = 1;
  opt.chunk_size = 1u << 18;
  const bfca::SweepResult res = run_sampled_sweep(n, 42, opt);
  const bfca::ClassCounters::Row t = res.counters.total();

  bool ok = t.members == n;
  std::string bad = ok ? "" : "sample size mismatch";

  const double space = 4294967296.0;
  auto within = [&](const char* name, std::uint64_t observed,
                    std::uint64_t population) {
    const double p = static_cast<double>(population) / space;
    const double mean = static_cast<double>(n) * p;
    const double sigma = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
    if (std::abs(static_cast<double>(observed) - mean) <= 3.0 * sigma) return;
    ok = false;
    bad = std::string(name) + " observed " + std::to_string(observed) +
          " expected " + std::to_string(mean) + "±" + std::to_string(3 * sigma);
  };

  within("sac", t.sac, census_expected::kTotalSac);
  within("ci1", t.ci1, census_expected::kTotalCi1);
  within("balanced", t.balanced, census_expected::kTotalBalanced);
  within("pc2", t.pc[0], census_expected::kTotalPc2);
  within("pc3", t.pc[1], census_expected::kTotalPc3);
  within("pc4", t.pc[2], census_expected::kTotalPc4);
  within("ci1_pres", t.ci1_pres, census_expected::kTotalCi1Pres);
  within("balanced_pres", t.balanced_pres, census_expected::kTotalBalancedPres);
  if (t.pc[3] != 0 || t.sac_pres != 0 ||
      t.pc_pres != std::array<std::uint64_t, 4>{}) {
    ok = false;
    bad = "a never-satisfied property was counted";
  }
  verdict(9, "10^7-rule sample lands within 3 sigma of the census", ok, bad);
}

void criterion_full_sweep() {
  bfca::SweepOptions opt;
  opt.workers = 4;
  opt.chunk_size = 1u << 24;
  opt.progress = [](std::uint64_t done, std::uint64_t total) {
    std::cerr << "full sweep: " << done << "/" << total << " chunks\n";
  };
  const bfca::SweepResult res = run_sweep(0, 1ull << 32, opt);
  const bfca::ClassCounters::Row t = res.counters.total();
  const bfca::ClassRegistry& reg = bfca::ClassRegistry::builtin();

  bool ok = t.members == (1ull << 32);
  std::string bad;
  for (int i = 0; i < reg.size(); ++i)
    if (res.counters.rows[i].members != reg.info(i).expected_count) {
      ok = false;
      bad = "class " + reg.info(i).rep_hex + " count " +
            std::to_string(res.counters.rows[i].members);
    }
  auto exact = [&](const char* name, std::uint64_t got, std::uint64_t want) {
    if (got == want) return;
    ok = false;
    bad = std::string(name) + " = " + std::to_string(got) + ", expected " +
          std::to_string(want);
  };
  exact("sac", t.sac, census_expected::kTotalSac);
  exact("ci1", t.ci1, census_expected::kTotalCi1);
  exact("balanced", t.balanced, census_expected::kTotalBalanced);
  exact("pc2", t.pc[0], census_expected::kTotalPc2);
  exact("pc3", t.pc[1], census_expected::kTotalPc3);
  exact("pc4", t.pc[2], census_expected::kTotalPc4);
  exact("pc5", t.pc[3], census_expected::kTotalPc5);
  exact("sac_pres", t.sac_pres, census_expected::kTotalSacPres);
  exact("ci1_pres", t.ci1_pres, census_expected::kTotalCi1Pres);
  exact("balanced_pres", t.balanced_pres, census_expected::kTotalBalancedPres);
  verdict(9, "full 2^32 sweep reproduces the census totals", ok, bad);
}

} // namespace

int main(int argc, char** argv) {
  const bool full_only =
      argc > 1 && std::strcmp(argv[1], "--full-sweep-only") == 0;
  if (full_only) {
    criterion_full_sweep();
    return failures;
  }
  criterion_worked_example();
  criteria_enumerable_classes();
  criterion_oracles();
  criterion_classification();
  criterion_determinism();
  criterion_sampled();
  return failures;
}
