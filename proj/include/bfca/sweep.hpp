#pragma once

// Census machinery: per-class property counters over ranges of 5-variable
// rules, their 9-variable extensions, deterministic multi-threaded sweeps
// with resumable checkpoints, and single-rule preservation records.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bfca/affine.hpp"
#include "bfca/cellular.hpp"
#include "bfca/class_registry.hpp"
#include "bfca/detail/bits.hpp"
#include "bfca/error.hpp"
#include "bfca/properties.hpp"
#include "bfca/truth_table.hpp"

namespace bfca {

struct ClassCounters {
  struct Row {
    std::uint64_t members = 0;
    std::uint64_t sac = 0;
    std::uint64_t ci1 = 0;
    std::uint64_t balanced = 0;
    std::array<std::uint64_t, 4> pc{}; // pc[k-2]: propagation order >= k
    std::uint64_t sac_pres = 0;
    std::uint64_t ci1_pres = 0;
    std::uint64_t balanced_pres = 0;
    std::array<std::uint64_t, 4> pc_pres{};
    std::uint64_t deg_ge_pres = 0;
    std::uint64_t nonlinear_pres = 0;

    Row& operator+=(const Row& o) {
      members += o.members;
      sac += o.sac;
      ci1 += o.ci1;
      balanced += o.balanced;
      for (int i = 0; i < 4; ++i) pc[i] += o.pc[i];
      sac_pres += o.sac_pres;
      ci1_pres += o.ci1_pres;
      balanced_pres += o.balanced_pres;
      for (int i = 0; i < 4; ++i) pc_pres[i] += o.pc_pres[i];
      deg_ge_pres += o.deg_ge_pres;
      nonlinear_pres += o.nonlinear_pres;
      return *this;
    }
    bool operator==(const Row&) const = default;
  };

  std::array<Row, ClassRegistry::kNumClasses> rows{};

  ClassCounters& operator+=(const ClassCounters& o) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] += o.rows[i];
    return *this;
  }

  Row total() const {
    Row t;
    for (const Row& r : rows) t += r;
    return t;
  }

  bool operator==(const ClassCounters&) const = default;
};

inline ClassCounters merge(const ClassCounters& a, const ClassCounters& b) {
  ClassCounters out = a;
  out += b;
  return out;
}

namespace detail {

inline const std::array<Words, 9>& projections9() {
  static const std::array<Words, 9> p = [] {
    std::array<Words, 9> t{};
    for (int j = 0; j < 9; ++j)
      for (int k = 0; k < 8; ++k) t[j][k] = projection_word(j, k);
    return t;
  }();
  return p;
}

// Index masks of the 9-bit directions grouped by weight 2..5; shell k-2
// holds the directions of weight exactly k.
inline const std::array<std::vector<std::uint32_t>, 4>& direction_shells9() {
  static const std::array<std::vector<std::uint32_t>, 4> shells = [] {
    std::array<std::vector<std::uint32_t>, 4> s;
    for (std::uint32_t a = 1; a < 512; ++a) {
      const int w = std::popcount(a);
      if (w >= 2 && w <= 5) s[w - 2].push_back(a);
    }
    return s;
  }();
  return shells;
}

struct Rule5Facts {
  int class_index = 0;
  bool balanced = false;
  bool ci1 = false;
  bool sac = false;
  int pc_order = 0;
  int degree = 0;
};

inline Rule5Facts analyze_rule5(std::uint32_t rule, const ClassRegistry& reg) {
  std::array<std::int32_t, 32> s;
  for (std::uint32_t x = 0; x < 32; ++x)
    s[x] = (rule >> x & 1) ? -1 : 1;
  fwht(s);
  std::array<std::int32_t, 32> r;
  for (int i = 0; i < 32; ++i) r[i] = s[i] * s[i];
  fwht(r);

  Rule5Facts f;
  f.balanced = s[0] == 0;
  f.ci1 = !(s[1] | s[2] | s[4] | s[8] | s[16]);
  f.pc_order = 5;
  for (std::uint32_t a = 1; a < 32; ++a)
    if (r[a] != 0) f.pc_order = std::min(f.pc_order, std::popcount(a) - 1);
  f.sac = f.pc_order >= 1;

  ClassSignature sig;
  for (int i = 0; i < 32; ++i) {
    sig.walsh_abs[i] = static_cast<std::uint8_t>(s[i] < 0 ? -s[i] : s[i]);
    const std::int32_t a = r[i] >> 5;
    sig.autocorr_abs[i] = static_cast<std::uint8_t>(a < 0 ? -a : a);
  }
  std::sort(sig.walsh_abs.begin(), sig.walsh_abs.end());
  std::sort(sig.autocorr_abs.begin(), sig.autocorr_abs.end());
  std::uint64_t anf = rule;
  mobius_inplace(&anf, 5);
  f.degree = anf_degree(&anf, 5);
  // Same degree folding as the signature path: constants classify with the
  // degree-1 functions.
  sig.degree = static_cast<std::uint8_t>(std::max(1, f.degree));
  f.class_index = reg.classify_index(sig);
  return f;
}

// Full census contribution of one rule. The 9-variable side is evaluated
// lazily: a preservation bit can only be set when the 5-variable property
// holds, so the expensive checks run for a small minority of rules.
inline void accumulate_rule(std::uint32_t rule, const ClassRegistry& reg,
                            ClassCounters& cc) {
  const Rule5Facts f5 = analyze_rule5(rule, reg);
  ClassCounters::Row& row = cc.rows[f5.class_index];
  ++row.members;
  row.balanced += f5.balanced;
  row.ci1 += f5.ci1;
  row.sac += f5.sac;
  for (int k = 2; k <= 5; ++k) row.pc[k - 2] += f5.pc_order >= k;

  const Words g = extend_words(rule);

  Words anf9 = g;
  mobius_inplace(anf9.data(), 9);
  const int deg9 = anf_degree(anf9.data(), 9);
  row.deg_ge_pres += deg9 >= f5.degree;
  row.nonlinear_pres += f5.degree >= 2 && deg9 >= 2;

  if (f5.balanced)
    row.balanced_pres += popcount_words(g.data(), 9) == 256;

  if (f5.ci1) {
    bool ok = true;
    const auto& proj = projections9();
    for (int j = 0; j < 9 && ok; ++j) {
      int w = 0;
      for (int k = 0; k < 8; ++k) w += std::popcount(g[k] ^ proj[j][k]);
      ok = w == 256;
    }
    row.ci1_pres += ok;
  }

  if (f5.sac) {
    bool sac9 = true;
    for (int j = 0; j < 9 && sac9; ++j)
      sac9 = derivative_weight(g.data(), 9, 1u << j) == 256;
    row.sac_pres += sac9;
    if (sac9 && f5.pc_order >= 2) {
      const auto& shells = direction_shells9();
      int pc9 = 1;
      for (int k = 2; k <= f5.pc_order; ++k) {
        bool all = true;
        for (const std::uint32_t a : shells[k - 2])
          if (derivative_weight(g.data(), 9, a) != 256) { all = false; break; }
        if (!all) break;
        pc9 = k;
      }
      for (int k = 2; k <= f5.pc_order; ++k) row.pc_pres[k - 2] += pc9 >= k;
    }
  }
}

} // namespace detail

// Which properties survive the 5-to-9 extension for a single rule.
struct PreservedBits {
  bool balanced = false;
  bool ci1 = false;
  bool sac = false;
  bool pc2 = false, pc3 = false, pc4 = false, pc5 = false;
  bool degree_ge = false;
  bool nonlinear = false;

  bool operator==(const PreservedBits&) const = default;
};

struct PreservationRecord {
  std::string rule_hex;
  std::string class_hex;
  int class_index = 0;
  PropertyProfile five;
  PropertyProfile nine;
  PreservedBits preserved;
};

inline PreservationRecord preservation_record(
    const TruthTable& rule,
    const ClassRegistry& registry = ClassRegistry::builtin()) {
  if (rule.arity() != 5)
    throw DomainError("preservation records are defined for 5-variable rules");
  PreservationRecord rec;
  rec.rule_hex = rule.to_hex();
  rec.class_index = registry.classify_index(rule);
  rec.class_hex = registry.info(rec.class_index).rep_hex;
  rec.five = property_profile(rule);
  rec.nine = property_profile(extend_5_to_9(rule));
  rec.preserved.balanced = rec.five.balanced && rec.nine.balanced;
  rec.preserved.ci1 = rec.five.ci1 && rec.nine.ci1;
  rec.preserved.sac = rec.five.sac && rec.nine.sac;
  rec.preserved.pc2 = rec.five.pc_order >= 2 && rec.nine.pc_order >= 2;
  rec.preserved.pc3 = rec.five.pc_order >= 3 && rec.nine.pc_order >= 3;
  rec.preserved.pc4 = rec.five.pc_order >= 4 && rec.nine.pc_order >= 4;
  rec.preserved.pc5 = rec.five.pc_order >= 5 && rec.nine.pc_order >= 5;
  rec.preserved.degree_ge = rec.nine.degree >= rec.five.degree;
  rec.preserved.nonlinear = rec.five.nonlinear && rec.nine.nonlinear;
  return rec;
}

// ---------------------------------------------------------------------------
// Checkpoint files: versioned line-oriented text, written atomically via a
// temporary file and rename, so a killed sweep never leaves a torn file.

struct SweepCheckpoint {
  std::uint64_t range_begin = 0;
  std::uint64_t range_end = 0;
  std::uint64_t next_index = 0; // first index not yet folded
  std::uint64_t chunk_size = 0;
  bool sampled = false;
  std::uint64_t sample_seed = 0;
  ClassCounters counters;
};

namespace detail {

inline constexpr const char* kCheckpointMagic = "bfca-sweep-checkpoint 1";

inline void render_counters(std::ostream& out, const ClassCounters& c,
                            const ClassRegistry& reg) {
  out << "classes " << reg.size() << "\n";
  for (int i = 0; i < reg.size(); ++i) {
    const ClassCounters::Row& r = c.rows[i];
    out << reg.info(i).rep_hex << ' ' << r.members << ' ' << r.sac << ' '
        << r.ci1 << ' ' << r.balanced;
    for (int k = 0; k < 4; ++k) out << ' ' << r.pc[k];
    out << ' ' << r.sac_pres << ' ' << r.ci1_pres << ' ' << r.balanced_pres;
    for (int k = 0; k < 4; ++k) out << ' ' << r.pc_pres[k];
    out << ' ' << r.deg_ge_pres << ' ' << r.nonlinear_pres << "\n";
  }
}

inline void parse_counters(std::istream& in, ClassCounters& c,
                           const ClassRegistry& reg, const char* what) {
  std::string line;
  if (!std::getline(in, line) || line != "classes 48")
    throw CheckpointError(std::string(what) + ": bad class-count line");
  for (int i = 0; i < reg.size(); ++i) {
    if (!std::getline(in, line))
      throw CheckpointError(std::string(what) + ": truncated counter block");
    std::istringstream row(line);
    std::string hex;
    ClassCounters::Row& r = c.rows[i];
    row >> hex >> r.members >> r.sac >> r.ci1 >> r.balanced;
    for (int k = 0; k < 4; ++k) row >> r.pc[k];
    row >> r.sac_pres >> r.ci1_pres >> r.balanced_pres;
    for (int k = 0; k < 4; ++k) row >> r.pc_pres[k];
    row >> r.deg_ge_pres >> r.nonlinear_pres;
    if (!row || hex != reg.info(i).rep_hex)
      throw CheckpointError(std::string(what) + ": malformed row for class " +
                            reg.info(i).rep_hex);
  }
}

} // namespace detail

inline void write_checkpoint(const std::string& path, const SweepCheckpoint& cp,
                             const ClassRegistry& reg = ClassRegistry::builtin()) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint '" + tmp + "'");
    out << detail::kCheckpointMagic << "\n";
    out << "mode " << (cp.sampled ? "sample" : "full");
    if (cp.sampled) out << ' ' << cp.sample_seed;
    out << "\n";
    out << "range " << cp.range_begin << ' ' << cp.range_end << "\n";
    out << "chunk " << cp.chunk_size << "\n";
    out << "next " << cp.next_index << "\n";
    detail::render_counters(out, cp.counters, reg);
    out << "end\n";
    if (!out) throw CheckpointError("short write to checkpoint '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

inline SweepCheckpoint read_checkpoint(
    const std::string& path,
    const ClassRegistry& reg = ClassRegistry::builtin()) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot open checkpoint '" + path + "'");
  const char* what = "checkpoint";
  std::string line;
  if (!std::getline(in, line) || line != detail::kCheckpointMagic)
    throw CheckpointError("checkpoint: unrecognized header");
  SweepCheckpoint cp;
  if (!std::getline(in, line))
    throw CheckpointError("checkpoint: missing mode line");
  {
    std::istringstream ls(line);
    std::string key, mode;
    ls >> key >> mode;
    if (key != "mode" || (mode != "full" && mode != "sample"))
      throw CheckpointError("checkpoint: bad mode line");
    cp.sampled = mode == "sample";
    if (cp.sampled && !(ls >> cp.sample_seed))
      throw CheckpointError("checkpoint: sample mode needs a seed");
  }
  auto expect_u64 = [&](const char* key, std::uint64_t& a,
                        std::uint64_t* b = nullptr) {
    if (!std::getline(in, line))
      throw CheckpointError(std::string("checkpoint: missing ") + key);
    std::istringstream ls(line);
    std::string k;
    ls >> k >> a;
    if (b) ls >> *b;
    if (!ls || k != key)
      throw CheckpointError(std::string("checkpoint: bad ") + key + " line");
  };
  expect_u64("range", cp.range_begin, &cp.range_end);
  expect_u64("chunk", cp.chunk_size);
  expect_u64("next", cp.next_index);
  detail::parse_counters(in, cp.counters, reg, what);
  if (!std::getline(in, line) || line != "end")
    throw CheckpointError("checkpoint: missing end marker");
  if (cp.range_begin > cp.range_end || cp.next_index < cp.range_begin ||
      cp.next_index > cp.range_end || cp.chunk_size == 0)
    throw CheckpointError("checkpoint: inconsistent range");
  if ((cp.next_index - cp.range_begin) % cp.chunk_size != 0 &&
      cp.next_index != cp.range_end)
    throw CheckpointError("checkpoint: progress not aligned to chunk size");
  return cp;
}

// ---------------------------------------------------------------------------
// Sweep driver. Work is split into fixed chunks of the index space; workers
// grab chunks through an atomic cursor, and finished chunks are folded into
// the running total strictly in index order, so the counters (and every
// checkpoint) are identical for any worker count.

struct SweepOptions {
  int workers = 1;
  std::uint64_t chunk_size = 1u << 20;
  std::string checkpoint_path;      // empty: no checkpointing
  std::uint64_t checkpoint_every = 1; // in folded chunks
  std::uint64_t stop_after_chunks = 0; // 0: run to completion
  std::atomic<bool>* stop_flag = nullptr;
  std::function<void(std::uint64_t, std::uint64_t)> progress; // chunks done, total
};

struct SweepResult {
  ClassCounters counters;
  std::uint64_t next_index = 0;
  bool completed = false;
};

namespace detail {

struct SweepJob {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t resume_from = 0;
  ClassCounters initial;
};

inline SweepResult run_sweep_job(const SweepJob& job, const SweepOptions& opt,
                                 const ClassRegistry& reg) {
  const std::uint64_t chunk = opt.chunk_size ? opt.chunk_size : 1u << 20;
  const std::uint64_t every = std::max<std::uint64_t>(1, opt.checkpoint_every);
  const std::uint64_t total = job.end - job.begin;
  const std::uint64_t nchunks = (total + chunk - 1) / chunk;
  const std::uint64_t first = (job.resume_from - job.begin) / chunk;

  std::atomic<std::uint64_t> cursor{first};
  std::atomic<bool> halt{false};
  std::mutex fold_mutex;
  std::map<std::uint64_t, ClassCounters> pending;
  std::uint64_t frontier = first;
  std::uint64_t folds = 0;
  ClassCounters folded = job.initial;

  auto checkpoint_now = [&](std::uint64_t next) {
    SweepCheckpoint cp;
    cp.range_begin = job.begin;
    cp.range_end = job.end;
    cp.next_index = next;
    cp.chunk_size = chunk;
    cp.sampled = job.sampled;
    cp.sample_seed = job.seed;
    cp.counters = folded;
    write_checkpoint(opt.checkpoint_path, cp, reg);
  };

  auto worker = [&] {
    for (;;) {
      if (halt.load(std::memory_order_relaxed)) return;
      if (opt.stop_flag && opt.stop_flag->load(std::memory_order_relaxed)) return;
      const std::uint64_t k = cursor.fetch_add(1, std::memory_order_relaxed);
      if (k >= nchunks) return;
      const std::uint64_t lo = job.begin + k * chunk;
      const std::uint64_t hi = std::min(job.end, lo + chunk);
      ClassCounters local;
      for (std::uint64_t i = lo; i < hi; ++i) {
        const std::uint32_t rule = job.sampled
                                       ? sample_rule(job.seed, i)
                                       : static_cast<std::uint32_t>(i);
        accumulate_rule(rule, reg, local);
      }
      std::lock_guard<std::mutex> lock(fold_mutex);
      pending.emplace(k, std::move(local));
      if (halt.load(std::memory_order_relaxed)) return;
      for (auto it = pending.find(frontier); it != pending.end();
           it = pending.find(frontier)) {
        folded += it->second;
        pending.erase(it);
        ++frontier;
        ++folds;
        const std::uint64_t next =
            std::min(job.end, job.begin + frontier * chunk);
        const bool last = frontier == nchunks;
        const bool stop_now =
            opt.stop_after_chunks && folds >= opt.stop_after_chunks;
        if (!opt.checkpoint_path.empty() &&
            (folds % every == 0 || last || stop_now))
          checkpoint_now(next);
        if (opt.progress) opt.progress(frontier, nchunks);
        if (stop_now) {
          halt.store(true, std::memory_order_relaxed);
          break;
        }
      }
    }
  };

  const int nworkers = std::max(1, opt.workers);
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (int i = 0; i < nworkers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  SweepResult result;
  result.counters = folded;
  result.next_index = std::min(job.end, job.begin + frontier * chunk);
  result.completed = result.next_index == job.end;
  if (!opt.checkpoint_path.empty()) checkpoint_now(result.next_index);
  return result;
}

} // namespace detail

// Exhaustive census of the rules in [begin, end) as 32-bit words.
inline SweepResult run_sweep(std::uint64_t begin, std::uint64_t end,
                             const SweepOptions& opt = {},
                             const ClassRegistry& reg = ClassRegistry::builtin()) {
  if (begin > end || end > (1ull << 32))
    throw DomainError("sweep range must satisfy begin <= end <= 2^32");
  detail::SweepJob job;
  job.begin = begin;
  job.end = end;
  job.resume_from = begin;
  return detail::run_sweep_job(job, opt, reg);
}

// Census of `count` pseudorandom rules drawn deterministically from a seed;
// sample i is fixed regardless of worker count or chunking.
inline SweepResult run_sampled_sweep(std::uint64_t count, std::uint64_t seed,
                                     const SweepOptions& opt = {},
                                     const ClassRegistry& reg =
                                         ClassRegistry::builtin()) {
  detail::SweepJob job;
  job.end = count;
  job.sampled = true;
  job.seed = seed;
  return detail::run_sweep_job(job, opt, reg);
}

// Continue a sweep from its checkpoint file. Chunk geometry comes from the
// file so resumption folds the exact chunks the interrupted run would have.
inline SweepResult resume_sweep(const std::string& checkpoint_path,
                                SweepOptions opt = {},
                                const ClassRegistry& reg =
                                    ClassRegistry::builtin()) {
  const SweepCheckpoint cp = read_checkpoint(checkpoint_path, reg);
  if (opt.checkpoint_path.empty()) opt.checkpoint_path = checkpoint_path;
  opt.chunk_size = cp.chunk_size;
  detail::SweepJob job;
  job.begin = cp.range_begin;
  job.end = cp.range_end;
  job.sampled = cp.sampled;
  job.seed = cp.sample_seed;
  job.resume_from = cp.next_index;
  job.initial = cp.counters;
  if (cp.next_index == cp.range_end) {
    SweepResult done;
    done.counters = cp.counters;
    done.next_index = cp.next_index;
    done.completed = true;
    return done;
  }
  return detail::run_sweep_job(job, opt, reg);
}

// Census of an explicit rule list, deterministically in list order.
inline ClassCounters sweep_rule_list(std::span<const std::uint32_t> rules,
                                     int workers = 1,
                                     const ClassRegistry& reg =
                                         ClassRegistry::builtin()) {
  const std::uint64_t chunk = 1u << 16;
  const std::uint64_t nchunks = (rules.size() + chunk - 1) / chunk;
  std::vector<ClassCounters> parts(nchunks);
  std::atomic<std::uint64_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t k = cursor.fetch_add(1);
      if (k >= nchunks) return;
      const std::uint64_t lo = k * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(rules.size(), lo + chunk);
      for (std::uint64_t i = lo; i < hi; ++i)
        detail::accumulate_rule(rules[i], reg, parts[k]);
    }
  };
  const int nworkers = std::max(1, workers);
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < nworkers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  ClassCounters out;
  for (const ClassCounters& p : parts) out += p;
  return out;
}

// Enumerate one class and run the census over exactly its members.
inline ClassCounters run_class_sweep(int class_index,
                                     const ClassRegistry& reg =
                                         ClassRegistry::builtin(),
                                     int workers = 1,
                                     std::size_t limit = 4'000'000) {
  const ClassInfo& info = reg.info(class_index);
  if (info.expected_count > limit)
    throw LimitExceeded("class " + info.rep_hex + " has " +
                        std::to_string(info.expected_count) +
                        " members, above the limit of " + std::to_string(limit));
  const TruthTable rep = TruthTable::from_hex(info.rep_hex, 5);
  const std::vector<std::uint32_t> orbit = orbit_enumerate(rep, limit);
  return sweep_rule_list(orbit, workers, reg);
}

} // namespace bfca
