#include "csst/distance.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "csst/errors.hpp"
#include "csst/parallel.hpp"

namespace csst {

std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::automatic:
      return "auto";
    case DistanceMethod::exhaustive:
      return "exhaustive";
    case DistanceMethod::information_set:
      return "information_set";
    case DistanceMethod::bound_only:
      return "bound_only";
  }
  return "unknown";
}

DistanceMethod parse_distance_method(const std::string& s) {
  if (s == "auto" || s == "automatic") return DistanceMethod::automatic;
  if (s == "exhaustive") return DistanceMethod::exhaustive;
  if (s == "information_set" || s == "infoset") return DistanceMethod::information_set;
  if (s == "bound_only") return DistanceMethod::bound_only;
  throw InvalidArgument("unknown distance method '" + s + "'");
}

DistanceResult min_of(const DistanceResult& a, const DistanceResult& b) {
  DistanceResult out;
  out.lower_bound = std::min(a.lower_bound, b.lower_bound);
  const DistanceResult& best = (b.upper_bound < a.upper_bound) ? b : a;
  out.upper_bound = best.upper_bound;
  out.certificate = best.certificate;
  out.method = best.method;
  if (out.lower_bound >= out.upper_bound) {
    out.lower_bound = out.upper_bound;
    out.value = out.upper_bound;
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Generator rows packed as [codeword words | syndrome words]. Syndrome bit j
// of a row is its inner product with the j-th functional separating the
// outer code from the inner one, so a combination lies outside the inner
// code iff its syndrome is nonzero.
struct Packed {
  std::size_t n = 0;
  std::size_t cw = 0;
  std::size_t syn = 0;
  std::size_t k = 0;
  std::vector<Word> data;

  std::size_t stride() const { return cw + syn; }
  const Word* row(std::size_t i) const { return data.data() + i * stride(); }
  Word* row(std::size_t i) { return data.data() + i * stride(); }
  bool bit(std::size_t r, std::size_t col) const { return (row(r)[col / kWordBits] >> (col % kWordBits)) & 1U; }
};

bool lex_less_words(const Word* a, const Word* b, std::size_t cw) {
  for (std::size_t i = 0; i < cw; ++i) {
    const Word diff = a[i] ^ b[i];
    if (diff) return ((a[i] >> std::countr_zero(diff)) & 1U) == 0;
  }
  return false;
}

struct Candidate {
  std::size_t weight = kNone;
  std::vector<Word> words;
  std::vector<Word> scratch;

  void offer(const Word* v, std::size_t w, std::size_t cw) {
    if (w < weight || (w == weight && lex_less_words(v, words.data(), cw))) {
      weight = w;
      words.assign(v, v + cw);
    }
  }
  void merge(const Candidate& other, std::size_t cw) {
    if (other.weight != kNone) offer(other.words.data(), other.weight, cw);
  }
};

struct Control {
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> expired{false};

  bool poll() {
    if (expired.load(std::memory_order_relaxed)) return true;
    if (deadline && Clock::now() > *deadline) expired = true;
    return expired.load(std::memory_order_relaxed);
  }
};

constexpr std::size_t kDyn = kNone;

// Scans acc ^ rows[i] for i in [begin, end), offering admissible words.
template <std::size_t CW, std::size_t SYN>
void scan_rows(const Word* acc, const Packed& p, std::size_t begin, std::size_t end, Candidate& best) {
  const std::size_t cw = CW == kDyn ? p.cw : CW;
  const std::size_t syn = SYN == kDyn ? p.syn : SYN;
  const std::size_t stride = cw + syn;
  const Word* rows = p.data.data();
  for (std::size_t i = begin; i < end; ++i) {
    const Word* r = rows + i * stride;
    std::size_t wt = 0;
    for (std::size_t c = 0; c < cw; ++c) wt += static_cast<std::size_t>(std::popcount(acc[c] ^ r[c]));
    if (wt > best.weight) continue;
    if (syn) {
      Word nz = 0;
      for (std::size_t s = 0; s < syn; ++s) nz |= acc[cw + s] ^ r[cw + s];
      if (!nz) continue;
    }
    best.scratch.resize(cw);
    for (std::size_t c = 0; c < cw; ++c) best.scratch[c] = acc[c] ^ r[c];
    best.offer(best.scratch.data(), wt, cw);
  }
}

using ScanFn = void (*)(const Word*, const Packed&, std::size_t, std::size_t, Candidate&);

ScanFn pick_scan(const Packed& p) {
  if (p.cw == 1 && p.syn == 0) return &scan_rows<1, 0>;
  if (p.cw == 1 && p.syn == 1) return &scan_rows<1, 1>;
  if (p.cw == 2 && p.syn == 0) return &scan_rows<2, 0>;
  if (p.cw == 2 && p.syn == 1) return &scan_rows<2, 1>;
  if (p.cw == 3 && p.syn == 0) return &scan_rows<3, 0>;
  if (p.cw == 3 && p.syn == 1) return &scan_rows<3, 1>;
  if (p.cw == 4 && p.syn == 1) return &scan_rows<4, 1>;
  return &scan_rows<kDyn, kDyn>;
}

// All combinations of exactly `w` rows whose smallest index is `first`.
class LevelEnumerator {
 public:
  LevelEnumerator(const Packed& p, std::size_t w, Control& ctl, ScanFn scan)
      : p_(p), w_(w), ctl_(ctl), scan_(scan), acc_((w + 1) * p.stride(), 0) {}

  // Returns false when the budget expired.
  bool run(std::size_t first, Candidate& best) {
    const std::size_t stride = p_.stride();
    if (w_ == 1) {
      std::fill(acc_.begin(), acc_.begin() + static_cast<long>(stride), 0);
      scan_(acc_.data(), p_, first, first + 1, best);
      return true;
    }
    const Word* r = p_.row(first);
    std::copy(r, r + stride, acc_.begin());
    return descend(1, first + 1, best);
  }

 private:
  bool descend(std::size_t depth, std::size_t start, Candidate& best) {
    const Word* acc = acc_.data() + (depth - 1) * p_.stride();
    if (depth == w_ - 1) {
      scan_(acc, p_, start, p_.k, best);
      if ((++ticks_ & 0x3FF) == 0 && ctl_.poll()) return false;
      return !ctl_.expired.load(std::memory_order_relaxed);
    }
    const std::size_t stride = p_.stride();
    Word* next = acc_.data() + depth * stride;
    const std::size_t remaining = w_ - depth;
    for (std::size_t i = start; i + remaining <= p_.k; ++i) {
      const Word* r = p_.row(i);
      for (std::size_t c = 0; c < stride; ++c) next[c] = acc[c] ^ r[c];
      if (!descend(depth + 1, i + 1, best)) return false;
    }
    return true;
  }

  const Packed& p_;
  std::size_t w_;
  Control& ctl_;
  ScanFn scan_;
  std::vector<Word> acc_;
  std::uint64_t ticks_ = 0;
};

// Enumerates every combination of `w` rows; false when the budget expired.
bool enumerate_level(const Packed& p, std::size_t w, Control& ctl, unsigned workers, Candidate& best) {
  if (w == 0 || w > p.k) return true;
  const ScanFn scan = pick_scan(p);
  const std::size_t tasks = p.k - w + 1;
  std::vector<Candidate> local(tasks);
  std::atomic<bool> ok{true};
  parallel_for(tasks, workers, [&](std::size_t t, unsigned) {
    if (!ok) return;
    local[t].weight = best.weight;  // prune with the bound known so far
    local[t].words = best.words;
    LevelEnumerator e(p, w, ctl, scan);
    if (!e.run(t, local[t])) ok = false;
  });
  for (const auto& c : local) best.merge(c, p.cw);
  return ok && !ctl.expired;
}

bool enumerate_exhaustive(const Packed& p, Control& ctl, unsigned workers, Candidate& best) {
  const std::size_t k = p.k;
  const std::size_t top = std::min<std::size_t>(k, 6);
  const std::size_t low = k - top;
  const std::size_t tasks = std::size_t{1} << top;
  const std::size_t stride = p.stride();
  const ScanFn scan = pick_scan(p);
  std::vector<Candidate> local(tasks);
  std::atomic<bool> ok{true};
  parallel_for(tasks, workers, [&](std::size_t t, unsigned) {
    if (!ok) return;
    Candidate& c = local[t];
    std::vector<Word> acc(stride, 0);
    std::vector<Word> zero(stride, 0);
    for (std::size_t b = 0; b < top; ++b)
      if ((t >> b) & 1U) {
        const Word* r = p.row(low + b);
        for (std::size_t i = 0; i < stride; ++i) acc[i] ^= r[i];
      }
    // A scan against a zero row evaluates acc itself; reuse it through a
    // one-row view so the admissibility logic stays in one place.
    Packed single{p.n, p.cw, p.syn, 1, zero};
    auto consider = [&] { scan(acc.data(), single, 0, 1, c); };
    if (t != 0) consider();
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < steps; ++i) {
      const Word* r = p.row(static_cast<std::size_t>(std::countr_zero(i)));
      for (std::size_t w = 0; w < stride; ++w) acc[w] ^= r[w];
      consider();
      if ((i & 0xFFFF) == 0 && ctl.poll()) {
        ok = false;
        return;
      }
    }
  });
  for (const auto& c : local) best.merge(c, p.cw);
  return ok && !ctl.expired;
}

struct InfoSet {
  Packed gen;
  std::size_t rank = 0;
};

// Disjoint information sets: repeated Gauss-Jordan elimination restricted to
// columns not claimed by earlier sets, visited in a seeded random order.
std::vector<InfoSet> build_info_sets(const Packed& base, std::uint64_t seed) {
  std::vector<std::size_t> perm(base.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);

  std::vector<char> used(base.n, 0);
  std::vector<InfoSet> sets;
  Packed cur = base;
  const std::size_t stride = cur.stride();
  std::size_t used_count = 0;
  while (used_count < base.n) {
    std::size_t r = 0;
    for (std::size_t col : perm) {
      if (r == cur.k) break;
      if (used[col]) continue;
      std::size_t sel = r;
      while (sel < cur.k && !cur.bit(sel, col)) ++sel;
      if (sel == cur.k) continue;
      if (sel != r) std::swap_ranges(cur.row(sel), cur.row(sel) + stride, cur.row(r));
      for (std::size_t i = 0; i < cur.k; ++i) {
        if (i == r || !cur.bit(i, col)) continue;
        Word* dst = cur.row(i);
        const Word* src = cur.row(r);
        for (std::size_t c = 0; c < stride; ++c) dst[c] ^= src[c];
      }
      used[col] = 1;
      ++used_count;
      ++r;
    }
    if (r == 0) break;
    sets.push_back({cur, r});
  }
  return sets;
}

Packed pack(const LinearCode& outer, const std::vector<BitVector>& functionals) {
  Packed p;
  p.n = outer.n();
  p.cw = words_for(p.n);
  p.syn = words_for(functionals.size());
  p.k = outer.k();
  p.data.assign(p.k * p.stride(), 0);
  for (std::size_t i = 0; i < p.k; ++i) {
    const auto& row = outer.generator()[i];
    Word* dst = p.row(i);
    std::copy(row.words().begin(), row.words().end(), dst);
    for (std::size_t j = 0; j < functionals.size(); ++j)
      if (dot(row, functionals[j])) dst[p.cw + j / kWordBits] |= Word{1} << (j % kWordBits);
  }
  return p;
}

DistanceResult finish(const Candidate& best, const Packed& p, std::size_t lower, bool exact, DistanceMethod method) {
  DistanceResult out;
  out.method = method;
  if (best.weight != kNone) {
    out.upper_bound = best.weight;
    out.certificate = BitVector::from_words(p.n, best.words);
  } else {
    out.upper_bound = p.n;
  }
  out.lower_bound = std::min(std::max<std::size_t>(lower, 1), out.upper_bound);
  if (exact && best.weight != kNone) {
    out.lower_bound = out.upper_bound;
    out.value = out.upper_bound;
  }
  return out;
}

DistanceResult run_bound_only(const Packed& p) {
  Candidate best;
  std::vector<Word> zero(p.stride(), 0);
  pick_scan(p)(zero.data(), p, 0, p.k, best);
  return finish(best, p, 1, false, DistanceMethod::bound_only);
}

DistanceResult run_information_set(const Packed& p, const DistanceOptions& opts, Control& ctl, unsigned workers) {
  const auto sets = build_info_sets(p, opts.seed);
  const std::size_t k = p.k;
  std::vector<std::size_t> complete(sets.size(), 0);
  auto lower = [&] {
    std::size_t total = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const std::size_t deficit = k - sets[j].rank;
      if (complete[j] + 1 > deficit) total += complete[j] + 1 - deficit;
    }
    return total;
  };
  Candidate best;
  std::size_t lb = lower();
  for (std::size_t w = 1; w <= k; ++w) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (w + 1 <= k - sets[j].rank) continue;  // would not raise the bound yet
      while (complete[j] < w) {
        if (!enumerate_level(sets[j].gen, complete[j] + 1, ctl, workers, best))
          return finish(best, p, lb, false, DistanceMethod::information_set);
        ++complete[j];
      }
      lb = std::max(lb, lower());
      if (best.weight != kNone && best.weight <= lb) return finish(best, p, lb, true, DistanceMethod::information_set);
      if (opts.window_lo && best.weight != kNone && best.weight < *opts.window_lo)
        return finish(best, p, lb, false, DistanceMethod::information_set);
      if (opts.window_hi && lb > *opts.window_hi) return finish(best, p, lb, false, DistanceMethod::information_set);
      if (ctl.poll()) return finish(best, p, lb, false, DistanceMethod::information_set);
    }
  }
  // The first set is a full information set, so every codeword has been seen.
  return finish(best, p, lb, true, DistanceMethod::information_set);
}

DistanceResult solve(const LinearCode& outer, const std::vector<BitVector>& functionals,
                     const DistanceOptions& opts) {
  const Packed p = pack(outer, functionals);
  Control ctl;
  if (opts.budget) ctl.deadline = Clock::now() + *opts.budget;
  const unsigned workers = opts.workers ? opts.workers : default_workers();

  DistanceMethod method = opts.method;
  if (method == DistanceMethod::automatic)
    method = p.k <= opts.auto_exhaustive_dim ? DistanceMethod::exhaustive : DistanceMethod::information_set;

  switch (method) {
    case DistanceMethod::bound_only:
      return run_bound_only(p);
    case DistanceMethod::exhaustive: {
      if (p.k > opts.exhaustive_limit)
        throw ResourceGuardError("exhaustive enumeration of dimension " + std::to_string(p.k) + " exceeds limit " +
                                 std::to_string(opts.exhaustive_limit));
      Candidate best;
      const bool done = enumerate_exhaustive(p, ctl, workers, best);
      return finish(best, p, 1, done, DistanceMethod::exhaustive);
    }
    case DistanceMethod::information_set:
    case DistanceMethod::automatic:
      break;
  }
  return run_information_set(p, opts, ctl, workers);
}

}  // namespace

DistanceResult min_distance(const LinearCode& code, const DistanceOptions& opts) {
  if (code.k() == 0) throw InvalidArgument("minimum distance of the zero code is undefined");
  return solve(code, {}, opts);
}

DistanceResult coset_min_weight(const LinearCode& outer, const LinearCode& inner, const DistanceOptions& opts) {
  if (outer.n() != inner.n()) throw DimensionError("coset_min_weight: length mismatch");
  if (!outer.contains(inner)) throw ContainmentError("inner code is not contained in the outer code");
  if (outer.k() == inner.k()) throw InvalidArgument("outer \\ inner is empty (codes are equal)");
  // Functionals completing outer^perp to inner^perp.
  RowReducer span(outer.parity_check());
  if (outer.parity_check().empty()) span = RowReducer(BitMatrix(outer.n()));
  std::vector<BitVector> functionals;
  for (const auto& h : inner.parity_check().rows())
    if (span.insert(h)) functionals.push_back(h);
  return solve(outer, functionals, opts);
}

}  // namespace csst
