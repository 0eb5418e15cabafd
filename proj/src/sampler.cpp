#include "hardimer/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "hardimer/error.hpp"

namespace hardimer {

namespace {

constexpr std::size_t idx(SiteState s) { return static_cast<std::size_t>(s); }

unsigned resolve_threads(unsigned requested, std::uint64_t chunks) {
  unsigned threads = requested == 0 ? std::thread::hardware_concurrency() : requested;
  threads = std::max(threads, 1U);
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));
}

// Runs body(chunk_index) for every chunk, spread over `threads` workers.
template <class Body>
void for_each_chunk(std::uint64_t chunks, unsigned threads, Body&& body) {
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) body(c);
  };
  if (threads <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
}

}  // namespace

SuffixCounts::SuffixCounts(int n) : n_(n) {
  if (n < 1) throw Error("N must be at least 1");
  const auto size = static_cast<std::size_t>(n) + 1;
  counts_.resize(size);
  counts_[static_cast<std::size_t>(n)] = {BigInt(1), BigInt(0), BigInt(0)};
  for (int i = n - 1; i >= 0; --i) {
    const auto& next = counts_[static_cast<std::size_t>(i) + 1];
    auto& here = counts_[static_cast<std::size_t>(i)];
    here[idx(SiteState::Free)] =
        2 * next[idx(SiteState::Free)] + next[idx(SiteState::OpenBlue)] + next[idx(SiteState::OpenRed)];
    here[idx(SiteState::OpenBlue)] = next[idx(SiteState::OpenBlue)] + next[idx(SiteState::Free)];
    here[idx(SiteState::OpenRed)] = next[idx(SiteState::OpenRed)] + next[idx(SiteState::Free)];
  }

  branches_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& next = counts_[static_cast<std::size_t>(i) + 1];
    auto& slot = branches_[static_cast<std::size_t>(i)];
    slot[idx(SiteState::Free)].moves = {
        {SiteMove::SingleBlue, next[idx(SiteState::Free)]},
        {SiteMove::SingleRed, next[idx(SiteState::Free)]},
        {SiteMove::OpenBlue, next[idx(SiteState::OpenBlue)]},
        {SiteMove::OpenRed, next[idx(SiteState::OpenRed)]},
    };
    for (SiteState open : {SiteState::OpenBlue, SiteState::OpenRed}) {
      slot[idx(open)].moves = {
          {SiteMove::Interior, next[idx(open)]},
          {SiteMove::Close, next[idx(SiteState::Free)]},
      };
    }
    for (Branches& b : slot) {
      BigInt g = 0;
      for (const auto& [move, weight] : b.moves) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), weight.get_mpz_t());
      b.total = 0;
      for (auto& [move, weight] : b.moves) {
        if (g > 1) mpz_divexact(weight.get_mpz_t(), weight.get_mpz_t(), g.get_mpz_t());
        b.total += weight;
      }
      if (b.total > 0 && mpz_sizeinbase(b.total.get_mpz_t(), 2) <= 63) {
        std::vector<std::uint64_t> small;
        for (const auto& [move, weight] : b.moves) small.push_back(weight.get_ui());
        b.small_weights = std::move(small);
        b.small_total = b.total.get_ui();
      }
    }
  }
}

const BigInt& SuffixCounts::at(int position, SiteState state) const {
  if (position < 0 || position > n_) throw Error("suffix position out of range");
  return counts_[static_cast<std::size_t>(position)][idx(state)];
}

const SuffixCounts::Branches& SuffixCounts::branches(int position, SiteState state) const {
  if (position < 0 || position >= n_) throw Error("branch position out of range");
  return branches_[static_cast<std::size_t>(position)][idx(state)];
}

SuffixCounts build_suffix_counts(int n) { return SuffixCounts(n); }

UniformSampler::UniformSampler(int n) : counts_(std::make_shared<const SuffixCounts>(n)) {}

UniformSampler::UniformSampler(std::shared_ptr<const SuffixCounts> counts) : counts_(std::move(counts)) {
  if (!counts_) throw Error("sampler needs suffix counts");
}

template <class OnMove>
void UniformSampler::walk(Rng& rng, OnMove&& on_move) const {
  SiteState state = SiteState::Free;
  for (int i = 0; i < counts_->n(); ++i) {
    const auto& b = counts_->branches(i, state);
    std::size_t chosen = 0;
    if (b.small_weights) {
      std::uint64_t r = uniform_below(rng, b.small_total);
      const auto& w = *b.small_weights;
      while (r >= w[chosen]) r -= w[chosen++];
    } else {
      BigInt r = uniform_below(rng, b.total);
      while (r >= b.moves[chosen].second) r -= b.moves[chosen++].second;
    }
    const SiteMove move = b.moves[chosen].first;
    on_move(i, state, move);
    switch (move) {
      case SiteMove::SingleBlue:
      case SiteMove::SingleRed: break;
      case SiteMove::OpenBlue: state = SiteState::OpenBlue; break;
      case SiteMove::OpenRed: state = SiteState::OpenRed; break;
      case SiteMove::Interior: break;
      case SiteMove::Close: state = SiteState::Free; break;
    }
  }
}

SampledPair UniformSampler::sample(Rng& rng) const {
  std::vector<Colour> colours(static_cast<std::size_t>(n()));
  std::vector<Dimer> dimers;
  int open_start = -1;
  walk(rng, [&](int i, SiteState state, SiteMove move) {
    Colour c = Colour::Blue;
    switch (move) {
      case SiteMove::SingleBlue: c = Colour::Blue; break;
      case SiteMove::SingleRed: c = Colour::Red; break;
      case SiteMove::OpenBlue: c = Colour::Blue; open_start = i; break;
      case SiteMove::OpenRed: c = Colour::Red; open_start = i; break;
      case SiteMove::Interior:
        c = state == SiteState::OpenBlue ? Colour::Red : Colour::Blue;
        break;
      case SiteMove::Close:
        c = state == SiteState::OpenBlue ? Colour::Blue : Colour::Red;
        dimers.push_back(Dimer{open_start, i, c});
        break;
    }
    colours[static_cast<std::size_t>(i)] = c;
  });
  ColourSequence seq(std::move(colours));
  DimerConfig config(seq, std::move(dimers));
  return {std::move(seq), std::move(config)};
}

ConfigStats UniformSampler::sample_stats(Rng& rng) const {
  ConfigStats st;
  walk(rng, [&](int, SiteState state, SiteMove move) {
    switch (move) {
      case SiteMove::SingleBlue: ++st.gamma_b; break;
      case SiteMove::SingleRed: ++st.gamma_r; break;
      case SiteMove::OpenBlue:
      case SiteMove::OpenRed: break;
      case SiteMove::Interior: ++st.n_br; break;
      case SiteMove::Close: ++(state == SiteState::OpenBlue ? st.n_b : st.n_r); break;
    }
  });
  return st;
}

SampledPair sample_configuration(int n, Rng& rng) { return UniformSampler(n).sample(rng); }

SampleBatch sample_batch(int n, std::uint64_t m, std::uint64_t seed, bool keep_configs,
                         unsigned threads) {
  if (m < 1) throw Error("draw count must be at least 1");
  const UniformSampler sampler(n);
  SampleBatch batch;
  batch.n = n;
  batch.seed = seed;
  batch.rng_algorithm = std::string(kRngAlgorithm);
  batch.draws = m;
  batch.stats.resize(m);
  std::vector<std::optional<SampledPair>> kept(keep_configs ? m : 0);

  const std::uint64_t chunks = (m + kSampleChunk - 1) / kSampleChunk;
  for_each_chunk(chunks, resolve_threads(threads, chunks), [&](std::uint64_t c) {
    Rng rng(derive_seed(seed, c));
    const std::uint64_t first = c * kSampleChunk;
    const std::uint64_t last = std::min(m, first + kSampleChunk);
    for (std::uint64_t i = first; i < last; ++i) {
      if (keep_configs) {
        SampledPair pair = sampler.sample(rng);
        batch.stats[i] = stats(pair.config);
        kept[i] = std::move(pair);
      } else {
        batch.stats[i] = sampler.sample_stats(rng);
      }
    }
  });
  if (keep_configs) {
    batch.configs.reserve(m);
    for (auto& p : kept) batch.configs.push_back(std::move(*p));
  }
  return batch;
}

double EmpiricalHistogram::frequency(int s, int k) const {
  if (draws == 0) return 0.0;
  const auto it = counts.find({s, k});
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(draws);
}

EmpiricalHistogram empirical_joint(int n, std::uint64_t m, std::uint64_t seed, unsigned threads) {
  if (m < 1) throw Error("draw count must be at least 1");
  const UniformSampler sampler(n);
  const std::uint64_t chunks = (m + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::map<std::pair<int, int>, std::uint64_t>> per_chunk(chunks);
  for_each_chunk(chunks, resolve_threads(threads, chunks), [&](std::uint64_t c) {
    Rng rng(derive_seed(seed, c));
    const std::uint64_t first = c * kSampleChunk;
    const std::uint64_t last = std::min(m, first + kSampleChunk);
    auto& local = per_chunk[c];
    for (std::uint64_t i = first; i < last; ++i) {
      const ConfigStats st = sampler.sample_stats(rng);
      ++local[{st.s(), st.k()}];
    }
  });
  EmpiricalHistogram hist;
  hist.n = n;
  hist.draws = m;
  hist.seed = seed;
  for (const auto& local : per_chunk) {
    for (const auto& [cell, count] : local) hist.counts[cell] += count;
  }
  return hist;
}

double sample_correlation(const EmpiricalHistogram& hist) {
  if (hist.draws == 0) return std::numeric_limits<double>::quiet_NaN();
  const double m = static_cast<double>(hist.draws);
  double mean_s = 0, mean_k = 0;
  for (const auto& [cell, count] : hist.counts) {
    mean_s += cell.first * static_cast<double>(count);
    mean_k += cell.second * static_cast<double>(count);
  }
  mean_s /= m;
  mean_k /= m;
  double var_s = 0, var_k = 0, cov = 0;
  for (const auto& [cell, count] : hist.counts) {
    const double ds = cell.first - mean_s;
    const double dk = cell.second - mean_k;
    var_s += ds * ds * static_cast<double>(count);
    var_k += dk * dk * static_cast<double>(count);
    cov += ds * dk * static_cast<double>(count);
  }
  if (var_s <= 0 || var_k <= 0) return std::numeric_limits<double>::quiet_NaN();
  return cov / std::sqrt(var_s * var_k);
}

}  // namespace hardimer
