#include "hardimer/enumerate.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace hardimer {

std::vector<int> next_same_colour(const ColourSequence& seq) {
  const int n = seq.size();
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  std::array<int, 2> last_seen{-1, -1};
  for (int i = n - 1; i >= 0; --i) {
    const auto c = static_cast<std::size_t>(seq[i]);
    next[static_cast<std::size_t>(i)] = last_seen[c];
    last_seen[c] = i;
  }
  return next;
}

std::vector<DimerConfig> enumerate_hard_dimers(const ColourSequence& seq) {
  std::vector<DimerConfig> out;
  for_each_hard_dimer(seq, [&](std::span<const Dimer> dimers) {
    out.emplace_back(seq, std::vector<Dimer>(dimers.begin(), dimers.end()));
  });
  return out;
}

BigInt count_hard_dimers(const ColourSequence& seq) {
  const std::vector<int> next = next_same_colour(seq);
  const int n = seq.size();
  std::vector<BigInt> suffix(static_cast<std::size_t>(n) + 1, BigInt(0));
  suffix[static_cast<std::size_t>(n)] = 1;
  for (int i = n - 1; i >= 0; --i) {
    BigInt acc = suffix[static_cast<std::size_t>(i) + 1];
    if (const int j = next[static_cast<std::size_t>(i)]; j >= 0) {
      acc += suffix[static_cast<std::size_t>(j) + 1];
    }
    suffix[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return suffix[0];
}

namespace {

// Counts indexed [s][t]; N <= 63 keeps every index small.
using StHistogram = std::vector<std::uint64_t>;

void accumulate_range(int n, std::uint64_t first, std::uint64_t last, StHistogram& hist) {
  const auto width = static_cast<std::size_t>(n) + 1;
  for (std::uint64_t bits = first; bits < last; ++bits) {
    const ColourSequence seq = ColourSequence::from_bits(bits, n);
    for_each_hard_dimer(seq, [&](std::span<const Dimer> dimers) {
      int covered = 0;
      for (const Dimer& d : dimers) covered += d.end - d.start + 1;
      hist[dimers.size() * width + static_cast<std::size_t>(covered)] += 1;
    });
  }
}

}  // namespace

EnumerationSummary exact_joint_bruteforce(int n, BruteforceOptions options) {
  if (n < 1) throw Error("N must be at least 1");
  if (n > options.cap || n > 40) {
    throw CapExceeded("N = " + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(options.cap));
  }

  const std::uint64_t colourings = std::uint64_t{1} << n;
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<unsigned>(threads, 1U, 64U);
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, colourings));

  const auto width = static_cast<std::size_t>(n) + 1;
  std::vector<StHistogram> partial(threads, StHistogram(width * width, 0));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t first = colourings * w / threads;
      const std::uint64_t last = colourings * (w + 1) / threads;
      workers.emplace_back([n, first, last, &slot = partial[w]] {
        accumulate_range(n, first, last, slot);
      });
    }
  }

  EnumerationSummary summary;
  summary.n = n;
  summary.total_pairs = 0;
  for (std::size_t s = 0; s < width; ++s) {
    for (std::size_t t = 0; t < width; ++t) {
      BigInt count = 0;
      for (const StHistogram& h : partial) count += BigInt(static_cast<unsigned long>(h[s * width + t]));
      if (count == 0) continue;
      const int si = static_cast<int>(s);
      const int ti = static_cast<int>(t);
      summary.by_st[{si, ti}] = count;
      summary.by_sk[{si, n - ti + si}] = count;
      summary.total_pairs += count;
    }
  }
  return summary;
}

}  // namespace hardimer
