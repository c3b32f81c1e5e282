#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <locale>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include "permstego/alphabet.hpp"
#include "permstego/factoradic.hpp"
#include "permstego/natural.hpp"
#include "permstego/radix.hpp"
#include "permstego/random.hpp"

namespace permstego {

/// log2(n!) summed term by term.
inline double channel_capacity_bits(std::size_t n) {
  double bits = 0.0;
  for (std::size_t k = 2; k <= n; ++k) bits += std::log2(static_cast<double>(k));
  return bits;
}

/// Shannon entropy in bits of a count histogram; empty bins contribute 0.
inline double entropy_bits(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (const auto c : counts) total += c;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (const auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

/// Uniform Natural in [0, bound) by rejection on the bit width of bound - 1.
template <typename Rng>
Natural uniform_natural_below(Rng& rng, const Natural& bound) {
  if (bound <= 1) return 0;
  const Natural top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  while (true) {
    Natural x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      x |= static_cast<std::uint64_t>(rng());
    }
    x >>= spare;
    if (x < bound) return x;
  }
}

struct SamplingConfig {
  std::uint64_t seed = 1;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

namespace detail {

inline constexpr std::uint64_t kChunkSize = 4096;

// Every chunk of samples owns a generator seeded from (seed, stream, chunk),
// so results do not depend on how chunks are spread over threads.
inline std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

// Runs body(rng, begin, end, accumulator) over fixed-size chunks of [0, samples)
// and returns the per-worker accumulators for the caller to merge.
template <typename Acc, typename Body>
std::vector<Acc> run_chunked(std::uint64_t samples, const SamplingConfig& config, std::uint64_t stream,
                             const Acc& zero, Body body) {
  const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));
  std::vector<Acc> accs(workers, zero);
  std::atomic<std::uint64_t> next{0};
  auto work = [&](unsigned w) {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      auto rng = chunk_rng(config.seed, stream, c);
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(samples, begin + kChunkSize);
      body(rng, begin, end, accs[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return accs;
}

}  // namespace detail

struct PositionEntropyTable {
  std::size_t n = 0;
  std::vector<double> entropy;       // bits, one per position
  std::vector<std::uint64_t> counts; // n*n, row = position, column = element
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  std::uint64_t count(std::size_t position, std::size_t element) const { return counts[position * n + element]; }
  double total() const {
    double sum = 0.0;
    for (const double h : entropy) sum += h;
    return sum;
  }
};

/// Smallest s whose minimal code length is n: (n-1)! for n >= 2, and 0 for n = 1.
inline Natural minimal_length_floor(std::size_t n) { return n <= 1 ? Natural(0) : factorial(n - 1); }

/// Samples s uniformly from the values whose minimal code length is n,
/// encodes each, and histograms the element at every position.
inline PositionEntropyTable estimate_position_entropy(std::size_t n, std::uint64_t samples,
                                                      const SamplingConfig& config = {}) {
  if (n == 0) throw Error(ErrorCode::CapacityExceeded, "list length must be positive");
  const Natural low = minimal_length_floor(n);
  const Natural width = factorial(n) - low;
  const PermutationCode initial = identity_code(n);

  using Hist = std::vector<std::uint64_t>;
  auto parts = detail::run_chunked<Hist>(
      samples, config, n, Hist(n * n, 0),
      [&](std::mt19937_64& rng, std::uint64_t begin, std::uint64_t end, Hist& hist) {
        for (std::uint64_t k = begin; k < end; ++k) {
          const Natural s = low + uniform_natural_below(rng, width);
          const PermutationCode q = encode_permutation(s, std::span<const std::size_t>(initial));
          for (std::size_t pos = 0; pos < n; ++pos) ++hist[pos * n + q[pos]];
        }
      });

  PositionEntropyTable table;
  table.n = n;
  table.samples = samples;
  table.seed = config.seed;
  table.counts.assign(n * n, 0);
  for (const auto& part : parts)
    for (std::size_t k = 0; k < part.size(); ++k) table.counts[k] += part[k];
  table.entropy.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    table.entropy.push_back(entropy_bits(std::span<const std::uint64_t>(table.counts.data() + pos * n, n)));
  }
  return table;
}

struct TotalEntropyRow {
  std::size_t n = 0;
  double total_bits = 0.0;
  double max_bits = 0.0;  // n log2 n

  double deficit() const { return max_bits - total_bits; }
};

inline std::vector<TotalEntropyRow> total_entropy_report(std::size_t n_min, std::size_t n_max,
                                                         std::uint64_t samples, const SamplingConfig& config = {}) {
  std::vector<TotalEntropyRow> rows;
  for (std::size_t n = std::max<std::size_t>(n_min, 1); n <= n_max; ++n) {
    const auto table = estimate_position_entropy(n, samples, config);
    const double dn = static_cast<double>(n);
    rows.push_back({n, table.total(), dn * std::log2(dn)});
  }
  return rows;
}

struct ScalingRecord {
  std::size_t length = 0;
  double mean_items = 0.0;
  double ci95_halfwidth = 0.0;
  std::uint64_t samples = 0;
  std::size_t max_items = 0;
};

/// For each message length, draws messages with i.i.d. uniform symbols and
/// reports the mean minimal code length with a normal-approximation 95% CI.
inline std::vector<ScalingRecord> message_length_scaling(std::size_t length_min, std::size_t length_max,
                                                         const Alphabet& alphabet, std::uint64_t samples,
                                                         const SamplingConfig& config = {}) {
  struct Acc {
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
    std::size_t max = 0;
  };
  std::vector<ScalingRecord> out;
  for (std::size_t length = length_min; length <= length_max; ++length) {
    auto parts = detail::run_chunked<Acc>(
        samples, config, 0x5CA1E000ULL + length, Acc{},
        [&](std::mt19937_64& rng, std::uint64_t begin, std::uint64_t end, Acc& acc) {
          std::u32string message(length, U'\0');
          for (std::uint64_t k = begin; k < end; ++k) {
            for (auto& c : message) {
              c = alphabet.symbol(static_cast<std::size_t>(uniform_below(rng, alphabet.size())));
            }
            const std::size_t items = min_factorial_length(message_to_natural(message, alphabet));
            acc.sum += items;
            acc.sum_sq += static_cast<std::uint64_t>(items) * items;
            acc.max = std::max(acc.max, items);
          }
        });
    Acc total;
    for (const auto& part : parts) {
      total.sum += part.sum;
      total.sum_sq += part.sum_sq;
      total.max = std::max(total.max, part.max);
    }
    ScalingRecord rec;
    rec.length = length;
    rec.samples = samples;
    rec.max_items = total.max;
    if (samples > 0) {
      const double count = static_cast<double>(samples);
      rec.mean_items = static_cast<double>(total.sum) / count;
      if (samples > 1) {
        const double var = (static_cast<double>(total.sum_sq) - count * rec.mean_items * rec.mean_items) /
                           (count - 1.0);
        rec.ci95_halfwidth = 1.96 * std::sqrt(std::max(var, 0.0) / count);
      }
    }
    out.push_back(rec);
  }
  return out;
}

namespace detail {

inline void prepare_csv(std::ostream& out) {
  out.imbue(std::locale::classic());
  out << std::fixed << std::setprecision(6);
}

}  // namespace detail

inline void write_fig1_csv(std::ostream& out, std::span<const PositionEntropyTable> tables) {
  detail::prepare_csv(out);
  out << "n,position,entropy_bits\n";
  for (const auto& table : tables)
    for (std::size_t pos = 0; pos < table.n; ++pos) out << table.n << ',' << pos << ',' << table.entropy[pos] << '\n';
}

inline void write_fig2_csv(std::ostream& out, std::span<const TotalEntropyRow> rows) {
  detail::prepare_csv(out);
  out << "n,total_bits,max_bits\n";
  for (const auto& row : rows) out << row.n << ',' << row.total_bits << ',' << row.max_bits << '\n';
}

inline void write_fig3_csv(std::ostream& out, std::span<const ScalingRecord> records) {
  detail::prepare_csv(out);
  out << "L,mean_items,ci95_halfwidth\n";
  for (const auto& rec : records) out << rec.length << ',' << rec.mean_items << ',' << rec.ci95_halfwidth << '\n';
}

}  // namespace permstego
