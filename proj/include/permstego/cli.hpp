#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permstego/permstego.hpp"

namespace permstego::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kCapacityError = 3,
  kKeyError = 4,
  kIoError = 5,
};

struct Config {
  std::string subcommand;
  std::string alphabet_symbols;
  std::string freq_table_path;
  bool lowercase = false;
  std::string cover_path;
  bool sort_lex = false;
  std::string key_path;
  std::optional<std::uint64_t> key_seed;
  bool no_sentinel = false;
  std::size_t keygen_n = 0;
  int fig = 0;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 7;
  std::size_t max_n = 12;
  std::size_t max_len = 30;
  unsigned threads = 0;
  std::string out_dir = ".";
};

namespace detail {

// Raised for failures whose exit code is fixed by where they happen rather
// than by the library error code.
struct Failure {
  int exit_code;
  std::string message;
};

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string strip_trailing_newline(std::string text) {
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIoError, "cannot open '" + path + "'"};
  return in;
}

inline Alphabet load_alphabet(const Config& config) {
  if (!config.freq_table_path.empty()) {
    auto in = open_input(config.freq_table_path);
    return frequency_ordered_alphabet(parse_frequency_table(in));
  }
  if (!config.alphabet_symbols.empty()) return make_alphabet(config.alphabet_symbols);
  return default_alphabet();
}

inline std::u32string read_message(std::istream& in, const Config& config) {
  std::string text = strip_trailing_newline(read_all(in));
  if (config.lowercase) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  }
  return utf8::decode(text);
}

inline CoverList load_cover(const Config& config) {
  auto in = open_input(config.cover_path);
  CoverList cover = read_cover_list(in);
  if (cover.empty()) throw Failure{kInputError, "cover file '" + config.cover_path + "' has no items"};
  return config.sort_lex ? canonical_baseline(cover) : cover;
}

inline std::optional<BaselineOrdering> load_key(const Config& config, std::size_t n) {
  try {
    if (config.key_seed) return generate_key(n, *config.key_seed);
    if (config.key_path.empty()) return std::nullopt;
    std::ifstream in(config.key_path, std::ios::binary);
    if (!in) throw Failure{kKeyError, "cannot open key file '" + config.key_path + "'"};
    std::string line;
    std::getline(in, line);
    BaselineOrdering key(parse_code(line));
    if (key.size() != n) {
      throw Error(ErrorCode::KeyLengthMismatch,
                  "key has " + std::to_string(key.size()) + " entries, cover has " + std::to_string(n));
    }
    return key;
  } catch (const Error& e) {
    throw Failure{kKeyError, e.what()};
  }
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapacityExceeded:
    case ErrorCode::CoverTooSmall:
      return kCapacityError;
    case ErrorCode::KeyLengthMismatch:
      return kKeyError;
    case ErrorCode::IoError:
      return kIoError;
    default:
      return kInputError;
  }
}

inline int run_encode(const Config& config, std::istream& in, std::ostream& out) {
  const Alphabet alphabet = load_alphabet(config);
  const Natural s = message_to_natural(read_message(in, config), alphabet);
  out << format_code(encode_permutation(s, min_factorial_length(s))) << '\n';
  return kOk;
}

inline int run_decode(const Config& config, std::istream& in, std::ostream& out) {
  const Alphabet alphabet = load_alphabet(config);
  const PermutationCode code = parse_code(read_all(in));
  out << utf8::encode(natural_to_message(decode_permutation(code), alphabet)) << '\n';
  return kOk;
}

inline int run_encode_cover(const Config& config, std::istream& in, std::ostream& out) {
  const Alphabet alphabet = load_alphabet(config);
  const CoverList cover = load_cover(config);
  const auto key = load_key(config, cover.size());
  const std::u32string message = read_message(in, config);
  const CoverList permuted = encode_message(message, alphabet, cover, key, {.sentinel = !config.no_sentinel});
  for (const auto& item : permuted.items()) out << item << '\n';
  return kOk;
}

inline int run_decode_cover(const Config& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const Alphabet alphabet = load_alphabet(config);
  const CoverList cover = load_cover(config);
  const auto key = load_key(config, cover.size());
  const CoverList observed = read_cover_list(in);
  const DecodedMessage decoded =
      decode_message(observed, alphabet, cover, key, {.sentinel = !config.no_sentinel});
  if (!config.no_sentinel && !decoded.sentinel_found) {
    err << "permstego: warning: no sentinel found; printing the raw decoded text\n";
  }
  out << utf8::encode(decoded.text) << '\n';
  return kOk;
}

inline int run_keygen(const Config& config, std::ostream& out) {
  if (config.keygen_n == 0) throw Failure{kInputError, "--n must be positive"};
  const std::uint64_t seed = config.key_seed ? *config.key_seed : std::random_device{}();
  out << format_code(generate_key(config.keygen_n, seed).order()) << '\n';
  return kOk;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure{kIoError, "cannot write '" + path.string() + "'"};
  return file;
}

inline void finish_output(std::ofstream& file, const std::filesystem::path& path) {
  file.flush();
  if (!file) throw Failure{kIoError, "failed writing '" + path.string() + "'"};
}

inline int run_analyze(const Config& config, std::ostream& out) {
  const std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Failure{kIoError, "output directory '" + config.out_dir + "' does not exist"};
  }
  const SamplingConfig sampling{.seed = config.seed, .threads = config.threads};
  std::ostringstream summary;
  summary.imbue(std::locale::classic());
  summary << std::fixed << std::setprecision(6);

  if (config.fig == 1) {
    const std::uint64_t samples = config.samples.value_or(100000);
    std::vector<PositionEntropyTable> tables;
    for (std::size_t n = 1; n <= config.max_n; ++n) tables.push_back(estimate_position_entropy(n, samples, sampling));
    const auto path = dir / "fig1.csv";
    auto file = open_output(path);
    write_fig1_csv(file, tables);
    finish_output(file, path);
    summary << "fig1: " << path.string() << " n=1.." << config.max_n << " samples=" << samples
            << " seed=" << config.seed << '\n';
  } else if (config.fig == 2) {
    const std::uint64_t samples = config.samples.value_or(100000);
    const auto rows = total_entropy_report(1, config.max_n, samples, sampling);
    double worst = 0.0;
    for (const auto& row : rows) worst = std::max(worst, row.deficit());
    const auto path = dir / "fig2.csv";
    auto file = open_output(path);
    write_fig2_csv(file, rows);
    finish_output(file, path);
    summary << "fig2: " << path.string() << " rows=" << rows.size() << " max_deficit_bits=" << worst << '\n';
  } else {
    const std::uint64_t samples = config.samples.value_or(10000);
    const Alphabet alphabet = load_alphabet(config);
    const auto records = message_length_scaling(1, config.max_len, alphabet, samples, sampling);
    const auto path = dir / "fig3.csv";
    auto file = open_output(path);
    write_fig3_csv(file, records);
    finish_output(file, path);
    summary << "fig3: " << path.string() << " L=1.." << config.max_len << " samples=" << samples << '\n';
  }
  out << summary.str();
  return kOk;
}

inline void add_alphabet_options(CLI::App* sub, Config& config) {
  auto* symbols = sub->add_option("--alphabet", config.alphabet_symbols,
                                  "Alphabet symbols in digit order (default: a-z followed by space)");
  auto* table = sub->add_option("--freq-table", config.freq_table_path,
                                "Frequency table file; symbols ordered by descending weight");
  symbols->excludes(table);
}

inline void add_cover_options(CLI::App* sub, Config& config) {
  add_alphabet_options(sub, config);
  sub->add_option("--cover", config.cover_path, "Cover list file, one item per line")->required();
  sub->add_flag("--sort-lex", config.sort_lex, "Use the byte-wise sorted cover as the baseline");
  auto* key = sub->add_option("--key", config.key_path, "Key file holding a baseline permutation such as [2,0,1]");
  auto* seed = sub->add_option("--key-seed", config.key_seed, "Derive the baseline permutation from this seed");
  key->excludes(seed);
  sub->add_flag("--no-sentinel", config.no_sentinel, "Do not append/strip the terminating sentinel symbol");
  sub->add_flag("--lowercase", config.lowercase, "Lowercase ASCII input before encoding");
}

}  // namespace detail

/// Runs the command line tool against the given streams and returns the
/// process exit code.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hide text in the ordering of a list using factoradic permutation codes", "permstego"};
  app.require_subcommand(1);
  Config config;

  auto* encode = app.add_subcommand("encode", "Message on stdin -> minimal permutation code");
  detail::add_alphabet_options(encode, config);
  encode->add_flag("--lowercase", config.lowercase, "Lowercase ASCII input before encoding");

  auto* decode = app.add_subcommand("decode", "Permutation code on stdin -> message");
  detail::add_alphabet_options(decode, config);

  auto* encode_cover = app.add_subcommand("encode-cover", "Message on stdin -> reordered cover list");
  detail::add_cover_options(encode_cover, config);

  auto* decode_cover = app.add_subcommand("decode-cover", "Reordered cover list on stdin -> message");
  detail::add_cover_options(decode_cover, config);

  auto* keygen = app.add_subcommand("keygen", "Print a random baseline permutation");
  keygen->add_option("--n", config.keygen_n, "Permutation length")->required();
  keygen->add_option("--seed", config.key_seed, "Seed (default: nondeterministic)");

  auto* analyze = app.add_subcommand("analyze", "Monte-Carlo channel statistics as CSV");
  analyze->add_option("--fig", config.fig, "1: entropy per position, 2: total entropy, 3: length scaling")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  analyze->add_option("--samples", config.samples, "Samples per point (default 100000 for 1/2, 10000 for 3)");
  analyze->add_option("--seed", config.seed, "Sampling seed")->capture_default_str();
  analyze->add_option("--max-n", config.max_n, "Largest list length for figures 1 and 2")->capture_default_str();
  analyze->add_option("--max-len", config.max_len, "Largest message length for figure 3")->capture_default_str();
  analyze->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  analyze->add_option("--out", config.out_dir, "Output directory")->capture_default_str();
  detail::add_alphabet_options(analyze, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "permstego: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*encode) return detail::run_encode(config, in, out);
    if (*decode) return detail::run_decode(config, in, out);
    if (*encode_cover) return detail::run_encode_cover(config, in, out);
    if (*decode_cover) return detail::run_decode_cover(config, in, out, err);
    if (*keygen) return detail::run_keygen(config, out);
    return detail::run_analyze(config, out);
  } catch (const detail::Failure& f) {
    err << "permstego: error: " << f.message << '\n';
    return f.exit_code;
  } catch (const Error& e) {
    err << "permstego: error: " << e.what() << '\n';
    return detail::exit_code_for(e.code());
  }
}

}  // namespace permstego::cli
