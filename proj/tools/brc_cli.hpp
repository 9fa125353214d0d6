#pragma once

// Command-line front end for the brc library. Kept in a header so the test
// suite can drive it in-process.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brc/brc.hpp"

namespace brc::cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << data;
  if (!out) throw Error("failed writing '" + path + "'");
}

inline KeySet key_set_from(const std::vector<Index>& v) { return KeySet(v); }

struct Options {
  bool verbose = false;

  std::vector<Index> indices;
  std::string key_path, in_path, out_path;

  std::vector<Index> s0, s1, s;
  int hidden_bit = -1;
  bool random = false;
  bool trivial = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t window = 0;
  std::size_t count = 0;
  std::size_t pairs = 0;

  std::string suite;
  verify::Ranges ranges;
};

inline int cmd_keygen(const Options& o, std::ostream& out) {
  KeySet s = key_set_from(o.indices);
  write_file(o.out_path, write_key_file(s));
  out << render(key_element(s));
  return 0;
}

inline int cmd_encrypt(const Options& o, std::ostream& out, std::ostream& err) {
  KeySet s = read_key_file(read_file(o.key_path));
  PlaintextVector v = encode_text(read_file(o.in_path));
  Ciphertext c = encrypt(ring_encode(v), v.length(), key_element(s));
  write_file(o.out_path, write_ciphertext_file(c));
  if (o.verbose) err << "encrypted " << v.length() << " bytes, " << c.element.size() << " nonzero terms\n";
  (void)out;
  return 0;
}

inline int cmd_decrypt(const Options& o, std::ostream& out, std::ostream& err) {
  KeySet s = read_key_file(read_file(o.key_path));
  Ciphertext c = read_ciphertext_file(read_file(o.in_path));
  PlaintextVector v = ring_decode(decrypt(c, key_element(s)), c.length);
  write_file(o.out_path, decode_text(v));
  if (o.verbose) err << "decrypted " << v.length() << " bytes\n";
  (void)out;
  return 0;
}

inline void report_line(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << ": " << value << '\n';
}

inline int attack_cpa(const Options& o, std::ostream& out) {
  std::uint64_t seed = o.seed;
  KeySet s0{1}, s1{2};
  int bit = o.hidden_bit;
  if (o.random) {
    if (!o.seed_given) seed = std::random_device{}();
    std::mt19937_64 rng(seed);
    do {
      s0 = verify::sample_key_set(rng, 3, 8);
      s1 = verify::sample_key_set(rng, 3, 8);
    } while (s0 == s1);
    bit = static_cast<int>(rng() & 1U);
  } else {
    if (o.s0.empty() || o.s1.empty() || bit < 0) throw DomainError("attack cpa needs --s0, --s1 and --hidden-bit, or --random");
    s0 = key_set_from(o.s0);
    s1 = key_set_from(o.s1);
  }
  CpaExperiment exp(s0, s1, bit, o.trivial);
  report_line(out, "candidate S0", s0.to_string());
  report_line(out, "candidate S1", s1.to_string());

  CpaOutcome res = o.trivial ? trivial_distinguish(exp) : cpa_distinguish(s0, s1, exp.probe_oracle());
  if (o.trivial) {
    report_line(out, "query", "O2");
  } else {
    report_line(out, "probe", "D" + std::to_string(res.probe));
    report_line(out, "expected coeff under S0", std::to_string(res.expected0));
    report_line(out, "expected coeff under S1", std::to_string(res.expected1));
  }
  report_line(out, "response", to_string(res.response));
  if (!o.trivial) report_line(out, "observed coeff", std::to_string(res.observed));
  report_line(out, "guess", std::to_string(res.guess));
  report_line(out, "queries", std::to_string(exp.query_count()));
  if (o.random) {
    report_line(out, "seed", std::to_string(seed));
    report_line(out, "hidden bit", std::to_string(bit));
  }
  bool won = res.guess == bit && exp.query_count() == 1;
  report_line(out, "result", won ? "success" : "failure");
  return won ? 0 : 1;
}

inline int attack_ambiguity(const Options& o, std::ostream& out) {
  if (o.s.empty() || o.window == 0 || o.count == 0) throw DomainError("attack ambiguity needs --s, --window and --count");
  KeySet s = key_set_from(o.s);
  auto family = ambiguous_family(s, o.window, o.count);
  auto k = key_element(s);
  auto reference = operator_matrix(k, o.window);
  report_line(out, "key set", s.to_string());
  report_line(out, "window", std::to_string(o.window));
  out << "operator on window:\n" << reference.to_string();
  bool all_equal = true;
  bool all_distinct = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto ki = key_element(family[i]);
    bool same = operator_matrix(ki, o.window) == reference;
    bool differs = ki != k;
    for (std::size_t j = 0; j < i; ++j) all_distinct = all_distinct && family[j] != family[i];
    all_equal = all_equal && same;
    all_distinct = all_distinct && differs && family[i] != s;
    report_line(out, "ambiguous key", family[i].to_string() + (same ? " matrix equal" : " matrix DIFFERS") +
                                          (differs ? ", key element differs" : ", key element equal"));
  }
  report_line(out, "matrices", all_equal ? "identical" : "not identical");
  report_line(out, "key sets", all_distinct ? "pairwise distinct" : "not distinct");
  return all_equal && all_distinct ? 0 : 1;
}

inline int attack_kpa(const Options& o, std::ostream& out) {
  if (o.key_path.empty() || o.pairs == 0) throw DomainError("attack kpa needs --key and --pairs");
  KeySet s = read_key_file(read_file(o.key_path));
  auto k = key_element(s);
  const std::size_t window = o.window != 0 ? o.window : o.pairs;

  // Basis probes first, then random 7-bit plaintexts.
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<Coeff> byte(0, 127);
  std::vector<PlaintextPair> pairs;
  for (std::size_t j = 1; j <= o.pairs; ++j) {
    BurnsideElement p;
    if (j <= window) {
      p = Generator::dihedral(j);
    } else {
      for (std::size_t i = 1; i <= window; ++i) p.add_term(Generator::dihedral(i), byte(rng));
    }
    pairs.push_back({p, encrypt(p, window, k).element});
  }

  auto rec = known_plaintext_solver(pairs, window);
  report_line(out, "window", std::to_string(window));
  report_line(out, "pairs", std::to_string(pairs.size()));
  report_line(out, "rank", std::to_string(rec.rank));
  if (!rec.determined()) {
    report_line(out, "operator", "underdetermined");
    return 0;
  }
  out << "recovered operator:\n" << rec.matrix->to_string();
  bool exact = *rec.matrix == operator_matrix(k, window);
  report_line(out, "matches true operator", exact ? "yes" : "no");
  auto alt = ambiguous_family(s, window, 1).front();
  bool alt_same = operator_matrix(key_element(alt), window) == *rec.matrix;
  report_line(out, "also consistent with", alt.to_string() + (alt_same ? "" : " (NOT)"));
  return exact && alt_same ? 0 : 1;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  bool ok = true;
  for (const auto& r : verify::run(o.suite, o.ranges)) {
    out << r.name << ": " << (r.ok() ? "pass" : "FAIL") << " (" << (r.checked - r.failed) << "/" << r.checked
        << " checks)\n";
    if (!r.ok()) {
      out << "  first counterexample: " << r.first_counterexample << '\n';
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

// Exit codes: 0 success, 1 contract not met (failed check or attack),
// 2 usage or input error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burnside ring cipher over A(O(2)): keys, encryption and cryptanalysis"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("-v,--verbose", o.verbose, "Diagnostics on stderr");

  auto* keygen = app.add_subcommand("keygen", "Write a key file from representation indices");
  keygen->add_option("--indices", o.indices, "Comma-separated positive indices")->required()->delimiter(',');
  keygen->add_option("--out", o.out_path, "Key file to write")->required();

  auto* enc = app.add_subcommand("encrypt", "Encrypt a 7-bit text file");
  auto* dec = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  for (auto* sub : {enc, dec}) {
    sub->add_option("--key", o.key_path, "Key file")->required()->check(CLI::ExistingFile);
    sub->add_option("--in", o.in_path, "Input file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", o.out_path, "Output file")->required();
  }

  auto* attack = app.add_subcommand("attack", "Cryptanalysis demonstrations");
  attack->require_subcommand(1);
  auto* cpa = attack->add_subcommand("cpa", "One-query chosen-plaintext key distinguisher");
  cpa->add_option("--s0", o.s0, "First candidate key set")->delimiter(',');
  cpa->add_option("--s1", o.s1, "Second candidate key set")->delimiter(',');
  cpa->add_option("--hidden-bit", o.hidden_bit, "Which candidate the oracle uses")->check(CLI::Range(0, 1));
  cpa->add_flag("--random", o.random, "Draw candidates and hidden bit at random");
  cpa->add_option("--seed", o.seed, "Seed for --random")->each([&](const std::string&) { o.seed_given = true; });
  cpa->add_flag("--trivial", o.trivial, "Use the O2 query instead of a dihedral probe");

  auto* amb = attack->add_subcommand("ambiguity", "Prime-scaled keys with identical window operators");
  amb->add_option("--s", o.s, "Key set")->required()->delimiter(',');
  amb->add_option("--window", o.window, "Window length L")->required();
  amb->add_option("--count", o.count, "Number of ambiguous keys")->required();

  auto* kpa = attack->add_subcommand("kpa", "Recover the window operator from plaintext pairs");
  kpa->add_option("--key", o.key_path, "Key file")->required()->check(CLI::ExistingFile);
  kpa->add_option("--pairs", o.pairs, "Number of plaintext/ciphertext pairs")->required();
  kpa->add_option("--window", o.window, "Window length L (default: --pairs)");
  kpa->add_option("--seed", o.seed, "Seed for the non-basis plaintexts");

  auto* ver = app.add_subcommand("verify", "Run oracle-equivalence suites");
  ver->add_option("suite", o.suite, "table | involution | prop-coeff | recurrence | rf1 | all")
      ->required()
      ->check(CLI::IsMember({"table", "involution", "prop-coeff", "recurrence", "rf1", "all"}));
  ver->add_option("--max-index", o.ranges.table_max_index, "Dihedral bound for table/recurrence");
  ver->add_option("--rf1-max", o.ranges.rf1_max_m, "Largest representation index for rf1");
  ver->add_option("--involution-samples", o.ranges.involution_samples, "Random key sets for involution");
  ver->add_option("--coeff-samples", o.ranges.coeff_samples, "Random key sets for prop-coeff");
  ver->add_option("--seed", o.ranges.seed, "Seed for sampled suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*keygen) return cmd_keygen(o, out);
    if (*enc) return cmd_encrypt(o, out, err);
    if (*dec) return cmd_decrypt(o, out, err);
    if (*cpa) return attack_cpa(o, out);
    if (*amb) return attack_ambiguity(o, out);
    if (*kpa) return attack_kpa(o, out);
    if (*ver) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace brc::cli
