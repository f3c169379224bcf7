#include "coprime/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "coprime/hamilton.hpp"
#include "coprime/labeling.hpp"
#include "coprime/oracle.hpp"

namespace coprime::cli {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kOk: return "OK";
    case Status::kNegative: return "NEGATIVE";
    case Status::kInvalidInput: return "INVALID_INPUT";
    case Status::kUnsupported: return "UNSUPPORTED";
    case Status::kInternalError: return "INTERNAL_ERROR";
  }
  return "INTERNAL_ERROR";
}

int exit_code(Status status) {
  switch (status) {
    case Status::kOk: return 0;
    case Status::kNegative: return 1;
    case Status::kInvalidInput:
    case Status::kUnsupported: return 2;
    case Status::kInternalError: return 3;
  }
  return 3;
}

namespace {

std::string quoted(std::string_view text) {
  const bool plain = !text.empty() && text.find_first_of(",:{}[]\"'# \\") == std::string_view::npos;
  if (plain) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class Record {
 public:
  Record& raw(std::string_view key, std::string value) {
    fields_.emplace_back(std::string(key), std::move(value));
    return *this;
  }
  Record& add(std::string_view key, std::string_view text) { return raw(key, quoted(text)); }
  Record& add(std::string_view key, const char* text) { return add(key, std::string_view(text)); }
  Record& add(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
  Record& add(std::string_view key, int value) { return raw(key, std::to_string(value)); }
  Record& add(std::string_view key, std::size_t value) { return raw(key, std::to_string(value)); }
  Record& add(std::string_view key, const BigInt& value) { return raw(key, to_decimal(value)); }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) out += ", ";
      out += fields_[i].first + ": " + fields_[i].second;
    }
    return out + "}\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(values[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

CommandResult failure(Status status, const std::string& message) {
  CommandResult result;
  result.status = status;
  result.output = Record().add("status", to_string(status)).add("error", message).str();
  result.error = message;
  return result;
}

void add_decision(Record& rec, const DecisionReport& report) {
  rec.add("hamiltonian", report.hamiltonian).add("rule", to_string(report.rule));
  if (report.rule == DecisionRule::kEvenCondition) {
    rec.add("p", *report.first_witness).add("q", *report.last_witness);
  } else if (report.rule == DecisionRule::kEvenPrimorialObstruction) {
    rec.add("primorial_divides_k", report.primorial_divides_first)
        .add("primorial_divides_last", report.primorial_divides_last);
  }
}

std::string labeling_records(const PrimeLabeling& labeling) {
  std::string out;
  for (std::size_t b = 0; b < labeling.blocks.size(); ++b)
    out += Record()
               .add("block", static_cast<int>(b + 1))
               .add("length", labeling.blocks[b].size())
               .add("labels", join(labeling.blocks[b]))
               .str();
  return out;
}

int to_order(const BigInt& n) {
  if (n < 3 || n > 1'000'000) throw std::invalid_argument("order n must lie in [3, 1000000]");
  return static_cast<int>(n);
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':', text.empty() || text[0] != '-' ? 0 : 1);
  if (colon == std::string::npos) {
    const BigInt single = parse_bigint(text);
    return {single, single};
  }
  return {parse_bigint(text.substr(0, colon)), parse_bigint(text.substr(colon + 1))};
}

std::vector<int> parse_lengths(const std::string& text) {
  std::vector<int> lengths;
  for (const auto& part : split(text, ',')) {
    const BigInt value = parse_bigint(part);
    if (value < 0 || value > 1'000'000) throw std::invalid_argument("cycle length out of range: " + part);
    lengths.push_back(static_cast<int>(value));
  }
  if (lengths.empty()) throw std::invalid_argument("no cycle lengths given");
  return lengths;
}

std::vector<BigInt> parse_vertices(const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_bigint(part));
  return out;
}

CommandResult cmd_decide(const BigInt& k, int n) {
  if (n < 3) return failure(Status::kInvalidInput, "order n must be >= 3");
  const auto report = decide(k, n);
  Record rec;
  rec.add("command", "decide").add("k", k).add("n", n);
  add_decision(rec, report);
  CommandResult result;
  result.status = report.hamiltonian ? Status::kOk : Status::kNegative;
  rec.add("status", to_string(result.status));
  result.output = rec.str();
  return result;
}

CommandResult cmd_cycle(const BigInt& k, int n, bool verify) {
  if (n < 3) return failure(Status::kInvalidInput, "order n must be >= 3");
  try {
    const auto cycle = find_cycle(k, n);
    Record rec;
    rec.add("command", "cycle").add("k", k).add("n", n);
    CommandResult result;
    if (!cycle) {
      add_decision(rec, decide(k, n));
      result.status = Status::kNegative;
    } else {
      rec.add("cycle", join(cycle->vertices));
      if (verify) rec.add("verified", verify_cycle(CoprimeGraph(k, n), *cycle));
      result.status = Status::kOk;
    }
    rec.add("status", to_string(result.status));
    result.output = rec.str();
    return result;
  } catch (const UnsupportedError& e) {
    return failure(Status::kUnsupported, e.what());
  }
}

CommandResult cmd_verify(const BigInt& k, int n, const std::vector<BigInt>& cycle) {
  if (n < 3) return failure(Status::kInvalidInput, "order n must be >= 3");
  const VertexCycle c{cycle};
  const bool valid = verify_cycle(CoprimeGraph(k, n), c);
  CommandResult result;
  result.status = valid ? Status::kOk : Status::kNegative;
  Record rec;
  rec.add("command", "verify").add("k", k).add("n", n).add("valid", valid);
  if (valid && n % 2 == 0) rec.add("special", is_special(c, k, n));
  rec.add("status", to_string(result.status));
  result.output = rec.str();
  return result;
}

CommandResult cmd_label(const std::vector<int>& lengths) {
  const TwoRegularSpec spec{lengths};
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    return failure(Status::kInvalidInput, e.what());
  }
  const auto outcome = label_two_regular(spec);
  CommandResult result;
  Record rec;
  rec.add("command", "label").add("cycles", spec.lengths.size()).add("labels", spec.total());
  if (outcome.labeling) {
    result.status = Status::kOk;
    rec.add("method", to_string(outcome.method))
        .add("verified", verify_labeling(spec, *outcome.labeling))
        .add("status", to_string(result.status));
    result.output = rec.str() + labeling_records(*outcome.labeling);
  } else {
    result.status = Status::kNegative;
    rec.add("reason", to_string(*outcome.failure)).add("status", to_string(result.status));
    result.output = rec.str();
  }
  return result;
}

CommandResult cmd_sweep(const IntRange& k, const IntRange& n, bool oracle) {
  if (k.lo > k.hi || n.lo > n.hi) return failure(Status::kInvalidInput, "empty range");
  if (n.lo < 3) return failure(Status::kInvalidInput, "order range must start at n >= 3");
  if (n.hi > 1'000'000) return failure(Status::kInvalidInput, "order range too large");
  const SearchLimits limits;
  std::size_t records = 0, hamiltonian = 0, certified = 0, unsupported = 0, failures = 0,
              oracle_checked = 0, disagreements = 0;
  std::string out;
  for (int order = static_cast<int>(n.lo); order <= static_cast<int>(n.hi); ++order) {
    for (BigInt first = k.lo; first <= k.hi; ++first) {
      ++records;
      const auto report = decide(first, order);
      Record rec;
      rec.add("k", first).add("n", order);
      add_decision(rec, report);
      if (report.hamiltonian) {
        ++hamiltonian;
        try {
          const auto cycle = find_cycle(first, order);
          const bool ok = cycle && verify_cycle(CoprimeGraph(first, order), *cycle);
          rec.add("certificate", ok ? "verified" : "invalid");
          if (ok) ++certified;
          else ++failures;
        } catch (const UnsupportedError&) {
          rec.add("certificate", "unsupported");
          ++unsupported;
        } catch (const InternalError&) {
          rec.add("certificate", "error");
          ++failures;
        }
      } else {
        rec.add("certificate", "none");
      }
      if (oracle) {
        if (order <= limits.max_order) {
          ++oracle_checked;
          const bool agree = brute_decide(first, order, limits) == report.hamiltonian;
          if (!agree) ++disagreements;
          rec.add("oracle", agree ? "agree" : "disagree");
        } else {
          rec.add("oracle", "skipped");
        }
      }
      out += rec.str();
    }
  }
  CommandResult result;
  result.status = (failures == 0 && disagreements == 0) ? Status::kOk : Status::kInternalError;
  out += Record()
             .add("summary", true)
             .add("records", records)
             .add("hamiltonian", hamiltonian)
             .add("certified", certified)
             .add("unsupported", unsupported)
             .add("verification_failures", failures)
             .add("oracle_checked", oracle_checked)
             .add("disagreements", disagreements)
             .add("status", to_string(result.status))
             .str();
  result.output = std::move(out);
  return result;
}

CommandResult cmd_oracle_cycle(const BigInt& k, int n) {
  const SearchLimits limits;
  if (n < 3 || n > limits.max_order)
    return failure(Status::kInvalidInput, "oracle order must lie in [3, " + std::to_string(limits.max_order) + "]");
  const auto cycle = brute_cycle(k, n, limits);
  CommandResult result;
  result.status = cycle ? Status::kOk : Status::kNegative;
  Record rec;
  rec.add("command", "oracle").add("k", k).add("n", n).add("hamiltonian", cycle.has_value());
  if (cycle) rec.add("cycle", join(cycle->vertices));
  rec.add("status", to_string(result.status));
  result.output = rec.str();
  return result;
}

CommandResult cmd_oracle_label(const std::vector<int>& lengths) {
  const TwoRegularSpec spec{lengths};
  const SearchLimits limits;
  try {
    validate(spec);
    if (spec.total() > limits.max_labels) throw std::invalid_argument("too many labels for exhaustive search");
  } catch (const std::invalid_argument& e) {
    return failure(Status::kInvalidInput, e.what());
  }
  const auto labeling = brute_label(spec, limits);
  CommandResult result;
  result.status = labeling ? Status::kOk : Status::kNegative;
  result.output = Record()
                      .add("command", "oracle")
                      .add("labels", spec.total())
                      .add("prime", labeling.has_value())
                      .add("status", to_string(result.status))
                      .str();
  if (labeling) result.output += labeling_records(*labeling);
  return result;
}

CommandResult cmd_check() {
  std::size_t decomposition_violations = 0, decomposition_checked = 0;
  for (int x = 3; x <= 147; x += 2) {
    ++decomposition_checked;
    if (!is_valid_decomposition(decompose_pow2_plus_prime_power(x), x)) ++decomposition_violations;
  }
  std::size_t primorial_violations = 0, primorial_checked = 0;
  for (int n = 6; n <= 10000; ++n) {
    ++primorial_checked;
    if (odd_primorial(n) < 2 * n + 1) ++primorial_violations;
  }
  std::size_t prime_count_violations = 0, prime_count_checked = 0;
  for (int n = 12; n <= 10000; n += 2) {
    ++prime_count_checked;
    if (prime_count_below(n) < count_distinct_prime_factors(n - 1) + 4) ++prime_count_violations;
  }
  CommandResult result;
  const bool ok = decomposition_violations == 0 && primorial_violations == 0 && prime_count_violations == 0;
  result.status = ok ? Status::kOk : Status::kInternalError;
  result.output = Record().add("check", "pow2_plus_prime_power").add("range", "3..147 odd")
                      .add("checked", decomposition_checked).add("violations", decomposition_violations).str() +
                  Record().add("check", "odd_primorial_growth").add("range", "6..10000")
                      .add("checked", primorial_checked).add("violations", primorial_violations).str() +
                  Record().add("check", "prime_count_vs_factors").add("range", "12..10000 even")
                      .add("checked", prime_count_checked).add("violations", prime_count_violations).str() +
                  Record().add("summary", true).add("status", to_string(result.status)).str();
  return result;
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Hamiltonicity of coprime graphs CPG(k, n) and prime labelings of 2-regular graphs", "cpg"};
  app.require_subcommand(1);

  std::string k_text, n_text, cycles_text, cycle_text, k_range_text, n_range_text;
  bool verify_flag = false, oracle_flag = false;

  auto* decide_cmd = app.add_subcommand("decide", "Decide Hamiltonicity of CPG(k, n)");
  decide_cmd->add_option("--k", k_text, "first vertex")->required();
  decide_cmd->add_option("--n", n_text, "order")->required();

  auto* cycle_cmd = app.add_subcommand("cycle", "Construct a Hamiltonian cycle certificate");
  cycle_cmd->add_option("--k", k_text, "first vertex")->required();
  cycle_cmd->add_option("--n", n_text, "order")->required();
  cycle_cmd->add_flag("--verify", verify_flag, "re-check the certificate");

  auto* verify_cmd = app.add_subcommand("verify", "Check a cycle certificate");
  verify_cmd->add_option("--k", k_text, "first vertex")->required();
  verify_cmd->add_option("--n", n_text, "order")->required();
  verify_cmd->add_option("--cycle", cycle_text, "comma-separated vertices")->required();

  auto* label_cmd = app.add_subcommand("label", "Prime labeling of a union of cycles");
  label_cmd->add_option("--cycles", cycles_text, "comma-separated cycle lengths")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Decide, construct and verify over a grid");
  sweep_cmd->add_option("--k", k_range_text, "k range lo:hi (inclusive)")->required();
  sweep_cmd->add_option("--n", n_range_text, "n range lo:hi (inclusive)")->required();
  sweep_cmd->add_flag("--oracle", oracle_flag, "cross-check against exhaustive search");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search (cycle or labeling)");
  oracle_cmd->add_option("--k", k_text, "first vertex");
  oracle_cmd->add_option("--n", n_text, "order");
  oracle_cmd->add_option("--cycles", cycles_text, "comma-separated cycle lengths");

  app.add_subcommand("check", "Run the number-theoretic lemma sweeps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {Status::kOk, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return failure(Status::kInvalidInput, e.what());
  }

  try {
    const auto order = [&] { return to_order(parse_bigint(n_text)); };
    if (decide_cmd->parsed()) return cmd_decide(parse_bigint(k_text), order());
    if (cycle_cmd->parsed()) return cmd_cycle(parse_bigint(k_text), order(), verify_flag);
    if (verify_cmd->parsed()) return cmd_verify(parse_bigint(k_text), order(), parse_vertices(cycle_text));
    if (label_cmd->parsed()) return cmd_label(parse_lengths(cycles_text));
    if (sweep_cmd->parsed()) return cmd_sweep(parse_range(k_range_text), parse_range(n_range_text), oracle_flag);
    if (oracle_cmd->parsed()) {
      if (!cycles_text.empty()) return cmd_oracle_label(parse_lengths(cycles_text));
      if (k_text.empty() || n_text.empty()) throw std::invalid_argument("oracle needs --k and --n, or --cycles");
      return cmd_oracle_cycle(parse_bigint(k_text), order());
    }
    return cmd_check();
  } catch (const std::invalid_argument& e) {
    return failure(Status::kInvalidInput, e.what());
  } catch (const std::out_of_range& e) {
    return failure(Status::kInvalidInput, e.what());
  } catch (const UnsupportedError& e) {
    return failure(Status::kUnsupported, e.what());
  } catch (const std::exception& e) {
    return failure(Status::kInternalError, e.what());
  }
}

}  // namespace coprime::cli
