// seqproof command-line front end.
//
// Exit codes: 0 PASS or PARTIAL, 1 FAIL, 2 usage error, 3 runtime error
// (network, malformed b-file, exhausted precision).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "seqproof/harness.hpp"
#include "seqproof/harness/http_transport.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

int exit_code(const seqproof::VerificationReport& r) { return r.status == seqproof::Status::Fail ? kExitFail : kExitPass; }

void summarize(const seqproof::VerificationReport& r) {
  std::cerr << r.family << " [" << r.range_lo << ", " << r.range_hi << "]: " << seqproof::to_string(r.status);
  if (r.first_mismatch)
    std::cerr << " at index " << r.first_mismatch->index << " (expected " << r.first_mismatch->expected.get_str()
              << ", got " << r.first_mismatch->got.get_str() << ")";
  std::cerr << " in " << r.runtime_ms << " ms\n";
}

int emit(const seqproof::VerificationReport& r) {
  std::cout << seqproof::serialize_report(r) << "\n";
  summarize(r);
  return exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of integer-sequence closed forms"};
  app.require_subcommand(1);

  std::string family;
  seqproof::VerifyParams params;
  std::uint64_t k = 0, m = 0, n_max = 0;
  std::string pattern;
  auto* verify = app.add_subcommand("verify", "Run an oracle-vs-closed-form sweep");
  verify->add_option("family", family, "Family name")->required();
  auto* k_opt = verify->add_option("--k", k, "Alphabet size / layer bound");
  auto* m_opt = verify->add_option("--m", m, "Coordinate range");
  auto* n_opt = verify->add_option("--n-max", n_max, "Upper end of the sweep");
  auto* pattern_opt = verify->add_option("--pattern", pattern, "Word pattern or double-sum selector");
  verify->add_option("--precision-bits", params.precision_bits, "Initial enclosure precision")
      ->check(CLI::Range(1u, 1u << 16));
  verify->add_option("--enum-cap", params.enum_cap, "Brute-force enumeration cap");

  auto* oeis = app.add_subcommand("oeis", "OEIS b-file access");
  oeis->require_subcommand(1);
  std::string id;
  bool online = false;
  auto* fetch = oeis->add_subcommand("fetch", "Print a b-file from cache or fixtures");
  fetch->add_option("id", id, "OEIS id, e.g. A005251")->required();
  fetch->add_flag("--online", online, "Allow a network request on cache miss");

  std::string compare_family;
  bool shift_search = false;
  auto* compare = oeis->add_subcommand("compare", "Compare a computed prefix with a b-file");
  compare->add_option("id", id, "OEIS id")->required();
  compare->add_option("--family", compare_family, "Family the sequence is computed by");
  compare->add_flag("--shift-search", shift_search, "Search index shifts in [-5, 5]");
  compare->add_flag("--online", online, "Allow a network request on cache miss");

  std::string format = "json";
  std::string input;
  auto* report = app.add_subcommand("report", "Reformat reports read as JSON lines");
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  report->add_option("--input", input, "Input file (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      if (*k_opt) params.k = k;
      if (*m_opt) params.m = m;
      if (*n_opt) params.n_max = n_max;
      if (*pattern_opt) params.pattern = pattern;
      return emit(seqproof::verify_family(family, params));
    }
    if (*fetch || *compare) {
      seqproof::OeisClient client(seqproof::config_from_env(), seqproof::make_https_transport());
      if (*fetch) {
        seqproof::SequenceRecord record = client.fetch(id, online);
        for (const auto& [index, value] : record.terms) std::cout << index << ' ' << value.get_str() << '\n';
        std::cerr << id << ": " << record.terms.size() << " terms from offset " << record.offset << "\n";
        return kExitPass;
      }
      const seqproof::OeisBinding& binding = seqproof::find_oeis_binding(id);
      if (!compare_family.empty() && compare_family != binding.family)
        throw seqproof::InvalidParams(id + " is computed by family '" + binding.family + "', not '" + compare_family +
                                      "'");
      seqproof::AlignmentOptions options;
      options.shift_search = shift_search;
      seqproof::VerificationReport r =
          seqproof::compare_with_oeis(client, id, binding.compute(), binding.offset, online, options);
      r.params["family"] = binding.family;
      return emit(r);
    }
    if (*report) {
      std::ifstream file;
      if (!input.empty()) {
        file.open(input);
        if (!file) {
          std::cerr << "cannot open " << input << "\n";
          return kExitUsage;
        }
      }
      std::istream& in = input.empty() ? std::cin : file;
      if (format == "tsv") std::cout << seqproof::tsv_header() << "\n";
      int code = kExitPass;
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        seqproof::VerificationReport r = seqproof::parse_report(line);
        std::cout << (format == "tsv" ? seqproof::to_tsv_row(r) : seqproof::serialize_report(r)) << "\n";
        if (r.status == seqproof::Status::Fail) code = kExitFail;
      }
      return code;
    }
  } catch (const seqproof::UnknownFamily& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const seqproof::InvalidParams& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
