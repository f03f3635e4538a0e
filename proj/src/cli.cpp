#include "springer/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string_view>

#include "springer/bijections.hpp"
#include "springer/error.hpp"
#include "springer/families.hpp"
#include "springer/text.hpp"
#include "springer/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace springer::cli {

namespace {

const std::vector<std::string>& family_vocabulary() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (Family f : all_families()) names.emplace_back(family_name(f));
    return names;
  }();
  return kNames;
}

using LineMap = std::function<std::string(std::string_view)>;

struct BijectionEntry {
  LineMap forward;
  LineMap inverse;
};

void write_phi_trace(const ThreeWIP& wip, std::ostream& trace) {
  const auto t = phi_trace(wip);
  trace << "tau=" << to_text(standard_cycle_form(t.tau.perm), t.tau)
        << " tau~=" << to_text(t.tau_tilde) << " snake=" << to_text(t.snake) << '\n';
}

const std::map<std::string, BijectionEntry>& bijections() {
  static const std::map<std::string, BijectionEntry> kTable{
      {"phi",
       {[](std::string_view s) { return to_text(phi(parse_wip3(s))); },
        [](std::string_view s) {
          return to_text(phi_inverse(parse_signed_permutation(s)));
        }}},
      {"psi",
       {[](std::string_view s) { return to_text(psi(parse_signed_permutation(s))); },
        [](std::string_view s) {
          return to_text(psi_inverse(parse_permutation(s)));
        }}},
      {"fz",
       {[](std::string_view s) { return to_text(fz(parse_permutation(s))); },
        [](std::string_view s) {
          return to_text(fz_inverse(parse_laguerre_history(s)));
        }}},
      {"bigpsi",
       {[](std::string_view s) {
          return to_text(rcalt_to_lbp(parse_permutation(s)));
        },
        [](std::string_view s) {
          return to_text(lbp_to_rcalt(parse_labeled_ballot_path(s)));
        }}},
      {"snake2lbp",
       {[](std::string_view s) {
          return to_text(snake_to_lbp(parse_signed_permutation(s)));
        },
        [](std::string_view s) {
          return to_text(lbp_to_snake(parse_labeled_ballot_path(s)));
        }}},
      {"wbar",
       {[](std::string_view s) {
          return to_text(wbar(parse_labeled_ballot_path(s)));
        },
        [](std::string_view s) {
          return to_text(wbar(parse_labeled_ballot_path(s)));
        }}},
  };
  return kTable;
}

int cmd_count(const std::string& family_text, int n, const std::string& method,
              std::ostream& out) {
  const auto family = *parse_family(family_text);
  const auto size = static_cast<std::size_t>(n);
  if (method == "enumerate") {
    out << count_by_enumeration(family, size) << '\n';
  } else {
    out << count_by_oracle(family, size) << '\n';
  }
  return kOk;
}

int cmd_enumerate(const std::string& family_text, int n, std::ostream& out) {
  enumerate_text(*parse_family(family_text), static_cast<std::size_t>(n),
                 [&out](const std::string& line) {
                   out << line << '\n';
                   return static_cast<bool>(out);
                 });
  return kOk;
}

int cmd_map(const std::string& name, bool inverse, bool trace, std::istream& in,
            std::ostream& out, std::ostream& err) {
  const auto& entry = bijections().at(name);
  const auto& fn = inverse ? entry.inverse : entry.forward;
  std::string line;
  std::size_t lineno = 0;
  bool failed = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      const auto result = fn(line);
      if (trace) {
        err << "trace " << lineno << ": ";
        write_phi_trace(inverse ? phi_inverse(parse_signed_permutation(line))
                                : parse_wip3(line),
                        err);
      }
      out << result << '\n';
    } catch (const std::exception& e) {
      err << "ERROR " << lineno << ": " << e.what() << '\n';
      failed = true;
    }
  }
  return failed ? kDataError : kOk;
}

int cmd_verify(int n_max, bool serial, int threads, std::ostream& out) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  const auto exec = serial ? kernels::Execution::kSerial : kernels::Execution::kParallel;
  const auto results = verify_all(static_cast<std::size_t>(n_max), exec);

  std::size_t width = 8;
  for (const auto& r : results) width = std::max(width, r.name.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "property" << std::setw(8)
      << "range" << std::setw(8) << "status" << std::setw(10) << "checked" << std::setw(10)
      << "elapsed"
      << "detail\n";
  std::size_t failures = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    std::ostringstream elapsed;
    elapsed << std::fixed << std::setprecision(3) << r.seconds << 's';
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.name << std::setw(8)
        << r.range << std::setw(8) << (r.passed ? "PASS" : "FAIL") << std::setw(10) << r.checked
        << std::setw(10) << elapsed.str() << r.detail << '\n';
  }
  if (failures == 0) {
    out << "all " << results.size() << " properties passed\n";
  } else {
    out << failures << " of " << results.size() << " properties failed\n";
  }
  return failures == 0 ? kOk : kDataError;
}

int cmd_springer(int n_max, std::ostream& out, std::ostream& err) {
  const auto m = static_cast<std::size_t>(n_max);
  const auto table = springer_egf(m);
  if (m <= 12 && !table.agrees_with(springer_dp(m))) {
    err << "ERROR: EGF recurrence and ballot-path DP disagree\n";
    return kDataError;
  }
  for (const auto& v : table.values) out << v << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Springer-number families: enumeration, bijections and verification",
               "springer"};
  app.require_subcommand(1);

  std::string family;
  int n = 0;
  std::string method = "oracle";
  auto* count = app.add_subcommand("count", "Count a family at size n");
  count->add_option("--family", family, "Family name")
      ->required()
      ->check(CLI::IsMember(family_vocabulary()));
  count->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--method", method, "enumerate or oracle")
      ->check(CLI::IsMember({"enumerate", "oracle"}));

  auto* enumerate = app.add_subcommand("enumerate", "List a family in canonical order");
  enumerate->add_option("--family", family, "Family name")
      ->required()
      ->check(CLI::IsMember(family_vocabulary()));
  enumerate->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);

  std::string bijection;
  bool inverse = false;
  bool trace = false;
  auto* map = app.add_subcommand("map", "Apply a bijection to each stdin line");
  std::vector<std::string> bijection_names;
  for (const auto& [name, _] : bijections()) bijection_names.push_back(name);
  map->add_option("--bijection", bijection, "phi, psi, fz, bigpsi, snake2lbp or wbar")
      ->required()
      ->check(CLI::IsMember(bijection_names));
  map->add_flag("--inverse", inverse, "Apply the inverse map");
  map->add_flag("--trace", trace, "With phi: print the intermediate tau and tau~ on stderr");

  int n_max = 0;
  bool serial = false;
  int threads = 0;
  auto* verify = app.add_subcommand("verify", "Run every property suite up to n-max");
  verify->add_option("--n-max", n_max, "Largest size checked")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--serial", serial, "Use the serial reference kernels");
  verify->add_option("--threads", threads, "OpenMP thread count")->check(CLI::NonNegativeNumber);

  auto* springer_cmd = app.add_subcommand("springer", "Print S_0..S_n-max");
  springer_cmd->add_option("--n-max", n_max, "Largest index")
      ->required()
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  if (trace && bijection != "phi") {
    err << "usage error: --trace is only available with --bijection phi\n";
    return kUsageError;
  }

  try {
    if (*count) return cmd_count(family, n, method, out);
    if (*enumerate) return cmd_enumerate(family, n, out);
    if (*map) return cmd_map(bijection, inverse, trace, in, out, err);
    if (*verify) return cmd_verify(n_max, serial, threads, out);
    if (*springer_cmd) return cmd_springer(n_max, out, err);
  } catch (const std::exception& e) {
    err << "ERROR: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace springer::cli
