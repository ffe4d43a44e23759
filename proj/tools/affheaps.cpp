#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "affine_heaps/diagram.hpp"
#include "affine_heaps/error.hpp"
#include "affine_heaps/monodimer.hpp"
#include "affine_heaps/oracle.hpp"
#include "affine_heaps/permutation.hpp"
#include "affine_heaps/ppp.hpp"
#include "affine_heaps/qformulas.hpp"
#include "affine_heaps/verify.hpp"

using namespace affheaps;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  if (const char* env = std::getenv("AFFINE_HEAPS_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string read_payload(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("payload is not JSON: ") + ex.what());
  }
}

json convert(const std::string& from, const std::string& to, const std::string& payload) {
  auto diagram_in = [&] { return diagram_from_json(parse_json(payload)); };
  if (from == "window") {
    AffinePermutation s = payload.find('{') != std::string::npos
                              ? permutation_from_json(parse_json(payload))
                              : parse_window(payload);
    if (to == "diagram") return to_json(delta(s));
  } else if (from == "diagram") {
    AlternatingDiagram d = diagram_in();
    if (to == "window") return to_json(delta_inverse(d));
    if (to == "walk") return to_json(phi(d));
    if (to == "pyramid") return to_json(upsilon(d));
    if (to == "marked-ppp") return to_json(diagram_to_marked_ppp(d));
  } else if (from == "walk") {
    Walk w = walk_from_json(parse_json(payload));
    if (to == "diagram") return to_json(phi_inverse(w));
    if (to == "pyramid") return to_json(psi_walk(w, WalkGraph::G));
  } else if (from == "pyramid") {
    MarkedPyramid p = marked_pyramid_from_json(parse_json(payload));
    if (to == "diagram") return to_json(upsilon_inverse(p));
    if (to == "walk") return to_json(psi_walk_inverse(p, WalkGraph::G));
  } else if (from == "sequence") {
    if (to == "heap") return to_json(f_to_heap(alt_sequence_from_json(parse_json(payload))));
  } else if (from == "heap") {
    if (to == "sequence") return to_json(f_inverse(heap_from_json(parse_json(payload))));
  } else if (from == "marked-ppp") {
    if (to == "diagram") return to_json(marked_ppp_to_diagram(marked_ppp_from_json(parse_json(payload))));
  }
  throw UsageError("no conversion from '" + from + "' to '" + to + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and bijection tools for 321-avoiding affine permutations"};
  app.require_subcommand(1);

  std::string cls = "affine", format = "json";
  int n = 0, max_len = 10;
  auto* count = app.add_subcommand("count", "Count 321-avoiding elements by length");
  count->add_option("--class", cls, "affine, finite, affine-involution or finite-involution");
  count->add_option("--n", n, "Rank (at least 2)")->required();
  count->add_option("--max-len", max_len, "Largest length");
  count->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string name;
  int tx = 4, ty = 0, tq = 8;
  auto* series = app.add_subcommand("series", "Print a truncated series");
  series->add_option("--name", name, "Series name")->required();
  series->add_option("--x", tx, "Largest x degree");
  series->add_option("--y", ty, "Largest y degree");
  series->add_option("--q", tq, "Largest q degree");

  std::string from, to, payload = "-";
  auto* conv = app.add_subcommand("convert", "Apply a bijection");
  conv->add_option("--from", from, "window, diagram, walk, pyramid, sequence, heap, marked-ppp")->required();
  conv->add_option("--to", to, "Target kind")->required();
  conv->add_option("payload", payload, "JSON or window text; '-' reads standard input");

  std::string suite;
  VerifyOptions vopts;
  vopts.jobs = default_jobs();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite id or 'all'")->required();
  verify->add_option("--n-max", vopts.n_max, "Largest rank");
  verify->add_option("--len-max", vopts.len_max, "Largest length");
  verify->add_option("--seed", vopts.seed, "Seed for random universes");
  verify->add_option("--jobs", vopts.jobs, "Worker threads (default AFFINE_HEAPS_JOBS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*count) {
      if (n < 2) throw UsageError("--n must be at least 2");
      if (max_len < 0) throw UsageError("--max-len must be nonnegative");
      PermClass pc;
      try {
        pc = parse_perm_class(cls);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      CountTable t = enumerate_fc_elements(n, max_len, pc);
      if (format == "csv") {
        std::cout << to_csv(t);
      } else {
        std::cout << to_json(t).dump(2) << '\n';
      }
      return kOk;
    }
    if (*series) {
      const auto& names = series_names();
      if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unknown series '" + name + "'");
      if (tx < 0 || ty < 0 || tq < 0) throw UsageError("truncation degrees must be nonnegative");
      std::cout << to_json(named_series(name, Truncation{tx, ty, tq})).dump(2) << '\n';
      return kOk;
    }
    if (*conv) {
      std::cout << convert(from, to, read_payload(payload)).dump(2) << '\n';
      return kOk;
    }
    if (*verify) {
      std::vector<std::string> ids;
      if (suite == "all") {
        ids = suite_ids();
      } else {
        const auto& known = suite_ids();
        if (std::find(known.begin(), known.end(), suite) == known.end())
          throw UsageError("unknown suite '" + suite + "'");
        ids = {suite};
      }
      if (vopts.n_max < 2 || vopts.len_max < 0) throw UsageError("--n-max >= 2 and --len-max >= 0");
      bool ok = true;
      for (const auto& id : ids) {
        SuiteReport r = run_suite(id, vopts);
        std::cout << format_report(r);
        ok = ok && r.passed();
      }
      return ok ? kOk : kVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kUsage : kDomain;
  }
  return kUsage;
}
