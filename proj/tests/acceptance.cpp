#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "affine_heaps/error.hpp"
#include "affine_heaps/verify.hpp"

using namespace affheaps;

int main() {
  VerifyOptions opts;
  if (const char* env = std::getenv("AFFINE_HEAPS_JOBS")) opts.jobs = std::max(1, std::atoi(env));

  const auto& ids = suite_ids();
  int failures = 0;
  std::vector<std::string> summary;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    SuiteReport r;
    try {
      r = run_suite(ids[k], opts);
    } catch (const std::exception& e) {
      r.suite = ids[k];
      r.checks.push_back({"suite raised an exception", false, e.what(), false});
    }
    const bool ok = r.passed();
    if (!ok) ++failures;
    std::string line = std::string(ok ? "PASS" : "FAIL") + " criterion " + std::to_string(k + 1) +
                       ": " + ids[k];
    summary.push_back(line);
    std::cout << format_report(r);
    std::cout << line << std::endl;
  }
  std::cout << "\nsummary\n";
  for (const auto& s : summary) std::cout << "  " << s << '\n';
  std::cout << (ids.size() - failures) << "/" << ids.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
