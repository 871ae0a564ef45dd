// Acceptance gate: runs the nine verification suites and prints one
// PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.
//
//   usage: acceptance [data-dir]
#include <cstdio>
#include <exception>
#include <string>

#include "bu2cc/verify.hpp"

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : "data";
  std::vector<bu2cc::VerifyReport> reports;
  try {
    reports = bu2cc::verify_all(data_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "FAIL acceptance: verification aborted: %s\n",
                 e.what());
    return 1;
  }

  int criterion = 0;
  int failures = 0;
  for (const bu2cc::VerifyReport& report : reports) {
    ++criterion;
    if (report.all_pass()) {
      std::printf("PASS criterion %d: %s (%zu checks)\n", criterion,
                  report.title.c_str(), report.checks.size());
      continue;
    }
    ++failures;
    std::printf("FAIL criterion %d: %s (%d of %zu checks failed)\n",
                criterion, report.title.c_str(), report.failures(),
                report.checks.size());
    for (const bu2cc::CheckResult& check : report.checks)
      if (!check.pass)
        std::printf("       %s%s%s\n", check.name.c_str(),
                    check.detail.empty() ? "" : ": ", check.detail.c_str());
  }
  if (failures == 0) {
    std::printf("acceptance: all %d criteria hold\n", criterion);
    return 0;
  }
  std::printf("acceptance: %d of %d criteria failed\n", failures, criterion);
  return 1;
}
