// One-shot reproduction suite: every desk-scale claim the library is built
// around, run end to end against the shipped fixtures and rendered as a
// stable text table (diffable CI logs; only the timing column varies between
// runs).  The checks are grouped so the acceptance gate can report one line
// per group.
#pragma once

#include <string>
#include <vector>

namespace lewis {

struct ReproCheck {
  std::string id;
  int group = 0;       // 1..7 = acceptance groups; 0 = extra reproduction rows
  bool pass = false;
  std::string detail;  // deterministic one-line outcome / failure description
  double seconds = 0.0;
};

// Runs the whole suite against the fixture directory (the shipped frames,
// algebra and proof scripts).  `jobs` forwards a worker count to the
// searches and sweeps; results are identical for every jobs value.  Checks
// never throw: an exception inside a check fails that row with the message.
std::vector<ReproCheck> run_repro(const std::string& fixture_dir, int jobs = 1);

// Fixed-width table; quiet keeps only the failing rows (plus the header).
std::string format_repro(const std::vector<ReproCheck>& checks, bool quiet = false);

bool all_passed(const std::vector<ReproCheck>& checks);

}  // namespace lewis
