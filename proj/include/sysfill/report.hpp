#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sysfill/deform.hpp"

namespace sysfill {

struct VerifyOptions {
  int workers = 1;
};

struct VerifyRun {
  nlohmann::ordered_json report;
  bool pass = false;
};

// Full certification pipeline on one {p,q} instance: map validation, counts
// and cell dimensions, balance point, twist calibration with a certified
// systole margin, filling, crossing angles, the Wolpert differential with an
// independent finite-difference check, and the alternating vertex probe.
// The report is deterministic: identical inputs give byte-identical dumps
// regardless of worker count.
VerifyRun run_verify_all(const SurfaceMap& map, const std::string& instance, int p, int q,
                         const VerifyOptions& options = {});

}  // namespace sysfill
