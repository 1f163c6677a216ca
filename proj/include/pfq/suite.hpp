#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfq/kernels.hpp"
#include "pfq/quandle.hpp"

namespace pfq {

inline constexpr uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

struct CheckResult {
  std::string id;      // block dot check, e.g. "ehrman.roundtrip-order-4"
  std::string claim;   // one-line statement of what was checked
  bool pass = false;
  std::string witness; // filled on failure
};

struct SuiteOptions {
  std::string only;            // run only blocks whose name starts with this
  uint64_t seed = kDefaultSeed;
  ExecMode mode = ExecMode::Parallel;
};

// The ten proposition blocks. Block names: tait, axioms, inn-mn, ehrman,
// induced-hom, towers, counterexample, inn-density, complementation, adtak.
std::vector<std::string> suite_blocks();
std::vector<CheckResult> run_suite_block(const std::string &block,
                                         const SuiteOptions &opts);
std::vector<CheckResult> run_paper_suite(const SuiteOptions &opts);

// Test hook for the negative control: the tait block run against a
// replacement table.
std::vector<CheckResult> run_tait_block_on(const FiniteQuandle &candidate);

// Named small quandles shared by several blocks.
std::vector<std::pair<std::string, FiniteQuandle>> corpus_quandles();

} // namespace pfq
