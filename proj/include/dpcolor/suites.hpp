#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpcolor/bigint.hpp"

namespace dpc {

enum class CheckStatus { pass, fail, recorded };

const char* to_string(CheckStatus s);

struct CheckRow {
    std::string claim;
    std::string instance;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::pass;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int shards = 1;
    BigInt budget = 1000000000;
};

/// wheels gluing technical cycles chordal seth constructions manycycles
/// monotonicity chromatic
const std::vector<std::string>& suite_names();

/// Rows of one named suite, or of every suite for "all". Throws
/// InvalidArgument for an unknown name.
std::vector<CheckRow> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace dpc
