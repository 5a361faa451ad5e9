#pragma once

#include <string>
#include <vector>

#include "phel/params.hpp"

namespace phel::cliops {

enum class Format { csv, json };

struct RunOptions {
    params::PhysicalConfig config;
    std::string out_dir = ".";
    Format format = Format::csv;
    int threads = 1;
};

inline constexpr const char* kToolVersion = "1.0.0";

// Figure datasets 1..6; returns the emitted file paths.
std::vector<std::string> cmd_figure(int n, const RunOptions& opts);

std::string cmd_table_b1(const RunOptions& opts);

// Returns exit code: 0 all pass, 1 any check failed.
int cmd_verify(const std::string& level, const RunOptions& opts,
               std::string* report_path = nullptr);

std::vector<std::string> cmd_jackiw(double gamma, int branch, int dim,
                                    const RunOptions& opts);

void write_manifest(const std::string& command, const RunOptions& opts,
                    const std::vector<std::string>& outputs, bool failed = false);

} // namespace phel::cliops
