#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ctsat/bounds.hpp"
#include "ctsat/solver.hpp"

namespace ctsat {

// Flat key=value rendering of a verdict and its counters, one pair per
// line.
std::string verdict_kv(const Verdict& v);

// CSV schema for the blowup benchmark. Everything except wall_time_ns is
// byte-deterministic for fixed arguments.
std::string bench_csv_header();
std::string bench_csv_row(int n, const Verdict& v, std::uint64_t wall_time_ns,
                          std::optional<double> visits_ratio);

std::string bounds_kv(const BoundsReport& r);
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& r, std::size_t clause_count);

}  // namespace ctsat
