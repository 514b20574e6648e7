// CSV persistence of orbit records.
//
// Schema (header required, UTF-8, LF line endings):
//   p,N,theta_0,...,theta_{N-1},alpha,beta,perimeter,
//   n_plus,n_minus,n_zero,rot_num,rot_den,first_seed_index
// Reals are rendered as shortest round-trip decimals, so
// parse(render(row)) reproduces every real bit-exactly and
// render(parse(file)) is a byte-level fixed point for files we produced.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpbilliards/identity.hpp"

namespace lpb {

std::string csv_header(int n_bounces);

std::string csv_row(const OrbitRecord& record);

// Render a full file (header + rows). Records must share one bounce count;
// an empty record list needs the bounce count for the header.
std::string csv_render(const std::vector<OrbitRecord>& records, int n_bounces);

// Parse a CSV document. Throws Parse with the 1-based offending line number
// in the message; bad_line (when non-null) receives it as well.
std::vector<OrbitRecord> csv_parse(const std::string& text,
                                   std::uint64_t* bad_line = nullptr);

void csv_write_file(const std::string& path,
                    const std::vector<OrbitRecord>& records,
                    int n_bounces);

std::vector<OrbitRecord> csv_read_file(const std::string& path,
                                       std::uint64_t* bad_line = nullptr);

}  // namespace lpb
