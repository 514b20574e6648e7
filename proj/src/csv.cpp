#include "lpbilliards/csv.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "lpbilliards/format.hpp"

namespace lpb {

namespace {

[[noreturn]] void parse_fail(std::uint64_t line, std::uint64_t* bad_line,
                             const std::string& what) {
  if (bad_line) *bad_line = line;
  fail(ErrorCode::Parse,
       "CSV parse error at line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  try {
    size_t consumed = 0;
    out = std::stoll(token, &consumed);
    return consumed == token.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

std::string csv_header(int n_bounces) {
  std::string header = "p,N";
  for (int i = 0; i < n_bounces; ++i) {
    header += ",theta_" + std::to_string(i);
  }
  header +=
      ",alpha,beta,perimeter,n_plus,n_minus,n_zero,rot_num,rot_den,"
      "first_seed_index";
  return header;
}

std::string csv_row(const OrbitRecord& record) {
  std::string row = format_double(record.p) + "," + std::to_string(record.n);
  for (int i = 0; i < record.theta.size(); ++i) {
    row += "," + format_double(record.theta[i]);
  }
  row += "," + format_double(record.alpha);
  row += "," + format_double(record.beta);
  row += "," + format_double(record.perimeter);
  row += "," + std::to_string(record.signature.n_plus);
  row += "," + std::to_string(record.signature.n_minus);
  row += "," + std::to_string(record.signature.n_zero);
  row += "," + std::to_string(record.rotation.num);
  row += "," + std::to_string(record.rotation.den);
  row += "," + std::to_string(record.first_seed_index);
  return row;
}

std::string csv_render(const std::vector<OrbitRecord>& records,
                       int n_bounces) {
  std::string out = csv_header(n_bounces) + "\n";
  for (const OrbitRecord& record : records) {
    if (record.n != n_bounces) {
      fail(ErrorCode::InvalidArgument,
           "all records in one CSV must share the bounce count");
    }
    out += csv_row(record) + "\n";
  }
  return out;
}

std::vector<OrbitRecord> csv_parse(const std::string& text,
                                   std::uint64_t* bad_line) {
  std::istringstream stream(text);
  std::string line;
  std::uint64_t line_no = 0;

  if (!std::getline(stream, line)) {
    parse_fail(1, bad_line, "missing header");
  }
  line_no = 1;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split_csv_line(line);
  // p,N + N thetas + 6 reals/ints + rot pair + seed index = N + 11 columns.
  if (header.size() < 12 || header[0] != "p" || header[1] != "N") {
    parse_fail(1, bad_line, "unrecognized header");
  }
  const int n = static_cast<int>(header.size()) - 11;
  std::vector<std::string> expected = split_csv_line(csv_header(n));
  if (header != expected) {
    parse_fail(1, bad_line, "unrecognized header");
  }

  std::vector<OrbitRecord> records;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;  // tolerate a trailing blank line
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      parse_fail(line_no, bad_line, "wrong field count");
    }
    OrbitRecord record;
    long long integer = 0;
    size_t col = 0;
    if (!parse_double(fields[col++], record.p)) {
      parse_fail(line_no, bad_line, "bad p");
    }
    if (!parse_int(fields[col++], integer) || integer != n) {
      parse_fail(line_no, bad_line, "bad N");
    }
    record.n = n;
    record.theta.resize(n);
    for (int i = 0; i < n; ++i) {
      if (!parse_double(fields[col++], record.theta[i])) {
        parse_fail(line_no, bad_line, "bad theta");
      }
    }
    if (!parse_double(fields[col++], record.alpha)) {
      parse_fail(line_no, bad_line, "bad alpha");
    }
    if (!parse_double(fields[col++], record.beta)) {
      parse_fail(line_no, bad_line, "bad beta");
    }
    if (!parse_double(fields[col++], record.perimeter)) {
      parse_fail(line_no, bad_line, "bad perimeter");
    }
    if (!parse_int(fields[col++], integer)) {
      parse_fail(line_no, bad_line, "bad n_plus");
    }
    record.signature.n_plus = static_cast<int>(integer);
    if (!parse_int(fields[col++], integer)) {
      parse_fail(line_no, bad_line, "bad n_minus");
    }
    record.signature.n_minus = static_cast<int>(integer);
    if (!parse_int(fields[col++], integer)) {
      parse_fail(line_no, bad_line, "bad n_zero");
    }
    record.signature.n_zero = static_cast<int>(integer);
    if (!parse_int(fields[col++], integer)) {
      parse_fail(line_no, bad_line, "bad rot_num");
    }
    record.rotation.num = static_cast<int>(integer);
    if (!parse_int(fields[col++], integer) || integer == 0) {
      parse_fail(line_no, bad_line, "bad rot_den");
    }
    record.rotation.den = static_cast<int>(integer);
    if (!parse_int(fields[col++], integer) || integer < 0) {
      parse_fail(line_no, bad_line, "bad first_seed_index");
    }
    record.first_seed_index = static_cast<std::uint64_t>(integer);
    record.residual = std::numeric_limits<double>::quiet_NaN();
    records.push_back(std::move(record));
  }
  return records;
}

void csv_write_file(const std::string& path,
                    const std::vector<OrbitRecord>& records, int n_bounces) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    fail(ErrorCode::Io, "cannot open for writing: " + path);
  }
  file << csv_render(records, n_bounces);
  file.flush();
  if (!file) {
    fail(ErrorCode::Io, "write failed: " + path);
  }
}

std::vector<OrbitRecord> csv_read_file(const std::string& path,
                                       std::uint64_t* bad_line) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    fail(ErrorCode::Io, "cannot open: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return csv_parse(buffer.str(), bad_line);
}

}  // namespace lpb
