#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "qsel/tables.hpp"

namespace qsel {

// Shortest decimal representation that round-trips to the same double
// (std::to_chars); all numeric output goes through this.
std::string format_double(double value);

// One emitted table row. lower/upper are the n^2/2 and n^2/2 + n ln n
// envelope; delta is absent for the last tabulated n.
struct OutputRecord {
  int n = 0;
  double beta = 0.0;
  double t = 0.0;
  double v = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> delta;
};

OutputRecord make_output_record(const BetaThresholdTable& table, int n);

// CSV with frozen header "n,beta,t,v,lower,upper,delta", LF endings,
// '.' decimal separator; empty delta field on the last row.
void write_table_csv(std::ostream& os, const BetaThresholdTable& table);

// JSON array of objects with the same field names; delta is null on the
// last row.
void write_table_json(std::ostream& os, const BetaThresholdTable& table);

}  // namespace qsel
