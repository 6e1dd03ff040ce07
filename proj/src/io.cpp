#include "qsel/io.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "json.hpp"

namespace qsel {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

OutputRecord make_output_record(const BetaThresholdTable& table, int n) {
  OutputRecord rec;
  rec.n = n;
  rec.beta = table.beta[static_cast<std::size_t>(n)];
  rec.t = table.t[static_cast<std::size_t>(n)];
  rec.v = table.v[static_cast<std::size_t>(n)];
  const double nd = static_cast<double>(n);
  rec.lower = 0.5 * nd * nd;
  rec.upper = 0.5 * nd * nd + nd * std::log(nd);
  if (n < table.n_max) rec.delta = table.delta[static_cast<std::size_t>(n)];
  return rec;
}

void write_table_csv(std::ostream& os, const BetaThresholdTable& table) {
  os << "n,beta,t,v,lower,upper,delta\n";
  for (int n = 1; n <= table.n_max; ++n) {
    const OutputRecord rec = make_output_record(table, n);
    os << rec.n << ',' << format_double(rec.beta) << ',' << format_double(rec.t)
       << ',' << format_double(rec.v) << ',' << format_double(rec.lower) << ','
       << format_double(rec.upper) << ','
       << (rec.delta ? format_double(*rec.delta) : std::string()) << '\n';
  }
}

void write_table_json(std::ostream& os, const BetaThresholdTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 1; n <= table.n_max; ++n) {
    const OutputRecord rec = make_output_record(table, n);
    nlohmann::json row{{"n", rec.n},         {"beta", rec.beta},
                       {"t", rec.t},         {"v", rec.v},
                       {"lower", rec.lower}, {"upper", rec.upper}};
    if (rec.delta) {
      row["delta"] = *rec.delta;
    } else {
      row["delta"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  os << rows.dump(2) << '\n';
}

}  // namespace qsel
