#ifndef ADRCSIM_SCENARIO_IO_HPP_
#define ADRCSIM_SCENARIO_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "adrcsim/scenario.hpp"
#include "adrcsim/simulate.hpp"

namespace adrcsim
{

/// Parses a scenario document (JSON text). Unknown keys are rejected and
/// every scenario invariant is checked; errors cite the key and the rule.
Scenario parse_scenario(const std::string & text);
Scenario load_scenario_file(const std::string & path);

/// Canonical serialization; parse(serialize(s)) reproduces s exactly
/// (constant and schedule parameter sources only — external callables have
/// no document form).
std::string serialize_scenario(const Scenario & scenario);
void save_scenario_file(const Scenario & scenario, const std::string & path);

/// The five built-in validation scenarios, "example1" .. "example5".
const std::vector<std::string> & builtin_scenario_names();
bool is_builtin_scenario(const std::string & name);
Scenario builtin_scenario(const std::string & name);
/// One-line description for listings.
std::string builtin_scenario_summary(const std::string & name);

/// Writes the trace as CSV: a header naming every column, one row per
/// controller step, doubles formatted to round-trip exactly. Returns the
/// number of bytes written. Deterministic byte-for-byte for a fixed trace.
std::size_t emit_csv(const Trace & trace, std::ostream & out);
std::size_t emit_csv_file(const Trace & trace, const std::string & path);

/// Minimal numeric CSV reader for the files emit_csv writes.
struct CsvTable
{
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  const std::vector<double> & column(const std::string & name) const;
};

CsvTable read_csv(std::istream & in);
CsvTable read_csv_file(const std::string & path);

}  // namespace adrcsim

#endif  // ADRCSIM_SCENARIO_IO_HPP_
