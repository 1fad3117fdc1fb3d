#ifndef PPRIME_REPORT_HPP
#define PPRIME_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace pprime
{

using Json = nlohmann::ordered_json;

inline constexpr const char *kToolName = "pprime";
inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

/// Result of one CLI command. Every row carries a boolean "pass"; rows may
/// also carry "skipped": true.
struct Report
{
  std::string command;
  Json parameters = Json::object();
  std::string status;  // pass, fail or partial
  Json rows = Json::array();
  Json counters = Json::object();
  double elapsed_ms = 0;
  std::string version = kToolVersion;
  std::uint64_t seed = 0;

  std::size_t failing() const;
  std::size_t skipped() const;
  // pass iff no failing row; partial if none fail but some were skipped.
  void finalize();

  friend bool operator==(const Report &, const Report &) = default;
};

Json to_json(const Report &r);
// Throws ParameterError on a malformed document or a schema mismatch.
Report report_from_json(const Json &j);

// Rows flattened to CSV: one column per key in first-seen order, arrays
// joined with ';', fields quoted when needed.
std::string to_csv(const Report &r);

}  // namespace pprime

#endif  // PPRIME_REPORT_HPP
