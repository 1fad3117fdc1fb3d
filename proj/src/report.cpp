#include "pprime/report.hpp"

#include <algorithm>
#include <sstream>

#include "pprime/errors.hpp"

namespace pprime
{

namespace
{

std::string scalar(const Json &v)
{
  if (v.is_string())
  {
    return v.get<std::string>();
  }
  if (v.is_null())
  {
    return {};
  }
  if (v.is_array())
  {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
      out += (i ? ";" : "") + scalar(v[i]);
    }
    return out;
  }
  return v.dump();
}

std::string csv_field(const std::string &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
  {
    return s;
  }
  std::string out = "\"";
  for (char c : s)
  {
    out += c;
    if (c == '"')
    {
      out += '"';
    }
  }
  return out + "\"";
}

}  // namespace

std::size_t Report::failing() const
{
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Json &row) {
    return row.contains("pass") && !row["pass"].get<bool>();
  }));
}

std::size_t Report::skipped() const
{
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Json &row) {
    return row.contains("skipped") && row["skipped"].get<bool>();
  }));
}

void Report::finalize()
{
  if (failing() > 0)
  {
    status = "fail";
  }
  else
  {
    status = skipped() > 0 ? "partial" : "pass";
  }
  counters["rows"] = rows.size();
  counters["failing"] = failing();
}

Json to_json(const Report &r)
{
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = kToolName;
  j["version"] = r.version;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["seed"] = r.seed;
  j["status"] = r.status;
  j["counters"] = r.counters;
  j["rows"] = r.rows;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Report report_from_json(const Json &j)
{
  try
  {
    if (j.at("schema").get<int>() != kReportSchema)
    {
      throw ParameterError("unsupported report schema");
    }
    Report r;
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.seed = j.at("seed").get<std::uint64_t>();
    r.status = j.at("status").get<std::string>();
    r.counters = j.at("counters");
    r.rows = j.at("rows");
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  }
  catch (const Json::exception &e)
  {
    throw ParameterError(std::string("malformed report: ") + e.what());
  }
}

std::string to_csv(const Report &r)
{
  std::vector<std::string> columns;
  for (const auto &row : r.rows)
  {
    for (auto it = row.begin(); it != row.end(); ++it)
    {
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end())
      {
        columns.push_back(it.key());
      }
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i)
  {
    out << (i ? "," : "") << csv_field(columns[i]);
  }
  out << '\n';
  for (const auto &row : r.rows)
  {
    for (std::size_t i = 0; i < columns.size(); ++i)
    {
      out << (i ? "," : "");
      if (row.contains(columns[i]))
      {
        out << csv_field(scalar(row[columns[i]]));
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pprime
