#pragma once

// Check reports: JSON with stable key order plus RFC-4180 CSV tables.

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

namespace engel::verify {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Flag, Fail };

std::string to_string(Status s);
Status worst(Status a, Status b);

struct Entry {
  std::string name;
  std::string reference;
  Status status = Status::Pass;
  double tolerance = NAN;  // NaN: not a tolerance check
  Json values = Json::object();
  std::string note;
};

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct CheckReport {
  std::string check;
  std::string reference;
  std::vector<Entry> entries;
  std::vector<Table> tables;

  Status status() const;
  Entry& add(Entry e);
  // Pass when value <= tolerance, fail otherwise.
  Entry& bound(std::string name, std::string reference, double value, double tolerance);
  Json to_json() const;
};

// %.17g, with "nan"/"inf" spelled out.
std::string format_number(double v);
// Finite values as JSON numbers, others as their format_number spelling.
Json number(double v);
std::string csv_field(const std::string& s);
std::string to_csv(const Table& t);

}  // namespace engel::verify
