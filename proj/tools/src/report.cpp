#include "report.hpp"

#include <cstdio>

namespace engel::verify {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Flag:
      return "flag";
    case Status::Fail:
      break;
  }
  return "fail";
}

Status worst(Status a, Status b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

Status CheckReport::status() const {
  Status s = Status::Pass;
  for (const auto& e : entries) s = worst(s, e.status);
  return s;
}

Entry& CheckReport::add(Entry e) {
  entries.push_back(std::move(e));
  return entries.back();
}

Entry& CheckReport::bound(std::string name, std::string reference, double value, double tolerance) {
  Entry e;
  e.name = std::move(name);
  e.reference = std::move(reference);
  e.tolerance = tolerance;
  e.values["value"] = value;
  e.status = value <= tolerance ? Status::Pass : Status::Fail;
  return add(std::move(e));
}

Json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

Json CheckReport::to_json() const {
  Json j;
  j["check"] = check;
  j["reference"] = reference;
  j["status"] = to_string(status());
  Json list = Json::array();
  for (const auto& e : entries) {
    Json item;
    item["name"] = e.name;
    item["reference"] = e.reference;
    item["status"] = to_string(e.status);
    if (!std::isnan(e.tolerance)) item["tolerance"] = number(e.tolerance);
    item["values"] = e.values;
    if (!e.note.empty()) item["note"] = e.note;
    list.push_back(std::move(item));
  }
  j["entries"] = std::move(list);
  Json files = Json::array();
  for (const auto& t : tables) files.push_back(check + "_" + t.name + ".csv");
  j["tables"] = std::move(files);
  return j;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

}  // namespace engel::verify
