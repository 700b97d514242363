#include "factoprod/document.hpp"

#include <json.hpp>

#include <unistd.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "factoprod/stirling.hpp"

namespace factoprod {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

OutputDocument make_document(const CoeffTable2D& table, const std::string& method,
                             bool with_provenance, bool cross_checked) {
  OutputDocument doc;
  doc.k = table.k();
  doc.n = 2;
  doc.method = method;
  doc.entries.resize(table.k());
  for (int l = 1; l <= table.k(); ++l) {
    doc.entries[l - 1].reserve(table.k());
    for (int m = 1; m <= table.k(); ++m)
      doc.entries[l - 1].push_back(to_decimal(table.at(l, m)));
  }
  if (with_provenance)
    doc.provenance =
        OutputDocument::Provenance{method, utc_timestamp(), cross_checked};
  return doc;
}

std::string serialize_json(const OutputDocument& doc) {
  json j;
  j["schema"] = doc.schema;
  j["k"] = doc.k;
  j["n"] = doc.n;
  j["method"] = doc.method;
  j["entries"] = doc.entries;
  if (doc.provenance) {
    j["provenance"] = {{"method", doc.provenance->method},
                       {"generated_at", doc.provenance->generated_at},
                       {"cross_checked", doc.provenance->cross_checked}};
  }
  return j.dump(2) + "\n";
}

OutputDocument parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("document parse error: ") + e.what());
  }
  try {
    OutputDocument doc;
    doc.schema = j.at("schema").get<int>();
    doc.k = j.at("k").get<int>();
    doc.n = j.at("n").get<int>();
    doc.method = j.at("method").get<std::string>();
    doc.entries = j.at("entries").get<std::vector<std::vector<std::string>>>();
    if (j.contains("provenance")) {
      const json& p = j.at("provenance");
      doc.provenance = OutputDocument::Provenance{
          p.at("method").get<std::string>(),
          p.at("generated_at").get<std::string>(),
          p.at("cross_checked").get<bool>()};
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("document schema error: ") + e.what());
  }
}

std::string render_csv(const OutputDocument& doc, bool header) {
  std::ostringstream os;
  if (header) {
    for (int m = 1; m <= doc.k; ++m) os << (m > 1 ? "," : "") << "m=" << m;
    os << "\n";
  }
  for (const auto& row : doc.entries) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

std::string render_text(const OutputDocument& doc) {
  std::size_t width = 0;
  for (const auto& row : doc.entries)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::ostringstream os;
  for (const auto& row : doc.entries) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ' ';
      os << std::string(width - row[i].size(), ' ') << row[i];
    }
    os << "\n";
  }
  return os.str();
}

std::filesystem::path cache_path(const std::filesystem::path& dir, int k, int n) {
  return dir / ("c_k" + std::to_string(k) + "_n" + std::to_string(n) + ".json");
}

std::optional<OutputDocument> cache_load(const std::filesystem::path& dir, int k,
                                         int n) {
  std::ifstream in(cache_path(dir, k, n));
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  OutputDocument doc;
  try {
    doc = parse_json(buffer.str());
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (doc.k != k || doc.n != n) return std::nullopt;
  if (static_cast<int>(doc.entries.size()) != k) return std::nullopt;
  for (const auto& row : doc.entries)
    if (static_cast<int>(row.size()) != k) return std::nullopt;
  // integrity check: the last row of a valid table is the S2 row
  if (n == 2) {
    for (int m = 1; m <= k; ++m)
      if (doc.entries[k - 1][m - 1] != to_decimal(stirling2(k, m)))
        return std::nullopt;
  }
  return doc;
}

void cache_store(const std::filesystem::path& dir, const OutputDocument& doc) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path target = cache_path(dir, doc.k, doc.n);
  const std::filesystem::path temp =
      target.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out)
      throw std::runtime_error("cache_store: cannot write " + temp.string());
    out << serialize_json(doc);
  }
  std::filesystem::rename(temp, target);
}

}  // namespace factoprod
