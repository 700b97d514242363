#ifndef FACTOPROD_DOCUMENT_HPP
#define FACTOPROD_DOCUMENT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "factoprod/coeff.hpp"

namespace factoprod {

// Table export document. Entries are decimal strings because coefficients
// outgrow 64-bit integers near k = 15 and JSON number precision is not
// portable.
struct OutputDocument {
  struct Provenance {
    std::string method;
    std::string generated_at;  // ISO-8601 UTC, recorded at computation time
    bool cross_checked = false;

    bool operator==(const Provenance&) const = default;
  };

  int schema = 1;
  int k = 0;
  int n = 2;
  std::string method;
  std::vector<std::vector<std::string>> entries;
  std::optional<Provenance> provenance;

  bool operator==(const OutputDocument&) const = default;
};

/// Builds a document from a 2D table. With_provenance stamps the current
/// UTC time; without it the provenance block is omitted entirely.
OutputDocument make_document(const CoeffTable2D& table, const std::string& method,
                             bool with_provenance, bool cross_checked = false);

std::string serialize_json(const OutputDocument& doc);

/// Inverse of serialize_json; parse(serialize(doc)) == doc.
/// Throws std::invalid_argument on malformed documents.
OutputDocument parse_json(const std::string& text);

/// Row l on line l, columns m = 1..k, plain decimal. The optional header
/// line labels the columns m=1..m=k.
std::string render_csv(const OutputDocument& doc, bool header);

/// Right-aligned columns; a k=1 table renders as the single line "1".
std::string render_text(const OutputDocument& doc);

/// Cache file for order k, dimension n under dir: c_k{k}_n{n}.json.
std::filesystem::path cache_path(const std::filesystem::path& dir, int k, int n);

/// Loads a cached document, validating the stored last row against the
/// second-kind Stirling row. Any mismatch, parse error or missing file is
/// reported as a miss.
std::optional<OutputDocument> cache_load(const std::filesystem::path& dir, int k,
                                         int n);

/// Atomically stores doc under its cache path (write temp, then rename).
void cache_store(const std::filesystem::path& dir, const OutputDocument& doc);

}  // namespace factoprod

#endif  // FACTOPROD_DOCUMENT_HPP
