#include "cauchy/cli.hpp"

#include "cauchy/errors.hpp"

#include <fstream>
#include <sstream>

namespace cauchy::cli {

ExactMatrix parse_matrix_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("matrix document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("matrix document needs an integer field 'n'");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("matrix document needs an array field 'entries'");

  const auto declared = doc["n"].get<long long>();
  if (declared < 1)
    throw DimensionError("matrix dimension must be at least 1, got " + std::to_string(declared));
  const auto n = static_cast<std::size_t>(declared);
  const auto& rows = doc["entries"];
  if (rows.size() != n)
    throw DimensionError("expected " + std::to_string(n) + " rows, got " +
                         std::to_string(rows.size()));

  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array())
      throw ParseError("row " + std::to_string(r + 1) + " is not an array");
    if (row.size() != n)
      throw DimensionError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(n));
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw ParseError("matrix entries must be strings such as \"3\" or \"-7/2\"");
      entries.push_back(Rational::parse(cell.get<std::string>()));
    }
  }
  return ExactMatrix(n, std::move(entries));
}

ExactMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open matrix file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_document(buffer.str());
}

} // namespace cauchy::cli
