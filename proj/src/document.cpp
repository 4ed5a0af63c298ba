#include "paramspec/document.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

using nlohmann::json;

std::string entry_label(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Rational coeff_from_json(const json& value, int i, int j) {
  if (value.is_number_integer()) {
    return Rational(value.get<long>());
  }
  if (value.is_string()) {
    try {
      return Rational::from_string(value.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError("entry " + entry_label(i, j) + ": " + e.what());
    }
  }
  throw ValidationError("entry " + entry_label(i, j) +
                        ": coefficients must be integers or rational strings");
}

void trim_coeffs(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

bool operator==(const MatrixDocument& a, const MatrixDocument& b) {
  if (a.n != b.n || a.parameter != b.parameter || a.entries.size() != b.entries.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    const auto& x = a.entries[k];
    const auto& y = b.entries[k];
    if (x.i != y.i || x.j != y.j || x.coeffs != y.coeffs) return false;
  }
  return true;
}

MatrixDocument parse_document(const std::string& bytes) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("document root must be a JSON object");

  MatrixDocument doc;
  if (!root.contains("n") || !root["n"].is_number_integer()) {
    throw ValidationError("document needs an integer \"n\"");
  }
  doc.n = root["n"].get<int>();
  if (doc.n < 1) throw ValidationError("matrix dimension must be >= 1");

  if (root.contains("parameter")) {
    if (!root["parameter"].is_string()) throw ValidationError("\"parameter\" must be a string");
    doc.parameter = root["parameter"].get<std::string>();
    if (doc.parameter.empty()) throw ValidationError("\"parameter\" must not be empty");
  }

  if (!root.contains("entries") || !root["entries"].is_array()) {
    throw ValidationError("document needs an \"entries\" array");
  }

  std::map<std::pair<int, int>, std::vector<Rational>> cells;
  std::map<std::pair<int, int>, std::pair<int, int>> first_seen;  // key -> coords as given
  for (const auto& item : root["entries"]) {
    if (!item.is_object() || !item.contains("i") || !item.contains("j") ||
        !item.contains("coeffs") || !item["i"].is_number_integer() ||
        !item["j"].is_number_integer() || !item["coeffs"].is_array()) {
      throw ValidationError(
          "each entry must be an object {\"i\": int, \"j\": int, \"coeffs\": [...]}");
    }
    const int i = item["i"].get<int>();
    const int j = item["j"].get<int>();
    if (i < 1 || i > doc.n || j < 1 || j > doc.n) {
      throw ValidationError("entry " + entry_label(i, j) + " out of range for n=" +
                            std::to_string(doc.n));
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(item["coeffs"].size());
    for (const auto& c : item["coeffs"]) coeffs.push_back(coeff_from_json(c, i, j));
    trim_coeffs(coeffs);

    const auto key = std::minmax(i, j);
    const auto mirror = first_seen.find(key);
    if (mirror != first_seen.end()) {
      if (mirror->second == std::make_pair(i, j)) {
        throw ValidationError("duplicate entry " + entry_label(i, j));
      }
      if (cells[key] != coeffs) {
        throw ValidationError("conflicting symmetric entries " +
                              entry_label(mirror->second.first, mirror->second.second) +
                              " and " + entry_label(i, j));
      }
      continue;  // consistent mirror of an existing entry
    }
    first_seen.emplace(key, std::make_pair(i, j));
    cells.emplace(key, std::move(coeffs));
  }

  for (auto& [key, coeffs] : cells) {
    if (coeffs.empty()) continue;  // canonical form drops zero entries
    doc.entries.push_back({key.first, key.second, std::move(coeffs)});
  }
  return doc;
}

std::string serialize_document(const MatrixDocument& document) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << document.n << ",\n";
  os << "  \"parameter\": \"" << document.parameter << "\",\n";
  os << "  \"entries\": [";
  for (std::size_t k = 0; k < document.entries.size(); ++k) {
    const auto& e = document.entries[k];
    os << (k == 0 ? "\n" : ",\n");
    os << "    {\"i\": " << e.i << ", \"j\": " << e.j << ", \"coeffs\": [";
    for (std::size_t c = 0; c < e.coeffs.size(); ++c) {
      if (c > 0) os << ", ";
      os << '"' << e.coeffs[c].to_string() << '"';
    }
    os << "]}";
  }
  os << (document.entries.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

ParametricMatrix to_matrix(const MatrixDocument& document) {
  std::vector<ParametricMatrix::Entry> entries;
  entries.reserve(document.entries.size());
  for (const auto& e : document.entries) {
    entries.push_back({e.i - 1, e.j - 1, UniPoly(document.parameter, e.coeffs)});
  }
  return ParametricMatrix::build(document.n, entries, document.parameter);
}

MatrixDocument builtin_document(const std::string& name) {
  if (name == "benzene-huckel") {
    MatrixDocument doc;
    doc.n = 6;
    doc.parameter = "lambda";
    doc.entries = {
        {1, 2, {1}}, {1, 6, {0, 1}}, {2, 3, {0, 1}},
        {3, 4, {1}}, {4, 5, {0, 1}}, {5, 6, {1}},
    };
    return doc;
  }
  throw ValidationError("unknown builtin \"" + name + "\"; available: benzene-huckel");
}

std::vector<std::string> builtin_names() { return {"benzene-huckel"}; }

std::string document_digest(const MatrixDocument& document) {
  const std::string bytes = serialize_document(document);
  std::uint64_t hash = 14695981039346656037ull;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace paramspec
