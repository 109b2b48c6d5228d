#include "ctq/matrix_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ctq {

NonnegMatrix parse_matrix_text(const std::string &text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(tok, &pos);
      } catch (const std::exception &) {
        throw std::invalid_argument("bad matrix entry '" + tok + "'");
      }
      if (pos != tok.size() || v < 0 || v > std::numeric_limits<int>::max())
        throw std::invalid_argument("bad matrix entry '" + tok + "'");
      row.push_back(static_cast<int>(v));
    }
    if (!row.empty())
      rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw std::invalid_argument("empty matrix");
  NonnegMatrix a(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      a(i, j) = rows[i][j];
  }
  return a;
}

std::string format_matrix_text(const NonnegMatrix &a) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
  return os.str();
}

NonnegMatrix parse_matrix_json(const nlohmann::json &j) {
  const auto &entries = j.is_array() ? j : j.at("entries");
  auto rows = entries.get<std::vector<std::vector<long>>>();
  std::size_t k = rows.size();
  std::size_t p = k ? rows[0].size() : 0;
  if (j.is_object()) {
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != k)
      throw std::invalid_argument("row count does not match entries");
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != p)
      throw std::invalid_argument("column count does not match entries");
  }
  NonnegMatrix a(k, p);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != p)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < p; ++c) {
      if (rows[i][c] < 0 || rows[i][c] > std::numeric_limits<int>::max())
        throw std::invalid_argument("matrix entry out of range");
      a(i, c) = static_cast<int>(rows[i][c]);
    }
  }
  return a;
}

nlohmann::json matrix_to_json(const NonnegMatrix &a) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::vector<int> row(a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      row[j] = a(i, j);
    entries.push_back(row);
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

NonnegMatrix parse_matrix(const std::string &text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
      throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
    }
    try {
      return parse_matrix_json(j);
    } catch (const nlohmann::json::exception &e) {
      throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
    }
  }
  return parse_matrix_text(text);
}

nlohmann::json tableau_to_json(const Tableau &t) { return t.rows(); }

nlohmann::json qpoly_to_json(const QPoly &p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto &c : p)
    a.push_back(c.str());
  return a;
}

} // namespace ctq
