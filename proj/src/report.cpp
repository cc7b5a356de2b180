#include "cyclolab/report.hpp"

#include <sstream>

#include "cyclolab/errors.hpp"

namespace cyclolab {

Json make_document(const std::string& command) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  return doc;
}

std::string dec(const Int& v) { return v.get_str(); }

Json rat_json(const Rat& v) {
  Json j;
  j["num"] = v.get_num().get_str();
  j["den"] = v.get_den().get_str();
  return j;
}

Json cyclo_json(const CycloRational& v) {
  Json j;
  j["level"] = v.level();
  Json coeffs = Json::array();
  for (const Rat& c : v.coefficients()) coeffs.push_back(rat_json(c));
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json divisors_json(const std::vector<Int>& ds) {
  Json a = Json::array();
  for (const Int& d : ds) a.push_back(dec(d));
  return a;
}

std::string module_descriptor(const GModule& M) {
  std::ostringstream out;
  out << M.p << ':';
  for (long i = 0; i < M.rank(); ++i) {
    if (i) out << ',';
    out << M.e[static_cast<std::size_t>(i)];
  }
  out << ':';
  for (int i = 0; i < M.sigma.rows; ++i)
    for (int j = 0; j < M.sigma.cols; ++j) {
      if (i || j) out << ',';
      out << M.sigma(i, j).get_str();
    }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Int parse_int(const std::string& text) {
  if (text.empty()) throw argument_error("module descriptor: empty number");
  std::size_t at = text[0] == '-' ? 1 : 0;
  if (at == text.size()) throw argument_error("module descriptor: empty number");
  for (; at < text.size(); ++at)
    if (text[at] < '0' || text[at] > '9')
      throw argument_error("module descriptor: malformed number");
  return Int(text);
}

} // namespace

GModule parse_module_descriptor(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3)
    throw argument_error("module descriptor: want p:e1,e2,...:sigma entries");
  long p = to_long(parse_int(parts[0]));
  std::vector<long> e;
  if (!parts[1].empty())
    for (const std::string& s : split(parts[1], ',')) e.push_back(to_long(parse_int(s)));
  int r = static_cast<int>(e.size());
  IMat sigma(r, r);
  std::vector<std::string> entries;
  if (!parts[2].empty()) entries = split(parts[2], ',');
  if (static_cast<int>(entries.size()) != r * r)
    throw argument_error("module descriptor: sigma needs rank^2 entries");
  for (int i = 0; i < r * r; ++i) sigma(i / r, i % r) = parse_int(entries[static_cast<std::size_t>(i)]);
  return make_gmodule(p, std::move(e), std::move(sigma));
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += fields[i];
  }
  return out;
}

} // namespace cyclolab
