#include "stellar/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "stellar/errors.hpp"

namespace stellar {

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("missing array '") + key + "'");
  std::vector<double> out;
  for (const auto& x : j.at(key)) {
    if (!x.is_number()) throw ParseError(std::string("non-numeric entry in '") + key + "'");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

DickeVector parse_dicke_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw ParseError("missing integer 'n'");
  const auto n = j.at("n").get<long long>();
  if (n < 1) throw ParseError("'n' must be positive");
  const auto re = number_array(j, "re");
  const auto im = number_array(j, "im");
  if (static_cast<long long>(re.size()) != n + 1 || static_cast<long long>(im.size()) != n + 1) {
    throw ParseError("'re' and 'im' must have n + 1 entries");
  }
  std::vector<Complex> c(re.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = {re[k], im[k]};
  try {
    return DickeVector(std::move(c));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_dicke_json(const DickeVector& d) {
  auto re = nlohmann::ordered_json::array();
  auto im = nlohmann::ordered_json::array();
  for (const auto& c : d.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  nlohmann::ordered_json j;
  j["n"] = d.n_qubits();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump() + "\n";
}

MajoranaSet parse_majorana_text(std::string_view text) {
  std::vector<BlochPoint> pts;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view line = text.substr(pos, next - pos);
    pos = next + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    double vals[2];
    int count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (count == 2) throw ParseError("expected 'theta phi'", line_no);
      const auto res = std::from_chars(line.data() + i, line.data() + j, vals[count]);
      if (res.ec != std::errc() || res.ptr != line.data() + j || !std::isfinite(vals[count])) {
        throw ParseError("malformed number '" + std::string(line.substr(i, j - i)) + "'", line_no);
      }
      ++count;
      i = j;
    }
    if (count == 0) continue;
    if (count != 2) throw ParseError("expected 'theta phi'", line_no);
    pts.emplace_back(vals[0], vals[1]);
  }
  if (pts.empty()) throw ParseError("no points", line_no + 1);
  return MajoranaSet(std::move(pts));
}

std::string format_majorana_text(const MajoranaSet& m) {
  std::string out;
  for (const auto& p : m.points()) out += format_double(p.theta()) + " " + format_double(p.phi()) + "\n";
  return out;
}

std::string format_entanglement_json(const EntanglementResult& r) {
  nlohmann::ordered_json j;
  j["e_g"] = r.e_g;
  j["overlap_sq"] = r.overlap_sq;
  auto& arr = j["maximizers"] = nlohmann::ordered_json::array();
  for (const auto& p : r.maximizers) arr.push_back({{"theta", p.theta()}, {"phi", p.phi()}});
  return j.dump(2) + "\n";
}

}  // namespace stellar
