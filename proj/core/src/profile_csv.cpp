#include <charconv>
#include <sstream>

#include "morselab/divergence.hpp"
#include "morselab/errors.hpp"

namespace morselab {

namespace {

constexpr std::string_view kProfileHeader =
    "r,n,rho,value,pairs_examined,capped,witness_x,witness_y";

std::string value_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "inf";
}

template <class Int>
Int parse_integer(std::string_view field, std::size_t line) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + std::string(field) + "'");
  }
  return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

std::string emit_profile_csv(const Presentation& p, const DivergenceProfile& profile) {
  std::ostringstream out;
  out << kProfileHeader << '\n';
  for (const auto& row : profile.rows) {
    out << row.r << ',' << profile.n << ',' << profile.rho.str() << ',' << value_text(row.value)
        << ',' << row.pairs_examined << ',' << (row.capped ? "true" : "false") << ','
        << (row.witness_x ? format_word(p, *row.witness_x) : "") << ','
        << (row.witness_y ? format_word(p, *row.witness_y) : "") << '\n';
  }
  return out.str();
}

DivergenceProfile parse_profile_csv(const Presentation& p, std::string_view text) {
  DivergenceProfile profile;
  std::size_t line_no = 0;
  bool header_seen = false;
  bool params_seen = false;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kProfileHeader) throw ParseError("unexpected profile CSV header");
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 8) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 8 fields, got " +
                       std::to_string(f.size()));
    }
    SigmaRow row;
    row.r = parse_integer<int>(f[0], line_no);
    const int n = parse_integer<int>(f[1], line_no);
    const Rational rho = Rational::parse(f[2]);
    if (params_seen && (n != profile.n || rho != profile.rho)) {
      throw ParseError("line " + std::to_string(line_no) + ": rows disagree on n or rho");
    }
    profile.n = n;
    profile.rho = rho;
    params_seen = true;
    if (f[3] != "inf") row.value = parse_integer<std::int64_t>(f[3], line_no);
    row.pairs_examined = parse_integer<std::size_t>(f[4], line_no);
    if (f[5] == "true" || f[5] == "1") {
      row.capped = true;
    } else if (f[5] != "false" && f[5] != "0") {
      throw ParseError("line " + std::to_string(line_no) + ": bad capped flag");
    }
    if (!f[6].empty()) row.witness_x = parse_normal_word(p, f[6]);
    if (!f[7].empty()) row.witness_y = parse_normal_word(p, f[7]);
    profile.rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError("empty profile CSV");
  return profile;
}

std::string emit_geodesic_csv(const std::vector<GeodesicRow>& rows) {
  std::ostringstream out;
  out << "r,value\n";
  for (const auto& row : rows) out << row.r << ',' << value_text(row.value) << '\n';
  return out.str();
}

}  // namespace morselab
