#include "reebsym/srf.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

int to_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
    fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

SrfDocument parse_srf(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string_view>>> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto tokens = tokens_of(text.substr(pos, end - pos));
    if (!tokens.empty()) lines.emplace_back(number, std::move(tokens));
    pos = end + 1;
  }
  std::size_t k = 0;
  auto next = [&](const char* what) -> const std::pair<int, std::vector<std::string_view>>& {
    if (k >= lines.size()) fail(number, std::string("unexpected end of file, expected ") + what);
    return lines[k++];
  };

  const auto& header = next("header");
  if (header.second.size() != 2 || header.second[0] != "SRF" || header.second[1] != "1")
    fail(header.first, "expected header 'SRF 1'");

  SrfDocument doc;
  const auto& vline = next("'vertices <n>'");
  if (vline.second.size() != 2 || vline.second[0] != "vertices") fail(vline.first, "expected 'vertices <n>'");
  const int n = to_int(vline.second[1], vline.first);
  for (int i = 0; i < n; ++i) {
    const auto& l = next("a vertex value");
    if (l.second.size() != 1) fail(l.first, "expected one decimal value");
    auto d = Decimal::try_parse(l.second[0]);
    if (!d) fail(l.first, "not a decimal literal: '" + std::string(l.second[0]) + "'");
    doc.values.push_back(*d);
  }
  const auto& tline = next("'triangles <m>'");
  if (tline.second.size() != 2 || tline.second[0] != "triangles") fail(tline.first, "expected 'triangles <m>'");
  const int m = to_int(tline.second[1], tline.first);
  for (int i = 0; i < m; ++i) {
    const auto& l = next("a triangle");
    if (l.second.size() != 3) fail(l.first, "expected three vertex indices");
    Triangle t{};
    for (int c = 0; c < 3; ++c) {
      t[static_cast<std::size_t>(c)] = to_int(l.second[static_cast<std::size_t>(c)], l.first);
      if (t[static_cast<std::size_t>(c)] >= n) fail(l.first, "vertex index out of range");
    }
    doc.triangles.push_back(t);
  }
  if (k != lines.size()) fail(lines[k].first, "trailing content");
  return doc;
}

SrfDocument read_srf_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_srf(buffer.str());
}

std::string write_srf(const SrfDocument& doc) {
  std::ostringstream out;
  out << "SRF 1\n";
  out << "vertices " << doc.values.size() << '\n';
  for (const auto& v : doc.values) out << v.str() << '\n';
  out << "triangles " << doc.triangles.size() << '\n';
  for (const auto& t : doc.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

FieldSurface to_field_surface(const SrfDocument& doc) {
  FieldSurface s{SurfaceComplex::build(doc.triangles, doc.vertex_count()), ScalarField(doc.values)};
  return s;
}

}  // namespace reebsym
