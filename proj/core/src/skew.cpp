#include "syt/skew.hpp"

#include <algorithm>
#include <cctype>

#include "syt/errors.hpp"

namespace syt {

SkewShape::SkewShape(Partition outer, Partition inner)
    : SkewShape(std::move(outer), std::move(inner), 0) {}

SkewShape::SkewShape(Partition outer, Partition inner, int d)
    : outer_(std::move(outer)), inner_(std::move(inner)), d_(d) {
  if (d_ == 0) d_ = std::max(outer_.length(), 1);
  if (!outer_.contains(inner_))
    fail(errc::inner_not_contained, "skew shape: inner not contained in outer");
  if (outer_.length() > d_) fail(errc::d_too_small, "skew shape: d < number of rows of outer");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= outer_.length(); ++i)
    for (long j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
      out.push_back(Cell{i, static_cast<int>(j)});
  return out;
}

std::string SkewShape::str() const {
  std::string s = outer_.str();
  if (!inner_.empty()) s += "/" + inner_.str();
  return s;
}

namespace {

std::vector<long> parse_int_list(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') fail(errc::malformed_syntax, "unbalanced brackets in: " + s);
    body = body.substr(1, body.size() - 2);
  }
  std::vector<long> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(errc::malformed_syntax, "bad integer '" + tok + "' in: " + s);
    out.push_back(std::stol(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SkewShape parse_shape(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;

  int d = 0;
  if (auto pos = s.find("d="); pos != std::string::npos) {
    std::string num = s.substr(pos + 2);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(errc::malformed_syntax, "bad d= suffix in: " + text);
    d = std::stoi(num);
    if (d <= 0) fail(errc::malformed_syntax, "d must be positive in: " + text);
    s = s.substr(0, pos);
    while (!s.empty() && (s.back() == ',' || s.back() == ';')) s.pop_back();
  }
  if (s.empty()) fail(errc::malformed_syntax, "empty shape");

  std::string lhs = s, rhs;
  if (auto pos = s.find('/'); pos != std::string::npos) {
    lhs = s.substr(0, pos);
    rhs = s.substr(pos + 1);
    if (rhs.empty()) fail(errc::malformed_syntax, "missing inner partition in: " + text);
  }
  Partition outer{parse_int_list(lhs)};
  Partition inner = rhs.empty() ? Partition{} : Partition{parse_int_list(rhs)};
  return d > 0 ? SkewShape(std::move(outer), std::move(inner), d)
               : SkewShape(std::move(outer), std::move(inner));
}

}  // namespace syt
