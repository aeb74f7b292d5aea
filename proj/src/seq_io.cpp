#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pgt/error.hpp"
#include "pgt/seq.hpp"

namespace pgt {

namespace {

Value parse_decimal(std::string_view tok) {
  Value v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec == std::errc::result_out_of_range) throw Overflow("value does not fit 64 bits: " + std::string(tok));
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InvalidArgument("not a non-negative integer: '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Seq parse_sequence(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  Seq out;
  if (text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(std::string("malformed JSON sequence: ") + e.what());
    }
    if (!j.is_array()) throw InvalidArgument("sequence JSON must be an array");
    for (const auto& el : j) {
      if (el.is_number_unsigned())
        out.push_back(el.get<Value>());
      else if (el.is_number_integer())
        throw InvalidArgument("negative element in sequence");
      else if (el.is_string())
        out.push_back(parse_decimal(el.get<std::string>()));
      else
        throw InvalidArgument("sequence elements must be integers");
    }
    return out;
  }
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back(parse_decimal(std::string_view(line).substr(b, e - b + 1)));
  }
  return out;
}

Seq read_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

std::string to_json(std::span<const Value> s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += ']';
  return out;
}

}  // namespace pgt
