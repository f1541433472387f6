#include "realbezout/poly_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace rbz {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

bool is_blank(std::string_view line) {
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

}  // namespace

std::vector<Polynomial> parse_system(std::string_view text) {
  std::vector<Polynomial> system;
  std::optional<std::size_t> nvars;
  std::optional<Polynomial> current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (is_blank(line)) {
      if (current) {
        system.push_back(std::move(*current));
        current.reset();
      }
      if (end == text.size()) break;
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
      if (is_blank(line)) {
        if (end == text.size()) break;
        continue;
      }
    }
    auto fields = split_ws(line);
    const std::size_t k = fields.size() - 1;
    if (nvars && *nvars != k) {
      throw ParseError(line_no, "expected " + std::to_string(*nvars) + " exponents, found " + std::to_string(k));
    }
    nvars = k;
    Rational coef;
    try {
      coef = parse_rational(fields[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    Exponents exps(k);
    for (std::size_t i = 0; i < k; ++i) {
      auto f = fields[i + 1];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), exps[i]);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw ParseError(line_no, "bad exponent '" + std::string(f) + "'");
      }
    }
    if (!current) current.emplace(k);
    current->add_term(exps, coef);
    if (end == text.size()) break;
  }
  if (current) system.push_back(std::move(*current));
  return system;
}

Polynomial parse_polynomial(std::string_view text) {
  auto system = parse_system(text);
  if (system.size() != 1) {
    throw ParseError(1, "expected one polynomial, found " + std::to_string(system.size()));
  }
  return std::move(system.front());
}

std::string format_polynomial(const Polynomial& p) {
  std::ostringstream os;
  auto write_line = [&](const Rational& c, const Exponents& e) {
    os << c.get_str();
    for (auto x : e) os << ' ' << x;
    os << '\n';
  };
  if (p.is_zero()) {
    write_line(Rational(0), Exponents(p.nvars(), 0));
  } else {
    for (const auto& [e, c] : p.terms()) write_line(c, e);
  }
  return os.str();
}

std::string format_system(const std::vector<Polynomial>& system) {
  std::string out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i > 0) out += '\n';
    out += format_polynomial(system[i]);
  }
  return out;
}

std::vector<Polynomial> read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

}  // namespace rbz
