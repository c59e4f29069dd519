#include "dlt/config.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace dlt {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    return s.substr(1, s.size() - 2);
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InvalidInputError("config line " + std::to_string(line) + ": " + msg);
}

double parse_real(const std::string& s, int line) {
  const std::string t = trim(s);
  if (t.empty()) fail(line, "empty number");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) fail(line, "malformed number '" + t + "'");
  return v;
}

// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i".
Complex parse_complex(const std::string& raw, int line) {
  std::string t;
  for (char c : trim(raw))
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) fail(line, "empty complex literal");
  if (t.back() != 'i') return {parse_real(t, line), 0.0};
  t.pop_back();  // strip the trailing 'i'
  // Find the sign separating real and imaginary parts; skip a leading sign
  // and exponent signs.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = t;
  } else {
    re_part = t.substr(0, split);
    im_part = t.substr(split);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {parse_real(re_part, line), parse_real(im_part, line)};
}

std::vector<Complex> parse_complex_list(const std::string& value, int line) {
  std::vector<Complex> out;
  std::stringstream ss(unquote(trim(value)));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item, line));
  if (out.empty()) fail(line, "empty list");
  return out;
}

}  // namespace

Command parse_command_name(const std::string& name) {
  if (name == "analyze") return Command::Analyze;
  if (name == "transform") return Command::Transform;
  if (name == "invert") return Command::Invert;
  if (name == "verify") return Command::Verify;
  if (name == "sweep") return Command::Sweep;
  throw InvalidInputError("unknown command '" + name + "'");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      section = s.substr(1, s.size() - 2);
      if (section != "model" && section != "grid" && section != "tolerances" &&
          section != "run")
        fail(line, "unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = unquote(trim(s.substr(eq + 1)));
    if (section.empty()) fail(line, "key outside any section");

    if (section == "model") {
      if (key == "num_coeffs") cfg.num_coeffs = parse_complex_list(value, line);
      else if (key == "den_coeffs") cfg.den_coeffs = parse_complex_list(value, line);
      else if (key == "den_roots") cfg.den_roots = parse_complex_list(value, line);
      else if (key == "poles") cfg.poles = parse_complex_list(value, line);
      else if (key == "residues") cfg.residues = parse_complex_list(value, line);
      else if (key == "strictness") {
        if (value == "strict") cfg.strictness = Strictness::Strict;
        else if (value == "relaxed") cfg.strictness = Strictness::Relaxed;
        else fail(line, "strictness must be strict or relaxed");
      } else fail(line, "unknown key '" + key + "' in [model]");
    } else if (section == "grid") {
      if (key == "s_min") cfg.grid.s_min = parse_real(value, line);
      else if (key == "s_max") cfg.grid.s_max = parse_real(value, line);
      else if (key == "points") cfg.grid.points = static_cast<int>(parse_real(value, line));
      else if (key == "spacing") {
        if (value == "log") cfg.grid.spacing = GridSpacing::Logarithmic;
        else if (value == "linear") cfg.grid.spacing = GridSpacing::Linear;
        else fail(line, "spacing must be log or linear");
      } else fail(line, "unknown key '" + key + "' in [grid]");
    } else if (section == "tolerances") {
      if (key == "transform_identity") cfg.tol.transform_identity = parse_real(value, line);
      else if (key == "inversion") cfg.tol.inversion = parse_real(value, line);
      else if (key == "realpart") cfg.tol.realpart = parse_real(value, line);
      else if (key == "residue_norm") cfg.tol.residue_norm = parse_real(value, line);
      else if (key == "quadrature") cfg.tol.quadrature = parse_real(value, line);
      else fail(line, "unknown key '" + key + "' in [tolerances]");
    } else {  // [run]
      if (key == "command") cfg.command = parse_command_name(value);
      else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_real(value, line));
      else if (key == "count") cfg.count = static_cast<int>(parse_real(value, line));
      else if (key == "out") cfg.out_path = value;
      else fail(line, "unknown key '" + key + "' in [run]");
    }
  }

  int sources = 0;
  if (!cfg.den_coeffs.empty()) ++sources;
  if (!cfg.den_roots.empty()) ++sources;
  if (!cfg.poles.empty()) ++sources;
  if (sources > 1)
    throw InvalidInputError(
        "config: conflicting model sources; give exactly one of den_coeffs, "
        "den_roots, poles");
  if (!cfg.poles.empty() && cfg.residues.size() != cfg.poles.size())
    throw InvalidInputError("config: poles and residues must pair up");
  if (cfg.poles.empty() && !cfg.residues.empty())
    throw InvalidInputError("config: residues given without poles");
  if (sources == 1 && cfg.poles.empty() && cfg.num_coeffs.empty())
    throw InvalidInputError("config: rational model needs num_coeffs");
  if (!cfg.num_coeffs.empty() && sources == 0)
    throw InvalidInputError("config: num_coeffs given without a denominator");
  cfg.has_model_source = sources == 1;
  return cfg;
}

ExponentialSum model_from_config(const RunConfig& config) {
  if (!config.has_model_source)
    throw InvalidInputError("config: no model source given");
  if (!config.poles.empty()) {
    std::vector<PoleResidue> terms;
    for (std::size_t i = 0; i < config.poles.size(); ++i)
      terms.push_back({config.poles[i], config.residues[i]});
    return ExponentialSum::from_terms(std::move(terms));
  }
  return build_model(rational_from_config(config));
}

bool has_rational_source(const RunConfig& config) {
  return !config.den_coeffs.empty() || !config.den_roots.empty();
}

RationalSpec rational_from_config(const RunConfig& config) {
  if (!has_rational_source(config))
    throw InvalidInputError("config: no rational model source given");
  Polynomial den = config.den_coeffs.empty()
                       ? Polynomial::from_roots(config.den_roots)
                       : Polynomial(config.den_coeffs);
  return {Polynomial(config.num_coeffs), std::move(den), config.strictness};
}

}  // namespace dlt
