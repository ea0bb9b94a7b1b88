#include "asymcone/arrangement.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "asymcone/errors.hpp"
#include "asymcone/linalg.hpp"

namespace asymcone {

namespace {

int leading_index(const std::vector<Int>& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return static_cast<int>(k);
  return static_cast<int>(v.size());
}

// Clears denominators and reduces to a primitive integer vector with
// positive leading entry.
std::vector<Int> normalize_form(const std::vector<Rat>& v) {
  Int den_lcm = 1;
  for (const Rat& x : v)
    den_lcm = boost::multiprecision::lcm(den_lcm,
                                         boost::multiprecision::denominator(x));
  std::vector<Int> w(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    w[k] = boost::multiprecision::numerator(v[k]) *
           (den_lcm / boost::multiprecision::denominator(v[k]));
  }
  make_primitive(w);
  return w;
}

}  // namespace

bool form_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  int la = leading_index(a);
  int lb = leading_index(b);
  if (la != lb) return la < lb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Arrangement canonicalize(const std::vector<RawForm>& raw, int dim) {
  if (dim < 1) throw DimensionMismatch("ambient dimension must be >= 1");
  if (raw.empty())
    throw EmptyArrangement("an arrangement needs at least one form");

  std::map<std::vector<Int>, Int> merged;
  for (const auto& [coeffs, mult] : raw) {
    if (static_cast<int>(coeffs.size()) != dim)
      throw DimensionMismatch("form has " + std::to_string(coeffs.size()) +
                              " coefficients, expected " + std::to_string(dim));
    if (mult < 1)
      throw NonpositiveMultiplicity("multiplicity must be >= 1, got " +
                                    mult.str());
    std::vector<Int> w = normalize_form(coeffs);
    bool zero = true;
    for (const Int& x : w)
      if (!x.is_zero()) {
        zero = false;
        break;
      }
    if (zero) throw ZeroForm("zero vector is not a linear form");
    merged[w] += mult;
  }

  Arrangement a;
  a.dim = dim;
  a.forms.reserve(merged.size());
  for (auto& [coeffs, mult] : merged)
    a.forms.push_back(LinearForm{coeffs, mult});
  std::sort(a.forms.begin(), a.forms.end(),
            [](const LinearForm& x, const LinearForm& y) {
              return form_less(x.coeffs, y.coeffs);
            });
  return a;
}

namespace {

using nlohmann::json;

std::pair<int, int> line_col(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Arrangement parse_json_arrangement(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("JSON syntax error at line " + std::to_string(line) +
                     ", column " + std::to_string(col) + ": " + e.what());
  }

  auto fail = [](const std::string& where, const std::string& what) {
    throw ParseError("at " + where + ": " + what);
  };

  if (!doc.is_object()) fail("$", "expected a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    fail("dim", "expected an integer");
  int dim = doc["dim"].get<int>();
  if (!doc.contains("forms") || !doc["forms"].is_array())
    fail("forms", "expected an array");

  std::vector<RawForm> raw;
  const auto& forms = doc["forms"];
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::string where = "forms[" + std::to_string(i) + "]";
    const auto& f = forms[i];
    if (!f.is_object()) fail(where, "expected an object");
    if (!f.contains("coeffs") || !f["coeffs"].is_array())
      fail(where + ".coeffs", "expected an array of rational strings");
    std::vector<Rat> coeffs;
    const auto& cs = f["coeffs"];
    for (std::size_t j = 0; j < cs.size(); ++j) {
      std::string cw = where + ".coeffs[" + std::to_string(j) + "]";
      if (!cs[j].is_string()) fail(cw, "expected a rational as a string");
      try {
        coeffs.push_back(parse_rational(cs[j].get<std::string>()));
      } catch (const ParseError& e) {
        fail(cw, e.what());
      }
    }
    Int mult = 1;
    if (f.contains("mult")) {
      if (!f["mult"].is_number_integer())
        fail(where + ".mult", "expected an integer");
      mult = f["mult"].get<std::int64_t>();
    }
    raw.emplace_back(std::move(coeffs), mult);
  }
  return canonicalize(raw, dim);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, p - start));
    start = p + 1;
  }
}

long parse_param(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("bad builtin parameter for ") + what + ": '" +
                     s + "'");
  return std::stol(s);
}

}  // namespace

Arrangement builtin_arrangement(std::string_view name) {
  auto parts = split(name, ':');
  const std::string& family = parts[0];
  std::vector<RawForm> raw;

  if (family == "boolean") {
    if (parts.size() != 2) throw ParseError("usage: boolean:d");
    long d = parse_param(parts[1], "boolean");
    if (d < 1) throw ParseError("boolean:d needs d >= 1");
    for (long i = 0; i < d; ++i) {
      std::vector<Rat> v(d, 0);
      v[i] = 1;
      raw.emplace_back(std::move(v), 1);
    }
    return canonicalize(raw, static_cast<int>(d));
  }
  if (family == "braid") {
    if (parts.size() != 2) throw ParseError("usage: braid:d");
    long d = parse_param(parts[1], "braid");
    if (d < 2) throw ParseError("braid:d needs d >= 2");
    for (long i = 0; i < d; ++i)
      for (long j = i + 1; j < d; ++j) {
        std::vector<Rat> v(d, 0);
        v[i] = 1;
        v[j] = -1;
        raw.emplace_back(std::move(v), 1);
      }
    return canonicalize(raw, static_cast<int>(d));
  }
  if (family == "generic") {
    if (parts.size() != 3) throw ParseError("usage: generic:d:m");
    long d = parse_param(parts[1], "generic");
    long m = parse_param(parts[2], "generic");
    if (d < 1 || m < 1) throw ParseError("generic:d:m needs d,m >= 1");
    for (long i = 1; i <= m; ++i) {
      std::vector<Rat> v(d);
      Int p = 1;
      for (long j = 0; j < d; ++j) {
        v[j] = Rat(p);
        p *= i;
      }
      raw.emplace_back(std::move(v), 1);
    }
    return canonicalize(raw, static_cast<int>(d));
  }
  if (family == "random") {
    if (parts.size() != 4) throw ParseError("usage: random:d:n:seed");
    long d = parse_param(parts[1], "random");
    long n = parse_param(parts[2], "random");
    long seed = parse_param(parts[3], "random");
    if (d < 1 || n < 1) throw ParseError("random:d:n:seed needs d,n >= 1");
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (long i = 0; i < n; ++i) {
      std::vector<Rat> v(d);
      bool zero = true;
      do {
        zero = true;
        for (long j = 0; j < d; ++j) {
          int c = coeff(rng);
          v[j] = c;
          if (c != 0) zero = false;
        }
      } while (zero);
      raw.emplace_back(std::move(v), 1);
    }
    return canonicalize(raw, static_cast<int>(d));
  }
  throw ParseError("unknown builtin family '" + family +
                   "' (expected boolean, braid, generic or random)");
}

Arrangement parse_arrangement(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    throw ParseError("empty input");
  if (text[b] == '{') return parse_json_arrangement(text);

  std::size_t e = text.find_last_not_of(" \t\r\n");
  std::string_view token = text.substr(b, e - b + 1);
  if (token.substr(0, 8) == "builtin:") token = token.substr(8);
  return builtin_arrangement(token);
}

}  // namespace asymcone
