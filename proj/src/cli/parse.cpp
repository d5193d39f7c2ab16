#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "normlab/cli.hpp"
#include "normlab/errors.hpp"

namespace normlab::cli {

namespace {

using nlohmann::json;

constexpr Exponent kMaxExponent = 100;

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw ParseError(source + ": " + (field.empty() ? "" : field + ": ") + what);
}

std::string trim_spaces(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::int64_t as_integer(const json& v, const std::string& source, const std::string& field) {
  if (!v.is_number_integer()) fail(source, field, "expected an integer");
  return v.get<std::int64_t>();
}

const json& array_field(const json& obj, const char* key, const std::string& source) {
  const json& v = obj.at(key);
  if (!v.is_array()) fail(source, key, "expected an array");
  return v;
}

RingDescriptor parse_ring(const json& doc, std::optional<std::size_t> default_dim, const std::string& source) {
  if (!doc.contains("ring")) {
    if (!default_dim) fail(source, "ring", "required when generators are given as monomial strings");
    return RingDescriptor::standard(*default_dim);
  }
  const json& r = doc["ring"];
  if (!r.is_object()) fail(source, "ring", "expected an object");
  if (!r.contains("variables")) fail(source, "ring.variables", "missing");
  const json& vars = r["variables"];
  if (!vars.is_array()) fail(source, "ring.variables", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string field = "ring.variables[" + std::to_string(i) + "]";
    if (!vars[i].is_string()) fail(source, field, "expected a string");
    const std::string name = vars[i].get<std::string>();
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())) ||
        !std::all_of(name.begin(), name.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; }))
      fail(source, field, "invalid variable name '" + name + "'");
    names.push_back(name);
  }
  std::vector<std::int64_t> weights;
  if (r.contains("weights")) {
    const json& w = r["weights"];
    if (!w.is_array()) fail(source, "ring.weights", "expected an array of integers");
    for (std::size_t i = 0; i < w.size(); ++i)
      weights.push_back(as_integer(w[i], source, "ring.weights[" + std::to_string(i) + "]"));
  }
  return RingDescriptor(std::move(names), std::move(weights));
}

void check_dimension(std::size_t d, const std::string& source) {
  if (d == 0) fail(source, "", "ring must have at least one variable");
  if (d > kMaxDimension)
    throw InputError(source + ": " + std::to_string(d) + " variables exceed the limit of " +
                     std::to_string(kMaxDimension));
}

ParsedInput finish(RingDescriptor ring, std::vector<ExponentVector> gens, const std::string& source) {
  ParsedInput out{MonomialIdeal(std::move(ring), gens), std::nullopt, {}};
  if (out.ideal.size() != gens.size()) {
    std::ostringstream os;
    os << "NonAntichainWarning: " << source << ": " << gens.size() - out.ideal.size()
       << " redundant generator(s) removed; using " << out.ideal;
    out.warnings.push_back(os.str());
  }
  return out;
}

ParsedInput parse_clutter(const json& doc, const std::string& source) {
  const json& v = doc["vertices"];
  const std::int64_t d = as_integer(v, source, "vertices");
  if (d < 0) fail(source, "vertices", "must be nonnegative");
  check_dimension(static_cast<std::size_t>(d), source);
  if (!doc.contains("edges")) fail(source, "edges", "missing");
  const json& edges = array_field(doc, "edges", source);
  std::vector<std::vector<std::size_t>> list;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const std::string field = "edges[" + std::to_string(j) + "]";
    if (!edges[j].is_array()) fail(source, field, "expected an array of vertices");
    std::vector<std::size_t> e;
    for (std::size_t k = 0; k < edges[j].size(); ++k) {
      const std::int64_t x = as_integer(edges[j][k], source, field + "[" + std::to_string(k) + "]");
      if (x < 1 || x > d)
        fail(source, field + "[" + std::to_string(k) + "]", "vertex out of range 1.." + std::to_string(d));
      e.push_back(static_cast<std::size_t>(x));
    }
    list.push_back(std::move(e));
  }
  Clutter C(static_cast<std::size_t>(d), std::move(list));
  const RingDescriptor ring = parse_ring(doc, static_cast<std::size_t>(d), source);
  if (ring.dimension() != static_cast<std::size_t>(d))
    throw DimensionMismatch(source + ": ring has " + std::to_string(ring.dimension()) +
                            " variables but the clutter has " + std::to_string(d) + " vertices");
  if (!ring.is_standard()) throw InputError(source + ": clutter rings use the standard grading");
  const MonomialIdeal I = edge_ideal(C);
  ParsedInput out{MonomialIdeal(ring, I.generators()), std::move(C), {}};
  return out;
}

}  // namespace

ExponentVector parse_monomial(const RingDescriptor& ring, const std::string& text) {
  ExponentVector a(ring.dimension());
  const std::string t = trim_spaces(text);
  if (t == "1") return a;
  if (t.empty()) throw ParseError("empty monomial");
  std::stringstream ss(t);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor = trim_spaces(factor);
    if (factor.empty()) throw ParseError("empty factor in monomial '" + text + "'");
    std::string name = factor;
    std::int64_t exp = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = trim_spaces(factor.substr(0, caret));
      const std::string digits = trim_spaces(factor.substr(caret + 1));
      if (digits.empty() || digits.size() > 6 ||
          !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("exponent in '" + factor + "' is not a positive integer");
      exp = std::stoll(digits);
      if (exp < 1) throw ParseError("exponent in '" + factor + "' is not a positive integer");
    }
    const auto& names = ring.names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown variable '" + name + "' in monomial '" + text + "'");
    a[static_cast<std::size_t>(it - names.begin())] += exp;
  }
  return a;
}

ParsedInput parse_input_text(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError(source + ":" + std::to_string(line) + ": invalid JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) fail(source, "", "top level must be an object");

  if (doc.contains("vertices")) return parse_clutter(doc, source);

  const bool has_gens = doc.contains("generators");
  const bool has_monos = doc.contains("monomials");
  if (has_gens == has_monos) fail(source, "", "expected exactly one of \"generators\", \"monomials\" or a clutter");

  std::vector<ExponentVector> gens;
  if (has_gens) {
    const json& arr = array_field(doc, "generators", source);
    std::optional<std::size_t> width;
    std::vector<std::vector<Exponent>> rows;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = "generators[" + std::to_string(i) + "]";
      if (!arr[i].is_array()) fail(source, field, "expected an array of exponents");
      std::vector<Exponent> row;
      for (std::size_t j = 0; j < arr[i].size(); ++j) {
        const std::string f = field + "[" + std::to_string(j) + "]";
        const std::int64_t x = as_integer(arr[i][j], source, f);
        if (x < 0) fail(source, f, "exponents must be nonnegative");
        if (x > kMaxExponent) fail(source, f, "exponent exceeds " + std::to_string(kMaxExponent));
        row.push_back(x);
      }
      if (width && *width != row.size())
        throw DimensionMismatch(source + ": " + field + " has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(*width));
      width = row.size();
      rows.push_back(std::move(row));
    }
    if (!width && !doc.contains("ring")) fail(source, "ring", "required for an empty generator list");
    const RingDescriptor ring = parse_ring(doc, width, source);
    check_dimension(ring.dimension(), source);
    if (width && *width != ring.dimension())
      throw DimensionMismatch(source + ": generators have " + std::to_string(*width) +
                              " entries but the ring has " + std::to_string(ring.dimension()) + " variables");
    for (auto& r : rows) gens.emplace_back(std::move(r));
    return finish(ring, std::move(gens), source);
  }

  const json& arr = array_field(doc, "monomials", source);
  const RingDescriptor ring = parse_ring(doc, std::nullopt, source);
  check_dimension(ring.dimension(), source);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = "monomials[" + std::to_string(i) + "]";
    if (!arr[i].is_string()) fail(source, field, "expected a string");
    try {
      gens.push_back(parse_monomial(ring, arr[i].get<std::string>()));
    } catch (const ParseError& e) {
      fail(source, field, e.what());
    }
    for (Exponent x : gens.back())
      if (x > kMaxExponent) fail(source, field, "exponent exceeds " + std::to_string(kMaxExponent));
  }
  return finish(ring, std::move(gens), source);
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input_text(ss.str(), path);
}

}  // namespace normlab::cli
