#include "finbool/json_io.hpp"

#include "finbool/errors.hpp"

namespace finbool {

namespace {

std::size_t require_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw input_error(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Mask mask_from_hex(const std::string& hex, std::size_t ground) {
  Mask m(ground);
  // Standard numeric hex literal; bit i of the value marks element i.
  for (std::size_t k = 2; k < hex.size(); ++k) {
    char c = hex[hex.size() - 1 - (k - 2)];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      v = static_cast<unsigned>(c - 'A' + 10);
    else
      throw input_error("bad hex digit '" + std::string(1, c) + "' in mask");
    for (unsigned b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      std::size_t bit = (k - 2) * 4 + b;
      if (bit >= ground)
        throw input_error("hex mask bit " + std::to_string(bit) +
                          " exceeds ground size " + std::to_string(ground));
      m.set(bit);
    }
  }
  return m;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw input_error("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                      e.what());
  }
}

Json mask_to_json(const Mask& m) {
  Json arr = Json::array();
  for (std::size_t e : m.elements()) arr.push_back(e);
  return arr;
}

Mask mask_from_json(const Json& j, std::size_t ground) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.size() < 2 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
      throw input_error("mask string must start with 0x");
    return mask_from_hex(s, ground);
  }
  if (!j.is_array()) throw input_error("mask must be an index array or hex string");
  Mask m(ground);
  for (const Json& e : j) {
    std::size_t idx = require_size(e, "mask element");
    if (idx >= ground)
      throw input_error("mask element " + std::to_string(idx) +
                        " exceeds ground size " + std::to_string(ground));
    m.set(idx);
  }
  return m;
}

Json family_to_json(const SetFamily& f) {
  Json sets = Json::array();
  for (const Mask& m : f.members) sets.push_back(mask_to_json(m));
  return Json{{"ground", f.ground}, {"sets", std::move(sets)}};
}

SetFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("sets"))
    throw input_error("family needs \"ground\" and \"sets\"");
  std::size_t ground = require_size(j["ground"], "ground");
  if (ground == 0) throw input_error("ground size must be positive");
  if (!j["sets"].is_array()) throw input_error("\"sets\" must be an array");
  std::vector<Mask> members;
  for (const Json& s : j["sets"]) members.push_back(mask_from_json(s, ground));
  return SetFamily(ground, std::move(members));
}

Json patterns_to_json(const PatternFamily& c) {
  Json pats = Json::array();
  for (const Mask& p : c.patterns) {
    std::string s(c.coords, '0');
    for (std::size_t i = 0; i < c.coords; ++i)
      if (p.test(i)) s[i] = '1';
    pats.push_back(std::move(s));
  }
  return Json{{"coords", c.coords}, {"patterns", std::move(pats)}};
}

PatternFamily patterns_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j.contains("patterns"))
    throw input_error("pattern family needs \"coords\" and \"patterns\"");
  std::size_t coords = require_size(j["coords"], "coords");
  if (!j["patterns"].is_array()) throw input_error("\"patterns\" must be an array");
  std::vector<Mask> pats;
  for (const Json& e : j["patterns"]) {
    if (!e.is_string()) throw input_error("pattern must be a 0/1 string");
    const std::string s = e.get<std::string>();
    if (s.size() != coords)
      throw input_error("pattern \"" + s + "\" length differs from coords");
    Mask p(coords);
    for (std::size_t i = 0; i < coords; ++i) {
      if (s[i] == '1')
        p.set(i);
      else if (s[i] != '0')
        throw input_error("pattern \"" + s + "\" has a character besides 0/1");
    }
    pats.push_back(std::move(p));
  }
  return PatternFamily(coords, std::move(pats));
}

Json rational_to_json(const Rational& r) { return rational_str(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw input_error("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json measure_to_json(const Measure& mu) {
  Json weights = Json::array();
  for (const Rational& w : mu.weights()) weights.push_back(rational_to_json(w));
  return Json{
      {"algebra", family_to_json(SetFamily(mu.algebra().ground(), mu.algebra().atoms()))},
      {"weights", std::move(weights)}};
}

Measure measure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("weights"))
    throw input_error("measure needs \"algebra\" and \"weights\"");
  SetFamily atoms = family_from_json(j["algebra"]);
  if (!j["weights"].is_array()) throw input_error("\"weights\" must be an array");
  std::vector<Rational> weights;
  for (const Json& w : j["weights"]) weights.push_back(rational_from_json(w));
  return Measure(Algebra::from_atoms(atoms.ground, std::move(atoms.members)),
                 std::move(weights));
}

Json cantor_params_to_json(const CantorParams& p) {
  Json phi = Json::array();
  for (std::size_t k = 0; k < p.phi.size(); ++k) {
    if (p.phi[k] != 3 * k) phi.push_back(Json::array({3 * k, p.phi[k]}));
  }
  std::string bits(p.m, '0');
  for (std::uint32_t i = 0; i < p.m; ++i)
    if (p.x.test(i)) bits[i] = '1';
  return Json{{"m", p.m}, {"phi", std::move(phi)}, {"x", std::move(bits)}};
}

CantorParams cantor_params_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m"))
    throw input_error("cylinder parameters need \"m\"");
  std::size_t m = require_size(j["m"], "m");
  if (m == 0 || m > (std::size_t{1} << 20))
    throw input_error("depth m out of range");
  std::vector<std::uint32_t> anchors = anchor_positions(static_cast<std::uint32_t>(m));
  std::vector<std::uint32_t> phi(anchors.size());
  for (std::size_t k = 0; k < anchors.size(); ++k) phi[k] = anchors[k];
  if (j.contains("phi")) {
    if (!j["phi"].is_array()) throw input_error("\"phi\" must be an array of pairs");
    for (const Json& pair : j["phi"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw input_error("\"phi\" entries must be [anchor, image] pairs");
      std::size_t from = require_size(pair[0], "phi anchor");
      std::size_t to = require_size(pair[1], "phi image");
      if (from % 3 != 0 || from >= m)
        throw input_error("phi anchor " + std::to_string(from) + " is not an anchor");
      phi[from / 3] = static_cast<std::uint32_t>(to);
    }
  }
  Mask x(m);
  if (j.contains("x")) {
    if (!j["x"].is_string()) throw input_error("\"x\" must be a 0/1 string");
    const std::string bits = j["x"].get<std::string>();
    if (bits.size() > m) throw input_error("\"x\" longer than depth m");
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        x.set(i);
      else if (bits[i] != '0')
        throw input_error("\"x\" has a character besides 0/1");
    }
  }
  return CantorParams(static_cast<std::uint32_t>(m), std::move(phi), std::move(x));
}

Json cylinder_to_json(const Cylinder& c) {
  Json dom = Json::array();
  std::string val;
  for (std::size_t pos : c.domain.elements()) {
    dom.push_back(pos);
    val += c.values.test(pos) ? '1' : '0';
  }
  return Json{{"dom", std::move(dom)}, {"val", std::move(val)}};
}

Cylinder cylinder_from_json(const Json& j, std::uint32_t m) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("val"))
    throw input_error("cylinder needs \"dom\" and \"val\"");
  if (!j["dom"].is_array() || !j["val"].is_string())
    throw input_error("cylinder \"dom\" must be an array and \"val\" a string");
  Cylinder c{m, Mask(m), Mask(m)};
  const std::string val = j["val"].get<std::string>();
  if (val.size() != j["dom"].size())
    throw input_error("cylinder \"val\" length differs from \"dom\"");
  std::size_t k = 0;
  for (const Json& e : j["dom"]) {
    std::size_t pos = require_size(e, "cylinder position");
    if (pos >= m)
      throw input_error("cylinder position " + std::to_string(pos) +
                        " exceeds depth " + std::to_string(m));
    if (c.domain.test(pos)) throw input_error("cylinder repeats a position");
    c.domain.set(pos);
    if (val[k] == '1')
      c.values.set(pos);
    else if (val[k] != '0')
      throw input_error("cylinder \"val\" has a character besides 0/1");
    ++k;
  }
  return c;
}

}  // namespace finbool
