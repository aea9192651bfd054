#include "zgu/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>

#include "zgu/error.hpp"

namespace zgu {

namespace {

[[noreturn]] void parse_error(const std::string &what) { throw Error("ParseError", what); }

const Json &field(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object() || !j.contains(key))
    parse_error(where + ": missing \"" + key + "\"");
  return j.at(key);
}

long as_long(const Json &j, const std::string &where) {
  if (!j.is_number_integer())
    parse_error(where + ": expected an integer");
  return j.get<long>();
}

std::optional<std::filesystem::path> &data_override() {
  static std::optional<std::filesystem::path> dir;
  return dir;
}

} // namespace

PermGroup group_from_json(const Json &j) {
  const long degree = as_long(field(j, "degree", "group"), "group.degree");
  if (degree < 1 || degree > kMaxDegree)
    throw Error("DegreeMismatch", "degree " + std::to_string(degree) + " outside 1.." +
                                      std::to_string(kMaxDegree));
  const Json &gens = field(j, "generators", "group");
  if (!gens.is_array())
    parse_error("group.generators: expected an array");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generator " + std::to_string(i);
    if (!gens[i].is_array())
      parse_error(where + ": expected an array of images");
    std::vector<int> images;
    for (const auto &x : gens[i]) {
      if (!x.is_number_integer())
        parse_error(where + ": non-integer image");
      images.push_back(x.get<int>());
    }
    if (static_cast<long>(images.size()) != degree)
      throw Error("DegreeMismatch", where + " has " + std::to_string(images.size()) +
                                        " images, expected " + std::to_string(degree));
    try {
      perms.push_back(Permutation::from_images(images));
    } catch (const Error &e) {
      parse_error(where + ": " + e.what());
    }
  }
  PermGroup g = PermGroup::enumerate(std::move(perms), static_cast<int>(degree));
  if (j.contains("name") && j["name"].is_string())
    g.set_name(j["name"].get<std::string>());
  return g;
}

Json group_to_json(const PermGroup &g) {
  Json gens = Json::array();
  for (const auto &p : g.generators())
    gens.push_back(p.images());
  return {{"name", g.name()}, {"degree", g.degree()}, {"generators", gens}};
}

Rational rational_from_json(const Json &j) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0 || r.get_den() == 0)
      parse_error("bad rational \"" + j.get<std::string>() + "\"");
    r.canonicalize();
    return r;
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    if (j[1].get<long>() == 0)
      parse_error("rational with zero denominator");
    return make_rational(j[0].get<long>(), j[1].get<long>());
  }
  parse_error("expected a rational, got " + j.dump());
}

Json rational_to_json(const Rational &r) {
  if (r.get_num().fits_slong_p() && r.get_den().fits_slong_p()) {
    if (is_integral(r))
      return r.get_num().get_si();
    return Json::array({r.get_num().get_si(), r.get_den().get_si()});
  }
  return r.get_str();
}

Cyclotomic cyclotomic_from_json(const Json &j) {
  if (!j.is_object())
    return Cyclotomic(rational_from_json(j));
  const long n = as_long(field(j, "conductor", "cyclotomic"), "cyclotomic.conductor");
  if (n < 1)
    parse_error("cyclotomic conductor must be positive");
  std::map<long, Rational> raw;
  const Json &coeffs = field(j, "coeffs", "cyclotomic");
  if (!coeffs.is_object())
    parse_error("cyclotomic.coeffs: expected an object");
  for (const auto &[k, v] : coeffs.items()) {
    long e = 0;
    try {
      std::size_t used = 0;
      e = std::stol(k, &used);
      if (used != k.size())
        throw std::invalid_argument(k);
    } catch (const std::exception &) {
      parse_error("cyclotomic exponent \"" + k + "\" is not an integer");
    }
    raw[e] += rational_from_json(v);
  }
  return Cyclotomic::normalize(n, raw);
}

Json cyclotomic_to_json(const Cyclotomic &c) {
  if (c.is_rational())
    return rational_to_json(c.as_rational());
  Json coeffs = Json::object();
  for (std::size_t k = 0; k < c.coeffs().size(); ++k)
    if (c.coeffs()[k] != 0)
      coeffs[std::to_string(k)] = rational_to_json(c.coeffs()[k]);
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

CharacterTable table_from_json(const Json &j) {
  CharacterTable t;
  if (j.contains("name") && j["name"].is_string())
    t.name = j["name"].get<std::string>();
  const long order = as_long(field(j, "group_order", "table"), "table.group_order");
  if (order < 1)
    parse_error("table.group_order must be positive");
  t.group_order = static_cast<std::size_t>(order);
  const Json &classes = field(j, "classes", "table");
  if (!classes.is_array())
    parse_error("table.classes: expected an array");
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::string where = "class " + std::to_string(c);
    ClassMeta m;
    const long size = as_long(field(classes[c], "size", where), where + ".size");
    if (size < 1)
      parse_error(where + ": size must be positive");
    m.size = static_cast<std::size_t>(size);
    m.element_order = as_long(field(classes[c], "order", where), where + ".order");
    if (classes[c].contains("name"))
      m.name = classes[c]["name"].get<std::string>();
    t.classes.push_back(std::move(m));
  }
  if (j.contains("power_maps")) {
    for (const auto &[k, v] : j["power_maps"].items()) {
      long s = 0;
      try {
        s = std::stol(k);
      } catch (const std::exception &) {
        parse_error("power map key \"" + k + "\" is not an integer");
      }
      std::vector<std::size_t> map;
      for (const auto &x : v) {
        const long c = as_long(x, "power map " + k);
        if (c < 0 || static_cast<std::size_t>(c) >= t.classes.size())
          parse_error("power map " + k + " refers to column " + std::to_string(c));
        map.push_back(static_cast<std::size_t>(c));
      }
      if (map.size() != t.classes.size())
        parse_error("power map " + k + " has the wrong length");
      t.power_maps[s] = std::move(map);
    }
  }
  const Json &chars = field(j, "characters", "table");
  if (!chars.is_array())
    parse_error("table.characters: expected an array");
  for (std::size_t r = 0; r < chars.size(); ++r) {
    std::vector<Cyclotomic> row;
    for (const auto &v : chars[r])
      row.push_back(cyclotomic_from_json(v));
    if (row.size() != t.classes.size())
      parse_error("character " + std::to_string(r) + " has " + std::to_string(row.size()) +
                  " values for " + std::to_string(t.classes.size()) + " classes");
    t.values.push_back(std::move(row));
  }
  if (j.contains("schur_indices")) {
    std::vector<int> s;
    for (const auto &x : j["schur_indices"])
      s.push_back(static_cast<int>(as_long(x, "schur_indices")));
    if (s.size() != t.values.size())
      parse_error("schur_indices has the wrong length");
    t.schur_indices = std::move(s);
  }
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    if (t.classes[c].name.empty())
      t.classes[c].name = "c" + std::to_string(c);
  return t;
}

Json table_to_json(const CharacterTable &t) {
  Json classes = Json::array();
  for (const auto &c : t.classes)
    classes.push_back({{"name", c.name}, {"size", c.size}, {"order", c.element_order}});
  Json maps = Json::object();
  for (const auto &[s, m] : t.power_maps)
    maps[std::to_string(s)] = m;
  Json chars = Json::array();
  for (const auto &row : t.values) {
    Json r = Json::array();
    for (const auto &v : row)
      r.push_back(cyclotomic_to_json(v));
    chars.push_back(r);
  }
  Json j = {{"name", t.name},     {"group_order", t.group_order}, {"classes", classes},
            {"power_maps", maps}, {"characters", chars}};
  if (t.schur_indices)
    j["schur_indices"] = *t.schur_indices;
  return j;
}

Json pav_to_json(const PAVector &pav, const ClassTable &classes) {
  Json j = Json::object();
  for (std::size_t c : pav.support())
    j[classes[c].name] = pav[c];
  return j;
}

PAVector pav_from_json(const Json &j, const ClassTable &classes) {
  if (!j.is_object())
    parse_error("partial augmentations: expected an object keyed by class name");
  PAVector pav(classes.size());
  for (const auto &[name, v] : j.items())
    pav.at(classes.class_by_name(name)) = as_long(v, "partial augmentation at " + name);
  return pav;
}

Json candidate_to_json(const TorsionUnitCandidate &cand, const ClassTable &classes) {
  Json j = Json::object();
  for (const auto &[d, pav] : cand.pav_by_divisor)
    j["u^" + std::to_string(d)] = pav_to_json(pav, classes);
  return j;
}

Json admissible_to_json(const AdmissibleSet &set, const ClassTable &classes) {
  Json sols = Json::array();
  for (const auto &c : set.candidates)
    sols.push_back(candidate_to_json(c, classes));
  return {{"order", set.order},
          {"box_bound", set.box_bound},
          {"complete", set.complete},
          {"galois_closed", set.galois_closed},
          {"solutions", sols}};
}

Json report_to_json(const ObstructionReport &r) {
  Json cert = Json::array();
  for (const auto &s : r.certificate) {
    Json inputs = Json::array();
    for (const auto &x : s.inputs)
      inputs.push_back(rational_to_json(x));
    cert.push_back({{"step", s.description},
                    {"value", {s.value.get_num().get_str(), s.value.get_den().get_str()}},
                    {"integral", s.integral},
                    {"formula", s.formula},
                    {"inputs", inputs}});
  }
  return {{"title", r.title},
          {"verdict", to_string(r.verdict)},
          {"certificate", cert},
          {"hypotheses", r.hypotheses},
          {"conclusion", r.conclusion}};
}

ObstructionReport report_from_json(const Json &j) {
  ObstructionReport r;
  r.title = j.value("title", "");
  r.verdict = parse_verdict(field(j, "verdict", "report").get<std::string>());
  for (const auto &s : field(j, "certificate", "report")) {
    CertificateStep step;
    step.description = field(s, "step", "certificate").get<std::string>();
    const Json &v = field(s, "value", "certificate");
    if (!v.is_array() || v.size() != 2)
      parse_error("certificate value must be [num, den]");
    step.value = Rational(Integer(v[0].get<std::string>()), Integer(v[1].get<std::string>()));
    step.value.canonicalize();
    step.integral = field(s, "integral", "certificate").get<bool>();
    step.formula = field(s, "formula", "certificate").get<std::string>();
    for (const auto &x : field(s, "inputs", "certificate"))
      step.inputs.push_back(rational_from_json(x));
    r.certificate.push_back(std::move(step));
  }
  if (j.contains("hypotheses"))
    r.hypotheses = j["hypotheses"].get<std::vector<std::string>>();
  r.conclusion = j.value("conclusion", "");
  return r;
}

Json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("ParseError", "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    throw Error("ParseError", path.string() + ": " + e.what());
  }
}

void set_data_dir(std::filesystem::path dir) { data_override() = std::move(dir); }

std::filesystem::path data_dir() {
  if (data_override())
    return *data_override();
#ifdef ZGU_DATA_DIR
  return ZGU_DATA_DIR;
#else
  return "data";
#endif
}

std::filesystem::path resolve_data(const std::string &name_or_path, const std::string &sub) {
  const std::filesystem::path p(name_or_path);
  if (std::filesystem::exists(p))
    return p;
  std::string key = name_or_path;
  for (auto &ch : key)
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  const auto bundled = data_dir() / sub / (key + ".json");
  if (std::filesystem::exists(bundled))
    return bundled;
  throw Error("ParseError", "no file or bundled " + sub + " entry named '" + name_or_path + "'");
}

} // namespace zgu
