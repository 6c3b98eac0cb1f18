#include "goldknot/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "goldknot/error.hpp"

namespace goldknot {

namespace {

std::vector<std::pair<std::string, Rational>> sorted_terms(const LinearCombination& c,
                                                           const Alphabet& alphabet) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [cls, q] : c.terms()) terms.emplace_back(alphabet.format(cls), q);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return terms;
}

std::string vector_string(const HomologyVector& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(h[i]);
  }
  return out + ")";
}

}  // namespace

Json to_json(const LinearCombination& c, const Alphabet& alphabet) {
  Json terms = Json::array();
  for (const auto& [cls, q] : sorted_terms(c, alphabet)) {
    terms.push_back(Json{{"coeff", to_string(q)}, {"class", cls}});
  }
  return Json{{"terms", terms}};
}

Json to_json(const HomologyCombination& c) {
  Json terms = Json::array();
  for (const auto& [h, q] : c) terms.push_back(Json{{"coeff", to_string(q)}, {"class", h}});
  return Json{{"terms", terms}};
}

Json to_json(const LaurentPolynomial& p) { return Json{{"polynomial", p.to_string()}}; }

Json to_json(const GroupPresentation& p) {
  const Alphabet alphabet = p.alphabet();
  Json relators = Json::array();
  for (const Word& r : p.relators) relators.push_back(alphabet.format(r));
  return Json{{"generators", p.generator_names}, {"relators", relators}};
}

Json to_json(const LeveledPresentation& p) {
  const Alphabet base = p.base_alphabet();
  Json relators = Json::array();
  for (const LeveledWord& r : p.schema) relators.push_back(format_leveled(r, base));
  Json out{{"meridian", p.meridian}, {"generators", p.base_names}, {"relators", relators}};
  if (p.pairs) {
    Json pairs = Json::array();
    for (const auto& [y, z] : *p.pairs) pairs.push_back(Json{{"y", base.format(y)}, {"z", base.format(z)}});
    out["pairs"] = pairs;
  }
  return out;
}

Json to_json(const TOrbitClass& o, const Alphabet& alphabet) {
  return Json{{"class", alphabet.format(o.representative)},
              {"window", Json::array({o.lo, o.hi})},
              {"finite", o.finite}};
}

std::string to_text(const LinearCombination& c, const Alphabet& alphabet) {
  if (c.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [cls, q] : sorted_terms(c, alphabet)) out << to_string(q) << ' ' << cls << '\n';
  return out.str();
}

std::string to_text(const HomologyCombination& c) {
  if (c.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [h, q] : c) out << to_string(q) << ' ' << vector_string(h) << '\n';
  return out.str();
}

std::string to_text(const GroupPresentation& p) {
  const Alphabet alphabet = p.alphabet();
  std::ostringstream out;
  out << "generators:";
  for (const auto& name : p.generator_names) out << ' ' << name;
  out << '\n';
  for (const Word& r : p.relators) out << "relator: " << alphabet.format(r) << '\n';
  return out.str();
}

std::string to_text(const LeveledPresentation& p) {
  const Alphabet base = p.base_alphabet();
  std::ostringstream out;
  out << "meridian: " << p.meridian << "\ngenerators:";
  for (const auto& name : p.base_names) out << ' ' << name << "(k)";
  out << '\n';
  for (const LeveledWord& r : p.schema) out << "relator (k = 0): " << format_leveled(r, base) << '\n';
  return out.str();
}

namespace {

std::vector<Word> read_images(const Json& table, const Alphabet& alphabet, const char* field) {
  if (!table.is_object()) fail(std::string("model field '") + field + "' must be an object");
  std::vector<Word> images;
  for (const auto& name : alphabet.names()) {
    if (!table.contains(name)) fail(std::string("model field '") + field + "' lacks generator " + name);
    images.push_back(alphabet.parse_word(table.at(name).get<std::string>()));
  }
  if (table.size() != images.size()) fail(std::string("model field '") + field + "' has unknown generators");
  return images;
}

}  // namespace

FiberedKnotModel parse_model(const Json& doc, std::string name) {
  try {
    const int genus = doc.at("genus").get<int>();
    if (genus < 1) fail("model genus must be positive");
    const Alphabet alphabet = Alphabet::genus(genus);
    auto images = read_images(doc.at("monodromy"), alphabet, "monodromy");
    auto inverse = read_images(doc.at("inverse"), alphabet, "inverse");
    FreeGroupAutomorphism phi(2 * genus, std::move(images), std::move(inverse));
    return FiberedKnotModel(std::move(name), genus, std::move(phi),
                            parse_laurent(doc.at("alexander").get<std::string>()));
  } catch (const Json::exception& e) {
    fail(std::string("malformed model document: ") + e.what());
  }
}

FiberedKnotModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open model file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    fail("model file " + path + " is not JSON: " + e.what());
  }
  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : path;
  return parse_model(doc, std::move(name));
}

}  // namespace goldknot
