#include "goldknot/commands.hpp"

#include <algorithm>
#include <set>

#include "goldknot/alexander.hpp"
#include "goldknot/cover.hpp"
#include "goldknot/error.hpp"
#include "goldknot/io.hpp"

namespace goldknot {

KnotHandle resolve_knot(const std::string& text, std::optional<int> strands,
                        const std::vector<std::shared_ptr<const FiberedKnotModel>>& custom) {
  KnotHandle h;
  h.label = text;
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), text) != names.end()) {
    // Catalog entries live for the whole program.
    h.model = std::shared_ptr<const FiberedKnotModel>(&catalog(text), [](const FiberedKnotModel*) {});
    h.braid = catalog_braid(text);
    return h;
  }
  for (const auto& m : custom) {
    if (m->name() == text) {
      h.model = m;
      return h;
    }
  }
  h.braid = parse_braid(text, strands);
  return h;
}

const FiberedKnotModel& require_fibered(const KnotHandle& knot) {
  if (!knot.model) {
    throw Error(ErrorCode::kScope, "bracket needs a fibered model; '" + knot.label +
                                       "' is a braid without a known monodromy");
  }
  return *knot.model;
}

namespace {

void require_knot(const BraidWord& b) {
  const int components = closure_components(b);
  if (components != 1) fail("closure has " + std::to_string(components) + " components");
}

GroupPresentation knot_group(const KnotHandle& knot) {
  if (knot.braid) {
    require_knot(*knot.braid);
    return wirtinger_from_braid(*knot.braid);
  }
  return meridional_presentation(*knot.model);
}

void emit(const RunConfig& config, std::ostream& out, const Json& json, const std::string& text) {
  if (config.format == OutputFormat::kJson) {
    out << json.dump() << '\n';
  } else {
    out << text;
  }
}

}  // namespace

int cmd_knot_info(const RunConfig& config, const KnotHandle& knot, std::ostream& out) {
  const GroupPresentation p = knot_group(knot);
  const LaurentPolynomial delta = alexander_polynomial(p);
  Json j{{"knot", knot.label}};
  std::string text = "knot: " + knot.label + "\n";
  if (knot.braid) {
    j["braid"] = format_braid(*knot.braid);
    j["strands"] = knot.braid->strands;
    j["components"] = closure_components(*knot.braid);
    text += "braid: " + format_braid(*knot.braid) + " (" + std::to_string(knot.braid->strands) +
            " strands, 1 component)\n";
  } else {
    j["components"] = 1;
  }
  j["fibered"] = knot.model != nullptr;
  if (knot.model) {
    j["genus"] = knot.model->genus();
    text += "fibered, genus " + std::to_string(knot.model->genus()) + "\n";
  } else {
    j["genus"] = nullptr;
    text += "no monodromy known\n";
  }
  j["presentation"] = Json{{"generators", p.rank()}, {"relators", p.relators.size()}};
  j["alexander"] = delta.to_string();
  text += "presentation: " + std::to_string(p.rank()) + " generators, " + std::to_string(p.relators.size()) +
          " relators\nalexander: " + delta.to_string() + "\n";
  emit(config, out, j, text);
  return 0;
}

int cmd_alexander(const RunConfig& config, const KnotHandle& knot, std::ostream& out) {
  const LaurentPolynomial delta = alexander_polynomial(knot_group(knot));
  emit(config, out, to_json(delta), delta.to_string() + "\n");
  return 0;
}

int cmd_presentation(const RunConfig& config, const KnotHandle& knot, bool cover, std::ostream& out) {
  if (!cover) {
    const GroupPresentation p = knot_group(knot);
    emit(config, out, to_json(p), to_text(p));
    return 0;
  }
  // Fibered knots use the mapping-torus presentation; braids the meridional
  // form of their Wirtinger presentation.
  const GroupPresentation p =
      knot.model ? meridional_presentation(*knot.model) : meridional_form(knot_group(knot));
  const LeveledPresentation lp = reidemeister_schreier(p);
  emit(config, out, Json{{"presentation", to_json(p)}, {"cover", to_json(lp)}}, to_text(p) + to_text(lp));
  return 0;
}

int cmd_bracket(const RunConfig& config, const KnotHandle& knot, const std::string& w1, const std::string& w2,
                Quotient quotient, std::ostream& out) {
  const FiberedKnotModel& model = require_fibered(knot);
  const Alphabet& alphabet = model.alphabet();
  const CyclicWord x = conjugacy_class(alphabet.parse_word(w1));
  const CyclicWord y = conjugacy_class(alphabet.parse_word(w2));
  switch (quotient) {
    case Quotient::kNone: {
      const LinearCombination r = bracket_piK(model, x, y);
      emit(config, out, to_json(r, alphabet), to_text(r, alphabet));
      break;
    }
    case Quotient::kPi: {
      const TOrbitClass ox = orbit_canonical(model, x, config.orbit_bound);
      const TOrbitClass oy = orbit_canonical(model, y, config.orbit_bound);
      const LinearCombination r = bracket_PiK(model, ox, oy, config.orbit_bound);
      Json j = to_json(r, alphabet);
      j["left"] = to_json(ox, alphabet);
      j["right"] = to_json(oy, alphabet);
      emit(config, out, j,
           "orbits: " + alphabet.format(ox.representative) + ", " + alphabet.format(oy.representative) + "\n" +
               to_text(r, alphabet));
      break;
    }
    case Quotient::kHomology: {
      const HomologyCombination r =
          bracket_H(model.genus(), abelianize(x.word(), model.rank()), abelianize(y.word(), model.rank()));
      emit(config, out, to_json(r), to_text(r));
      break;
    }
  }
  return 0;
}

std::vector<CyclicWord> enumerate_classes(int rank, int max_length) {
  std::set<CyclicWord> seen;
  std::vector<Letter> current;
  auto extend = [&](auto& self, int length) -> void {
    if (static_cast<int>(current.size()) == length) {
      if (current.back() != current.front().inverse() || length == 1) {
        seen.insert(conjugacy_class(Word::reduce(current)));
      }
      return;
    }
    for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(2 * rank); ++code) {
      const Letter l = Letter::from_code(code);
      if (!current.empty() && l == current.back().inverse()) continue;
      current.push_back(l);
      self(self, length);
      current.pop_back();
    }
  };
  for (int length = 1; length <= max_length; ++length) extend(extend, length);
  std::vector<CyclicWord> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const CyclicWord& a, const CyclicWord& b) {
    return a.size() < b.size();
  });
  return out;
}

int cmd_table(const RunConfig& config, const KnotHandle& knot, int max_length, std::ostream& out) {
  const FiberedKnotModel& model = require_fibered(knot);
  if (max_length < 1) fail("table length bound must be positive");
  const Alphabet& alphabet = model.alphabet();
  const auto classes = enumerate_classes(model.rank(), max_length);
  std::vector<ClassPair> pairs;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) pairs.emplace_back(classes[i], classes[j]);
  }
  const auto results = bracket_table_parallel(model.fiber(), pairs, config.jobs);
  Json rows = Json::array();
  std::string text;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string x = alphabet.format(pairs[k].first);
    const std::string y = alphabet.format(pairs[k].second);
    Json row{{"x", x}, {"y", y}};
    row["terms"] = to_json(results[k], alphabet)["terms"];
    rows.push_back(row);
    if (results[k].empty()) continue;
    text += "[" + x + ", " + y + "] =";
    for (const auto& [cls, q] : results[k].terms()) text += " " + to_string(q) + " " + alphabet.format(cls);
    text += "\n";
  }
  emit(config, out, Json{{"knot", knot.label}, {"max_length", max_length}, {"classes", classes.size()}, {"pairs", rows}},
       text);
  return 0;
}

int cmd_selftest(const RunConfig& config, bool mutate_sign, std::ostream& out) {
  SelftestConfig st;
  st.seed = config.seed;
  st.jobs = config.jobs;
  st.orbit_bound = config.orbit_bound;
  st.mutate_sign = mutate_sign;
  const auto results = run_selftest(st);
  out << (config.format == OutputFormat::kJson ? format_report_json(st, results) : format_report_text(st, results));
  const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
  return ok ? 0 : static_cast<int>(ErrorCode::kSelftestFailure);
}

}  // namespace goldknot
