#include "civan/io.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

namespace civan {

namespace {

using json = nlohmann::ordered_json;
const MonomialOrder kGRevLex{OrderKind::GRevLex};

json parse_object(const std::string& text, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("input must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw std::invalid_argument("unknown field \"" + key + "\"");
  for (const std::string& key : required)
    if (!j.contains(key)) throw std::invalid_argument("missing field \"" + key + "\"");
  return j;
}

int get_int(const json& j, const std::string& key) {
  if (!j.at(key).is_number_integer())
    throw std::invalid_argument("field \"" + key + "\" must be an integer");
  return j.at(key).get<int>();
}

std::vector<int> get_int_vector(const json& v, const std::string& what) {
  if (!v.is_array()) throw std::invalid_argument(what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw std::invalid_argument(what + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

json field_json(const Field& f) {
  return json{{"p", f.p()}, {"m", f.m()}, {"q", f.q()}, {"modulus", f.modulus()}};
}

json coeff_json(const FieldElement& c) {
  if (c.field().m() == 1) return json(c.rep());
  return json(c.coeffs());
}

json poly_json(const Polynomial& p, const MonomialOrder& order) {
  json terms = json::array();
  for (const auto& [mono, c] : sorted_terms(p, order))
    terms.push_back(json{{"coeff", coeff_json(c)}, {"exp", mono.exp}});
  return json{{"terms", std::move(terms)}};
}

json points_json(const PointSet& x) {
  json out = json::array();
  for (const ProjectivePoint& p : x.points()) out.push_back(p.reps());
  return out;
}

FieldElement parse_coeff(const json& v, const Field& f) {
  if (v.is_number_integer()) {
    if (f.m() != 1 && v.get<long long>() != 0 && v.get<long long>() != 1 &&
        v.get<long long>() != -1)
      throw std::invalid_argument(
          "extension-field coefficients other than 0/1/-1 need a coefficient vector");
    long long raw = v.get<long long>() % f.p();
    if (raw < 0) raw += f.p();
    return f.element(static_cast<int>(raw));
  }
  std::vector<int> coeffs = get_int_vector(v, "coefficient vector");
  if (static_cast<int>(coeffs.size()) != f.m())
    throw std::invalid_argument("coefficient vector must have length m");
  return f.from_coeffs(coeffs);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string form_name(Form form) {
  switch (form) {
    case Form::I_s4: return "I";
    case Form::II_s3: return "II";
    case Form::III_s2: return "III";
    case Form::IV_s1: return "IV";
    case Form::NotCI: break;
  }
  return "none";
}

}  // namespace

ParamSet parse_param_set(const std::string& json_text) {
  json j = parse_object(json_text, {"p", "m", "n", "monomials", "edges"}, {"p", "m", "n"});
  Field field = make_field(get_int(j, "p"), get_int(j, "m"));
  const int n = get_int(j, "n");
  if (j.contains("monomials") == j.contains("edges"))
    throw std::invalid_argument("give exactly one of \"monomials\" or \"edges\"");
  if (j.contains("monomials")) {
    std::vector<ExponentVector> monomials;
    for (const auto& row : j.at("monomials")) monomials.push_back(get_int_vector(row, "monomial"));
    return make_param_set(std::move(field), n, std::move(monomials));
  }
  std::vector<std::vector<int>> edges;
  for (const auto& row : j.at("edges")) {
    std::vector<int> edge = get_int_vector(row, "edge");
    for (int& v : edge) --v;  // 1-based on the wire
    edges.push_back(std::move(edge));
  }
  return clutter_to_paramset(make_clutter(n, std::move(edges)), std::move(field));
}

GeneratorsInput parse_generators(const std::string& json_text) {
  json j = parse_object(json_text, {"p", "m", "s", "generators"}, {"p", "m", "s", "generators"});
  GeneratorsInput out;
  out.field = make_field(get_int(j, "p"), get_int(j, "m"));
  out.nvars = get_int(j, "s");
  if (out.nvars < 1) throw std::invalid_argument("s must be >= 1");
  for (const auto& gen : j.at("generators")) {
    if (!gen.is_object() || !gen.contains("terms"))
      throw std::invalid_argument("each generator must be {\"terms\": [...]}");
    for (const auto& [key, value] : gen.items())
      if (key != "terms") throw std::invalid_argument("unknown field \"" + key + "\"");
    Polynomial p(out.field, out.nvars);
    for (const auto& term : gen.at("terms")) {
      if (!term.is_object() || !term.contains("coeff") || !term.contains("exp"))
        throw std::invalid_argument("each term must be {\"coeff\", \"exp\"}");
      for (const auto& [key, value] : term.items())
        if (key != "coeff" && key != "exp")
          throw std::invalid_argument("unknown field \"" + key + "\"");
      std::vector<int> exp = get_int_vector(term.at("exp"), "exponent vector");
      if (static_cast<int>(exp.size()) != out.nvars)
        throw std::invalid_argument("exponent vector must have length s");
      for (int e : exp)
        if (e < 0) throw std::invalid_argument("negative exponent");
      p.add_term(Monomial{std::move(exp)}, parse_coeff(term.at("coeff"), out.field));
    }
    out.generators.push_back(std::move(p));
  }
  return out;
}

std::string point_text(const ProjectivePoint& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ":";
    out += std::to_string(p.coords[i].rep());
  }
  return out + "]";
}

std::string render_points(const PointSet& x, Format fmt) {
  if (fmt == Format::Json) {
    json j{{"field", field_json(x.field())},
           {"s", x.s()},
           {"count", x.size()},
           {"points", points_json(x)}};
    return dump(j);
  }
  std::string out;
  for (const ProjectivePoint& p : x.points()) out += point_text(p) + "\n";
  out += "count " + std::to_string(x.size()) + "\n";
  return out;
}

std::string render_ideal(const VanishingIdeal& vi, Format fmt) {
  const int hilbert_to = vi.source.size() + 1;
  if (fmt == Format::Json) {
    json gens = json::array();
    for (const Polynomial& g : vi.generators) gens.push_back(poly_json(g, vi.gb.order));
    json basis = json::array();
    for (const Polynomial& g : vi.gb.elements) basis.push_back(poly_json(g, vi.gb.order));
    json hilbert = json::object();
    for (int d = 0; d <= hilbert_to; ++d)
      hilbert[std::to_string(d)] = hilbert_function(vi.gb, d);
    json j{{"field", field_json(vi.source.field())},
           {"s", vi.source.s()},
           {"points", points_json(vi.source)},
           {"generators", std::move(gens)},
           {"reduced_gb", std::move(basis)},
           {"hilbert", std::move(hilbert)}};
    return dump(j);
  }
  std::string out = "|X| = " + std::to_string(vi.source.size()) + "\n";
  out += "generators (" + std::to_string(vi.generators.size()) + "):\n";
  for (const Polynomial& g : vi.generators) out += to_text(g, vi.gb.order) + "\n";
  out += "reduced Groebner basis (" + std::to_string(vi.gb.elements.size()) + "):\n";
  for (const Polynomial& g : vi.gb.elements) out += to_text(g, vi.gb.order) + "\n";
  out += "Hilbert function:";
  for (int d = 0; d <= hilbert_to; ++d) out += " " + std::to_string(hilbert_function(vi.gb, d));
  out += " (degrees 0.." + std::to_string(hilbert_to) + ")\n";
  return out;
}

std::string render_classification(const ClassificationResult& res, Format fmt) {
  std::vector<int> perm;
  for (int v : res.permutation) perm.push_back(v + 1);
  if (fmt == Format::Json) {
    json j{{"is_ci", res.is_ci},
           {"form", form_name(res.form)},
           {"permutation", perm},
           {"r", res.r ? json(*res.r) : json(nullptr)},
           {"mu_total", res.mu_total},
           {"height", res.height}};
    return dump(j);
  }
  std::string out = "complete_intersection " + bool_text(res.is_ci) + "\n";
  out += "form " + form_name(res.form) + "\n";
  out += "permutation";
  for (int v : perm) out += " " + std::to_string(v);
  out += "\n";
  if (res.r) out += "r " + std::to_string(*res.r) + "\n";
  out += "mu_total " + std::to_string(res.mu_total) + "\n";
  out += "height " + std::to_string(res.height) + "\n";
  return out;
}

std::string render_groebner(const GroebnerBasis& gb, Format fmt) {
  if (fmt == Format::Json) {
    json basis = json::array();
    for (const Polynomial& g : gb.elements) basis.push_back(poly_json(g, gb.order));
    json j{{"field", field_json(gb.field)},
           {"s", gb.nvars},
           {"order", gb.order.kind == OrderKind::GRevLex ? "grevlex" : "lex"},
           {"reduced_gb", std::move(basis)}};
    return dump(j);
  }
  std::string out =
      "reduced Groebner basis (" + std::to_string(gb.elements.size()) + "):\n";
  for (const Polynomial& g : gb.elements) out += to_text(g, gb.order) + "\n";
  return out;
}

std::string render_code(const CodeParameters& cp, Format fmt) {
  if (fmt == Format::Json) {
    json j{{"d", cp.degree},
           {"n", cp.length},
           {"k", cp.dimension},
           {"dmin", cp.min_distance ? json(*cp.min_distance) : json(nullptr)}};
    return dump(j);
  }
  std::string out = "degree " + std::to_string(cp.degree) + "\n";
  out += "length " + std::to_string(cp.length) + "\n";
  out += "dimension " + std::to_string(cp.dimension) + "\n";
  out += "min_distance " +
         (cp.min_distance ? std::to_string(*cp.min_distance) : std::string("unknown")) + "\n";
  return out;
}

std::string render_check(const CheckReport& rep, Format fmt) {
  if (fmt == Format::Json) {
    json j{{"clutter_type", rep.clutter_type},
           {"monoid_closed", rep.monoid_closed},
           {"binomial_generated", rep.binomial_generated}};
    return dump(j);
  }
  return "clutter_type " + bool_text(rep.clutter_type) + "\nmonoid_closed " +
         bool_text(rep.monoid_closed) + "\nbinomial_generated " +
         bool_text(rep.binomial_generated) + "\n";
}

}  // namespace civan
