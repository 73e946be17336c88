#ifndef CIVAN_IO_HPP
#define CIVAN_IO_HPP

#include <string>
#include <vector>

#include "civan/classify.hpp"
#include "civan/groebner.hpp"
#include "civan/param.hpp"
#include "civan/projective.hpp"
#include "civan/rmcode.hpp"
#include "civan/vanishing.hpp"

namespace civan {

enum class Format { Json, Text };

/// Parses {"p","m","n","monomials"} or {"p","m","n","edges"} (edges are
/// 1-based vertex lists and go through the clutter construction). Unknown
/// keys are rejected; all errors are std::invalid_argument.
ParamSet parse_param_set(const std::string& json_text);

struct GeneratorsInput {
  Field field;
  int nvars = 0;
  std::vector<Polynomial> generators;
};

/// Parses {"p","m","s","generators":[{"terms":[{"coeff","exp"}...]}...]}.
/// Integer coefficients are reduced mod p (so -1 is fine); extension-field
/// coefficients are length-m coefficient vectors.
GeneratorsInput parse_generators(const std::string& json_text);

struct CheckReport {
  bool clutter_type = false;
  bool monoid_closed = false;
  bool binomial_generated = false;
};

std::string point_text(const ProjectivePoint& p);  // "[0:1:2]"

std::string render_points(const PointSet& x, Format fmt);
std::string render_ideal(const VanishingIdeal& vi, Format fmt);
std::string render_classification(const ClassificationResult& res, Format fmt);
std::string render_groebner(const GroebnerBasis& gb, Format fmt);
std::string render_code(const CodeParameters& cp, Format fmt);
std::string render_check(const CheckReport& rep, Format fmt);

}  // namespace civan

#endif
