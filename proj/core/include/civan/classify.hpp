#ifndef CIVAN_CLASSIFY_HPP
#define CIVAN_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "civan/vanishing.hpp"

namespace civan {

/// The complete-intersection normal forms, by variable count:
///   FormI_s4   (t1t2 - t3t4, t1t3 - t2t4, t2t3 - t1t4), q odd
///   FormII_s3  (t1t2 - t2t3, t1t3 - t2t3)
///   FormIII_s2 (t1^{r+1}t2 - t1t2^{r+1}), r a divisor of q-1
///   FormIV_s1  (0)
enum class Form { I_s4, II_s3, III_s2, IV_s1, NotCI };

struct ClassificationResult {
  bool is_ci = false;
  Form form = Form::NotCI;
  // Witness relabeling: permutation[i] = j means form variable t_{i+1} maps
  // to t_{j+1} of the input ideal. Identity when no relabeling is needed.
  std::vector<int> permutation;
  std::optional<int> r;  // Form III only
  int mu_total = 0;
  int height = 0;  // s - 1
};

/// The form generators over a field (identity labeling). Form IV yields the
/// empty list.
std::vector<Polynomial> form_generators(Form form, const Field& field, int r = 0);

/// True iff the ideal is generated by s-1 elements; second component is the
/// minimal generator count.
std::pair<bool, int> is_complete_intersection(const VanishingIdeal& vi);

/// Full classification of a clutter-type parameterization: enumerates X,
/// computes I(X), matches the normal forms over all variable relabelings
/// (s >= 5 is rejected outright), and cross-validates the verdict against
/// the minimal generator count. Disagreement throws std::logic_error.
ClassificationResult classify(const ParamSet& ps, uint64_t point_budget = 10'000'000);

/// Same classification with the vanishing ideal already in hand.
ClassificationResult classify(const ParamSet& ps, const VanishingIdeal& vi);

/// The explicit clutter-type parameterization whose vanishing ideal is the
/// requested form; classify(realize_form(...)) reports the same form back.
/// Form I requires q odd; Form III requires r | q-1.
ParamSet realize_form(Form form, const Field& field, std::optional<int> r = std::nullopt);

/// For the Form I ideal over q != 2: decides whether it can be the vanishing
/// ideal of a set parameterized by a clutter. The three quartic memberships
/// force v_i + v_j = v_k + v_l over the rationals; if that system pins all
/// characteristic vectors equal the answer is no (edges must be distinct).
bool clutter_realizability_check(const std::vector<Polynomial>& gens, const Field& field);

}  // namespace civan

#endif
