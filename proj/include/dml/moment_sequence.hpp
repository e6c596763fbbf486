#ifndef DML_MOMENT_SEQUENCE_HPP
#define DML_MOMENT_SEQUENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dml/moments.hpp"
#include "dml/rational.hpp"

namespace dml {

enum class SequenceVariable { det, ptdet, product };

std::string to_string(SequenceVariable v);
SequenceVariable sequence_variable_from_string(const std::string& s);

/// A univariate determinantal variable rescaled to [0,1], its separability
/// threshold on that scale (when one exists), and its exact moments.
///
/// Ranges of the raw variables: |rho^PT| in [-1/16, 1/256] with threshold
/// 16/17 after rescaling; |rho||rho^PT| in [-1/110592, 1/65536] with
/// threshold 16/43; |rho| in [0, 1/256] with no threshold.
struct MomentSequence {
  SequenceVariable variable = SequenceVariable::det;
  Rational alpha;
  Rational lo, hi;                    // raw-variable range [a, b]
  std::optional<Rational> threshold;  // t* on the rescaled [0,1] axis
  std::vector<Rational> mu;           // rescaled moments, mu[0] = 1

  long order() const { return static_cast<long>(mu.size()) - 1; }

  /// Maps a rescaled coordinate back to the raw variable.
  Rational to_raw(const Rational& t) const { return lo + t * (hi - lo); }
};

/// Raw-variable range and rescaled threshold for a variable.
void variable_range(SequenceVariable v, Rational& lo, Rational& hi, std::optional<Rational>& tstar);

/// Builds the first N+1 rescaled moments (orders 0..N) of the chosen
/// variable from the exact moment engine, then validates Hankel positivity
/// up to a modest order at `digits` decimal digits (raising precision
/// internally before giving up). Throws std::runtime_error on a positivity
/// failure, which signals a formula or transcription bug.
MomentSequence build_moment_sequence(const Rational& alpha, SequenceVariable variable, long N,
                                     int digits = 64);

/// Builds a sequence directly from externally supplied rescaled moments
/// (mu[0] must be 1). Used for synthetic densities in tests and for the
/// frozen boundary-state table.
MomentSequence make_moment_sequence(SequenceVariable variable, const Rational& alpha,
                                    std::vector<Rational> rescaled_moments);

/// Largest m <= max_order such that the Hankel matrices (mu_{i+j}) of size
/// m+1 are positive definite at the given precision.
long hankel_positive_order(const std::vector<Rational>& mu, long max_order, int digits);

}  // namespace dml

#endif
