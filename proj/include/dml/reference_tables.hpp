#ifndef DML_REFERENCE_TABLES_HPP
#define DML_REFERENCE_TABLES_HPP

#include <vector>

#include "dml/rational.hpp"

namespace dml {

/// Frozen reference values for the two-rebit Hilbert-Schmidt moments:
///   rebit_pt          <|rho^PT|^n>,            n = 1..13
///   rebit_product     <(|rho| |rho^PT|)^n>,    n = 1..13
///   rebit_degenerate  <|rho^PT|^n> restricted to minimally degenerate
///                     (boundary, rank <= 3) states, n = 1..10.
/// The first two are reproduced exactly by the moment engine; the degenerate
/// table is shipped as reference data only (no closed-form generator).
enum class ReferenceTableId { rebit_pt, rebit_product, rebit_degenerate };

const std::vector<Rational>& reference_table(ReferenceTableId id);

/// Row n (1-based) of the given table; throws std::out_of_range beyond the
/// stored rows.
Rational table_lookup(ReferenceTableId id, long n);

/// Number of stored rows.
long table_rows(ReferenceTableId id);

}  // namespace dml

#endif
