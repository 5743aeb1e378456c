#pragma once

#include "qfinetti/measures.hpp"
#include "qfinetti/qcore.hpp"
#include "qfinetti/scalar.hpp"

namespace qfinetti {

/// Pushforward of m onto its first k coordinates. The result is again
/// q-exchangeable; level k1 of the image collects source level j with weight
/// q^{(j-k1)(k-k1)} [n-k, j-k1].
QExchMeasure project(const QExchMeasure& m, int k);

/// Pushforward of a dense table: sums every suffix into its length-k prefix.
DenseMeasure project(const DenseMeasure& d, int k);

/// (e^q_{n,n1})_k (s_{k,k1}) = q^{(n1-k1)(k-k1)} [n-k, n1-k1] / [n, n1], with
/// out-of-range q-binomials taken as 0.
Scalar project_extreme_closed_form(int n, int n1, int k, int k1, const QParam& q);

/// (nu^q_{q^{n1}})_k (s_{k,k1}) = q^{(n1-k1)(k-k1)} (q^{n1}; q^{-1})_{k1}.
Scalar project_bernoulli_closed_form(int n1, int k, int k1, const QParam& q);

/// Total variation as the plain L1 sum over words (equal to 2 sup_A |a(A) - b(A)|).
Scalar tv_distance(const DenseMeasure& a, const DenseMeasure& b);

/// Level-by-level form sum_{k1} [n,k1] |a.base[k1] - b.base[k1]|. Both measures
/// must share n and q.
Scalar tv_distance(const QExchMeasure& a, const QExchMeasure& b);

}  // namespace qfinetti
