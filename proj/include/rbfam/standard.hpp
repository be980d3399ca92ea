#pragma once
/**
 * @file standard.hpp
 * @brief Small fixed algebras over S = {e, s} used by the classification
 * tables, the CLI and the tests. Weight is the indeterminate lambda.
 */

#include "rbfam/algebra.hpp"

namespace rbfam::standard {

// k{e1}: e1 e1 = e1, theta = Id, P_e = P_s = 0.
HomAlgebra line_R();
// k{e2}: e2 e2 = e2, theta = Id, P_e = P_s = -lambda Id.
HomAlgebra line_B();
// Two-dimensional algebra on {e1, e2} containing line_R as span{e1}.
HomAlgebra plane_E();

}  // namespace rbfam::standard
