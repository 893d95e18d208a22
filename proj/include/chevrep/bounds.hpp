#pragma once

// Closed-form dimension bound h_f(Phi, q, n) = factor * (q^n - q^(n-1)) * q^(dn)
// with factor 1/2 exactly for A_1 and C_m, plus the d table and the query
// validation shared with the certificate path.

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "chevrep/rootsys.hpp"

namespace chevrep::bounds {

using boost::multiprecision::cpp_int;
using rootsys::RootSystemId;

// d by family: A_m -> m-1, B_m -> 2m-3, C_m -> m-1, D_m -> 2m-4,
// E6/E7/E8 -> 10/16/28, F4 -> 7, G2 -> 2.  Throws on unsupported ranks.
int d_of(const RootSystemId& id);

// True exactly when F(Phi) = 2, i.e. for A_1 and C_m.
bool half_factor(const RootSystemId& id);

// Throws std::invalid_argument unless the table hypotheses hold: supported
// rank, q a power of a prime p >= 3, and p >= 5 when Phi = G2.
void validate_query(const RootSystemId& id, std::int64_t q);

cpp_int h_f(const RootSystemId& id, std::int64_t q, int n);

// (q^n - q^(n-1)) or half of it for F(Phi) = 2.
cpp_int orbit_count_closed(const RootSystemId& id, std::int64_t q, int n);

cpp_int irrep_dim_closed(const RootSystemId& id, std::int64_t q, int n);  // q^(dn)

}  // namespace chevrep::bounds
