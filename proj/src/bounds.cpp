#include "chevrep/bounds.hpp"

#include <stdexcept>
#include <string>

#include "chevrep/localring.hpp"

namespace chevrep::bounds {

using rootsys::Family;

int d_of(const RootSystemId& id) {
  const int m = id.rank;
  switch (id.family) {
    case Family::A:
      if (m < 1 || m > 12) break;
      return m - 1;
    case Family::B:
      if (m < 3 || m > 12) break;
      return 2 * m - 3;
    case Family::C:
      if (m < 2 || m > 12) break;
      return m - 1;
    case Family::D:
      if (m < 4 || m > 12) break;
      return 2 * m - 4;
    case Family::E:
      if (m == 6) return 10;
      if (m == 7) return 16;
      if (m == 8) return 28;
      break;
    case Family::F:
      if (m == 4) return 7;
      break;
    case Family::G:
      if (m == 2) return 2;
      break;
  }
  throw std::invalid_argument(id.name() + ": rank out of the supported range");
}

bool half_factor(const RootSystemId& id) {
  return (id.family == Family::A && id.rank == 1) || id.family == Family::C;
}

void validate_query(const RootSystemId& id, std::int64_t q) {
  d_of(id);  // rank constraints
  const auto [p, l] = localring::prime_power_split(q);
  (void)l;
  if (p < 3) throw std::invalid_argument("residue characteristic 2 is not supported");
  if (id.family == Family::G && p < 5) throw std::invalid_argument("G2 requires p >= 5");
}

cpp_int h_f(const RootSystemId& id, std::int64_t q, int n) {
  if (n < 1) throw std::invalid_argument("level n must be >= 1");
  validate_query(id, q);
  const cpp_int Q(q);
  const cpp_int units = boost::multiprecision::pow(Q, static_cast<unsigned>(n)) -
                        boost::multiprecision::pow(Q, static_cast<unsigned>(n - 1));
  cpp_int v = units * boost::multiprecision::pow(Q, static_cast<unsigned>(d_of(id) * n));
  if (half_factor(id)) v /= 2;  // exact: q^n - q^(n-1) is even for odd p
  return v;
}

cpp_int orbit_count_closed(const RootSystemId& id, std::int64_t q, int n) {
  if (n < 1) throw std::invalid_argument("level n must be >= 1");
  validate_query(id, q);
  const cpp_int Q(q);
  cpp_int units = boost::multiprecision::pow(Q, static_cast<unsigned>(n)) -
                  boost::multiprecision::pow(Q, static_cast<unsigned>(n - 1));
  if (half_factor(id)) units /= 2;
  return units;
}

cpp_int irrep_dim_closed(const RootSystemId& id, std::int64_t q, int n) {
  if (n < 1) throw std::invalid_argument("level n must be >= 1");
  validate_query(id, q);
  return boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(d_of(id) * n));
}

}  // namespace chevrep::bounds
