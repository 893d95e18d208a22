// Thin python surface over the exact core: closed-form bounds as decimal
// strings (re-read as python ints in the package wrapper), small structural
// queries, and a passthrough to the command-line driver.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "chevrep/bounds.hpp"
#include "chevrep/chevalley.hpp"
#include "chevrep/cli.hpp"
#include "chevrep/heisenberg.hpp"
#include "chevrep/localring.hpp"
#include "chevrep/rootsys.hpp"
#include "chevrep/svnrep.hpp"

namespace py = pybind11;

using namespace chevrep;

namespace {

rootsys::RootSystemId parse_id(const std::string& phi) { return rootsys::RootSystemId::parse(phi); }

localring::RingPtr make_ring(std::int64_t q, int n, const std::string& kind) {
  const auto [p, l] = localring::prime_power_split(q);
  localring::RingSpec spec;
  spec.p = p;
  spec.l = l;
  spec.n = n;
  if (kind == "auto")
    spec.kind = l == 1 ? localring::RingKind::ZpN : localring::RingKind::Galois;
  else
    spec.kind = localring::kind_from_name(kind);
  if (spec.kind != localring::RingKind::ZpN) spec.modulus = localring::default_modulus(p, l);
  return localring::Ring::make(spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Chevalley/Heisenberg dimension bounds (core bindings)";

  m.def("d_of", [](const std::string& phi) { return bounds::d_of(parse_id(phi)); },
        py::arg("phi"), "d = |Sigma+| / 2 from the closed-form table");
  m.def("f_of", [](const std::string& phi) { return bounds::half_factor(parse_id(phi)) ? 2 : 1; },
        py::arg("phi"), "F(Phi): 2 for A1 and C_m, else 1");
  m.def("validate_query",
        [](const std::string& phi, std::int64_t q) { bounds::validate_query(parse_id(phi), q); },
        py::arg("phi"), py::arg("q"));

  m.def("h_f_str",
        [](const std::string& phi, std::int64_t q, int n) {
          return bounds::h_f(parse_id(phi), q, n).str();
        },
        py::arg("phi"), py::arg("q"), py::arg("n"));
  m.def("orbit_count_str",
        [](const std::string& phi, std::int64_t q, int n) {
          return bounds::orbit_count_closed(parse_id(phi), q, n).str();
        },
        py::arg("phi"), py::arg("q"), py::arg("n"));
  m.def("irrep_dim_str",
        [](const std::string& phi, std::int64_t q, int n) {
          return bounds::irrep_dim_closed(parse_id(phi), q, n).str();
        },
        py::arg("phi"), py::arg("q"), py::arg("n"));

  m.def("root_system_info",
        [](const std::string& phi) {
          const auto rs = rootsys::RootSystem::build(parse_id(phi));
          const auto sigma = rs.sigma_plus();
          py::dict d;
          d["name"] = rs.id().name();
          d["rank"] = rs.rank();
          d["num_roots"] = rs.num_roots();
          d["num_positive"] = static_cast<int>(rs.positives().size());
          d["d"] = sigma.d;
          d["f"] = rs.f_phi().first;
          d["highest_height"] = rs.root(rs.highest_root()).height;
          return d;
        },
        py::arg("phi"));

  m.def("certificate_json",
        [](const std::string& phi, std::int64_t q, int n) {
          const auto id = parse_id(phi);
          auto rs = std::make_shared<const rootsys::RootSystem>(rootsys::RootSystem::build(id));
          return svnrep::lower_bound_certificate(*rs, make_ring(q, n, "auto")).to_json();
        },
        py::arg("phi"), py::arg("q"), py::arg("n"),
        "certificate as a JSON string; the orbit count is brute-forced when the "
        "unit group is enumerable");

  m.def("heis_info",
        [](const std::string& phi, std::int64_t q, int n, const std::string& kind) {
          const auto id = parse_id(phi);
          auto rs = std::make_shared<const rootsys::RootSystem>(rootsys::RootSystem::build(id));
          auto table = std::make_shared<const chevalley::StructureTable>(
              chevalley::StructureTable::build(rs));
          auto ring = make_ring(q, n, kind);
          const auto h = heisenberg::HeisGroup::build(table, ring);
          py::dict d;
          d["order"] = h.order().str();
          d["d"] = h.d();
          d["generic_units"] = heisenberg::is_generic(h, ring->one());
          return d;
        },
        py::arg("phi"), py::arg("q"), py::arg("n"), py::arg("kind") = "auto");

  m.def("run_cli", [](const std::vector<std::string>& args) { return cli::run_cli(args); },
        py::arg("args"), "drive the command-line surface; returns the exit code");
}
