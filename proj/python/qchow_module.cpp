#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qchow/correlator.hpp"
#include "qchow/inertia.hpp"
#include "qchow/picard.hpp"
#include "qchow/quantum.hpp"
#include "qchow/rewrite.hpp"

namespace py = pybind11;
using namespace qchow;

namespace pybind11::detail {

// qchow::Rational <-> fractions.Fraction
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (src.is_none() || PyFloat_Check(src.ptr())) return false;
    try {
      object frac = module_::import("fractions").attr("Fraction")(src);
      std::string text = str(frac);
      value = Rational::parse(text);
      return true;
    } catch (...) {
      return false;
    }
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    return module_::import("fractions").attr("Fraction")(r.str()).release();
  }
};

}  // namespace pybind11::detail

namespace {

std::string sector_type_name(SectorType t) {
  switch (t) {
    case SectorType::OneDim: return "one_dim";
    case SectorType::Point0: return "point0";
    case SectorType::PointInf: return "point_inf";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_qchow, m) {
  m.doc() = "exact inertia, Riemann-Roch and quantum Chow ring computations for P(a,b)";

  py::enum_<SectorType>(m, "SectorType")
      .value("ONE_DIM", SectorType::OneDim)
      .value("POINT_0", SectorType::Point0)
      .value("POINT_INF", SectorType::PointInf);

  py::enum_<ClassKind>(m, "ClassKind")
      .value("FUNDAMENTAL", ClassKind::Fundamental)
      .value("POINT", ClassKind::Point);

  py::class_<Weights>(m, "Weights")
      .def(py::init([](long a, long b) { return Weights::make(a, b); }), py::arg("a"),
           py::arg("b"))
      .def_static("with_bezout", &Weights::make_with_bezout, py::arg("a"), py::arg("b"),
                  py::arg("m"), py::arg("n"))
      .def_readonly("a", &Weights::a)
      .def_readonly("b", &Weights::b)
      .def_readonly("d", &Weights::d)
      .def_readonly("A", &Weights::A)
      .def_readonly("B", &Weights::B)
      .def_readonly("lcm", &Weights::e)
      .def_readonly("m", &Weights::m)
      .def_readonly("n", &Weights::n)
      .def("degenerate", &Weights::degenerate)
      .def("__repr__", [](const Weights& w) {
        return "Weights(" + std::to_string(w.a) + ", " + std::to_string(w.b) + ")";
      });

  py::class_<Sector>(m, "Sector")
      .def(py::init([](SectorType t, long label) { return Sector{t, label}; }), py::arg("type"),
           py::arg("label"))
      .def_readonly("type", &Sector::type)
      .def_readonly("label", &Sector::label)
      .def(py::self == py::self)
      .def("__repr__", [](const Sector& s) { return "Sector(" + s.str() + ")"; });

  py::class_<InertiaComponent>(m, "InertiaComponent")
      .def_readonly("sector", &InertiaComponent::sector)
      .def_readonly("dimension", &InertiaComponent::dimension)
      .def_readonly("band_order", &InertiaComponent::band_order)
      .def_readonly("stabilizer", &InertiaComponent::stabilizer)
      .def_readonly("age", &InertiaComponent::age)
      .def("__repr__", [](const InertiaComponent& c) {
        return "InertiaComponent(" + c.sector.str() + ", age=" + c.age.str() + ")";
      });

  py::class_<BasisClass>(m, "BasisClass")
      .def(py::init([](Sector s, ClassKind k, Rational degree) {
             return BasisClass{s, k, std::move(degree)};
           }),
           py::arg("sector"), py::arg("kind"), py::arg("degree"))
      .def_readonly("sector", &BasisClass::sector)
      .def_readonly("kind", &BasisClass::kind)
      .def_readonly("degree", &BasisClass::degree)
      .def(py::self == py::self)
      .def("__repr__", [](const BasisClass& c) { return "BasisClass(" + c.str() + ")"; });

  py::class_<WpsSector>(m, "WpsSector")
      .def_readonly("twist", &WpsSector::twist)
      .def_readonly("fixed", &WpsSector::fixed)
      .def_readonly("age", &WpsSector::age);

  m.def("census", &census, py::arg("weights"));
  m.def("age", &age, py::arg("weights"), py::arg("sector"));
  m.def("involution_sector", &involution_sector, py::arg("weights"), py::arg("sector"));
  m.def("stringy_basis", &stringy_basis, py::arg("weights"));
  m.def("stringy_pairing", &stringy_pairing, py::arg("weights"));
  m.def("wps_census", &wps_census, py::arg("weights"));
  m.def("denominator_bound_check", &denominator_bound_check, py::arg("value"),
        py::arg("weights"));

  // polynomials and rewriting
  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text) { return Polynomial::parse(text); }),
           py::arg("text"))
      .def("__str__", &Polynomial::str)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.str() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("is_zero", &Polynomial::is_zero);

  py::class_<RewriteSystem>(m, "RewriteSystem")
      .def_property_readonly("q_truncation", &RewriteSystem::q_truncation);

  m.def("ring_rewrite_system",
        [](const Weights& w, unsigned truncation) { return ring_rewrite_system(w, truncation); },
        py::arg("weights"), py::arg("truncation") = 6);
  m.def("normal_form", &normal_form, py::arg("polynomial"), py::arg("system"));
  m.def("confluence_smoke_check", &confluence_smoke_check, py::arg("system"),
        py::arg("samples") = 16, py::arg("seed") = 0x51c8005eedULL);

  // twisted curves
  py::class_<Football>(m, "Football")
      .def(py::init([](long genus, std::vector<long> orders) {
             return Football{genus, std::move(orders)};
           }),
           py::arg("genus"), py::arg("marking_orders"))
      .def_readonly("genus", &Football::genus)
      .def_readonly("marking_orders", &Football::marking_orders);

  py::class_<PicClass>(m, "PicClass")
      .def(py::init([](long z0, long zinf, std::vector<std::pair<long, long>> torsion) {
             return PicClass{z0, zinf, std::move(torsion)};
           }),
           py::arg("z0"), py::arg("zinf"),
           py::arg("torsion") = std::vector<std::pair<long, long>>{})
      .def_readonly("z0", &PicClass::z0)
      .def_readonly("zinf", &PicClass::zinf)
      .def_readonly("torsion", &PicClass::torsion)
      .def(py::self == py::self)
      .def("__repr__", [](const PicClass& p) {
        return "PicClass(" + std::to_string(p.z0) + ", " + std::to_string(p.zinf) + ")";
      });

  py::class_<SheafClass>(m, "SheafClass")
      .def(py::init([](long rank, Rational degree, std::vector<Rational> ages) {
             return SheafClass{rank, std::move(degree), std::move(ages)};
           }),
           py::arg("rank"), py::arg("degree"), py::arg("ages"))
      .def_readonly("rank", &SheafClass::rank)
      .def_readonly("degree", &SheafClass::degree)
      .def_readonly("ages", &SheafClass::ages)
      .def(py::self + py::self);

  m.def("pic_canonical", &pic_canonical, py::arg("cls"), py::arg("a"), py::arg("b"));
  m.def("pic_degree", &pic_degree, py::arg("cls"), py::arg("a"), py::arg("b"));
  m.def("euler_char", &euler_char, py::arg("sheaf"), py::arg("curve"));
  m.def("torsion_class", &torsion_class, py::arg("r"), py::arg("k"));
  m.def("h0_genus0", &h0_genus0, py::arg("cls"), py::arg("a"), py::arg("b"));
  m.def("solve_map_picard", &solve_map_picard, py::arg("weights"), py::arg("k"), py::arg("D"));
  m.def("virtual_dim",
        [](const Weights& w, long k, const std::vector<Sector>& sectors,
           const std::vector<long>& orders) {
          return virtual_dim(MapSpec{w, Football{0, orders}, k, sectors});
        },
        py::arg("weights"), py::arg("k"), py::arg("sectors"), py::arg("orders"));

  // quantum ring
  py::class_<RingPresentation>(m, "RingPresentation")
      .def_readonly("quantum", &RingPresentation::quantum)
      .def_property_readonly("relations",
                             [](const RingPresentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relations) out.push_back(r.str());
                               return out;
                             })
      .def_property_readonly("grading", [](const RingPresentation& p) {
        return py::make_tuple(p.grading.zeta, p.grading.x, p.grading.y, p.grading.q);
      });

  py::class_<StructureConstants>(m, "StructureConstants")
      .def_property_readonly("rank", &StructureConstants::rank)
      .def_property_readonly("basis",
                             [](const StructureConstants& sc) {
                               std::vector<std::string> out;
                               for (const auto& mono : sc.basis) out.push_back(mono.str());
                               return out;
                             })
      .def("product", [](const StructureConstants& sc, size_t i, size_t j) {
        if (i >= sc.rank() || j >= sc.rank()) throw py::index_error();
        return sc.products[i][j].str();
      });

  py::class_<PairingMatrix>(m, "PairingMatrix")
      .def_readonly("g", &PairingMatrix::g)
      .def_readonly("point_pairing", &PairingMatrix::point_pairing);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("detail", &CheckResult::detail)
      .def("__repr__", [](const CheckResult& c) {
        return "CheckResult(" + c.name + (c.passed ? ": pass)" : ": FAIL)");
      });

  py::class_<RingReport>(m, "RingReport")
      .def_readonly("ok", &RingReport::ok)
      .def_readonly("rank", &RingReport::rank)
      .def_readonly("checks", &RingReport::checks);

  m.def("quantum_presentation", &quantum_presentation, py::arg("weights"));
  m.def("classical_presentation", &classical_presentation, py::arg("weights"));
  m.def("structure_constants",
        [](const Weights& w, unsigned truncation) { return structure_constants(w, truncation); },
        py::arg("weights"), py::arg("truncation") = 6);
  m.def("pairing_matrix", &pairing_matrix, py::arg("constants"));
  m.def("monomial_sector",
        [](const Weights& w, const std::string& mono) {
          Polynomial p = Polynomial::parse(mono);
          if (p.term_count() != 1 || !(p.terms().begin()->second == Rational(1)))
            throw std::invalid_argument("monomial_sector: expected a single monic monomial");
          return monomial_sector(w, p.terms().begin()->first);
        },
        py::arg("weights"), py::arg("monomial"));
  m.def("verify_ring",
        [](const Weights& w, unsigned truncation) { return verify_ring(w, truncation); },
        py::arg("weights"), py::arg("truncation") = 6);
  m.def("three_point_xy", &three_point_xy, py::arg("weights"));
  m.def("tables_isomorphic", &tables_isomorphic, py::arg("sc1"), py::arg("sc2"));

  // correlators
  py::class_<Insertion>(m, "Insertion")
      .def(py::init([](BasisClass cls, unsigned tau) { return Insertion{std::move(cls), tau}; }),
           py::arg("cls"), py::arg("tau") = 0)
      .def_readonly("cls", &Insertion::cls)
      .def_readonly("tau", &Insertion::tau);

  py::class_<CorrelatorKey>(m, "CorrelatorKey")
      .def(py::init(&CorrelatorKey::make), py::arg("beta"), py::arg("insertions"))
      .def_readonly("beta", &CorrelatorKey::beta)
      .def_readonly("insertions", &CorrelatorKey::insertions)
      .def(py::self == py::self)
      .def("__repr__", [](const CorrelatorKey& k) { return k.str(); });

  py::enum_<Provenance>(m, "Provenance")
      .value("SEEDED", Provenance::Seeded)
      .value("RECURSION", Provenance::Recursion)
      .value("USER", Provenance::User);

  py::class_<CorrelatorTable>(m, "CorrelatorTable")
      .def(py::init<>())
      .def("set", &CorrelatorTable::set, py::arg("key"), py::arg("value"),
           py::arg("provenance") = Provenance::User)
      .def("value",
           [](const CorrelatorTable& t, const CorrelatorKey& k) -> py::object {
             auto v = t.value(k);
             if (!v) return py::none();
             return py::cast(*v);
           })
      .def("__len__", &CorrelatorTable::size)
      .def("items", [](const CorrelatorTable& t) {
        std::vector<std::pair<CorrelatorKey, Rational>> out;
        for (const auto& [k, e] : t.entries()) out.emplace_back(k, e.value);
        return out;
      });

  py::class_<RingContext>(m, "RingContext")
      .def_static("make", &RingContext::make, py::arg("weights"), py::arg("truncation") = 6)
      .def_property_readonly("basis", &RingContext::basis)
      .def_property_readonly("gram", &RingContext::gram)
      .def_property_readonly("gram_inverse", &RingContext::gram_inverse)
      .def("identity", &RingContext::identity)
      .def("hyperplane", &RingContext::hyperplane)
      .def("three_point", &RingContext::three_point, py::arg("u"), py::arg("v"), py::arg("w"),
           py::arg("beta"));

  m.def("seed_from_ring", &seed_from_ring, py::arg("context"));
  m.def("string_reduce", [](const CorrelatorKey& k) {
    std::vector<std::pair<Rational, CorrelatorKey>> out;
    for (const auto& [c, key] : string_reduce(k)) out.emplace_back(c, key);
    return out;
  });
  m.def("dilaton_reduce", &dilaton_reduce, py::arg("key"));
  m.def("divisor_reduce",
        [](const CorrelatorKey& k, const BasisClass& h, const RingContext& ctx) {
          std::vector<std::pair<Rational, CorrelatorKey>> out;
          for (const auto& [c, key] : divisor_reduce(k, h, ctx)) out.emplace_back(c, key);
          return out;
        },
        py::arg("key"), py::arg("h"), py::arg("context"));
  m.def("wdvv_residual",
        [](const CorrelatorTable& t, const std::vector<BasisClass>& four,
           const std::vector<BasisClass>& extras, long beta,
           const RingContext& ctx) -> py::object {
          if (four.size() != 4) throw std::invalid_argument("wdvv_residual: need four classes");
          WdvvResult r = wdvv_residual(t, {four[0], four[1], four[2], four[3]}, extras, beta, ctx);
          if (r.residual) return py::cast(*r.residual);
          std::vector<std::string> missing;
          for (const auto& k : r.missing) missing.push_back(k.str());
          throw std::runtime_error("missing table entries: " +
                                   (missing.empty() ? "?" : missing.front()) + " ...");
        },
        py::arg("table"), py::arg("four"), py::arg("extras"), py::arg("beta"), py::arg("context"));
  m.def("p1_reconstruct", &p1_reconstruct, py::arg("max_beta"), py::arg("max_insertions") = 6);
}
