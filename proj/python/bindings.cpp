#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chaoscheb/chaoscheb.hpp"

namespace py = pybind11;
using namespace chaoscheb;

namespace {

Index to_index(const py::int_& v) { return Index::parse(py::str(v).cast<std::string>()); }
py::int_ from_mpz(const mpz_class& v) { return py::int_(py::reinterpret_steal<py::object>(
    PyLong_FromString(v.get_str().c_str(), nullptr, 10))); }
py::int_ from_index(const Index& v) { return from_mpz(v.value()); }
mpz_class to_mpz(const py::int_& v) { return mpz_class(py::str(v).cast<std::string>()); }

std::optional<Index> opt_index(const std::optional<py::int_>& v) {
  if (!v) return std::nullopt;
  return to_index(*v);
}

AttackOptions options(int congruence_digits, const std::optional<py::int_>& max_index, const std::string& branches) {
  AttackOptions o;
  o.congruence_digits = congruence_digits;
  o.max_index = opt_index(max_index);
  if (branches == "plus") o.branches = BranchChoice::plus_only;
  else if (branches == "minus") o.branches = BranchChoice::minus_only;
  else if (branches != "both") throw ParseError("branches must be both, plus or minus");
  return o;
}

}  // namespace

PYBIND11_MODULE(_chaoscheb, m) {
  m.doc() = "Chebyshev and Jacobian elliptic map cryptosystems and their attacks";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DegenerateInput>(m, "DegenerateInput", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PrecisionBreakdown>(m, "PrecisionBreakdown", base.ptr());
  py::register_exception<PrecisionMismatch>(m, "PrecisionMismatch", base.ptr());
  py::register_exception<NoSolution>(m, "NoSolution", base.ptr());
  py::register_exception<IncompleteTranscript>(m, "IncompleteTranscript", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<AttackFailed>(m, "AttackFailed", base.ptr());

  py::class_<PrecisionConfig>(m, "PrecisionConfig")
      .def(py::init<int, int, int>(), py::arg("base") = 10, py::arg("digits") = 32,
           py::arg("guard") = PrecisionConfig::kDefaultGuard)
      .def_static("protocol", &PrecisionConfig::protocol, py::arg("base"), py::arg("digits"),
                  py::arg("guard") = PrecisionConfig::kDefaultGuard)
      .def_property_readonly("base", &PrecisionConfig::base)
      .def_property_readonly("digits", &PrecisionConfig::digits)
      .def_property_readonly("guard", &PrecisionConfig::guard)
      .def_property_readonly("epsilon", &PrecisionConfig::epsilon)
      .def_property_readonly("delta", &PrecisionConfig::delta);

  py::class_<Real>(m, "Real")
      .def(py::init([](const std::string& s, const PrecisionConfig& c) { return Real::parse(s, c); }))
      .def_static("from_int", &Real::from_int)
      .def_property_readonly("config", &Real::config)
      .def("rescale", &Real::rescale)
      .def("__float__", &Real::to_double)
      .def("__str__", &Real::to_string)
      .def("__repr__", [](const Real& r) { return "Real('" + r.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def("__abs__", [](const Real& r) { return r.abs(); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self);

  m.def("approx_equal", &approx_equal);
  m.def("pi", &pi);
  m.def("cos", py::overload_cast<const Real&>(&chaoscheb::cos));
  m.def("arccos", &arccos);

  m.def("cheb_linear", [](const py::int_& n, const Real& x) { return cheb_linear(to_index(n), x); });
  m.def("cheb_halving", [](const py::int_& n, const Real& x) {
    unsigned long steps = 0;
    Real v = cheb_halving(to_index(n), x, &steps);
    return py::make_tuple(v, steps);
  });
  m.def("cheb_trig", [](const py::int_& n, const Real& x) { return cheb_trig(to_index(n), x); });

  py::class_<Modulus>(m, "Modulus")
      .def_static("from_k", &Modulus::from_k)
      .def_static("from_parameter", &Modulus::from_parameter)
      .def_property_readonly("k", &Modulus::k)
      .def_property_readonly("parameter", &Modulus::parameter)
      .def_property_readonly("quarter_period", &Modulus::quarter_period);
  m.def("cn", &cn);
  m.def("sn", &sn);
  m.def("cn_inverse", &cn_inverse);
  m.def("jacobi_map", [](const py::int_& p, const Real& w, const Modulus& k) { return jacobi_map(to_index(p), w, k); });
  m.def("jacobi_map_recurrence",
        [](const py::int_& p, const Real& w, const Modulus& k) { return jacobi_map_recurrence(to_index(p), w, k); });

  py::class_<MapFamily>(m, "MapFamily")
      .def_static("chebyshev", &MapFamily::chebyshev)
      .def_static("jacobi", &MapFamily::jacobi)
      .def_property_readonly("scheme", [](const MapFamily& f) { return to_string(f.scheme()); })
      .def("eval", [](const MapFamily& f, const py::int_& n, const Real& x) { return f.eval(to_index(n), x); });
  m.def("phase_point", [](const MapFamily& f, const py::int_& p, const py::int_& q, const PrecisionConfig& c) {
    return phase_point(f, to_mpz(p), to_mpz(q), c);
  });

  py::class_<PublicKey>(m, "PublicKey")
      .def(py::init<MapFamily, Real, Real>())
      .def_readonly("family", &PublicKey::family)
      .def_readonly("x", &PublicKey::x)
      .def_readonly("y", &PublicKey::y);
  py::class_<KeyPair>(m, "KeyPair")
      .def_readonly("public", &KeyPair::pub)
      .def_property_readonly("s", [](const KeyPair& k) { return from_index(k.priv.s); });
  py::class_<Ciphertext>(m, "Ciphertext")
      .def(py::init<Real, Real>())
      .def_readonly("u", &Ciphertext::u)
      .def_readonly("X", &Ciphertext::X);

  m.def("make_keypair",
        [](const MapFamily& f, const Real& x, const py::int_& s) { return make_keypair(f, x, to_index(s)); });
  m.def("keygen", [](const MapFamily& f, const PrecisionConfig& c, std::uint64_t seed, const py::int_& max_index) {
    SeededRng rng(seed);
    return keygen(f, c, rng, to_index(max_index));
  });
  m.def("encrypt", [](const PublicKey& pk, const Real& M, const py::int_& r) {
    return encrypt_with_index(pk, M, to_index(r));
  });
  m.def("decrypt", [](const KeyPair& kp, const Ciphertext& c) { return decrypt(kp.pub, kp.priv, c); });

  m.def("solve_congruence", [](const py::int_& b, const py::int_& a, const py::int_& mod) {
    py::list out;
    for (const auto& k : solve_congruence(to_mpz(b), to_mpz(a), to_mpz(mod)).all()) out.append(from_mpz(k));
    return out;
  });

  py::class_<RecoveredIndex>(m, "RecoveredIndex")
      .def_property_readonly("r_prime", [](const RecoveredIndex& r) { return from_index(r.r_prime); })
      .def_property_readonly("branch", [](const RecoveredIndex& r) { return to_string(r.branch); })
      .def_property_readonly("method", [](const RecoveredIndex& r) { return to_string(r.method); })
      .def_property_readonly("k", [](const RecoveredIndex& r) { return from_mpz(r.k_used); })
      .def_readonly("residual", &RecoveredIndex::residual)
      .def_property_readonly("a", [](const RecoveredIndex& r) { return r.params.a; })
      .def_property_readonly("b", [](const RecoveredIndex& r) { return r.params.b; })
      .def_property_readonly("plus_solutions", [](const RecoveredIndex& r) {
        py::list l;
        for (const auto& k : r.plus_solutions) l.append(from_mpz(k));
        return l;
      })
      .def_property_readonly("minus_solutions", [](const RecoveredIndex& r) {
        py::list l;
        for (const auto& k : r.minus_solutions) l.append(from_mpz(k));
        return l;
      });

  m.def(
      "recover_index",
      [](const MapFamily& f, const Real& x, const Real& y, int digits, std::optional<py::int_> max_index,
         const std::string& branches) { return recover_index(f, x, y, options(digits, max_index, branches)); },
      py::arg("family"), py::arg("x"), py::arg("y"), py::arg("congruence_digits") = 0,
      py::arg("max_index") = py::none(), py::arg("branches") = "both");
  m.def(
      "attack_decrypt",
      [](const PublicKey& pk, const Ciphertext& c, int digits, std::optional<py::int_> max_index) {
        return attack_decrypt(pk, c, options(digits, max_index, "both"));
      },
      py::arg("public_key"), py::arg("ciphertext"), py::arg("congruence_digits") = 0, py::arg("max_index") = py::none());

  m.def("key_agreement", [](const MapFamily& f, const Real& X, const py::int_& p, const py::int_& q) {
    KeyAgreementSession s = run_key_agreement(f, X, to_index(p), to_index(q), default_max_index(X.config()));
    return py::make_tuple(s.key_alice, eavesdrop(s));
  });
}
