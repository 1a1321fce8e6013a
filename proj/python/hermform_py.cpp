#include "hermform/oracles.hpp"
#include "hermform/random.hpp"
#include "hermform/textio.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hermform;

namespace {

FormKind kind_of(int epsilon) {
  if (epsilon == 1) return FormKind::Hermitian;
  if (epsilon == -1) return FormKind::Skew;
  throw py::value_error("epsilon must be 1 or -1");
}

std::vector<std::string> poly_strings(const Vec& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(to_string(f));
  return out;
}

py::dict block_dict(const CanonicalBlock& b) {
  py::dict d;
  if (b.shape == CanonicalBlock::Shape::One) {
    d["shape"] = "1x1";
    d["f"] = to_string(b.f);
  } else {
    d["shape"] = "2x2";
    d["g"] = to_string(b.g);
    d["p"] = to_string(b.p);
  }
  return d;
}

// Owns a field tower; every call runs with it installed.
class Field {
 public:
  explicit Field(std::uint32_t p) : tw_(p) {}

  std::uint32_t p() const { return tw_.p(); }

  std::vector<std::string> generators() {
    TowerScope scope(tw_);
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= tw_.top(); ++k) out.push_back(to_string(Poly(tw_.level(k).minpoly), "x"));
    return out;
  }

  std::string header(std::optional<int> epsilon, std::size_t n) {
    TowerScope scope(tw_);
    return format_header(epsilon ? std::optional(kind_of(*epsilon)) : std::nullopt, n);
  }

  std::string star(const std::string& a) {
    TowerScope scope(tw_);
    return to_string(hermform::star(parse_poly(a)));
  }

  std::string norm_factor(const std::string& y) {
    TowerScope scope(tw_);
    return to_string(hermform::norm_factor(parse_poly(y)));
  }

  std::vector<std::string> invariants(const std::string& a) {
    TowerScope scope(tw_);
    return poly_strings(invariant_factors(parse_matrix(a)));
  }

  py::dict smith(const std::string& a) {
    TowerScope scope(tw_);
    const SmithForm sf = smith_form(parse_matrix(a));
    py::dict d;
    d["U"] = to_string(sf.U);
    d["V"] = to_string(sf.V);
    d["D"] = to_string(sf.D);
    d["factors"] = poly_strings(sf.factors);
    return d;
  }

  std::vector<std::string> isotropic_vector(const std::string& a, int epsilon) {
    TowerScope scope(tw_);
    const FormKind kind = kind_of(epsilon);
    const PolyMatrix m = parse_matrix(a);
    if (!has_kind(m, kind)) throw DomainError("matrix is not a form of the given kind");
    return poly_strings(hermform::isotropic_vector(m, kind));
  }

  py::dict canonicalize(const std::string& a, int epsilon) {
    TowerScope scope(tw_);
    const Canonicalization c = hermform::canonicalize(parse_matrix(a), kind_of(epsilon));
    py::list blocks;
    for (const auto& b : c.blocks.blocks) blocks.append(block_dict(b));
    py::dict d;
    d["blocks"] = blocks;
    d["factors"] = poly_strings(c.factors.entries);
    d["S"] = to_string(c.cert.S);
    d["B"] = to_string(c.cert.B);
    return d;
  }

  py::dict congruent(const std::string& a, const std::string& b, int epsilon) {
    TowerScope scope(tw_);
    const CongruenceDecision dec = are_congruent(parse_matrix(a), parse_matrix(b), kind_of(epsilon), true);
    py::dict d;
    d["congruent"] = dec.congruent;
    d["reason"] = dec.reason;
    d["S"] = dec.cert ? py::object(py::str(to_string(dec.cert->S))) : py::object(py::none());
    return d;
  }

  std::optional<std::string> verify(const std::string& a, const std::string& s, const std::string& b) {
    TowerScope scope(tw_);
    return certificate_failure(parse_matrix(a), parse_matrix(s), parse_matrix(b));
  }

  py::dict validate(const std::vector<std::string>& factors, int epsilon) {
    TowerScope scope(tw_);
    FactorSequence fs{{}, kind_of(epsilon)};
    for (const auto& f : factors) fs.entries.push_back(parse_poly(f));
    const SequenceCheck chk = validate_sequence(fs);
    py::dict d;
    d["valid"] = chk.valid;
    d["reason"] = chk.reason;
    if (chk.valid) d["canonical"] = to_string(assemble_canonical(fs).matrix());
    return d;
  }

  py::dict random(std::size_t n, int epsilon, std::uint64_t seed, int max_degree, int moves) {
    TowerScope scope(tw_);
    RandomSpec spec;
    spec.n = n;
    spec.kind = kind_of(epsilon);
    spec.seed = seed;
    spec.max_degree = max_degree;
    spec.moves = moves;
    const RandomInstance ri = random_instance(spec);
    py::dict d;
    d["A"] = to_string(ri.a);
    d["C"] = to_string(ri.c);
    d["S"] = to_string(ri.s);
    d["factors"] = poly_strings(ri.factors.entries);
    return d;
  }

 private:
  Tower tw_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Congruence classes of hermitian and skew-hermitian matrices over F[t]";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", domain.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<Field>(m, "Field")
      .def(py::init<std::uint32_t>(), py::arg("p"))
      .def_property_readonly("p", &Field::p)
      .def("generators", &Field::generators)
      .def("header", &Field::header, py::arg("epsilon") = py::none(), py::arg("n") = 0)
      .def("star", &Field::star, py::arg("a"))
      .def("norm_factor", &Field::norm_factor, py::arg("y"))
      .def("invariants", &Field::invariants, py::arg("a"))
      .def("smith", &Field::smith, py::arg("a"))
      .def("isotropic_vector", &Field::isotropic_vector, py::arg("a"), py::arg("epsilon"))
      .def("canonicalize", &Field::canonicalize, py::arg("a"), py::arg("epsilon"))
      .def("congruent", &Field::congruent, py::arg("a"), py::arg("b"), py::arg("epsilon"))
      .def("verify", &Field::verify, py::arg("a"), py::arg("s"), py::arg("b"))
      .def("validate", &Field::validate, py::arg("factors"), py::arg("epsilon"))
      .def("random", &Field::random, py::arg("n"), py::arg("epsilon"), py::arg("seed") = 1,
           py::arg("max_degree") = 6, py::arg("moves") = 4);
}
