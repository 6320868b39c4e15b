// Python bindings for the core operations: diagonalization, Witt-class
// comparison, unknotting obstructions and the pretzel/lens helpers.
// Matrices come in as lists of lists of ints; rationals travel as strings
// so arbitrary precision survives the crossing.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "wittknot/pretzel.hpp"
#include "wittknot/seifert.hpp"
#include "wittknot/unknotting.hpp"
#include "wittknot/witt.hpp"

namespace py = pybind11;
using namespace wittknot;

namespace {

IntMatrix to_matrix(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m;
  for (const auto& row : rows) {
    std::vector<Int> r;
    for (long long v : row) r.emplace_back(static_cast<long>(v));
    m.push_back(std::move(r));
  }
  return m;
}

DiagonalForm form_from_strings(const std::vector<std::string>& entries) {
  std::vector<Rat> es;
  for (const auto& s : entries) es.push_back(parse_rat(s));
  return DiagonalForm(es);
}

std::vector<std::string> form_to_strings(const DiagonalForm& f) {
  std::vector<std::string> out;
  for (const auto& e : f.entries()) out.push_back(rat_str(e));
  return out;
}

py::dict verdict_to_dict(const ObstructionVerdict& v) {
  auto case_dict = [](const CaseResult& c) {
    py::dict d;
    d["status"] = c.status == CaseStatus::Consistent ? "consistent"
                                                     : "excluded";
    d["by_signature"] = c.by_signature;
    std::vector<std::string> seps;
    for (const Int& p : c.separating) seps.push_back(p.get_str());
    d["separating"] = seps;
    if (c.witness) {
      py::dict w;
      w["p"] = c.witness->p.get_str();
      w["phi_residue"] = c.witness->f_residue.get_str();
      w["target_residue"] = c.witness->g_residue.get_str();
      d["witness"] = w;
    }
    return d;
  };
  py::dict d;
  d["obstructed"] = v.obstructed;
  d["signature_excluded"] = v.signature_excluded;
  d["positive"] = case_dict(v.positive_case);
  d["negative"] = case_dict(v.negative_case);
  if (v.witness) {
    py::dict w;
    w["p"] = v.witness->p.get_str();
    w["phi_residue"] = v.witness->f_residue.get_str();
    w["target_residue"] = v.witness->g_residue.get_str();
    d["witness"] = w;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rational Witt classes of knots and unknotting obstructions";

  m.def(
      "rational_witt_class",
      [](const std::vector<std::vector<long long>>& seifert, bool strict) {
        auto V = SeifertMatrix::create(to_matrix(seifert), strict);
        return form_to_strings(rational_witt_class(V));
      },
      py::arg("seifert"), py::arg("strict") = true,
      "Diagonal representative of the rational Witt class of a Seifert "
      "matrix, as a list of rational strings.");

  m.def(
      "diagonalize_symmetric",
      [](const std::vector<std::vector<long long>>& q) {
        auto Q = SymmetricRationalMatrix::from_int(to_matrix(q));
        return form_to_strings(gram_schmidt_diagonalize(Q));
      },
      py::arg("matrix"),
      "Diagonalize a symmetric integer matrix over the rationals.");

  m.def(
      "signature",
      [](const std::vector<std::vector<long long>>& seifert) {
        auto V = SeifertMatrix::create(to_matrix(seifert), false);
        return knot_signature(V);
      },
      py::arg("seifert"), "Signature of V + V^T.");

  m.def(
      "determinant",
      [](const std::vector<std::vector<long long>>& seifert) {
        auto V = SeifertMatrix::create(to_matrix(seifert), false);
        return knot_determinant(V).get_str();
      },
      py::arg("seifert"), "|det(V + V^T)| as a string.");

  m.def(
      "is_equal",
      [](const std::vector<std::string>& f, const std::vector<std::string>& g) {
        return is_equal(form_from_strings(f), form_from_strings(g));
      },
      py::arg("f"), py::arg("g"),
      "Decide whether two diagonal forms agree in the rational Witt group.");

  m.def(
      "invariant",
      [](const std::vector<std::string>& f) {
        return witt_invariant(form_from_strings(f)).str();
      },
      py::arg("f"), "Canonical invariant string (signature + local parts).");

  m.def(
      "torsion_order",
      [](const std::vector<std::string>& f) {
        return torsion_order(form_from_strings(f)).str();
      },
      py::arg("f"), "Order of the class: 1, 2, 4 or 'infinite'.");

  m.def(
      "u1_obstruction",
      [](const std::vector<std::string>& phi, long long det, int sigma) {
        return verdict_to_dict(
            u1_obstruction(form_from_strings(phi), Int(static_cast<long>(det)),
                           sigma));
      },
      py::arg("phi"), py::arg("det"), py::arg("sigma"),
      "Crossing-change obstruction to unknotting number one.");

  m.def(
      "u2_candidate_filter",
      [](const std::vector<std::string>& phi, long long det, int sigma,
         const std::vector<long long>& d_values) {
        std::vector<Int> ds;
        for (long long d : d_values) ds.push_back(Int(static_cast<long>(d)));
        std::vector<std::string> out;
        for (const Int& d : u2_candidate_filter(form_from_strings(phi),
                                                Int(static_cast<long>(det)),
                                                sigma, ds))
          out.push_back(d.get_str());
        return out;
      },
      py::arg("phi"), py::arg("det"), py::arg("sigma"), py::arg("d_values"),
      "Determinants of possible intermediate knots in a two-step unknotting "
      "sequence.");

  m.def(
      "pretzel_class",
      [](const std::vector<long long>& strands) {
        std::vector<Int> ps;
        for (long long p : strands) ps.push_back(Int(static_cast<long>(p)));
        auto params = PretzelParams::create(ps);
        PretzelClass pc = strands.size() == 3 ? pretzel3_class(params)
                                              : pretzel4_class(params);
        py::dict d;
        d["phi"] = form_to_strings(pc.phi);
        d["sigma"] = pc.sigma;
        d["signed_det"] = pc.signed_det.get_str();
        return d;
      },
      py::arg("strands"),
      "Witt class, signature and signed determinant of a 3- or 4-strand "
      "pretzel knot.");

  m.def(
      "lickorish_solvable",
      [](long long p, long long q, long long det) {
        auto lens = LensSurgeryDescription::create(Int(static_cast<long>(p)),
                                                   Int(static_cast<long>(q)));
        return lickorish_solvable(lens, Int(static_cast<long>(det)));
      },
      py::arg("p"), py::arg("q"), py::arg("det"),
      "Whether q = +-2 t^2 mod det has a solution (necessary for u = 1).");
}
