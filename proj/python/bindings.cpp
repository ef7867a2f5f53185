#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsheaf/verify.hpp"

namespace py = pybind11;
using namespace qs;

namespace {

CartanDatum datum(const py::object& c) {
    if (py::isinstance<py::str>(c)) return CartanDatum::preset(c.cast<std::string>());
    return CartanDatum(c.cast<std::vector<std::vector<int>>>());
}

Weight weight(const py::object& w) {
    Weight out;
    for (auto x : w) {
        mpq_class q(py::str(x).cast<std::string>());
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

std::vector<Weight> weight_list(const py::object& ws) {
    std::vector<Weight> out;
    for (auto w : ws) out.push_back(weight(py::reinterpret_borrow<py::object>(w)));
    return out;
}

std::vector<std::string> coeffs(const CycNum& x, const CycField* F) {
    std::vector<std::string> out;
    if (x.is_zero()) return std::vector<std::string>(F->phi(), "0");
    for (auto& c : x.coeffs()) out.push_back(c.get_str());
    return out;
}

std::vector<std::vector<std::vector<std::string>>> matrix(const Matrix& M) {
    std::vector<std::vector<std::vector<std::string>>> rows(M.rows());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) rows[i].push_back(coeffs(M(i, j), M.field()));
    return rows;
}

std::vector<int> unfolding(const RootVec& nu) {
    std::vector<int> pi;
    for (size_t i = 0; i < nu.size(); ++i) pi.insert(pi.end(), nu[i], static_cast<int>(i));
    return pi;
}

std::vector<long> lam_of(const CartanDatum& D, const Weight& W) {
    std::vector<long> lam;
    for (int i = 0; i < D.rank(); ++i) {
        mpq_class v = W[i] * D.d(i);
        if (v.get_den() != 1) throw ParameterError("d_i <i,Lambda> must be integral");
        lam.push_back(v.get_num().get_si());
    }
    return lam;
}

}  // namespace

PYBIND11_MODULE(_qsheaf, m) {
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

    m.def(
        "field",
        [](const py::object& cartan, int l, int k) {
            const CycField* F = field_for(datum(cartan), l, k);
            py::dict d;
            d["N"] = F->N();
            d["phi_N"] = F->cyclotomic_poly();
            d["varpi"] = F->varpi();
            d["l"] = F->l();
            d["k"] = F->k();
            return d;
        },
        py::arg("cartan"), py::arg("l"), py::arg("k") = 1);

    m.def(
        "dim_f",
        [](const py::object& cartan, int l, const RootVec& nu, int k) {
            auto D = datum(cartan);
            FreeAlgebra A(Colors::of(D, field_for(D, l, k)));
            return A.dim_f(nu);
        },
        py::arg("cartan"), py::arg("l"), py::arg("nu"), py::arg("k") = 1);

    m.def(
        "dim_L",
        [](const py::object& cartan, int l, const py::object& w, const RootVec& nu, int k) {
            auto D = datum(cartan);
            Verma V = Verma::of(D, field_for(D, l, k), weight(w));
            return V.dim_L(nu);
        },
        py::arg("cartan"), py::arg("l"), py::arg("weight"), py::arg("nu"), py::arg("k") = 1);

    m.def(
        "gram",
        [](const py::object& cartan, int l, const RootVec& nu, const py::object& w, int k) {
            auto D = datum(cartan);
            const CycField* F = field_for(D, l, k);
            py::dict d;
            if (w.is_none()) {
                FreeAlgebra A(Colors::of(D, F));
                d["basis"] = A.basis(nu);
                d["matrix"] = matrix(A.gram_S(nu));
            } else {
                Verma V = Verma::of(D, F, weight(w));
                d["basis"] = V.basis(nu);
                d["matrix"] = matrix(V.gram(nu));
            }
            return d;
        },
        py::arg("cartan"), py::arg("l"), py::arg("nu"), py::arg("weight") = py::none(), py::arg("k") = 1);

    m.def(
        "tor_dims",
        [](const py::object& cartan, int l, const py::object& ws, const RootVec& nu, int k) {
            auto D = datum(cartan);
            HochData H{Colors::of(D, field_for(D, l, k)), {}, nu};
            for (auto& W : weight_list(ws)) H.lams.push_back(lam_of(D, W));
            return tor_dims(H);
        },
        py::arg("cartan"), py::arg("l"), py::arg("weights"), py::arg("nu"), py::arg("k") = 1);

    m.def(
        "arrangement_cohomology",
        [](const py::object& cartan, int l, const RootVec& nu, const py::object& w, const std::string& ext, bool skew,
           int k) {
            auto D = datum(cartan);
            Extension e = ext == "shriek" ? Extension::shriek : ext == "star" ? Extension::star : Extension::ic;
            if (ext != "shriek" && ext != "star" && ext != "ic") throw ParameterError("ext must be shriek, star or ic");
            auto A = ConfigArrangement::make(D, field_for(D, l, k), unfolding(nu), weight(w));
            return cohomology_dims(arrangement_complex(A, e, skew));
        },
        py::arg("cartan"), py::arg("l"), py::arg("nu"), py::arg("weight"), py::arg("ext") = "shriek",
        py::arg("skew") = false, py::arg("k") = 1);

    m.def(
        "conformal_blocks",
        [](const py::object& cartan, int l, const py::object& ws, int k) {
            auto D = datum(cartan);
            return conformal_blocks(D, field_for(D, l, k), make_ell_data(D, l), weight_list(ws));
        },
        py::arg("cartan"), py::arg("l"), py::arg("weights"), py::arg("k") = 1);

    m.def(
        "verify",
        [](const py::object& cartan, int l, const std::string& suite, int max_depth, int k) {
            VerifyConfig cfg;
            cfg.D = datum(cartan);
            cfg.l = l;
            cfg.k = k;
            cfg.max_depth = max_depth;
            py::list out;
            for (auto& r : run_verify(cfg, suite)) {
                py::dict d;
                d["suite"] = r.suite;
                d["tag"] = r.tag;
                d["pass"] = r.pass;
                d["cases"] = r.cases;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("cartan"), py::arg("l"), py::arg("suite") = "all", py::arg("max_depth") = -1, py::arg("k") = 1);
}
