#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobkit/boundscan.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/matgroups.hpp"
#include "frobkit/nearfield.hpp"
#include "frobkit/numtheory.hpp"
#include "frobkit/verify.hpp"

namespace py = pybind11;
using namespace frobkit;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const Rational& v) {
    return py::module_::import("fractions").attr("Fraction")(to_py(BigInt(boost::multiprecision::numerator(v))),
                                                             to_py(BigInt(boost::multiprecision::denominator(v))));
}

Family family_arg(const std::string& name) {
    auto f = parse_family(name);
    if (!f) throw UnsupportedFamily("unknown family '" + name + "'");
    return *f;
}

Branch branch_arg(const std::string& name) {
    for (Branch b : {Branch::Default, Branch::TorusN, Branch::TorusNMinus1, Branch::Minus, Branch::Plus,
                     Branch::KNotDividing, Branch::MinusDivides, Branch::H, Branch::Phi1Phi9, Branch::Phi2Phi18}) {
        if (branch_name(b) == name) return b;
    }
    throw UnsupportedBranch("unknown branch '" + name + "'");
}

py::dict report_dict(const ConjugacyReport& r) {
    py::dict d;
    d["order"] = r.order;
    d["prime"] = r.prime;
    d["k"] = r.class_count;
    d["k_p"] = r.k_p;
    d["k_p_prime"] = r.k_p_prime;
    d["class_sizes"] = r.class_sizes;
    d["representative_orders"] = r.representative_orders;
    return d;
}

py::dict case_dict(const BoundCase& c) {
    py::dict d;
    d["family"] = family_name(c.family);
    d["group"] = c.group_name();
    d["q"] = c.q;
    d["n"] = c.n;
    d["eps"] = c.eps;
    d["p"] = c.p;
    d["branch"] = branch_name(c.branch);
    d["lhs"] = to_py(c.lhs);
    d["rhs"] = to_py(c.rhs);
    return d;
}

py::dict scan_dict(const ScanResult& r) {
    py::list ex, fl;
    for (const auto& c : r.exceptions) ex.append(case_dict(c));
    for (const auto& c : r.flagged) fl.append(case_dict(c));
    py::dict d;
    d["family"] = family_name(r.family);
    d["exceptions"] = ex;
    d["flagged"] = fl;
    d["cases_checked"] = r.cases_checked;
    return d;
}

RunOptions run_options(unsigned workers, bool extended) {
    RunOptions o;
    o.workers = workers;
    o.extended = extended;
    return o;
}

} // namespace

PYBIND11_MODULE(_frobkit, m) {
    py::register_exception<Error>(m, "FrobkitError", PyExc_ValueError);
    m.attr("__version__") = toolkit_version();

    m.def("is_prime", &is_prime);
    m.def("factorize", [](std::uint64_t n) {
        std::vector<std::pair<std::uint64_t, unsigned>> out;
        for (const auto& f : factorize(n).factors) out.emplace_back(f.prime, f.exponent);
        return out;
    });
    m.def("euler_phi", &euler_phi);
    m.def("jordan_totient2", &jordan_totient2);
    m.def("multiplicative_order", &multiplicative_order, py::arg("q"), py::arg("m"));
    m.def("cyclotomic_value", [](std::uint64_t d, std::uint64_t q) { return to_py(cyclotomic_value(d, BigInt(q))); });

    m.def("dickson_condition", py::overload_cast<std::uint64_t, std::uint64_t, std::uint64_t>(&dickson_condition),
          py::arg("p"), py::arg("k"), py::arg("n"));
    m.def("closed_form_lB", [](std::uint64_t p, std::uint64_t k, std::uint64_t n) {
        return to_py(closed_form_lB({p, k, n}));
    }, py::arg("p"), py::arg("k"), py::arg("n"));
    m.def("clifford_class_count", [](std::uint64_t p, std::uint64_t k, std::uint64_t n) {
        return to_py(clifford_class_count({p, k, n}));
    }, py::arg("p"), py::arg("k"), py::arg("n"));
    m.def("lB_lower_bound", [](std::uint64_t p, std::uint64_t k, std::uint64_t n) {
        return to_py(lB_lower_bound({p, k, n}));
    }, py::arg("p"), py::arg("k"), py::arg("n"));
    m.def("nearfield_class_count", [](std::uint64_t p, std::uint64_t k, std::uint64_t n, unsigned workers) {
        py::gil_scoped_release release;
        return conjugacy_classes(nearfield_group({p, k, n}), workers).classes.size();
    }, py::arg("p"), py::arg("k"), py::arg("n"), py::arg("workers") = 1);

    m.def("frobenius_class_report", [](std::uint64_t p, std::uint64_t t, unsigned workers) {
        ConjugacyReport r;
        {
            py::gil_scoped_release release;
            r = class_report(frobenius_metacyclic(p, t), p, workers);
        }
        return report_dict(r);
    }, py::arg("p"), py::arg("t"), py::arg("workers") = 1);
    m.def("exceptional_11_report", [](unsigned workers) {
        ConjugacyReport r;
        {
            py::gil_scoped_release release;
            r = class_report(exceptional_11(workers), 11, workers);
        }
        return report_dict(r);
    }, py::arg("workers") = 1);
    m.def("find_regular_subgroups", [](std::uint64_t p, unsigned workers, bool extended) {
        RegularSearchOptions o;
        o.workers = workers;
        o.extended = extended;
        std::vector<RegularSubgroupRecord> recs;
        {
            py::gil_scoped_release release;
            recs = find_regular_subgroups(p, o);
        }
        py::list out;
        for (const auto& r : recs) {
            py::dict d;
            d["order"] = r.order;
            d["class_count"] = r.class_count;
            d["generators"] = r.generators;
            d["order_stats"] = r.order_stats;
            out.append(d);
        }
        return out;
    }, py::arg("p"), py::arg("workers") = 1, py::arg("extended") = false);

    m.def("out_order", [](const std::string& family, std::uint64_t q, std::uint64_t n, int eps) {
        return out_order(family_arg(family), q, n, eps);
    }, py::arg("family"), py::arg("q"), py::arg("n") = 0, py::arg("eps") = 0);
    m.def("torus_lower_bound", [](const std::string& family, std::uint64_t q, std::uint64_t n, int eps,
                                  const std::string& branch) {
        return to_py(torus_lower_bound(family_arg(family), q, n, eps, branch_arg(branch)));
    }, py::arg("family"), py::arg("q"), py::arg("n") = 0, py::arg("eps") = 0, py::arg("branch") = "default");
    m.def("scan_exceptions", [](const std::string& family, std::uint64_t q_max, std::uint64_t n_max,
                                std::uint64_t p_min, std::uint64_t p_max, unsigned workers) {
        ScanOptions o;
        o.window.q_max = q_max;
        o.window.n_max = n_max;
        o.window.p_min = p_min;
        o.window.p_max = p_max;
        o.workers = workers;
        return scan_dict(scan_exceptions(family_arg(family), o));
    }, py::arg("family"), py::arg("q_max") = ScanWindow{}.q_max, py::arg("n_max") = ScanWindow{}.n_max,
       py::arg("p_min") = ScanWindow{}.p_min, py::arg("p_max") = ScanWindow{}.p_max, py::arg("workers") = 1);
    m.def("defining_char_scan", [](const std::string& subfamily, std::optional<std::uint64_t> q_max) {
        return scan_dict(defining_char_scan(subfamily, q_max.value_or(default_defining_char_q_max(subfamily))));
    }, py::arg("subfamily"), py::arg("q_max") = py::none());
    m.def("sum_of_two_divisors", &sum_of_two_divisors, py::arg("n"), py::arg("m"));

    m.def("_nearfield_report", [](std::uint64_t p, std::uint64_t k, std::uint64_t n, bool brute, bool affine) {
        return serialize(nearfield_report({p, k, n}, brute, affine));
    });
    m.def("_frobenius_report", [](std::uint64_t p, std::uint64_t t) { return serialize(frobenius_report(p, t)); });
    m.def("_table34_report", [](std::uint64_t bound, unsigned workers) {
        py::gil_scoped_release release;
        return serialize(table34_report(bound, run_options(workers, false)));
    });
    m.def("_scan_report", [](const std::string& family, unsigned workers) {
        return serialize(scan_report(family, ScanWindow{}, run_options(workers, false)));
    });
    m.def("_verify_all_report", [](unsigned workers, bool extended) {
        py::gil_scoped_release release;
        return serialize(verify_all_report(run_options(workers, extended)));
    });
}
