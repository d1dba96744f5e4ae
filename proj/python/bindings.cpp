#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wgcseq/adic.hpp"
#include "wgcseq/circulant.hpp"
#include "wgcseq/cli.hpp"
#include "wgcseq/cyclotomy.hpp"
#include "wgcseq/numtheory.hpp"
#include "wgcseq/sequence.hpp"
#include "wgcseq/spectra.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const mpz_class& v) {
    const std::string s = v.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

mpz_class from_pyint(const py::int_& v) {
    return mpz_class(py::str(v).cast<std::string>());
}

std::vector<std::uint8_t> parse_bits(const py::object& obj) {
    std::vector<std::uint8_t> bits;
    if (py::isinstance<py::str>(obj)) {
        for (char c : obj.cast<std::string>()) {
            if (c != '0' && c != '1') throw py::value_error("bit string must contain only 0/1");
            bits.push_back(c == '1');
        }
    } else {
        for (const auto& item : obj.cast<py::iterable>())
            bits.push_back(item.cast<int>() ? 1 : 0);
    }
    return bits;
}

py::dict verdict_dict(const wgc::Verdict& v) {
    py::dict d;
    d["applicable"] = v.status == wgc::VerdictStatus::Applicable;
    d["holds"] = v.holds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_wgcseq, m) {
    m.doc() = "Balanced generalized cyclotomic sequences of period p*q: "
              "construction, exact 2-adic complexity, spectra, and circulant "
              "determinant verification.";
    m.attr("__version__") = wgc::kVersion;

    py::register_exception<wgc::ParamError>(m, "ParamError", PyExc_ValueError);

    py::class_<wgc::SequenceParams>(m, "SequenceParams")
        .def_readonly("p", &wgc::SequenceParams::p)
        .def_readonly("q", &wgc::SequenceParams::q)
        .def_readonly("n", &wgc::SequenceParams::n)
        .def_readonly("g", &wgc::SequenceParams::g)
        .def_readonly("x", &wgc::SequenceParams::x)
        .def_readonly("e", &wgc::SequenceParams::e)
        .def_readonly("strict", &wgc::SequenceParams::strict)
        .def_readonly("lower_bound_applicable", &wgc::SequenceParams::lower_bound_applicable)
        .def_readonly("maximality_applicable", &wgc::SequenceParams::maximality_applicable)
        .def("__repr__", [](const wgc::SequenceParams& p) {
            return "SequenceParams(p=" + std::to_string(p.p) + ", q=" + std::to_string(p.q) +
                   ", g=" + std::to_string(p.g) + ")";
        });

    py::class_<wgc::CyclotomicPartition>(m, "CyclotomicPartition")
        .def_readonly("params", &wgc::CyclotomicPartition::params)
        .def("classify",
             [](const wgc::CyclotomicPartition& part, std::uint64_t a) {
                 return std::string(wgc::to_string(wgc::classify(a, part)));
             })
        .def("members", [](const wgc::CyclotomicPartition& part, const std::string& label) {
            for (int k = 0; k < wgc::kClassCount; ++k) {
                const auto lab = static_cast<wgc::ClassLabel>(k);
                if (wgc::to_string(lab) == label) return part.members_of(lab);
            }
            throw py::value_error("unknown class label: " + label);
        })
        .def("cyclotomic_number", [](const wgc::CyclotomicPartition& part, int i, int j) {
            return wgc::cyclotomic_number(i, j, part);
        });

    py::class_<wgc::BinarySequence>(m, "BinarySequence")
        .def_readonly("params", &wgc::BinarySequence::params)
        .def_property_readonly("bits", &wgc::BinarySequence::bit_string)
        .def_property_readonly("weight", [](const wgc::BinarySequence& s) { return wgc::weight(s); })
        .def("autocorrelation", &wgc::autocorrelation, py::arg("tau"))
        .def("linear_complexity", &wgc::linear_complexity)
        .def("s2", [](const wgc::BinarySequence& s) { return to_pyint(wgc::s_of_2(s)); });

    py::class_<wgc::AdicReport>(m, "AdicReport")
        .def_readonly("params", &wgc::AdicReport::params)
        .def_property_readonly("s2", [](const wgc::AdicReport& r) { return to_pyint(r.s2); })
        .def_property_readonly("modulus", [](const wgc::AdicReport& r) { return to_pyint(r.modulus); })
        .def_property_readonly("gcd", [](const wgc::AdicReport& r) { return to_pyint(r.g); })
        .def_property_readonly("m", [](const wgc::AdicReport& r) { return to_pyint(r.m); })
        .def_property_readonly("n", [](const wgc::AdicReport& r) { return to_pyint(r.n); })
        .def_readonly("phi2", &wgc::AdicReport::phi2)
        .def_readonly("lower_bound", &wgc::AdicReport::lower_bound)
        .def_readonly("meets_lower_bound", &wgc::AdicReport::meets_lower_bound)
        .def_readonly("is_maximal", &wgc::AdicReport::is_maximal)
        .def_readonly("periodic_value_negative", &wgc::AdicReport::periodic_value_negative)
        .def_readonly("degenerate", &wgc::AdicReport::degenerate);

    py::class_<wgc::GaussPeriods>(m, "GaussPeriods")
        .def_readonly("params", &wgc::GaussPeriods::params)
        .def_readonly("eta0", &wgc::GaussPeriods::eta0)
        .def_readonly("eta1", &wgc::GaussPeriods::eta1)
        .def_readonly("delta0p", &wgc::GaussPeriods::delta0p)
        .def_readonly("delta1p", &wgc::GaussPeriods::delta1p)
        .def_readonly("delta0q", &wgc::GaussPeriods::delta0q)
        .def_readonly("delta1q", &wgc::GaussPeriods::delta1q)
        .def_readonly("tol", &wgc::GaussPeriods::tol);

    py::class_<wgc::DetClosedForm>(m, "DetClosedForm")
        .def_readonly("params", &wgc::DetClosedForm::params)
        .def_readonly("d", &wgc::DetClosedForm::d)
        .def_property_readonly("delta_plus",
                               [](const wgc::DetClosedForm& cf) { return cf.delta_plus.get_str(); })
        .def_property_readonly("delta_minus",
                               [](const wgc::DetClosedForm& cf) { return cf.delta_minus.get_str(); })
        .def_property_readonly("det_plus",
                               [](const wgc::DetClosedForm& cf) { return to_pyint(cf.det_plus_int()); })
        .def_property_readonly("det_minus",
                               [](const wgc::DetClosedForm& cf) { return to_pyint(cf.det_minus_int()); });

    py::class_<wgc::DetReport>(m, "DetReport")
        .def_property_readonly("det_exact", [](const wgc::DetReport& r) { return to_pyint(r.det_exact); })
        .def_property_readonly("det_plus", [](const wgc::DetReport& r) { return to_pyint(r.det_plus); })
        .def_property_readonly("det_minus", [](const wgc::DetReport& r) { return to_pyint(r.det_minus); })
        .def_property_readonly("matched_sign",
                               [](const wgc::DetReport& r) { return std::string(wgc::to_string(r.matched_sign)); })
        .def_property_readonly("hadamard_bound",
                               [](const wgc::DetReport& r) { return to_pyint(r.hadamard_bound); })
        .def_readonly("primes_used", &wgc::DetReport::primes_used);

    m.def("is_prime", &wgc::is_prime, py::arg("n"));
    m.def("mult_order", &wgc::mult_order, py::arg("a"), py::arg("n"));
    m.def("find_common_primitive_root", &wgc::find_common_primitive_root, py::arg("p"), py::arg("q"));
    m.def("crt_x", &wgc::crt_x, py::arg("p"), py::arg("q"), py::arg("g"));
    m.def("make_params", &wgc::make_params, py::arg("p"), py::arg("q"), py::arg("strict") = true,
          py::arg("g") = 0);
    m.def("build_partition", &wgc::build_partition, py::arg("params"));
    m.def("generate", &wgc::generate, py::arg("partition"));
    m.def("two_adic_complexity", &wgc::two_adic_complexity, py::arg("sequence"));
    m.def("lower_bound_verdict",
          [](const wgc::AdicReport& r) { return verdict_dict(wgc::lower_bound_verdict(r)); });
    m.def("maximality_verdict",
          [](const wgc::AdicReport& r) { return verdict_dict(wgc::maximality_verdict(r)); });
    m.def("mersenne_gcd_check", [](std::uint64_t p, std::uint64_t q) {
        const auto c = wgc::mersenne_gcd_check(p, q);
        return py::make_tuple(c.p_side, c.q_side);
    });
    m.def("gcd_divisibility_check", [](const wgc::BinarySequence& seq, const py::int_& det) {
        switch (wgc::gcd_divisibility_check(seq, from_pyint(det))) {
            case wgc::DivisibilityStatus::Holds: return "holds";
            case wgc::DivisibilityStatus::Fails: return "fails";
            default: return "not-applicable";
        }
    });
    m.def("raa_synthesize", [](const py::object& prefix) {
        const auto bits = parse_bits(prefix);
        const auto r = wgc::raa_synthesize(bits);
        return py::make_tuple(to_pyint(r.m), to_pyint(r.n));
    });
    m.def("gauss_periods", &wgc::gauss_periods, py::arg("partition"));
    m.def("spectrum_direct", &wgc::spectrum_direct, py::arg("a"), py::arg("sequence"));
    m.def("spectrum_closed_form", &wgc::spectrum_closed_form, py::arg("a"), py::arg("periods"),
          py::arg("partition"));
    m.def("period_identities", [](const wgc::GaussPeriods& gp) {
        const auto rep = wgc::period_identities(gp);
        py::dict d;
        d["eta_ok"] = rep.eta_ok;
        d["delta_p_ok"] = rep.delta_p_ok;
        d["delta_q_ok"] = rep.delta_q_ok;
        d["max_residual"] = rep.max_residual;
        return d;
    });
    m.def("square_combination_check", [](const wgc::GaussPeriods& gp) {
        const auto rep = wgc::square_combination_check(gp);
        py::dict d;
        d["ok"] = rep.ok;
        d["sign"] = rep.sign;
        d["residual"] = rep.residual;
        d["value"] = rep.value;
        return d;
    });
    m.def("det_closed_form", &wgc::det_closed_form, py::arg("params"));
    m.def("det_exact",
          [](const wgc::BinarySequence& seq) { return to_pyint(wgc::det_exact(seq)); });
    m.def("match_closed_form", &wgc::match_closed_form, py::arg("sequence"), py::arg("closed_form"));
    m.def("berlekamp_massey", [](const py::object& stream) {
        const auto bits = parse_bits(stream);
        return wgc::berlekamp_massey(bits);
    });
    m.def("table_pairs", [] { return wgc::builtin_table_pairs(); });
}
