#include "qssep/cli.hpp"
#include "qssep/combinatorics.hpp"
#include "qssep/cumulants.hpp"
#include "qssep/loop_polynomials.hpp"
#include "qssep/polynomial.hpp"
#include "qssep/schroeder.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qssep;

namespace {

py::object to_py(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object to_py(const Rational& value) {
    return py::module_::import("fractions").attr("Fraction")(to_string(value));
}

Rational from_py_rational(const py::handle& value) {
    return parse_rational(py::str(py::module_::import("fractions").attr("Fraction")(value)).cast<std::string>());
}

py::dict terms_to_py(const MultilinearPolynomial& p) {
    py::dict out;
    for (const auto& [m, c] : p.terms()) out[py::tuple(py::cast(m))] = to_py(c);
    return out;
}

NonCrossingPartition nc_from(int n, std::vector<Block> blocks) { return NonCrossingPartition(n, std::move(blocks)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact loop polynomials of cyclic permutations";

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

    m.def("catalan", [](int n) { return to_py(catalan(n)); });
    m.def("small_schroeder", [](int n) { return to_py(small_schroeder(n)); });

    m.def("canonicalize_cycle", [](std::vector<int> w) { return canonicalize_cycle(std::move(w)).word(); });
    m.def("conjugate_by_adjacent",
          [](std::vector<int> w, int i) { return conjugate_by_adjacent(CyclicPermutation(std::move(w)), i).word(); });
    m.def("split_by_transposition", [](std::vector<int> w, int i) {
        auto s = split_by_transposition(CyclicPermutation(std::move(w)), i);
        return std::make_pair(s.minus.word(), s.plus.word());
    });

    m.def("enumerate_nc", [](int n) {
        std::vector<std::vector<Block>> out;
        for (const auto& pi : enumerate_nc(n)) out.push_back(pi.blocks());
        return out;
    });
    m.def("kreweras", [](int n, std::vector<Block> blocks) { return kreweras(nc_from(n, std::move(blocks))).blocks(); });
    m.def("mobius", [](int n, std::vector<Block> blocks) { return to_py(mobius_nc(nc_from(n, std::move(blocks)))); });

    m.def(
        "enumerate_trees",
        [](int leaves, bool prime) {
            std::vector<std::string> out;
            for (const auto& t : prime ? enumerate_prime_trees(leaves) : enumerate_trees(leaves)) {
                out.push_back(t.to_string());
            }
            return out;
        },
        py::arg("leaves"), py::arg("prime") = false);
    m.def("tree_partition", [](const std::string& t) { return tree_partition(SchroederTree::parse(t)).blocks(); });
    m.def("tree_to_dissection", [](const std::string& t) {
        const auto d = tree_to_dissection(SchroederTree::parse(t));
        return std::vector<std::pair<int, int>>(d.diagonals().begin(), d.diagonals().end());
    });
    m.def("dissection_to_tree", [](int polygon_size, const std::vector<std::pair<int, int>>& diagonals) {
        return dissection_to_tree(Dissection(polygon_size, {diagonals.begin(), diagonals.end()})).to_string();
    });

    m.def(
        "loop_polynomial",
        [](std::vector<int> w, std::optional<int> k, const std::string& algo) {
            CyclicPermutation sigma(std::move(w));
            const int start = k.value_or(sigma.word().front());
            switch (parse_algorithm(algo)) {
                case Algorithm::trees: return terms_to_py(q_via_trees(sigma, start));
                case Algorithm::cumulants: return terms_to_py(q_via_cumulants(sigma, start));
                case Algorithm::exchange:
                    return terms_to_py(compute_family(static_cast<int>(sigma.size()), Algorithm::exchange).at(sigma));
            }
            return py::dict();
        },
        py::arg("sigma"), py::arg("k") = py::none(), py::arg("algo") = "trees",
        "Loop polynomial as {sorted variable tuple: integer coefficient}.");

    m.def(
        "format_loop_polynomial",
        [](std::vector<int> w, const std::string& format) {
            return serialize(q_via_trees(CyclicPermutation(std::move(w))), parse_format(format));
        },
        py::arg("sigma"), py::arg("format") = "text");

    m.def("equivalence_classes", [](int n) {
        py::list out;
        for (const auto& cls : equivalence_classes(n)) {
            std::vector<std::vector<int>> words;
            for (const auto& s : cls.cycles) words.push_back(s.word());
            out.append(py::make_tuple(terms_to_py(cls.polynomial), words));
        }
        return out;
    });

    m.def(
        "verify",
        [](int n, int jobs) {
            VerificationReport report;
            {
                py::gil_scoped_release release;
                report = verify_axioms(n, jobs);
            }
            return py::make_tuple(report.checks.size(), report.failures());
        },
        py::arg("n"), py::arg("jobs") = 1, "Returns (checks, failures).");

    m.def("free_cumulant_min", [](const py::sequence& u) {
        std::vector<Rational> values;
        for (const auto& x : u) values.push_back(from_py_rational(x));
        return to_py(numeric_free_cumulant_min(values));
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
