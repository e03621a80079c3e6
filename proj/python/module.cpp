#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "erdos/counterexample.hpp"
#include "erdos/errors.hpp"
#include "erdos/primitive.hpp"
#include "erdos/sieve.hpp"

namespace py = pybind11;
using namespace erdos;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Certified Erdos sums over primes and prime-pair products.";

    // The exception type lives on as a module attribute; args are (message, divisor, multiple).
    static PyObject* violation =
        py::register_exception<PrimitivityViolation>(m, "PrimitivityViolation", PyExc_ValueError).ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const PrimitivityViolation& e) {
            PyErr_SetObject(violation, py::make_tuple(e.what(), e.divisor(), e.multiple()).ptr());
        } catch (const FormatError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::enum_<PairMode>(m, "PairMode")
        .value("unordered_with_squares", PairMode::unordered_with_squares)
        .value("unordered_distinct", PairMode::unordered_distinct)
        .value("ordered", PairMode::ordered);

    py::class_<PrimeTable>(m, "PrimeTable")
        .def_property_readonly("limit", &PrimeTable::limit)
        .def_property_readonly("primes", [](const PrimeTable& t) {
            return std::vector<std::uint64_t>(t.primes().begin(), t.primes().end());
        })
        .def_property_readonly("logs", [](const PrimeTable& t) {
            return std::vector<double>(t.logs().begin(), t.logs().end());
        })
        .def("__len__", &PrimeTable::size);

    py::class_<SumResult>(m, "SumResult")
        .def_readonly("value", &SumResult::value)
        .def_readonly("error_bound", &SumResult::error_bound)
        .def_readonly("term_count", &SumResult::term_count)
        .def("__repr__", [](const SumResult& s) {
            return "SumResult(value=" + format_double(s.value) +
                   ", error_bound=" + format_double(s.error_bound) +
                   ", term_count=" + std::to_string(s.term_count) + ")";
        });

    py::class_<PrimitiveSequence>(m, "PrimitiveSequence")
        .def_property_readonly("elements", [](const PrimitiveSequence& s) {
            return std::vector<std::uint64_t>(s.elements().begin(), s.elements().end());
        })
        .def("__len__", &PrimitiveSequence::size);

    py::class_<PrimitivityCertificate>(m, "PrimitivityCertificate")
        .def_property_readonly("kind", [](const PrimitivityCertificate& c) { return to_string(c.kind); })
        .def_readonly("threshold", &PrimitivityCertificate::threshold)
        .def_readonly("details", &PrimitivityCertificate::details)
        .def_readonly("explicit_check_size", &PrimitivityCertificate::explicit_check_size);

    py::class_<CounterexampleReport>(m, "CounterexampleReport")
        .def_readonly("threshold", &CounterexampleReport::threshold)
        .def_readonly("semiprime_sum", &CounterexampleReport::semiprime_sum)
        .def_readonly("prime_sum", &CounterexampleReport::prime_sum)
        .def_readonly("margin", &CounterexampleReport::margin)
        .def_readonly("certified", &CounterexampleReport::certified)
        .def_readonly("includes_prime_squares", &CounterexampleReport::includes_prime_squares)
        .def_readonly("erdos_bound", &CounterexampleReport::erdos_bound)
        .def_readonly("clark_bound", &CounterexampleReport::clark_bound)
        .def("to_json", [](const CounterexampleReport& r) { return report_to_json(r, {}); });

    py::class_<CrossoverSample>(m, "CrossoverSample")
        .def_readonly("prime", &CrossoverSample::prime)
        .def_readonly("margin", &CrossoverSample::margin)
        .def_readonly("certified", &CrossoverSample::certified);

    py::class_<CrossoverResult>(m, "CrossoverResult")
        .def_readonly("first_exceeding_prime", &CrossoverResult::first_exceeding_prime)
        .def_readonly("history", &CrossoverResult::history)
        .def_readonly("stable_above", &CrossoverResult::stable_above)
        .def_readonly("final_margin", &CrossoverResult::final_margin)
        .def_readonly("last_prime", &CrossoverResult::last_prime)
        .def_property_readonly("found", &CrossoverResult::found);

    m.def("sieve_primes", [](std::uint64_t limit) { return sieve_primes(limit); }, py::arg("limit"));
    m.def("prime_count", &prime_count, py::arg("table"), py::arg("x"));
    m.def("term", &term, py::arg("a"));

    auto sum_options = [](unsigned threads, std::uint64_t chunk_size, PairMode pairs) {
        return SumOptions{threads, chunk_size, pairs};
    };
    m.def(
        "sum_primes",
        [=](const PrimeTable& t, std::uint64_t bound, unsigned threads, std::uint64_t chunk_size) {
            py::gil_scoped_release release;
            return sum_primes(t, bound, sum_options(threads, chunk_size, PairMode::unordered_with_squares));
        },
        py::arg("table"), py::arg("bound"), py::arg("threads") = 0,
        py::arg("chunk_size") = kDefaultChunkSize);
    m.def(
        "sum_semiprimes",
        [=](const PrimeTable& t, std::uint64_t bound, PairMode pairs, unsigned threads,
            std::uint64_t chunk_size) {
            py::gil_scoped_release release;
            return sum_semiprimes(t, bound, sum_options(threads, chunk_size, pairs));
        },
        py::arg("table"), py::arg("bound"), py::arg("pairs") = PairMode::unordered_with_squares,
        py::arg("threads") = 0, py::arg("chunk_size") = kDefaultChunkSize);
    m.def("sum_sequence", &sum_sequence, py::arg("sequence"));
    m.def(
        "check_primitive",
        [](std::vector<std::uint64_t> elements) { return check_primitive(std::move(elements)); },
        py::arg("elements"));
    m.def("certify_construction", &certify_construction, py::arg("threshold"));
    m.def(
        "verify",
        [](std::uint64_t threshold, PairMode pairs, unsigned threads) {
            py::gil_scoped_release release;
            return verify(threshold, VerifyOptions{threads, kDefaultChunkSize, pairs});
        },
        py::arg("threshold") = kPaperThreshold, py::arg("pairs") = PairMode::unordered_with_squares,
        py::arg("threads") = 0);
    m.def(
        "crossover",
        [](std::uint64_t scan_limit, std::uint64_t stride, PairMode pairs, unsigned threads) {
            py::gil_scoped_release release;
            return crossover(scan_limit, stride, VerifyOptions{threads, kDefaultChunkSize, pairs});
        },
        py::arg("scan_limit"), py::arg("stride") = 1000,
        py::arg("pairs") = PairMode::unordered_with_squares, py::arg("threads") = 0);
    m.def("tail_estimate", &tail_estimate, py::arg("x"));

    m.attr("PAPER_THRESHOLD") = kPaperThreshold;
    m.attr("CLARK_BOUND") = kClarkBound;
    m.attr("ERDOS_BOUND") = kErdosBound;
    m.attr("__version__") = kToolVersion;
}
