// pybind11 bindings for the main operations: lattice predicates and
// operators, constructions, bounds, oracle checks and the searches.
// Big integers cross the boundary as decimal strings inside dicts and as
// python ints for scalar returns.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xsperner/bounds.hpp"
#include "xsperner/constructions.hpp"
#include "xsperner/family.hpp"
#include "xsperner/oracles.hpp"
#include "xsperner/serialize.hpp"
#include "xsperner/solver.hpp"

namespace py = pybind11;
using namespace xsperner;

namespace {

py::object bigint_to_py(const BigInt& v) {
  return py::int_(py::str(v.str()));
}

py::object json_to_py(const nlohmann::json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

Family make_family(int n, const std::vector<std::vector<int>>& sets) {
  return Family::from_sets(n, sets);
}

std::vector<std::vector<int>> family_sets(const Family& f) {
  std::vector<std::vector<int>> out;
  f.for_each_member([&](std::uint32_t m) {
    out.push_back(SetWord(m, f.n()).elements());
  });
  return out;
}

}  // namespace

PYBIND11_MODULE(_xsperner, m) {
  m.doc() = "cross-Sperner family laboratory (C++ core)";

  py::class_<Family>(m, "Family")
      .def(py::init(&make_family), py::arg("n"), py::arg("sets"))
      .def_property_readonly("n", &Family::n)
      .def("__len__", &Family::size)
      .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
      .def("__contains__",
           [](const Family& f, const std::vector<int>& s) {
             return f.contains(SetWord::from_elements(s, f.n()).mask);
           })
      .def("sets", &family_sets)
      .def("hex", &family_to_hex)
      .def_static("from_hex", &family_from_hex, py::arg("n"), py::arg("hex"))
      .def("__repr__", [](const Family& f) {
        return "Family(n=" + std::to_string(f.n()) + ", size=" +
               std::to_string(f.size()) + ")";
      });

  m.def("comparable", [](const std::vector<int>& a, const std::vector<int>& b,
                         int n) {
    return comparable(SetWord::from_elements(a, n),
                      SetWord::from_elements(b, n));
  });
  m.def("neighborhood", &neighborhood);
  m.def("incomparables", &incomparables);
  m.def("meet_family", &meet_family);
  m.def("join_family", &join_family);
  m.def("shadow", &shadow);
  m.def("complement_family", &complement_family);
  m.def("difference_family", &difference_family);
  m.def("is_cross_sperner", &is_cross_sperner);
  m.def("is_sperner", &is_sperner);
  m.def("is_downward_closed", &is_downward_closed);
  m.def("is_convex", &is_convex);
  m.def("canonical_form", &canonical_form);
  m.def("canonical_pair", &canonical_pair);

  m.def("theorem1_extremal",
        [](int n, int s) {
          const CrossPair p =
              s > 0 ? theorem1_extremal(n, s) : theorem1_extremal(n);
          return py::make_tuple(p.F, p.G);
        },
        py::arg("n"), py::arg("s") = 0);
  m.def("theorem2_extremal", [](int n) {
    const CrossPair p = theorem2_extremal(n);
    return py::make_tuple(p.F, p.G);
  });
  m.def("l_of_k", &l_of_k);
  m.def("sperner_middle_layer", &sperner_middle_layer);
  m.def("ktuple_construction",
        [](int n, int k) { return ktuple_construction(n, k).families; });
  m.def("b_sets", [](const std::vector<int>& f0, const std::vector<int>& fstar,
                     int n) {
    return b_sets(SetWord::from_elements(f0, n),
                  SetWord::from_elements(fstar, n));
  });

  m.def("neighborhood_size",
        [](int n, int s) { return bigint_to_py(neighborhood_size(n, s)); });
  m.def("f_n1", [](int n) { return bigint_to_py(f_n1(n)); });
  m.def("sum_bound", [](int n) { return bigint_to_py(sum_bound(n)); });
  m.def("product_bound", [](int n) { return bigint_to_py(product_bound(n)); });
  m.def("ktuple_upper",
        [](int n, int k) { return bigint_to_py(ktuple_upper(n, k)); });
  m.def("ktuple_conjectured",
        [](int n, int k) { return bigint_to_py(ktuple_conjectured(n, k)); });
  m.def("gen_binomial", &gen_binomial);
  m.def("lovasz_x", &lovasz_x);
  m.def("lovasz_shadow_bound", &lovasz_shadow_bound);
  m.def("w_tail", [](int j, int k) { return bigint_to_py(w_tail(j, k)); });
  m.def("stirling_ratio", &stirling_ratio);
  m.def("lemma4_sides", [](int nprime, const std::vector<long long>& counts,
                           int k) {
    std::vector<BigInt> c(counts.begin(), counts.end());
    const auto [lhs, rhs] = lemma4_sides(LevelProfile(nprime, c), k);
    return py::make_tuple(bigint_to_py(lhs), bigint_to_py(rhs));
  });

  m.def("check_four_functions", [](const Family& a, const Family& b) {
    return json_to_py(check_four_functions(a, b).to_json());
  });
  m.def("check_partition_lemma", [](const Family& f, const Family& g) {
    return json_to_py(check_partition_lemma(CrossPair(f, g)).to_json());
  });
  m.def("check_marica_schonheim", [](const Family& c) {
    return json_to_py(check_marica_schonheim(c).to_json());
  });
  m.def("check_lovasz", [](const Family& f, int k) {
    return json_to_py(check_lovasz(f, k).to_json());
  });
  m.def("check_lemma4", [](const Family& a, int k) {
    return json_to_py(check_lemma4(a, k).to_json());
  });
  m.def("check_proposition5", [](const Family& f, const Family& g) {
    return json_to_py(check_proposition5(CrossPair(f, g)).to_json());
  });
  m.def("random_cross_sperner_pair", [](int n, std::uint64_t seed) {
    const CrossPair p = random_cross_sperner_pair(n, seed);
    return py::make_tuple(p.F, p.G);
  });
  m.def("run_suite",
        [](const std::string& suite, int n, int trials, std::uint64_t seed,
           int k) { return json_to_py(run_suite(suite, n, trials, seed,
                                                nullptr, k).to_json()); },
        py::arg("suite"), py::arg("n"), py::arg("trials"), py::arg("seed"),
        py::arg("k") = 0);

  m.def("max_product",
        [](int n, std::uint64_t budget, int workers) {
          return json_to_py(max_product(n, budget, workers).to_json());
        },
        py::arg("n"), py::arg("budget") = kDefaultBudget,
        py::arg("workers") = 1);
  m.def("max_sum",
        [](int n, std::uint64_t budget, int workers) {
          return json_to_py(max_sum(n, budget, workers).to_json());
        },
        py::arg("n"), py::arg("budget") = kDefaultBudget,
        py::arg("workers") = 1);
  m.def("f_nm", [](int n, int m) { return json_to_py(f_nm(n, m).to_json()); });
  m.def("f_star",
        [](int n, int m) { return json_to_py(f_star(n, m).to_json()); });
  m.def("max_product_ktuple",
        [](int n, int k, std::uint64_t budget) {
          return json_to_py(max_product_ktuple(n, k, budget).to_json());
        },
        py::arg("n"), py::arg("k"), py::arg("budget") = kDefaultBudget);
  m.def("connectivity_check", [](int n) {
    return json_to_py(connectivity_check(n).to_json());
  });
}
