// Structured values cross the boundary as JSON text; integers as decimal text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ltab/error.hpp"
#include "ltab/l_prime.hpp"
#include "ltab/l_tableaux.hpp"
#include "ltab/rsk.hpp"
#include "ltab/schur.hpp"
#include "ltab/serialize.hpp"
#include "ltab/verify.hpp"

namespace py = pybind11;
using namespace ltab;

namespace {

std::string text(const BigInt& n) { return n.str(); }

template <class T>
std::vector<std::string> dump_all(const std::vector<T>& items) {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const T& t : items) out.push_back(to_json(t).dump());
  return out;
}

Sign parse_sign(const std::string& s) {
  if (s == "positive" || s == "+") return Sign::positive;
  if (s == "negative" || s == "-") return Sign::negative;
  throw TableauError(ErrorKind::validation, "sign", "expected positive or negative, got " + s);
}

}  // namespace

PYBIND11_MODULE(_ltab, m) {
  py::register_exception<TableauError>(m, "TableauError", PyExc_ValueError);

  m.def("enumerate_l", [](int g, int r, int d) { return dump_all(enumerate_L(g, r, d)); });
  m.def("enumerate_restricted_l", [](int g, int r, int i) { return dump_all(enumerate_restricted_L(g, r, i)); });
  m.def("enumerate_lprime",
        [](int g, int d, int k, const std::string& sign) { return dump_all(enumerate_Lprime(g, d, k, parse_sign(sign))); });

  m.def("count_lprime", [](int g, int d, int k) {
    const LPrimeCount c = count_Lprime(g, d, k);
    py::dict out;
    out["positives"] = text(c.positives);
    out["negatives"] = text(c.negatives);
    out["difference"] = text(c.difference);
    out["reduced"] = text(c.reduced);
    out["integral"] = c.integral ? py::object(py::str(text(*c.integral))) : py::object(py::none());
    return out;
  });
  m.def("integral_l", [](int g, int r, int d) { return text(integral_L(g, r, d)); });
  m.def("integral_lprime", [](int g, int d, int k) { return text(integral_Lprime(g, d, k)); });
  m.def("castelnuovo_number", [](int g, int r) { return text(castelnuovo_number(g, r)); });

  m.def("l_to_word", [](const std::string& t) { return to_json(l_to_word(l_tableau_from_json(Json::parse(t)))).dump(); });
  m.def("word_to_l", [](const std::string& w) { return to_json(word_to_l(word_from_json(Json::parse(w)))).dump(); });
  m.def("truncate", [](const std::string& t) { return to_json(truncate(l_tableau_from_json(Json::parse(t)))).dump(); });
  m.def("phi", [](const std::string& f, int g, int r) { return to_json(phi(filling_from_json(Json::parse(f)), g, r)).dump(); });
  m.def("phi_inverse",
        [](const std::string& f, int r) { return to_json(phi_inverse(filling_from_json(Json::parse(f)), r)).dump(); });
  m.def("phi_i", [](const std::string& f, int g, int r, int i) {
    return to_json(phi_i(filling_from_json(Json::parse(f)), g, r, i)).dump();
  });
  m.def("rsk", [](const std::string& w) { return to_json(rsk_insert(word_from_json(Json::parse(w)))).dump(); });
  m.def("rsk_inverse", [](const std::string& p, int r) {
    return to_json(rsk_inverse(rsk_pair_from_json(Json::parse(p)), r)).dump();
  });
  m.def("psi", [](const std::string& t) { return to_json(psi(lprime_from_json(Json::parse(t)))).dump(); });
  m.def("lprime_to_binary",
        [](const std::string& t) { return to_json(lprime_to_binary(lprime_from_json(Json::parse(t)))).dump(); });
  m.def("binary_to_lprime", [](const std::string& w, int d, int k) {
    return to_json(binary_to_lprime(word_from_json(Json::parse(w)), d, k)).dump();
  });
  m.def("to_ascii_l", [](const std::string& t) { return to_ascii(l_tableau_from_json(Json::parse(t))); });

  m.def(
      "verify",
      [](const std::string& suite, int g_max, int r_max, int d_slack, int k_max, int threads) {
        VerifyOptions options;
        options.suite = parse_suite(suite);
        options.bounds = VerifyBounds{g_max, r_max, d_slack, k_max};
        options.threads = threads;
        std::vector<std::pair<std::string, bool>> out;
        {
          py::gil_scoped_release release;
          for (const CheckResult& c : run_verify(options)) out.emplace_back(c.name, c.pass);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("g_max") = 3, py::arg("r_max") = 2, py::arg("d_slack") = 2,
      py::arg("k_max") = 4, py::arg("threads") = 1);
}
