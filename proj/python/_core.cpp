#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apz/almost_prime_zeta.hpp"
#include "apz/derived_constants.hpp"
#include "apz/errors.hpp"
#include "apz/format.hpp"
#include "apz/prime_zeta.hpp"
#include "apz/tables.hpp"
#include "apz/verification.hpp"

namespace py = pybind11;
using namespace apz;

namespace {

PrecisionContext make_ctx(int digits, int guard, std::uint64_t cutoff) {
  PrecisionContext c;
  c.digits = digits;
  c.guard = guard;
  c.cutoff_prime = cutoff;
  c.validate();
  return c;
}

Real arg(const std::string& text, const PrecisionContext& ctx) { return Real::parse(text, ctx.working_bits()); }

// Values cross the boundary as decimal strings carrying digits + guard
// significant digits; the Python layer turns them into Decimal.
std::string out(const Real& x, const PrecisionContext& ctx) { return x.to_scientific(ctx.working_digits()); }

// Binds f(args..., ctx) -> Real with the shared precision keywords appended.
template <class F, class... Extra>
void def_value(py::module_& m, const char* name, F f, const char* doc, Extra&&... extra) {
  m.def(name, f, doc, std::forward<Extra>(extra)..., py::arg("digits") = 64, py::arg("guard") = 15,
        py::arg("cutoff") = 101);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "High-precision prime and almost-prime zeta functions (native core)";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());

  def_value(
      m, "prime_zeta",
      [](const std::string& s, int d, int g, std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        return out(prime_zeta(arg(s, ctx), ctx), ctx);
      },
      "P(s) for real s > 1", py::arg("s"));
  def_value(
      m, "prime_zeta_prime",
      [](const std::string& s, int d, int g, std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        return out(prime_zeta_prime(arg(s, ctx), ctx), ctx);
      },
      "P'(s) for real s > 1", py::arg("s"));
  def_value(
      m, "almost_prime_zeta",
      [](int k, const std::string& s, bool moebius, bool derivative, bool partition_sum, int d, int g,
         std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        if (partition_sum && (moebius || derivative))
          throw UsageError("the partition-sum route is only exposed for plain P_k(s)");
        AlmostPrimeZetaRequest req{k, arg(s, ctx), moebius ? Variant::moebius : Variant::plain, derivative};
        if (partition_sum) return out(almost_prime_zeta_partition_sum(k, req.s, ctx), ctx);
        return out(evaluate(req, ctx), ctx);
      },
      "P_k(s), its square-free variant and their derivatives", py::arg("k"), py::arg("s"),
      py::arg("moebius") = false, py::arg("derivative") = false, py::arg("partition_sum") = false);
  def_value(
      m, "B",
      [](int k, int s, bool moebius, int d, int g, std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        return out(moebius ? B_moebius(k, s, ctx) : B(k, s, ctx), ctx);
      },
      "B_{k,s} = sum over Omega(n)=k of 1/(n^s (n-1))", py::arg("k"), py::arg("s"), py::arg("moebius") = false);
  def_value(
      m, "hurwitz",
      [](int k, const std::string& s, const std::string& a, bool moebius, bool derivative, int d, int g,
         std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        const Variant v = moebius ? Variant::moebius : Variant::plain;
        if (derivative) return out(hurwitz_almost_prime_prime(k, arg(s, ctx), arg(a, ctx), ctx, v), ctx);
        return out(hurwitz_almost_prime(k, arg(s, ctx), arg(a, ctx), v, ctx), ctx);
      },
      "P_k(s, a) = sum over Omega(n)=k of 1/(n - 1 + a)^s", py::arg("k"), py::arg("s"), py::arg("a"),
      py::arg("moebius") = false, py::arg("derivative") = false);
  def_value(
      m, "L",
      [](int k, int l, int d, int g, std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        return out(L(k, l, ctx), ctx);
      },
      "L_{k,l}", py::arg("k"), py::arg("l"));
  def_value(
      m, "moment",
      [](int u, int d, int g, std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        return out(u == 0 ? prime_zeta_moment_total(ctx) : prime_zeta_moment(u, ctx), ctx);
      },
      "sum_s P(s)/s^u; u = 0 gives sum_s P(s)/(s-1)", py::arg("u"));
  def_value(
      m, "log2_component",
      [](int k, int d, int g, std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        return out(log2_component(k, ctx), ctx);
      },
      "sum over Omega(n)=k of 1/(n 2^n)", py::arg("k"));
  m.def(
      "tau", [](int i, int l) { return std::make_pair(tau(i, l).get_num().get_str(), tau(i, l).get_den().get_str()); },
      "tau_{i,l} as (numerator, denominator) strings", py::arg("i"), py::arg("l"));

  m.def(
      "format_paper_style",
      [](const std::string& value, int digits_shown, bool unit_digit) {
        const Real x = Real::parse(value, digits_to_bits(digits_shown + 20));
        return format_paper_style(x, digits_shown, unit_digit ? PaperStyle::unit_digit : PaperStyle::leading_dot);
      },
      "truncated paper rendering of a decimal string", py::arg("value"), py::arg("digits_shown"),
      py::arg("unit_digit") = false);

  m.def("table_names", [] {
    std::vector<std::string> names;
    for (const auto& t : table_registry()) names.push_back(t.name);
    return names;
  });
  def_value(
      m, "table",
      [](const std::string& name, int d, int g, std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        const auto& def = find_table(name);
        std::vector<std::pair<std::vector<std::string>, std::string>> rows;
        {
          py::gil_scoped_release release;
          for (auto& r : generate_table(def, ctx)) rows.emplace_back(r.key, out(r.value, ctx));
        }
        return std::make_pair(def.columns, rows);
      },
      "(index columns, [(key, value)]) for a reference table", py::arg("name"));

  def_value(
      m, "identity_suite",
      [](int d, int g, std::uint64_t c) {
        const auto ctx = make_ctx(d, g, c);
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_identity_suite(ctx);
          for (auto& r : run_combinatorics_suite()) results.push_back(std::move(r));
        }
        py::list outl;
        for (const auto& r : results)
          outl.append(py::dict(py::arg("name") = r.name, py::arg("ok") = r.ok, py::arg("detail") = r.detail,
                               py::arg("seconds") = r.seconds));
        return outl;
      },
      "runs the structural identity checks");
}
