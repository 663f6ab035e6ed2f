#include "cauchy/cli.hpp"

#include "cauchy/errors.hpp"
#include "cauchy/invariants.hpp"
#include "cauchy/operators.hpp"
#include "cauchy/partitions.hpp"
#include "cauchy/random.hpp"
#include "cauchy/symfun.hpp"
#include "cauchy/symgroup.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace cauchy::cli {

namespace {

using nlohmann::json;

constexpr std::array kSections{"polynomials", "symfun", "classes", "matrices", "operators"};

// j_1..j_5 as listed in the classical table of Cauchy polynomials.
constexpr std::array<const char*, 5> kGoldenJ{
    "x1",
    "x1^2 - x2",
    "x1^3 - 3*x1*x2 + 2*x3",
    "x1^4 - 6*x1^2*x2 + 8*x1*x3 + 3*x2^2 - 6*x4",
    "x1^5 - 10*x1^3*x2 + 20*x1^2*x3 + 15*x1*x2^2 - 30*x1*x4 - 20*x2*x3 + 24*x5",
};

class Report {
public:
  void record(const std::string& section, const std::string& check, bool passed) {
    entries_.push_back({{"section", section}, {"check", check}, {"passed", passed}});
    lines_ += std::string(passed ? "PASS " : "FAIL ") + section + ": " + check + "\n";
    all_passed_ = all_passed_ && passed;
  }

  OutputDocument finish() {
    OutputDocument doc;
    doc.payload = {{"command", "verify"}, {"checks", entries_}, {"passed", all_passed_}};
    doc.text = lines_ + (all_passed_ ? "all checks passed\n" : "verification FAILED\n");
    doc.exit_code = all_passed_ ? kSuccess : kVerificationFailure;
    return doc;
  }

private:
  json entries_ = json::array();
  std::string lines_;
  bool all_passed_ = true;
};

void verify_polynomials(const VerifyOptions& o, Report& report) {
  bool golden = true;
  for (std::size_t k = 1; k <= kGoldenJ.size(); ++k)
    golden = golden && cauchy_j(k).to_string() == kGoldenJ[k - 1];
  report.record("polynomials", "j_1..j_5 match the reference table", golden);

  bool dual = true, plus_dual = true, lowering = true, homogeneous = true;
  for (std::size_t k = 1; k <= o.max_k; ++k) {
    dual = dual && cauchy_j(k) == cauchy_j_closed(k);
    plus_dual = plus_dual && cauchy_k(k) == cauchy_k_closed(k);
    lowering = lowering && partial(cauchy_j(k), 1) == Rational(k) * cauchy_j(k - 1);
    homogeneous = homogeneous && cauchy_j(k).homogeneous_weight() == k &&
                  cauchy_k(k).homogeneous_weight() == k;
  }
  const auto upto = " for k <= " + std::to_string(o.max_k);
  report.record("polynomials", "raising iteration equals closed form (Delta-)" + upto, dual);
  report.record("polynomials", "raising iteration equals closed form (Delta+)" + upto, plus_dual);
  report.record("polynomials", "d/dx1 j_k = k j_{k-1}" + upto, lowering);
  report.record("polynomials", "j_k and k_k homogeneous of weight k" + upto, homogeneous);
}

void verify_symfun(const VerifyOptions& o, Rng& rng, Report& report) {
  bool elementary = true, wronski = true;
  for (std::size_t s = 0; s < o.samples; ++s) {
    VariableVector xs(static_cast<std::size_t>(random_integer(rng, 0, 6)));
    for (auto& x : xs)
      x = random_rational(rng);
    std::vector<Rational> sums;
    for (std::size_t k = 1; k <= o.max_k; ++k)
      sums.push_back(eval_power_sum(k, xs));
    for (std::size_t k = 1; k <= o.max_k; ++k) {
      elementary = elementary && c_from_power_sums(k, sums) == eval_elementary(k, xs);
      wronski = wronski && w_from_power_sums(k, sums) == eval_wronski(k, xs);
    }
  }
  const auto scope = " on " + std::to_string(o.samples) + " random vectors, k <= " + std::to_string(o.max_k);
  report.record("symfun", "elementary from power sums" + scope, elementary);
  report.record("symfun", "Wronski from power sums" + scope, wronski);
}

void verify_classes(const VerifyOptions& o, Report& report) {
  const auto top = std::min<std::size_t>(o.max_k, 8);
  bool formula = true, generating = true, totals = true;
  for (std::size_t n = 1; n <= top; ++n) {
    const auto sizes = class_sizes(n, 8);
    const auto kn = cauchy_k(n);
    Integer total = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto alpha = to_symbol(lambda);
      const auto it = sizes.find(alpha);
      const Integer counted = it == sizes.end() ? Integer(0) : it->second;
      formula = formula && counted == cauchy_h(alpha);
      generating = generating && kn.coefficient(symbol_monomial(alpha)) == Rational(counted);
      total += counted;
    }
    totals = totals && total == factorial(n) && sizes.size() == enumerate_partitions(n).size();
  }
  const auto scope = " for n <= " + std::to_string(top);
  report.record("classes", "brute-force class sizes equal h(alpha)" + scope, formula);
  report.record("classes", "coefficients of k_n equal class sizes" + scope, generating);
  report.record("classes", "class sizes sum to n!" + scope, totals);
}

void verify_matrices(const VerifyOptions& o, Rng& rng, Report& report) {
  bool four_way = true, beyond = true, lax = true, similar = true, diagonal = true;
  for (std::size_t s = 0; s < o.samples; ++s) {
    const std::size_t n = 1 + s % o.max_n;
    const auto a = s % 2 == 0 ? random_integer_matrix(rng, n) : random_rational_matrix(rng, n);
    const auto lev = leverrier_coefficients(a);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto minors = prodet_minors(a, k);
      bool ok = minors == lev[k - 1] && minors == prodet_cauchy(a, k);
      if (antisym_within_budget(n, k))
        ok = ok && minors == prodet_antisym(a, k);
      four_way = four_way && ok;
    }
    beyond = beyond && prodet_cauchy(a, n + 1).is_zero();

    const auto b = random_rational_matrix(rng, n);
    for (std::size_t k = 1; k <= n; ++k)
      lax = lax && lax_trace_check(a, b, k).is_zero();

    if (n <= 4) {
      const auto g = random_invertible_matrix(rng, n);
      const auto conj = g * a * inverse(g);
      for (std::size_t k = 1; k <= n; ++k)
        similar = similar && prodet_minors(conj, k) == prodet_minors(a, k) &&
                  power_trace(conj, k) == power_trace(a, k);
    }

    VariableVector xs(n);
    for (auto& x : xs)
      x = random_rational(rng);
    const auto d = ExactMatrix::diagonal(xs);
    for (std::size_t k = 1; k <= n; ++k)
      diagonal = diagonal && prodet_minors(d, k) == eval_elementary(k, xs) &&
                 power_trace(d, k) == eval_power_sum(k, xs);
  }
  const auto scope = " on " + std::to_string(o.samples) + " random matrices, n <= " + std::to_string(o.max_n);
  report.record("matrices", "minors = LeVerrier = Cauchy = antisymmetrized" + scope, four_way);
  report.record("matrices", "J_{n+1} via Cauchy polynomial vanishes" + scope, beyond);
  report.record("matrices", "Tr([M,B] M^{k-1}) = 0" + scope, lax);
  report.record("matrices", "similarity invariance (n <= 4)" + scope, similar);
  report.record("matrices", "diagonal matrices reduce to symmetric functions" + scope, diagonal);
}

void verify_operators(const VerifyOptions& o, Report& report) {
  const std::size_t w = std::min<std::size_t>(o.max_k, 10);
  bool heisenberg = true, delta_shift = true, delta_partial = true;
  for (Var i = 1; i <= w; ++i) {
    for (Var j = 1; j <= w; ++j) {
      const auto expected = i == j ? identity_op() : Rational(0) * identity_op();
      heisenberg = heisenberg && op_equal_up_to_weight(commutator(partial_op(i), times_var_op(j)), expected, w);
    }
    delta_shift = delta_shift && op_equal_up_to_weight(commutator(delta_op(), times_var_op(i)),
                                                       Rational(i) * times_var_op(i + 1), w);
    const auto expected = i == 1 ? Rational(0) * identity_op() : Rational(i - 1) * partial_op(i - 1);
    delta_partial = delta_partial && op_equal_up_to_weight(commutator(partial_op(i), delta_op()), expected, w);
  }
  const auto scope = " up to weight " + std::to_string(w);
  report.record("operators", "[D_i, X_j] = delta_ij Id" + scope, heisenberg);
  report.record("operators", "[delta, X_j] = j X_{j+1}" + scope, delta_shift);
  report.record("operators", "[D_j, delta] = (j-1) D_{j-1}" + scope, delta_partial);
  report.record("operators", "[Delta-, Delta+] = -2 X_2" + scope,
                op_equal_up_to_weight(commutator(raising_minus_op(), raising_plus_op()),
                                      Rational(-2) * times_var_op(2), w));
  report.record("operators", "[D_1, Delta-] = Id" + scope,
                op_equal_up_to_weight(commutator(partial_op(1), raising_minus_op()), identity_op(), w));
}

} // namespace

OutputDocument cmd_verify(const VerifyOptions& options) {
  if (options.max_k < 1 || options.max_n < 1)
    throw UsageError("verify: --max-k and --max-n must be at least 1");
  for (const auto& s : options.sections)
    if (std::find(kSections.begin(), kSections.end(), s) == kSections.end())
      throw UsageError("verify: unknown section '" + s + "'");
  auto wanted = [&](const std::string& s) {
    return options.sections.empty() ||
           std::find(options.sections.begin(), options.sections.end(), s) != options.sections.end();
  };

  Rng rng(options.seed);
  Report report;
  if (wanted("polynomials"))
    verify_polynomials(options, report);
  if (wanted("symfun"))
    verify_symfun(options, rng, report);
  if (wanted("classes"))
    verify_classes(options, report);
  if (wanted("matrices"))
    verify_matrices(options, rng, report);
  if (wanted("operators"))
    verify_operators(options, report);
  return report.finish();
}

} // namespace cauchy::cli
