#include "cauchy/cli.hpp"

#include "cauchy/errors.hpp"
#include "cauchy/invariants.hpp"
#include "cauchy/operators.hpp"
#include "cauchy/partitions.hpp"
#include "cauchy/random.hpp"
#include "cauchy/symfun.hpp"
#include "cauchy/symgroup.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace cauchy::cli {

namespace {

using nlohmann::json;

json strings(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values)
    out.push_back(v.to_string());
  return out;
}

json terms_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"monomial", m.to_string()}, {"coefficient", c.to_string()}});
  return out;
}

// Left-aligned columns separated by two spaces.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c)
        width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size())
        line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::vector<std::size_t> as_vector(const PartitionSymbol& alpha) {
  auto v = alpha.multiplicities();
  while (!v.empty() && v.back() == 0)
    v.pop_back();
  return v;
}

} // namespace

std::string OutputDocument::render(Format format) const {
  if (format == Format::structured)
    return payload.dump(2) + "\n";
  return text;
}

std::string method_name(Method m) {
  switch (m) {
  case Method::minors:
    return "minors";
  case Method::leverrier:
    return "leverrier";
  case Method::cauchy:
    return "cauchy";
  case Method::antisym:
    return "antisym";
  }
  return "?";
}

OutputDocument cmd_jpoly(const JpolyOptions& options) {
  if (options.k < 1)
    throw UsageError("jpoly: k must be at least 1");
  const auto k = options.k;
  const std::string variant = options.plus ? "plus" : "minus";

  OutputDocument doc;
  doc.payload = {{"command", "jpoly"}, {"k", k}, {"variant", variant}};

  auto iterative = [&] { return options.plus ? cauchy_k(k) : cauchy_j(k); };
  auto closed = [&] { return options.plus ? cauchy_k_closed(k) : cauchy_j_closed(k); };

  if (options.check) {
    const auto a = iterative();
    const auto b = closed();
    const bool agree = a == b;
    doc.payload["iterative"] = a.to_string();
    doc.payload["closed"] = b.to_string();
    doc.payload["agree"] = agree;
    doc.text = "iterative: " + a.to_string() + "\nclosed:    " + b.to_string() +
               "\nagree: " + (agree ? "yes" : "no") + "\n";
    doc.exit_code = agree ? kSuccess : kVerificationFailure;
    return doc;
  }

  const auto p = options.closed ? closed() : iterative();
  doc.payload["form"] = options.closed ? "closed" : "iterative";
  doc.payload["polynomial"] = p.to_string();
  doc.payload["terms"] = terms_json(p);
  doc.text = p.to_string() + "\n";
  return doc;
}

OutputDocument cmd_classes(std::size_t n, bool verify) {
  if (n < 1)
    throw UsageError("classes: n must be at least 1");
  constexpr std::size_t kVerifyCeiling = 8;
  ClassSizes brute;
  if (verify)
    brute = class_sizes(n, kVerifyCeiling);

  OutputDocument doc;
  doc.payload = {{"command", "classes"}, {"n", n}, {"rows", json::array()}};
  std::vector<std::vector<std::string>> table{{"partition", "symbol", "size"}};
  if (verify)
    table[0].push_back("brute");

  Integer total = 0;
  bool all_match = true;
  for (const auto& lambda : enumerate_partitions(n)) {
    const auto alpha = to_symbol(lambda);
    const auto h = cauchy_h(alpha);
    total += h;
    json row = {{"partition", lambda.parts()}, {"symbol", as_vector(alpha)}, {"size", h.get_str()}};
    std::vector<std::string> line{lambda.to_string(), alpha.to_string(), h.get_str()};
    if (verify) {
      auto it = brute.find(alpha);
      const Integer counted = it == brute.end() ? Integer(0) : it->second;
      const bool match = counted == h;
      all_match = all_match && match;
      row["brute"] = counted.get_str();
      row["match"] = match;
      line.push_back(counted.get_str() + (match ? "" : "  MISMATCH"));
    }
    doc.payload["rows"].push_back(row);
    table.push_back(std::move(line));
  }
  doc.payload["total"] = total.get_str();
  doc.text = format_table(table) + "total " + total.get_str() + "\n";
  if (verify) {
    doc.payload["verified"] = all_match;
    doc.text += std::string("brute-force match: ") + (all_match ? "yes" : "no") + "\n";
    doc.exit_code = all_match ? kSuccess : kVerificationFailure;
  }
  return doc;
}

OutputDocument cmd_invariants(const ExactMatrix& a, const InvariantsOptions& options) {
  const auto n = a.size();
  const bool defaulted = options.methods.empty();
  std::vector<Method> methods = options.methods;
  if (defaulted)
    methods = {Method::minors, Method::leverrier, Method::cauchy, Method::antisym};

  std::vector<Rational> traces;
  for (std::size_t k = 1; k <= n; ++k)
    traces.push_back(power_trace(a, k));

  OutputDocument doc;
  doc.payload = {{"command", "invariants"}, {"n", n}, {"I", strings(traces)}};
  json j_values = json::object();
  json skipped = json::array();

  std::vector<std::pair<Method, std::vector<Rational>>> results;
  for (auto method : methods) {
    std::vector<Rational> values;
    if (method == Method::antisym && !antisym_within_budget(n, n)) {
      if (defaulted) {
        skipped.push_back(method_name(method));
        continue;
      }
      throw BudgetExceeded("antisym: k!*n^k exceeds the enumeration budget for n = " +
                           std::to_string(n));
    }
    if (method == Method::leverrier) {
      values = leverrier_coefficients(a);
    } else {
      for (std::size_t k = 1; k <= n; ++k) {
        switch (method) {
        case Method::minors:
          values.push_back(prodet_minors(a, k));
          break;
        case Method::cauchy:
          values.push_back(prodet_cauchy(a, k));
          break;
        case Method::antisym:
          values.push_back(prodet_antisym(a, k));
          break;
        case Method::leverrier:
          break;
        }
      }
    }
    j_values[method_name(method)] = strings(values);
    results.emplace_back(method, std::move(values));
  }

  json disagreements = json::array();
  for (std::size_t m = 1; m < results.size(); ++m)
    for (std::size_t k = 0; k < n; ++k)
      if (results[m].second[k] != results[0].second[k])
        disagreements.push_back({{"k", k + 1},
                                 {"method", method_name(results[m].first)},
                                 {"value", results[m].second[k].to_string()},
                                 {"reference", method_name(results[0].first)},
                                 {"expected", results[0].second[k].to_string()}});
  const bool agree = disagreements.empty();

  doc.payload["J"] = j_values;
  doc.payload["skipped"] = skipped;
  doc.payload["agree"] = agree;
  doc.payload["disagreements"] = disagreements;

  std::ostringstream text;
  text << "n = " << n << "\n";
  std::vector<std::vector<std::string>> table{{"k", "I_k"}};
  for (const auto& [method, values] : results)
    table[0].push_back("J_k[" + method_name(method) + "]");
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> row{std::to_string(k + 1), traces[k].to_string()};
    for (const auto& [method, values] : results)
      row.push_back(values[k].to_string());
    table.push_back(std::move(row));
  }
  text << format_table(table);
  for (const auto& s : skipped)
    text << "skipped " << s.get<std::string>() << " (enumeration budget)\n";
  for (const auto& d : disagreements)
    text << "DISAGREE J_" << d["k"].get<std::size_t>() << ": " << d["method"].get<std::string>()
         << " = " << d["value"].get<std::string>() << ", " << d["reference"].get<std::string>()
         << " = " << d["expected"].get<std::string>() << "\n";
  text << "agreement: " << (agree ? "yes" : "no") << "\n";
  doc.text = text.str();
  doc.exit_code = agree ? kSuccess : kVerificationFailure;
  return doc;
}

OutputDocument cmd_convert(std::size_t k, Target to, const std::vector<std::string>& values) {
  if (k < 1)
    throw UsageError("convert: k must be at least 1");
  if (values.size() < k)
    throw UsageError("convert: degree " + std::to_string(k) + " needs " + std::to_string(k) +
                     " power sums, got " + std::to_string(values.size()));
  std::vector<Rational> sums;
  for (const auto& v : values)
    sums.push_back(Rational::parse(v));
  const Rational result =
      to == Target::elementary ? c_from_power_sums(k, sums) : w_from_power_sums(k, sums);

  OutputDocument doc;
  doc.payload = {{"command", "convert"},
                 {"k", k},
                 {"to", to == Target::elementary ? "elementary" : "wronski"},
                 {"power_sums", strings(sums)},
                 {"value", result.to_string()}};
  doc.text = result.to_string() + "\n";
  return doc;
}

OutputDocument cmd_bench(const BenchOptions& options) {
  using Clock = std::chrono::steady_clock;
  if (options.nmax < 1 || options.kmax < 1 || options.repeats < 1)
    throw UsageError("bench: nmax, kmax and repeats must be at least 1");

  Rng rng(options.seed);
  OutputDocument doc;
  doc.payload = {{"command", "bench"},
                 {"seed", options.seed},
                 {"repeats", options.repeats},
                 {"methods", {"minors", "leverrier", "cauchy", "antisym"}},
                 {"rows", json::array()}};
  std::string csv = "n,k_max,minors_ns,leverrier_ns,cauchy_ns,antisym_ns,agree\n";
  bool all_agree = true;

  for (std::size_t n = 1; n <= options.nmax; ++n) {
    const auto a = random_integer_matrix(rng, n);
    const auto kk = std::min(options.kmax, n);

    auto timed = [&](auto&& compute) {
      std::vector<Rational> values;
      const auto start = Clock::now();
      for (std::size_t r = 0; r < options.repeats; ++r)
        values = compute();
      const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
      return std::make_pair(values, static_cast<long long>(elapsed.count() / options.repeats));
    };
    auto per_k = [&](auto&& fn) {
      return [&, fn] {
        std::vector<Rational> v;
        for (std::size_t k = 1; k <= kk; ++k)
          v.push_back(fn(a, k));
        return v;
      };
    };

    auto [minors, minors_ns] = timed(per_k([](const ExactMatrix& m, std::size_t k) { return prodet_minors(m, k); }));
    auto [leverrier, leverrier_ns] = timed([&] {
      auto all = leverrier_coefficients(a);
      all.resize(kk);
      return all;
    });
    auto [cauchy, cauchy_ns] = timed(per_k([](const ExactMatrix& m, std::size_t k) { return prodet_cauchy(m, k); }));

    const bool antisym_ok = antisym_within_budget(n, kk);
    std::vector<Rational> antisym;
    long long antisym_ns = 0;
    if (antisym_ok)
      std::tie(antisym, antisym_ns) =
          timed(per_k([](const ExactMatrix& m, std::size_t k) { return prodet_antisym(m, k); }));

    const bool agree = minors == leverrier && minors == cauchy && (!antisym_ok || minors == antisym);
    all_agree = all_agree && agree;

    json row = {{"n", n},
                {"k_max", kk},
                {"J", strings(minors)},
                {"minors_ns", minors_ns},
                {"leverrier_ns", leverrier_ns},
                {"cauchy_ns", cauchy_ns},
                {"agree", agree}};
    row["antisym_ns"] = antisym_ok ? json(antisym_ns) : json("skipped");
    doc.payload["rows"].push_back(row);

    csv += std::to_string(n) + "," + std::to_string(kk) + "," + std::to_string(minors_ns) + "," +
           std::to_string(leverrier_ns) + "," + std::to_string(cauchy_ns) + "," +
           (antisym_ok ? std::to_string(antisym_ns) : std::string("skipped")) + "," +
           (agree ? "yes" : "no") + "\n";
  }
  doc.payload["agree"] = all_agree;
  doc.text = csv;
  doc.exit_code = all_agree ? kSuccess : kVerificationFailure;
  return doc;
}

} // namespace cauchy::cli
