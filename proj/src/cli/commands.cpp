#include "pascal2/commands.hpp"

#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "pascal2/bitrow.hpp"
#include "pascal2/poly.hpp"
#include "pascal2/semigroup.hpp"
#include "pascal2/series.hpp"

namespace pascal2 {

namespace {

// Row values as printed in the literature, n = 0..14.
constexpr std::array<unsigned long, 15> kTableC = {1,   3,   5,    15,   17,   51,    85,   255,
                                                   257, 771, 1285, 3855, 4369, 13107, 21845};

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const BigNat& v) { return v.to_string(); }

Params p1(const char* k, std::uint64_t v) { return {{k, str(v)}}; }
Params p2(const char* k1, std::uint64_t v1, const char* k2, std::uint64_t v2) {
  return {{k1, str(v1)}, {k2, str(v2)}};
}

void add_eq(Report& r, std::string id, Params p, const BigNat& lhs, const BigNat& rhs) {
  r.add(std::move(id), std::move(p), lhs == rhs, str(lhs), str(rhs));
}

// Runs one identity instance; a precondition failure is recorded as a failing
// check rather than aborting the whole suite. CapExceeded propagates: a range
// beyond the cap is a usage error.
template <class Fn>
void guarded(Report& r, const std::string& id, const Params& p, Fn&& fn) {
  try {
    fn();
  } catch (const PreconditionError& e) {
    r.add(id, p, false, std::string("precondition: ") + e.what(), "");
  }
}

void suite_rows(Report& r, const SuiteOptions& o) {
  const std::uint64_t nmax = o.nmax.value_or(1024);
  r.params = p1("nmax", nmax);
  BitRow stepped = row(0);
  for (std::uint64_t n = 0; n <= nmax; ++n) {
    if (n > 0) stepped = step(stepped);
    const BitRow direct = row(n);
    r.add("rows.lucas_vs_ca", p1("n", n), direct == stepped, str(kernel_value(direct)),
          str(kernel_value(stepped)));
    std::ostringstream got;
    got << "length=" << direct.length() << " ends=" << direct.bit(0) << direct.bit(n)
        << " palindrome=" << direct.is_palindrome();
    r.add("rows.shape", p1("n", n), got.str() == "length=" + str(n + 1) + " ends=11 palindrome=1",
          got.str(), "length=" + str(n + 1) + " ends=11 palindrome=1");
  }
}

void suite_theorem1(Report& r, const SuiteOptions& o) {
  const std::uint64_t nmax = o.nmax.value_or(256);
  r.params = p1("nmax", nmax);
  RecursiveCStream stream(o.cap);
  BitRow stepped = row(0);
  for (std::uint64_t n = 0; n <= nmax; ++n) {
    if (n > 0) stepped = step(stepped);
    const BigNat dn = d(n, o.cap);
    add_eq(r, "theorem1.hewgill", p1("n", n), dn, hewgill(n, o.cap));
    add_eq(r, "theorem1.lucas_row", p1("n", n), dn, kernel_value(row(n)));
    add_eq(r, "theorem1.ca_row", p1("n", n), dn, kernel_value(stepped));
    add_eq(r, "theorem1.recursion", p1("n", n), dn, stream.next());
    r.add("theorem1.digits", p1("n", n), dn.bit_length() == n + 1, str(dn.bit_length()), str(n + 1));
    if (n < kTableC.size()) add_eq(r, "theorem1.table", p1("n", n), dn, BigNat(kTableC[n]));
  }
  // Fermat numbers: F(k) = 2 + prod_{i<k} F(i), pairwise coprime.
  BigNat product(1);
  for (unsigned k = 0; k <= 8 && k <= o.cap; ++k) {
    add_eq(r, "fermat.product_recursion", p1("k", k), fermat(k, o.cap), product + BigNat(2));
    product *= fermat(k, o.cap);
    for (unsigned j = 0; j < k; ++j)
      add_eq(r, "fermat.coprime", p2("i", j, "j", k), gcd(fermat(j, o.cap), fermat(k, o.cap)), BigNat(1));
  }
  for (unsigned k = 0; k <= 5; ++k) {
    add_eq(r, "fermat.power_index", p1("k", k), c(std::uint64_t{1} << k, o.cap), fermat(k, o.cap));
    add_eq(r, "fermat.repunit_index", p1("k", k), c((std::uint64_t{1} << k) - 1, o.cap),
           fermat(k, o.cap) - BigNat(2));
  }
  // c(k-1) c(l) = c(l-1) c(k) with l = k + 2^m and 1 <= k-1 <= 2^m - 2.
  for (std::uint64_t m = 2; m <= 6; ++m)
    for (std::uint64_t below = 1; below + 2 <= (std::uint64_t{1} << m); ++below) {
      const IdentityArgs a{.k = below + 1, .l = below + 1 + (std::uint64_t{1} << m), .m = m};
      const Params p = {{"k", str(a.k)}, {"l", str(a.l)}, {"m", str(m)}};
      guarded(r, "C2.12", p, [&] {
        const auto sides = identity_sides(FermatIdentity::SharedTopFactor, a, o.cap);
        add_eq(r, "C2.12", p, sides.lhs, sides.rhs);
      });
    }
  for (std::uint64_t m = 1; m <= 5; ++m)
    for (std::uint64_t l = 0; l <= 32; ++l) {
      const Params p = p2("l", l, "m", m);
      guarded(r, "C2.13", p, [&] {
        const auto sides = identity_sides(FermatIdentity::HalfStepFactor, {.l = l, .m = m}, o.cap);
        add_eq(r, "C2.13", p, sides.lhs, sides.rhs);
      });
    }
}

void suite_glaisher(Report& r, const SuiteOptions& o) {
  const std::uint64_t nmax = o.nmax.value_or(10000);
  r.params = p1("nmax", nmax);
  for (std::uint64_t n = 0; n <= nmax; ++n) {
    r.add("glaisher.ones", p1("n", n), ones(row(n)) == (std::uint64_t{1} << s(n)), str(ones(row(n))),
          str(std::uint64_t{1} << s(n)));
    if (n <= 4096) {
      // Number of Fermat factors of c(n), by trial division.
      const BigNat cn = c(n, o.cap);
      std::uint64_t factors = 0;
      for (unsigned k = 0; k <= o.cap && (std::uint64_t{1} << k) < cn.bit_length(); ++k)
        if (divmod(cn, fermat(k, o.cap)).remainder.is_zero()) ++factors;
      r.add("glaisher.factor_count", p1("n", n), factors == s(n), str(factors), str(s(n)));
    }
  }
}

void suite_addition(Report& r, const SuiteOptions& o) {
  const std::uint64_t nmax = o.nmax.value_or(2048);
  r.params = p1("nmax", nmax);
  for (std::uint64_t sum = 0; sum <= nmax; ++sum) {
    // Every split sum = u + v with u orthogonal to v; expect 2^s(sum) of them.
    std::uint64_t verified = 0;
    std::string witness;
    const BigNat c_sum = c(sum, o.cap);
    for (std::uint64_t u = 0; u <= sum; ++u) {
      if (!orthogonal(u, sum - u)) continue;
      if (c(u, o.cap) * c(sum - u, o.cap) == c_sum) ++verified;
      else if (witness.empty()) witness = "u=" + str(u) + " v=" + str(sum - u);
    }
    const std::uint64_t expected = std::uint64_t{1} << s(sum);
    r.add("addition.orthogonal_splits", p1("sum", sum), verified == expected && witness.empty(),
          witness.empty() ? str(verified) : witness, str(expected));
  }
}

void stephan_point(Report& r, unsigned t, std::uint64_t n, const SuiteOptions& o, Rat* deviation) {
  const Params p = p2("n", n, "t", t);
  guarded(r, "stephan.ratio", p, [&] {
    const Rat ratio = stephan_ratio(t, n, o.cap);
    const Rat limit = stephan_limit(t, o.cap);
    const Rat dev = abs(ratio - limit);
    r.add("stephan.ratio", p, dev < Rat(BigInt(1), BigInt(1000000000)), decimal_render(ratio, 15),
          limit.to_string());
    if (deviation) *deviation = dev;
    // (4 l(a) + 1) / (4 l(a-1) + 1) = 3 F(t-1) / (F(t-1) - 2), exactly.
    const std::uint64_t a = (n << (t - 1)) + (std::uint64_t{1} << (t - 2));
    const Rat exact = Rat(BigNat(4) * l(a, o.cap) + BigNat(1)) / Rat(BigNat(4) * l(a - 1, o.cap) + BigNat(1));
    r.add("stephan.exact_relation", p, exact == limit, exact.to_string(), limit.to_string());
  });
}

void suite_stephan(Report& r, const SuiteOptions& o) {
  static const std::map<unsigned, Rat> kLimits = {{2, Rat(5)},
                                                  {3, Rat(BigInt(17), BigInt(5))},
                                                  {4, Rat(BigInt(257), BigInt(85))},
                                                  {5, Rat(BigInt(65537), BigInt(21845))}};
  std::vector<unsigned> ts;
  if (o.t) {
    if (*o.t < 2 || *o.t > 30) throw UsageError("stephan: --t must be in 2..30");
    ts.push_back(static_cast<unsigned>(*o.t));
  } else {
    ts = {2, 3, 4, 5};
  }
  r.params["t"] = o.t ? str(*o.t) : "2..5";
  r.params["n"] = o.n ? str(*o.n) : "2^4..2^10";

  for (unsigned t : ts) {
    if (auto it = kLimits.find(t); it != kLimits.end())
      r.add("stephan.limit", p1("t", t), stephan_limit(t, o.cap) == it->second,
            stephan_limit(t, o.cap).to_string(), it->second.to_string());
    if (o.n) {
      stephan_point(r, t, *o.n, o, nullptr);
      continue;
    }
    std::optional<Rat> previous;
    bool decreasing = true;
    for (unsigned j = 4; j <= 10; ++j) {
      Rat dev;
      stephan_point(r, t, std::uint64_t{1} << j, o, &dev);
      if (previous && !(dev < *previous)) decreasing = false;
      previous = dev;
    }
    r.add("stephan.monotone", p1("t", t), decreasing, decreasing ? "strictly decreasing" : "not decreasing",
          "strictly decreasing");
  }

  for (unsigned k = 0; k <= 6; ++k) {
    const std::uint64_t index = std::uint64_t{1} << k;
    add_eq(r, "stephan.power_of_two", p1("k", k), l(index, o.cap),
           BigNat::power_of_two((std::uint64_t{2} << k) - 2));
  }

  const std::uint64_t tmax = o.t.value_or(6);
  const std::uint64_t nmax = o.n.value_or(32);
  for (std::uint64_t t = o.t ? tmax : 1; t <= tmax; ++t)
    for (std::uint64_t n = o.n ? nmax : 0; n <= nmax; ++n)
      for (auto id : {FermatIdentity::RepunitShift, FermatIdentity::FermatRatio, FermatIdentity::StephanKey}) {
        if (id == FermatIdentity::StephanKey && t < 2) continue;
        const Params p = p2("n", n, "t", t);
        guarded(r, identity_id(id), p, [&] {
          const auto sides = identity_sides(id, {.t = t, .n = n}, o.cap);
          add_eq(r, identity_id(id), p, sides.lhs, sides.rhs);
        });
      }
}

void add_poly(Report& r, PolyIdentity id, const IdentityArgs& a, Params p) {
  guarded(r, identity_id(id), p, [&] {
    const auto sides = poly_identity_sides(id, a);
    r.add(identity_id(id), p, sides.holds(), sides.exact ? sides.lhs.to_string() : "inexact division",
          sides.rhs.to_string());
  });
}

void suite_poly(Report& r, const SuiteOptions& o) {
  const std::uint64_t nmax = o.nmax.value_or(32);
  const std::uint64_t tmax = o.t.value_or(5);
  r.params = p2("nmax", nmax, "t", tmax);

  for (std::uint64_t n = 0; n <= 1024; ++n) {
    const IntPoly pb = p_binomial(n);
    r.add("poly.binomial_vs_factored", p1("n", n), pb == p_factored(n), pb.to_string(), p_factored(n).to_string());
    bool binary = true;
    for (const auto& [e, coeff] : pb.terms()) binary = binary && coeff == 1;
    r.add("poly.coefficients", p1("n", n), binary && pb.term_count() == (std::uint64_t{1} << s(n)),
          str(pb.term_count()) + (binary ? " ones" : " non-binary"),
          str(std::uint64_t{1} << s(n)) + " ones");
    const std::string want = "1 " + str(std::uint64_t{1} << s(n)) + " " + c(n).to_string();
    const std::string got = poly_eval(pb, Rat(0)).to_string() + " " + poly_eval(pb, Rat(1)).to_string() +
                            " " + poly_eval(pb, Rat(2)).to_string();
    r.add("poly.values_0_1_2", p1("n", n), got == want, got, want);
  }
  for (std::uint64_t n = 0; n <= std::max<std::uint64_t>(nmax, 512) && n <= 512; ++n) {
    add_poly(r, PolyIdentity::EvenDoubling, {.n = n}, p1("n", n));
    add_poly(r, PolyIdentity::OddDoubling, {.n = n}, p1("n", n));
  }
  for (std::uint64_t n = 1; n <= 6; ++n) add_poly(r, PolyIdentity::FermatRecursion, {.n = n}, p1("n", n));
  for (std::uint64_t n = 1; n <= 10; ++n) add_poly(r, PolyIdentity::RepunitQuotient, {.n = n}, p1("n", n));
  for (std::uint64_t m = 1; m <= 5; ++m)
    for (std::uint64_t l = 0; l <= nmax; ++l)
      add_poly(r, PolyIdentity::HalfStepFactor, {.l = l, .m = m}, p2("l", l, "m", m));
  for (std::uint64_t t = 1; t <= tmax; ++t)
    for (std::uint64_t n = 0; n <= nmax; ++n) {
      const IdentityArgs a{.t = t, .n = n};
      const Params p = p2("n", n, "t", t);
      add_poly(r, PolyIdentity::RepunitShift, a, p);
      add_poly(r, PolyIdentity::FermatRatio, a, p);
      if (t >= 2) {
        add_poly(r, PolyIdentity::LowestFactor, a, p);
        add_poly(r, PolyIdentity::StephanKey, a, p);
        if (t > 2 || n > 0) add_poly(r, PolyIdentity::StephanCross, a, p);
      }
    }
  for (std::uint64_t n = 1; n <= 64; ++n)
    add_eq(r, "poly.l_at_2", p1("n", n), BigNat(poly_eval(l_poly(n), Rat(2)).numerator()), l(n));

  const std::array<Rat, 3> zs = {Rat(2), Rat(3), Rat(BigInt(5), BigInt(2))};
  for (const Rat& z : zs)
    for (unsigned t = 2; t <= 5; ++t)
      for (std::uint64_t n = (t == 2 ? 1 : 0); n <= 16; ++n) {
        const Params p = {{"n", str(n)}, {"t", str(t)}, {"z", z.to_string()}};
        guarded(r, "poly.stephan_relation", p, [&] {
          const PolyStephan ps = poly_stephan_ratio(z, t, n);
          r.add("poly.stephan_relation", p, ps.exact_relation, ps.ratio.to_string(), ps.target.to_string());
        });
      }
}

void suite_genfunc(Report& r, const SuiteOptions& o) {
  const std::uint64_t degree = o.degree.value_or(o.nmax.value_or(255));
  const std::uint64_t poly_degree = std::min<std::uint64_t>(degree, 63);
  r.params = p2("degree", degree, "poly_degree", poly_degree);
  const auto numeric = genfunc_numeric(degree);
  for (std::uint64_t n = 0; n <= degree; ++n) {
    add_eq(r, "genfunc.numeric", p1("n", n), numeric[n], c(n, o.cap));
    if (n < kTableC.size()) add_eq(r, "genfunc.table", p1("n", n), numeric[n], BigNat(kTableC[n]));
  }
  const auto poly = genfunc_poly(poly_degree);
  for (std::uint64_t n = 0; n <= poly_degree; ++n)
    r.add("genfunc.poly", p1("n", n), poly[n] == p_factored(n), poly[n].to_string(), p_factored(n).to_string());
}

void suite_semigroup(Report& r, const SuiteOptions& o) {
  const std::uint64_t terms = o.terms.value_or(o.nmax.value_or(1000));
  if (terms < 7) throw UsageError("semigroup: --terms must be at least 7");
  r.params = p1("terms", terms);
  const auto elems = enumerate_q(terms, o.cap);

  const IntPoly z = IntPoly::z();
  const std::array<IntPoly, 7> listed = {IntPoly(1),
                                         z + IntPoly(1),
                                         F_poly(1),
                                         poly_pow(z + IntPoly(1), 2),
                                         (z + IntPoly(1)) * F_poly(1),
                                         F_poly(2),
                                         poly_pow(F_poly(1), 2)};
  for (std::size_t i = 0; i < listed.size(); ++i)
    r.add("semigroup.listed", p1("i", i), q_poly(elems[i]) == listed[i], q_poly(elems[i]).to_string(),
          listed[i].to_string());

  std::string increasing = "strictly increasing";
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (!(elems[i - 1].key() < elems[i].key())) {
      increasing = "not increasing at i=" + str(i);
      break;
    }
  r.add("semigroup.keys_increasing", {}, increasing == "strictly increasing", increasing, "strictly increasing");

  std::size_t bad_eval = 0;
  for (const auto& e : elems)
    if (poly_eval(q_poly(e), Rat(2)) != Rat(e.key())) ++bad_eval;
  r.add("semigroup.value_at_2", {}, bad_eval == 0, str(bad_eval) + " mismatches", "0 mismatches");

  // Squarefree keys versus sorted {d(m)} up to the last enumerated key.
  std::vector<BigNat> squarefree;
  for (const auto& e : elems)
    if (is_squarefree(e)) squarefree.push_back(e.key());
  std::vector<BigNat> ds;
  for (std::uint64_t m = 0;; ++m) {
    BigNat dm = d(m, o.cap);
    if (dm > elems.back().key()) break;
    ds.push_back(std::move(dm));
  }
  r.add("semigroup.squarefree_is_d", {}, squarefree == ds, str(squarefree.size()) + " squarefree keys",
        str(ds.size()) + " values of d");

  const auto euler = euler_partial_sums(Rat(2), 1, terms);
  bool euler_ok = true;
  std::optional<std::size_t> reached;
  for (std::size_t i = 0; i < euler.size(); ++i) {
    if (!(euler[i] < Rat(2)) || (i > 0 && !(euler[i - 1] < euler[i]))) euler_ok = false;
    if (!reached && euler[i] > Rat(BigInt(199), BigInt(100))) reached = i + 1;
  }
  r.add("semigroup.euler_increasing_below_2", {}, euler_ok, decimal_render(euler.back(), 12), "< 2");
  r.add("semigroup.euler_exceeds_1.99", {}, reached.has_value(),
        reached ? "N=" + str(*reached) : "not reached", "N<=" + str(terms));

  const auto moebius = moebius_partial_sums(Rat(2), 1, terms);
  std::optional<std::size_t> close;
  for (std::size_t i = 0; i < moebius.size() && !close; ++i)
    if (abs(moebius[i] - Rat(BigInt(1), BigInt(2))) < Rat(BigInt(1), BigInt(100))) close = i + 1;
  r.add("semigroup.moebius_near_half", {}, close.has_value(), close ? "N=" + str(*close) : "not reached",
        "N<=" + str(terms));
}

}  // namespace

std::string cmd_value(const std::string& seq, std::uint64_t n, const std::string& method, unsigned cap) {
  if (!method.empty() && seq != "c") throw UsageError("--method applies only to seq c");
  if (seq == "c") {
    if (method.empty() || method == "fermat") return c(n, cap).to_string();
    if (method == "ca") return kernel_value(row_by_iteration(n)).to_string();
    if (method == "hewgill") return hewgill(n, cap).to_string();
    if (method == "recursion") return c_stream_recursive(n, cap).back().to_string();
    throw UsageError("unknown method '" + method + "' (fermat, ca, hewgill, recursion)");
  }
  if (seq == "l") return l(n, cap).to_string();
  if (seq == "d") return d(n, cap).to_string();
  if (seq == "fermat") {
    if (n > cap) throw CapExceeded("fermat index " + str(n) + " exceeds cap " + str(cap));
    return fermat(static_cast<unsigned>(n), cap).to_string();
  }
  if (seq == "p") return p_factored(n).to_string();
  if (seq == "q") {
    if (n >= 10000000) throw UsageError("q index too large");
    return q_poly(enumerate_q(n + 1, cap).back()).to_string();
  }
  throw UsageError("unknown sequence '" + seq + "' (c, l, d, fermat, p, q)");
}

Report cmd_verify(const std::string& suite, const SuiteOptions& opts) {
  static const std::map<std::string, std::function<void(Report&, const SuiteOptions&)>> kSuites = {
      {"rows", suite_rows},         {"theorem1", suite_theorem1}, {"glaisher", suite_glaisher},
      {"addition", suite_addition}, {"stephan", suite_stephan},   {"poly", suite_poly},
      {"genfunc", suite_genfunc},   {"semigroup", suite_semigroup}};
  const auto it = kSuites.find(suite);
  if (it == kSuites.end()) throw UsageError("unknown suite '" + suite + "'");
  Report r;
  r.suite = suite;
  it->second(r, opts);
  return r;
}

namespace {

// Nearest D-digit decimal, halves away from zero.
std::string rounded(const Rat& x, unsigned digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits + 1);
  const Rat half(BigInt(5), scale);
  return decimal_render(x.sign() < 0 ? x - half : x + half, digits);
}

}  // namespace

int verify_exit_code(const Report& report) { return report.pass() ? 0 : 1; }

std::string cmd_series(const std::string& id, std::optional<std::uint64_t> terms, unsigned digits) {
  if (digits == 0) throw UsageError("--digits must be positive");
  const Rat z(2);
  if (id == "6.12") {
    const std::uint64_t n = terms.value_or(64);
    const BoundedSum sum = sum_inv_c(n);
    return rounded(sum.partial, digits) + "\nsum of 1/c(n) for n=0.." + str(n) + "; tail < 2^-" +
           str(n) + "\n";
  }
  if (id == "6.16") {
    const std::uint64_t n = terms.value_or(100);
    return rounded(signed_sum_inv_p(z, n), digits) + "\ntarget 1/2; |tail| < 2^-" + str(n) + "\n";
  }
  if (id == "6.19") {
    const std::uint64_t n = terms.value_or(1000);
    if (n == 0) throw UsageError("--terms must be positive");
    return rounded(euler_sum_q(z, 1, n), digits) + "\n" + str(n) +
           " semigroup terms; increases toward target 2\n";
  }
  if (id == "6.22") {
    const std::uint64_t n = terms.value_or(1000);
    if (n == 0) throw UsageError("--terms must be positive");
    return rounded(moebius_sum_q(z, 1, n), digits) + "\n" + str(n) +
           " semigroup terms; target 1/2\n";
  }
  throw UsageError("unknown series '" + id + "' (6.12, 6.16, 6.19, 6.22)");
}

std::string cmd_bfile(const std::string& seq, std::uint64_t nmax, unsigned cap) {
  if (seq != "c" && seq != "l") throw UsageError("bfile supports c and l");
  std::string out;
  for (std::uint64_t n = 0; n <= nmax; ++n)
    out += str(n) + " " + (seq == "c" ? c(n, cap) : l(n, cap)).to_string() + "\n";
  return out;
}

}  // namespace pascal2
