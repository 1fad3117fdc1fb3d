#include "pprime/torus_search.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pprime/bigint.hpp"
#include "pprime/landau.hpp"
#include "pprime/lie_bounds.hpp"

namespace pprime
{

namespace
{

struct Field
{
  std::uint64_t q;
  std::uint64_t r;
  std::uint64_t f;
};

BigInt power(std::uint64_t q, std::uint64_t e) { return pow(big(q), static_cast<unsigned long>(e)); }

struct ClassicalTorus
{
  const char *family;
  const char *formula;
  std::uint64_t min_n;
  bool q2_only;
  std::uint64_t field_mult;  // u ranges over divisors of field_mult * f
  std::function<BigInt(std::uint64_t q, std::uint64_t n)> order;
  std::function<std::uint64_t(std::uint64_t n)> automizer;
  std::function<std::string(std::uint64_t q, std::uint64_t n)> name;
};

std::string group_name(const char *prefix, std::uint64_t n, const char *suffix, std::uint64_t q)
{
  return prefix + std::to_string(n) + suffix + "(" + std::to_string(q) + ")";
}

const std::vector<ClassicalTorus> &classical_tori()
{
  auto symplectic = [](std::uint64_t q, std::uint64_t n) { return group_name("S", 2 * n, "", q); };
  auto orth_plus = [](std::uint64_t q, std::uint64_t n) { return group_name("O", 2 * n, "^+", q); };
  auto orth_minus = [](std::uint64_t q, std::uint64_t n) { return group_name("O", 2 * n, "^-", q); };
  auto linear = [](std::uint64_t q, std::uint64_t n) { return group_name("L", n, "", q); };
  auto unitary = [](std::uint64_t q, std::uint64_t n) { return group_name("U", n, "", q); };
  auto sign = [](std::uint64_t e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); };

  static const std::vector<ClassicalTorus> tori{
      {"bc", "(q^n+1)/gcd(2,q-1)", 2, false, 1,
       [](std::uint64_t q, std::uint64_t n) { return BigInt((power(q, n) + 1) / gcd(2, q - 1)); },
       [](std::uint64_t n) { return 2 * n; }, symplectic},
      {"bc", "(q^n-1)/gcd(2,q-1)", 2, false, 1,
       [](std::uint64_t q, std::uint64_t n) { return BigInt((power(q, n) - 1) / gcd(2, q - 1)); },
       [](std::uint64_t n) { return 2 * n; }, symplectic},
      {"d", "(q^n-1)/gcd(4,q^n-1)", 4, false, 1,
       [](std::uint64_t q, std::uint64_t n) {
         const BigInt t = power(q, n) - 1;
         return BigInt(t / gcd(4, BigInt(t % 4).get_ui()));
       },
       [](std::uint64_t n) { return n; }, orth_plus},
      {"d", "q^(n-1)-1", 4, true, 1,
       [](std::uint64_t q, std::uint64_t n) { return BigInt(power(q, n - 1) - 1); },
       [](std::uint64_t n) { return 2 * (n - 1); }, orth_plus},
      {"2d", "(q^n+1)/gcd(2,q^n+1)", 4, false, 2,
       [](std::uint64_t q, std::uint64_t n) {
         const BigInt t = power(q, n) + 1;
         return BigInt(t % 2 == 0 ? BigInt(t / 2) : t);
       },
       [](std::uint64_t n) { return n; }, orth_minus},
      {"2d", "q^(n-1)+1", 4, true, 2,
       [](std::uint64_t q, std::uint64_t n) { return BigInt(power(q, n - 1) + 1); },
       [](std::uint64_t n) { return 2 * (n - 1); }, orth_minus},
      {"a", "(q^n-1)/(q-1)/gcd(n,q-1)", 2, false, 1,
       [](std::uint64_t q, std::uint64_t n) {
         return BigInt((power(q, n) - 1) / (q - 1) / gcd(n, q - 1));
       },
       [](std::uint64_t n) { return n; }, linear},
      {"a", "(q^(n-1)-1)/gcd(n,q-1)", 2, false, 1,
       [](std::uint64_t q, std::uint64_t n) {
         return BigInt((power(q, n - 1) - 1) / gcd(n, q - 1));
       },
       [](std::uint64_t n) { return n == 2 ? std::uint64_t{2} : n - 1; }, linear},
      {"2a", "(q^n-(-1)^n)/(q+1)/gcd(n,q+1)", 3, false, 2,
       [sign](std::uint64_t q, std::uint64_t n) {
         return BigInt((power(q, n) - sign(n)) / (q + 1) / gcd(n, q + 1));
       },
       [](std::uint64_t n) { return n; }, unitary},
      {"2a", "(q^(n-1)-(-1)^(n-1))/gcd(n,q+1)", 3, false, 2,
       [sign](std::uint64_t q, std::uint64_t n) {
         return BigInt((power(q, n - 1) - sign(n - 1)) / gcd(n, q + 1));
       },
       [](std::uint64_t n) { return n - 1; }, unitary},
  };
  return tori;
}

std::string with_extension(std::string base, std::uint64_t u)
{
  return u > 1 ? base + "." + std::to_string(u) : base;
}

std::string identify(const std::string &label)
{
  if (label == "L2(4)" || label == "L2(5)")
  {
    return "A5";
  }
  if (label == "L2(9)")
  {
    return "A6";
  }
  return {};
}

// Hits for torus order t and every automizer base * u with u | bound.
void collect(const BigInt &t, std::uint64_t base, std::uint64_t bound,
             const std::function<void(std::uint64_t u, std::uint64_t m, std::uint64_t p)> &emit)
{
  if (t < 5 || !t.fits_ulong_p())
  {
    return;
  }
  const std::uint64_t p = t.get_ui();
  for (std::uint64_t u : divisors(bound))
  {
    const std::uint64_t m = base * u;
    if (m * m + 1 == p && is_prime(p))
    {
      emit(u, m, p);
    }
  }
}

std::vector<TorusHit> hits_for_field(const ClassicalTorus &torus, const Field &field,
                                     std::uint64_t n_max)
{
  std::vector<TorusHit> hits;
  if (torus.q2_only && field.q != 2)
  {
    return hits;
  }
  for (std::uint64_t n = torus.min_n; n <= n_max; ++n)
  {
    const BigInt t = torus.order(field.q, n);
    collect(t, torus.automizer(n), torus.field_mult * field.f,
            [&](std::uint64_t u, std::uint64_t m, std::uint64_t p) {
              TorusHit h;
              h.family = torus.family;
              h.formula = torus.formula;
              h.q = field.q;
              h.r = field.r;
              h.f = field.f;
              h.n = n;
              h.u = u;
              h.p = p;
              h.m = m;
              h.label = with_extension(torus.name(field.q, n), u);
              h.identified = identify(h.label);
              hits.push_back(std::move(h));
            });
  }
  return hits;
}

void sort_unique(std::vector<TorusHit> &hits)
{
  std::sort(hits.begin(), hits.end(), [](const TorusHit &a, const TorusHit &b) {
    return std::tie(a.p, a.label) < std::tie(b.p, b.label);
  });
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const TorusHit &a, const TorusHit &b) {
                           return a.p == b.p && a.label == b.label;
                         }),
             hits.end());
}

struct ExceptionalTorus
{
  const char *series;
  const char *formula;
  std::uint64_t r;          // required characteristic, 0 for any
  bool odd_power;           // q = r^(2k+1), k >= 1
  std::uint64_t automizer;
  std::function<std::uint64_t(std::uint64_t r)> field_mult;
  std::function<BigInt(const Field &)> order;
};

// sqrt(r q) for q = r^(2k+1).
BigInt twisted_root(const Field &x) { return power(x.r, (x.f + 1) / 2); }

const std::vector<ExceptionalTorus> &exceptional_tori()
{
  auto plain = [](std::uint64_t) -> std::uint64_t { return 1; };
  auto phi = [](std::uint64_t d) {
    return [d](const Field &x) { return cyclotomic_value(d, x.q); };
  };
  // Phi_d1 Phi_d2 / gcd(2, q - 1)
  auto phi_pair = [](std::uint64_t d1, std::uint64_t d2) {
    return [=](const Field &x) {
      const BigInt v = cyclotomic_value(d1, x.q) * cyclotomic_value(d2, x.q);
      return BigInt(v / gcd(2, x.q - 1));
    };
  };
  static const std::vector<ExceptionalTorus> tori{
      {"2B2", "q-1", 2, true, 2, plain, [](const Field &x) { return BigInt(x.q - 1); }},
      {"2B2", "q+sqrt(2q)+1", 2, true, 4, plain,
       [](const Field &x) { return BigInt(x.q + twisted_root(x) + 1); }},
      {"2B2", "q-sqrt(2q)+1", 2, true, 4, plain,
       [](const Field &x) { return BigInt(x.q - twisted_root(x) + 1); }},
      {"2G2", "q-1", 3, true, 2, plain, [](const Field &x) { return BigInt(x.q - 1); }},
      {"2G2", "q+sqrt(3q)+1", 3, true, 6, plain,
       [](const Field &x) { return BigInt(x.q + twisted_root(x) + 1); }},
      {"2G2", "q-sqrt(3q)+1", 3, true, 6, plain,
       [](const Field &x) { return BigInt(x.q - twisted_root(x) + 1); }},
      {"G2", "q^2+q+1", 0, false, 6, [](std::uint64_t r) -> std::uint64_t { return r == 3 ? 2 : 1; },
       phi(3)},
      {"G2", "q^2-q+1", 0, false, 6, [](std::uint64_t r) -> std::uint64_t { return r == 3 ? 2 : 1; },
       phi(6)},
      {"3D4", "q^4-q^2+1", 0, false, 4, [](std::uint64_t) -> std::uint64_t { return 3; }, phi(12)},
      {"2F4", "q^2-q+1", 2, true, 12, plain,
       [](const Field &x) { return BigInt(x.q * x.q - x.q + 1); }},
      {"2F4", "q^2+sqrt(2q)q+q+sqrt(2q)+1", 2, true, 12, plain,
       [](const Field &x) {
         const BigInt s = twisted_root(x);
         return BigInt(big(x.q) * x.q + s * x.q + x.q + s + 1);
       }},
      {"2F4", "q^2-sqrt(2q)q+q-sqrt(2q)+1", 2, true, 12, plain,
       [](const Field &x) {
         const BigInt s = twisted_root(x);
         return BigInt(big(x.q) * x.q - s * x.q + x.q - s + 1);
       }},
      {"F4", "Phi8", 0, false, 8, [](std::uint64_t r) -> std::uint64_t { return r == 2 ? 2 : 1; },
       phi(8)},
      {"F4", "Phi12", 0, false, 12, [](std::uint64_t r) -> std::uint64_t { return r == 2 ? 2 : 1; },
       phi(12)},
      {"E6", "Phi9/gcd(3,q-1)", 0, false, 9, [](std::uint64_t) -> std::uint64_t { return 2; },
       [](const Field &x) { return BigInt(cyclotomic_value(9, x.q) / gcd(3, x.q - 1)); }},
      {"2E6", "Phi18/gcd(3,q+1)", 0, false, 9, [](std::uint64_t) -> std::uint64_t { return 2; },
       [](const Field &x) { return BigInt(cyclotomic_value(18, x.q) / gcd(3, x.q + 1)); }},
      {"E7", "Phi7Phi1/gcd(2,q-1)", 0, false, 14, plain, phi_pair(7, 1)},
      {"E7", "Phi14Phi2/gcd(2,q-1)", 0, false, 14, plain, phi_pair(14, 2)},
      {"E7", "Phi9Phi1/gcd(2,q-1)", 0, false, 18, plain, phi_pair(9, 1)},
      {"E7", "Phi18Phi2/gcd(2,q-1)", 0, false, 18, plain, phi_pair(18, 2)},
      {"E8", "Phi15", 0, false, 30, plain, phi(15)},
      {"E8", "Phi30", 0, false, 30, plain, phi(30)},
      {"E8", "Phi24", 0, false, 24, plain, phi(24)},
      {"E8", "Phi20", 0, false, 20, plain, phi(20)},
  };
  return tori;
}

}  // namespace

std::vector<TorusHit> search(std::uint64_t q_max, std::uint64_t n_max, Execution exec)
{
  std::vector<Field> fields;
  for (const auto &pp : prime_powers(q_max))
  {
    fields.push_back({pp.q, pp.r, pp.f});
  }
  const auto &tori = classical_tori();
  const std::size_t jobs = tori.size() * fields.size();
  std::vector<std::vector<TorusHit>> chunks(jobs);
  auto job = [&](std::size_t i) {
    chunks[i] = hits_for_field(tori[i / fields.size()], fields[i % fields.size()], n_max);
  };
  if (exec == Execution::Parallel)
  {
    ExceptionSlot errors;
    const auto total = static_cast<std::int64_t>(jobs);
    PPRIME_OMP(parallel for schedule(dynamic, 4))
    for (std::int64_t i = 0; i < total; ++i)
    {
      errors.run([&] { job(static_cast<std::size_t>(i)); });
    }
    errors.rethrow();
  }
  else
  {
    for (std::size_t i = 0; i < jobs; ++i)
    {
      job(i);
    }
  }
  std::vector<TorusHit> hits;
  for (auto &c : chunks)
  {
    hits.insert(hits.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  sort_unique(hits);
  return hits;
}

std::vector<TorusHit> exceptional_series_hits(std::uint64_t q_max)
{
  std::vector<TorusHit> hits;
  for (const auto &pp : prime_powers(q_max))
  {
    const Field field{pp.q, pp.r, pp.f};
    for (const auto &torus : exceptional_tori())
    {
      if (torus.r != 0 && torus.r != pp.r)
      {
        continue;
      }
      if (torus.odd_power && (pp.f % 2 == 0 || pp.f < 3))
      {
        continue;
      }
      collect(torus.order(field), torus.automizer, torus.field_mult(pp.r) * pp.f,
              [&](std::uint64_t u, std::uint64_t m, std::uint64_t p) {
                TorusHit h;
                h.family = torus.series;
                h.formula = torus.formula;
                h.q = pp.q;
                h.r = pp.r;
                h.f = pp.f;
                h.u = u;
                h.p = p;
                h.m = m;
                h.label = with_extension(std::string(torus.series) + "(" + std::to_string(pp.q) + ")", u);
                hits.push_back(std::move(h));
              });
    }
  }
  sort_unique(hits);
  return hits;
}

std::vector<TorusHit> defining_characteristic_hits(std::uint64_t limit)
{
  std::vector<TorusHit> hits;
  for (const auto &lp : landau_primes(limit))
  {
    if (lp.degenerate)
    {
      continue;
    }
    const std::uint64_t p = lp.p;
    const std::uint64_t automizer = (p - 1) / gcd(p - 1, 2);
    if (automizer == lp.m)
    {
      TorusHit h;
      h.family = "a";
      h.formula = "defining characteristic";
      h.q = p;
      h.r = p;
      h.f = 1;
      h.n = 2;
      h.p = p;
      h.m = automizer;
      h.label = "L2(" + std::to_string(p) + ")";
      h.identified = identify(h.label);
      hits.push_back(std::move(h));
    }
  }
  return hits;
}

std::vector<AlternatingRow> alternating_check(std::uint64_t limit)
{
  std::vector<AlternatingRow> rows;
  for (const auto &lp : landau_primes(limit))
  {
    AlternatingRow row;
    row.p = lp.p;
    row.half = (lp.p - 1) / 2;
    row.root = lp.m;
    row.holds = row.half <= row.root;
    if (row.holds && lp.p >= 5)
    {
      row.candidates = {"A5", "A6"};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<LabelledPrime> &expected_lie_type_hits()
{
  static const std::vector<LabelledPrime> expected{
      {5, "A5"},          {5, "A6"},         {5, "L2(11)"},      {5, "L3(4)"},
      {17, "S4(4)"},      {17, "O8^-(2)"},   {17, "L2(16).2"},   {37, "2G2(27)"},
      {37, "U3(11).2"},   {257, "S16(2)"},   {257, "O18^-(2)"},  {257, "L2(256).8"},
      {257, "S4(16).4"},  {257, "S8(4).2"},  {257, "O8^-(4).4"}, {257, "O16^-(2).2"},
      {257, "F4(4).2"},
  };
  return expected;
}

Reconciliation reconcile_with_theorem(const std::vector<TorusHit> &hits)
{
  std::set<LabelledPrime> computed;
  for (const auto &h : hits)
  {
    computed.emplace(h.p, h.identified.empty() ? h.label : h.identified);
  }
  const std::set<LabelledPrime> expected(expected_lie_type_hits().begin(),
                                         expected_lie_type_hits().end());
  Reconciliation out;
  out.computed.assign(computed.begin(), computed.end());
  std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                      std::back_inserter(out.missing));
  std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                      std::back_inserter(out.extra));
  return out;
}

std::vector<TorusHit> lie_type_hits(std::uint64_t q_max, std::uint64_t n_max, Execution exec)
{
  auto hits = search(q_max, n_max, exec);
  for (auto &h : exceptional_series_hits(q_max))
  {
    hits.push_back(std::move(h));
  }
  for (auto &h : defining_characteristic_hits(q_max))
  {
    hits.push_back(std::move(h));
  }
  sort_unique(hits);
  return hits;
}

}  // namespace pprime
