#include "divinv/checks.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "divinv/errors.hpp"

namespace divinv {

void SuiteOutcome::check(const std::string& part, bool ok, const std::function<std::string()>& witness) {
  auto& c = parts[part];
  ++c.checks;
  ++checks;
  if (ok) return;
  ++c.violations;
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(part + ": " + witness());
}

void SuiteOutcome::merge(const SuiteOutcome& other, const std::string& prefix) {
  for (const auto& [k, c] : other.parts) {
    parts[prefix + k].checks += c.checks;
    parts[prefix + k].violations += c.violations;
  }
  checks += other.checks;
  violations += other.violations;
  for (const auto& w : other.witnesses)
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(prefix + w);
  for (const auto& [k, v] : other.notes) notes[prefix + k] = v;
}

namespace {

BigRational big(std::uint64_t v) { return BigRational(BigInt(v)); }

std::string pair_name(const Analysis& a, std::size_t i, std::size_t j) {
  return "(" + a.irreps[i].label + ", " + a.irreps[j].label + ")";
}

std::string triple_name(const Analysis& a, const Triple& t) {
  return "(" + a.irreps[t.a].label + ", " + a.irreps[t.b].label + ", " + a.irreps[t.c].label + ")";
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct RestrictionData {
  std::vector<Constituent> parts;
  std::uint64_t distinct = 0;
  std::uint64_t multiplicity = 0;    // common value when uniform
  std::uint64_t sigma_degree = 0;    // common value when uniform
  bool uniform = true;
  std::uint64_t length = 0;
};

RestrictionData restriction(const GroupModel& model, std::size_t irrep, std::size_t k) {
  RestrictionData r;
  const auto& sub = model.level_table(k);
  r.parts = decompose_restriction(model.table(), model.character(irrep), model.group().classes(), sub,
                                  model.group().congruence_subgroup(k));
  r.distinct = r.parts.size();
  for (const auto& c : r.parts) {
    r.length += c.multiplicity;
    const std::uint64_t deg = sub.degrees.at(c.irrep);
    if (r.sigma_degree == 0) {
      r.sigma_degree = deg;
      r.multiplicity = c.multiplicity;
    } else if (deg != r.sigma_degree || c.multiplicity != r.multiplicity) {
      r.uniform = false;
    }
  }
  return r;
}

}  // namespace

Analysis analyze(const GroupModel& model, unsigned threads) {
  auto irreps = compute_irrep_records(model);
  auto records = compute_pair_records(model, irreps, threads);
  const std::size_t count = irreps.size();
  return Analysis{&model, std::move(irreps), PairTable(count, std::move(records))};
}

SuiteOutcome check_table(const CharacterTable& table) {
  SuiteOutcome out("table");
  const auto sum = sum_of_squared_degrees(table);
  out.check("sum-of-squared-degrees", sum == table.group_order, [&] {
    return std::to_string(sum) + " != " + std::to_string(table.group_order);
  });
  const auto rows = first_orthogonality_failures(table);
  out.check("first-orthogonality", rows == 0, [&] { return std::to_string(rows) + " failing entries"; });
  const auto cols = column_orthogonality_failures(table);
  out.check("column-orthogonality", cols == 0, [&] { return std::to_string(cols) + " failing entries"; });
  out.check("twist-bijective", twist_action_is_bijective(table), [] { return std::string("twist is not a permutation"); });
  out.check("complete", table.irrep_count() == table.class_count(), [&] {
    return std::to_string(table.irrep_count()) + " irreps, " + std::to_string(table.class_count()) + " classes";
  });
  for (std::size_t i = 0; i < table.irrep_count(); ++i) {
    out.check("degree-divides-order", table.group_order % table.degrees[i] == 0,
              [&] { return table.labels[i]; });
  }
  return out;
}

SuiteOutcome check_steinberg(const Analysis& a) {
  SuiteOutcome out("steinberg");
  const auto& model = *a.model;
  const auto& row = model.character(0);
  out.check("trivial-row", std::all_of(row.begin(), row.end(), [](auto v) { return v == 1; }),
            [] { return std::string("row 0 is not the trivial character"); });
  const auto& rec = a.irreps.at(0);
  const std::int64_t n = model.n();
  out.check("t", rec.t == 1, [&] { return "t = " + std::to_string(rec.t); });
  out.check("r", rec.r == model.n(), [&] { return "r = " + std::to_string(rec.r); });
  out.check("f", rec.f == n * n - n, [&] { return "f = " + std::to_string(rec.f); });
  return out;
}

SuiteOutcome check_r_integrality(const Analysis& a) {
  SuiteOutcome out("r-integrality");
  const auto& model = *a.model;
  for (const auto& rec : a.irreps) {
    out.check("t-divides-n", rec.t > 0 && model.n() % rec.t == 0,
              [&] { return rec.label + ": t = " + std::to_string(rec.t); });
    out.check("reducibility-equation", reducibility_inv(model.q(), rec.t, rec.r) == rec.inv,
              [&] { return rec.label + ": inv = " + to_string(rec.inv) + ", r = " + std::to_string(rec.r); });
    out.check("r-divides-n-over-t", rec.t > 0 && (model.n() / rec.t) % rec.r == 0,
              [&] { return rec.label + ": r = " + std::to_string(rec.r) + ", t = " + std::to_string(rec.t); });
  }
  return out;
}

SuiteOutcome check_conductor_integrality(const Analysis& a) {
  SuiteOutcome out("conductor-integrality");
  const auto& model = *a.model;
  const BigRational vn = normalization_constant(model.q(), model.n());
  for (const auto& rec : a.pairs.records()) {
    const BigRational value = vn * vn * rec.inv / (big(rec.d1) * big(rec.d2));
    const auto e = exact_log(value, model.q());
    out.check("power-of-q", e.has_value() && -*e == rec.f_tilde, [&] {
      return pair_name(a, rec.first, rec.second) + ": v_n^2 inv/(d1 d2) = " + to_string(value);
    });
    out.check("f-from-f-tilde", rec.f == rec.f_tilde - static_cast<std::int64_t>(rec.r1) * rec.t_pair,
              [&] { return pair_name(a, rec.first, rec.second); });
    out.check("f-nonnegative", rec.f >= 0,
              [&] { return pair_name(a, rec.first, rec.second) + ": f = " + std::to_string(rec.f); });
  }
  return out;
}

SuiteOutcome check_ultrametric_suite(const Analysis& a, const std::vector<Triple>& triples) {
  SuiteOutcome out("ultrametric");
  const auto violations = check_ultrametric(a.pairs, triples);
  std::size_t next = 0;
  for (const auto& tr : triples) {
    const bool hit = next < violations.size() && violations[next].triple.a == tr.a &&
                     violations[next].triple.b == tr.b && violations[next].triple.c == tr.c;
    const UltrametricViolation* v = hit ? &violations[next++] : nullptr;
    out.check("conductor-form", !(v && v->conductor_form_fails), [&] {
      return triple_name(a, tr) + ": f~ = " + std::to_string(v->f13) + " > max(" + std::to_string(v->f12) +
             ", " + std::to_string(v->f23) + ")";
    });
    out.check("inv-form", !(v && v->inv_form_fails), [&] { return triple_name(a, tr); });
  }
  out.notes["triples"] = std::to_string(triples.size());
  return out;
}

SuiteOutcome check_cliff(const Analysis& a, const std::vector<Triple>& triples) {
  SuiteOutcome out("cliff");
  const auto& model = *a.model;
  const std::size_t m = model.level();
  const std::size_t count = a.irreps.size();
  const ModArith f(model.table().ell);

  std::vector<std::vector<RestrictionData>> res(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k <= m; ++k) {
      res[i].push_back(restriction(model, i, k));
      const auto& r = res[i][k];
      out.check("constituents-uniform", r.uniform,
                [&] { return a.irreps[i].label + " on U_" + std::to_string(k); });
      out.check("degree-sum", r.distinct * r.multiplicity * r.sigma_degree == a.irreps[i].degree,
                [&] { return a.irreps[i].label + " on U_" + std::to_string(k); });
    }
  }

  for (const auto& rec : a.pairs.records()) {
    const std::size_t i = rec.first, j = rec.second;
    const auto& ci = model.character(i);
    const auto& cj = model.character(j);
    for (std::size_t k = 0; k <= m; ++k) {
      const bool ka = k >= rec.dist;
      const bool kb = rec.hom_dims[k] > 0;
      bool kc = true;
      for (const auto& [cls, cnt] : model.level_histogram(k).counts) {
        (void)cnt;
        if (f.mul(f.reduce(rec.d2), ci[cls]) != f.mul(f.reduce(rec.d1), cj[cls])) {
          kc = false;
          break;
        }
      }
      const auto where = [&] { return pair_name(a, i, j) + " at k = " + std::to_string(k); };
      out.check("dist-iff-hom", ka == kb, where);
      out.check("hom-iff-character-identity", kb == kc, where);
      if (!kb) continue;
      const auto& ri = res[i][k];
      const auto& rj = res[j][k];
      // hom/(d1 d2) = 1/(#constituents d_sigma^2)
      out.check("hom-ratio", big(rec.hom_dims[k]) * big(ri.distinct) * big(ri.sigma_degree * ri.sigma_degree) ==
                                 big(rec.d1) * big(rec.d2),
                where);
      std::vector<std::size_t> si, sj;
      for (const auto& c : ri.parts) si.push_back(c.irrep);
      for (const auto& c : rj.parts) sj.push_back(c.irrep);
      out.check("same-constituents", si == sj && ri.sigma_degree == rj.sigma_degree, where);
    }
    out.check("dist-zero-iff-twist", (rec.dist == 0) == (rec.t_pair > 0), [&] { return pair_name(a, i, j); });
    out.check("t-pair-values", rec.t_pair == 0 || (rec.t_pair == rec.t1 && rec.t1 == rec.t2),
              [&] { return pair_name(a, i, j) + ": t_pair = " + std::to_string(rec.t_pair); });
  }

  for (const auto& tr : triples) {
    const auto& p12 = a.pairs.at(tr.a, tr.b);
    const auto& p23 = a.pairs.at(tr.b, tr.c);
    const auto& p13 = a.pairs.at(tr.a, tr.c);
    const std::size_t top = std::max(p12.dist, p23.dist);
    out.check("dist-ultrametric", p13.dist <= top, [&] { return triple_name(a, tr); });
    const std::uint64_t d1 = a.irreps[tr.a].degree, d2 = a.irreps[tr.b].degree, d3 = a.irreps[tr.c].degree;
    bool equal = true;
    for (std::size_t k = top; k <= m; ++k) {
      const BigInt h13 = p13.hom_dims[k], h12 = p12.hom_dims[k], h23 = p23.hom_dims[k];
      if (h13 * d2 != h12 * d3 || h12 * d3 != h23 * d1) equal = false;
    }
    out.check("normalized-homs-agree", equal, [&] { return triple_name(a, tr); });
  }
  return out;
}

SuiteOutcome check_invariant_properties(const Analysis& a) {
  SuiteOutcome out("invariant-properties");
  const auto& model = *a.model;
  const std::size_t m = model.level();
  for (const auto& rec : a.pairs.records()) {
    const auto name = [&] { return pair_name(a, rec.first, rec.second); };
    out.check("hom-monotone", std::is_sorted(rec.hom_dims.begin(), rec.hom_dims.end()), name);
    out.check("hom-top", rec.hom_dims[m] == rec.d1 * rec.d2, name);
    const BigRational norm = rec.inv / (big(rec.d1) * big(rec.d2));
    for (std::size_t s : {rec.first, rec.second}) {
      const auto& self = a.pairs.at(s, s);
      out.check("self-pairing-dominates", self.inv / (big(self.d1) * big(self.d2)) >= norm, name);
    }
    // twisting the second entry
    for (std::uint32_t z = 1; z < model.n(); ++z) {
      const auto tw = twist_character(model.table(), model.character(rec.second), z);
      const auto h = hom_dims(model, model.character(rec.first), tw);
      const std::size_t dist = std::find_if(h.begin(), h.end(), [](auto x) { return x > 0; }) - h.begin();
      const BigRational inv = inv_from_hom_dims(model.q(), model.n(), h);
      const auto row = model.table().find_row(tw);
      out.check("twist-is-irreducible", row.has_value(), name);
      if (!row) continue;
      const auto c = conductor(model.q(), model.n(), inv, rec.d1, rec.d2, rec.r1,
                               twist_pair_count(model, rec.first, *row));
      out.check("twist-invariance", dist == rec.dist && inv == rec.inv && c.f_tilde == rec.f_tilde,
                [&] { return name() + " twisted by zeta^" + std::to_string(z); });
    }
  }
  return out;
}

SuiteOutcome check_level_consistency(const Analysis& a, std::uint64_t seed) {
  SuiteOutcome out("level-consistency");
  const auto& model = *a.model;
  const auto& g = model.group();
  for (std::size_t M = 1; M < model.level(); ++M) {
    auto lower_group = UnitGroup::build(g.field(), M);
    auto lower_table = character_table(*lower_group, seed, model.table().ell);
    const UnitGroup& lg = *lower_group;
    GroupModel lower(std::move(lower_group), std::move(lower_table), seed);
    const auto la = analyze(lower);
    const auto& lcd = lg.classes();

    std::vector<std::size_t> image(la.irreps.size());
    bool all_found = true;
    for (std::size_t i = 0; i < la.irreps.size(); ++i) {
      ModVector row(model.table().class_count());
      for (std::size_t c = 0; c < row.size(); ++c)
        row[c] = lower.character(i)[lcd.class_of[g.project(model.table().class_reps[c], lg)]];
      const auto found = model.table().find_row(row);
      out.check("inflation-is-irreducible", found.has_value(),
                [&] { return "level " + std::to_string(M) + " " + la.irreps[i].label; });
      if (!found) {
        all_found = false;
        continue;
      }
      image[i] = *found;
      const auto& lo = la.irreps[i];
      const auto& hi = a.irreps[*found];
      out.check("irrep-invariants", lo.t == hi.t && lo.r == hi.r && lo.f == hi.f && lo.inv == hi.inv &&
                                        lo.level == hi.level && lo.degree == hi.degree,
                [&] { return "level " + std::to_string(M) + " " + lo.label + " -> " + hi.label; });
    }
    if (!all_found) continue;
    for (const auto& lo : la.pairs.records()) {
      const auto& hi = a.pairs.at(image[lo.first], image[lo.second]);
      out.check("pair-invariants",
                lo.dist == hi.dist && lo.inv == hi.inv && lo.f == hi.f && lo.f_tilde == hi.f_tilde &&
                    lo.t_pair == hi.t_pair,
                [&] { return "level " + std::to_string(M) + " " + pair_name(la, lo.first, lo.second); });
    }
  }
  return out;
}

SuiteOutcome check_norms(const Analysis& a) {
  SuiteOutcome out("norms");
  const auto& model = *a.model;
  const auto& table = model.table();
  const BigRational vol1 = model.group().volume(1);
  const BigRational qn = rational_pow(big(model.q()), model.n());
  std::uint64_t not_free = 0;
  std::uint64_t u1_mismatch = 0;
  for (const auto& rec : a.irreps) {
    const std::size_t i = rec.index;
    const auto& self = a.pairs.at(i, i);
    const BigRational qrt = rational_pow(big(model.q()), static_cast<std::int64_t>(rec.r) * rec.t);
    const auto name = [&] { return rec.label; };

    out.check("u0-norm", self.hom_dims[0] == rec.t, name);
    const BigRational u1 = vol1 * big(self.hom_dims[1]);
    if (u1 != big(rec.t) / (qrt - 1)) ++u1_mismatch;

    for (std::uint32_t j = 0; j < model.n(); ++j) {
      bool vanishes = true;
      for (std::size_t c = 0; c < table.class_count(); ++c)
        if (table.class_shells[c] == j && model.character(i)[c] != 0) vanishes = false;
      out.check("shell-vanishing", vanishes == (j % rec.t != 0),
                [&] { return rec.label + " on shell " + std::to_string(j); });
    }

    const auto r1 = restriction(model, i, 1);
    out.check("u1-length", big(r1.length) == big(rec.t) * (qn - 1) / (qrt - 1),
              [&] { return rec.label + ": length " + std::to_string(r1.length); });

    const auto r0 = restriction(model, i, 0);
    out.check("u0-multiplicity-free", r0.multiplicity == 1 && r0.uniform && r0.distinct == rec.t,
              [&] { return rec.label + ": " + std::to_string(r0.distinct) + " constituents"; });

    const bool free = std::all_of(r1.parts.begin(), r1.parts.end(), [](const auto& c) { return c.multiplicity == 1; });
    if (free) {
      out.check("u1-norm", u1 == big(rec.t) / (qrt - 1), [&] { return rec.label + ": " + to_string(u1); });
      const BigRational rhs = (big(self.hom_dims[0]) + u1) * u1;
      out.check("multiplicity-free-identity", rhs == rec.inv,
                [&] { return rec.label + ": " + to_string(rhs) + " vs " + to_string(rec.inv); });
    } else {
      ++not_free;
    }
  }
  out.notes["u1-not-multiplicity-free"] = std::to_string(not_free);
  out.notes["u1-norm-differs-without-gate"] = std::to_string(u1_mismatch);
  return out;
}

SuiteOutcome check_plancherel(const Analysis& a) {
  SuiteOutcome out("plancherel");
  const auto& model = *a.model;
  std::uint64_t reduced = 0;
  for (const auto& rec : a.pairs.records()) {
    const auto name = [&] { return pair_name(a, rec.first, rec.second); };
    for (const auto& c : plancherel_factorization_check(rec, model.q(), model.n()))
      out.check(c.name, c.holds, [&] { return name() + ": " + c.witness; });
    const auto mu = mu_inverse_fn(rec, model.q());
    if (mu.reduced) ++reduced;
    out.check("symmetric", is_symmetric(mu.fn), name);
    if (mu.equal_case) out.check("double-pole", pole_order_at_one(mu.fn) == 2, name);
  }
  out.notes["reduced-pairs"] = std::to_string(reduced);
  return out;
}

std::vector<std::complex<double>> oracle_samples(const OracleConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> re(config.re_min, config.re_max);
  std::uniform_real_distribution<double> im(config.im_min, config.im_max);
  std::vector<std::complex<double>> out;
  for (std::size_t i = 0; i < config.samples; ++i) {
    const double x = re(rng);
    const double y = im(rng);
    out.emplace_back(x, y);
  }
  return out;
}

SuiteOutcome check_oracle(const Analysis& a, const OracleConfig& config) {
  SuiteOutcome out("oracle");
  const auto& model = *a.model;
  const auto samples = oracle_samples(config);
  double worst = 0;
  for (const auto& rec : a.pairs.records()) {
    const auto fn = mu_inverse_fn(rec, model.q()).fn;
    for (const auto& s : samples) {
      const auto closed = evaluate_at_s(fn, model.q(), s);
      const auto series = series_oracle(model, rec, s, config.series);
      const double err = std::abs(closed - series) / std::abs(closed);
      worst = std::max(worst, err);
      out.check("relative-error", err <= config.tolerance, [&] {
        std::ostringstream w;
        w << pair_name(a, rec.first, rec.second) << " at s = " << s.real() << "+" << s.imag()
          << "i: " << sci(err);
        return w.str();
      });
    }
  }
  out.notes["max-relative-error"] = sci(worst);
  out.notes["shells"] = std::to_string(config.series.shells);
  out.notes["closed-tails"] = config.series.close_tails ? "true" : "false";
  return out;
}

}  // namespace divinv
