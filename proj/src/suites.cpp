#include "mr2/suites.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mr2 {

namespace {

using nlohmann::json;

long long pick(std::mt19937_64& rng, long long n) {  // uniform in [0, n)
  return n <= 1 ? 0 : static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

json components_json(const std::vector<Component>& comps) {
  json a = json::array();
  for (const auto& c : comps) a.push_back(component_str(c));
  return a;
}

std::string components_str(const std::vector<Component>& comps) {
  std::string s;
  for (const auto& c : comps) {
    if (!s.empty()) s += ";";
    s += component_str(c);
  }
  return s;
}

/// Certify maximal rank; pass iff some trial achieves the expected rank.
CaseRecord certify_case(const std::vector<Component>& comps, int d, int trials,
                        const PrimeField& f, std::uint64_t seed) {
  CaseRecord rec;
  Verdict v = verify_general(comps, d, trials, f, seed);
  rec.pass = v.certified_maximal;
  rec.data["degree"] = d;
  rec.data["components"] = components_json(comps);
  rec.data["rank"] = rank_report_json(v.best);
  if (!rec.pass)
    rec.detail = "rank gap " + std::to_string(v.min_deficiency) + " after " +
                 std::to_string(trials) + " trials";
  return rec;
}

/// Expected-exception case: every trial must come out deficient; when
/// want_rank >= 0 every trial must hit that exact rank.
CaseRecord deficient_case(const std::vector<Component>& comps, int d, int trials,
                          const PrimeField& f, std::uint64_t seed, long long want_rank) {
  CaseRecord rec;
  rec.expected_exception = true;
  rec.pass = true;
  RankReport best;
  for (int i = 0; i < trials; ++i) {
    RankReport r = assemble_and_rank(comps, d, f, mix_seed(seed, i));
    if (i == 0 || r.rank > best.rank) best = r;
    if (r.maximal) {
      rec.pass = false;
      rec.detail = "trial " + std::to_string(i) + " reached the expected rank " +
                   std::to_string(r.expected);
    }
    if (want_rank >= 0 && r.rank != want_rank) {
      rec.pass = false;
      rec.detail = "trial " + std::to_string(i) + " rank " + std::to_string(r.rank) +
                   " != " + std::to_string(want_rank);
    }
  }
  rec.data["degree"] = d;
  rec.data["components"] = components_json(comps);
  rec.data["rank"] = rank_report_json(best);
  rec.data["trials"] = trials;
  return rec;
}

struct Task {
  std::string name;
  std::function<CaseRecord(std::uint64_t)> fn;
};

std::vector<CaseRecord> run_tasks(const std::vector<Task>& tasks, const SuiteConfig& cfg) {
  std::vector<CaseRecord> out(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(tasks.size()); ++i) {
    std::uint64_t cs = mix_seed(cfg.seed, static_cast<std::uint64_t>(i));
    CaseRecord rec;
    try {
      rec = tasks[i].fn(cs);
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.detail = std::string("exception: ") + e.what();
    }
    rec.name = tasks[i].name;
    rec.data["case_seed"] = cs;
    out[i] = std::move(rec);
  }
  return out;
}

std::vector<std::vector<long long>> partitions_of(long long n) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  std::function<void(long long, long long)> rec = [&](long long rem, long long maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (long long p = std::min(maxp, rem); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Random composition of total into `parts` summands, each >= minpart.
std::vector<long long> random_composition(long long total, long long parts,
                                          long long minpart, std::mt19937_64& rng) {
  std::vector<long long> v(static_cast<std::size_t>(parts), minpart);
  long long rest = total - minpart * parts;
  for (long long i = 0; i < rest; ++i) v[static_cast<std::size_t>(pick(rng, parts))]++;
  return v;
}

/// Random multiplicity-2 collection with total length exactly `target`.
std::vector<Component> random_collection_of_length(long long target, std::mt19937_64& rng) {
  struct Opt {
    long long N;
    Component c;
  };
  const std::vector<Opt> opts = {
      {1, SingularityComponent::simple_point()}, {3, SingularityComponent::tacnode(1)},
      {5, SingularityComponent::cusp(2)},        {6, SingularityComponent::tacnode(2)},
      {8, SingularityComponent::cusp(3)},        {9, SingularityComponent::tacnode(3)},
      {11, SingularityComponent::cusp(4)},       {12, SingularityComponent::tacnode(4)}};
  std::vector<Component> comps;
  long long rem = target;
  while (rem > 0) {
    std::vector<const Opt*> fits;
    for (const auto& o : opts)
      if (o.N <= rem) fits.push_back(&o);
    const Opt* o = fits[static_cast<std::size_t>(pick(rng, static_cast<long long>(fits.size())))];
    comps.push_back(o->c);
    rem -= o->N;
  }
  return comps;
}

PrimeField field_of(const SuiteConfig& cfg) { return PrimeField(cfg.prime); }

long long binom_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------- suites

void build_nodes_grid(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  for (int r = 1; r <= 20; ++r) {
    for (int d = 1; d <= 15; ++d) {
      std::vector<Component> comps(static_cast<std::size_t>(r),
                                   SingularityComponent::tacnode(1));
      std::string name = "r=" + std::to_string(r) + " d=" + std::to_string(d);
      bool exception = (r == 2 && d == 2) || (r == 5 && d == 4);
      int trials = cfg.trials;
      tasks.push_back({name, [comps, d, trials, exception, cfg](std::uint64_t cs) {
                         const PrimeField& f = field_of(cfg);
                         if (exception) {
                           CaseRecord rec = deficient_case(comps, d, trials, f, cs, -1);
                           long long def = rec.data["rank"]["deficiency"].get<long long>();
                           if (rec.pass && def != 1) {
                             rec.pass = false;
                             rec.detail = "deficiency " + std::to_string(def) + " != 1";
                           }
                           return rec;
                         }
                         CaseRecord rec = certify_case(comps, d, trials, f, cs);
                         if (rec.pass) {
                           long long amb = rec.data["rank"]["ambient"].get<long long>();
                           long long rk = rec.data["rank"]["rank"].get<long long>();
                           long long dim = std::max<long long>(-1, amb - 1 - rk);
                           long long want = expected_dimension(d, comps);
                           rec.data["system_dim"] = dim;
                           if (dim != want) {
                             rec.pass = false;
                             rec.detail = "system dimension " + std::to_string(dim) +
                                          " != " + std::to_string(want);
                           }
                         }
                         return rec;
                       }});
    }
  }
}

void build_exceptions(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  const int trials = 20;
  {
    std::vector<Component> comps(2, SingularityComponent::tacnode(1));
    tasks.push_back({"2 nodes d=2", [comps, cfg](std::uint64_t cs) {
                       return deficient_case(comps, 2, trials, field_of(cfg), cs, 5);
                     }});
  }
  {
    std::vector<Component> comps(2, SingularityComponent::cusp(2));
    tasks.push_back({"2 cusps d=3", [comps, cfg](std::uint64_t cs) {
                       return deficient_case(comps, 3, trials, field_of(cfg), cs, -1);
                     }});
  }
  for (const auto& part : partitions_of(5)) {
    std::vector<Component> comps;
    std::string pname;
    for (long long k : part) {
      comps.push_back(SingularityComponent::tacnode(k));
      if (!pname.empty()) pname += "+";
      pname += std::to_string(k);
    }
    tasks.push_back({"tacnodes " + pname + " d=4", [comps, cfg](std::uint64_t cs) {
                       return deficient_case(comps, 4, trials, field_of(cfg), cs, -1);
                     }});
  }
}

void build_lastthm(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  struct Row {
    int d;
    long long N;
    std::vector<long long> ells;
  };
  const std::vector<Row> rows = {{11, 78, {47}}, {10, 66, {40}},   {9, 55, {33, 34}},
                                 {8, 45, {27, 28}}, {7, 36, {22, 23}}, {6, 28, {17, 18}},
                                 {5, 21, {13, 14}}};
  auto named = [](long long N, long long ell) -> std::vector<Component> {
    std::vector<Component> comps;
    if (N == 55 && ell == 33) comps.assign(11, SingularityComponent::cusp(2));
    if (N == 45 && ell == 27) comps.assign(9, SingularityComponent::cusp(2));
    if (N == 66 && ell == 40) {
      comps.assign(13, SingularityComponent::cusp(2));
      comps.push_back(SingularityComponent::simple_point());
    }
    return comps;
  };
  for (const auto& row : rows) {
    for (long long ell : row.ells) {
      std::string base =
          "d=" + std::to_string(row.d) + " N=" + std::to_string(row.N) + " l=" + std::to_string(ell);
      std::vector<Component> ext = named(row.N, ell);
      if (!ext.empty()) {
        tasks.push_back({base + " extremal", [ext, row, cfg](std::uint64_t cs) {
                           return certify_case(ext, row.d, cfg.trials, field_of(cfg), cs);
                         }});
      }
      for (int i = 0; i < cfg.samples; ++i) {
        long long N = row.N;
        int d = row.d;
        tasks.push_back({base + " sample " + std::to_string(i),
                         [N, ell, d, cfg](std::uint64_t cs) {
                           std::mt19937_64 rng(mix_seed(cs, 0x5A3D));
                           auto comps = random_mult2_collection(N, ell, rng);
                           return certify_case(comps, d, cfg.trials, field_of(cfg), cs);
                         }});
      }
    }
  }
}

void build_smoke(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  for (int i = 0; i < cfg.smoke_cases; ++i) {
    tasks.push_back({"d=13 case " + std::to_string(i), [cfg](std::uint64_t cs) {
                       std::mt19937_64 rng(mix_seed(cs, 0x530));
                       long long target = 105 - pick(rng, 9);
                       auto comps = random_collection_of_length(target, rng);
                       return certify_case(comps, 13, cfg.trials, field_of(cfg), cs);
                     }});
  }
  for (int i = 0; i < std::max(1, cfg.smoke_cases / 5); ++i) {
    tasks.push_back({"d=14 case " + std::to_string(i), [cfg](std::uint64_t cs) {
                       std::mt19937_64 rng(mix_seed(cs, 0x531));
                       long long target = 120 - pick(rng, 9);
                       auto comps = random_collection_of_length(target, rng);
                       return certify_case(comps, 14, cfg.trials, field_of(cfg), cs);
                     }});
  }
}

void build_chains(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  for (long long N = 2; N <= 300; ++N) {
    tasks.push_back({"N=" + std::to_string(N), [N](std::uint64_t) {
                       CaseRecord rec;
                       rec.pass = true;
                       long long checked = 0;
                       for (long long ell = 2; ell <= N; ++ell) {
                         if (!mainthm_check(N, ell) || N - ell < 2) continue;
                         ++checked;
                         ChainReport c = specialization_chain(N, ell);
                         if (!c.certified || c.needs_direct) {
                           rec.pass = false;
                           rec.detail = "l=" + std::to_string(ell) + ": chain not certified";
                           for (const auto& n : c.notes) rec.detail += "; " + n;
                           break;
                         }
                       }
                       rec.data["pairs_checked"] = checked;
                       return rec;
                     }});
  }
  struct Direct {
    long long N, ell, m, s;
    int d;
    std::vector<long long> stairs;
  };
  const std::vector<Direct> direct = {{78, 47, 10, 5, 11, {17, 6}},
                                      {55, 34, 8, 4, 9, {14, 5}},
                                      {36, 23, 6, 3, 7, {11, 4}},
                                      {21, 14, 4, 2, 5, {8, 3}}};
  for (const auto& t : direct) {
    std::string name = "terminal (" + std::to_string(t.N) + "," + std::to_string(t.ell) + ")";
    tasks.push_back({name, [t, cfg](std::uint64_t cs) {
                       CaseRecord rec;
                       ChainReport c = specialization_chain(t.N, t.ell);
                       Staircase want(t.stairs);
                       if (!c.needs_direct || c.terminal_m != t.m || c.terminal_s != t.s ||
                           c.terminal_E != want) {
                         rec.pass = false;
                         rec.detail = "chain terminal " + std::to_string(c.terminal_m) + ":" +
                                      c.terminal_E.str() + ":" + std::to_string(c.terminal_s) +
                                      " does not match";
                         return rec;
                       }
                       std::vector<Component> comps = {HmesComponent{t.m, want, t.s}};
                       rec = certify_case(comps, t.d, cfg.trials, field_of(cfg), cs);
                       return rec;
                     }});
  }
}

void build_barkats(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  for (int nu = 0; nu <= 12; ++nu) {
    for (int ka = 0; nu + ka <= 12; ++ka) {
      if (nu + ka == 0) continue;
      if ((nu == 2 && ka == 0) || (nu == 5 && ka == 0) || (nu == 0 && ka == 2)) continue;
      for (int d = 1; d <= 10; ++d) {
        std::vector<Component> comps;
        for (int i = 0; i < nu; ++i) comps.push_back(SingularityComponent::tacnode(1));
        for (int i = 0; i < ka; ++i) comps.push_back(SingularityComponent::cusp(2));
        std::string name = "nu=" + std::to_string(nu) + " ka=" + std::to_string(ka) +
                           " d=" + std::to_string(d);
        tasks.push_back({name, [comps, d, nu, ka, cfg](std::uint64_t cs) {
                           CaseRecord rec = certify_case(comps, d, cfg.trials, field_of(cfg), cs);
                           if (rec.pass) {
                             long long amb = rec.data["rank"]["ambient"].get<long long>();
                             long long rk = rec.data["rank"]["rank"].get<long long>();
                             long long dim = std::max<long long>(-1, amb - 1 - rk);
                             long long want = std::max<long long>(
                                 -1, static_cast<long long>(d) * (d + 3) / 2 - 3 * nu - 5 * ka);
                             rec.data["system_dim"] = dim;
                             if (dim != want) {
                               rec.pass = false;
                               rec.detail = "system dimension " + std::to_string(dim) + " != " +
                                            std::to_string(want);
                             }
                           }
                           return rec;
                         }});
      }
    }
  }
}

void build_oracle(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  auto all12 = enumerate_staircases(12);

  // exhaustive slicing checks
  for (const auto& E : all12) {
    if (!flatstairs_hypothesis(E)) continue;
    for (int p = 1; p <= E.stair(0); ++p) {
      tasks.push_back({"flatstairs E=" + E.str() + " p=" + std::to_string(p),
                       [E, p, cfg](std::uint64_t) {
                         CaseRecord rec;
                         rec.pass = verify_flatstairs(E, p, 0, field_of(cfg));
                         if (!rec.pass) rec.detail = "residual/trace/conservation mismatch";
                         return rec;
                       }});
    }
  }

  // independence of the H-scheme conditions on the local algebra
  for (int i = 0; i < 4 * cfg.oracle_samples; ++i) {
    tasks.push_back({"codimform sample " + std::to_string(i), [cfg](std::uint64_t cs) {
                       std::mt19937_64 rng(mix_seed(cs, 0xC0D));
                       long long l0 = 1 + pick(rng, 14);
                       long long l1 = pick(rng, std::min(l0, 15 - l0) + 1);
                       Staircase E(l1 > 0 ? std::vector<long long>{l0, l1}
                                          : std::vector<long long>{l0});
                       long long s = 1 + pick(rng, 4);
                       long long m = std::max<long long>(0, m0(E, s) - 1 + pick(rng, 4));
                       CaseRecord rec;
                       rec.data["E"] = E.str();
                       rec.data["s"] = s;
                       rec.data["m"] = m;
                       rec.pass = verify_codimform(E, s, m, 0, field_of(cfg), cs);
                       if (!rec.pass) rec.detail = "conditions dependent on the local algebra";
                       return rec;
                     }});
  }

  // constant fiber length along the contact family
  auto all8 = enumerate_staircases(8);
  for (int i = 0; i < cfg.oracle_samples; ++i) {
    tasks.push_back({"fiber sample " + std::to_string(i), [all8, cfg](std::uint64_t cs) {
                       std::mt19937_64 rng(mix_seed(cs, 0xF1B));
                       const PrimeField& f = field_of(cfg);
                       const Staircase& E =
                           all8[static_cast<std::size_t>(pick(rng, static_cast<long long>(all8.size())))];
                       std::vector<std::uint64_t> tv = {0, 1, 2 + rng() % (f.p - 2),
                                                        2 + rng() % (f.p - 2)};
                       CaseRecord rec;
                       rec.data["E"] = E.str();
                       rec.pass = fiber_lengths_constant(E, 0, tv, f);
                       if (!rec.pass) rec.detail = "fiber colength varies with t";
                       return rec;
                     }});
  }

  // flat limits of the specialization block, exhaustively at small size
  for (long long s = 1; s <= 2; ++s) {
    for (const auto& E : all12) {
      if (E.height0() != 2) continue;
      if (E.stair(1) < s || E.stair(0) - E.stair(1) < s + 2) continue;
      tasks.push_back({"espbloc E=" + E.str() + " s=" + std::to_string(s),
                       [E, s, cfg](std::uint64_t) {
                         CaseRecord rec;
                         rec.pass = verify_espbloc_limit(E, s, 0, 0, field_of(cfg));
                         if (!rec.pass) rec.detail = "flat limit disagrees with the predicted step";
                         return rec;
                       }});
    }
  }

  // differential step instances
  std::vector<Staircase> dh_pool;
  for (const auto& E : enumerate_staircases(10)) {
    if (flatstairs_hypothesis(E) && E.height0() <= 3) dh_pool.push_back(E);
  }
  for (int i = 0; i < cfg.oracle_samples; ++i) {
    bool with_kernel = (i % 2) == 1;
    tasks.push_back({"diff-horace sample " + std::to_string(i),
                     [dh_pool, with_kernel, cfg](std::uint64_t cs) {
                       std::mt19937_64 rng(mix_seed(cs, 0xD1F));
                       const PrimeField& f = field_of(cfg);
                       const Staircase& E = dh_pool[static_cast<std::size_t>(
                           pick(rng, static_cast<long long>(dh_pool.size())))];
                       int p = 1 + static_cast<int>(pick(rng, std::min<long long>(3, E.stair(0))));
                       long long c = heights(E)[p - 1];
                       std::vector<Poly2> V;
                       for (long long a = 0; a < c; ++a) {
                         Poly2 v = {{static_cast<int>(a), 0, 1}};
                         for (int t = 0; t < 2; ++t)
                           v.push_back({static_cast<int>(pick(rng, 3)),
                                        1 + static_cast<int>(pick(rng, 2)), 1 + rng() % (f.p - 1)});
                         V.push_back(v);
                       }
                       if (with_kernel) {
                         // y times the t-expansion of a corner generator: a
                         // guaranteed nonzero kernel inside (y)
                         for (auto [e1, e2] : min_generators(E)) {
                           if (e2 < 1) continue;
                           for (long long j = 0; j <= e2; ++j) {
                             Poly2 w;
                             for (long long i2 = 0; i2 <= e2 - j; ++i2) {
                               std::uint64_t cf = f.reduce(binom_ll(e2, j) * binom_ll(e2 - j, i2));
                               if (cf)
                                 w.push_back({static_cast<int>(e1 + i2),
                                              static_cast<int>(1 + e2 - j - i2), cf});
                             }
                             V.push_back(w);
                           }
                           break;
                         }
                       }
                       CaseRecord rec;
                       rec.data["E"] = E.str();
                       rec.data["p"] = p;
                       OracleResult r = verify_diff_horace(E, p, V, 0, 0, f);
                       rec.pass = r.checked && r.ok;
                       rec.detail = r.note;
                       return rec;
                     }});
  }

  // finite determinacy under high-order perturbations
  std::vector<Staircase> fd_pool = enumerate_staircases(6);
  for (int i = 0; i < std::max(1, cfg.oracle_samples / 5); ++i) {
    tasks.push_back({"finideterm sample " + std::to_string(i),
                     [fd_pool, cfg](std::uint64_t cs) {
                       std::mt19937_64 rng(mix_seed(cs, 0xF1D));
                       const PrimeField& f = field_of(cfg);
                       const Staircase& E = fd_pool[static_cast<std::size_t>(
                           pick(rng, static_cast<long long>(fd_pool.size())))];
                       int alpha = 1, beta = 1;
                       for (int j = 0; j < E.height0(); ++j)
                         alpha = std::max(alpha, static_cast<int>(E.stair(j) - E.stair(j + 1)));
                       auto hs = heights(E);
                       for (std::size_t j = 0; j < hs.size(); ++j) {
                         long long next = j + 1 < hs.size() ? hs[j + 1] : 0;
                         beta = std::max(beta, static_cast<int>(hs[j] - next));
                       }
                       auto perturb = [&](int lo) {
                         Poly2 terms;
                         for (int t = 0; t < 3; ++t) {
                           int deg = lo + static_cast<int>(pick(rng, 3));
                           int ex = static_cast<int>(pick(rng, deg + 1));
                           terms.push_back({ex, deg - ex, rng() % f.p});
                         }
                         return terms;
                       };
                       Poly2 fa = {{0, 1, 1}}, ga = {{1, 0, 1}};
                       Poly2 fb = fa, gb = ga;
                       for (auto& t : perturb(alpha)) fb.push_back(t);
                       for (auto& t : perturb(beta)) gb.push_back(t);
                       CaseRecord rec;
                       rec.data["E"] = E.str();
                       rec.data["alpha"] = alpha;
                       rec.data["beta"] = beta;
                       OracleResult r = verify_finideterm(E, alpha, beta, fa, ga, fb, gb, 0, f);
                       rec.pass = r.checked && r.ok;
                       rec.detail = r.note;
                       return rec;
                     }});
  }
}

}  // namespace

json rank_report_json(const RankReport& r) {
  json j;
  j["d"] = r.d;
  j["components"] = r.components;
  j["total_length"] = r.total_length;
  j["ambient"] = r.ambient;
  j["rank"] = r.rank;
  j["expected"] = r.expected;
  j["maximal"] = r.maximal;
  j["deficiency"] = r.deficiency;
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["trials_used"] = r.trials_used;
  return j;
}

json SuiteReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["config"] = {{"prime", config.prime},
                 {"seed", config.seed},
                 {"trials", config.trials},
                 {"samples", config.samples},
                 {"smoke_cases", config.smoke_cases},
                 {"oracle_samples", config.oracle_samples}};
  json cs = json::array();
  for (const auto& c : cases) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["expected_exception"] = c.expected_exception;
    cj["detail"] = c.detail;
    cj["data"] = c.data;
    cs.push_back(std::move(cj));
  }
  j["cases"] = std::move(cs);
  j["pass"] = pass;
  return j;
}

std::string SuiteReport::to_csv() const {
  std::ostringstream out;
  out << "case,pass,expected_exception,d,components,total_length,ambient,rank,"
         "expected,maximal,deficiency,prime,seed,trials_used\n";
  for (const auto& c : cases) {
    if (!c.data.contains("rank")) continue;
    const auto& r = c.data["rank"];
    std::string comps;
    for (const auto& s : r["components"]) {
      if (!comps.empty()) comps += ";";
      comps += s.get<std::string>();
    }
    out << csv_quote(c.name) << "," << (c.pass ? 1 : 0) << ","
        << (c.expected_exception ? 1 : 0) << "," << r["d"].get<int>() << ","
        << csv_quote(comps) << "," << r["total_length"].get<long long>() << ","
        << r["ambient"].get<long long>() << "," << r["rank"].get<long long>() << ","
        << r["expected"].get<long long>() << "," << (r["maximal"].get<bool>() ? 1 : 0) << ","
        << r["deficiency"].get<long long>() << "," << r["prime"].get<std::uint64_t>() << ","
        << r["seed"].get<std::uint64_t>() << "," << r["trials_used"].get<int>() << "\n";
  }
  return out.str();
}

std::vector<std::string> suite_names() {
  return {"nodes-grid", "exceptions", "lastthm-table", "secondthm-smoke",
          "chains",     "barkats",    "oracle"};
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (!is_prime_u64(cfg.prime)) throw std::invalid_argument("modulus is not prime");
  std::vector<Task> tasks;
  if (name == "nodes-grid") build_nodes_grid(tasks, cfg);
  else if (name == "exceptions") build_exceptions(tasks, cfg);
  else if (name == "lastthm-table") build_lastthm(tasks, cfg);
  else if (name == "secondthm-smoke") build_smoke(tasks, cfg);
  else if (name == "chains") build_chains(tasks, cfg);
  else if (name == "barkats") build_barkats(tasks, cfg);
  else if (name == "oracle") build_oracle(tasks, cfg);
  else throw std::invalid_argument("unknown suite: " + name);

  SuiteReport rep;
  rep.suite = name;
  rep.config = cfg;
  rep.cases = run_tasks(tasks, cfg);
  rep.pass = true;
  for (const auto& c : rep.cases)
    if (!c.pass) rep.pass = false;
  return rep;
}

std::vector<Component> parse_components(const std::string& text) {
  std::vector<std::string> chunks;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      chunks.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  chunks.push_back(cur);

  auto parse_ll = [](const std::string& s, const std::string& tok) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("bad component token: " + tok);
    }
  };

  std::vector<Component> comps;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    std::string tok = chunks[i];
    if (tok.empty()) {
      if (chunks.size() == 1) break;
      throw std::invalid_argument("empty component token");
    }
    if (tok == "P") {
      comps.push_back(SingularityComponent::simple_point());
    } else if (tok[0] == 'A') {
      long long k = parse_ll(tok.substr(1), tok);
      if (k < 1) throw std::invalid_argument("bad component token: " + tok);
      comps.push_back(k % 2 == 1 ? SingularityComponent::tacnode((k + 1) / 2)
                                 : SingularityComponent::cusp((k + 2) / 2));
    } else if (tok[0] == 'C') {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad component token: " + tok);
      long long N = parse_ll(tok.substr(1, colon - 1), tok);
      long long L = parse_ll(tok.substr(colon + 1), tok);
      comps.push_back(SingularityComponent::two_curvilinear(N, L));
    } else if (tok[0] == 'H') {
      // H<m>:<l0>,<l1>:<s> spans two comma chunks
      if (i + 1 >= chunks.size())
        throw std::invalid_argument("bad component token: " + tok);
      std::string second = chunks[++i];
      auto c1 = tok.find(':');
      auto c2 = second.find(':');
      if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("bad component token: " + tok + "," + second);
      long long m = parse_ll(tok.substr(1, c1 - 1), tok);
      long long l0 = parse_ll(tok.substr(c1 + 1), tok);
      long long l1 = parse_ll(second.substr(0, c2), second);
      long long s = parse_ll(second.substr(c2 + 1), second);
      std::vector<long long> stairs;
      if (l0 > 0) stairs.push_back(l0);
      if (l1 > 0) stairs.push_back(l1);
      comps.push_back(HmesComponent{m, Staircase(std::move(stairs)), s});
    } else {
      throw std::invalid_argument("bad component token: " + tok);
    }
  }
  return comps;
}

std::vector<Component> random_mult2_collection(long long N, long long ell,
                                               std::mt19937_64& rng) {
  if (ell < 0 || N < ell || N > 2 * ell)
    throw std::invalid_argument("need 0 <= l <= N <= 2l");
  long long delta = N - ell;
  long long cmin = std::max<long long>(0, 2 * delta - ell);
  long long cmax = delta / 2;
  if (cmin > cmax) throw std::invalid_argument("no A_k realization of (N, l)");
  long long c = cmin + pick(rng, cmax - cmin + 1);
  long long sc = c == 0 ? 0 : 2 * c + pick(rng, delta - 2 * c + 1);
  std::vector<Component> comps;
  for (long long k : random_composition(sc, c, 2, rng))
    comps.push_back(SingularityComponent::cusp(k));
  long long st = delta - sc;
  if (st > 0) {
    long long t = 1 + pick(rng, st);
    for (long long k : random_composition(st, t, 1, rng))
      comps.push_back(SingularityComponent::tacnode(k));
  }
  long long points = ell - 2 * delta + c;
  for (long long i = 0; i < points; ++i)
    comps.push_back(SingularityComponent::simple_point());
  return comps;
}

std::vector<Staircase> enumerate_staircases(long long max_complement) {
  std::vector<Staircase> out;
  std::vector<long long> cur;
  std::function<void(long long, long long)> rec = [&](long long rem, long long maxp) {
    if (!cur.empty()) out.emplace_back(cur);
    for (long long p = std::min(maxp, rem); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(max_complement, max_complement);
  return out;
}

}  // namespace mr2
