#include "mr2/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mr2 {

long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Staircase::Staircase(std::vector<long long> stairs) : stairs_(std::move(stairs)) {
  while (!stairs_.empty() && stairs_.back() == 0) stairs_.pop_back();
  for (std::size_t i = 0; i < stairs_.size(); ++i) {
    if (stairs_[i] < 0) throw std::invalid_argument("negative stair length");
    if (i + 1 < stairs_.size() && stairs_[i] < stairs_[i + 1])
      throw std::invalid_argument("stair lengths must be weakly decreasing");
  }
  if (!stairs_.empty() && stairs_.back() == 0)
    throw std::invalid_argument("unreachable");  // trimmed above
}

long long Staircase::height(long long i) const {
  long long h = 0;
  for (long long s : stairs_)
    if (s > i) ++h;
  return h;
}

std::string Staircase::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < stairs_.size(); ++i) {
    if (i) os << ",";
    os << stairs_[i];
  }
  os << ")";
  return os.str();
}

Staircase make_staircase(std::vector<long long> stairs) { return Staircase(std::move(stairs)); }

Staircase staircase_from_heights(const std::vector<long long>& hs) {
  for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
    if (hs[i] < hs[i + 1]) throw std::invalid_argument("heights must be weakly decreasing");
  }
  long long hmax = hs.empty() ? 0 : hs[0];
  std::vector<long long> stairs(static_cast<std::size_t>(hmax), 0);
  for (long long j = 0; j < hmax; ++j) {
    long long count = 0;
    for (long long h : hs)
      if (h > j) ++count;
    stairs[static_cast<std::size_t>(j)] = count;
  }
  return Staircase(std::move(stairs));
}

std::vector<long long> heights(const Staircase& E) {
  std::vector<long long> hs;
  hs.reserve(static_cast<std::size_t>(E.stair(0)));
  for (long long i = 0; i < E.stair(0); ++i) hs.push_back(E.height(i));
  return hs;
}

Staircase sigma(const Staircase& E, int p) {
  if (p < 1 || p > E.stair(0)) throw std::invalid_argument("slice index out of range");
  auto hs = heights(E);
  hs.erase(hs.begin() + (p - 1));
  return staircase_from_heights(hs);
}

long long complement_size(const Staircase& E) {
  long long n = 0;
  for (long long s : E.stairs()) n += s;
  return n;
}

std::vector<std::pair<long long, long long>> min_generators(const Staircase& E) {
  std::vector<std::pair<long long, long long>> gens;
  long long prev = -1;
  for (int i = 0; i < E.height0(); ++i) {
    if (E.stair(i) != prev) {
      gens.emplace_back(E.stair(i), i);
      prev = E.stair(i);
    }
  }
  gens.emplace_back(0, E.height0());
  return gens;
}

long long m0(const Staircase& E, long long s) {
  if (E.empty()) throw std::invalid_argument("m0 undefined on the empty staircase");
  long long best = -1;
  for (auto [e1, e2] : min_generators(E)) {
    long long v = e1 + s * e2;
    if (best < 0 || v < best) best = v;
  }
  return best;
}

long long scheme_length(long long m, const Staircase& E) {
  return binom2(m + 1) + complement_size(E);
}

bool wins_check(const Staircase& E, long long m, long long s) {
  if (E.height0() > 2) throw std::invalid_argument("wins_check requires height <= 2");
  if (E.empty()) return false;
  return E.stair(0) > m && 2 * E.stair(1) <= m && m >= m0(E, s);
}

bool mainthm_check(long long N, long long ell) {
  if (ell < 0 || ell > N) throw std::invalid_argument("need 0 <= ell <= N");
  long long lhs = 2 * ell - 1 - N;
  return lhs >= 0 && lhs * lhs >= 9 * (N - ell);
}

Staircase corollary_staircase(long long N, long long ell, long long k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (2 * ell - N <= 2 * k)
    throw std::invalid_argument("hypothesis 2*ell - N > 2k fails");
  if (ell < k * (k + 1))
    throw std::invalid_argument("hypothesis ell >= k(k+1) fails");
  if (N - ell < k * k)
    throw std::invalid_argument("hypothesis N - ell >= k^2 fails");
  return Staircase({ell - k * (k + 1), N - ell - k * k});
}

EspblocStep espbloc_step(const Staircase& E, long long s) {
  if (E.height0() > 2) throw std::invalid_argument("espbloc requires height <= 2");
  if (s < 1) throw std::invalid_argument("s must be positive");
  long long l0 = E.stair(0), l1 = E.stair(1);
  if (l0 - l1 < s + 2) throw std::invalid_argument("hypothesis l(0) - l(1) >= s+2 fails");
  if (l1 < s) throw std::invalid_argument("hypothesis l(1) >= s fails");
  if (l1 <= 2 * s) {
    return {1, 2 * s + 1, Staircase({l0 - s - 1, l1 - s}), s + 1};
  }
  return {2, 2 * s + 2, Staircase({l0 - 2 * s - 2, l1 - 2 * s - 1}), s + 1};
}

ChainReport specialization_chain(long long N, long long ell) {
  ChainReport rep;
  rep.N = N;
  rep.ell = ell;
  if (ell < 0 || ell > N || N > 2 * ell) {
    rep.notes.push_back("invariants outside 0 <= ell <= N <= 2 ell");
    rep.needs_direct = true;
    return rep;
  }
  long long delta = N - ell;
  if (delta <= 1) {
    // curvilinear / height-1 shortcut: these classes are known to have
    // maximal rank without any staircase specialization.
    rep.certified = true;
    if (delta == 0) {
      rep.notes.push_back("curvilinear case N = ell; maximal rank known");
      if (N >= 1) {
        rep.terminal_m = 1;
        rep.terminal_E = Staircase({N - 1});
        rep.terminal_s = 1;
      }
    } else {
      rep.notes.push_back("N - ell = 1; height-1 shortcut, maximal rank known");
      if (N >= 3) {
        rep.terminal_m = 2;
        rep.terminal_E = Staircase({N - 3});
        rep.terminal_s = 1;
      }
    }
    return rep;
  }

  long long k = static_cast<long long>(std::sqrt(static_cast<double>(delta)));
  while ((k + 1) * (k + 1) <= delta) ++k;
  while (k * k > delta) --k;
  rep.k = k;

  bool mainthm = mainthm_check(N, ell);
  Staircase Ek;
  try {
    Ek = corollary_staircase(N, ell, k);
  } catch (const std::invalid_argument& e) {
    rep.notes.push_back(std::string("corollary hypothesis fails: ") + e.what());
    rep.needs_direct = true;
    return rep;
  }
  rep.intermediates.push_back(Ek);

  if (!mainthm) {
    // Outside the main inequality the chain has no wins certificate; stop at
    // E_k, the scheme used for direct rank verification in low degrees.
    rep.terminal_m = 2 * k;
    rep.terminal_E = Ek;
    rep.terminal_s = k;
    rep.certified = false;
    rep.needs_direct = true;
    rep.notes.push_back("mainthm inequality fails; terminal flagged for direct rank check");
    return rep;
  }

  if (delta <= k * (k + 1)) {
    rep.terminal_m = 2 * k;
    rep.terminal_E = Ek;
    rep.terminal_s = k;
    rep.certified = wins_check(Ek, rep.terminal_m, rep.terminal_s);
  } else {
    EspblocStep step;
    try {
      step = espbloc_step(Ek, k);
    } catch (const std::invalid_argument& e) {
      rep.notes.push_back(std::string("espbloc hypothesis fails: ") + e.what());
      rep.needs_direct = true;
      return rep;
    }
    rep.intermediates.push_back(step.E);
    rep.terminal_m = step.m;
    rep.terminal_E = step.E;
    rep.terminal_s = step.s;
    rep.certified = wins_check(step.E, step.m, step.s);
    {
      std::ostringstream os;
      os << "espbloc branch " << step.branch << ": l(0) = ell - (k+1)^2 = "
         << step.E.stair(0) << " (quoted alternative ell - (k+1)^2 - 1 = "
         << step.E.stair(0) - 1 << ")";
      rep.notes.push_back(os.str());
    }
  }
  rep.needs_direct = !rep.certified;
  return rep;
}

}  // namespace mr2
