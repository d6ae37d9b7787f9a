#ifndef MR2_STAIRCASE_HPP
#define MR2_STAIRCASE_HPP

#include <string>
#include <utility>
#include <vector>

namespace mr2 {

/// A staircase: a subset E of the non-negative quadrant closed under adding
/// quadrant vectors, with finite complement. Encoded by its weakly
/// decreasing stair lengths [l(0), l(1), ...] with trailing zeros trimmed;
/// (e1, e2) lies in E exactly when e1 >= l(e2).
class Staircase {
 public:
  Staircase() = default;
  /// Validates and normalizes; throws std::invalid_argument on
  /// non-weakly-decreasing or negative input.
  explicit Staircase(std::vector<long long> stairs);

  const std::vector<long long>& stairs() const { return stairs_; }
  long long stair(int i) const {
    return i < static_cast<int>(stairs_.size()) ? stairs_[i] : 0;
  }
  /// h(0): number of nonzero stairs.
  int height0() const { return static_cast<int>(stairs_.size()); }
  long long height(long long i) const;
  bool contains(long long e1, long long e2) const { return e1 >= stair(static_cast<int>(e2)); }
  bool empty() const { return stairs_.empty(); }

  bool operator==(const Staircase& o) const { return stairs_ == o.stairs_; }
  bool operator!=(const Staircase& o) const { return !(*this == o); }
  std::string str() const;

 private:
  std::vector<long long> stairs_;
};

Staircase make_staircase(std::vector<long long> stairs);
Staircase staircase_from_heights(const std::vector<long long>& heights);

/// Height list h(0..l(0)-1); empty staircase gives an empty list.
std::vector<long long> heights(const Staircase& E);

/// Delete the p-th slice (1-based): remove entry p-1 from the height list.
/// Chosen so that complement(E) = complement(sigma(E,p)) + h(p-1).
Staircase sigma(const Staircase& E, int p);

long long complement_size(const Staircase& E);

/// Inner corners of E: the minimal generators of the monomial ideal.
std::vector<std::pair<long long, long long>> min_generators(const Staircase& E);

/// m0 = min { e1 + s*e2 : (e1,e2) in E }; the minimum is attained on a
/// corner. Throws on the empty staircase.
long long m0(const Staircase& E, long long s);

/// binom(m+1, 2) + complement(E).
long long scheme_length(long long m, const Staircase& E);

/// l(0) > m, 2 l(1) <= m, and m >= m0(E, s). Requires height <= 2.
bool wins_check(const Staircase& E, long long m, long long s);

/// Exact integer form of N <= 2l - 1 - 3 sqrt(N - l):
/// 2l - 1 - N >= 0 and (2l - 1 - N)^2 >= 9 (N - l).
bool mainthm_check(long long N, long long ell);

/// The staircase with l(0) = ell - k(k+1), l(1) = N - ell - k^2.
/// Requires 2 ell - N > 2k, ell >= k(k+1), N - ell >= k^2; throws with the
/// failing inequality otherwise.
Staircase corollary_staircase(long long N, long long ell, long long k);

struct EspblocStep {
  int branch;  // 1 or 2
  long long m;
  Staircase E;
  long long s;
};

/// One specialization block step. Requires height <= 2, l(0)-l(1) >= s+2 and
/// l(1) >= s. Branch 1 (l(1) <= 2s): m = 2s+1, stairs (l(0)-s-1, l(1)-s).
/// Branch 2 (l(1) >= 2s+1): m = 2s+2, stairs (l(0)-2s-2, l(1)-2s-1).
EspblocStep espbloc_step(const Staircase& E, long long s);

struct ChainReport {
  long long N = 0, ell = 0;
  long long k = 0;
  std::vector<Staircase> intermediates;
  long long terminal_m = 0;
  Staircase terminal_E;
  long long terminal_s = 0;
  bool certified = false;        // terminal passes wins_check and mainthm holds
  bool needs_direct = false;     // flagged for direct rank verification
  std::vector<std::string> notes;
};

/// The specialization chain of the main degeneration argument. Always
/// returns a report; hypothesis failures are recorded in notes with
/// certified = false.
ChainReport specialization_chain(long long N, long long ell);

long long binom2(long long n);  // n*(n-1)/2

}  // namespace mr2

#endif
