#pragma once

#include "hgfm/errors.hpp"
#include "hgfm/gammafact.hpp"
#include "hgfm/partition.hpp"
#include "hgfm/rational.hpp"
#include "hgfm/smallmat.hpp"

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace hgfm {

// Jack polynomials in the C normalization, keyed on the cone parameter d
// (Jack parameter alpha = 1/d), chosen so that shell sums telescope:
//
//     sum_{|kappa| = k} C_kappa(x_1,...,x_m; d) = (x_1 + ... + x_m)^k.
//
// Internally each C_kappa is an expansion over monomial symmetric functions
// m_mu. The coefficients come from the eigenfunction recurrence of the
// Laplace-Beltrami-type operator: with rho(lam) = sum_i lam_i (lam_i - 1 -
// 2 d (i-1)), the monic (P-normalized) coefficients satisfy
//
//     c_{lam,mu} = 2d / (rho(lam) - rho(mu)) *
//                  sum_{i<j, t>=1} ((mu_i + t) - (mu_j - t)) * c_{lam,nu},
//
// where nu is the sorted rearrangement of mu with mu_i -> mu_i + t and
// mu_j -> mu_j - t, and only nu dominated by lam contribute. Every term is
// nonnegative for positive d, so the same recurrence is numerically benign
// in floating point. The C normalization multiplies the monic expansion by
// |kappa|! / prod_{cells s} ((arm(s) + 1) + d * leg(s)).

/// Monomial expansion of C_kappa restricted to partitions with at most
/// `mcap` parts, in reverse-lexicographic descending order of mu.
template <class T>
struct JackExpansion {
  std::vector<std::pair<Partition, T>> terms;
  int mcap = 0;
};

/// Thread-safe memo of Jack expansions keyed on (kappa, d, mcap).
template <class T>
class JackTable {
 public:
  std::shared_ptr<const JackExpansion<T>> expansion(const Partition& kappa,
                                                    const ConeParameter& cone, int mcap);

  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
  };
  Stats stats() const;
  std::size_t entries() const;
  void clear();

  /// Serializes the exact table to a versioned text stream; loading merges
  /// a dump back in (returns the number of entries read, throws Error on
  /// malformed input). Floating tables are cheap to rebuild and do not
  /// round-trip exactly, so only the Rational instantiation is supported.
  friend void dump_jack_cache(const JackTable<Rational>& table, std::ostream& os);
  friend std::size_t load_jack_cache(JackTable<Rational>& table, std::istream& is);

 private:
  struct Key {
    Partition kappa;
    Rational d;
    int mcap;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = PartitionHash{}(k.kappa);
      h ^= std::hash<std::string>{}(k.d.str()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= static_cast<std::size_t>(k.mcap) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return h;
    }
  };

  mutable std::mutex mu_;
  std::unordered_map<Key, std::shared_ptr<const JackExpansion<T>>, KeyHash> map_;
  mutable std::uint64_t hits_ = 0, misses_ = 0;
};

/// Process-wide shared table for the given backend.
template <class T>
JackTable<T>& global_jack_table();

/// Monomial symmetric polynomial m_mu(x): the orbit sum over distinct
/// permutations of the exponent vector. Zero when mu has more parts than x.
template <class T>
T monomial_sym(const Partition& mu, std::span<const T> x);

/// m_mu(1,...,1) with m ones, as a count of distinct exponent arrangements.
long long monomial_count_at_identity(const Partition& mu, int m);

/// C_kappa(x; d). Zero when kappa has more parts than x has entries.
template <class T>
T jack_c(const Partition& kappa, std::span<const T> x, const ConeParameter& cone,
         JackTable<T>* table = nullptr);

/// C_kappa(I_m; d) via the counting formula for monomials at the identity.
template <class T>
T jack_c_at_identity(const Partition& kappa, int m, const ConeParameter& cone,
                     JackTable<T>* table = nullptr);

/// All C_kappa(x; d) for |kappa| = weight, aligned with
/// enumerate_partitions(weight, x.size()). Shares the monomial evaluations
/// across the shell, which is what the series engines want.
template <class T>
std::vector<T> jack_c_shell(int weight, std::span<const T> x, const ConeParameter& cone,
                            JackTable<T>* table = nullptr);

/// Schur polynomial s_kappa(x) via the Jacobi-Trudi determinant of complete
/// homogeneous symmetric polynomials. At d = 1 (alpha = 1),
/// C_kappa = (|kappa|! / prod hooks) * s_kappa relates the two bases.
template <class T>
T schur(const Partition& kappa, std::span<const T> x);

void dump_jack_cache(const JackTable<Rational>& table, std::ostream& os);
std::size_t load_jack_cache(JackTable<Rational>& table, std::istream& is);

// ---------------------------------------------------------------------------
// implementation
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
T jack_rho(const Partition& lam, const T& d) {
  T out = scalar_traits<T>::from_int(0);
  for (int i = 0; i < lam.length(); ++i) {
    const T li = scalar_traits<T>::from_int(lam.part(i));
    out += li * (li - scalar_traits<T>::from_int(1) -
                 scalar_traits<T>::from_int(2) * d * scalar_traits<T>::from_int(i));
  }
  return out;
}

template <class T>
T c_norm_scale(const Partition& lam, const T& d) {
  const Partition conj = lam.conjugate();
  T denom = scalar_traits<T>::from_int(1);
  T kfact = scalar_traits<T>::from_int(1);
  int cell = 0;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam.part(i); ++j) {
      const int arm = lam.part(i) - (j + 1);
      const int leg = conj.part(j) - (i + 1);
      denom *= scalar_traits<T>::from_int(arm + 1) + d * scalar_traits<T>::from_int(leg);
      kfact *= scalar_traits<T>::from_int(++cell);
    }
  }
  return kfact / denom;
}

template <class T>
JackExpansion<T> build_jack_expansion(const Partition& lam, const ConeParameter& cone, int mcap) {
  const T d = cone_d<T>(cone);
  const int k = lam.weight();

  JackExpansion<T> out;
  out.mcap = mcap;

  std::unordered_map<Partition, T, PartitionHash> coeff;
  const T rho_lam = jack_rho(lam, d);

  for (const Partition& mu : enumerate_partitions(k, mcap)) {
    if (!dominated_by(mu, lam)) continue;
    if (mu == lam) {
      coeff.emplace(mu, scalar_traits<T>::from_int(1));
      out.terms.emplace_back(mu, scalar_traits<T>::from_int(1));
      continue;
    }
    T acc = scalar_traits<T>::from_int(0);
    const std::vector<int>& p = mu.parts();
    const int len = static_cast<int>(p.size());
    std::vector<int> work;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) {
        for (int t = 1; t <= p[static_cast<std::size_t>(j)]; ++t) {
          work.assign(p.begin(), p.end());
          work[static_cast<std::size_t>(i)] += t;
          work[static_cast<std::size_t>(j)] -= t;
          std::sort(work.begin(), work.end(), std::greater<int>());
          while (!work.empty() && work.back() == 0) work.pop_back();
          Partition nu(work);
          auto it = coeff.find(nu);
          if (it == coeff.end()) continue;  // nu not dominated by lam
          const int w = (p[static_cast<std::size_t>(i)] + t) - (p[static_cast<std::size_t>(j)] - t);
          acc += scalar_traits<T>::from_int(w) * it->second;
        }
      }
    }
    const T denom = rho_lam - jack_rho(mu, d);
    const T value = scalar_traits<T>::from_int(2) * d * acc / denom;
    coeff.emplace(mu, value);
    out.terms.emplace_back(mu, value);
  }

  const T scale = c_norm_scale(lam, d);
  for (auto& [mu, c] : out.terms) c *= scale;
  return out;
}

}  // namespace detail

template <class T>
std::shared_ptr<const JackExpansion<T>> JackTable<T>::expansion(const Partition& kappa,
                                                                const ConeParameter& cone,
                                                                int mcap) {
  if (kappa.length() > mcap)
    throw ShapeError("jack expansion requested with kappa longer than mcap");
  Key key{kappa, cone.d(), mcap};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      ++hits_;
      return it->second;
    }
    ++misses_;
  }
  auto built = std::make_shared<const JackExpansion<T>>(
      detail::build_jack_expansion<T>(kappa, cone, mcap));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = map_.emplace(std::move(key), built);
  return it->second;  // first build wins under a race
}

template <class T>
typename JackTable<T>::Stats JackTable<T>::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return Stats{hits_, misses_};
}

template <class T>
std::size_t JackTable<T>::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

template <class T>
void JackTable<T>::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  map_.clear();
  hits_ = misses_ = 0;
}

template <class T>
JackTable<T>& global_jack_table() {
  static JackTable<T> table;
  return table;
}

template <class T>
T monomial_sym(const Partition& mu, std::span<const T> x) {
  const int m = static_cast<int>(x.size());
  if (mu.length() > m) return scalar_traits<T>::from_int(0);
  std::vector<int> exps(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < mu.length(); ++i) exps[static_cast<std::size_t>(i)] = mu.part(i);
  std::sort(exps.begin(), exps.end());
  T total = scalar_traits<T>::from_int(0);
  do {
    T term = scalar_traits<T>::from_int(1);
    for (int i = 0; i < m; ++i)
      if (exps[static_cast<std::size_t>(i)] != 0)
        term *= pow_int(x[static_cast<std::size_t>(i)], exps[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

template <class T>
T jack_c(const Partition& kappa, std::span<const T> x, const ConeParameter& cone,
         JackTable<T>* table) {
  const int m = static_cast<int>(x.size());
  if (kappa.length() > m) return scalar_traits<T>::from_int(0);
  if (!table) table = &global_jack_table<T>();
  auto exp = table->expansion(kappa, cone, m);
  T out = scalar_traits<T>::from_int(0);
  for (const auto& [mu, c] : exp->terms) out += c * monomial_sym(mu, x);
  return out;
}

template <class T>
T jack_c_at_identity(const Partition& kappa, int m, const ConeParameter& cone,
                     JackTable<T>* table) {
  if (kappa.length() > m) return scalar_traits<T>::from_int(0);
  if (!table) table = &global_jack_table<T>();
  auto exp = table->expansion(kappa, cone, m);
  T out = scalar_traits<T>::from_int(0);
  for (const auto& [mu, c] : exp->terms)
    out += c * scalar_traits<T>::from_int(monomial_count_at_identity(mu, m));
  return out;
}

template <class T>
std::vector<T> jack_c_shell(int weight, std::span<const T> x, const ConeParameter& cone,
                            JackTable<T>* table) {
  const int m = static_cast<int>(x.size());
  if (!table) table = &global_jack_table<T>();
  const auto kappas = enumerate_partitions(weight, m);

  std::unordered_map<Partition, T, PartitionHash> mono;
  for (const Partition& mu : enumerate_partitions(weight, m)) mono.emplace(mu, monomial_sym(mu, x));

  std::vector<T> out;
  out.reserve(kappas.size());
  for (const Partition& kappa : kappas) {
    auto exp = table->expansion(kappa, cone, m);
    T v = scalar_traits<T>::from_int(0);
    for (const auto& [mu, c] : exp->terms) v += c * mono.at(mu);
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
T schur(const Partition& kappa, std::span<const T> x) {
  const int m = static_cast<int>(x.size());
  if (kappa.length() > m) return scalar_traits<T>::from_int(0);
  if (kappa.empty()) return scalar_traits<T>::from_int(1);
  const int l = kappa.length();
  const int hmax = kappa.part(0) + l - 1;

  // Complete homogeneous h_0..h_hmax by the one-variable-at-a-time update
  // h[r] += x * h[r-1], which tracks H(t) -> H(t) / (1 - x t).
  std::vector<T> h(static_cast<std::size_t>(hmax) + 1, scalar_traits<T>::from_int(0));
  h[0] = scalar_traits<T>::from_int(1);
  for (const T& xi : x)
    for (int r = 1; r <= hmax; ++r)
      h[static_cast<std::size_t>(r)] += xi * h[static_cast<std::size_t>(r - 1)];

  std::vector<std::vector<T>> M(static_cast<std::size_t>(l),
                                std::vector<T>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int idx = kappa.part(i) - (i + 1) + (j + 1);
      M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (idx < 0) ? scalar_traits<T>::from_int(0) : h[static_cast<std::size_t>(idx)];
    }
  return detail::det_small(M);
}

}  // namespace hgfm
