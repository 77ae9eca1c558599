#include "hgfm/partition.hpp"

#include "hgfm/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hgfm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ShapeError("partition parts must be nonincreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void emit(int remaining, int max_part, int max_length, std::vector<int>& cur,
          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_length == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    emit(remaining - p, p, max_length - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int weight, int max_length) {
  if (weight < 0) throw DomainError("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  emit(weight, weight, std::max(max_length, 0), cur, out);
  return out;
}

bool dominated_by(const Partition& mu, const Partition& lam) {
  if (mu.weight() != lam.weight())
    throw ShapeError("dominance compares partitions of equal weight");
  long ps_mu = 0, ps_lam = 0;
  const int n = std::max(mu.length(), lam.length());
  for (int i = 0; i < n; ++i) {
    ps_mu += mu.part(i);
    ps_lam += lam.part(i);
    if (ps_mu > ps_lam) return false;
  }
  return true;
}

bool revlex_before(const Partition& a, const Partition& b) {
  const int n = std::max(a.length(), b.length());
  for (int i = 0; i < n; ++i) {
    if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
  }
  return false;
}

}  // namespace hgfm
