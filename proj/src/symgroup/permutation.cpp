#include "capelli/symgroup/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "capelli/exactalg/errors.hpp"

namespace capelli {

Permutation Permutation::identity(int r) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(r));
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)]) {
      throw UsageError("image list is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int r, int a, int b) {
  if (a < 1 || b < 1 || a > r || b > r) throw UsageError("transposition index out of range");
  Permutation p = identity(r);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

std::vector<Permutation> Permutation::all(int r) {
  std::vector<Permutation> out;
  Permutation p = identity(r);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images_.begin(), p.images_.end()));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return p;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start) + 1) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ',';
      first = false;
      out += std::to_string(i + 1);
      i = static_cast<std::size_t>(images_[i] - 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw UsageError("composing permutations of different degree");
  Permutation p;
  p.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) p.images_[i] = a(b.images_[i]);
  return p;
}

int block_sign(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> seq;
  std::set<int> seen;
  for (const auto& b : blocks)
    for (int v : b) {
      if (!seen.insert(v).second) throw UsageError("blocks overlap");
      seq.push_back(v);
    }
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

namespace {

void shuffle_rec(std::vector<int>& remaining, std::vector<int>& order, std::vector<int>& positions,
                 const std::vector<int>& indices, std::vector<TwoShuffle>& out) {
  if (remaining.empty()) {
    int inv = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
      for (std::size_t j = i + 1; j < positions.size(); ++j)
        if (positions[i] > positions[j]) ++inv;
    out.push_back({order, inv % 2 == 0 ? 1 : -1});
    return;
  }
  const int lead = remaining.front();
  for (std::size_t k = 1; k < remaining.size(); ++k) {
    const int partner = remaining[k];
    std::vector<int> rest;
    for (std::size_t t = 1; t < remaining.size(); ++t)
      if (t != k) rest.push_back(remaining[t]);
    order.push_back(indices[static_cast<std::size_t>(lead)]);
    order.push_back(indices[static_cast<std::size_t>(partner)]);
    positions.push_back(lead);
    positions.push_back(partner);
    std::swap(rest, remaining);
    shuffle_rec(remaining, order, positions, indices, out);
    std::swap(rest, remaining);
    order.resize(order.size() - 2);
    positions.resize(positions.size() - 2);
  }
}

}  // namespace

std::vector<TwoShuffle> two_shuffles(const std::vector<int>& indices) {
  if (indices.size() % 2 != 0) throw UsageError("2-shuffles need an even number of indices");
  std::vector<TwoShuffle> out;
  std::vector<int> remaining(indices.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> order, positions;
  shuffle_rec(remaining, order, positions, indices, out);
  return out;
}

}  // namespace capelli
