#include "capelli/tensorop/tensor_operator.hpp"

#include <algorithm>
#include <set>

#include "capelli/exactalg/errors.hpp"

namespace capelli {

MixedSpace::MixedSpace(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_) {
    if (d < 1) throw UsageError("tensor factor of dimension < 1");
    total_ *= static_cast<std::size_t>(d);
  }
}

int MixedSpace::dim(int position) const {
  if (position < 1 || position > factors()) throw BoundsError("tensor factor position out of range");
  return dims_[static_cast<std::size_t>(position - 1)];
}

std::size_t MixedSpace::index(const MultiIndex& k) const {
  if (k.size() != dims_.size()) throw BoundsError("multi-index length does not match the space");
  std::size_t idx = 0;
  for (std::size_t t = 0; t < dims_.size(); ++t) {
    if (k[t] < 1 || k[t] > dims_[t]) throw BoundsError("multi-index entry out of range");
    idx = idx * static_cast<std::size_t>(dims_[t]) + static_cast<std::size_t>(k[t] - 1);
  }
  return idx;
}

MultiIndex MixedSpace::multi_index(std::size_t linear) const {
  if (linear >= total_) throw BoundsError("basis index out of range");
  MultiIndex k(dims_.size());
  for (std::size_t t = dims_.size(); t-- > 0;) {
    const auto d = static_cast<std::size_t>(dims_[t]);
    k[t] = static_cast<int>(linear % d) + 1;
    linear /= d;
  }
  return k;
}

MixedSpace MixedSpace::with_dim(int position, int dim) const {
  auto dims = dims_;
  if (position < 1 || position > factors()) throw BoundsError("tensor factor position out of range");
  dims[static_cast<std::size_t>(position - 1)] = dim;
  return MixedSpace(std::move(dims));
}

std::string MixedSpace::to_string() const {
  std::string out = "(";
  for (std::size_t t = 0; t < dims_.size(); ++t) out += (t ? "," : "") + std::to_string(dims_[t]);
  return out + ")";
}

TensorOperator TensorOperator::identity(const MixedSpace& space) {
  TensorOperator op(space, space);
  for (std::size_t i = 0; i < space.dimension(); ++i) op.rows_[i].emplace(i, NCPoly(1));
  return op;
}

TensorOperator TensorOperator::basis_vector(const MixedSpace& space, const MultiIndex& k) {
  TensorOperator op(MixedSpace(std::vector<int>{}), space);
  op.rows_[space.index(k)].emplace(0, NCPoly(1));
  return op;
}

std::size_t TensorOperator::nonzeros() const {
  std::size_t n = 0;
  for (const auto& [i, row] : rows_) n += row.size();
  return n;
}

NCPoly TensorOperator::entry(std::size_t out, std::size_t in) const {
  if (out >= codomain_.dimension() || in >= domain_.dimension()) throw BoundsError("operator entry out of range");
  const auto r = rows_.find(out);
  if (r == rows_.end()) return NCPoly();
  const auto c = r->second.find(in);
  return c == r->second.end() ? NCPoly() : c->second;
}

NCPoly TensorOperator::entry(const MultiIndex& out, const MultiIndex& in) const {
  return entry(codomain_.index(out), domain_.index(in));
}

void TensorOperator::add_entry(std::size_t out, std::size_t in, const NCPoly& value) {
  if (value.is_zero()) return;
  auto& row = rows_[out];
  auto [it, inserted] = row.try_emplace(in, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) {
    row.erase(it);
    if (row.empty()) rows_.erase(out);
  }
}

TensorOperator TensorOperator::select_rows(const std::vector<std::size_t>& keep) const {
  TensorOperator out(domain_, codomain_);
  for (auto i : keep) {
    const auto r = rows_.find(i);
    if (r != rows_.end()) out.rows_.insert(*r);
  }
  return out;
}

TensorOperator TensorOperator::select_cols(const std::vector<std::size_t>& keep) const {
  const std::set<std::size_t> wanted(keep.begin(), keep.end());
  TensorOperator out(domain_, codomain_);
  for (const auto& [i, row] : rows_) {
    Row kept;
    for (const auto& [j, v] : row)
      if (wanted.count(j)) kept.emplace(j, v);
    if (!kept.empty()) out.rows_.emplace(i, std::move(kept));
  }
  return out;
}

TensorOperator TensorOperator::map_entries(const std::function<NCPoly(const NCPoly&)>& f) const {
  TensorOperator out(domain_, codomain_);
  for (const auto& [i, row] : rows_)
    for (const auto& [j, v] : row) out.add_entry(i, j, f(v));
  return out;
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
  if (!(domain_ == o.domain_) || !(codomain_ == o.codomain_)) throw UsageError("operator spaces differ in addition");
  for (const auto& [i, row] : o.rows_)
    for (const auto& [j, v] : row) add_entry(i, j, v);
  return *this;
}

TensorOperator& TensorOperator::operator-=(const TensorOperator& o) {
  if (!(domain_ == o.domain_) || !(codomain_ == o.codomain_)) throw UsageError("operator spaces differ in subtraction");
  for (const auto& [i, row] : o.rows_)
    for (const auto& [j, v] : row) add_entry(i, j, -v);
  return *this;
}

TensorOperator& TensorOperator::operator*=(const Rational& c) {
  if (c.is_zero()) {
    rows_.clear();
    return *this;
  }
  for (auto& [i, row] : rows_)
    for (auto& [j, v] : row) v *= c;
  return *this;
}

std::string TensorOperator::to_string() const {
  std::string out;
  for (const auto& [i, row] : rows_)
    for (const auto& [j, v] : row) {
      auto idx = [](const MultiIndex& k) {
        std::string s;
        for (std::size_t t = 0; t < k.size(); ++t) s += (t ? "," : "") + std::to_string(k[t]);
        return s;
      };
      out += "[" + idx(codomain_.multi_index(i)) + "|" + idx(domain_.multi_index(j)) + "] " + v.to_string() + "\n";
    }
  return out.empty() ? "0\n" : out;
}

TensorOperator compose(const TensorOperator& a, const TensorOperator& b, const RelationSpec& spec) {
  if (!(a.domain() == b.codomain())) {
    throw UsageError("operator composition space mismatch: " + a.domain().to_string() + " vs " + b.codomain().to_string());
  }
  TensorOperator c(b.domain(), a.codomain());
  for (const auto& [i, arow] : a.rows()) {
    TensorOperator::Row acc;
    for (const auto& [j, av] : arow) {
      const auto brow = b.rows().find(j);
      if (brow == b.rows().end()) continue;
      for (const auto& [k, bv] : brow->second) multiply_add(acc[k], av, bv, spec);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    if (!acc.empty()) c.rows_.emplace(i, std::move(acc));
  }
  return c;
}

TensorOperator compose_all(const std::vector<TensorOperator>& factors, const RelationSpec& spec) {
  if (factors.empty()) throw UsageError("empty operator product");
  TensorOperator acc = factors.front();
  for (std::size_t t = 1; t < factors.size(); ++t) acc = compose(acc, factors[t], spec);
  return acc;
}

std::optional<EntryDifference> first_difference(const TensorOperator& a, const TensorOperator& b) {
  std::set<std::pair<std::size_t, std::size_t>> keys;
  for (const auto* op : {&a, &b})
    for (const auto& [i, row] : op->rows())
      for (const auto& [j, v] : row) keys.emplace(i, j);
  for (const auto& [i, j] : keys) {
    NCPoly lhs = a.entry(i, j);
    NCPoly rhs = b.entry(i, j);
    if (!(lhs == rhs)) return EntryDifference{i, j, std::move(lhs), std::move(rhs)};
  }
  return std::nullopt;
}

}  // namespace capelli
