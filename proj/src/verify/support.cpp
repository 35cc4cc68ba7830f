#include "internal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace capelli::detail {

const std::string& Params::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw UsageError("missing parameter '" + key + "'");
  return it->second;
}

int Params::integer(const std::string& key) const {
  const std::string& v = text(key);
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(v, &used);
  } catch (const std::exception&) {
    throw UsageError("parameter '" + key + "' expects an integer, got '" + v + "'");
  }
  if (used != v.size()) throw UsageError("parameter '" + key + "' expects an integer, got '" + v + "'");
  return out;
}

std::vector<int> Params::int_list(const std::string& key) const {
  try {
    return parse_int_list(text(key));
  } catch (const UsageError& e) {
    throw UsageError("parameter '" + key + "': " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string body = text;
  if (!body.empty() && (body.front() == '(' || body.front() == '[')) {
    const char close = body.front() == '(' ? ')' : ']';
    if (body.back() != close) throw UsageError("unbalanced brackets in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      throw UsageError("malformed integer list '" + text + "'");
    }
    if (used != item.size()) throw UsageError("malformed integer list '" + text + "'");
  }
  return out;
}

std::string index_string(const std::vector<int>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

std::size_t term_count(const NCPoly& p) { return p.size(); }

std::size_t term_count(const TensorOperator& op) {
  std::size_t n = 0;
  for (const auto& [out, row] : op.rows())
    for (const auto& [in, v] : row) n += v.size();
  return n;
}

std::size_t term_count(const GroupOperator& op) {
  std::size_t n = 0;
  for (const auto& [sigma, a] : op.terms()) n += term_count(a);
  return n;
}

Witness poly_witness(const NCPoly& lhs, const NCPoly& rhs, const WitnessLocation& where) {
  const NCPoly diff = lhs - rhs;
  const Monomial& m = diff.terms().begin()->first;
  return Witness{m.to_string(), lhs.coefficient(m).to_string(), rhs.coefficient(m).to_string(), where};
}

void Verdict::record(std::size_t lhs_terms, std::size_t rhs_terms) {
  ctx_.require_terms(lhs_terms);
  ctx_.require_terms(rhs_terms);
  counts_.lhs += lhs_terms;
  counts_.rhs += rhs_terms;
  ++comparisons_;
  ctx_.checkpoint();
}

void Verdict::fail(Witness w) {
  ++failures_;
  if (!witness_) witness_ = std::move(w);
}

bool Verdict::same(const NCPoly& lhs, const NCPoly& rhs, const WitnessLocation& where) {
  record(term_count(lhs), term_count(rhs));
  if (lhs == rhs) return true;
  fail(poly_witness(lhs, rhs, where));
  return false;
}

bool Verdict::same(const TensorOperator& lhs, const TensorOperator& rhs, const std::string& sigma) {
  record(term_count(lhs), term_count(rhs));
  const auto diff = first_difference(lhs, rhs);
  if (!diff) return true;
  const auto& space_out = lhs.codomain();
  const auto& space_in = lhs.domain();
  fail(poly_witness(diff->lhs, diff->rhs,
                    {sigma, index_string(space_out.multi_index(diff->out)),
                     space_in.factors() == 0 ? "()" : index_string(space_in.multi_index(diff->in))}));
  return false;
}

bool Verdict::same(const GroupOperator& lhs, const GroupOperator& rhs) {
  std::set<Permutation> keys;
  for (const auto& [sigma, a] : lhs.terms()) keys.insert(sigma);
  for (const auto& [sigma, a] : rhs.terms()) keys.insert(sigma);
  bool all = true;
  for (const auto& sigma : keys) {
    TensorOperator a = lhs.component(sigma);
    TensorOperator b = rhs.component(sigma);
    all = same(a, b, sigma.to_string()) && all;
    if (!all) break;
  }
  return all;
}

void Verdict::finish(CheckReport& report) const {
  report.term_counts = counts_;
  if (witness_) {
    report.status = CheckStatus::Fail;
    report.witness = witness_;
  } else {
    report.status = CheckStatus::Pass;
    report.witness.reset();
  }
}

std::vector<TensorOperator> embed_chain(const std::vector<Slotted>& factors, const MixedSpace& domain) {
  std::vector<TensorOperator> ops(factors.size());
  MixedSpace current = domain;
  for (std::size_t k = factors.size(); k-- > 0;) {
    ops[k] = embed_matrix(*factors[k].matrix, factors[k].slot, current);
    current = ops[k].codomain();
  }
  return ops;
}

TensorOperator xy_factor(const PolyMatrix& x, const PolyMatrix& y, int t, const MixedSpace& domain, const RelationSpec& spec) {
  const auto ops = embed_chain({{&x, t}, {&y, t}}, domain);
  return compose(ops[0], ops[1], spec);
}

TensorOperator scale(const TensorOperator& op, const NCPoly& c, const RelationSpec& spec) {
  return op.map_entries([&](const NCPoly& v) { return multiply(c, v, spec); });
}

TensorOperator determining_rows(SymmetrizerKind kind, const std::vector<int>& positions, const MixedSpace& space) {
  const TensorOperator full = symmetrizer(kind, positions, space);
  std::vector<std::size_t> keep;
  for (std::size_t row = 0; row < space.dimension(); ++row) {
    const auto k = space.multi_index(row);
    bool ordered = true;
    for (std::size_t a = 1; a < positions.size() && ordered; ++a) {
      const int prev = k[static_cast<std::size_t>(positions[a - 1] - 1)];
      const int cur = k[static_cast<std::size_t>(positions[a] - 1)];
      ordered = kind == SymmetrizerKind::Antisymmetric ? prev < cur : prev <= cur;
    }
    if (ordered) keep.push_back(row);
  }
  return full.select_rows(keep);
}

NCPoly h_power(const RelationSpec& spec, int power, const Rational& coeff) {
  const NCPoly h = h_matrix(spec).at(0, 0);
  NCPoly out(coeff);
  for (int k = 0; k < power; ++k) out = multiply(out, h, spec);
  return out;
}

NCPoly pf(const PolyMatrix& m, const RelationSpec& spec) {
  if (m.rows() == 0) return NCPoly(1);
  return pfaffian(m, spec);
}

NCPoly det(const PolyMatrix& m, const RelationSpec& spec) {
  if (m.rows() == 0 && m.cols() == 0) return NCPoly(1);
  return column_det(m, spec);
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

std::vector<int> complement(const std::vector<int>& subset, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (std::find(subset.begin(), subset.end(), i) == subset.end()) out.push_back(i);
  return out;
}

void add_model_note(CheckReport& report, const RelationSpec& spec) {
  report.model_notes.push_back("algebra " + spec.describe());
  auto& notes = report.model_notes;
  if (spec.family() != Family::Weyl && spec.hmode() != HMode::Numeric &&
      std::find(notes.begin(), notes.end(), kCentralHNote) == notes.end())
    notes.push_back(kCentralHNote);
}

}  // namespace capelli::detail
