#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capelli/exactalg/errors.hpp"
#include "capelli/matfun/matfun.hpp"
#include "capelli/symgroup/young.hpp"
#include "capelli/tensorop/builders.hpp"
#include "capelli/verify/check.hpp"

namespace capelli::detail {

// Typed access to the resolved string parameters of one check.
class Params {
 public:
  explicit Params(const ParamMap& values) : values_(values) {}
  const std::string& text(const std::string& key) const;
  bool is_all(const std::string& key) const { return text(key) == "all"; }
  int integer(const std::string& key) const;
  HMode hmode() const { return parse_hmode(text("hmode")); }
  AntisymSide side() const { return parse_side(text("side")); }
  Partition partition(const std::string& key) const { return parse_partition(text(key)); }
  // "(1,2,3)", "[1,2,3]" or "1,2,3".
  std::vector<int> int_list(const std::string& key) const;

 private:
  const ParamMap& values_;
};

std::vector<int> parse_int_list(const std::string& text);
std::string index_string(const std::vector<int>& k);

std::size_t term_count(const NCPoly& p);
std::size_t term_count(const TensorOperator& op);
std::size_t term_count(const GroupOperator& op);

// Accumulates comparisons of one check; the first mismatch becomes the witness.
class Verdict {
 public:
  explicit Verdict(CheckContext& ctx) : ctx_(ctx) {}

  bool same(const NCPoly& lhs, const NCPoly& rhs, const WitnessLocation& where = {});
  bool same(const TensorOperator& lhs, const TensorOperator& rhs, const std::string& sigma = "");
  bool same(const GroupOperator& lhs, const GroupOperator& rhs);
  bool ok() const { return !witness_; }
  std::size_t comparisons() const { return comparisons_; }
  std::size_t failures() const { return failures_; }
  const std::optional<Witness>& witness() const { return witness_; }
  // Status, witness and term counts.
  void finish(CheckReport& report) const;

 private:
  void record(std::size_t lhs_terms, std::size_t rhs_terms);
  void fail(Witness w);

  CheckContext& ctx_;
  std::optional<Witness> witness_;
  TermCounts counts_;
  std::size_t comparisons_ = 0;
  std::size_t failures_ = 0;
};

// Witness for two unequal polynomials: the leading monomial of lhs - rhs.
Witness poly_witness(const NCPoly& lhs, const NCPoly& rhs, const WitnessLocation& where);

// Left-to-right product of embedded matrices; factors[k] = (matrix, slot). The rightmost factor
// acts on `domain`.
struct Slotted {
  const PolyMatrix* matrix;
  int slot;
};
std::vector<TensorOperator> embed_chain(const std::vector<Slotted>& factors, const MixedSpace& domain);

// X_t Y_t acting on `domain`.
TensorOperator xy_factor(const PolyMatrix& x, const PolyMatrix& y, int t, const MixedSpace& domain, const RelationSpec& spec);

// c * op for a central polynomial c.
TensorOperator scale(const TensorOperator& op, const NCPoly& c, const RelationSpec& spec);

// Rows of a symmetrizer that determine A·B (strictly increasing, resp. non-decreasing indices).
TensorOperator determining_rows(SymmetrizerKind kind, const std::vector<int>& positions, const MixedSpace& space);

NCPoly h_power(const RelationSpec& spec, int power, const Rational& coeff);

// Pfaffian that accepts the empty matrix.
NCPoly pf(const PolyMatrix& m, const RelationSpec& spec);
// Determinant of commuting entries that accepts the empty matrix.
NCPoly det(const PolyMatrix& m, const RelationSpec& spec);

std::vector<int> range(int from, int to);
std::vector<int> complement(const std::vector<int>& subset, int n);

void add_model_note(CheckReport& report, const RelationSpec& spec);

// Registration hooks, one per source file.
void register_theorems(std::vector<CheckDef>& defs);
void register_turnbull_huks(std::vector<CheckDef>& defs);
void register_lemmas(std::vector<CheckDef>& defs);
void register_pfaffian(std::vector<CheckDef>& defs);
void register_engine(std::vector<CheckDef>& defs);

}  // namespace capelli::detail
