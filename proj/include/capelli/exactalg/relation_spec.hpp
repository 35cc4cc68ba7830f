#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "capelli/exactalg/generator.hpp"
#include "capelli/exactalg/rational.hpp"

namespace capelli {

enum class Family { Capelli, TurnbullSym, TurnbullAnti, Huks, Weyl };

// How the parameter matrix H (or the scalar h of the Huks family) is realized.
enum class HMode { Symbolic, Identity, ScalarH, Numeric };

enum class Symmetry { General, Symmetric, Antisymmetric };

enum class AntisymSide { X, Y };

std::string to_string(Family f);
std::string to_string(HMode m);
std::string to_string(AntisymSide s);
HMode parse_hmode(const std::string& text);
AntisymSide parse_side(const std::string& text);

// A central factor c or c*g with g an H entry or h; commutators are sums of these.
struct CentralTerm {
  Rational coeff;
  std::optional<GeneratorSymbol> symbol;
};
using CentralSum = std::vector<CentralTerm>;

// Declarative description of one relation algebra: X's commute, Y's commute, H is central, and
// [X_{ij}, Y_{kl}] is given by the family template with H realized per the hmode.
//
//   Capelli(n,m,s)   X n×m, Y m×s, H n×s   [X_ij,Y_kl] = -δ_jk H_il
//   TurnbullSym(n,m) X n×n symmetric, Y n×m, H n×m   -(δ_ik H_jl + δ_jk H_il)
//   TurnbullAnti(n,m) X n×n antisymmetric, Y n×m, H n×m   -(δ_ik H_jl - δ_jk H_il)
//   Huks(n,side)     X, Y n×n, one of them antisymmetric   -h(δ_jk δ_il - δ_ik δ_jl)
//   Weyl(n)          Capelli(n,n,n) with H = I; x_ij = X_ij, d_ij = Y_ji
class RelationSpec {
 public:
  static RelationSpec capelli(int n, int m, int s, HMode mode = HMode::Symbolic);
  static RelationSpec turnbull_sym(int n, int m, HMode mode = HMode::Symbolic);
  static RelationSpec turnbull_anti(int n, int m, HMode mode = HMode::Symbolic);
  static RelationSpec huks(int n, AntisymSide side, HMode mode = HMode::ScalarH);
  static RelationSpec weyl(int n);
  // Replaces the hmode with Numeric using the given matrix (H's shape, or 1×1 for Huks).
  RelationSpec with_numeric_h(const RationalMatrix& h) const;

  Family family() const { return family_; }
  HMode hmode() const { return hmode_; }
  AntisymSide antisym_side() const { return side_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int s() const { return s_; }

  int x_rows() const;
  int x_cols() const;
  int y_rows() const;
  int y_cols() const;
  // Shape of the H matrix (0×0 for families without H entries).
  int h_rows() const;
  int h_cols() const;
  Symmetry x_symmetry() const;
  Symmetry y_symmetry() const;
  // True for Weyl(n) and for Capelli(n,n,n) with H = I, which is the same algebra.
  bool is_weyl_model() const;

  // Identifies the algebra; polynomials remember the tag of the spec they were built over.
  std::uint64_t tag() const { return tag_; }
  std::string describe() const;

  struct Canonical {
    GeneratorSymbol symbol;
    int sign = 1;  // 0 means the generator is the zero polynomial (antisymmetric diagonal)
  };
  // Resolves a generator to its stored representative; throws BoundsError when out of range.
  Canonical canonicalize(GeneratorSymbol g) const;
  void check_bounds(GeneratorSymbol g) const;

  // The value of H_{il} under the hmode.
  CentralSum h_value(int i, int l) const;
  // The value of the scalar h under the hmode (Huks family).
  CentralSum h_scalar() const;

  // [X_{ij}, Y_{kl}] evaluated from the family template with raw (uncanonicalized) indices.
  CentralSum commutator_template(int i, int j, int k, int l) const;
  // [x, y] for canonical symbols; served from a table built at construction.
  const CentralSum& commutator(GeneratorSymbol x, GeneratorSymbol y) const;

  friend bool operator==(const RelationSpec& a, const RelationSpec& b) { return a.tag_ == b.tag_; }

 private:
  RelationSpec(Family family, int n, int m, int s, AntisymSide side, HMode mode);
  void finalize();

  Family family_ = Family::Capelli;
  int n_ = 1;
  int m_ = 1;
  int s_ = 1;
  AntisymSide side_ = AntisymSide::Y;
  HMode hmode_ = HMode::Symbolic;
  RationalMatrix numeric_h_;
  std::uint64_t tag_ = 0;
  std::shared_ptr<const std::vector<CentralSum>> table_;
};

}  // namespace capelli
