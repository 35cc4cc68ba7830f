#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace capelli {

// Generator kinds in normal order: X block, then the central block (H entries and the scalar h),
// then the Y block. The enumerator values are the high bits of the packed code, so sorting codes
// sorts a word into normal order.
enum class Kind : std::uint8_t { X = 0, H = 1, Hbar = 2, Y = 3 };

// One generator X_{ij}, Y_{kl}, H_{il} or the scalar h (kind Hbar, row = col = 0). Indices are 1-based.
struct GeneratorSymbol {
  Kind kind = Kind::X;
  int row = 0;
  int col = 0;

  static GeneratorSymbol x(int i, int j) { return {Kind::X, i, j}; }
  static GeneratorSymbol y(int k, int l) { return {Kind::Y, k, l}; }
  static GeneratorSymbol h_entry(int i, int l) { return {Kind::H, i, l}; }
  static GeneratorSymbol h() { return {Kind::Hbar, 0, 0}; }

  std::uint32_t code() const {
    return (static_cast<std::uint32_t>(kind) << 24) | (static_cast<std::uint32_t>(row) << 12) |
           static_cast<std::uint32_t>(col);
  }
  static GeneratorSymbol from_code(std::uint32_t c) {
    return {static_cast<Kind>(c >> 24), static_cast<int>((c >> 12) & 0xfff), static_cast<int>(c & 0xfff)};
  }
  static Kind kind_of(std::uint32_t c) { return static_cast<Kind>(c >> 24); }

  bool is_central() const { return kind == Kind::H || kind == Kind::Hbar; }

  // "X[1,2]", "Y[2,1]", "H[1,1]", "h".
  std::string to_string() const;

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend auto operator<=>(const GeneratorSymbol& a, const GeneratorSymbol& b) { return a.code() <=> b.code(); }
};

// Weyl-algebra spellings: x_{ij} is X_{ij}, and d_{ij} = ∂/∂x_{ij} is stored as Y_{ji}.
inline GeneratorSymbol weyl_x(int i, int j) { return GeneratorSymbol::x(i, j); }
inline GeneratorSymbol weyl_d(int i, int j) { return GeneratorSymbol::y(j, i); }

}  // namespace capelli
