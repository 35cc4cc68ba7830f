#include "capelli/exactalg/weyl.hpp"

#include <algorithm>

#include "capelli/exactalg/errors.hpp"

namespace capelli {

namespace {

void require_weyl(const RelationSpec& spec) {
  if (!spec.is_weyl_model()) throw UsageError("the Weyl action needs an identity-H Capelli spec, got " + spec.describe());
}

void require_x_only(const CommPoly& f) {
  if (!f.only_kinds({Kind::X})) throw UsageError("the Weyl action applies to polynomials in x only");
}

CommPoly times_x(const CommPoly& f, std::uint32_t code, std::uint64_t tag) {
  CommPoly out = CommPoly::from_monomial(Monomial(), 0, tag);
  for (const auto& [m, c] : f.terms()) {
    Monomial::Codes codes = m.codes();
    codes.push_back(code);
    out.add_term(Monomial(std::move(codes)), c);
  }
  return out;
}

CommPoly partial(const CommPoly& f, std::uint32_t code, std::uint64_t tag) {
  CommPoly out = CommPoly::from_monomial(Monomial(), 0, tag);
  for (const auto& [m, c] : f.terms()) {
    const auto& codes = m.codes();
    auto it = std::find(codes.begin(), codes.end(), code);
    if (it == codes.end()) continue;
    const long mult = std::count(codes.begin(), codes.end(), code);
    Monomial::Codes rest(codes.begin(), it);
    rest.insert(rest.end(), it + 1, codes.end());
    out.add_term(Monomial(std::move(rest)), c * Rational(mult));
  }
  return out;
}

// One symbol of the action: x multiplies, Y_{ab} = d_{ba} differentiates by x_{ba}.
CommPoly act(GeneratorSymbol g, const CommPoly& f, std::uint64_t tag) {
  switch (g.kind) {
    case Kind::X:
      return times_x(f, g.code(), tag);
    case Kind::Y:
      return partial(f, GeneratorSymbol::x(g.col, g.row).code(), tag);
    default:
      throw UsageError("central symbol " + g.to_string() + " has no Weyl action");
  }
}

}  // namespace

CommPoly apply_weyl(const NCPoly& p, const CommPoly& f, const RelationSpec& spec) {
  require_weyl(spec);
  require_x_only(f);
  const auto tag = spec.tag();
  CommPoly out = CommPoly::from_monomial(Monomial(), 0, tag);
  for (const auto& [m, c] : p.terms()) {
    CommPoly g = f;
    const auto& codes = m.codes();
    for (auto it = codes.rbegin(); it != codes.rend() && !g.is_zero(); ++it) g = act(GeneratorSymbol::from_code(*it), g, tag);
    out += g * c;
  }
  return out;
}

CommPoly apply_weyl(const WordSum& words, const CommPoly& f, const RelationSpec& spec) {
  require_weyl(spec);
  require_x_only(f);
  const auto tag = spec.tag();
  CommPoly out = CommPoly::from_monomial(Monomial(), 0, tag);
  for (const auto& w : words) {
    CommPoly g = f;
    for (auto it = w.symbols.rbegin(); it != w.symbols.rend() && !g.is_zero(); ++it) {
      spec.check_bounds(*it);
      g = act(*it, g, tag);
    }
    out += g * w.coeff;
  }
  return out;
}

std::vector<CommPoly> weyl_polynomial_basis(const RelationSpec& spec, int max_degree) {
  require_weyl(spec);
  if (max_degree < 0) throw UsageError("negative degree bound");
  std::vector<std::uint32_t> vars;
  for (int i = 1; i <= spec.n(); ++i)
    for (int j = 1; j <= spec.n(); ++j) vars.push_back(GeneratorSymbol::x(i, j).code());
  std::vector<CommPoly> out;
  Monomial::Codes current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    out.push_back(CommPoly::from_monomial(Monomial(current), 1, spec.tag()));
    if (static_cast<int>(current.size()) == max_degree) return;
    for (std::size_t v = start; v < vars.size(); ++v) {
      current.push_back(vars[v]);
      self(self, v);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace capelli
