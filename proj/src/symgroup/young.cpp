#include "capelli/symgroup/young.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>

#include "capelli/exactalg/errors.hpp"

namespace capelli {

namespace {

// Parses nested bracket lists of integers, one level ("[3,1]") or two ("[[1,2],[3]]").
class BracketParser {
 public:
  explicit BracketParser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  std::vector<int> flat() {
    auto v = list();
    if (pos_ != s_.size()) fail();
    return v;
  }

  std::vector<std::vector<int>> nested() {
    std::vector<std::vector<int>> out;
    expect('[');
    if (peek() == ']') fail();
    while (true) {
      out.push_back(list());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(']');
    if (pos_ != s_.size()) fail();
    return out;
  }

 private:
  std::vector<int> list() {
    std::vector<int> out;
    expect('[');
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(number());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(']');
    return out;
  }

  int number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail();
    return std::stoi(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail();
    ++pos_;
  }
  [[noreturn]] void fail() const { throw UsageError("malformed bracket list '" + s_ + "'"); }

  std::string s_;
  std::size_t pos_ = 0;
};

void validate_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw UsageError("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition parse_partition(const std::string& text) {
  Partition p = BracketParser(text).flat();
  if (p.empty()) throw UsageError("empty partition");
  validate_partition(p);
  return p;
}

std::string partition_to_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + "]";
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

std::vector<Partition> partitions_of(int r) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(r, r);
  return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::set<int> seen;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw UsageError("tableau rows must be nonempty");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) throw UsageError("tableau rows must weakly shorten");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int v = rows_[i][j];
      if (!seen.insert(v).second) throw UsageError("tableau entries repeat");
      if (j > 0 && rows_[i][j - 1] >= v) throw UsageError("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= v) throw UsageError("tableau columns must increase");
    }
    size_ += static_cast<int>(rows_[i].size());
  }
  if (!seen.empty() && (*seen.begin() != 1 || *seen.rbegin() != size_)) throw UsageError("tableau must be filled with 1..r");
}

StandardTableau StandardTableau::parse(const std::string& text) { return StandardTableau(BracketParser(text).nested()); }

std::vector<StandardTableau> StandardTableau::all(const Partition& shape) {
  validate_partition(shape);
  const int r = partition_size(shape);
  std::vector<std::vector<int>> rows(shape.size());
  std::vector<StandardTableau> out;
  std::function<void(int)> rec = [&](int k) {
    if (k > r) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (static_cast<int>(rows[i].size()) >= shape[i]) continue;
      if (i > 0 && rows[i - 1].size() <= rows[i].size()) continue;
      rows[i].push_back(k);
      rec(k + 1);
      rows[i].pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

Partition StandardTableau::shape() const {
  Partition p;
  for (const auto& row : rows_) p.push_back(static_cast<int>(row.size()));
  return p;
}

std::pair<int, int> StandardTableau::position(int k) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == k) return {static_cast<int>(i), static_cast<int>(j)};
  throw UsageError("entry " + std::to_string(k) + " is not in the tableau");
}

int StandardTableau::content(int k) const {
  const auto [row, col] = position(k);
  return col - row;
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::string StandardTableau::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) out += (j ? "," : "") + std::to_string(rows_[i][j]);
    out += "]";
  }
  return out + "]";
}

namespace {

StandardTableau swap_entries(const StandardTableau& t, int a, int b) {
  auto rows = t.rows();
  for (auto& row : rows)
    for (auto& v : row) {
      if (v == a) {
        v = b;
      } else if (v == b) {
        v = a;
      }
    }
  return StandardTableau(std::move(rows));
}

}  // namespace

SeminormalRep::SeminormalRep(const Partition& shape, int max_degree) : shape_(shape), r_(partition_size(shape)) {
  validate_partition(shape);
  if (r_ < 1) throw UsageError("empty partition");
  if (r_ > max_degree) throw ResourceExceeded("representation degree " + std::to_string(r_) + " above bound");
  basis_ = StandardTableau::all(shape);
  for (std::size_t t = 0; t < basis_.size(); ++t) index_[basis_[t].reading_word()] = t;
  const std::size_t dim = basis_.size();
  for (int i = 1; i < r_; ++i) {
    RationalMatrix m(dim, dim);
    for (std::size_t t = 0; t < dim; ++t) {
      const auto& tab = basis_[t];
      const auto [ri, ci] = tab.position(i);
      const auto [rj, cj] = tab.position(i + 1);
      if (ri == rj) {
        m.at(t, t) = 1;
      } else if (ci == cj) {
        m.at(t, t) = -1;
      } else {
        const Rational rho((cj - rj) - (ci - ri));
        const std::size_t other = index_of(swap_entries(tab, i, i + 1));
        m.at(t, t) = Rational(1) / rho;
        m.at(other, t) = rho.sign() < 0 ? Rational(1) : Rational(1) - Rational(1) / (rho * rho);
      }
    }
    generators_.push_back(std::move(m));
  }
  gram_.assign(dim, Rational());
  std::vector<bool> done(dim, false);
  std::deque<std::size_t> queue{0};
  gram_[0] = 1;
  done[0] = true;
  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop_front();
    for (const auto& g : generators_)
      for (std::size_t u = 0; u < dim; ++u) {
        if (done[u] || g.at(u, t).is_zero()) continue;
        // invariance of the form under s_i: g_u * M[u][t] = g_t * M[t][u]
        gram_[u] = gram_[t] * g.at(t, u) / g.at(u, t);
        done[u] = true;
        queue.push_back(u);
      }
  }
}

std::size_t SeminormalRep::index_of(const StandardTableau& t) const {
  auto it = index_.find(t.reading_word());
  if (it == index_.end() || basis_[it->second].shape() != t.shape()) throw UsageError("tableau " + t.to_string() + " has the wrong shape");
  return it->second;
}

RationalMatrix SeminormalRep::matrix(const Permutation& sigma) const {
  if (sigma.size() != r_) throw UsageError("permutation degree does not match the representation");
  // σ = s_{a_k} ⋯ s_{a_1}, peeling a descent off the right each time
  RationalMatrix m = RationalMatrix::identity(dimension());
  Permutation cur = sigma;
  while (!cur.is_identity()) {
    int i = 1;
    while (cur(i) < cur(i + 1)) ++i;
    cur = cur * Permutation::simple(r_, i);
    m = generator(i) * m;
  }
  return m;
}

RationalMatrix SeminormalRep::matrix(const GroupAlgebraElement& a) const {
  RationalMatrix m(dimension(), dimension());
  for (const auto& [p, c] : a.terms()) {
    RationalMatrix term = matrix(p);
    term *= c;
    m += term;
  }
  return m;
}

std::vector<int> cycle_type(const Permutation& sigma) {
  std::vector<int> out;
  std::vector<bool> seen(static_cast<std::size_t>(sigma.size()) + 1, false);
  for (int i = 1; i <= sigma.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

long murnaghan_nakayama(const std::set<int>& beta, const std::vector<int>& cycles, std::size_t idx) {
  if (idx == cycles.size()) return 1;
  const int len = cycles[idx];
  long total = 0;
  for (int b : beta) {
    const int target = b - len;
    if (target < 0 || beta.count(target)) continue;
    // rim hook height = number of beta numbers jumped over
    const auto between = std::distance(beta.upper_bound(target), beta.lower_bound(b));
    std::set<int> next = beta;
    next.erase(b);
    next.insert(target);
    const long sub = murnaghan_nakayama(next, cycles, idx + 1);
    total += between % 2 == 0 ? sub : -sub;
  }
  return total;
}

}  // namespace

Rational character(const Partition& shape, const Permutation& sigma) {
  validate_partition(shape);
  if (partition_size(shape) != sigma.size()) throw UsageError("character of a permutation of the wrong degree");
  std::set<int> beta;
  const int k = static_cast<int>(shape.size());
  for (int i = 0; i < k; ++i) beta.insert(shape[static_cast<std::size_t>(i)] + (k - 1 - i));
  return Rational(murnaghan_nakayama(beta, cycle_type(sigma), 0));
}

}  // namespace capelli
