#include "hecke/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hecke {

// ---- Permutation ----------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw InvalidInput("not a permutation: " + to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw InvalidInput("simple transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p = identity(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw InvalidInput("word letter out of range");
    // right multiplication by sigma_i swaps positions i, i+1
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.size() != size()) throw InvalidInput("composing permutations of different degree");
  std::vector<int> v(images_.size());
  for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>(i - 1)] = (*this)(o(i));
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> v = images_, word;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] < v[i + 1]) ++i;
    if (i + 1 >= v.size()) break;
    std::swap(v[i], v[i + 1]);
    word.push_back(static_cast<int>(i) + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation Permutation::extended(int n) const {
  if (n < size()) throw InvalidInput("cannot extend permutation to smaller degree");
  std::vector<int> v = images_;
  for (int i = size() + 1; i <= n; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
  return s + ")";
}

Permutation longest_element(int l) {
  std::vector<int> v(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) v[static_cast<std::size_t>(i - 1)] = l + 1 - i;
  return Permutation(std::move(v));
}

Permutation tau_permutation(int l, int m) {
  if (l < 1 || m < 1) throw InvalidInput("tau needs l, m >= 1");
  std::vector<int> v;
  for (int i = 1; i <= m; ++i) v.push_back(l + i);
  for (int j = 1; j <= l; ++j) v.push_back(j);
  return Permutation(std::move(v));
}

// ---- Partition ------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be non-increasing: " + to_string());
  }
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw InvalidInput("bad partition '" + s + "' (expected e.g. 3,2,1)");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != cur.size()) throw InvalidInput("bad partition '" + s + "' (expected e.g. 3,2,1)");
    parts.push_back(v);
    cur.clear();
  };
  bool any = false;
  for (char c : s) {
    if (c == ' ') continue;
    any = true;
    if (c == ',')
      flush();
    else
      cur += c;
  }
  if (any) flush();
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int b = 1; b <= part(1); ++b) {
    int cnt = 0;
    while (cnt < rows() && parts_[static_cast<std::size_t>(cnt)] >= b) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  for (int a = 1; a <= mu.rows(); ++a)
    if (mu.part(a) > part(a)) return false;
  return true;
}

std::vector<std::pair<int, int>> Partition::nodes() const {
  std::vector<std::pair<int, int>> n;
  for (int a = 1; a <= rows(); ++a)
    for (int b = 1; b <= part(a); ++b) n.emplace_back(a, b);
  return n;
}

int Partition::hook_length(int a, int b) const {
  if (!contains(a, b)) throw InvalidInput("node outside the diagram");
  int below = 0;
  while (part(a + below + 1) >= b) ++below;
  return part(a) - b + below + 1;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s;
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

long long standard_tableau_count(const Partition& lambda) {
  // l! / prod hooks, computed exactly
  mpz_class num = 1, den = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  for (auto [a, b] : lambda.nodes()) den *= lambda.hook_length(a, b);
  mpz_class r = num / den;
  return r.get_si();
}

// ---- StandardTableau ------------------------------------------------------

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  StandardTableau t;
  t.shape_ = Partition(parts);
  const int l = t.shape_.size();
  t.node_of_.assign(static_cast<std::size_t>(l), {0, 0});
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows[a].size(); ++b) {
      int v = rows[a][b];
      if (v < 1 || v > l || t.node_of_[static_cast<std::size_t>(v - 1)].first != 0)
        throw InvalidInput("tableau entries must be 1..l without repeats");
      t.node_of_[static_cast<std::size_t>(v - 1)] = {static_cast<int>(a) + 1, static_cast<int>(b) + 1};
      if (b > 0 && rows[a][b - 1] >= v) throw InvalidInput("tableau rows must increase");
      if (a > 0 && rows[a - 1][b] >= v) throw InvalidInput("tableau columns must increase");
    }
  t.rows_ = std::move(rows);
  return t;
}

StandardTableau StandardTableau::parse(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput("bad tableau '" + s + "' (expected e.g. [[1,2],[3]])");
  }
  std::vector<std::vector<int>> rows;
  if (!j.is_array()) throw InvalidInput("bad tableau '" + s + "'");
  for (const auto& r : j) {
    if (!r.is_array()) throw InvalidInput("bad tableau '" + s + "'");
    std::vector<int> row;
    for (const auto& e : r) {
      if (!e.is_number_integer()) throw InvalidInput("bad tableau '" + s + "'");
      row.push_back(e.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(rows));
}

int StandardTableau::content(int i) const {
  if (i < 1 || i > size()) throw InvalidInput("entry out of range");
  auto [a, b] = node_of(i);
  return b - a;
}

std::vector<int> StandardTableau::contents() const {
  std::vector<int> c;
  for (int i = 1; i <= size(); ++i) c.push_back(content(i));
  return c;
}

std::optional<StandardTableau> StandardTableau::swapped(int k) const {
  if (k < 1 || k >= size()) throw InvalidInput("swap index out of range");
  auto rows = rows_;
  auto [a1, b1] = node_of(k);
  auto [a2, b2] = node_of(k + 1);
  if (a1 == a2 || b1 == b2) return std::nullopt;
  rows[static_cast<std::size_t>(a1 - 1)][static_cast<std::size_t>(b1 - 1)] = k + 1;
  rows[static_cast<std::size_t>(a2 - 1)][static_cast<std::size_t>(b2 - 1)] = k;
  try {
    return from_rows(std::move(rows));
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

StandardTableau StandardTableau::conjugate() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_.part(1)));
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for (std::size_t b = 0; b < rows_[a].size(); ++b) rows[b].push_back(rows_[a][b]);
  return from_rows(std::move(rows));
}

std::string StandardTableau::to_string() const {
  std::string s = "[";
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    s += a ? ",[" : "[";
    for (std::size_t b = 0; b < rows_[a].size(); ++b) s += (b ? "," : "") + std::to_string(rows_[a][b]);
    s += "]";
  }
  return s + "]";
}

namespace {
void tableaux_rec(const Partition& lambda, int next, std::vector<std::vector<int>>& rows,
                  std::vector<StandardTableau>& out) {
  if (next > lambda.size()) {
    out.push_back(StandardTableau::from_rows(rows));
    return;
  }
  for (int a = 1; a <= lambda.rows(); ++a) {
    auto& row = rows[static_cast<std::size_t>(a - 1)];
    const int b = static_cast<int>(row.size()) + 1;
    if (b > lambda.part(a)) continue;
    if (a > 1 && static_cast<int>(rows[static_cast<std::size_t>(a - 2)].size()) < b) continue;
    row.push_back(next);
    tableaux_rec(lambda, next + 1, rows, out);
    row.pop_back();
  }
}
}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
  tableaux_rec(lambda, 1, rows, out);
  return out;
}

StandardTableau column_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
  const Partition c = lambda.conjugate();
  int v = 1;
  for (int b = 1; b <= c.rows(); ++b)
    for (int a = 1; a <= c.part(b); ++a) rows[static_cast<std::size_t>(a - 1)].push_back(v++);
  return StandardTableau::from_rows(std::move(rows));
}

StandardTableau row_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int v = 1;
  for (int a = 1; a <= lambda.rows(); ++a) {
    rows.emplace_back();
    for (int b = 1; b <= lambda.part(a); ++b) rows.back().push_back(v++);
  }
  return StandardTableau::from_rows(std::move(rows));
}

std::optional<StandardTableau> act(const Permutation& sigma, const StandardTableau& t) {
  if (sigma.size() != t.size()) throw InvalidInput("permutation degree differs from tableau size");
  auto rows = t.rows();
  for (auto& r : rows)
    for (auto& e : r) e = sigma(e);
  try {
    return StandardTableau::from_rows(std::move(rows));
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

Permutation rho_of(const StandardTableau& t) {
  const StandardTableau c = column_tableau(t.shape());
  std::vector<int> v(static_cast<std::size_t>(t.size()));
  for (auto [a, b] : t.shape().nodes()) v[static_cast<std::size_t>(c.entry(a, b) - 1)] = t.entry(a, b);
  return Permutation(std::move(v));
}

namespace {
// Subsequence of rho(1..l) made of i < j with rho^{-1}(i) > rho^{-1}(j) (later) or < (earlier).
std::vector<std::vector<int>> split_sequences(const StandardTableau& t, bool later) {
  const Permutation rho = rho_of(t);
  const Permutation rinv = rho.inverse();
  const int l = t.size();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(l));
  for (int j = 1; j <= l; ++j)
    for (int p = 1; p <= l; ++p) {
      const int i = rho(p);
      if (i >= j) continue;
      if ((rinv(i) > rinv(j)) == later) out[static_cast<std::size_t>(j - 1)].push_back(i);
    }
  return out;
}
}  // namespace

std::vector<std::vector<int>> a_sequences(const StandardTableau& t) {
  auto a = split_sequences(t, true);
  for (auto& s : a) std::reverse(s.begin(), s.end());
  return a;
}

std::vector<std::vector<int>> b_sequences(const StandardTableau& t) { return split_sequences(t, false); }

namespace {
std::vector<int> staircase_word(const std::vector<std::vector<int>>& seqs) {
  std::vector<int> w;
  for (std::size_t j = 1; j <= seqs.size(); ++j)
    for (std::size_t k = 1; k <= seqs[j - 1].size(); ++k) w.push_back(static_cast<int>(j - k));
  return w;
}
}  // namespace

std::vector<int> a_word(const StandardTableau& t) { return staircase_word(a_sequences(t)); }
std::vector<int> b_word(const StandardTableau& t) { return staircase_word(b_sequences(t)); }

int d_value(const StandardTableau& t, int k) {
  if (k < 1 || k >= t.size()) throw InvalidInput("d_k index out of range");
  return t.content(k) - t.content(k + 1);
}

// ---- insertion sequences --------------------------------------------------

namespace {
void check_distinct_positive(const std::vector<int>& seq, std::size_t expected, const char* name) {
  if (seq.size() != expected)
    throw InvalidInput(std::string("invalid insertion sequence: ") + name + " must have length " +
                       std::to_string(expected));
  std::set<int> s;
  for (int v : seq) {
    if (v < 1) throw InvalidInput(std::string("invalid insertion sequence: ") + name + " entries must be positive");
    if (!s.insert(v).second)
      throw InvalidInput(std::string("invalid insertion sequence: ") + name + " entries must be distinct");
  }
}

// seq_{pos_a} += add_a, then check weak decrease.
std::vector<int> insert_rows(const Partition& base, const Partition& add, const std::vector<int>& pos,
                             const char* name) {
  int n = base.rows();
  for (int p : pos) n = std::max(n, p);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = base.part(i);
  for (std::size_t a = 0; a < pos.size(); ++a) v[static_cast<std::size_t>(pos[a] - 1)] += add.part(static_cast<int>(a) + 1);
  for (int i = 1; i < n; ++i)
    if (v[static_cast<std::size_t>(i - 1)] < v[static_cast<std::size_t>(i)])
      throw InvalidInput(std::string("invalid insertion sequence: ") + name + "_" + std::to_string(i) + " = " +
                         std::to_string(v[static_cast<std::size_t>(i - 1)]) + " < " + name + "_" +
                         std::to_string(i + 1) + " = " + std::to_string(v[static_cast<std::size_t>(i)]));
  return v;
}
}  // namespace

Partition xi_partition(const Partition& lambda, const Partition& mu, const std::vector<int>& iseq) {
  if (lambda.empty()) throw InvalidInput("lambda must be nonempty");
  check_distinct_positive(iseq, static_cast<std::size_t>(lambda.rows()), "iseq");
  return Partition(insert_rows(mu, lambda, iseq, "xi"));
}

StandardTableau xi_tableau(const Partition& lambda, const Partition& mu, const std::vector<int>& iseq,
                           const StandardTableau& m_tab) {
  if (m_tab.shape() != mu) throw InvalidInput("tableau M must have shape mu");
  const Partition xi = xi_partition(lambda, mu, iseq);
  const Partition ls = lambda.conjugate();
  const StandardTableau col = column_tableau(lambda);
  const int m = mu.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(xi.rows()));
  for (int a = 1; a <= xi.rows(); ++a) rows[static_cast<std::size_t>(a - 1)].assign(static_cast<std::size_t>(xi.part(a)), 0);
  for (auto [c, d] : mu.nodes()) rows[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(d - 1)] = m_tab.entry(c, d);
  for (int j = 1; j <= lambda.part(1); ++j) {
    std::vector<int> as;
    for (int a = ls.part(j + 1) + 1; a <= ls.part(j); ++a) as.push_back(a);
    std::sort(as.begin(), as.end(), [&](int x, int y) { return iseq[static_cast<std::size_t>(x - 1)] < iseq[static_cast<std::size_t>(y - 1)]; });
    for (std::size_t k = 1; k <= as.size(); ++k) {
      const int a = as[k - 1];
      const int ia = iseq[static_cast<std::size_t>(a - 1)];
      for (int b = 1; b <= lambda.part(a); ++b)
        rows[static_cast<std::size_t>(ia - 1)][static_cast<std::size_t>(mu.part(ia) + b - 1)] =
            m + col.entry(ls.part(j + 1) + static_cast<int>(k), b);
    }
  }
  return StandardTableau::from_rows(std::move(rows));
}

Partition eta_partition(const Partition& lambda, const Partition& mu, const std::vector<int>& jseq) {
  if (lambda.empty()) throw InvalidInput("lambda must be nonempty");
  check_distinct_positive(jseq, static_cast<std::size_t>(lambda.part(1)), "jseq");
  return Partition(insert_rows(mu.conjugate(), lambda.conjugate(), jseq, "eta*")).conjugate();
}

namespace {
std::vector<std::vector<int>> injective_sequences(int length, int max_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(max_value) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= max_value; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec);
  return out;
}
}  // namespace

std::vector<std::vector<int>> admissible_iseqs(const Partition& lambda, const Partition& mu) {
  std::vector<std::vector<int>> out;
  for (auto& s : injective_sequences(lambda.rows(), mu.rows() + lambda.rows())) {
    try {
      xi_partition(lambda, mu, s);
      out.push_back(s);
    } catch (const InvalidInput&) {
    }
  }
  return out;
}

std::vector<std::vector<int>> admissible_jseqs(const Partition& lambda, const Partition& mu) {
  std::vector<std::vector<int>> out;
  for (auto& s : injective_sequences(lambda.part(1), mu.part(1) + lambda.part(1))) {
    try {
      eta_partition(lambda, mu, s);
      out.push_back(s);
    } catch (const InvalidInput&) {
    }
  }
  return out;
}

std::vector<Permutation> young_subgroup_elements(const Partition& lambda, YoungArrangement arrangement) {
  const Partition blocks = arrangement == YoungArrangement::rows ? lambda : lambda.conjugate();
  const int l = lambda.size();
  std::vector<std::vector<int>> out{std::vector<int>()};
  out[0].reserve(static_cast<std::size_t>(l));
  int start = 1;
  for (int len : blocks.parts()) {
    std::vector<int> block(static_cast<std::size_t>(len));
    std::iota(block.begin(), block.end(), start);
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      std::vector<int> perm = block;
      do {
        auto v = prefix;
        v.insert(v.end(), perm.begin(), perm.end());
        next.push_back(std::move(v));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out = std::move(next);
    start += len;
  }
  std::vector<Permutation> perms;
  for (auto& v : out) perms.emplace_back(std::move(v));
  return perms;
}

// ---- hook scalars ---------------------------------------------------------

RationalFunction hook_scalar_hff(const Partition& lambda) {
  RationalFunction r(1);
  const RationalFunction denom = RationalFunction(1) - q_pow(2);
  for (auto [a, b] : lambda.nodes()) r *= (RationalFunction(1) - q_pow(2 * lambda.hook_length(a, b))) / denom;
  int e = 0;
  for (int p : lambda.parts()) e += p * (1 - p);
  return r * q_pow(e);
}

RationalFunction hook_scalar_hf(const Partition& lambda) {
  RationalFunction r(1);
  const RationalFunction denom = RationalFunction(1) - q_pow(-2);
  for (auto [a, b] : lambda.nodes()) r *= (RationalFunction(1) - q_pow(-2 * lambda.hook_length(a, b))) / denom;
  int e = 0;
  const Partition conj = lambda.conjugate();
  for (int p : conj.parts()) e += p * (p - 1);
  return r * q_pow(e);
}

RationalFunction hook_scalar(const Partition& lambda) {
  RationalFunction a = hook_scalar_hff(lambda);
  if (!(a == hook_scalar_hf(lambda)))
    throw InvariantViolation("hook scalar forms disagree for " + lambda.to_string());
  return a;
}

}  // namespace hecke
