#include "sl2c3/field.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace sl2c3 {

namespace {

int ipow3(int e) {
  int r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

// Polynomial remainder over GF(3), low coefficient first; trailing zeros trimmed.
std::vector<int> gf3_rem(std::vector<int> a, const std::vector<int>& b) {
  auto trim = [](std::vector<int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  const int lead_inv = b.back();  // 1 or 2, self-inverse mod 3
  while (a.size() >= b.size()) {
    const int c = (a.back() * lead_inv) % 3;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % 3 + 3) % 3;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible_gf3(const std::vector<int>& poly) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 1 || poly.back() == 0) return false;
  for (int d = 1; d <= n / 2; ++d) {
    const int count = ipow3(d);
    for (int code = 0; code < count; ++code) {
      std::vector<int> div(d + 1);
      int c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = c % 3;
        c /= 3;
      }
      div[d] = 1;
      if (gf3_rem(poly, div).empty()) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int k) {
  switch (k) {
    case 1: return {0, 1};
    case 2: return {1, 0, 1};
    case 3: return {1, 2, 0, 1};
    case 4: return {2, 1, 0, 0, 1};
    case 5: return {1, 2, 0, 0, 0, 1};
    case 6: return {2, 1, 0, 0, 0, 0, 1};
    default: throw Error("field degree must be between 1 and 6, got " + std::to_string(k));
  }
}

Field::Field(int k, std::vector<int> modulus) : k_(k), q_(ipow3(k)), modulus_(std::move(modulus)) {
  const int q = q_;
  auto digits = [k](int code) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = code % 3;
      code /= 3;
    }
    return d;
  };
  auto undigits = [k](const std::vector<int>& d) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * 3 + d[i];
    return static_cast<Code>(code);
  };

  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  key_.resize(q);
  std::vector<std::vector<int>> dig(q);
  for (int a = 0; a < q; ++a) dig[a] = digits(a);

  for (int a = 0; a < q; ++a) {
    std::vector<int> n(k);
    int key = 0;
    for (int i = 0; i < k; ++i) {
      n[i] = (3 - dig[a][i]) % 3;
      key = key * 3 + dig[a][i];
    }
    neg_[a] = undigits(n);
    key_[a] = key;
    for (int b = 0; b < q; ++b) {
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (dig[a][i] + dig[b][i]) % 3;
      add_[a * q + b] = undigits(s);
    }
  }

  // Multiplication: schoolbook product reduced by the modulus.
  for (int a = 0; a < q; ++a) {
    for (int b = a; b < q; ++b) {
      std::vector<int> prod(2 * k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] += dig[a][i] * dig[b][j];
      for (auto& x : prod) x %= 3;
      for (int i = 2 * k - 1; i >= k; --i) {
        const int c = prod[i];
        if (c == 0) continue;
        for (int j = 0; j <= k; ++j) prod[i - k + j] = ((prod[i - k + j] - c * modulus_[j]) % 3 + 3) % 3;
      }
      prod.resize(k);
      const Code r = undigits(prod);
      mul_[a * q + b] = r;
      mul_[b * q + a] = r;
    }
  }

  inv_.assign(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<Code>(b);
        break;
      }

  sqrt_.assign(q, -1);
  for (int s = 0; s < q; ++s) {
    const Code sq = mul_[s * q + s];
    if (sqrt_[sq] < 0 || key_[s] < key_[sqrt_[sq]]) sqrt_[sq] = s;
  }
  cbrt_.assign(q, 0);
  for (int s = 0; s < q; ++s) cbrt_[mul_[s * q + mul_[s * q + s]]] = static_cast<Code>(s);
}

Code Field::inv_code(Code a) const {
  if (a == 0) throw Error("inverse of zero in " + name());
  return inv_[a];
}

FieldElem Field::from_int(long long n) const {
  const long long r = ((n % 3) + 3) % 3;
  return {this, static_cast<Code>(r)};
}

FieldElem Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > k_)
    throw Error("too many coefficients for " + name());
  int code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * 3 + (((c[i] % 3) + 3) % 3);
  return {this, static_cast<Code>(code)};
}

FieldElem Field::gen() const { return k_ == 1 ? zero() : FieldElem{this, 3}; }

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (int a = 0; a < q_; ++a) out.emplace_back(this, static_cast<Code>(a));
  return out;
}

std::optional<FieldElem> Field::sqrt(const FieldElem& a) const {
  const int s = sqrt_[a.code()];
  if (s < 0) return std::nullopt;
  return FieldElem{this, static_cast<Code>(s)};
}

FieldElem Field::cbrt(const FieldElem& a) const { return {this, cbrt_[a.code()]}; }

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

const Field& make_field(int k, std::optional<std::vector<int>> modulus) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<Field>> registry;
  if (k < 1 || k > 6) throw Error("field degree must be between 1 and 6, got " + std::to_string(k));
  std::vector<int> m = modulus ? *modulus : default_modulus(k);
  if (static_cast<int>(m.size()) != k + 1) throw Error("modulus must have degree " + std::to_string(k));
  for (auto& c : m) {
    if (c < 0 || c > 2) throw Error("modulus coefficients must be in {0,1,2}");
  }
  if (m.back() != 1) throw Error("modulus must be monic");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, m);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  if (!is_irreducible_gf3(m)) throw Error("modulus is reducible over GF(3)");
  auto f = std::unique_ptr<Field>(new Field(k, m));
  const Field& ref = *f;
  registry.emplace(std::move(key), std::move(f));
  return ref;
}

// ---------------------------------------------------------------------------
// FieldElem

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.field_ptr() != b.field_ptr()) throw Error("field context mismatch");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(*this, o);
  return {f_, f_->add(v_, o.v_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(*this, o);
  return {f_, f_->sub(v_, o.v_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(*this, o);
  return {f_, f_->mul(v_, o.v_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(*this, o);
  return {f_, f_->mul(v_, f_->inv_code(o.v_))};
}
FieldElem FieldElem::operator-() const { return {f_, f_->neg(v_)}; }
FieldElem FieldElem::inv() const { return {f_, f_->inv_code(v_)}; }

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem base = *this, r = f_->one();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::vector<int> FieldElem::coeffs() const {
  std::vector<int> c(f_->degree());
  int v = v_;
  for (auto& x : c) {
    x = v % 3;
    v /= 3;
  }
  return c;
}

std::string FieldElem::str() const {
  if (f_->is_prime_field()) return std::to_string(v_);
  std::ostringstream os;
  os << '[';
  const auto c = coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

bool encoding_less(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return a.field().lex_key(a.code()) < b.field().lex_key(b.code());
}

// ---------------------------------------------------------------------------
// Embeddings

FieldElem lift(const FieldElem& a, const Field& target) {
  const Field& src = a.field();
  if (&src == &target) return a;
  if (target.degree() % src.degree() != 0)
    throw Error("no embedding of " + src.name() + " into " + target.name());
  if (src.is_prime_field()) return target.from_int(a.code());

  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, std::vector<Code>> cache;
  std::vector<Code> table;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&src, &target});
    if (it != cache.end()) return {&target, it->second[a.code()]};
  }
  // Smallest-encoding root of the source modulus in the target.
  const auto& m = src.modulus();
  std::optional<FieldElem> root;
  for (const auto& x : target.elements()) {
    FieldElem acc = target.zero();
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) acc = acc * x + target.from_int(m[i]);
    if (acc.is_zero() && (!root || encoding_less(x, *root))) root = x;
  }
  if (!root) throw Error("no embedding of " + src.name() + " into " + target.name());
  table.resize(src.order());
  for (const auto& e : src.elements()) {
    const auto c = e.coeffs();
    FieldElem acc = target.zero();
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * *root + target.from_int(c[i]);
    table[e.code()] = acc.code();
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(&src, &target), std::move(table));
  return {&target, it->second[a.code()]};
}

// ---------------------------------------------------------------------------
// Roots

PolyRoots poly_roots(const std::vector<FieldElem>& coeffs) {
  if (coeffs.empty() || coeffs.back().is_zero()) throw Error("poly_roots: zero or untrimmed polynomial");
  const Field& f = coeffs.back().field();
  std::vector<FieldElem> p = coeffs;
  PolyRoots out;
  for (const auto& x : f.elements()) {
    int mult = 0;
    while (p.size() > 1) {
      // Synthetic division by (lambda - x).
      std::vector<FieldElem> quo(p.size() - 1, f.zero());
      FieldElem carry = f.zero();
      for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
        carry = carry * x + p[i];
        quo[i - 1] = carry;
      }
      if (!(carry * x + p[0]).is_zero()) break;
      p = std::move(quo);
      ++mult;
    }
    if (mult > 0) out.roots.push_back({x, mult});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootMult& a, const RootMult& b) { return encoding_less(a.root, b.root); });
  out.cofactor_degree = static_cast<int>(p.size()) - 1;
  return out;
}

FieldElem parse_elem(const Field& f, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error("empty field element literal");
  if (s.front() == '[') {
    if (s.back() != ']') throw Error("unterminated coefficient list: " + text);
    std::vector<int> c;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw Error("empty coefficient in " + text);
      for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-') throw Error("bad coefficient in " + text);
      c.push_back(std::stoi(tok));
    }
    if (static_cast<int>(c.size()) > f.degree()) throw Error("literal " + text + " has too many coefficients for " + f.name());
    return f.from_coeffs(c);
  }
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i >= s.size()) throw Error("bad element literal: " + text);
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw Error("bad element literal: " + text);
  const long long v = std::stoll(s.substr(i));
  return f.from_int(neg ? -v : v);
}

int max_extension_degree() {
  const char* env = std::getenv("SL2_MAX_EXT_DEGREE");
  if (env == nullptr || *env == '\0') return 6;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0') return 6;
  return static_cast<int>(std::clamp(v, 1L, 6L));
}

}  // namespace sl2c3
