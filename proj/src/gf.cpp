#include "modrep/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include "modrep/util.hpp"
#include <numeric>

namespace modrep {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ProfileTooSmall: return "ProfileTooSmall";
    case ErrorKind::ProfileOverflow: return "ProfileOverflow";
    case ErrorKind::BadBinomial: return "BadBinomial";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::FactorialNotInvertible: return "FactorialNotInvertible";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace modrep

namespace modrep::gf {

namespace {

constexpr std::uint32_t kAddTableMax = 1024;  // table-based addition below this size

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long max_q_guard() {
  if (const char* env = std::getenv("MODREP_MAX_Q")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 64;
}

// little-endian digits of v in base p, padded to len
std::vector<int> digits_of(std::uint32_t v, long p, int len) {
  std::vector<int> d(len, 0);
  for (int i = 0; i < len; ++i) {
    d[i] = static_cast<int>(v % p);
    v = static_cast<std::uint32_t>(v / p);
  }
  return d;
}

// polynomial division check over F_p: does a divide b? (little-endian, a monic-led)
bool poly_divides(const std::vector<int>& a, std::vector<int> b, long p) {
  int da = static_cast<int>(a.size()) - 1;
  long lead = a[da] % p;
  long inv = 1;
  for (long e = 0; e < p - 2; ++e) inv = inv * lead % p;
  for (int db = static_cast<int>(b.size()) - 1; db >= da; --db) {
    long c = b[db] % p * inv % p;
    if (c == 0) continue;
    for (int i = 0; i <= da; ++i)
      b[db - da + i] = static_cast<int>(((b[db - da + i] - c * a[i]) % p + p * p) % p);
  }
  return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

bool poly_irreducible(const std::vector<int>& coeffs, long p) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint32_t>(p);
    for (std::uint32_t v = 0; v < count; ++v) {
      std::vector<int> div = digits_of(v, p, d);
      div.push_back(1);
      if (poly_divides(div, coeffs, p)) return false;
    }
  }
  return true;
}

}  // namespace

int FieldCtx::degree() const { return tower->degree(level); }
std::uint32_t FieldCtx::size() const { return tower->size(level); }
long FieldCtx::characteristic() const { return tower->p(); }

std::uint32_t FieldTower::add_digits(const LevelData& ld, std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, mul = 1;
  auto p = static_cast<std::uint32_t>(p_);
  for (int i = 0; i < ld.degree; ++i) {
    std::uint32_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * mul;
    a /= p;
    b /= p;
    mul *= p;
  }
  return r;
}

std::uint32_t FieldTower::mul_slow(const LevelData& ld, std::uint32_t a, std::uint32_t b) const {
  const long p = p_;
  const int d = ld.degree;
  std::vector<long> da(d), db(d), prod(2 * d, 0);
  for (int i = 0; i < d; ++i) {
    da[i] = a % p;
    a = static_cast<std::uint32_t>(a / p);
    db[i] = b % p;
    b = static_cast<std::uint32_t>(b / p);
  }
  for (int i = 0; i < d; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (int k = 2 * d - 1; k >= d; --k) {
    long c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (int i = 0; i < d; ++i) prod[k - d + i] = ((prod[k - d + i] - c * ld.modulus[i]) % p + p * p) % p;
  }
  std::uint32_t r = 0, mul = 1;
  for (int i = 0; i < d; ++i) {
    r += static_cast<std::uint32_t>(prod[i]) * mul;
    mul *= static_cast<std::uint32_t>(p);
  }
  return r;
}

void FieldTower::init_level(LevelData& ld, int degree) {
  const long p = p_;
  ld.degree = degree;
  std::uint32_t n = 1;
  for (int i = 0; i < degree; ++i) n *= static_cast<std::uint32_t>(p);
  ld.size = n;

  if (degree == 1) {
    ld.modulus = {0, 1};  // placeholder; arithmetic is plain mod p
  } else {
    bool found = false;
    for (std::uint32_t v = 0; v < n && !found; ++v) {
      std::vector<int> coeffs = digits_of(v, p, degree);
      coeffs.push_back(1);
      if (poly_irreducible(coeffs, p)) {
        ld.modulus = coeffs;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::NotPrime, "no irreducible modulus found");
  }

  // discrete log tables via generator search
  ld.exp_tab.assign(n - 1, 0);
  ld.log_tab.assign(n, 0);
  for (std::uint32_t g = 1; g < n; ++g) {
    std::uint32_t x = 1;
    bool ok = true;
    std::vector<std::uint32_t> orbit(n - 1);
    std::vector<char> seen(n, 0);
    for (std::uint32_t k = 0; k < n - 1; ++k) {
      if (seen[x]) {
        ok = false;
        break;
      }
      seen[x] = 1;
      orbit[k] = x;
      x = mul_slow(ld, x, g);
    }
    if (ok && x == 1) {
      for (std::uint32_t k = 0; k < n - 1; ++k) {
        ld.exp_tab[k] = orbit[k];
        ld.log_tab[orbit[k]] = k;
      }
      break;
    }
  }

  if (n <= kAddTableMax) {
    ld.add_tab.assign(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) ld.add_tab[static_cast<std::size_t>(a) * n + b] = add_digits(ld, a, b);
  }

  ld.enum_order.resize(n);
  std::iota(ld.enum_order.begin(), ld.enum_order.end(), 0u);
  std::sort(ld.enum_order.begin(), ld.enum_order.end(), [&](std::uint32_t a, std::uint32_t b) {
    for (int i = 0; i < degree; ++i) {
      auto da = a % p, db = b % p;
      if (da != db) return da < db;
      a = static_cast<std::uint32_t>(a / p);
      b = static_cast<std::uint32_t>(b / p);
    }
    return false;
  });
}

TowerPtr FieldTower::build(long p, int f) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, "p = " + std::to_string(p));
  if (f < 1) fail(ErrorKind::RangeError, "f must be >= 1");
  long q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > max_q_guard()) fail(ErrorKind::TooLarge, "q = p^f exceeds the enumeration guard");
  }

  auto tower = std::shared_ptr<FieldTower>(new FieldTower());
  tower->p_ = p;
  tower->f_ = f;
  tower->q_ = q;
  tower->init_level(tower->levels_[0], 1);
  tower->init_level(tower->levels_[1], f);
  tower->init_level(tower->levels_[2], 2 * f);

  // embedding F_q -> F_{q^2}: image of the power-basis generator x is the first
  // root (in enumeration order) of modulus_q inside F_{q^2}
  const auto& l1 = tower->levels_[1];
  const auto& l2 = tower->levels_[2];
  FieldCtx c2{tower.get(), Level::top_q2};
  std::uint32_t root = 0;  // for f = 1 constants embed as themselves
  if (f > 1) {
    bool found = false;
    for (std::uint32_t cand : l2.enum_order) {
      std::uint32_t acc = 0;
      for (int i = l1.degree; i >= 0; --i) {
        acc = c2.mul(acc, cand);
        acc = c2.add(acc, static_cast<std::uint32_t>(l1.modulus[i] % p));
      }
      if (acc == 0) {
        root = cand;
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorKind::NotPrime, "modulus_q has no root in F_{q^2}");
  }
  tower->embed_q_to_q2_.assign(static_cast<std::size_t>(q), 0);
  for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(q); ++v) {
    std::uint32_t acc = 0, xpow = 1, vv = v;
    for (int i = 0; i < f; ++i) {
      acc = c2.add(acc, c2.mul(static_cast<std::uint32_t>(vv % p), xpow));
      xpow = c2.mul(xpow, root);
      vv = static_cast<std::uint32_t>(vv / p);
    }
    tower->embed_q_to_q2_[v] = acc;
  }

  if (p % 2 == 1) {
    // least non-square of F_q^* in enumeration order
    FieldCtx c1{tower.get(), Level::mid_q};
    std::vector<char> is_sq(static_cast<std::size_t>(q), 0);
    for (std::uint32_t x = 1; x < static_cast<std::uint32_t>(q); ++x) is_sq[c1.mul(x, x)] = 1;
    std::uint32_t nonsq = 0;
    for (std::uint32_t v : l1.enum_order)
      if (v != 0 && !is_sq[v]) {
        nonsq = v;
        break;
      }
    tower->alpha_sq_q_ = nonsq;
    std::uint32_t target = tower->embed_q_to_q2_[nonsq];
    for (std::uint32_t y : l2.enum_order)
      if (c2.mul(y, y) == target) {
        tower->alpha_ = y;
        break;
      }
    // decomposition table x = embed(u) + embed(v)*alpha
    tower->alpha_decomp_.assign(static_cast<std::size_t>(q) * q, {0, 0});
    std::vector<std::pair<std::uint32_t, std::uint32_t>> table(l2.size);
    for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(q); ++u)
      for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(q); ++v) {
        std::uint32_t x =
            c2.add(tower->embed_q_to_q2_[u], c2.mul(tower->embed_q_to_q2_[v], *tower->alpha_));
        table[x] = {u, v};
      }
    tower->alpha_decomp_ = std::move(table);
  }

  return tower;
}

std::uint32_t FieldTower::embed(Level from, Level to, std::uint32_t x) const {
  if (from == to) return x;
  int fi = static_cast<int>(from), ti = static_cast<int>(to);
  if (fi > ti) fail(ErrorKind::LevelMismatch, "cannot embed downward");
  if (from == Level::base_p) {
    // constants are fixed points of the power basis at every level
    std::uint32_t r = 0;
    FieldCtx c{this, to};
    for (std::uint32_t k = 0; k < x; ++k) r = c.add(r, 1);
    return r;
  }
  // mid_q -> top_q2
  return embed_q_to_q2_[x];
}

std::uint32_t FieldTower::alpha() const {
  if (!alpha_) fail(ErrorKind::EvenCharacteristic, "alpha requires odd characteristic");
  return *alpha_;
}

std::uint32_t FieldTower::alpha_sq_in_q() const {
  if (!alpha_) fail(ErrorKind::EvenCharacteristic, "alpha requires odd characteristic");
  return alpha_sq_q_;
}

std::pair<std::uint32_t, std::uint32_t> FieldTower::decompose_alpha(std::uint32_t x) const {
  if (!alpha_) fail(ErrorKind::EvenCharacteristic, "alpha requires odd characteristic");
  return alpha_decomp_[x];
}

std::uint32_t FieldCtx::from_int(long long n) const {
  long p = tower->p();
  long r = mod_residue(n, p);
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  const auto& ld = tower->levels_[static_cast<int>(level)];
  if (!ld.add_tab.empty()) return ld.add_tab[static_cast<std::size_t>(a) * ld.size + b];
  return tower->add_digits(ld, a, b);
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  const auto& ld = tower->levels_[static_cast<int>(level)];
  std::uint32_t r = 0, mul = 1;
  auto p = static_cast<std::uint32_t>(tower->p());
  for (int i = 0; i < ld.degree; ++i) {
    std::uint32_t d = a % p;
    r += (d ? p - d : 0) * mul;
    a /= p;
    mul *= p;
  }
  return r;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const auto& ld = tower->levels_[static_cast<int>(level)];
  std::uint32_t n1 = ld.size - 1;
  std::uint32_t s = ld.log_tab[a] + ld.log_tab[b];
  if (s >= n1) s -= n1;
  return ld.exp_tab[s];
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) fail(ErrorKind::ZeroElement, "inverse of zero");
  const auto& ld = tower->levels_[static_cast<int>(level)];
  std::uint32_t n1 = ld.size - 1;
  std::uint32_t l = ld.log_tab[a];
  return ld.exp_tab[l ? n1 - l : 0];
}

std::uint32_t FieldCtx::pow(std::uint32_t a, long long e) const {
  if (a == 0) {
    if (e < 0) fail(ErrorKind::ZeroElement, "negative power of zero");
    return e == 0 ? 1u : 0u;
  }
  const auto& ld = tower->levels_[static_cast<int>(level)];
  long long n1 = ld.size - 1;
  long long le = (static_cast<long long>(ld.log_tab[a]) * (e % n1)) % n1;
  if (le < 0) le += n1;
  return ld.exp_tab[le];
}

std::uint32_t FieldCtx::frobenius(std::uint32_t a, long long i) const {
  if (a == 0) return 0;
  const auto& ld = tower->levels_[static_cast<int>(level)];
  long long n1 = ld.size - 1;
  long long pe = 1 % n1;
  long long ii = ((i % ld.degree) + ld.degree) % ld.degree;
  for (long long k = 0; k < ii; ++k) pe = (pe * tower->p()) % n1;
  long long le = (static_cast<long long>(ld.log_tab[a]) * pe) % n1;
  return ld.exp_tab[le];
}

std::string FieldCtx::to_string(std::uint32_t a) const {
  const auto& ld = tower->levels_[static_cast<int>(level)];
  std::string s = "[";
  auto p = static_cast<std::uint32_t>(tower->p());
  for (int i = 0; i < ld.degree; ++i) {
    if (i) s += ",";
    s += std::to_string(a % p);
    a /= p;
  }
  return s + "]";
}

FieldElem find_alpha(const TowerPtr& tower) {
  return FieldElem(tower->ctx(Level::top_q2), tower->alpha());
}

}  // namespace modrep::gf
