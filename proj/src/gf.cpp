#include "branchnum/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "branchnum/errors.hpp"

namespace branchnum {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of `num` modulo the monic polynomial `den`, coefficients over GF(p).
Poly poly_mod(Poly num, const Poly& den, std::uint32_t p) {
  const std::size_t d = den.size() - 1;
  while (num.size() > d) {
    const std::uint64_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - d;
      for (std::size_t i = 0; i < d; ++i) {
        const std::uint64_t sub = lead * den[i] % p;
        num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + p - sub) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      out.push_back(f);
      while (v % f == 0) v /= f;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly)
    : p_(p), m_(m), q_(1), poly_(std::move(poly)) {
  if (!is_prime(p_)) {
    throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p_) + " is not prime");
  }
  if (m_ < 1 || poly_.size() != static_cast<std::size_t>(m_) + 1 || poly_.back() != 1) {
    throw Error(ErrorCode::DegreeMismatch,
                "defining polynomial must be monic of degree " + std::to_string(m_));
  }
  for (auto c : poly_) {
    if (c >= p_) {
      throw Error(ErrorCode::DegreeMismatch, "polynomial coefficient out of range for GF(p)");
    }
  }
  for (std::uint32_t i = 0; i < m_; ++i) {
    q_ *= p_;
    if (q_ > (std::uint64_t{1} << 32)) {
      throw Error(ErrorCode::OutOfRange, "field order exceeds 2^32");
    }
  }
  for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) encoded_ = encoded_ * p_ + *it;
  check_irreducible();
  if (p_ == 2 && m_ <= 16) build_tables();
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::uint64_t encoded_poly) {
  std::vector<std::uint32_t> coeffs;
  if (p < 2) throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
  while (encoded_poly != 0) {
    coeffs.push_back(static_cast<std::uint32_t>(encoded_poly % p));
    encoded_poly /= p;
  }
  return std::make_shared<const Field>(p, m, std::move(coeffs));
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly) {
  return std::make_shared<const Field>(p, m, std::move(poly));
}

// Exact trial division by every monic polynomial of degree 1 .. m/2.
void Field::check_irreducible() const {
  for (std::uint32_t d = 1; d <= m_ / 2; ++d) {
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    std::uint64_t combos = 1;
    for (std::uint32_t i = 0; i < d; ++i) combos *= p_;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      std::uint64_t rest = idx;
      for (std::uint32_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p_);
        rest /= p_;
      }
      const Poly rem = poly_mod(poly_, divisor, p_);
      if (std::all_of(rem.begin(), rem.end(), [](auto c) { return c == 0; })) {
        throw Error(ErrorCode::Reducible, "defining polynomial is reducible over GF(" +
                                              std::to_string(p_) + ")");
      }
    }
  }
}

void Field::build_tables() {
  const std::uint64_t order_mult = q_ - 1;
  const auto factors = prime_factors(order_mult);
  auto has_full_order = [&](Element g) {
    for (auto f : factors) {
      if (pow(g, order_mult / f) == 1) return false;
    }
    return true;
  };
  // pow() still runs on the polynomial backend here.
  generator_ = 1;
  for (std::uint64_t g = 2; g < q_; ++g) {
    if (has_full_order(static_cast<Element>(g))) {
      generator_ = static_cast<Element>(g);
      break;
    }
  }
  log_.assign(q_, 0);
  exp_.assign(2 * order_mult, 0);
  Element x = 1;
  for (std::uint64_t i = 0; i < order_mult; ++i) {
    exp_[i] = x;
    exp_[i + order_mult] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_poly(x, generator_);
  }
  backend_ = Backend::LogTables;
}

Element Field::add_digits(Element a, Element b, bool subtract) const noexcept {
  if (m_ == 1) {
    const std::uint64_t s = subtract ? std::uint64_t{a} + p_ - b : std::uint64_t{a} + b;
    return static_cast<Element>(s % p_);
  }
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint64_t da = a % p_;
    const std::uint64_t db = b % p_;
    a /= p_;
    b /= p_;
    const std::uint64_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * scale;
    scale *= p_;
  }
  return static_cast<Element>(out);
}

Element Field::add(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  return add_digits(a, b, false);
}

Element Field::sub(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  return add_digits(a, b, true);
}

Element Field::neg(Element a) const noexcept { return sub(0, a); }

Element Field::mul(Element a, Element b) const noexcept {
  if (backend_ == Backend::LogTables) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  return mul_poly(a, b);
}

Element Field::mul_poly(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (p_ == 2) {
    // Carry-less product, then reduce from the top bit down.
    std::uint64_t prod = 0;
    std::uint64_t aa = a;
    for (std::uint64_t bb = b; bb != 0; bb >>= 1, aa <<= 1) {
      if (bb & 1) prod ^= aa;
    }
    const std::uint64_t modulus = encoded_;
    for (int bit = 2 * static_cast<int>(m_) - 2; bit >= static_cast<int>(m_); --bit) {
      if ((prod >> bit) & 1) prod ^= modulus << (bit - static_cast<int>(m_));
    }
    return static_cast<Element>(prod);
  }
  if (m_ == 1) return static_cast<Element>(std::uint64_t{a} * b % p_);

  Poly da(m_), db(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
  }
  const Poly rem = poly_mod(std::move(prod), poly_, p_);
  std::uint64_t out = 0;
  for (std::size_t i = rem.size(); i-- > 0;) out = out * p_ + rem[i];
  return static_cast<Element>(out);
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  Element base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element Field::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::InvOfZero, "inverse of zero");
  if (backend_ == Backend::LogTables) {
    const std::uint64_t order_mult = q_ - 1;
    return exp_[(order_mult - log_[a]) % order_mult];
  }
  return pow(a, q_ - 2);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << '^' << m_;
  os << ") mod 0x" << std::hex << std::uppercase << encoded_poly();
  return os.str();
}

std::uint64_t parse_hex_element(std::string_view token) {
  std::string_view digits = token;
  if (digits.size() > 2 && (digits.ends_with("_x") || digits.ends_with("_X"))) {
    digits.remove_suffix(2);
  } else if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("not a hex field element: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace branchnum
