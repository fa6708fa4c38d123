#include "jhull/dyadic.hpp"

#include <algorithm>
#include <charconv>

#include "jhull/error.hpp"

namespace jhull {

namespace {

void require_precision(int precision) {
  if (precision < 1) {
    throw PrecisionError("dyadic precision must be at least 1, got " + std::to_string(precision));
  }
}

bool all_binary(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

std::vector<std::uint8_t> binary_digits(std::string_view s) {
  std::vector<std::uint8_t> out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<std::uint8_t>(c - '0'));
  return out;
}

}  // namespace

DyadicInt DyadicInt::from_integer(std::int64_t n, int precision) {
  require_precision(precision);
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(precision));
  // Arithmetic right shift keeps the sign digits for negative n.
  for (int k = 0; k < precision; ++k) {
    int shift = std::min(k, 63);
    digits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((n >> shift) & 1);
  }
  return DyadicInt(std::move(digits));
}

DyadicInt DyadicInt::from_digits(std::vector<std::uint8_t> digits) {
  require_precision(static_cast<int>(digits.size()));
  for (auto d : digits) {
    if (d > 1) throw DomainError("dyadic digits must be 0 or 1");
  }
  return DyadicInt(std::move(digits));
}

DyadicInt DyadicInt::from_pattern(std::string_view prefix, std::string_view period, int precision) {
  require_precision(precision);
  if (!all_binary(prefix) || !all_binary(period)) {
    throw DomainError("dyadic pattern may only contain binary digits");
  }
  std::vector<std::uint8_t> digits;
  digits.reserve(static_cast<std::size_t>(precision));
  for (int k = 0; k < precision; ++k) {
    auto ku = static_cast<std::size_t>(k);
    if (ku < prefix.size()) {
      digits.push_back(static_cast<std::uint8_t>(prefix[ku] - '0'));
    } else if (period.empty()) {
      digits.push_back(0);
    } else {
      digits.push_back(static_cast<std::uint8_t>(period[(ku - prefix.size()) % period.size()] - '0'));
    }
  }
  return DyadicInt(std::move(digits));
}

DyadicInt DyadicInt::parse(std::string_view text, int precision) {
  if (text.empty()) throw DomainError("empty dyadic literal");

  if (text.starts_with("digits:")) {
    auto body = text.substr(7);
    if (body.empty() || !all_binary(body)) throw DomainError("bad digit string: " + std::string(text));
    return from_digits(binary_digits(body));
  }

  // Printed form "0110(M=4)".
  if (auto pos = text.find("(M="); pos != std::string_view::npos && text.back() == ')') {
    auto body = text.substr(0, pos);
    if (body.empty() || !all_binary(body)) throw DomainError("bad digit string: " + std::string(text));
    return from_digits(binary_digits(body));
  }

  // Pattern "prefix(period)*".
  if (text.ends_with(")*")) {
    auto open = text.find('(');
    if (open == std::string_view::npos) throw DomainError("bad dyadic pattern: " + std::string(text));
    auto prefix = text.substr(0, open);
    auto period = text.substr(open + 1, text.size() - open - 3);
    if (period.empty()) throw DomainError("empty period in dyadic pattern: " + std::string(text));
    return from_pattern(prefix, period, precision);
  }

  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw DomainError("cannot parse dyadic integer: " + std::string(text));
  }
  return from_integer(value, precision);
}

int DyadicInt::digit(int k) const {
  if (k < 0 || k >= precision()) {
    throw PrecisionError("digit " + std::to_string(k) + " outside precision " +
                         std::to_string(precision()));
  }
  return digits_[static_cast<std::size_t>(k)];
}

DyadicInt DyadicInt::truncated(int m) const {
  require_precision(m);
  if (m > precision()) {
    throw PrecisionError("cannot truncate to " + std::to_string(m) + " digits from " +
                         std::to_string(precision()));
  }
  return DyadicInt(std::vector<std::uint8_t>(digits_.begin(), digits_.begin() + m));
}

std::uint64_t DyadicInt::representative(int m) const {
  if (m < 0 || m > 63) throw DomainError("representative modulus 2^m needs 0 <= m <= 63");
  if (m > precision()) {
    throw PrecisionError("representative mod 2^" + std::to_string(m) + " needs that many digits");
  }
  std::uint64_t r = 0;
  for (int k = m - 1; k >= 0; --k) r = (r << 1) | digits_[static_cast<std::size_t>(k)];
  return r;
}

DyadicInt DyadicInt::doubled() const {
  std::vector<std::uint8_t> digits;
  digits.reserve(digits_.size() + 1);
  digits.push_back(0);
  digits.insert(digits.end(), digits_.begin(), digits_.end());
  return DyadicInt(std::move(digits));
}

DyadicInt DyadicInt::plus(std::int64_t n) const {
  // Ripple-carry addition of the two's-complement digits of n.
  std::vector<std::uint8_t> digits(digits_);
  int carry = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    int shift = static_cast<int>(std::min<std::size_t>(k, 63));
    int s = digits[k] + static_cast<int>((n >> shift) & 1) + carry;
    digits[k] = static_cast<std::uint8_t>(s & 1);
    carry = s >> 1;
  }
  return DyadicInt(std::move(digits));
}

std::string DyadicInt::to_string() const {
  std::string out;
  out.reserve(digits_.size() + 8);
  for (auto d : digits_) out.push_back(static_cast<char>('0' + d));
  out += "(M=" + std::to_string(precision()) + ")";
  return out;
}

DyadicInt shift(const DyadicInt& d) {
  if (d.precision() < 2) throw PrecisionError("shift needs at least 2 digits");
  auto digits = d.digits();
  return DyadicInt::from_digits(std::vector<std::uint8_t>(digits.begin() + 1, digits.end()));
}

DyadicInt modified_shift(const DyadicInt& d) {
  auto s = shift(d);
  return d.is_odd() ? s.plus(1) : s;
}

DyadicInt modified_shift(const DyadicInt& d, int n) {
  DyadicInt out = d;
  for (int k = 0; k < n; ++k) out = modified_shift(out);
  return out;
}

DyadicInt negate(const DyadicInt& d) {
  // -d = 1 + sum (1 - e_k) 2^k.
  std::vector<std::uint8_t> flipped(d.digits().begin(), d.digits().end());
  for (auto& e : flipped) e = static_cast<std::uint8_t>(1 - e);
  return DyadicInt::from_digits(std::move(flipped)).plus(1);
}

DyadicInt kappa_map(const DyadicInt& d, int n_terms) {
  if (n_terms < 1) throw DomainError("kappa_map needs n_terms >= 1");
  if (d.precision() < n_terms + 1) {
    throw PrecisionError("kappa_map with " + std::to_string(n_terms) + " terms needs precision >= " +
                         std::to_string(n_terms + 1) + ", got " + std::to_string(d.precision()));
  }
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n_terms));
  DyadicInt cur = d;
  for (int n = 0; n < n_terms; ++n) {
    out.push_back(static_cast<std::uint8_t>(cur.digit(0)));
    if (n + 1 < n_terms) cur = modified_shift(cur);
  }
  return DyadicInt::from_digits(std::move(out));
}

RunProfile run_profile(const DyadicInt& d, int window) {
  if (window < 1 || window > d.precision()) {
    throw PrecisionError("run window " + std::to_string(window) + " exceeds precision " +
                         std::to_string(d.precision()));
  }
  RunProfile p;
  p.window = window;
  int run = 0;
  int prev = -1;
  for (int k = 0; k < window; ++k) {
    int e = d.digit(k);
    run = (e == prev) ? run + 1 : 1;
    prev = e;
    if (e == 0) {
      p.max_zero_run = std::max(p.max_zero_run, run);
    } else {
      p.max_one_run = std::max(p.max_one_run, run);
    }
  }
  return p;
}

DyadicInt sample_bounded_runs(std::mt19937_64& rng, int max_run, int precision) {
  require_precision(precision);
  if (max_run < 1) throw DomainError("max_run must be >= 1");
  std::vector<std::uint8_t> digits;
  digits.reserve(static_cast<std::size_t>(precision));
  auto bit = static_cast<std::uint8_t>(rng() >> 63);
  while (static_cast<int>(digits.size()) < precision) {
    int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_run));
    for (int k = 0; k < len && static_cast<int>(digits.size()) < precision; ++k) digits.push_back(bit);
    bit = static_cast<std::uint8_t>(1 - bit);
  }
  return DyadicInt::from_digits(std::move(digits));
}

}  // namespace jhull
