#pragma once

// Textual complex numbers.
//
//   literal := REAL | REAL SIGN IMAG 'i' | IMAG 'i'
//   REAL    := [SIGN] decimal
//   IMAG    := [SIGN] decimal        (unsigned after the infix SIGN)
//   decimal := digits ['.' [digits]] [exp] | '.' digits [exp]
//   exp     := ('e' | 'E') [SIGN] digits
//
// No whitespace anywhere. Rendering emits the shortest decimal that
// round-trips, so parse(render(z)) == z for every finite z.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>

#include "sylvester/complex.hpp"

namespace sylvester::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected)
      : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

namespace detail {

inline bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) : text_(text) {}

  bool at_end() const noexcept { return pos_ == text_.size(); }
  char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const noexcept { return pos_; }
  void advance() noexcept { ++pos_; }

  // Consumes an unsigned decimal and returns its finite value.
  double unsigned_decimal() {
    const std::size_t start = pos_;
    std::size_t digits = skip_digits();
    if (peek() == '.') {
      advance();
      digits += skip_digits();
    }
    if (digits == 0) throw ParseError(pos_, "a digit");
    if (peek() == 'e' || peek() == 'E') {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      if (skip_digits() == 0) throw ParseError(pos_, "an exponent digit");
    }

    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec == std::errc::result_out_of_range) {
      // from_chars leaves `value` untouched here; strtod tells underflow
      // (acceptable, rounds toward zero) from overflow.
      value = std::strtod(std::string(first, last).c_str(), nullptr);
    } else if (ec != std::errc{} || ptr != last) {
      throw ParseError(start, "a decimal number");
    }
    if (!std::isfinite(value)) throw ParseError(start, "a finite number");
    return value;
  }

 private:
  std::size_t skip_digits() noexcept {
    std::size_t n = 0;
    while (is_digit(peek())) {
      advance();
      ++n;
    }
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Complex parse_complex(std::string_view text) {
  if (text.empty()) throw ParseError(0, "a number");
  detail::LiteralScanner scan(text);

  double sign = 1.0;
  if (scan.peek() == '+' || scan.peek() == '-') {
    sign = scan.peek() == '-' ? -1.0 : 1.0;
    scan.advance();
  }
  const double first = sign * scan.unsigned_decimal();
  if (scan.at_end()) return {first, 0.0};

  if (scan.peek() == 'i') {
    scan.advance();
    if (!scan.at_end()) throw ParseError(scan.pos(), "end of input");
    return {0.0, first};
  }

  if (scan.peek() != '+' && scan.peek() != '-') {
    throw ParseError(scan.pos(), "'+', '-', 'i' or end of input");
  }
  const double imag_sign = scan.peek() == '-' ? -1.0 : 1.0;
  scan.advance();
  const double imag = imag_sign * scan.unsigned_decimal();
  if (scan.peek() != 'i') throw ParseError(scan.pos(), "'i'");
  scan.advance();
  if (!scan.at_end()) throw ParseError(scan.pos(), "end of input");
  return {first, imag};
}

/// Shortest round-trip decimal; negative zero prints as "0".
inline std::string render_real(double x) {
  if (x == 0.0) x = 0.0;
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

/// "a", "bi", "a+bi" or "a-bi".
inline std::string render_complex(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) return render_real(re);
  if (re == 0.0) return render_real(im) + "i";
  return render_real(re) + (im < 0.0 ? "-" : "+") + render_real(std::abs(im)) + "i";
}

}  // namespace sylvester::cli
