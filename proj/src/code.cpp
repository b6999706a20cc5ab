#include "gdd/code.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gdd/errors.hpp"

namespace gdd {

BinaryCode::BinaryCode(GF2Matrix generator, GF2Matrix parity_check)
    : n_(generator.n_cols),
      k_(generator.n_rows),
      g_(std::move(generator)),
      h_(std::move(parity_check)) {
  if (h_.n_cols != n_) throw format_error("code: G and H column counts differ");
  if (h_.n_rows != n_ - k_) throw format_error("code: H must have n-k rows");
  if (k_ > n_) throw format_error("code: dimension exceeds length");
  if (n_ == 0 || n_ > kMaxWordLength) throw format_error("code: length must be in [1, 64]");
  if (gf2_rank(g_) != k_) throw format_error("code: generator is rank deficient");
  if (gf2_rank(h_) != n_ - k_) throw format_error("code: parity check is rank deficient");
  if (!product_with_transpose_is_zero(g_, h_))
    throw format_error("code: G * H^T is nonzero");
  hcols_.resize(n_);
  for (unsigned j = 0; j < n_; ++j) {
    uint64_t s = 0;
    for (unsigned r = 0; r < h_.n_rows; ++r)
      if (h_.get(r, j)) s |= uint64_t{1} << r;
    hcols_[j] = s;
  }
}

BinaryCode BinaryCode::from_generator(GF2Matrix generator) {
  GF2Matrix h = parity_check_from_generator(generator);
  return BinaryCode(std::move(generator), std::move(h));
}

BinaryCode BinaryCode::from_parity_check(GF2Matrix parity_check) {
  GF2Matrix g = generator_from_parity_check(parity_check);
  return BinaryCode(std::move(g), std::move(parity_check));
}

Syndrome BinaryCode::syndrome(BitWord w) const {
  if (w.size() != n_) throw std::invalid_argument("syndrome: word length mismatch");
  return Syndrome(syndrome_bits(w.bits), redundancy());
}

BitWord BinaryCode::encode(uint64_t message_bits) const {
  if (k_ < 64 && (message_bits >> k_) != 0)
    throw std::invalid_argument("encode: message bits outside dimension");
  uint64_t c = 0;
  uint64_t m = message_bits;
  while (m) {
    c ^= g_.rows[std::countr_zero(m)];
    m &= m - 1;
  }
  return BitWord(c, n_);
}

std::vector<uint64_t> BinaryCode::all_codewords(unsigned max_dimension) const {
  if (k_ > max_dimension)
    throw scale_error("all_codewords: 2^" + std::to_string(k_) +
                      " codewords exceeds the enumeration cap (use --force to override)");
  std::vector<uint64_t> words;
  words.resize(size_t{1} << k_);
  words[0] = 0;
  // Gray-code walk: step m flips generator row ctz(m), visiting every message.
  for (size_t m = 1; m < words.size(); ++m)
    words[m] = words[m - 1] ^ g_.rows[std::countr_zero(m)];
  return words;
}

namespace {

uint64_t parse_code_row(const std::string& line, unsigned n, unsigned line_no) {
  if (line.size() != n)
    throw format_error("code file, line " + std::to_string(line_no) + ": expected " +
                       std::to_string(n) + " characters, got " + std::to_string(line.size()));
  uint64_t bits = 0;
  for (unsigned j = 0; j < n; ++j) {
    if (line[j] == '1')
      bits |= uint64_t{1} << j;
    else if (line[j] != '0')
      throw format_error("code file, line " + std::to_string(line_no) +
                         ": invalid character '" + std::string(1, line[j]) + "'");
  }
  return bits;
}

std::string next_content_line(std::istream& in, unsigned& line_no, bool required) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    return line;
  }
  if (required) throw format_error("code file: unexpected end of file");
  return {};
}

}  // namespace

BinaryCode read_code(std::istream& in) {
  unsigned line_no = 0;
  std::string header = next_content_line(in, line_no, true);
  std::istringstream hs(header);
  long n = -1, k = -1;
  std::string extra;
  if (!(hs >> n >> k) || (hs >> extra) || n < 1 || n > 64 || k < 0 || k > n)
    throw format_error("code file: first line must be 'n k' with 1 <= n <= 64, 0 <= k <= n");

  GF2Matrix g(static_cast<unsigned>(k), static_cast<unsigned>(n));
  for (long r = 0; r < k; ++r) {
    std::string line = next_content_line(in, line_no, true);
    g.rows[r] = parse_code_row(line, static_cast<unsigned>(n), line_no);
  }

  std::string marker = next_content_line(in, line_no, false);
  if (marker.empty()) return BinaryCode::from_generator(std::move(g));

  if (marker != "H")
    throw format_error("code file, line " + std::to_string(line_no) +
                       ": expected 'H' section or end of file");
  GF2Matrix h(static_cast<unsigned>(n - k), static_cast<unsigned>(n));
  for (long r = 0; r < n - k; ++r) {
    std::string line = next_content_line(in, line_no, true);
    h.rows[r] = parse_code_row(line, static_cast<unsigned>(n), line_no);
  }
  std::string tail = next_content_line(in, line_no, false);
  if (!tail.empty())
    throw format_error("code file, line " + std::to_string(line_no) + ": trailing content");
  return BinaryCode(std::move(g), std::move(h));
}

BinaryCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open code file: " + path);
  return read_code(in);
}

void write_code(std::ostream& out, const BinaryCode& code, bool with_parity_check) {
  out << code.length() << ' ' << code.dimension() << '\n';
  for (unsigned r = 0; r < code.dimension(); ++r)
    out << code.generator().row_word(r).str() << '\n';
  if (with_parity_check && code.redundancy() > 0) {
    out << "H\n";
    for (unsigned r = 0; r < code.redundancy(); ++r)
      out << code.parity_check().row_word(r).str() << '\n';
  }
}

BitWord parse_word(std::string_view s) {
  if (s.empty() || s.size() > kMaxWordLength)
    throw format_error("word: length must be in [1, 64]");
  uint64_t bits = 0;
  for (size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1')
      bits |= uint64_t{1} << j;
    else if (s[j] != '0')
      throw format_error("word: invalid character '" + std::string(1, s[j]) + "'");
  }
  return BitWord(bits, static_cast<unsigned>(s.size()));
}

}  // namespace gdd
