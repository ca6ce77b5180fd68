#include "freegroup/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <unordered_set>
#include <utility>

namespace fg {
namespace {

bool valid_generator_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::islower(c) || std::isdigit(c) || ch == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void append_reduced(std::vector<Letter>& out, Letter letter) {
  if (!out.empty() && out.back().cancels(letter)) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

// Start index of the lexicographically least rotation.
std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = s[(i + k) % n];
    Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

// Length of the conjugating prefix u in w = u c u^-1 with c cyclically reduced.
std::size_t cyclic_prefix_length(std::span<const Letter> w) {
  std::size_t p = 0;
  while (2 * p + 1 < w.size() && w[p].cancels(w[w.size() - 1 - p])) ++p;
  return p;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!valid_generator_name(name)) throw ParseError("invalid generator name '" + name + "'", 0);
    if (!seen.insert(name).second) throw PreconditionError("duplicate generator name '" + name + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

std::shared_ptr<const Alphabet> Alphabet::parse(std::string_view csv) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    auto name = trim(csv.substr(start, comma - start));
    if (!valid_generator_name(name)) throw ParseError("invalid generator name '" + std::string(name) + "'", start);
    names.emplace_back(name);
    start = comma + 1;
  }
  return make(std::move(names));
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::shared_ptr<const Alphabet> Alphabet::prefix(std::size_t count) const {
  if (count > rank()) throw PreconditionError("prefix longer than alphabet");
  return make(std::vector<std::string>(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(count)));
}

bool same_alphabet(const AlphabetPtr& lhs, const AlphabetPtr& rhs) {
  return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

void require_same_alphabet(const AlphabetPtr& lhs, const AlphabetPtr& rhs) {
  if (!same_alphabet(lhs, rhs)) throw AlphabetMismatch("words are over different alphabets");
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw PreconditionError("word needs an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::span<const Letter> letters) : Word(std::move(alphabet)) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.generator >= alphabet_->rank() || (l.sign != 1 && l.sign != -1)) {
      throw AlphabetMismatch("letter outside alphabet of rank " + std::to_string(alphabet_->rank()));
    }
    append_reduced(letters_, l);
  }
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> reduced, Trusted)
    : alphabet_(std::move(alphabet)), letters_(std::move(reduced)) {}

Word Word::generator(AlphabetPtr alphabet, std::size_t index, int exponent) {
  if (index >= alphabet->rank()) throw AlphabetMismatch("generator index out of range");
  Letter l{static_cast<std::uint32_t>(index), static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  std::vector<Letter> letters(static_cast<std::size_t>(exponent < 0 ? -static_cast<long long>(exponent) : exponent), l);
  return Word(std::move(alphabet), std::move(letters), Trusted{});
}

Word Word::generator(AlphabetPtr alphabet, std::string_view name, int exponent) {
  auto index = alphabet->index_of(name);
  if (!index) throw AlphabetMismatch("unknown generator '" + std::string(name) + "'");
  return generator(std::move(alphabet), *index, exponent);
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    if (token == "1") continue;

    auto caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    if (!valid_generator_name(name)) throw ParseError("malformed generator '" + std::string(name) + "'", start);
    auto index = alphabet->index_of(name);
    if (!index) throw ParseError("unknown generator '" + std::string(name) + "'", start);

    long long exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = token.substr(caret + 1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      if (!digits.empty() && digits.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (digits.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("malformed exponent '" + std::string(digits) + "'", start + caret + 1);
      }
      if (exponent == 0) throw ParseError("exponent must be nonzero", start + caret + 1);
      if (exponent > 1'000'000 || exponent < -1'000'000) throw ParseError("exponent too large", start + caret + 1);
    }
    Letter l{static_cast<std::uint32_t>(*index), static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
    for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) raw.push_back(l);
  }
  return Word(std::move(alphabet), raw);
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long exponent = static_cast<long long>(j - i) * letters_[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet_->name(letters_[i].generator);
    if (exponent != 1) out += '^' + std::to_string(exponent);
    i = j;
  }
  return out;
}

void Word::push_back(Letter letter) {
  if (letter.generator >= alphabet_->rank()) throw AlphabetMismatch("letter outside alphabet");
  append_reduced(letters_, letter);
}

bool operator==(const Word& lhs, const Word& rhs) {
  return lhs.letters_ == rhs.letters_ && same_alphabet(lhs.alphabet_, rhs.alphabet_);
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  return std::lexicographical_compare_three_way(lhs.letters_.begin(), lhs.letters_.end(), rhs.letters_.begin(),
                                                rhs.letters_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter l : w.letters()) {
    h ^= l.slot() + 1;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Word reduce(std::span<const Letter> raw, const AlphabetPtr& alphabet) { return Word(alphabet, raw); }

Word multiply(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet_, v.alphabet_);
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out = u.letters_;
  std::size_t k = 0;
  while (!out.empty() && k < v.size() && out.back().cancels(v.letters_[k])) {
    out.pop_back();
    ++k;
  }
  out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(k), v.letters_.end());
  return Word(u.alphabet_, std::move(out), Word::Trusted{});
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(w.alphabet_, std::move(out), Word::Trusted{});
}

Word conjugate(const Word& x, const Word& g) { return invert(g) * x * g; }

Word commutator(const Word& x, const Word& y) { return x * y * invert(x) * invert(y); }

Word power(const Word& w, long long exponent) {
  Word base = exponent < 0 ? invert(w) : w;
  Word result(w.alphabet());
  for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) result = result * base;
  return result;
}

std::size_t cyclic_length(const Word& w) { return w.size() - 2 * cyclic_prefix_length(w.letters()); }

CyclicWord cyclic_normal_form(const Word& w) {
  std::span<const Letter> all = w.letters();
  const std::size_t p = cyclic_prefix_length(all);
  std::span<const Letter> core = all.subspan(p, all.size() - 2 * p);
  const std::size_t r = core.empty() ? 0 : least_rotation(core);

  std::vector<Letter> rotated(core.begin() + static_cast<std::ptrdiff_t>(r), core.end());
  rotated.insert(rotated.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));

  std::vector<Letter> conj(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(p));
  conj.insert(conj.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));
  return {Word(w.alphabet(), rotated), Word(w.alphabet(), conj)};
}

bool is_conjugate(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet());
  if (cyclic_length(u) != cyclic_length(v)) return false;
  return cyclic_normal_form(u).canonical == cyclic_normal_form(v).canonical;
}

Root root(const Word& w) {
  if (w.empty()) throw DegenerateInput("root of the identity is undefined");
  std::span<const Letter> all = w.letters();
  const std::size_t p = cyclic_prefix_length(all);
  std::span<const Letter> core = all.subspan(p, all.size() - 2 * p);
  const std::size_t n = core.size();

  // Smallest period via the prefix function; it divides n iff core is a proper power.
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && core[i] != core[k]) k = border[k - 1];
    if (core[i] == core[k]) ++k;
    border[i] = k;
  }
  std::size_t period = n - border[n - 1];
  if (n % period != 0) period = n;

  std::vector<Letter> base(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(p + period));
  base.insert(base.end(), all.end() - static_cast<std::ptrdiff_t>(p), all.end());
  return {Word(w.alphabet(), base), static_cast<long long>(n / period)};
}

bool centralizer_equal(const Word& x, const Word& y) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  if (x.empty() || y.empty()) throw DegenerateInput("centralizer of the identity is the whole group");
  Word rx = root(x).base;
  Word ry = root(y).base;
  return rx == ry || rx == invert(ry);
}

Word translate(const Word& w, const AlphabetPtr& target) {
  if (same_alphabet(w.alphabet(), target)) return Word(target, w.letters());
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    auto index = target->index_of(w.alphabet()->name(l.generator));
    if (!index) throw AlphabetMismatch("generator '" + w.alphabet()->name(l.generator) + "' missing from target alphabet");
    out.push_back({static_cast<std::uint32_t>(*index), l.sign});
  }
  return Word(target, out);
}

}  // namespace fg
