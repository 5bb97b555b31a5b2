#include "alexdeg/groups/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "alexdeg/ringkit/laurent_matrix.hpp"

namespace alexdeg::groups {

std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (!out.empty() && out.back() == l.inverse()) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(letters)) {}

Word Word::generator(std::size_t g, int power) {
  std::vector<Letter> ls;
  const int sign = power < 0 ? -1 : 1;
  for (int i = 0; i < std::abs(power); ++i) ls.push_back({g, sign});
  return Word(std::move(ls));
}

Word Word::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) ls.push_back(it->inverse());
  Word w;
  w.letters_ = std::move(ls);
  return w;
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> ls = a.letters_;
  for (const auto& l : b.letters_) {
    if (!ls.empty() && ls.back() == l.inverse()) ls.pop_back();
    else ls.push_back(l);
  }
  Word w;
  w.letters_ = std::move(ls);
  return w;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators)
    if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator '" + g + "'");
  if (meridians.size() != generators.size())
    throw std::invalid_argument("meridian flags do not match the generator count");
  for (const auto& r : relators)
    for (const auto& l : r.letters())
      if (l.generator >= generators.size())
        throw std::invalid_argument("relator references an unknown generator");
}

Presentation make_presentation(std::size_t m, std::vector<Word> relators, const std::string& prefix) {
  Presentation p;
  for (std::size_t i = 0; i < m; ++i) p.generators.push_back(prefix + std::to_string(i + 1));
  p.relators = std::move(relators);
  p.meridians.assign(m, true);
  p.validate();
  return p;
}

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::map<std::string, std::size_t, std::less<>> index;
  bool have_gens = false;
  std::optional<std::vector<std::string_view>> meridian_tokens;
  std::size_t meridian_line = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    std::string_view head = tokens.front();
    std::vector<std::string_view> rest(tokens.begin() + 1, tokens.end());
    // allow "gens:a" style by splitting on the first colon
    if (auto colon = head.find(':'); colon != std::string_view::npos && colon + 1 < head.size()) {
      rest.insert(rest.begin(), head.substr(colon + 1));
      head = head.substr(0, colon + 1);
    }

    if (head == "gens:") {
      if (have_gens) throw ParseError(line_no, "generators declared twice");
      have_gens = true;
      if (rest.empty()) throw ParseError(line_no, "empty generator list");
      for (auto tok : rest) {
        if (!valid_identifier(tok)) throw ParseError(line_no, "invalid generator name '" + std::string(tok) + "'");
        std::string name(tok);
        if (index.count(name)) throw ParseError(line_no, "duplicate generator '" + name + "'");
        index.emplace(name, p.generators.size());
        p.generators.push_back(std::move(name));
      }
    } else if (head == "rel:") {
      if (!have_gens) throw ParseError(line_no, "relator before the generator list");
      std::vector<Letter> letters;
      for (auto tok : rest) {
        std::string_view name = tok;
        long power = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
          name = tok.substr(0, caret);
          std::string_view ex = tok.substr(caret + 1);
          if (!ex.empty() && ex.front() == '+') ex.remove_prefix(1);
          auto [ptr, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), power);
          if (ex.empty() || ec != std::errc{} || ptr != ex.data() + ex.size())
            throw ParseError(line_no, "malformed exponent in '" + std::string(tok) + "'");
          if (power > 1'000'000 || power < -1'000'000)
            throw ParseError(line_no, "exponent out of range in '" + std::string(tok) + "'");
        }
        auto it = index.find(name);
        if (it == index.end()) throw ParseError(line_no, "unknown generator '" + std::string(name) + "'");
        for (long k = 0; k < std::labs(power); ++k) letters.push_back({it->second, power < 0 ? -1 : 1});
      }
      p.relators.emplace_back(std::move(letters));
    } else if (head == "meridians:") {
      if (!have_gens) throw ParseError(line_no, "meridians before the generator list");
      if (meridian_tokens) throw ParseError(line_no, "meridians declared twice");
      meridian_tokens = rest;
      meridian_line = line_no;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(head) + "'");
    }
  }
  if (!have_gens) throw ParseError(line_no, "empty generator list");

  if (meridian_tokens) {
    p.meridians.assign(p.generators.size(), false);
    for (auto tok : *meridian_tokens) {
      auto it = index.find(tok);
      if (it == index.end())
        throw ParseError(meridian_line, "unknown generator '" + std::string(tok) + "'");
      p.meridians[it->second] = true;
    }
  } else {
    p.meridians.assign(p.generators.size(), true);
  }
  return p;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  std::ostringstream os;
  const auto& ls = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long power = static_cast<long>(j - i) * ls[i].sign;
    if (!first) os << ' ';
    first = false;
    os << names.at(ls[i].generator);
    if (power != 1) os << '^' << power;
    i = j;
  }
  return os.str();
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : p.generators) os << ' ' << g;
  os << '\n';
  if (std::find(p.meridians.begin(), p.meridians.end(), false) != p.meridians.end()) {
    os << "meridians:";
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      if (p.meridians[i]) os << ' ' << p.generators[i];
    os << '\n';
  }
  for (const auto& r : p.relators) {
    os << "rel:";
    if (!r.is_identity()) os << ' ' << word_to_string(r, p.generators);
    os << '\n';
  }
  return os.str();
}

std::vector<std::int64_t> AbelianizationData::image(const Word& w) const {
  std::vector<std::int64_t> v(rank, 0);
  for (const auto& l : w.letters())
    for (std::size_t k = 0; k < rank; ++k) v[k] += l.sign * quotient_map(k, l.generator).get_si();
  return v;
}

namespace {

// Inverse of a unimodular integer matrix via rational Gauss-Jordan.
ring::IntMatrix unimodular_inverse(const ring::IntMatrix& b) {
  const std::size_t n = b.rows();
  ring::Matrix<mpq_class> a(n, 2 * n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = b(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (a(r, c) == 0) ++r;
    a.swap_rows(r, c);
    mpq_class inv = 1 / a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      mpq_class f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  ring::IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j).get_num();
  return out;
}

constexpr std::size_t kBasisSearchLimit = 20000;

}  // namespace

AbelianizationData abelianize(const Presentation& p) {
  p.validate();
  const std::size_t m = p.num_generators();
  const std::size_t q = p.relators.size();
  ring::IntMatrix exps(q, m);
  for (std::size_t r = 0; r < q; ++r)
    for (const auto& l : p.relators[r].letters()) exps(r, l.generator) += l.sign;

  AbelianizationData ab;
  const auto snf = ring::smith_normal_form_int(exps);
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.diagonal(i, i) > 1) ab.torsion_detected = true;
  ab.rank = m - snf.rank;

  // x V = y; the free coordinates are y_rank..y_{m-1}, so generator j maps
  // to row j of V restricted to those columns.
  ring::IntMatrix quotient(ab.rank, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < ab.rank; ++k) quotient(k, j) = snf.right(j, snf.rank + k);

  std::vector<std::size_t> meridian_cols;
  for (std::size_t j = 0; j < m; ++j)
    if (p.meridians[j]) meridian_cols.push_back(j);

  if (ab.rank > 0 && meridian_cols.size() >= ab.rank) {
    std::size_t tried = 0;
    for (const auto& pick : ring::combinations(meridian_cols.size(), ab.rank)) {
      if (++tried > kBasisSearchLimit) break;
      ring::IntMatrix b(ab.rank, ab.rank);
      for (std::size_t c = 0; c < ab.rank; ++c)
        for (std::size_t k = 0; k < ab.rank; ++k) b(k, c) = quotient(k, meridian_cols[pick[c]]);
      if (abs(ring::int_determinant(b)) != 1) continue;
      quotient = unimodular_inverse(b) * quotient;
      ab.meridian_basis = true;
      break;
    }
  } else if (ab.rank == 0) {
    ab.meridian_basis = meridian_cols.empty();
  }
  ab.quotient_map = std::move(quotient);

  ab.psi.assign(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < ab.rank; ++k) ab.psi[j] += ab.quotient_map(k, j).get_si();
  return ab;
}

std::vector<std::int64_t> linking_vector(const AbelianizationData& ab) { return ab.psi; }

std::int64_t linking_number(const AbelianizationData& ab, const Word& w) {
  std::int64_t total = 0;
  for (const auto& l : w.letters()) total += l.sign * ab.psi.at(l.generator);
  return total;
}

}  // namespace alexdeg::groups
