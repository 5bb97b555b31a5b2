#pragma once

// Finitely presented groups: free words, the presentation DSL and
// abelianization onto the maximal torsion-free abelian quotient.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alexdeg/ringkit/int_matrix.hpp"

namespace alexdeg::groups {

struct Letter {
  std::size_t generator = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word in the free group. The empty word is the identity.
class Word {
 public:
  Word() = default;
  // Reduces the given letters.
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::size_t g, int power = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(int k) const;
  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Freely reduced form of an arbitrary letter sequence.
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // One flag per generator; true when the generator is a meridian.
  std::vector<bool> meridians;

  std::size_t num_generators() const { return generators.size(); }
  // Throws std::invalid_argument when labels repeat, flags have the wrong
  // length, or a relator references a missing generator.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Builds a presentation whose generators are x1..xm, all meridians.
Presentation make_presentation(std::size_t m, std::vector<Word> relators,
                               const std::string& prefix = "x");

// Line-oriented DSL:
//   gens: a b c
//   rel: a b a^-1 b^-1
//   meridians: a b          (optional; default is every generator)
//   # comment
Presentation parse_presentation(std::string_view text);

std::string serialize_presentation(const Presentation& p);
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

struct AbelianizationData {
  // Rank s of the torsion-free quotient H.
  std::size_t rank = 0;
  // s x m integer matrix; column j is the image of generator j in Z^s.
  ring::IntMatrix quotient_map;
  bool torsion_detected = false;
  // Linking vector: coordinate sum of each generator's image.
  std::vector<std::int64_t> psi;
  // True when the meridian generators could be mapped to standard basis
  // vectors (the expected situation for curve complements).
  bool meridian_basis = false;

  // Image of a word in Z^s.
  std::vector<std::int64_t> image(const Word& w) const;
};

// Relator exponent matrix -> Smith form -> projection onto the free part,
// then a unimodular change of basis that sends meridians to standard basis
// vectors whenever they span the lattice.
AbelianizationData abelianize(const Presentation& p);

// psi per generator.
std::vector<std::int64_t> linking_vector(const AbelianizationData& ab);

// psi of an arbitrary word.
std::int64_t linking_number(const AbelianizationData& ab, const Word& w);

}  // namespace alexdeg::groups
