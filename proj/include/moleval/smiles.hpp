//
// moleval - Copyright (c) 2026 the moleval authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLEVAL_SMILES_HPP
#define MOLEVAL_SMILES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace moleval {

enum class BondOrder : std::uint8_t {
  Single = 1,
  Double = 2,
  Triple = 3,
  Aromatic = 4,
};

// Directional single-bond marker (/ or \), stored as written from atom a to
// atom b. Preserved through canonicalization but never used for ranking.
enum class BondStereo : std::uint8_t { None, Up, Down };

enum class Chirality : std::uint8_t { None, Anticlockwise, Clockwise };

struct Atom {
  std::string element;             // periodic-table symbol, e.g. "C", "Cl"
  std::optional<int> isotope;      // mass number, bracket atoms only
  int charge = 0;                  // formal charge
  std::optional<int> explicit_h;   // H count as written in a bracket atom
  bool aromatic = false;           // final perceived aromaticity
  Chirality chirality = Chirality::None;
  bool bracket = false;            // written as a bracket atom
  int implicit_h = 0;              // derived from valence rules at parse time
  int src_pos = 0;                 // character offset in the source string

  int total_h() const { return explicit_h ? *explicit_h : implicit_h; }
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
  BondStereo stereo = BondStereo::None;

  int other(int atom) const { return atom == a ? b : a; }
};

// Simple undirected molecular graph. Rings are the smallest set of smallest
// rings, recomputed by the parser; adjacency is cached as bond indices.
struct MolGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<std::vector<int>> rings;      // SSSR, atom-index cycles
  std::vector<std::vector<int>> adjacency;  // atom -> incident bond indices
  std::vector<bool> in_ring;                // atom lies on some cycle

  int degree(int atom) const {
    return static_cast<int>(adjacency[atom].size());
  }
  const Bond *bond_between(int a, int b) const;
};

enum class ParseErrorKind {
  UnclosedRing,
  UnclosedBranch,
  UnknownSymbol,
  BadBracketAtom,
  ValenceError,
  AromaticityError,
  EmptyInput,
  WildcardUnsupported,
};

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::UnknownSymbol;
  std::size_t position = 0;  // character offset, <= input length
  std::string message;
};

const char *to_string(ParseErrorKind kind);

using ParseResult = std::variant<MolGraph, ParseError>;

inline const MolGraph *get_mol(const ParseResult &r) {
  return std::get_if<MolGraph>(&r);
}
inline const ParseError *get_error(const ParseResult &r) {
  return std::get_if<ParseError>(&r);
}

// Parses a SMILES string into a molecular graph. Accepts the organic subset,
// bracket atoms (isotope, charge, H count, @/@@), ring closures including
// %nn, branches, bond symbols - = # : / \ and dot-separated components.
// Wildcard atoms are rejected. Aromaticity is perceived ring-by-ring with a
// 4n+2 electron count; Kekule and aromatic notations of the same ring system
// parse to identical graphs.
ParseResult parse_smiles(std::string_view smiles);

// True iff parse_smiles succeeds. Total: never throws on any byte string.
bool is_valid_smiles(std::string_view smiles);

// Canonical SMILES via iterative invariant refinement with exhaustive
// exploration of residual ties; invariant under atom reordering of the
// input. Disconnected components are canonicalized independently and joined
// in sorted order. Stereo annotations are carried through but do not affect
// atom ranks.
std::string canonical_smiles(const MolGraph &mol);

// Lexical split of a SMILES string: bracket atoms and %nn ring closures are
// single tokens, Cl/Br are single tokens, everything else is one character.
// Lossless: concatenating the tokens reproduces the input. No chemistry
// checks are performed.
std::vector<std::string> tokenize_smiles(std::string_view smiles);

}  // namespace moleval

#endif  // MOLEVAL_SMILES_HPP
