#pragma once

// Brute-force reference implementations on plain integer vectors. They share no code
// with the library beyond parsing, so agreement is evidence rather than tautology.

#include <cstddef>
#include <random>
#include <vector>

#include "comkit/ranking.hpp"
#include "comkit/realize.hpp"
#include "comkit/sign_system.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Set = std::vector<Vec>;

Set to_set(const comkit::SignSystem& s);
comkit::SignSystem to_system(const Set& rows);

Vec compose(const Vec& x, const Vec& y);
bool leq(const Vec& x, const Vec& y);
bool member(const Set& s, const Vec& x);

bool composition(const Set& s);
bool face_symmetry(const Set& s);
bool strong_elimination(const Set& s);
bool symmetric(const Set& s);
bool ideal_composition(const Set& s);
bool has_zero(const Set& s);
bool weak_elimination(const Set& s);

bool is_com(const Set& s);
bool is_om(const Set& s);
bool is_lopsided(const Set& s);

Set topes(const Set& s);
Set conformal_closure(const Set& s);

// Every level assignment respecting the order, normalized to consecutive levels.
std::size_t count_rankings(const comkit::Poset& p);
std::size_t count_linear_extensions(const comkit::Poset& p);

// Every sign vector in {+,0,-}^E tested for realizability by its own LP. Shares the LP
// solver with the library but not the cell enumeration.
Set brute_force_cells(const comkit::RealizationProblem& problem);

// Random subset of {+,0,-}^n with the given number of rows (at least one).
Set random_system(std::mt19937& rng, std::size_t n, std::size_t rows);

}  // namespace oracle
