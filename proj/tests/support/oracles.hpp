#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blowup/polynomial.hpp"

namespace oracle {

using blowup::Polynomial;
using blowup::Rational;
using blowup::RingPtr;

/// Evaluates an expression string with a stack machine of its own; no
/// library parsing involved.
Rational eval_expression(const std::string& text, const std::map<std::string, Rational>& values);

/// Order of vanishing at p from a direct binomial Taylor expansion of the terms.
std::optional<unsigned> taylor_order(const Polynomial& f, const std::vector<Rational>& p);

/// f = sum h_i g_i with deg h_i <= bound, decided by exact Gaussian elimination
/// on the coefficient matrix. A true answer is a certificate.
bool linear_membership(const Polynomial& f, const std::vector<Polynomial>& gens, unsigned bound);

std::size_t rank(std::vector<std::vector<Rational>> rows);

/// Lower-left hull of a finite set in the plane (monotone chain), as indices.
std::vector<std::size_t> lower_hull_2d(const std::vector<std::pair<long, long>>& pts);

Polynomial random_polynomial(const RingPtr& ring, std::mt19937& rng, unsigned terms, unsigned max_degree,
                             bool rational_coefficients = true);
std::vector<Rational> random_point(std::size_t n, std::mt19937& rng, int spread = 5);

}  // namespace oracle
