/*
   Copyright 2026 The qcong Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QCONG_SUMS_HPP
#define QCONG_SUMS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qcong/cyclofrac.hpp"
#include "qcong/errors.hpp"
#include "qcong/polyring.hpp"

namespace qcong {

/// Sum of a batch of values. CycloFrac uses one common denominator.
CycloFrac sum_all(std::vector<CycloFrac> terms);
RatFunc sum_all(std::vector<RatFunc> terms);
Rational sum_all(std::vector<Rational> terms);

template <class T>
T sum_all(std::vector<T> terms) {
    T acc(0);
    for (auto& t : terms) acc = acc + t;
    return acc;
}

/// terms[m] = c(m) and prefix[m] = c(0) + ... + c(m).
template <class T>
struct PrefixTable {
    std::vector<T> terms;
    std::vector<T> prefix;
};

template <class Gen>
using GenValue = std::decay_t<std::invoke_result_t<const Gen&, long>>;

template <class Gen>
PrefixTable<GenValue<Gen>> prefix_table(const Gen& gen, long count) {
    using T = GenValue<Gen>;
    PrefixTable<T> t;
    t.terms.reserve(static_cast<std::size_t>(count));
    t.prefix.reserve(static_cast<std::size_t>(count));
    for (long m = 0; m < count; ++m) {
        t.terms.push_back(gen(m));
        t.prefix.push_back(m == 0 ? t.terms.back() : t.prefix.back() + t.terms.back());
    }
    return t;
}

/// gen(0) + ... + gen(upper).
template <class Gen>
GenValue<Gen> single_sum(const Gen& gen, long upper) {
    std::vector<GenValue<Gen>> v;
    for (long k = 0; k <= upper; ++k) v.push_back(gen(k));
    return sum_all(std::move(v));
}

/// sum_{k<n} sum_{j<=k} c(j) c(k-j), as sum_i c(i) S_{n-1-i}.
template <class T>
T double_sum(const PrefixTable<T>& t, long n) {
    if (n < 1 || static_cast<std::size_t>(n) > t.terms.size()) throw std::invalid_argument("double_sum: bad n");
    std::vector<T> v;
    v.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) v.push_back(t.terms[i] * t.prefix[n - 1 - i]);
    return sum_all(std::move(v));
}

template <class Gen>
GenValue<Gen> double_sum(const Gen& gen, long n) {
    if (n < 1) throw std::invalid_argument("double_sum needs n >= 1");
    return double_sum(prefix_table(gen, n), n);
}

/// sum over i+j+s <= n-1 of c(i) c(j) c(s), as sum_t E(t) S_{n-1-t} with E
/// the self-convolution of c.
template <class T>
T triple_sum(const PrefixTable<T>& t, long n) {
    if (n < 1 || static_cast<std::size_t>(n) > t.terms.size()) throw std::invalid_argument("triple_sum: bad n");
    std::vector<T> outer;
    outer.reserve(static_cast<std::size_t>(n));
    for (long s = 0; s < n; ++s) {
        std::vector<T> conv;
        for (long j = 0; j <= s; ++j) conv.push_back(t.terms[j] * t.terms[s - j]);
        outer.push_back(sum_all(std::move(conv)) * t.prefix[n - 1 - s]);
    }
    return sum_all(std::move(outer));
}

template <class Gen>
GenValue<Gen> triple_sum(const Gen& gen, long n) {
    if (n < 1) throw std::invalid_argument("triple_sum needs n >= 1");
    return triple_sum(prefix_table(gen, n), n);
}

/// Literal O(n^2) and O(n^3) loops, for cross-checking.
template <class Gen>
GenValue<Gen> double_sum_literal(const Gen& gen, long n) {
    using T = GenValue<Gen>;
    T acc(0);
    for (long k = 0; k < n; ++k)
        for (long j = 0; j <= k; ++j) acc = acc + gen(j) * gen(k - j);
    return acc;
}

template <class Gen>
GenValue<Gen> triple_sum_literal(const Gen& gen, long n) {
    using T = GenValue<Gen>;
    T acc(0);
    for (long i = 0; i < n; ++i)
        for (long j = 0; i + j < n; ++j)
            for (long s = 0; i + j + s < n; ++s) acc = acc + gen(i) * gen(j) * gen(s);
    return acc;
}

// Brute-force oracles for the convolution lemmas. F is any exact field type
// with F(0), F(1), +, * and ==.

namespace detail {

inline long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

template <class F>
F convolution(const std::vector<F>& c, long m) {
    F acc(0);
    for (long j = 0; j <= m; ++j) acc = acc + c[j] * c[m - j];
    return acc;
}

template <class F>
void require_length(const std::vector<F>& c, long need) {
    if (static_cast<long>(c.size()) < need)
        throw HypothesisViolation("sequence has " + std::to_string(c.size()) + " entries, need " +
                                  std::to_string(need));
}

/// c(j) = c(floor(j/n) n) c(j mod n) for j <= upto.
template <class F>
void require_multiplicative(const std::vector<F>& c, long n, long upto) {
    for (long j = 0; j <= upto; ++j)
        if (!(c[j] == c[(j / n) * n] * c[j % n]))
            throw HypothesisViolation("c(" + std::to_string(j) + ") != c(" + std::to_string((j / n) * n) + ") c(" +
                                      std::to_string(j % n) + ")");
}

/// Common hypotheses for the square and cube identities.
template <class F>
long support_bound(const std::vector<F>& c, long n, long d, long r, long min_d, long window_den) {
    if (n < 1) throw HypothesisViolation("n must be positive");
    if (d < min_d) throw HypothesisViolation("d must be at least " + std::to_string(min_d));
    if ((n - r) % d != 0) throw HypothesisViolation("n != r (mod d)");
    if (r > n || r < n - floor_div((n - 1) * d, window_den))
        throw HypothesisViolation("r outside the support window");
    require_length(c, n);
    long s = (n - r) / d;
    for (long k = s + 1; k < n; ++k)
        if (!(c[k] == F(0))) throw SupportViolation("c(" + std::to_string(k) + ") != 0 beyond (n-r)/d");
    return s;
}

}  // namespace detail

/// Square identity: sum_{k<n} sum_{j<=k} c(j)c(k-j) = (sum_{j<=(n-r)/d} c(j))^2
/// for c supported on [0, (n-r)/d] inside [0, n).
template <class F>
bool oracle_square_identity(const std::vector<F>& c, long n, long d, long r) {
    if (n < 2) throw HypothesisViolation("n must exceed 1");
    long s = detail::support_bound(c, n, d, r, 2, 2);
    F lhs(0);
    for (long k = 0; k < n; ++k) lhs = lhs + detail::convolution(c, k);
    F part(0);
    for (long j = 0; j <= s; ++j) part = part + c[j];
    return lhs == part * part;
}

/// Shift identity for the self-convolution at ln+k. Hypotheses: c vanishes on
/// n/2 <= j < n, and c(j) = c(floor(j/n) n) c(j mod n) up to ln+k.
template <class F>
bool oracle_shift_identity(const std::vector<F>& c, long n, long l, long k) {
    if (n < 1 || l < 0 || k < 0 || k >= n) throw HypothesisViolation("need n >= 1, l >= 0, 0 <= k < n");
    long top = l * n + k;
    detail::require_length(c, std::max(top + 1, n));
    for (long j = (n + 1) / 2; j < n; ++j)
        if (!(c[j] == F(0))) throw HypothesisViolation("c(" + std::to_string(j) + ") != 0 with 2j >= n");
    detail::require_multiplicative(c, n, top);
    F lhs = detail::convolution(c, top);
    F outer(0);
    for (long t = 0; t <= l; ++t) outer = outer + c[t * n] * c[(l - t) * n];
    return lhs == outer * detail::convolution(c, k);
}

/// Cube identity sum_{i+j+s<n} c(i)c(j)c(s) = (sum_{i<=(n-r)/d} c(i))^3 and the
/// triple shift identity at ln+k.
template <class F>
bool oracle_triple_identities(const std::vector<F>& c, long n, long d, long r, long l, long k) {
    if (l < 0 || k < 0 || k >= n) throw HypothesisViolation("need l >= 0 and 0 <= k < n");
    long s = detail::support_bound(c, n, d, r, 3, 3);
    long top = l * n + k;
    detail::require_length(c, top + 1);
    detail::require_multiplicative(c, n, top);

    F cube_lhs(0);
    for (long i = 0; i < n; ++i)
        for (long j = 0; i + j < n; ++j)
            for (long t = 0; i + j + t < n; ++t) cube_lhs = cube_lhs + c[i] * c[j] * c[t];
    F part(0);
    for (long j = 0; j <= s; ++j) part = part + c[j];
    if (!(cube_lhs == part * part * part)) return false;

    auto triple_conv = [&](long m) {
        F acc(0);
        for (long i = 0; i <= m; ++i)
            for (long j = 0; i + j <= m; ++j) acc = acc + c[i] * c[j] * c[m - i - j];
        return acc;
    };
    F outer(0);
    for (long a = 0; a <= l; ++a) {
        F inner(0);
        for (long t = 0; t <= l - a; ++t) inner = inner + c[t * n] * c[(l - a - t) * n];
        outer = outer + c[a * n] * inner;
    }
    return triple_conv(top) == outer * triple_conv(k);
}

/// sum_{k<n} sum_{j<=k} a_j a_{k-j} = 0 for odd n and a antisymmetric under
/// k -> (n-1)/2 - k on the lower half and k -> (3n-1)/2 - k on the upper half.
template <class F>
bool oracle_antisymmetry(const std::vector<F>& a, long n) {
    if (n < 1 || n % 2 == 0) throw HypothesisViolation("n must be a positive odd integer");
    if (static_cast<long>(a.size()) != n) throw HypothesisViolation("sequence length must equal n");
    for (long k = 0; k <= (n - 1) / 2; ++k)
        if (!(a[k] == F(0) - a[(n - 1) / 2 - k]))
            throw HypothesisViolation("a_" + std::to_string(k) + " != -a_" + std::to_string((n - 1) / 2 - k));
    for (long k = (n + 1) / 2; k < n; ++k)
        if (!(a[k] == F(0) - a[(3 * n - 1) / 2 - k]))
            throw HypothesisViolation("a_" + std::to_string(k) + " != -a_" + std::to_string((3 * n - 1) / 2 - k));
    F total(0);
    for (long k = 0; k < n; ++k) total = total + detail::convolution(a, k);
    return total == F(0);
}

}  // namespace qcong

#endif  // QCONG_SUMS_HPP
