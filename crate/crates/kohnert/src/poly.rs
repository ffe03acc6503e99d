//! Exact sparse polynomials indexed by weak compositions, the divided
//! difference operators built on them, and constructors for the polynomial
//! bases: monomial/fundamental slides, Demazure characters, Schubert
//! polynomials, and the lock and skew families.
//!
//! Coefficients are arbitrary-precision integers; all arithmetic is exact.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::composition::{descending_lex, dominance_le, dominance_lt, StrongComposition, WeakComposition};
use crate::diagram::{key_diagram, lock_diagram, rothe_diagram, skew_diagram};
use crate::error::{Error, Result};
use crate::moves::kohnert_polynomial;
use crate::perm::Permutation;

/// A polynomial as a finite map from exponent vectors to nonzero integer
/// coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<WeakComposition, BigInt>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::monomial(WeakComposition::empty(), BigInt::one())
    }

    /// A single term `c * x^a`; the zero polynomial when `c = 0`.
    pub fn monomial(a: WeakComposition, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(a, c);
        }
        Polynomial { terms }
    }

    /// The monomial `x^a`.
    pub fn x_power(a: &WeakComposition) -> Self {
        Polynomial::monomial(a.clone(), BigInt::one())
    }

    /// The variable `x_i` (1-indexed).
    pub fn var(i: usize) -> Self {
        let mut parts = vec![0u32; i];
        parts[i - 1] = 1;
        Polynomial::x_power(&WeakComposition::new(parts))
    }

    /// The terms, keyed by exponent vector.
    pub fn terms(&self) -> &BTreeMap<WeakComposition, BigInt> {
        &self.terms
    }

    /// Coefficient of `x^a` (zero when absent).
    pub fn coeff(&self, a: &WeakComposition) -> BigInt {
        self.terms.get(a).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest variable index appearing with nonzero exponent.
    pub fn num_variables(&self) -> usize {
        self.terms.keys().map(|a| a.len()).max().unwrap_or(0)
    }

    /// The common degree of all terms, or `None` if terms have mixed
    /// degrees. The zero polynomial reports degree 0.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let d = match it.next() {
            None => return Some(0),
            Some(a) => a.size(),
        };
        if it.all(|a| a.size() == d) {
            Some(d)
        } else {
            None
        }
    }

    fn add_term(&mut self, a: WeakComposition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(a) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by the scalar `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, k)| (a.clone(), k * c))
                .collect(),
        }
    }

    /// Multiplies by the single variable `x_i` (1-indexed).
    pub fn times_var(&self, i: usize) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, k)| {
                    let mut parts = a.padded(i);
                    parts[i - 1] += 1;
                    (WeakComposition::new(parts), k.clone())
                })
                .collect(),
        }
    }

    /// Applies the transposition of the variables `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Self {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            let mut parts = a.padded(i + 1);
            parts.swap(i - 1, i);
            out.add_term(WeakComposition::new(parts), c.clone());
        }
        out
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let n = a.len().max(b.len());
                let mut parts = a.padded(n);
                for (i, p) in b.parts().iter().enumerate() {
                    parts[i] += p;
                }
                out.add_term(WeakComposition::new(parts), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&WeakComposition, &BigInt)> = self.terms.iter().collect();
        entries.sort_by(|x, y| descending_lex(x.0.parts(), y.0.parts()));
        for (i, (a, c)) in entries.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if a.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "x^{a}")?;
            } else {
                write!(f, "{mag}*x^{a}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The divided difference operator: `g` with `(x_i - x_{i+1}) * g`
/// equal to `f` minus `f` with `x_i` and `x_{i+1}` exchanged.
///
/// Computed termwise from the closed form for a power pair `(p, q)` in
/// positions `i, i+1`: the sum of `x_i^t x_{i+1}^(p+q-1-t)` for `t` from
/// `min(p,q)` to `max(p,q)-1`, with sign `+` when `p > q` and `-` when
/// `p < q` (and zero when `p = q`), spectator variables unchanged.
pub fn divided_difference(i: usize, f: &Polynomial) -> Polynomial {
    assert!(i >= 1, "operator index is 1-based");
    let mut out = Polynomial::zero();
    for (a, c) in f.terms() {
        let p = a.part(i);
        let q = a.part(i + 1);
        if p == q {
            continue;
        }
        let sign = if p > q { c.clone() } else { -c.clone() };
        let (lo, hi) = (p.min(q), p.max(q));
        for t in lo..hi {
            let mut parts = a.padded(i + 1);
            parts[i - 1] = t;
            parts[i] = p + q - 1 - t;
            out.add_term(WeakComposition::new(parts), sign.clone());
        }
    }
    out
}

/// The isobaric variant: applies [`divided_difference`] after multiplying by
/// `x_i`. Idempotent.
pub fn pi(i: usize, f: &Polynomial) -> Polynomial {
    divided_difference(i, &f.times_var(i))
}

/// The Demazure character of a weak composition, by the ascent recursion:
/// `x^a` when `a` weakly decreases, otherwise `pi_i` applied to the character
/// of `a` with the ascent `a_i < a_{i+1}` swapped.
pub fn demazure_character(a: &WeakComposition) -> Polynomial {
    let parts = a.parts();
    for i in 0..parts.len().saturating_sub(1) {
        if parts[i] < parts[i + 1] {
            let mut swapped = parts.to_vec();
            swapped.swap(i, i + 1);
            return pi(i + 1, &demazure_character(&WeakComposition::new(swapped)));
        }
    }
    Polynomial::x_power(a)
}

/// The Schubert polynomial of `w`: the full divided-difference image of the
/// staircase monomial, taken along the sorting word of `w^{-1}` times the
/// longest element.
pub fn schubert(w: &Permutation) -> Polynomial {
    let n = w.len();
    if n == 0 {
        return Polynomial::one();
    }
    // Staircase monomial x1^(n-1) x2^(n-2) ... x_{n-1}.
    let staircase = WeakComposition::new((0..n as u32).rev().collect::<Vec<_>>());
    let mut f = Polynomial::x_power(&staircase);
    // u = w^{-1} composed with the longest element; strip descents to read
    // off a reduced word, applying each operator as it is found.
    let winv = w.inverse();
    let longest = Permutation::longest(n);
    let word: Vec<u32> = (1..=n)
        .map(|i| winv.at(longest.at(i) as usize))
        .collect();
    let mut u = Permutation::from_one_line(word).expect("composition of permutations");
    loop {
        let mut descent = None;
        for i in 1..n {
            if u.has_descent(i) {
                descent = Some(i);
                break;
            }
        }
        match descent {
            None => break,
            Some(i) => {
                f = divided_difference(i, &f);
                u = u.swap_positions(i);
            }
        }
    }
    f
}

fn placements(parts: &[u32], n: usize) -> Vec<Vec<u32>> {
    // All vectors of length n with the given positive parts, in order, placed
    // at strictly increasing positions and zeros elsewhere.
    fn rec(parts: &[u32], n: usize, start: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts.is_empty() {
            out.push(current.clone());
            return;
        }
        // Leave room for the remaining parts.
        for pos in start..=(n - parts.len()) {
            current[pos] = parts[0];
            rec(&parts[1..], n, pos + 1, current, out);
            current[pos] = 0;
        }
    }
    let mut out = Vec::new();
    if parts.len() <= n {
        rec(parts, n, 0, &mut vec![0u32; n], &mut out);
    }
    out
}

/// The monomial slide polynomial of `a`: the sum of `x^b` over weak
/// compositions `b` of the same length that dominate `a` and have the same
/// flattening.
pub fn monomial_slide(a: &WeakComposition) -> Polynomial {
    let n = a.len();
    let flat = a.flatten();
    let mut out = Polynomial::zero();
    for b in placements(flat.parts(), n) {
        let b = WeakComposition::new(b);
        if dominance_le(a, &b).unwrap_or(false) {
            out.add_term(b, BigInt::one());
        }
    }
    if a.is_empty() {
        return Polynomial::one();
    }
    out
}

/// The fundamental slide polynomial of `a`: the sum of `x^b` over `b` of the
/// same length dominating `a` whose flattening refines the flattening of `a`.
pub fn fundamental_slide(a: &WeakComposition) -> Polynomial {
    let n = a.len();
    let flat = a.flatten();
    let mut out = Polynomial::zero();
    for beta in flat.refinements() {
        for b in placements(beta.parts(), n) {
            let b = WeakComposition::new(b);
            if dominance_le(a, &b).unwrap_or(false) {
                out.add_term(b, BigInt::one());
            }
        }
    }
    if a.is_empty() {
        return Polynomial::one();
    }
    out
}

/// The monomial quasisymmetric polynomial of `alpha` in `n` variables: the
/// sum of all placements of the parts at strictly increasing variable
/// indices.
pub fn monomial_qsym_poly(alpha: &StrongComposition, n: usize) -> Result<Polynomial> {
    if alpha.len() > n {
        return Err(Error::TooFewVariables {
            used: alpha.len(),
            limit: n,
        });
    }
    let mut out = Polynomial::zero();
    for b in placements(alpha.parts(), n) {
        out.add_term(WeakComposition::new(b), BigInt::one());
    }
    if alpha.is_empty() {
        return Ok(Polynomial::one());
    }
    Ok(out)
}

/// The fundamental quasisymmetric polynomial of `alpha` in `n` variables:
/// the sum of the monomial quasisymmetric polynomials of all refinements of
/// `alpha` that fit in `n` variables.
pub fn fundamental_qsym_poly(alpha: &StrongComposition, n: usize) -> Result<Polynomial> {
    if alpha.len() > n {
        return Err(Error::TooFewVariables {
            used: alpha.len(),
            limit: n,
        });
    }
    let mut out = Polynomial::zero();
    for beta in alpha.refinements() {
        if beta.len() <= n {
            out = &out + &monomial_qsym_poly(&beta, n)?;
        }
    }
    if alpha.is_empty() {
        return Ok(Polynomial::one());
    }
    Ok(out)
}

/// The Kohnert polynomial of the right-justified diagram of `a`.
pub fn lock_polynomial(a: &WeakComposition) -> Result<Polynomial> {
    kohnert_polynomial(&lock_diagram(a))
}

/// The Kohnert polynomial of the shifted skew diagram of `a`.
pub fn skew_polynomial(a: &WeakComposition) -> Result<Polynomial> {
    kohnert_polynomial(&skew_diagram(a))
}

/// Expands `f` in the basis produced by `basis`, which must map each weak
/// composition `b` to a polynomial whose unique dominance-minimal term is
/// `x^b` with coefficient 1.
///
/// Greedy elimination: repeatedly locate the lexicographically smallest
/// dominance-minimal exponent in the support, read off its coefficient, and
/// subtract that multiple of the basis element. Signed integer coefficients
/// are returned exactly.
pub fn expand_in_kohnert_basis<F>(
    f: &Polynomial,
    mut basis: F,
) -> Result<BTreeMap<WeakComposition, BigInt>>
where
    F: FnMut(&WeakComposition) -> Result<Polynomial>,
{
    if f.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let support: Vec<WeakComposition> = rest.terms().keys().cloned().collect();
        let mut minimal: Vec<&WeakComposition> = Vec::new();
        'next: for a in &support {
            for b in &support {
                if b != a && dominance_le(b, a)? {
                    continue 'next;
                }
            }
            minimal.push(a);
        }
        let b = (*minimal
            .iter()
            .min()
            .expect("nonzero polynomial has a minimal exponent"))
        .clone();
        let c = rest.coeff(&b);
        let g = basis(&b)?;
        // Defensive triangularity check on the generator.
        if g.coeff(&b) != BigInt::one() {
            return Err(Error::BasisContractViolated(b.to_string()));
        }
        for e in g.terms().keys() {
            if e != &b && !dominance_lt(&b, e).map_err(|_| Error::BasisContractViolated(b.to_string()))? {
                return Err(Error::BasisContractViolated(b.to_string()));
            }
        }
        rest = &rest - &g.scale(&c);
        out.insert(b, c);
    }
    Ok(out)
}

/// True when every strong composition appearing among the exponent vectors
/// of `f` has the same coefficient at every strictly increasing placement
/// into `n` variables.
pub fn is_quasisymmetric(f: &Polynomial, n: usize) -> Result<bool> {
    if f.num_variables() > n {
        return Err(Error::TooFewVariables {
            used: f.num_variables(),
            limit: n,
        });
    }
    let mut shapes: Vec<StrongComposition> = f.terms().keys().map(|a| a.flatten()).collect();
    shapes.sort();
    shapes.dedup();
    for alpha in shapes {
        let mut coeffs = placements(alpha.parts(), n)
            .into_iter()
            .map(|b| f.coeff(&WeakComposition::new(b)));
        let first = match coeffs.next() {
            Some(c) => c,
            None => continue,
        };
        if coeffs.any(|c| c != first) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A witness against quasisymmetry: two placements of the same strong
/// composition with different coefficients.
pub fn quasisymmetry_violation(
    f: &Polynomial,
    n: usize,
) -> Result<Option<(WeakComposition, WeakComposition)>> {
    if f.num_variables() > n {
        return Err(Error::TooFewVariables {
            used: f.num_variables(),
            limit: n,
        });
    }
    let mut shapes: Vec<StrongComposition> = f.terms().keys().map(|a| a.flatten()).collect();
    shapes.sort();
    shapes.dedup();
    for alpha in shapes {
        let all: Vec<WeakComposition> = placements(alpha.parts(), n)
            .into_iter()
            .map(WeakComposition::new)
            .collect();
        for pair in all.windows(2) {
            if f.coeff(&pair[0]) != f.coeff(&pair[1]) {
                return Ok(Some((pair[0].clone(), pair[1].clone())));
            }
        }
    }
    Ok(None)
}

/// Convenience: the Demazure character as a fallible basis generator for
/// [`expand_in_kohnert_basis`].
pub fn demazure_basis(b: &WeakComposition) -> Result<Polynomial> {
    Ok(demazure_character(b))
}

/// The Schubert polynomial indexed by the Lehmer code `b`.
pub fn schubert_basis(b: &WeakComposition) -> Result<Polynomial> {
    Ok(schubert(&Permutation::from_lehmer_code(b)))
}

/// Cross-check helper: the Kohnert polynomial of the left-justified diagram.
pub fn key_kohnert(a: &WeakComposition) -> Result<Polynomial> {
    kohnert_polynomial(&key_diagram(a))
}

/// Cross-check helper: the Kohnert polynomial of the inversion diagram.
pub fn rothe_kohnert(w: &Permutation) -> Result<Polynomial> {
    kohnert_polynomial(&rothe_diagram(w))
}
