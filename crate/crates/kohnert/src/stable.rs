//! Stable limits as finite quasisymmetric expansions: the limit series of a
//! diagram in the monomial and fundamental bases, extended Schur functions,
//! exact basis conversion, symmetry detection with Schur expansion, and a
//! skew Schur oracle built from standard fillings.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::composition::{
    compositions_of, descending_lex, dominance_lt, Partition, StrongComposition,
};
use crate::diagram::{is_split, skew_diagram, Diagram};
use crate::error::{Error, Result};
use crate::moves::{enumerate_fkd, enumerate_mkd};
use crate::tableaux::{descent_composition, enumerate_set};

/// The quasisymmetric basis a series is expressed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// `M` indexed by strong compositions: sums of bare monomials.
    Monomial,
    /// `F` indexed by strong compositions: sums over flag-compatible
    /// monomials; the positivity basis for limit series.
    Fundamental,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::Monomial => 'M',
            Basis::Fundamental => 'F',
        }
    }
}

/// A homogeneous quasisymmetric function of a fixed degree, stored exactly
/// as integer coefficients on strong compositions in a declared basis.
#[derive(Clone, PartialEq, Eq)]
pub struct QSymSeries {
    degree: u64,
    basis: Basis,
    terms: BTreeMap<StrongComposition, BigInt>,
}

impl QSymSeries {
    /// The zero series of the given basis and degree.
    pub fn new(basis: Basis, degree: u64) -> Self {
        QSymSeries {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The homogeneous degree every support composition sums to.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// The declared basis.
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// The nonzero coefficients.
    pub fn terms(&self) -> &BTreeMap<StrongComposition, BigInt> {
        &self.terms
    }

    /// The coefficient of the basis element indexed by `alpha`.
    pub fn coeff(&self, alpha: &StrongComposition) -> BigInt {
        self.terms.get(alpha).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c` to the coefficient of `alpha`; the composition must sum to
    /// the declared degree.
    pub fn add_term(&mut self, alpha: StrongComposition, c: BigInt) {
        assert_eq!(
            alpha.size(),
            self.degree,
            "term degree mismatch: |{alpha}| vs {}",
            self.degree
        );
        let entry = self.terms.entry(alpha).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let keys: Vec<StrongComposition> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in keys {
                self.terms.remove(&k);
            }
        }
    }

    /// Exact change of basis. Fundamental to monomial refines every index;
    /// the inverse carries the sign `(-1)^(l(fine) - l(coarse))`.
    pub fn convert(&self, target: Basis) -> QSymSeries {
        if self.basis == target {
            return self.clone();
        }
        let mut out = QSymSeries::new(target, self.degree);
        for (alpha, c) in &self.terms {
            for beta in alpha.refinements() {
                let sign = match target {
                    // F_alpha = sum of M over refinements of alpha.
                    Basis::Monomial => BigInt::one(),
                    // M_alpha = signed sum of F over refinements of alpha.
                    Basis::Fundamental => {
                        if (beta.len() - alpha.len()) % 2 == 0 {
                            BigInt::one()
                        } else {
                            -BigInt::one()
                        }
                    }
                };
                out.add_term(beta, c * sign);
            }
        }
        out
    }

    /// True when the monomial-basis coefficients are constant on
    /// rearrangement classes, i.e. the series is a symmetric function.
    pub fn is_symmetric(&self) -> bool {
        let m = self.convert(Basis::Monomial);
        let classes: BTreeSet<Partition> = m.terms.keys().map(StrongComposition::sorted).collect();
        for lambda in classes {
            let reference = m.coeff(&lambda.as_strong());
            for alpha in rearrangements(&lambda) {
                if m.coeff(&alpha) != reference {
                    return false;
                }
            }
        }
        true
    }
}

impl std::ops::Add for &QSymSeries {
    type Output = QSymSeries;

    fn add(self, rhs: &QSymSeries) -> QSymSeries {
        assert_eq!(self.basis, rhs.basis, "basis mismatch");
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut out = self.clone();
        for (alpha, c) in &rhs.terms {
            out.add_term(alpha.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &QSymSeries {
    type Output = QSymSeries;

    fn sub(self, rhs: &QSymSeries) -> QSymSeries {
        assert_eq!(self.basis, rhs.basis, "basis mismatch");
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut out = self.clone();
        for (alpha, c) in &rhs.terms {
            out.add_term(alpha.clone(), -c.clone());
        }
        out
    }
}

impl fmt::Display for QSymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut sorted: Vec<(&StrongComposition, &BigInt)> = self.terms.iter().collect();
        sorted.sort_by(|a, b| descending_lex(a.0.parts(), b.0.parts()));
        for (i, (alpha, c)) in sorted.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if alpha.is_empty() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}[", self.basis.letter())?;
            for (j, p) in alpha.parts().iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QSymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All distinct rearrangements of a partition's parts, as strong
/// compositions.
fn rearrangements(lambda: &Partition) -> Vec<StrongComposition> {
    let mut parts = lambda.parts().to_vec();
    parts.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(StrongComposition::new(parts.clone()).expect("positive parts"));
        if !next_permutation(&mut parts) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The limit series of a diagram in the fundamental basis: one `F` term per
/// non-split member of the lift-maximal subset of the closure of the diagram
/// shifted up by its own cell count.
pub fn kohnert_qsym(d: &Diagram) -> Result<QSymSeries> {
    kohnert_qsym_lift(d, d.size() as u32)
}

/// The fundamental expansion obtained by shifting the diagram up by an
/// explicit amount `m` before taking the lift-maximal non-split members.
///
/// The expansion agrees with the limit series once `m` reaches the cell
/// count of the diagram, and in practice often stabilizes much earlier;
/// exposing `m` lets callers trade the guaranteed bound for a smaller
/// enumeration when the closure of the fully shifted diagram is too large.
pub fn kohnert_qsym_lift(d: &Diagram, m: u32) -> Result<QSymSeries> {
    let degree = d.size() as u64;
    let shifted = d.shift_up(m);
    let mut out = QSymSeries::new(Basis::Fundamental, degree);
    for t in enumerate_fkd(&shifted)? {
        if !is_split(&t) {
            out.add_term(t.weight().flatten(), BigInt::one());
        }
    }
    Ok(out)
}

/// The limit series in the monomial basis: one `M` term per member of the
/// empty-row-maximal subset of the shifted closure.
pub fn kohnert_qsym_monomial(d: &Diagram) -> Result<QSymSeries> {
    let degree = d.size() as u64;
    let shifted = d.shift_up(d.size() as u32);
    let mut out = QSymSeries::new(Basis::Monomial, degree);
    for t in enumerate_mkd(&shifted)? {
        out.add_term(t.weight().flatten(), BigInt::one());
    }
    Ok(out)
}

/// The extended Schur function of `alpha`: the descent generating function
/// of the standard fillings of the right-justified diagram of `alpha`.
pub fn extended_schur(alpha: &StrongComposition) -> Result<QSymSeries> {
    let mut out = QSymSeries::new(Basis::Fundamental, alpha.size());
    for t in enumerate_set(alpha) {
        out.add_term(descent_composition(&t)?, BigInt::one());
    }
    Ok(out)
}

/// Number of semistandard fillings of shape `lambda` with `content_i` copies
/// of `i`: rows weakly increase, columns strictly increase. Cached globally.
fn kostka(lambda: &Partition, content: &Partition) -> u64 {
    if lambda.size() != content.size() {
        return 0;
    }
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lambda.clone(), content.clone());
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let rows = lambda.len();
    let values = content.len() as u32;
    let mut remaining: Vec<u32> = content.parts().to_vec();
    let mut grid: Vec<Vec<u32>> = (1..=rows)
        .map(|r| vec![0; lambda.part(r) as usize])
        .collect();
    fn rec(
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
        r: usize,
        c: usize,
        values: u32,
    ) -> u64 {
        if r == grid.len() {
            return 1;
        }
        if c == grid[r].len() {
            return rec(grid, remaining, r + 1, 0, values);
        }
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let mut total = 0;
        for e in lo..=values {
            if remaining[e as usize - 1] == 0 {
                continue;
            }
            remaining[e as usize - 1] -= 1;
            grid[r][c] = e;
            total += rec(grid, remaining, r, c + 1, values);
            remaining[e as usize - 1] += 1;
        }
        grid[r][c] = 0;
        total
    }
    let count = rec(&mut grid, &mut remaining, 0, 0, values);
    cache.lock().unwrap().insert(key, count);
    count
}

/// Expands a symmetric series into Schur functions by greedy elimination on
/// the dominance-maximal partition in the monomial-basis support. Fails with
/// `NotSymmetric` when the input is not a symmetric function.
pub fn schur_expand(q: &QSymSeries) -> Result<BTreeMap<Partition, BigInt>> {
    if !q.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut residual = q.convert(Basis::Monomial);
    let indices = compositions_of(residual.degree as u32);
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    while !residual.is_zero() {
        let candidates: Vec<Partition> = residual
            .terms
            .keys()
            .filter(|a| a.is_weakly_decreasing())
            .map(StrongComposition::sorted)
            .collect();
        let lambda = candidates
            .iter()
            .filter(|l| {
                !candidates
                    .iter()
                    .any(|o| dominance_lt(&l.as_weak(), &o.as_weak()).unwrap_or(false))
            })
            .max()
            .cloned()
            .ok_or(Error::NotSymmetric)?;
        let c = residual.coeff(&lambda.as_strong());
        for alpha in &indices {
            let k = kostka(&lambda, &alpha.sorted());
            if k > 0 {
                residual.add_term(alpha.clone(), -&c * BigInt::from(k));
            }
        }
        *out.entry(lambda).or_insert_with(BigInt::zero) += c;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// The skew Schur function `s_{lambda/mu}` in the fundamental basis, via
/// standard fillings of the skew shape: entries `1..n` placed so rows
/// increase rightward and columns increase downward; entry `i` is a descent
/// when `i+1` sits in a strictly lower row. Fails with `NotContained` when
/// `mu` does not fit inside `lambda`.
pub fn skew_schur(lambda: &Partition, mu: &Partition) -> Result<QSymSeries> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained);
    }
    let n = (lambda.size() - mu.size()) as usize;
    let rows = lambda.len();
    let mut out = QSymSeries::new(Basis::Fundamental, n as u64);
    // fills[r] counts placed cells of row r+1; rows fill left to right.
    let mut fills = vec![0u32; rows];
    let mut row_of: Vec<u32> = Vec::with_capacity(n);
    fn rec(
        lambda: &Partition,
        mu: &Partition,
        n: usize,
        fills: &mut Vec<u32>,
        row_of: &mut Vec<u32>,
        out: &mut QSymSeries,
    ) {
        if row_of.len() == n {
            let mut parts = Vec::new();
            let mut run = 0u32;
            for i in 0..n {
                run += 1;
                if i + 1 == n || row_of[i + 1] > row_of[i] {
                    parts.push(run);
                    run = 0;
                }
            }
            let alpha = if parts.is_empty() {
                StrongComposition::empty()
            } else {
                StrongComposition::new(parts).expect("positive run lengths")
            };
            out.add_term(alpha, BigInt::one());
            return;
        }
        for r in 1..=lambda.len() {
            let c = mu.part(r) + fills[r - 1] + 1;
            if c > lambda.part(r) {
                continue;
            }
            // The cell above must be outside the shape or already placed.
            if r > 1 && c > mu.part(r - 1) + fills[r - 2] {
                continue;
            }
            fills[r - 1] += 1;
            row_of.push(r as u32);
            rec(lambda, mu, n, fills, row_of, out);
            row_of.pop();
            fills[r - 1] -= 1;
        }
    }
    rec(lambda, mu, n, &mut fills, &mut row_of, &mut out);
    Ok(out)
}

/// The skew-shape pair realized by the stable limit of the shifted diagram
/// of `a`: reading its nonzero rows from top to bottom, row `i` spans
/// columns `mu_i + 1 ..= lambda_i`.
pub fn skew_stable_data(a: &crate::composition::WeakComposition) -> (Partition, Partition) {
    let d = skew_diagram(a);
    let mut lambda = Vec::new();
    let mut mu = Vec::new();
    for r in (1..=d.height()).rev() {
        let cols: Vec<u32> = d.row(r).map(|c| c.col).collect();
        if cols.is_empty() {
            continue;
        }
        lambda.push(*cols.iter().max().unwrap());
        mu.push(*cols.iter().min().unwrap() - 1);
    }
    let lambda = Partition::new(lambda).expect("row spans weakly shrink upward");
    let mu = Partition::new(mu).expect("row starts weakly shrink upward");
    (lambda, mu)
}
