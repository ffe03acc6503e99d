//! Weak and strong compositions, partitions, and the orders relating them.
//!
//! A *weak composition* is a finite sequence of non-negative integers, kept in
//! canonical form with trailing zeros removed, so `(0,2,1,2)` and
//! `(0,2,1,2,0,0)` are the same value. A *strong composition* has strictly
//! positive parts, and a *partition* is a strong composition whose parts
//! weakly decrease.

use std::fmt;

use crate::error::{Error, Result};

/// A weak composition: finitely many non-negative parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    /// Builds a weak composition, trimming trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut v = parts.into();
        while v.last() == Some(&0) {
            v.pop();
        }
        WeakComposition(v)
    }

    /// The empty composition `()`.
    pub fn empty() -> Self {
        WeakComposition(Vec::new())
    }

    /// The canonical parts, with no trailing zeros.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts up to the last nonzero one.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty composition.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Part at 1-based index `i`; zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// The parts padded with zeros to length `n` (at least the stored length).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    /// Removes the zero parts, keeping the order of the positive ones.
    pub fn flatten(&self) -> StrongComposition {
        StrongComposition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// The weakly decreasing rearrangement of the parts.
    pub fn sorted_decreasing(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        WeakComposition::new(v)
    }

    /// True when the stored parts weakly decrease (so no zero precedes a
    /// positive part).
    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// True when the stored parts weakly increase.
    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Prefixes `m` zero parts, shifting every part up by `m` positions.
    pub fn prepend_zeros(&self, m: usize) -> Self {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = vec![0; m];
        v.extend_from_slice(&self.0);
        WeakComposition(v)
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(v: Vec<u32>) -> Self {
        WeakComposition::new(v)
    }
}

impl From<&[u32]> for WeakComposition {
    fn from(v: &[u32]) -> Self {
        WeakComposition::new(v.to_vec())
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dominance comparison: `a <= b` when every prefix sum of `b` is at least the
/// matching prefix sum of `a`. Only defined when the total sizes agree.
pub fn dominance_le(a: &WeakComposition, b: &WeakComposition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::UnequalDegree(a.size(), b.size()));
    }
    let n = a.len().max(b.len());
    let mut pa: u64 = 0;
    let mut pb: u64 = 0;
    for i in 1..=n {
        pa += a.part(i) as u64;
        pb += b.part(i) as u64;
        if pb < pa {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict dominance: `a < b` in the dominance order.
pub fn dominance_lt(a: &WeakComposition, b: &WeakComposition) -> Result<bool> {
    Ok(a != b && dominance_le(a, b)?)
}

/// A composition with strictly positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrongComposition(Vec<u32>);

impl StrongComposition {
    /// Builds a strong composition; every part must be positive.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let v = parts.into();
        if v.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        Ok(StrongComposition(v))
    }

    /// The empty composition `()`.
    pub fn empty() -> Self {
        StrongComposition(Vec::new())
    }

    /// The parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty composition.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// The parts in reverse order.
    pub fn reversed(&self) -> Self {
        StrongComposition(self.0.iter().rev().copied().collect())
    }

    /// The same parts viewed as a weak composition.
    pub fn as_weak(&self) -> WeakComposition {
        WeakComposition::new(self.0.clone())
    }

    /// The weakly decreasing rearrangement as a partition.
    pub fn sorted(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// True when the parts weakly decrease.
    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// All compositions refining `self`: each part is split, in order, into a
    /// sequence of positive parts.
    pub fn refinements(&self) -> Vec<StrongComposition> {
        let mut out = vec![Vec::new()];
        for &part in &self.0 {
            let splits = compositions_of(part);
            let mut next = Vec::with_capacity(out.len() * splits.len());
            for prefix in &out {
                for split in &splits {
                    let mut v = prefix.clone();
                    v.extend_from_slice(split.parts());
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(StrongComposition).collect()
    }

    /// All compositions coarsening `self`: adjacent runs of parts are summed.
    pub fn coarsenings(&self) -> Vec<StrongComposition> {
        let n = self.0.len();
        if n == 0 {
            return vec![StrongComposition::empty()];
        }
        // Choose a subset of the n-1 internal boundaries to keep.
        let mut out = Vec::with_capacity(1 << (n - 1));
        for mask in 0u64..(1 << (n - 1)) {
            let mut v = Vec::new();
            let mut acc = self.0[0];
            for i in 1..n {
                if mask >> (i - 1) & 1 == 1 {
                    v.push(acc);
                    acc = self.0[i];
                } else {
                    acc += self.0[i];
                }
            }
            v.push(acc);
            out.push(StrongComposition(v));
        }
        out
    }
}

impl fmt::Display for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// True when `fine` refines `coarse`: consecutive blocks of `fine` sum to the
/// parts of `coarse`, in order. Every composition refines itself.
pub fn refines(fine: &StrongComposition, coarse: &StrongComposition) -> bool {
    let mut it = fine.parts().iter();
    for &target in coarse.parts() {
        let mut acc: u64 = 0;
        while acc < target as u64 {
            match it.next() {
                Some(&p) => acc += p as u64,
                None => return false,
            }
        }
        if acc != target as u64 {
            return false;
        }
    }
    it.next().is_none()
}

/// All strong compositions of `n`, in lexicographic order.
pub fn compositions_of(n: u32) -> Vec<StrongComposition> {
    fn rec(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<StrongComposition>) {
        if remaining == 0 {
            out.push(StrongComposition(prefix.clone()));
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            rec(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// A partition: weakly decreasing strictly positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition; parts must weakly decrease and be positive.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut v = parts.into();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        if !v.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotPartition);
        }
        Ok(Partition(v))
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Part at 1-based index `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// True when `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// The same parts as a strong composition.
    pub fn as_strong(&self) -> StrongComposition {
        StrongComposition(self.0.clone())
    }

    /// The same parts as a weak composition.
    pub fn as_weak(&self) -> WeakComposition {
        WeakComposition::new(self.0.clone())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Compares two part vectors lexicographically, larger first. Used for the
/// display order of polynomial and series terms.
pub fn descending_lex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    b.cmp(a).then_with(|| a.len().cmp(&b.len()))
}
