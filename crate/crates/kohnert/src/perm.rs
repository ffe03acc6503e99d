//! Permutations in one-line notation, Lehmer codes, and the vexillary test.

use std::fmt;

use crate::composition::WeakComposition;
use crate::error::{Error, Result};

/// A permutation of `{1..n}` stored in one-line notation. Trailing fixed
/// points are kept as stored, so `21` and `213` are different values of
/// different sizes (but have the same Lehmer code).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Builds a permutation from its one-line word; must be a bijection on
    /// `{1..n}`.
    pub fn from_one_line(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation(word))
    }

    /// The identity permutation of `{1..n}`.
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// The longest permutation `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    /// The one-line word.
    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    /// The size `n` of the underlying set.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the permutation of the empty set.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        let mut count = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Multiplies by the adjacent transposition `s_i` on the right, swapping
    /// positions `i` and `i+1` (1-based, `i+1 <= n`).
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// True when position `i` is a descent: `w_i > w_{i+1}`.
    pub fn has_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// The Lehmer code: part `i` counts positions `j > i` with `w_j < w_i`.
    /// Trailing zeros are trimmed.
    pub fn lehmer_code(&self) -> WeakComposition {
        let n = self.0.len();
        let mut code = vec![0u32; n];
        for i in 0..n {
            for j in (i + 1)..n {
                if self.0[j] < self.0[i] {
                    code[i] += 1;
                }
            }
        }
        WeakComposition::new(code)
    }

    /// Recovers the unique permutation with the given Lehmer code, using the
    /// smallest `n` that accommodates it (no trailing fixed points beyond the
    /// code's reach unless forced).
    pub fn from_lehmer_code(code: &WeakComposition) -> Self {
        let len = code.len();
        let max = code.parts().iter().copied().max().unwrap_or(0) as usize;
        let n = len + max;
        let mut remaining: Vec<u32> = (1..=n as u32).collect();
        let mut word = Vec::with_capacity(n);
        for i in 1..=n {
            let idx = code.part(i) as usize;
            word.push(remaining.remove(idx));
        }
        // Drop trailing fixed points not needed to realize the code.
        while word.len() > len && word.last() == Some(&(word.len() as u32)) {
            word.pop();
        }
        Permutation(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v <= 9) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", words.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses either a digit string (`143625`) or a comma-separated word
/// (`2,1,6,5,3,9,4,7,8`).
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let text = text.trim();
    let word: Vec<u32> = if text.contains(',') {
        text.split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {p:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad permutation digit {c:?}")))
            })
            .collect::<Result<_>>()?
    };
    Permutation::from_one_line(word)
}

/// All permutations of `{1..n}` in lexicographic order of one-line words.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(remaining: &mut Vec<u32>, prefix: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        if remaining.is_empty() {
            out.push(Permutation(prefix.clone()));
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            prefix.push(v);
            rec(remaining, prefix, out);
            prefix.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n as u32).collect(), &mut Vec::new(), &mut out);
    out
}

/// True when the row supports of every two columns of the permutation's
/// inversion diagram are nested (one contained in the other).
pub fn is_vexillary(w: &Permutation) -> bool {
    let d = crate::diagram::rothe_diagram(w);
    let cols: Vec<u32> = {
        let mut v: Vec<u32> = d.cells().iter().map(|c| c.col).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    for (i, &c1) in cols.iter().enumerate() {
        for &c2 in &cols[i + 1..] {
            let r1 = d.column_rows(c1);
            let r2 = d.column_rows(c2);
            let nested = r1.iter().all(|r| r2.contains(r)) || r2.iter().all(|r| r1.contains(r));
            if !nested {
                return false;
            }
        }
    }
    true
}
