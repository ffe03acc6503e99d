//! The Kohnert move engine: single moves, breadth-first enumeration of the
//! full closure KD(D), its monomial and quasi-Yamanouchi subsets, and
//! de-standardization by maximal lifting.
//!
//! Enumeration packs diagrams into a fixed 16x16 bit grid (one `u16` of rows
//! per column) so that closure members are `Copy`, hash fast, and dedup
//! cheaply; inputs beyond that grid are rejected rather than silently
//! truncated.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::diagram::{is_fundamental, Cell, Diagram};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Hard geometric limit of the packed enumeration grid.
pub const MAX_GRID: u32 = 16;

/// Default cap on the number of distinct diagrams enumerated before giving
/// up with a resource error.
pub const DEFAULT_DIAGRAM_CAP: usize = 10_000_000;

/// A diagram packed into a 16x16 bit grid; `cols[c]` holds the occupied rows
/// of column `c+1` as a bitmask with bit `r-1` for row `r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Packed {
    cols: [u16; MAX_GRID as usize],
}

impl Packed {
    fn from_diagram(d: &Diagram) -> Result<Self> {
        if d.height() > MAX_GRID || d.width() > MAX_GRID {
            return Err(Error::DiagramTooLarge {
                rows: MAX_GRID,
                cols: MAX_GRID,
            });
        }
        let mut cols = [0u16; MAX_GRID as usize];
        for cell in d.cells() {
            cols[cell.col as usize - 1] |= 1 << (cell.row - 1);
        }
        Ok(Packed { cols })
    }

    fn to_diagram(self) -> Diagram {
        let mut cells = Vec::new();
        for (c, &mask) in self.cols.iter().enumerate() {
            let mut m = mask;
            while m != 0 {
                let r = m.trailing_zeros();
                cells.push(Cell::new(r + 1, c as u32 + 1));
                m &= m - 1;
            }
        }
        Diagram::from_cells(cells)
    }

    /// Bitmask of the occupied columns of row `r` (bit `c-1` for column `c`).
    fn row_mask(&self, r: u32) -> u32 {
        let mut mask = 0u32;
        for (c, &col) in self.cols.iter().enumerate() {
            if col >> (r - 1) & 1 == 1 {
                mask |= 1 << c;
            }
        }
        mask
    }

    /// Applies the Kohnert move on row `r`: the rightmost cell of the row
    /// drops to the highest empty position below it in its column.
    fn kohnert_move(&self, r: u32) -> Option<Packed> {
        let row = self.row_mask(r);
        if row == 0 {
            return None;
        }
        let c = 31 - row.leading_zeros(); // 0-based rightmost occupied column
        let col = self.cols[c as usize];
        // Positions strictly below r in this column, inverted: set bits are
        // the empty rows. The landing row is the highest of them.
        let below = (!col) & ((1u32 << (r - 1)) - 1) as u16 as u16;
        if below == 0 {
            return None;
        }
        let s = 15 - (below as u16).leading_zeros(); // 0-based landing row
        let mut out = *self;
        out.cols[c as usize] &= !(1u16 << (r - 1));
        out.cols[c as usize] |= 1u16 << s;
        Some(out)
    }

    /// Lifts every cell of row `r` to row `r+1`; `None` on collision or when
    /// the lift leaves the grid.
    fn up(&self, r: u32) -> Option<Packed> {
        if r >= MAX_GRID {
            return None;
        }
        let bit = 1u16 << (r - 1);
        let above = bit << 1;
        let mut out = *self;
        for col in out.cols.iter_mut() {
            if *col & bit != 0 {
                if *col & above != 0 {
                    return None;
                }
                *col = (*col & !bit) | above;
            }
        }
        Some(out)
    }

    /// True when every cell of row `r+1` lies strictly left of every cell of
    /// row `r` (vacuously true when row `r+1` is empty).
    fn row_above_strictly_left(&self, r: u32) -> bool {
        let above = self.row_mask(r + 1);
        let here = self.row_mask(r);
        if above == 0 {
            return true;
        }
        if here == 0 {
            return false;
        }
        let max_above = 31 - above.leading_zeros();
        let min_here = here.trailing_zeros();
        max_above < min_here
    }
}

/// The deduplicated closure of a diagram under Kohnert moves.
pub struct KohnertSet {
    root: Diagram,
    height: u32,
    members: Vec<Diagram>,
    seen: HashSet<Packed>,
}

impl KohnertSet {
    /// The diagram the closure was generated from.
    pub fn root(&self) -> &Diagram {
        &self.root
    }

    /// All members in canonical sorted order; the root is always included.
    pub fn members(&self) -> &[Diagram] {
        &self.members
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// A Kohnert set is never empty: it contains at least its root.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Membership test against the enumerated closure.
    pub fn contains(&self, d: &Diagram) -> bool {
        match Packed::from_diagram(d) {
            Ok(p) => self.seen.contains(&p),
            Err(_) => false,
        }
    }

    fn contains_packed(&self, p: &Packed) -> bool {
        self.seen.contains(p)
    }
}

/// Applies the Kohnert move to row `r` of `d`: the rightmost cell of the row
/// drops to the highest empty position below it in its column, jumping any
/// occupied positions. `None` when the row is empty or the column is full
/// below.
pub fn kohnert_move(d: &Diagram, r: u32) -> Option<Diagram> {
    let cell = d.row(r).max_by_key(|c| c.col)?;
    let landing = (1..r).rev().find(|&s| !d.contains(s, cell.col))?;
    Some(Diagram::from_cells(d.cells().iter().map(|&c| {
        if c == cell {
            Cell::new(landing, c.col)
        } else {
            c
        }
    })))
}

/// The enumeration cap: the `KOHNERT_MAX_DIAGRAMS` environment variable
/// when set to a positive integer, otherwise [`DEFAULT_DIAGRAM_CAP`].
pub fn diagram_cap() -> usize {
    std::env::var("KOHNERT_MAX_DIAGRAMS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_DIAGRAM_CAP)
}

/// Enumerates the closure of `d` under Kohnert moves with the resource cap
/// from [`diagram_cap`].
pub fn enumerate_kd(d: &Diagram) -> Result<KohnertSet> {
    enumerate_kd_capped(d, diagram_cap())
}

/// Enumerates the closure of `d` under Kohnert moves, failing with a
/// resource error if more than `cap` distinct diagrams appear.
pub fn enumerate_kd_capped(d: &Diagram, cap: usize) -> Result<KohnertSet> {
    let root = Packed::from_diagram(d)?;
    let height = d.height();
    let mut seen: HashSet<Packed> = HashSet::new();
    seen.insert(root);
    let mut frontier = vec![root];
    while let Some(current) = frontier.pop() {
        for r in 2..=height {
            if let Some(next) = current.kohnert_move(r) {
                if seen.insert(next) {
                    if seen.len() > cap {
                        return Err(Error::ResourceLimit(cap));
                    }
                    frontier.push(next);
                }
            }
        }
    }
    let mut members: Vec<Diagram> = seen.iter().map(|p| p.to_diagram()).collect();
    members.sort();
    Ok(KohnertSet {
        root: d.clone(),
        height,
        members,
        seen,
    })
}

/// The weight generating polynomial of the closure of `d`.
pub fn kohnert_polynomial(d: &Diagram) -> Result<Polynomial> {
    let set = enumerate_kd(d)?;
    let mut out = Polynomial::zero();
    for t in set.members() {
        out = &out + &Polynomial::monomial(t.weight(), BigInt::one());
    }
    Ok(out)
}

/// Members of the closure maximal under empty-row lifts: `T` such that for
/// every nonempty row `r` of `T` with row `r+1` empty, lifting row `r` leaves
/// the closure.
pub fn mkd(set: &KohnertSet) -> Vec<Diagram> {
    set.members()
        .iter()
        .filter(|t| {
            let p = Packed::from_diagram(t).expect("closure member fits the grid");
            (1..set.height).all(|r| {
                if p.row_mask(r) == 0 || p.row_mask(r + 1) != 0 {
                    return true;
                }
                match p.up(r) {
                    Some(lifted) => !set.contains_packed(&lifted),
                    None => true,
                }
            })
        })
        .cloned()
        .collect()
}

/// Convenience wrapper: enumerate the closure of `d`, then filter to the
/// empty-row-lift maximal members.
pub fn enumerate_mkd(d: &Diagram) -> Result<Vec<Diagram>> {
    Ok(mkd(&enumerate_kd(d)?))
}

/// Members of the closure maximal under strictly-left lifts
/// (quasi-Yamanouchi members): `T` such that for every nonempty row `r`
/// whose row `r+1` lies entirely strictly left of row `r`, lifting row `r`
/// leaves the closure.
pub fn fkd(set: &KohnertSet) -> Vec<Diagram> {
    set.members()
        .iter()
        .filter(|t| {
            let p = Packed::from_diagram(t).expect("closure member fits the grid");
            (1..set.height).all(|r| {
                if p.row_mask(r) == 0 || !p.row_above_strictly_left(r) {
                    return true;
                }
                match p.up(r) {
                    Some(lifted) => !set.contains_packed(&lifted),
                    None => true,
                }
            })
        })
        .cloned()
        .collect()
}

/// Convenience wrapper: enumerate the closure of `d`, then filter to the
/// quasi-Yamanouchi members.
pub fn enumerate_fkd(d: &Diagram) -> Result<Vec<Diagram>> {
    Ok(fkd(&enumerate_kd(d)?))
}

/// Lifts `u` inside the closure of `root` until no strictly-left lift stays
/// in the closure, taking the lowest eligible row first at every step.
///
/// The result is independent of the lift order only when `root` is
/// fundamental; for other roots the call fails unless `force` is set, in
/// which case the deterministic lowest-row policy is applied anyway.
pub fn destandardize(u: &Diagram, root: &Diagram, force: bool) -> Result<Diagram> {
    let set = enumerate_kd(root)?;
    if !set.contains(u) {
        return Err(Error::NotMember);
    }
    if !is_fundamental(root) && !force {
        return Err(Error::NotFundamental);
    }
    let mut current = Packed::from_diagram(u).expect("member fits the grid");
    'outer: loop {
        for r in 1..set.height {
            if current.row_mask(r) == 0 || !current.row_above_strictly_left(r) {
                continue;
            }
            if let Some(lifted) = current.up(r) {
                if set.contains_packed(&lifted) {
                    current = lifted;
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(current.to_diagram())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{dominance_le, WeakComposition};
    use crate::diagram::{is_split, key_diagram, lock_diagram, rothe_diagram};
    use crate::perm::parse_permutation;

    fn wc(v: &[u32]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    fn diag(cells: &[(u32, u32)]) -> Diagram {
        Diagram::from_cells(cells.iter().map(|&(r, c)| Cell::new(r, c)))
    }

    #[test]
    fn kohnert_move_examples() {
        let d = key_diagram(&wc(&[0, 2, 1, 2]));
        let moved = kohnert_move(&d, 4).unwrap();
        assert_eq!(
            moved,
            diag(&[(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)])
        );
        assert_eq!(kohnert_move(&diag(&[(2, 1), (1, 1)]), 2), None);
        assert_eq!(
            kohnert_move(&diag(&[(3, 1), (1, 1)]), 3),
            Some(diag(&[(2, 1), (1, 1)]))
        );
        // Empty row: no move.
        assert_eq!(kohnert_move(&d, 1), None);
        // Jump: cell falls past an occupied position to the first gap.
        assert_eq!(
            kohnert_move(&diag(&[(3, 1), (2, 1), (1, 2)]), 3),
            Some(diag(&[(2, 1), (1, 1), (1, 2)]))
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_kd(&key_diagram(&wc(&[0, 2, 1, 2]))).unwrap().len(), 16);
        let w = parse_permutation("143625").unwrap();
        assert_eq!(enumerate_kd(&rothe_diagram(&w)).unwrap().len(), 26);
        assert_eq!(enumerate_kd(&lock_diagram(&wc(&[0, 2, 1, 2]))).unwrap().len(), 9);
        assert_eq!(enumerate_kd(&Diagram::empty()).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_respects_cap() {
        let d = key_diagram(&wc(&[0, 2, 1, 2]));
        assert!(matches!(
            enumerate_kd_capped(&d, 5),
            Err(Error::ResourceLimit(5))
        ));
        assert!(enumerate_kd_capped(&d, 16).is_ok());
    }

    #[test]
    fn closure_preserves_columns_and_dominates_root() {
        let roots = [
            key_diagram(&wc(&[0, 2, 1, 2])),
            lock_diagram(&wc(&[0, 2, 1, 2])),
            diag(&[(3, 2), (2, 3)]),
        ];
        for d in &roots {
            let set = enumerate_kd(d).unwrap();
            assert!(set.contains(d));
            for t in set.members() {
                assert_eq!(t.column_counts(), d.column_counts());
                assert!(dominance_le(&d.weight(), &t.weight()).unwrap());
            }
        }
    }

    #[test]
    fn kohnert_polynomial_examples() {
        assert_eq!(
            kohnert_polynomial(&Diagram::empty()).unwrap(),
            Polynomial::one()
        );
        let f = kohnert_polynomial(&diag(&[(2, 1)])).unwrap();
        assert_eq!(f, &Polynomial::var(1) + &Polynomial::var(2));
        // The left-justified diagram reproduces the frozen 14-term character.
        assert_eq!(
            kohnert_polynomial(&key_diagram(&wc(&[0, 2, 1, 2]))).unwrap(),
            crate::poly::tests::demazure_0212()
        );
        // The inversion diagram reproduces the frozen 20-term polynomial.
        let w = parse_permutation("143625").unwrap();
        assert_eq!(
            kohnert_polynomial(&rothe_diagram(&w)).unwrap(),
            crate::poly::tests::schubert_143625()
        );
    }

    #[test]
    fn lock_polynomial_nine_terms() {
        let f = kohnert_polynomial(&lock_diagram(&wc(&[0, 2, 1, 2]))).unwrap();
        let expected: Vec<WeakComposition> = [
            &[2, 1, 2][..],
            &[2, 1, 1, 1],
            &[2, 1, 0, 2],
            &[2, 0, 1, 2],
            &[1, 2, 2],
            &[1, 2, 1, 1],
            &[1, 2, 0, 2],
            &[1, 1, 1, 2],
            &[0, 2, 1, 2],
        ]
        .iter()
        .map(|v| wc(v))
        .collect();
        assert_eq!(f.num_terms(), 9);
        for e in &expected {
            assert_eq!(f.coeff(e), BigInt::one(), "missing {e}");
        }
    }

    #[test]
    fn mkd_examples() {
        let members = enumerate_mkd(&lock_diagram(&wc(&[0, 2, 1, 2]))).unwrap();
        let mut weights: Vec<WeakComposition> = members.iter().map(|d| d.weight()).collect();
        weights.sort();
        let mut expected = vec![
            wc(&[0, 2, 1, 2]),
            wc(&[1, 1, 1, 2]),
            wc(&[2, 1, 1, 1]),
            wc(&[1, 2, 0, 2]),
            wc(&[1, 2, 1, 1]),
        ];
        expected.sort();
        assert_eq!(weights, expected);
        assert_eq!(enumerate_mkd(&Diagram::empty()).unwrap(), vec![Diagram::empty()]);
        assert_eq!(
            enumerate_mkd(&diag(&[(1, 1)])).unwrap(),
            vec![diag(&[(1, 1)])]
        );
    }

    #[test]
    fn fkd_examples() {
        let members = enumerate_fkd(&lock_diagram(&wc(&[0, 2, 1, 2]))).unwrap();
        let mut weights: Vec<WeakComposition> = members.iter().map(|d| d.weight()).collect();
        weights.sort();
        assert_eq!(weights, vec![wc(&[0, 2, 1, 2]), wc(&[1, 2, 0, 2])]);
        assert_eq!(
            enumerate_fkd(&key_diagram(&wc(&[0, 2, 1, 2]))).unwrap().len(),
            4
        );
        let w = parse_permutation("143625").unwrap();
        assert_eq!(enumerate_fkd(&rothe_diagram(&w)).unwrap().len(), 7);
        // Quasi-Yamanouchi members are maximal among the monomial-maximal ones.
        let set = enumerate_kd(&lock_diagram(&wc(&[0, 2, 1, 2]))).unwrap();
        let m = mkd(&set);
        for t in fkd(&set) {
            assert!(m.contains(&t));
        }
    }

    #[test]
    fn destandardize_examples() {
        let root = lock_diagram(&wc(&[0, 2, 1, 2]));
        let set = enumerate_kd(&root).unwrap();
        let quasi = fkd(&set);
        // Fixed points.
        for t in &quasi {
            assert_eq!(&destandardize(t, &root, false).unwrap(), t);
        }
        // Every member maps into the quasi-Yamanouchi set; fiber sizes sum to
        // the closure size.
        let mut fiber_total = 0;
        for t in set.members() {
            let image = destandardize(t, &root, false).unwrap();
            assert!(quasi.contains(&image));
            fiber_total += 1;
        }
        assert_eq!(fiber_total, set.len());
        // Wrong root is rejected.
        assert_eq!(
            destandardize(&diag(&[(1, 1)]), &root, false),
            Err(Error::NotMember)
        );
        // Non-fundamental root is rejected without force.
        let bad_root = diag(&[(3, 2), (2, 3)]);
        let member = kohnert_move(&bad_root, 3).unwrap();
        assert_eq!(
            destandardize(&member, &bad_root, false),
            Err(Error::NotFundamental)
        );
        assert!(destandardize(&member, &bad_root, true).is_ok());
    }

    /// Exhaustively explores all maximal lift paths of `u` inside the
    /// closure, returning the distinct endpoints.
    fn all_lift_endpoints(u: &Diagram, set: &KohnertSet) -> Vec<Diagram> {
        fn rec(p: Packed, set: &KohnertSet, out: &mut Vec<Diagram>) {
            let mut lifted_any = false;
            for r in 1..set.height {
                if p.row_mask(r) == 0 || !p.row_above_strictly_left(r) {
                    continue;
                }
                if let Some(next) = p.up(r) {
                    if set.contains_packed(&next) {
                        lifted_any = true;
                        rec(next, set, out);
                    }
                }
            }
            if !lifted_any {
                let d = p.to_diagram();
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
        let mut out = Vec::new();
        rec(Packed::from_diagram(u).unwrap(), set, &mut out);
        out
    }

    #[test]
    fn non_fundamental_root_has_order_dependent_lifts() {
        // The two-cell root with a strict northwest/southeast split is not
        // fundamental, and some member admits two maximal lift paths with
        // different quasi-Yamanouchi endpoints.
        let root = diag(&[(3, 2), (2, 3)]);
        assert!(!is_fundamental(&root));
        let set = enumerate_kd(&root).unwrap();
        let divergent = set
            .members()
            .iter()
            .find(|t| all_lift_endpoints(t, &set).len() > 1);
        assert!(divergent.is_some(), "expected an order-dependent member");
    }

    #[test]
    fn split_detection_on_closure_members() {
        // Neither quasi-Yamanouchi member of the right-justified (0,2,1,2)
        // diagram is split.
        for t in enumerate_fkd(&lock_diagram(&wc(&[0, 2, 1, 2]))).unwrap() {
            assert!(!is_split(&t));
        }
    }

    #[test]
    fn too_large_diagram_is_rejected() {
        let d = diag(&[(17, 1)]);
        assert!(matches!(
            enumerate_kd(&d),
            Err(Error::DiagramTooLarge { .. })
        ));
    }
}
