//! Acceptance suite: twelve end-to-end criteria covering enumeration counts,
//! cross-definitions, frozen expansions, stable limits, and exhaustive
//! property sweeps. Each test prints one `criterion N: pass` line (visible
//! with `--nocapture`); a failed assertion marks the criterion failed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use kohnert::{
    compositions_of, demazure_character, enumerate_fkd, enumerate_kd, enumerate_mkd,
    expand_in_kohnert_basis, extended_schur, fundamental_slide, is_demazure, is_fundamental,
    is_split, key_diagram, kohnert_polynomial, kohnert_qsym, kohnert_qsym_lift, lock_diagram,
    lock_polynomial, monomial_slide, rothe_diagram, schubert, schur_expand, skew_diagram,
    skew_polynomial, skew_schur, skew_stable_data, Basis, Cell, Diagram, Partition, Permutation,
    Polynomial, QSymSeries, StrongComposition, WeakComposition,
};

fn wc(parts: &[u32]) -> WeakComposition {
    WeakComposition::new(parts.to_vec())
}

fn sc(parts: &[u32]) -> StrongComposition {
    StrongComposition::new(parts.to_vec()).unwrap()
}

fn diagram(cells: &[(u32, u32)]) -> Diagram {
    Diagram::from_cells(cells.iter().map(|&(r, c)| Cell::new(r, c)))
}

fn poly(terms: &[(&[u32], i64)]) -> Polynomial {
    let mut out = Polynomial::zero();
    for &(exps, c) in terms {
        out = &out + &Polynomial::monomial(wc(exps), BigInt::from(c));
    }
    out
}

fn perm(word: &str) -> Permutation {
    kohnert::parse_permutation(word).unwrap()
}

/// Signed expansion as a plain list for comparison with frozen data.
fn expansion_list(e: &BTreeMap<WeakComposition, BigInt>) -> Vec<(Vec<u32>, i64)> {
    e.iter()
        .map(|(a, c)| (a.parts().to_vec(), i64::try_from(c).unwrap()))
        .collect()
}

fn frozen(entries: &[(&[u32], i64)]) -> Vec<(Vec<u32>, i64)> {
    let mut v: Vec<(Vec<u32>, i64)> = entries
        .iter()
        .map(|&(a, c)| (wc(a).parts().to_vec(), c))
        .collect();
    v.sort();
    v
}

/// Series built from frozen (index, coefficient) pairs.
fn series(basis: Basis, degree: u64, entries: &[(&[u32], i64)]) -> QSymSeries {
    let mut out = QSymSeries::new(basis, degree);
    for &(a, c) in entries {
        out.add_term(sc(a), BigInt::from(c));
    }
    out
}

/// Weak compositions with at most `len` parts and size at most `max_size`.
fn weak_compositions(max_size: u32, len: usize) -> Vec<WeakComposition> {
    let mut out = vec![WeakComposition::empty()];
    for size in 1..=max_size {
        fn rec(parts: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<WeakComposition>) {
            if i == parts.len() {
                if left == 0 {
                    out.push(WeakComposition::new(parts.clone()));
                }
                return;
            }
            for v in 0..=left {
                parts[i] = v;
                rec(parts, i + 1, left - v, out);
            }
            parts[i] = 0;
        }
        let mut parts = vec![0u32; len];
        let mut batch = Vec::new();
        rec(&mut parts, 0, size, &mut batch);
        batch.sort();
        batch.dedup();
        out.extend(batch);
    }
    out
}

/// All 512 diagrams inside a 3x3 box.
fn box_3x3() -> Vec<Diagram> {
    (0u32..512)
        .map(|mask| {
            Diagram::from_cells(
                (0..9).filter(|i| mask >> i & 1 == 1).map(|i| Cell::new(i / 3 + 1, i % 3 + 1)),
            )
        })
        .collect()
}

#[test]
fn criterion_01_enumeration_counts() {
    assert_eq!(enumerate_kd(&key_diagram(&wc(&[0, 2, 1, 2]))).unwrap().len(), 16);
    assert_eq!(enumerate_kd(&rothe_diagram(&perm("143625"))).unwrap().len(), 26);
    assert_eq!(enumerate_kd(&lock_diagram(&wc(&[0, 2, 1, 2]))).unwrap().len(), 9);
    println!("criterion 1 (enumeration counts 16/26/9): pass");
}

#[test]
fn criterion_02_demazure_cross_definition() {
    for a in weak_compositions(12, 4) {
        if a.parts().iter().any(|&p| p > 3) {
            continue;
        }
        assert_eq!(
            demazure_character(&a),
            kohnert_polynomial(&key_diagram(&a)).unwrap(),
            "divided-difference and diagram definitions disagree at {a}"
        );
    }
    let frozen_0212 = poly(&[
        (&[2, 2, 1], 1),
        (&[2, 2, 0, 1], 1),
        (&[2, 1, 2], 1),
        (&[2, 1, 1, 1], 2),
        (&[2, 1, 0, 2], 1),
        (&[2, 0, 2, 1], 1),
        (&[2, 0, 1, 2], 1),
        (&[1, 2, 2], 1),
        (&[1, 2, 1, 1], 2),
        (&[1, 2, 0, 2], 1),
        (&[1, 1, 2, 1], 1),
        (&[1, 1, 1, 2], 1),
        (&[0, 2, 2, 1], 1),
        (&[0, 2, 1, 2], 1),
    ]);
    assert_eq!(demazure_character(&wc(&[0, 2, 1, 2])), frozen_0212);
    println!("criterion 2 (Demazure cross-definition, parts <= 3, length <= 4): pass");
}

#[test]
fn criterion_03_schubert_cross_definition() {
    for w in kohnert::all_permutations(5) {
        assert_eq!(
            schubert(&w),
            kohnert_polynomial(&rothe_diagram(&w)).unwrap(),
            "divided-difference and diagram definitions disagree at {w}"
        );
    }
    let frozen_143625 = poly(&[
        (&[3, 1, 1], 1),
        (&[3, 1, 0, 1], 1),
        (&[3, 0, 1, 1], 1),
        (&[2, 2, 1], 2),
        (&[2, 2, 0, 1], 2),
        (&[2, 1, 2], 1),
        (&[2, 1, 1, 1], 3),
        (&[2, 1, 0, 2], 1),
        (&[2, 0, 2, 1], 1),
        (&[2, 0, 1, 2], 1),
        (&[1, 3, 1], 1),
        (&[1, 3, 0, 1], 1),
        (&[1, 2, 2], 1),
        (&[1, 2, 1, 1], 3),
        (&[1, 2, 0, 2], 1),
        (&[1, 1, 2, 1], 1),
        (&[1, 1, 1, 2], 1),
        (&[0, 3, 1, 1], 1),
        (&[0, 2, 2, 1], 1),
        (&[0, 2, 1, 2], 1),
    ]);
    assert_eq!(schubert(&perm("143625")), frozen_143625);
    println!("criterion 3 (Schubert cross-definition over S5, frozen 20-term display): pass");
}

#[test]
fn criterion_04_fundamental_slide_expansions() {
    let cases: Vec<(Polynomial, Vec<(Vec<u32>, i64)>)> = vec![
        (
            schubert(&perm("143625")),
            frozen(&[
                (&[2, 2, 0, 1], 1),
                (&[1, 3, 0, 1], 1),
                (&[1, 2, 1, 1], 1),
                (&[1, 2, 0, 2], 1),
                (&[0, 3, 1, 1], 1),
                (&[0, 2, 2, 1], 1),
                (&[0, 2, 1, 2], 1),
            ]),
        ),
        (
            demazure_character(&wc(&[0, 2, 1, 2])),
            frozen(&[
                (&[1, 2, 1, 1], 1),
                (&[1, 2, 0, 2], 1),
                (&[0, 2, 2, 1], 1),
                (&[0, 2, 1, 2], 1),
            ]),
        ),
        (
            lock_polynomial(&wc(&[0, 2, 1, 2])).unwrap(),
            frozen(&[(&[0, 2, 1, 2], 1), (&[1, 2, 0, 2], 1)]),
        ),
        (
            lock_polynomial(&wc(&[0, 3, 2, 1])).unwrap(),
            frozen(&[
                (&[3, 1, 2], 1),
                (&[2, 3, 0, 1], 1),
                (&[2, 2, 2], 1),
                (&[2, 2, 1, 1], 1),
                (&[1, 3, 2], 1),
                (&[1, 3, 1, 1], 1),
                (&[0, 3, 2, 1], 1),
            ]),
        ),
    ];
    for (input, expected) in cases {
        let e = expand_in_kohnert_basis(&input, |b| Ok(fundamental_slide(b))).unwrap();
        assert_eq!(expansion_list(&e), expected);
    }
    println!("criterion 4 (fundamental slide expansions, four frozen lists): pass");
}

#[test]
fn criterion_05_non_fundamental_example() {
    let two_cell = diagram(&[(3, 2), (2, 3)]);
    let e = expand_in_kohnert_basis(&kohnert_polynomial(&two_cell).unwrap(), |b| {
        Ok(fundamental_slide(b))
    })
    .unwrap();
    assert_eq!(
        expansion_list(&e),
        frozen(&[(&[0, 1, 1], 1), (&[0, 2, 0], 1), (&[1, 1, 0], -1)])
    );
    // The signed pair cancels in the limit, leaving a single positive term.
    assert_eq!(
        kohnert_qsym(&two_cell).unwrap(),
        series(Basis::Fundamental, 2, &[(&[2], 1)])
    );
    // The same limit computation on the four-cell diagram with a genuinely
    // non-fundamental expansion produces the frozen two-term series.
    let four_cell = diagram(&[(5, 2), (4, 2), (4, 3), (2, 3)]);
    assert_eq!(
        kohnert_qsym(&four_cell).unwrap(),
        series(Basis::Fundamental, 4, &[(&[1, 2, 1], 1), (&[2, 2], 1)])
    );
    println!("criterion 5 (signed slide expansion and stable limits of non-fundamental diagrams): pass");
}

#[test]
fn criterion_06_signed_demazure_expansions() {
    let lock_0212 = lock_polynomial(&wc(&[0, 2, 1, 2])).unwrap();
    let e = expand_in_kohnert_basis(&lock_0212, |b| Ok(demazure_character(b))).unwrap();
    assert_eq!(
        expansion_list(&e),
        frozen(&[
            (&[0, 2, 1, 2], 1),
            (&[0, 2, 2, 1], -1),
            (&[1, 2, 2, 0], 1),
            (&[2, 2, 1, 0], -1),
        ])
    );

    // Note the lock expansion genuinely needs the fourth term: the popular
    // three-term form overshoots by exactly the monomial x^(2,1,2), which is
    // the whole lock polynomial of (2,1,2). Basis expansions are unique.
    let kappa_0212 = demazure_character(&wc(&[0, 2, 1, 2]));
    let e = expand_in_kohnert_basis(&kappa_0212, lock_polynomial).unwrap();
    assert_eq!(
        expansion_list(&e),
        frozen(&[
            (&[0, 2, 1, 2], 1),
            (&[0, 2, 2, 1], 1),
            (&[1, 2, 2, 0], -1),
            (&[2, 1, 2], -1),
        ])
    );

    let product = &demazure_character(&wc(&[2, 0, 2])) * &demazure_character(&wc(&[0, 2, 0]));
    let e = expand_in_kohnert_basis(&product, |b| Ok(demazure_character(b))).unwrap();
    assert_eq!(
        expansion_list(&e),
        frozen(&[
            (&[4, 2], -1),
            (&[4, 0, 2], 1),
            (&[3, 2, 1], -1),
            (&[3, 1, 2], 1),
            (&[2, 4], 1),
            (&[2, 3, 1], 1),
            (&[2, 2, 2], 1),
        ])
    );
    println!("criterion 6 (signed Demazure/lock expansions and the frozen product): pass");
}

#[test]
fn criterion_07_skew_results() {
    let a = wc(&[1, 0, 3, 2, 0, 3]);
    assert_eq!(
        kohnert_polynomial(&skew_diagram(&a)).unwrap(),
        schubert(&perm("216539478"))
    );

    let (lambda, mu) = skew_stable_data(&a);
    assert_eq!(lambda, Partition::new(vec![6, 4, 4, 1]).unwrap());
    assert_eq!(mu, Partition::new(vec![3, 2, 1]).unwrap());
    // The fully shifted closure is out of reach (about 1e8 diagrams), but
    // the expansion stabilizes much earlier: lifts 5 and 6 agree exactly,
    // and both match the independent tableau-based skew Schur oracle.
    let d = skew_diagram(&a);
    let at_five = kohnert_qsym_lift(&d, 5).unwrap();
    assert_eq!(at_five, kohnert_qsym_lift(&d, 6).unwrap());
    assert_eq!(at_five, skew_schur(&lambda, &mu).unwrap());

    let product = &skew_polynomial(&wc(&[2, 0, 2])).unwrap() * &skew_polynomial(&wc(&[0, 2, 0])).unwrap();
    let e = expand_in_kohnert_basis(&product, skew_polynomial).unwrap();
    assert_eq!(
        expansion_list(&e),
        frozen(&[
            (&[4, 0, 2], 1),
            (&[3, 1, 2], 1),
            (&[2, 4], 1),
            (&[2, 3, 1], 1),
            (&[2, 2, 2], 1),
        ])
    );
    let product = &skew_polynomial(&wc(&[1, 0, 1])).unwrap() * &skew_polynomial(&wc(&[0, 0, 1])).unwrap();
    let e = expand_in_kohnert_basis(&product, skew_polynomial).unwrap();
    assert_eq!(
        expansion_list(&e),
        frozen(&[(&[3], -1), (&[2, 0, 1], 1), (&[1, 1, 1], 1), (&[1, 0, 2], 1)])
    );
    println!("criterion 7 (skew = Schubert instance, stable limit vs skew-Schur oracle, products): pass");
}

#[test]
fn criterion_08_extended_schur_table() {
    // The complete table of fundamental expansions for sizes 1 through 5.
    let table: Vec<(&[u32], Vec<(&[u32], i64)>)> = vec![
        (&[1], vec![(&[1], 1)]),
        (&[2], vec![(&[2], 1)]),
        (&[1, 1], vec![(&[1, 1], 1)]),
        (&[3], vec![(&[3], 1)]),
        (&[2, 1], vec![(&[1, 2], 1), (&[2, 1], 1)]),
        (&[1, 2], vec![(&[1, 2], 1)]),
        (&[1, 1, 1], vec![(&[1, 1, 1], 1)]),
        (&[4], vec![(&[4], 1)]),
        (&[3, 1], vec![(&[1, 3], 1), (&[2, 2], 1), (&[3, 1], 1)]),
        (&[1, 3], vec![(&[1, 3], 1)]),
        (&[2, 2], vec![(&[1, 2, 1], 1), (&[2, 2], 1)]),
        (&[2, 1, 1], vec![(&[1, 1, 2], 1), (&[1, 2, 1], 1), (&[2, 1, 1], 1)]),
        (&[1, 2, 1], vec![(&[1, 1, 2], 1), (&[1, 2, 1], 1)]),
        (&[1, 1, 2], vec![(&[1, 1, 2], 1)]),
        (&[1, 1, 1, 1], vec![(&[1, 1, 1, 1], 1)]),
        (&[5], vec![(&[5], 1)]),
        (&[4, 1], vec![(&[1, 4], 1), (&[2, 3], 1), (&[3, 2], 1), (&[4, 1], 1)]),
        (&[1, 4], vec![(&[1, 4], 1)]),
        (
            &[3, 2],
            vec![(&[2, 3], 1), (&[1, 2, 2], 1), (&[1, 3, 1], 1), (&[2, 2, 1], 1), (&[3, 2], 1)],
        ),
        (&[2, 3], vec![(&[2, 3], 1), (&[1, 2, 2], 1)]),
        (
            &[3, 1, 1],
            vec![
                (&[1, 1, 3], 1),
                (&[1, 2, 2], 1),
                (&[1, 3, 1], 1),
                (&[2, 1, 2], 1),
                (&[2, 2, 1], 1),
                (&[3, 1, 1], 1),
            ],
        ),
        (&[1, 3, 1], vec![(&[1, 1, 3], 1), (&[1, 2, 2], 1), (&[1, 3, 1], 1)]),
        (&[1, 1, 3], vec![(&[1, 1, 3], 1)]),
        (
            &[2, 2, 1],
            vec![
                (&[1, 2, 2], 1),
                (&[1, 1, 2, 1], 1),
                (&[2, 1, 2], 1),
                (&[1, 2, 1, 1], 1),
                (&[2, 2, 1], 1),
            ],
        ),
        (&[2, 1, 2], vec![(&[1, 2, 2], 1), (&[1, 1, 2, 1], 1), (&[2, 1, 2], 1)]),
        (&[1, 2, 2], vec![(&[1, 2, 2], 1), (&[1, 1, 2, 1], 1)]),
        (
            &[2, 1, 1, 1],
            vec![
                (&[1, 1, 1, 2], 1),
                (&[1, 1, 2, 1], 1),
                (&[1, 2, 1, 1], 1),
                (&[2, 1, 1, 1], 1),
            ],
        ),
        (
            &[1, 2, 1, 1],
            vec![(&[1, 1, 1, 2], 1), (&[1, 1, 2, 1], 1), (&[1, 2, 1, 1], 1)],
        ),
        (&[1, 1, 2, 1], vec![(&[1, 1, 1, 2], 1), (&[1, 1, 2, 1], 1)]),
        (&[1, 1, 1, 2], vec![(&[1, 1, 1, 2], 1)]),
        (&[1, 1, 1, 1, 1], vec![(&[1, 1, 1, 1, 1], 1)]),
    ];
    assert_eq!(table.len(), 31);
    let mut seen = 0;
    for n in 1..=5u32 {
        seen += compositions_of(n).len();
    }
    assert_eq!(seen, 31, "the table covers every composition of size <= 5");
    for (alpha, entries) in &table {
        let expected = series(Basis::Fundamental, alpha.iter().map(|&p| p as u64).sum(), entries);
        assert_eq!(extended_schur(&sc(alpha)).unwrap(), expected, "at {alpha:?}");
    }

    // Dual computation: descent statistics of standard fillings agree with
    // the stable lock limit for every composition of size <= 6.
    for n in 1..=6u32 {
        for alpha in compositions_of(n) {
            assert_eq!(
                extended_schur(&alpha).unwrap(),
                kohnert_qsym(&lock_diagram(&alpha.as_weak())).unwrap(),
                "at {alpha}"
            );
        }
    }
    println!("criterion 8 (extended Schur table, 31 rows, and dual computation to size 6): pass");
}

fn assert_nonnegative(e: &BTreeMap<WeakComposition, BigInt>, what: &str) {
    for (a, c) in e {
        assert!(!c.is_negative(), "{what}: coefficient {c} on {a}");
    }
}

#[test]
fn criterion_09_positivity_conjectures() {
    for d in box_3x3() {
        if !is_demazure(&d) {
            continue;
        }
        let e = expand_in_kohnert_basis(&kohnert_polynomial(&d).unwrap(), |b| {
            Ok(demazure_character(b))
        })
        .unwrap();
        assert_nonnegative(&e, "demazure positivity in the 3x3 box");
    }
    for a in weak_compositions(6, 4) {
        let e = expand_in_kohnert_basis(&skew_polynomial(&a).unwrap(), |b| {
            Ok(schubert(&Permutation::from_lehmer_code(b)))
        })
        .unwrap();
        assert_nonnegative(&e, "skew positivity in the Schubert basis");
    }
    println!("criterion 9 (demazure positivity over 3x3, skew-Schubert positivity to size 6): pass");
}

/// Stretch sweep over the 4x4 box; run with `cargo test -- --ignored`.
#[test]
#[ignore = "stretch target: 65536-diagram sweep"]
fn criterion_09_stretch_4x4_box() {
    for mask in 0u32..(1 << 16) {
        let d = Diagram::from_cells(
            (0..16).filter(|i| mask >> i & 1 == 1).map(|i| Cell::new(i / 4 + 1, i % 4 + 1)),
        );
        if !is_demazure(&d) {
            continue;
        }
        let e = expand_in_kohnert_basis(&kohnert_polynomial(&d).unwrap(), |b| {
            Ok(demazure_character(b))
        })
        .unwrap();
        assert_nonnegative(&e, "demazure positivity in the 4x4 box");
    }
    println!("criterion 9 stretch (demazure positivity over the 4x4 box): pass");
}

#[test]
fn criterion_10_structural_sweeps() {
    for d in box_3x3() {
        let p = kohnert_polynomial(&d).unwrap();

        // Monomial slide expansion indexed by the empty-row-maximal members.
        let mut from_mkd = Polynomial::zero();
        for t in enumerate_mkd(&d).unwrap() {
            from_mkd = &from_mkd + &monomial_slide(&t.weight());
        }
        assert_eq!(p, from_mkd, "monomial slide expansion at {:?}", d.cells());

        // Fundamental slide expansion on fundamental roots.
        if is_fundamental(&d) {
            let mut from_fkd = Polynomial::zero();
            for t in enumerate_fkd(&d).unwrap() {
                from_fkd = &from_fkd + &fundamental_slide(&t.weight());
            }
            assert_eq!(p, from_fkd, "fundamental slide expansion at {:?}", d.cells());
        }

        // A diagram whose shifted closure has no split lift-maximal member
        // is fundamental. The converse is false: {(2,2),(2,3),(3,1),(3,2)}
        // is fundamental, yet one move yields the split lift-maximal member
        // {(1,2),(2,2),(2,3),(3,1)} (pair (3,1)/(2,2)). What split members
        // guarantee is cancellation: dropping them from the fundamental-side
        // limit reproduces the monomial-side limit, checked below.
        let lifted = d.shift_up(d.size() as u32);
        let any_split = enumerate_fkd(&lifted).unwrap().iter().any(is_split);
        assert!(
            is_fundamental(&d) || any_split,
            "non-fundamental root without a split lift-maximal member at {:?}",
            d.cells()
        );

        // Stable limits are fundamental-positive: the signed monomial data
        // collapses to the same series as the manifestly positive one.
        let positive = kohnert_qsym(&d).unwrap();
        let monomial = kohnert_qsym_monomial(&d).unwrap();
        assert_eq!(
            positive.convert(Basis::Monomial),
            monomial,
            "stable-limit basis agreement at {:?}",
            d.cells()
        );
    }
    println!("criterion 10 (structural expansions over all 512 diagrams in the 3x3 box): pass");
}

use kohnert::kohnert_qsym_monomial;

#[test]
fn criterion_11_stability_of_the_lift() {
    let samples: Vec<Diagram> = vec![
        key_diagram(&wc(&[0, 2, 1, 2])),
        rothe_diagram(&perm("143625")),
        lock_diagram(&wc(&[0, 2, 1, 2])),
        diagram(&[(2, 1), (2, 2), (3, 2), (4, 2), (4, 3)]),
        diagram(&[(3, 2), (2, 3)]),
        diagram(&[(5, 2), (4, 2), (4, 3), (2, 3)]),
        key_diagram(&wc(&[1, 0, 2])),
        lock_diagram(&wc(&[0, 3, 2, 1])),
        skew_diagram(&wc(&[2, 0, 2])),
        rothe_diagram(&perm("1432")),
    ];
    assert_eq!(samples.len(), 10);
    for d in &samples {
        let m = d.size() as u32;
        assert_eq!(
            kohnert_qsym_lift(d, m).unwrap(),
            kohnert_qsym_lift(d, m + 2).unwrap(),
            "expansion changed between lifts {m} and {} at {:?}",
            m + 2,
            d.cells()
        );
    }
    println!("criterion 11 (lift stability for 10 fixed sample diagrams): pass");
}

#[test]
fn criterion_12_extended_schur_propositions() {
    // Partition-shaped indices give exactly the Schur functions.
    for n in 1..=6u32 {
        for alpha in compositions_of(n) {
            if !alpha.is_weakly_decreasing() {
                continue;
            }
            let lambda = alpha.sorted();
            let expansion = schur_expand(&extended_schur(&alpha).unwrap()).unwrap();
            assert_eq!(
                expansion,
                BTreeMap::from([(lambda.clone(), BigInt::one())]),
                "at {alpha}"
            );
        }
    }

    // Swapping an ascent pair forward never loses fundamental positivity.
    for n in 1..=6u32 {
        for alpha in compositions_of(n) {
            let parts = alpha.parts();
            for i in 0..parts.len().saturating_sub(1) {
                if parts[i] >= parts[i + 1] {
                    continue;
                }
                let mut swapped = parts.to_vec();
                swapped.swap(i, i + 1);
                let beta = sc(&swapped);
                let diff = &extended_schur(&beta).unwrap() - &extended_schur(&alpha).unwrap();
                for (gamma, c) in diff.terms() {
                    assert!(!c.is_negative(), "negative {c} on F[{gamma}] for {beta} - {alpha}");
                }
            }
        }
    }
    let diff = &extended_schur(&sc(&[2, 2, 1])).unwrap() - &extended_schur(&sc(&[2, 1, 2])).unwrap();
    assert_eq!(
        diff,
        series(Basis::Fundamental, 5, &[(&[2, 2, 1], 1), (&[1, 2, 1, 1], 1)])
    );

    // A single fundamental term appears exactly for reverse hooks (1^k, l).
    for n in 1..=6u32 {
        for alpha in compositions_of(n) {
            let parts = alpha.parts();
            let is_reverse_hook = parts[..parts.len() - 1].iter().all(|&p| p == 1);
            assert_eq!(
                extended_schur(&alpha).unwrap().num_terms() == 1,
                is_reverse_hook,
                "at {alpha}"
            );
        }
    }
    println!("criterion 12 (Schur specialization, swap positivity, reverse-hook characterization): pass");
}
