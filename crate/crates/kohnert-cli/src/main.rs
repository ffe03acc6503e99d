//! Command-line interface: compute diagram polynomials, expand them in the
//! supported bases, check structural predicates, take stable limits, print
//! the extended Schur table, and exhaustively verify positivity properties
//! on bounded instance sweeps.
//!
//! Exit codes: 0 success / property holds, 1 property fails (witness
//! printed), 2 usage or parse error, 3 resource cap exceeded.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use kohnert::{
    compositions_of, demazure_character, descending_lex, diagram_from_json,
    enumerate_fkd, enumerate_kd, extended_schur, fundamental_slide, is_demazure,
    is_fundamental, is_quasisymmetric, is_split, is_vexillary, key_diagram, kohnert_polynomial,
    kohnert_qsym, kohnert_qsym_lift, kohnert_qsym_monomial, lock_diagram, lock_polynomial,
    monomial_slide,
    parse_cell_list, parse_diagram, parse_permutation, rothe_diagram, schubert, skew_diagram,
    skew_polynomial, Basis, Cell, Diagram, Error, Permutation, Polynomial, QSymSeries,
    WeakComposition,
};

#[derive(Parser)]
#[command(name = "kohnert", version, about = "Exact diagram-polynomial calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the weight generating polynomial of a diagram's move closure.
    Compute {
        #[command(flatten)]
        source: SourceArgs,
        /// Print only the number of diagrams in the closure.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Expand a polynomial in one of the supported bases.
    Expand {
        #[command(flatten)]
        source: SourceArgs,
        /// Product of two basis elements, each written `kind:parts` with
        /// kind one of key, demazure, lock, skew, schubert, rothe, mslide,
        /// fslide.
        #[arg(long, num_args = 2, value_name = "KIND:PARTS")]
        product: Option<Vec<String>>,
        /// Target basis: monomial, mslide, fslide, demazure, schubert,
        /// lock, or skew.
        #[arg(long)]
        basis: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Check a structural predicate of a diagram, printing a witness when
    /// it fails.
    Check {
        #[command(flatten)]
        source: SourceArgs,
        /// One of split, fundamental, demazure, vexillary, qsym.
        #[arg(long)]
        prop: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Print the stable limit of a diagram as a quasisymmetric series.
    Stable {
        #[command(flatten)]
        source: SourceArgs,
        /// Series basis: M (monomial) or F (fundamental).
        #[arg(long, default_value = "F")]
        basis: String,
        /// Explicit upward shift to use instead of the guaranteed cell-count
        /// bound (fundamental basis only); useful when the shifted closure
        /// is too large but the expansion stabilizes earlier.
        #[arg(long)]
        lift: Option<u32>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Print the fundamental expansions of all extended Schur functions up
    /// to a given degree.
    Table {
        #[arg(long, value_name = "N")]
        max_size: u32,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Exhaustively verify a positivity or equivalence property on a
    /// bounded sweep of instances.
    Verify {
        /// One of demazure-positivity, skew-schubert, split-equivalence,
        /// lock-key.
        #[arg(long)]
        conjecture: String,
        /// Diagram sweep bounds, e.g. 3x3.
        #[arg(long, value_name = "RxC", default_value = "3x3")]
        r#box: String,
        /// Maximum composition size for composition sweeps.
        #[arg(long, default_value_t = 6)]
        size: u32,
        /// Maximum composition length for composition sweeps.
        #[arg(long, default_value_t = 4)]
        len: usize,
        /// Maximum part value for bounded-part sweeps.
        #[arg(long, default_value_t = 3)]
        parts: u32,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// Left-justified diagram of a weak composition (comma-separated parts).
    #[arg(long, value_name = "PARTS")]
    key: Option<String>,
    /// Right-justified diagram of a weak composition.
    #[arg(long, value_name = "PARTS")]
    lock: Option<String>,
    /// Inversion diagram of a permutation (digit string or comma form).
    #[arg(long, value_name = "PERM")]
    rothe: Option<String>,
    /// Shifted skew diagram of a weak composition.
    #[arg(long, value_name = "PARTS")]
    skew: Option<String>,
    /// Diagram file: `x`/`.` grid, `r,c` cell list, or JSON
    /// {"cells":[[r,c],...]}; `-` reads standard input.
    #[arg(long, value_name = "PATH")]
    file: Option<String>,
}

#[derive(Args, Clone)]
struct FormatArg {
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

impl FormatArg {
    fn json(&self) -> Result<bool, Error> {
        match self.format.as_str() {
            "text" => Ok(false),
            "json" => Ok(true),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

struct Source {
    diagram: Diagram,
    perm: Option<Permutation>,
}

fn parse_parts(text: &str) -> Result<WeakComposition, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(WeakComposition::empty());
    }
    let parts: Result<Vec<u32>, Error> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad composition part {p:?}")))
        })
        .collect();
    Ok(WeakComposition::new(parts?))
}

impl SourceArgs {
    fn resolve(&self) -> Result<Source, Error> {
        let given = [
            self.key.is_some(),
            self.lock.is_some(),
            self.rothe.is_some(),
            self.skew.is_some(),
            self.file.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(Error::Parse(
                "exactly one of --key/--lock/--rothe/--skew/--file is required".into(),
            ));
        }
        if let Some(a) = &self.key {
            return Ok(Source {
                diagram: key_diagram(&parse_parts(a)?),
                perm: None,
            });
        }
        if let Some(a) = &self.lock {
            return Ok(Source {
                diagram: lock_diagram(&parse_parts(a)?),
                perm: None,
            });
        }
        if let Some(w) = &self.rothe {
            let w = parse_permutation(w)?;
            return Ok(Source {
                diagram: rothe_diagram(&w),
                perm: Some(w),
            });
        }
        if let Some(a) = &self.skew {
            return Ok(Source {
                diagram: skew_diagram(&parse_parts(a)?),
                perm: None,
            });
        }
        let path = self.file.as_ref().unwrap();
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
        };
        let trimmed = text.trim_start();
        let diagram = if trimmed.starts_with('{') {
            diagram_from_json(&text)?
        } else if trimmed.lines().next().map_or(false, |l| {
            l.chars().all(|c| c == 'x' || c == '.')
        }) {
            parse_diagram(&text)?
        } else {
            parse_cell_list(&text)?
        };
        Ok(Source {
            diagram,
            perm: None,
        })
    }
}

fn exponents_json(a: &WeakComposition) -> serde_json::Value {
    serde_json::Value::from(a.parts().to_vec())
}

fn polynomial_json(p: &Polynomial) -> serde_json::Value {
    let mut terms: Vec<(&WeakComposition, &BigInt)> = p.terms().iter().collect();
    terms.sort_by(|a, b| descending_lex(a.0.parts(), b.0.parts()));
    serde_json::json!({
        "terms": terms
            .iter()
            .map(|(a, c)| serde_json::json!({
                "coeff": c.to_string(),
                "exponents": exponents_json(a),
            }))
            .collect::<Vec<_>>()
    })
}

fn series_json(q: &QSymSeries) -> serde_json::Value {
    let mut terms: Vec<_> = q.terms().iter().collect();
    terms.sort_by(|a, b| descending_lex(a.0.parts(), b.0.parts()));
    serde_json::json!({
        "degree": q.degree(),
        "basis": match q.basis() { Basis::Monomial => "M", Basis::Fundamental => "F" },
        "terms": terms
            .iter()
            .map(|(a, c)| serde_json::json!({
                "coeff": c.to_string(),
                "index": a.parts().to_vec(),
            }))
            .collect::<Vec<_>>()
    })
}

fn parts_string(a: &WeakComposition) -> String {
    a.parts()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_compute(source: &SourceArgs, count: bool, fmt: &FormatArg) -> Result<u8, Error> {
    let json = fmt.json()?;
    let d = source.resolve()?.diagram;
    if count {
        let n = enumerate_kd(&d)?.len();
        if json {
            println!("{}", serde_json::json!({ "count": n }));
        } else {
            println!("{n}");
        }
        return Ok(0);
    }
    let p = kohnert_polynomial(&d)?;
    if json {
        println!("{}", polynomial_json(&p));
    } else {
        println!("{p}");
    }
    Ok(0)
}

/// A basis element written `kind:parts`.
fn parse_factor(spec: &str) -> Result<Polynomial, Error> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("factor {spec:?} is not kind:parts")))?;
    match kind {
        "key" | "demazure" => Ok(demazure_character(&parse_parts(rest)?)),
        "lock" => lock_polynomial(&parse_parts(rest)?),
        "skew" => skew_polynomial(&parse_parts(rest)?),
        "schubert" | "rothe" => Ok(schubert(&parse_permutation(rest)?)),
        "mslide" => Ok(monomial_slide(&parse_parts(rest)?)),
        "fslide" => Ok(fundamental_slide(&parse_parts(rest)?)),
        other => Err(Error::Parse(format!("unknown factor kind {other:?}"))),
    }
}

fn basis_generator(basis: &str) -> Result<(&'static str, fn(&WeakComposition) -> Result<Polynomial, Error>), Error> {
    Ok(match basis {
        "mslide" => ("M", |b| Ok(monomial_slide(b))),
        "fslide" => ("F", |b| Ok(fundamental_slide(b))),
        "demazure" => ("kappa", |b| Ok(demazure_character(b))),
        "schubert" => ("S", |b| Ok(schubert(&Permutation::from_lehmer_code(b)))),
        "lock" => ("L", lock_polynomial),
        "skew" => ("SK", skew_polynomial),
        other => return Err(Error::Parse(format!("unknown basis {other:?}"))),
    })
}

fn cmd_expand(
    source: &SourceArgs,
    product: &Option<Vec<String>>,
    basis: &str,
    fmt: &FormatArg,
) -> Result<u8, Error> {
    let json = fmt.json()?;
    let input = match product {
        Some(specs) => &parse_factor(&specs[0])? * &parse_factor(&specs[1])?,
        None => kohnert_polynomial(&source.resolve()?.diagram)?,
    };
    let (label, expansion): (&str, BTreeMap<WeakComposition, BigInt>) = if basis == "monomial" {
        ("x", input.terms().clone())
    } else {
        let (label, gen) = basis_generator(basis)?;
        (label, kohnert::expand_in_kohnert_basis(&input, gen)?)
    };
    let mut sorted: Vec<(&WeakComposition, &BigInt)> = expansion.iter().collect();
    sorted.sort_by(|a, b| descending_lex(a.0.parts(), b.0.parts()));
    if json {
        println!(
            "{}",
            serde_json::json!({
                "basis": basis,
                "terms": sorted
                    .iter()
                    .map(|(a, c)| serde_json::json!({
                        "coeff": c.to_string(),
                        "index": a.parts().to_vec(),
                    }))
                    .collect::<Vec<_>>()
            })
        );
    } else {
        for (a, c) in sorted {
            println!("{c}\t{label}({})", parts_string(a));
        }
    }
    Ok(0)
}

fn cmd_check(source: &SourceArgs, prop: &str, fmt: &FormatArg) -> Result<u8, Error> {
    let json = fmt.json()?;
    let resolved = source.resolve()?;
    let d = &resolved.diagram;
    let (holds, witness): (bool, Option<String>) = match prop {
        "split" => match kohnert::diagram::split_pair(d) {
            // For split, "holds" reports the property value directly.
            Some((a, b)) => (true, Some(format!("({},{})/({},{})", a.row, a.col, b.row, b.col))),
            None => (false, None),
        },
        "fundamental" => match kohnert::diagram::fundamental_violation(d) {
            Some(c) => (false, Some(format!("({},{})", c.row, c.col))),
            None => (true, None),
        },
        "demazure" => match kohnert::diagram::demazure_violation(d) {
            Some((a, b)) => (
                false,
                Some(format!("({},{})/({},{})", a.row, a.col, b.row, b.col)),
            ),
            None => (true, None),
        },
        "vexillary" => {
            let w = resolved.perm.as_ref().ok_or_else(|| {
                Error::Parse("--prop vexillary requires a --rothe source".into())
            })?;
            (is_vexillary(w), None)
        }
        "qsym" => {
            let f = kohnert_polynomial(d)?;
            let n = (d.height() as usize).max(f.num_variables());
            let ok = is_quasisymmetric(&f, n)?;
            let witness = if ok {
                None
            } else {
                kohnert::poly::quasisymmetry_violation(&f, n)?
                    .map(|(a, b)| format!("{a} vs {b}"))
            };
            (ok, witness)
        }
        other => return Err(Error::Parse(format!("unknown property {other:?}"))),
    };
    if json {
        println!(
            "{}",
            serde_json::json!({ "property": prop, "holds": holds, "witness": witness })
        );
    } else {
        match &witness {
            Some(w) => println!("{holds} (witness {w})"),
            None => println!("{holds}"),
        }
    }
    // For the split predicate a positive answer is the notable outcome but
    // still exit 0; the exit code signals failures of the checked property.
    Ok(if prop == "split" || holds { 0 } else { 1 })
}

fn cmd_stable(
    source: &SourceArgs,
    basis: &str,
    lift: Option<u32>,
    fmt: &FormatArg,
) -> Result<u8, Error> {
    let json = fmt.json()?;
    let d = source.resolve()?.diagram;
    let q = match basis {
        "F" | "f" | "fundamental" => match lift {
            Some(m) => kohnert_qsym_lift(&d, m)?,
            None => kohnert_qsym(&d)?,
        },
        "M" | "m" | "monomial" => {
            if lift.is_some() {
                return Err(Error::Parse(
                    "--lift only applies to the fundamental basis".into(),
                ));
            }
            kohnert_qsym_monomial(&d)?
        }
        other => return Err(Error::Parse(format!("unknown series basis {other:?}"))),
    };
    if json {
        println!("{}", series_json(&q));
    } else {
        println!("{q}");
    }
    Ok(0)
}

fn cmd_table(max_size: u32, fmt: &FormatArg) -> Result<u8, Error> {
    let json = fmt.json()?;
    if max_size < 1 {
        return Err(Error::Parse("--max-size must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for n in 1..=max_size {
        let mut alphas = compositions_of(n);
        alphas.sort_by(|a, b| descending_lex(a.parts(), b.parts()));
        for alpha in alphas {
            rows.push((alpha.clone(), extended_schur(&alpha)?));
        }
    }
    if json {
        println!(
            "{}",
            serde_json::Value::from(
                rows.iter()
                    .map(|(alpha, e)| serde_json::json!({
                        "alpha": alpha.parts().to_vec(),
                        "expansion": series_json(e),
                    }))
                    .collect::<Vec<_>>()
            )
        );
    } else {
        for (alpha, e) in rows {
            println!("E({}) = {e}", parts_string(&alpha.as_weak()));
        }
    }
    Ok(0)
}

/// All diagrams inside `rows x cols`, ordered by ascending cell bitmask
/// (bit `i` is the cell in row `i / cols + 1`, column `i % cols + 1`).
fn box_sweep(rows: u32, cols: u32) -> Vec<Diagram> {
    let bits = rows * cols;
    (0u64..(1 << bits))
        .map(|mask| {
            Diagram::from_cells((0..bits).filter(|i| mask >> i & 1 == 1).map(|i| {
                Cell::new(i / cols + 1, i % cols + 1)
            }))
        })
        .collect()
}

/// Weak compositions with at most `len` parts (trailing zeros trimmed) and
/// size between 1 and `max_size`, ordered by size then lexicographically.
fn composition_sweep(max_size: u32, len: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        let mut batch = Vec::new();
        let mut parts = vec![0u32; len];
        fn rec(parts: &mut Vec<u32>, i: usize, left: u32, batch: &mut Vec<WeakComposition>) {
            if i == parts.len() {
                if left == 0 {
                    batch.push(WeakComposition::new(parts.clone()));
                }
                return;
            }
            for v in 0..=left {
                parts[i] = v;
                rec(parts, i + 1, left - v, batch);
            }
            parts[i] = 0;
        }
        rec(&mut parts, 0, size, &mut batch);
        batch.sort();
        batch.dedup();
        out.extend(batch);
    }
    out
}

fn has_negative(expansion: &BTreeMap<WeakComposition, BigInt>) -> Option<(WeakComposition, BigInt)> {
    expansion
        .iter()
        .find(|(_, c)| c.is_negative())
        .map(|(a, c)| (a.clone(), c.clone()))
}

fn cmd_verify(
    conjecture: &str,
    box_spec: &str,
    size: u32,
    len: usize,
    parts: u32,
    fmt: &FormatArg,
) -> Result<u8, Error> {
    let json = fmt.json()?;
    let start = Instant::now();
    let (rows, cols) = box_spec
        .split_once('x')
        .and_then(|(r, c)| Some((r.parse::<u32>().ok()?, c.parse::<u32>().ok()?)))
        .filter(|&(r, c)| r >= 1 && c >= 1 && r * c <= 25)
        .ok_or_else(|| Error::Parse(format!("bad --box {box_spec:?} (want RxC, at most 25 cells)")))?;

    // Each instance yields Ok(None) on success, Ok(Some(witness)) on a
    // property failure, or Err on a resource problem.
    type Outcome = Result<Option<String>, Error>;
    let (parameters, outcomes): (String, Vec<(String, Outcome)>) = match conjecture {
        "demazure-positivity" => {
            let instances: Vec<Diagram> = box_sweep(rows, cols)
                .into_iter()
                .filter(is_demazure_ref)
                .collect();
            let outcomes = instances
                .par_iter()
                .map(|d| {
                    let name = format!("cells {:?}", cell_list(d));
                    let out: Outcome = (|| {
                        let p = kohnert_polynomial(d)?;
                        let e = kohnert::expand_in_kohnert_basis(&p, |b| {
                            Ok(demazure_character(b))
                        })?;
                        Ok(has_negative(&e).map(|(a, c)| format!("coefficient {c} on kappa({})", parts_string(&a))))
                    })();
                    (name, out)
                })
                .collect();
            (format!("box {rows}x{cols}, northwest-closed diagrams"), outcomes)
        }
        "skew-schubert" => {
            let instances = composition_sweep(size, len);
            let outcomes = instances
                .par_iter()
                .map(|a| {
                    let name = format!("a = ({})", parts_string(a));
                    let out: Outcome = (|| {
                        let p = skew_polynomial(a)?;
                        let e = kohnert::expand_in_kohnert_basis(&p, |b| {
                            Ok(schubert(&Permutation::from_lehmer_code(b)))
                        })?;
                        Ok(has_negative(&e).map(|(b, c)| {
                            format!(
                                "coefficient {c} on S({})",
                                Permutation::from_lehmer_code(&b)
                            )
                        }))
                    })();
                    (name, out)
                })
                .collect();
            (format!("size <= {size}, length <= {len}"), outcomes)
        }
        "split-equivalence" => {
            let instances = box_sweep(rows, cols);
            let outcomes = instances
                .par_iter()
                .map(|d| {
                    let name = format!("cells {:?}", cell_list(d));
                    let out: Outcome = (|| {
                        // Split-free lifted closures certify fundamentality,
                        // and split members certify cancellation: removing
                        // them from the fundamental-side limit must
                        // reproduce the monomial-side limit. (Fundamental
                        // roots can still have split lift-maximal members,
                        // e.g. {(2,2),(2,3),(3,1),(3,2)}.)
                        let fundamental = is_fundamental(d);
                        let lifted = d.shift_up(d.size() as u32);
                        let any_split = enumerate_fkd(&lifted)?.iter().any(is_split);
                        if !fundamental && !any_split {
                            return Ok(Some(
                                "non-fundamental root without a split lift-maximal member"
                                    .to_string(),
                            ));
                        }
                        let fundamental_side = kohnert_qsym(d)?.convert(Basis::Monomial);
                        let monomial_side = kohnert_qsym_monomial(d)?;
                        Ok(if fundamental_side == monomial_side {
                            None
                        } else {
                            Some("split cancellation does not reproduce the monomial limit".into())
                        })
                    })();
                    (name, out)
                })
                .collect();
            (format!("box {rows}x{cols}, all diagrams"), outcomes)
        }
        "lock-key" => {
            let instances: Vec<WeakComposition> = composition_sweep(parts * len as u32, len)
                .into_iter()
                .filter(|a| a.parts().iter().all(|&p| p <= parts))
                .collect();
            let outcomes = instances
                .par_iter()
                .map(|a| {
                    let name = format!("a = ({})", parts_string(a));
                    let out: Outcome = (|| {
                        let equal = lock_polynomial(a)? == demazure_character(a);
                        let expected = a.flatten().is_weakly_decreasing();
                        Ok(if equal == expected {
                            None
                        } else {
                            Some(format!(
                                "equality = {equal}, flat weakly decreasing = {expected}"
                            ))
                        })
                    })();
                    (name, out)
                })
                .collect();
            (format!("parts <= {parts}, length <= {len}"), outcomes)
        }
        other => return Err(Error::Parse(format!("unknown conjecture {other:?}"))),
    };

    let mut failures: Vec<(String, String)> = Vec::new();
    let mut resource: Option<Error> = None;
    let checked = outcomes.len();
    for (name, outcome) in outcomes {
        match outcome {
            Ok(None) => {}
            Ok(Some(witness)) => failures.push((name, witness)),
            Err(e @ Error::ResourceLimit(_)) => {
                resource = Some(e);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let elapsed = start.elapsed();
    if json {
        println!(
            "{}",
            serde_json::json!({
                "conjecture": conjecture,
                "parameters": parameters,
                "instances_checked": checked,
                "failures": failures
                    .iter()
                    .map(|(n, w)| serde_json::json!({ "instance": n, "witness": w }))
                    .collect::<Vec<_>>(),
                "partial": resource.is_some(),
                "elapsed_ms": elapsed.as_millis() as u64,
            })
        );
    } else {
        println!("conjecture: {conjecture}");
        println!("parameters: {parameters}");
        println!("instances checked: {checked}");
        println!("failures: {}", failures.len());
        for (name, witness) in &failures {
            println!("  {name}: {witness}");
        }
        if resource.is_some() {
            println!("partial: resource cap exceeded before completion");
        }
        println!("elapsed: {:.3}s", elapsed.as_secs_f64());
    }
    if let Some(e) = resource {
        eprintln!("error: {e}");
        return Ok(3);
    }
    Ok(if failures.is_empty() { 0 } else { 1 })
}

fn is_demazure_ref(d: &Diagram) -> bool {
    is_demazure(d)
}

fn cell_list(d: &Diagram) -> Vec<(u32, u32)> {
    d.cells().iter().map(|c| (c.row, c.col)).collect()
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Compute { source, count, fmt } => cmd_compute(source, *count, fmt),
        Command::Expand {
            source,
            product,
            basis,
            fmt,
        } => cmd_expand(source, product, basis, fmt),
        Command::Check { source, prop, fmt } => cmd_check(source, prop, fmt),
        Command::Stable {
            source,
            basis,
            lift,
            fmt,
        } => cmd_stable(source, basis, *lift, fmt),
        Command::Table { max_size, fmt } => cmd_table(*max_size, fmt),
        Command::Verify {
            conjecture,
            r#box,
            size,
            len,
            parts,
            fmt,
        } => cmd_verify(conjecture, r#box, *size, *len, *parts, fmt),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit(_) | Error::DiagramTooLarge { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
