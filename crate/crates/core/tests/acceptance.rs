//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each and exits nonzero if any criterion fails.
//!
//! Set `RICHARDSON_UPDATE_GOLDEN=1` to rewrite the golden text renderings.

use richardson::classify::cross_validate;
use richardson::diagram::{assemble, decompose, small_diagram_orth, small_diagram_symp};
use richardson::element::{element_from_diagram, so_remark_conjugate};
use richardson::verify::{full_report, is_dense_in_u, jordan_partition, RichardsonReport};
use richardson::{DimensionVector, Kind, LineDiagram, Partition};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use Kind::{Orthogonal as O, Symplectic as S};

type Outcome = Result<String, Vec<String>>;

fn dv(kind: Kind, e: &[usize]) -> DimensionVector {
    DimensionVector::new(kind, e.to_vec()).unwrap()
}

fn sweep_totals() -> Vec<(Kind, usize)> {
    let orth = (3..=12).map(|n| (O, n));
    let symp = (2..=12).step_by(2).map(|n| (S, n));
    orth.chain(symp).collect()
}

struct Sweep {
    reports: Vec<RichardsonReport>,
    errors: Vec<String>,
}

fn run_sweep() -> Sweep {
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for (kind, total) in sweep_totals() {
        for d in DimensionVector::all_proper(kind, total) {
            match full_report(&d) {
                Ok(r) => reports.push(r),
                Err(e) => errors.push(format!("{d}: {e}")),
            }
        }
    }
    Sweep { reports, errors }
}

fn check(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures)
    }
}

fn criterion_sweep(sweep: &Sweep) -> Outcome {
    let mut failures = sweep.errors.clone();
    for r in &sweep.reports {
        if !(r.in_g && r.in_u && r.nilpotent && r.dense) {
            failures.push(format!(
                "{}: in_g {} in_u {} nilpotent {} dense {}",
                r.dimvec, r.in_g, r.in_u, r.nilpotent, r.dense
            ));
        }
    }
    check(failures, format!("{} proper dimension vectors", sweep.reports.len()))
}

fn criterion_jordan(sweep: &Sweep) -> Outcome {
    let mut failures = sweep.errors.clone();
    for r in &sweep.reports {
        let expected = r.dimvec.dual_sorted_partition().collapse(r.dimvec.kind()).unwrap();
        if r.jordan_partition != expected {
            failures.push(format!("{}: Jordan type {} but expected {expected}", r.dimvec, r.jordan_partition));
        }
        if !r.jordan_partition.is_valid_for(r.dimvec.kind()) {
            failures.push(format!("{}: {} is not a valid partition", r.dimvec, r.jordan_partition));
        }
        if r.centralizer_dim != r.dim_levi {
            failures.push(format!(
                "{}: centralizer {} but Levi {}",
                r.dimvec, r.centralizer_dim, r.dim_levi
            ));
        }
    }
    check(failures, format!("{} Jordan types and centralizers", sweep.reports.len()))
}

/// Decompositions transcribed from the worked examples.
fn example_decompositions() -> Vec<(Kind, Vec<usize>, Vec<Vec<usize>>)> {
    vec![
        (O, vec![3, 4, 2, 4, 3], vec![vec![0; 5], vec![2, 2, 2, 2, 2], vec![1, 2, 0, 2, 1]]),
        (
            O,
            vec![2, 5, 2, 3, 2, 5, 2],
            vec![vec![0, 1, 0, 1, 0, 1, 0], vec![2; 7], vec![0, 2, 0, 0, 0, 2, 0]],
        ),
        (
            O,
            vec![2, 2, 4, 1, 4, 2, 2],
            vec![vec![1; 7], vec![1, 1, 2, 0, 2, 1, 1], vec![0, 0, 1, 0, 1, 0, 0]],
        ),
        (
            O,
            vec![4, 1, 3, 4, 3, 1, 4],
            vec![vec![0; 7], vec![2, 1, 1, 2, 1, 1, 2], vec![2, 0, 2, 2, 2, 0, 2]],
        ),
        (S, vec![3, 4, 2, 4, 3], vec![vec![0; 5], vec![2, 2, 2, 2, 2], vec![1, 2, 0, 2, 1]]),
        (S, vec![2, 3, 2, 2, 2, 3, 2], vec![vec![0, 1, 0, 0, 0, 1, 0], vec![2; 7]]),
        (
            S,
            vec![3, 1, 6, 1, 1, 2, 1, 1, 6, 1, 3],
            vec![
                vec![0; 11],
                vec![2, 1, 2, 1, 1, 2, 1, 1, 2, 1, 2],
                vec![1, 0, 2, 0, 0, 0, 0, 0, 2, 0, 1],
                vec![0, 0, 2, 0, 0, 0, 0, 0, 2, 0, 0],
            ],
        ),
        (
            S,
            vec![5, 3, 5, 0, 5, 3, 5],
            vec![vec![1, 1, 1, 0, 1, 1, 1], vec![2, 2, 2, 0, 2, 2, 2], vec![2, 0, 2, 0, 2, 0, 2]],
        ),
    ]
}

/// Name, kind, vector, row labels (top row first, left to right) and arrows
/// of the reference diagrams.
type Reference = (&'static str, Kind, Vec<usize>, Vec<Vec<i32>>, Vec<(i32, i32)>);

fn reference_diagrams() -> Vec<Reference> {
    vec![
        (
            "orth_3_4_2_4_3",
            O,
            vec![3, 4, 2, 4, 3],
            vec![vec![-2, 5, 8], vec![-6, -3, 1, 4, 7], vec![-7, -4, -1, 3, 6], vec![-8, -5, 2]],
            vec![
                (5, -2), (8, 5), (-3, -6), (1, -3), (4, 1), (7, 4),
                (-4, -7), (-1, -4), (3, -1), (6, 3), (-5, -8), (2, -5),
            ],
        ),
        (
            "orth_2_5_2_3_2_5_2",
            O,
            vec![2, 5, 2, 3, 2, 5, 2],
            vec![
                vec![-4, 8],
                vec![-9, -5, -2, 1, 3, 7, 10],
                vec![-6, 0, 6],
                vec![-10, -7, -3, -1, 2, 5, 9],
                vec![-8, 4],
            ],
            vec![
                (8, -4), (-5, -9), (-2, -5), (1, -2), (3, 1), (7, 3), (10, 7),
                (0, -6), (6, 0), (-7, -10), (-3, -7), (-1, -3), (2, -1), (5, 2), (9, 5), (4, -8),
            ],
        ),
        (
            "orth_2_2_4_1_4_2_2",
            O,
            vec![2, 2, 4, 1, 4, 2, 2],
            vec![vec![4], vec![-1, 3, 6, 8], vec![-7, -5, -2, 0, 2, 5, 7], vec![-8, -6, -3, 1], vec![-4]],
            vec![
                (3, -1), (6, 3), (8, 6), (3, -6), (6, -3),
                (-5, -7), (-2, -5), (0, -2), (2, 0), (5, 2), (7, 5),
                (-6, -8), (-3, -6), (1, -3),
            ],
        ),
        (
            "orth_4_1_3_4_3_1_4",
            O,
            vec![4, 1, 3, 4, 3, 1, 4],
            vec![
                vec![-7, -3, 2, 5, 10],
                vec![-8, 1, 4, 6, 9],
                vec![-9, -6, -4, -1, 8],
                vec![-10, -5, -2, 3, 7],
            ],
            vec![
                (-3, -7), (2, -3), (5, 2), (10, 5),
                (1, -8), (4, 1), (6, 4), (9, 6), (1, -4), (4, -1),
                (-6, -9), (-4, -6), (-1, -4), (8, -1),
                (-5, -10), (-2, -5), (3, -2), (7, 3),
            ],
        ),
        (
            "symp_3_4_2_4_3",
            S,
            vec![3, 4, 2, 4, 3],
            vec![vec![-2, 5, 8], vec![-6, -3, 1, 4, 7], vec![-7, -4, -1, 3, 6], vec![-8, -5, 2]],
            vec![
                (5, -5), (8, 5), (-3, -6), (1, -3), (4, 1), (7, 4),
                (-4, -7), (-1, -4), (3, -1), (6, 3), (-5, -8), (2, -2),
            ],
        ),
        (
            "symp_2_3_2_2_2_3_2",
            S,
            vec![2, 3, 2, 2, 2, 3, 2],
            vec![vec![-7, -4, -2, 1, 3, 6, 8], vec![-5, 5], vec![-8, -6, -3, -1, 2, 4, 7]],
            vec![
                (-4, -7), (-2, -4), (1, -2), (3, 1), (6, 3), (8, 6), (5, -5),
                (-6, -8), (-3, -6), (-1, -3), (2, -1), (4, 2), (7, 4),
            ],
        ),
        (
            "symp_3_1_6_1_1_2_1_1_6_1_3",
            S,
            vec![3, 1, 6, 1, 1, 2, 1, 1, 6, 1, 3],
            vec![
                vec![-4, 9],
                vec![-5, 8, 13],
                vec![-11, -6, 1, 2, 3, 7, 10, 12],
                vec![-12, -10, -7, -3, -2, -1, 6, 11],
                vec![-13, -8, 5],
                vec![-9, 4],
            ],
            vec![
                (9, -4), (13, 8), (8, -8),
                (-6, -11), (1, -6), (2, 1), (2, -2), (3, 2), (7, 3), (10, 7), (12, 10),
                (-10, -12), (-7, -10), (-3, -7), (-2, -3), (-1, -2), (6, -1), (11, 6),
                (-8, -13), (5, -5), (4, -9),
            ],
        ),
        (
            "symp_5_3_5_0_5_3_5",
            S,
            vec![5, 3, 5, 0, 5, 3, 5],
            vec![
                vec![-9, -1, 5, 13],
                vec![-10, -6, -2, 4, 8, 12],
                vec![-11, -7, -3, 3, 7, 11],
                vec![-12, -8, -4, 2, 6, 10],
                vec![-13, -5, 1, 9],
            ],
            vec![
                (-1, -9), (5, -1), (13, 5),
                (-6, -10), (-2, -6), (4, -2), (8, 4), (12, 8),
                (-7, -11), (-3, -7), (3, -3), (7, 3), (11, 7),
                (-8, -12), (-4, -8), (2, -4), (6, 2), (10, 6),
                (-5, -13), (1, -5), (9, 1),
            ],
        ),
    ]
}

fn rows_of(dg: &LineDiagram) -> Vec<Vec<i32>> {
    dg.rows().into_iter().map(|r| dg.row_labels(r)).collect()
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

fn criterion_examples() -> Outcome {
    let mut failures = Vec::new();
    for (kind, d, pieces) in example_decompositions() {
        let d = dv(kind, &d);
        let got: Vec<Vec<usize>> = decompose(&d).iter().map(|p| p.entries().to_vec()).collect();
        if got != pieces {
            failures.push(format!("{d}: decomposition {got:?}, expected {pieces:?}"));
        }
    }
    let update = std::env::var_os("RICHARDSON_UPDATE_GOLDEN").is_some();
    for (name, kind, d, rows, arrows) in reference_diagrams() {
        let d = dv(kind, &d);
        let dg = assemble(&d).unwrap();
        if rows_of(&dg) != rows {
            failures.push(format!("{d}: rows {:?}, expected {rows:?}", rows_of(&dg)));
        }
        let mut expected = arrows.clone();
        expected.sort_unstable();
        if dg.arrows() != expected {
            failures.push(format!("{d}: arrows {:?}, expected {expected:?}", dg.arrows()));
        }
        let path = golden_path(name);
        let text = dg.render_text();
        if update {
            std::fs::write(&path, &text).unwrap();
        } else {
            match std::fs::read_to_string(&path) {
                Ok(golden) if golden == text => {}
                Ok(_) => failures.push(format!("{d}: rendering differs from {}", path.display())),
                Err(e) => failures.push(format!("{}: {e}", path.display())),
            }
        }
    }
    check(failures, "8 decompositions, 8 diagrams, 8 golden renderings".into())
}

/// Symmetric vectors with entries in `{0, 1, 2}`, nonzero outer entries and
/// total between 2 and 12.
fn small_vectors(kind: Kind) -> Vec<DimensionVector> {
    let mut out = Vec::new();
    for s in 0..=6usize {
        for code in 0..3usize.pow(s as u32 + 1) {
            let mut digits = Vec::new();
            let mut c = code;
            for _ in 0..=s {
                digits.push(c % 3);
                c /= 3;
            }
            let (centre, half) = (digits[0], &digits[1..]);
            if s > 0 && half[s - 1] == 0 {
                continue;
            }
            let mut entries: Vec<usize> = half.iter().rev().copied().collect();
            entries.push(centre);
            entries.extend(half.iter().copied());
            let total: usize = entries.iter().sum();
            if !(2..=12).contains(&total) {
                continue;
            }
            if let Ok(d) = DimensionVector::new(kind, entries) {
                out.push(d);
            }
        }
    }
    out
}

fn criterion_small_blocks() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for kind in [O, S] {
        for d in small_vectors(kind) {
            let sigma = d.count_of(2);
            let rho = d.entries().iter().sum::<usize>() - sigma;
            let all_two = rho == sigma;
            let pair = |a: usize, b: usize| Some(Partition::from_unsorted([a, b]));
            let (expected, dg) = match (kind, d.center()) {
                (O, 1) if all_ones(&d) => (Some(Partition::from_unsorted([rho])), small_diagram_orth(&d)),
                (O, 1) => continue,
                (O, 2) => (pair(rho, sigma), small_diagram_orth(&d)),
                (O, _) if all_two => (pair(rho, rho), small_diagram_orth(&d)),
                (O, _) => (pair(rho - 1, sigma + 1), small_diagram_orth(&d)),
                (S, 0) if sigma == 0 => (Some(Partition::from_unsorted([rho])), small_diagram_symp(&d)),
                (S, 0) if all_two => (pair(rho, rho), small_diagram_symp(&d)),
                (S, 0) => (pair(rho, sigma), small_diagram_symp(&d)),
                (S, 2) if all_two => (pair(rho, rho), small_diagram_symp(&d)),
                (S, _) => (pair(rho - 1, sigma + 1), small_diagram_symp(&d)),
            };
            count += 1;
            let result = dg.and_then(|dg| element_from_diagram(&dg)).and_then(|x| {
                if !x.in_g() {
                    return Err(richardson::Error::Construction("not in g".into()));
                }
                jordan_partition(&x)
            });
            match result {
                Ok(p) if Some(&p) == expected.as_ref() => {}
                Ok(p) => failures.push(format!("{d}: Jordan type {p}, expected {}", expected.unwrap())),
                Err(e) => failures.push(format!("{d}: {e}")),
            }
        }
    }
    let instances = [
        (O, vec![1, 1, 1, 2, 2, 2, 1, 1, 1], vec![9, 3]),
        (O, vec![1, 1, 1, 1, 0, 1, 1, 1, 1], vec![7, 1]),
        (S, vec![2, 2, 1, 1, 0, 1, 1, 2, 2], vec![8, 4]),
    ];
    for (kind, d, expected) in instances {
        let d = dv(kind, &d);
        let dg = match kind {
            O => small_diagram_orth(&d),
            S => small_diagram_symp(&d),
        };
        let p = jordan_partition(&element_from_diagram(&dg.unwrap()).unwrap()).unwrap();
        if p.parts() != expected {
            failures.push(format!("{d}: Jordan type {p}, expected {expected:?}"));
        }
    }
    check(failures, format!("{count} small-block vectors"))
}

fn all_ones(d: &DimensionVector) -> bool {
    d.entries().iter().all(|&e| e <= 1)
}

fn criterion_support(sweep: &Sweep) -> Outcome {
    let mut failures = sweep.errors.clone();
    for r in &sweep.reports {
        let rank = r.type_label.rank();
        if r.gamma_size != r.gamma_formula || r.gamma_formula != rank {
            failures.push(format!(
                "{}: |support| {} formula {} type rank {rank}",
                r.dimvec, r.gamma_size, r.gamma_formula
            ));
        }
        if !r.support_independent {
            failures.push(format!("{}: support weights are dependent", r.dimvec));
        }
    }
    check(failures, format!("{} supports", sweep.reports.len()))
}

fn criterion_classifier() -> Outcome {
    let mut failures = Vec::new();
    let mut matched = 0;
    for (kind, total) in sweep_totals() {
        match cross_validate(kind, total) {
            Ok(cv) if cv.is_equal() => matched += cv.matched,
            Ok(cv) => failures.push(format!(
                "{kind} N={total}: only constructed {:?}, only classified {:?}",
                cv.only_enumerated, cv.only_classified
            )),
            Err(e) => failures.push(format!("{kind} N={total}: {e}")),
        }
    }
    check(failures, format!("{matched} Richardson partitions matched"))
}

/// Prefix-sum comparison, zero padded.
fn dominated(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    (0..len).all(|k| {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        sa <= sb
    })
}

fn valid(kind: Kind, parts: &[usize]) -> bool {
    let restricted = if kind == O { 0 } else { 1 };
    parts
        .iter()
        .filter(|&&p| p % 2 == restricted)
        .all(|&p| parts.iter().filter(|&&q| q == p).count() % 2 == 0)
}

fn criterion_collapse() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for total in 1..=12 {
        let all = Partition::all_of(total);
        for kind in [O, S] {
            if kind == S && total % 2 == 1 {
                continue;
            }
            let candidates: Vec<&Partition> = all.iter().filter(|p| valid(kind, p.parts())).collect();
            for lambda in &all {
                let below: Vec<&&Partition> = candidates
                    .iter()
                    .filter(|m| dominated(m.parts(), lambda.parts()))
                    .collect();
                let maxima: Vec<&&Partition> = below
                    .iter()
                    .filter(|m| {
                        !below
                            .iter()
                            .any(|o| o.parts() != m.parts() && dominated(m.parts(), o.parts()))
                    })
                    .copied()
                    .collect();
                count += 1;
                let collapsed = lambda.collapse(kind).unwrap();
                if maxima.len() != 1 || **maxima[0] != collapsed {
                    failures.push(format!("{kind} {lambda}: collapse {collapsed}, maxima {maxima:?}"));
                }
            }
        }
    }
    check(failures, format!("{count} partitions"))
}

fn criterion_conjugation(sweep: &Sweep) -> Outcome {
    let mut failures = sweep.errors.clone();
    let mut count = 0;
    for r in &sweep.reports {
        let d = &r.dimvec;
        if d.kind() != O || d.total() % 2 == 1 {
            continue;
        }
        count += 1;
        let y = so_remark_conjugate(&r.x).unwrap();
        let pd = d.parabolic_data().conjugated_by_swap().unwrap();
        if so_remark_conjugate(&y).unwrap() != r.x {
            failures.push(format!("{d}: conjugation is not an involution"));
        }
        if !y.in_g() {
            failures.push(format!("{d}: conjugate leaves the Lie algebra"));
        }
        if jordan_partition(&y).ok().as_ref() != Some(&r.jordan_partition) {
            failures.push(format!("{d}: conjugate changes the Jordan type"));
        }
        if is_dense_in_u(&y, &pd).ok() != Some(r.dense) {
            failures.push(format!("{d}: conjugate changes density"));
        }
    }
    check(failures, format!("{count} even orthogonal vectors"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let sweep = run_sweep();
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("exhaustive Richardson sweep", Box::new(|| criterion_sweep(&sweep))),
        ("Jordan partition and centralizer oracle", Box::new(|| criterion_jordan(&sweep))),
        ("worked examples reproduced", Box::new(criterion_examples)),
        ("small-block Jordan partitions", Box::new(criterion_small_blocks)),
        ("support size, type rank and independence", Box::new(|| criterion_support(&sweep))),
        ("classifier cross-validation", Box::new(criterion_classifier)),
        ("collapse equals brute-force maximum", Box::new(criterion_collapse)),
        ("conjugation by the swap reflection", Box::new(|| criterion_conjugation(&sweep))),
    ];
    let mut all_passed = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(summary) => println!("criterion {}: PASS  {name} ({summary})", k + 1),
            Err(failures) => {
                all_passed = false;
                println!("criterion {}: FAIL  {name} ({} failures)", k + 1, failures.len());
                for f in failures.iter().take(10) {
                    println!("    {f}");
                }
            }
        }
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
