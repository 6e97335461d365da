//! Acceptance criteria. Each test prints one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p pathbetti-core --test acceptance -- --nocapture`
//! to see the report.

use std::collections::HashMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use pathbetti_core::betti::betti_hochster;
use pathbetti_core::{
    betti_closed_cycle, betti_closed_line, betti_top_degree, build_path_complex,
    build_run_complement, homology_cycle_complement, homology_run_sequence, nonzero_criterion,
    pd_reg, reduced_homology_dims, vertex_count_of_runs, BettiTable, FieldSpec, PathFamilySpec,
    RunSequence,
};

const MAX_N: usize = 12;
const TIME_BUDGET: Duration = Duration::from_secs(5 * 60);
const FIELDS: [FieldSpec; 3] = [FieldSpec::RATIONALS, FieldSpec::GF2, FieldSpec::GF32003];

fn report(criterion: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {criterion} [{name}]: PASS");
    } else {
        println!("criterion {criterion} [{name}]: FAIL");
        for f in failures {
            println!("    {f}");
        }
    }
}

/// Cycle specs with 3 <= n <= 12 and 2 <= t < n.
fn cycle_range() -> Vec<PathFamilySpec> {
    (3..=MAX_N)
        .flat_map(|n| (2..n).map(move |t| PathFamilySpec::cycle(n, t).unwrap()))
        .collect()
}

struct OracleRun {
    tables: HashMap<PathFamilySpec, BettiTable>,
    elapsed: Duration,
}

/// Oracle tables over Q for the whole cycle range, computed once.
fn rational_oracle() -> &'static OracleRun {
    static CELL: OnceLock<OracleRun> = OnceLock::new();
    CELL.get_or_init(|| {
        let start = Instant::now();
        let tables = cycle_range()
            .into_iter()
            .map(|spec| (spec, betti_hochster(&build_path_complex(spec), FieldSpec::RATIONALS).unwrap()))
            .collect();
        OracleRun { tables, elapsed: start.elapsed() }
    })
}

fn describe_diff(spec: PathFamilySpec, diff: &[(usize, usize, u64, u64)]) -> String {
    let parts: Vec<String> =
        diff.iter().map(|(i, j, a, b)| format!("β_{{{i},{j}}} closed={a} oracle={b}")).collect();
    format!("{spec}: {}", parts.join(", "))
}

#[test]
fn criterion_1_oracle_matches_closed_form() {
    let start = Instant::now();
    let oracle = rational_oracle();
    let mut failures = Vec::new();
    for spec in cycle_range() {
        let closed = betti_closed_cycle(spec).unwrap();
        let diff = closed.diff(&oracle.tables[&spec]);
        if !diff.is_empty() {
            failures.push(describe_diff(spec, &diff));
        }
    }
    let elapsed = start.elapsed().max(oracle.elapsed);
    if elapsed > TIME_BUDGET {
        failures.push(format!("runtime {elapsed:?} exceeds {TIME_BUDGET:?}"));
    }
    report(1, "oracle/closed-form equivalence, 3<=n<=12", &failures);
    println!("    oracle time {:?}", oracle.elapsed);
    assert!(failures.is_empty());
}

#[test]
fn criterion_2_top_degree_values() {
    let cases = [((6, 2), (4, 2)), ((7, 4), (3, 1)), ((8, 3), (4, 3))];
    let mut failures = Vec::new();
    for ((n, t), (i, value)) in cases {
        let spec = PathFamilySpec::cycle(n, t).unwrap();
        let formula = betti_top_degree(spec).unwrap();
        let oracle = rational_oracle().tables[&spec].get(i, n);
        let others: Vec<usize> = rational_oracle().tables[&spec]
            .iter()
            .filter(|e| e.j == n && e.i != i)
            .map(|e| e.i)
            .collect();
        if formula != (i, value) || oracle != value || !others.is_empty() {
            failures.push(format!(
                "{spec}: expected β_{{{i},{n}}}={value}, formula {formula:?}, oracle {oracle}, stray degree-n entries at i={others:?}"
            ));
        }
    }
    report(2, "top-degree Betti numbers", &failures);
    assert!(failures.is_empty());
}

#[test]
fn criterion_3_pd_reg() {
    let mut failures = Vec::new();
    for spec in cycle_range() {
        let table = &rational_oracle().tables[&spec];
        let observed = (table.projective_dimension(), table.regularity());
        let formula = pd_reg(spec).unwrap();
        if formula != observed {
            failures.push(format!("{spec}: formula {formula:?}, oracle {observed:?}"));
        }
    }
    let c6 = PathFamilySpec::cycle(6, 2).unwrap();
    if pd_reg(c6).unwrap() != (4, 2) {
        failures.push(format!("{c6}: expected (pd, reg) = (4, 2)"));
    }
    report(3, "pd/reg against oracle", &failures);
    assert!(failures.is_empty());
}

/// All run sequences (lengths non-increasing) with vertex count <= `budget`.
fn run_sequences(t: usize, budget: usize) -> Vec<RunSequence> {
    fn extend(t: usize, budget: usize, max_len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for s in 1..=max_len {
            let cost = s + t - 1;
            if cost <= budget {
                prefix.push(s);
                extend(t, budget - cost, s, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(t, budget, budget, &mut Vec::new(), &mut out);
    out.into_iter().map(|v| RunSequence::new(v).unwrap()).collect()
}

#[test]
fn criterion_4_run_sequence_homology() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for t in 2..=4 {
        for seq in run_sequences(t, 14) {
            assert!(vertex_count_of_runs(&seq, t) <= 14);
            let explicit = reduced_homology_dims(&build_run_complement(&seq, t).unwrap(), FieldSpec::RATIONALS);
            let closed = homology_run_sequence(t, &seq);
            let eligible = seq.is_eligible_shaped(t);
            let ok = explicit == closed.to_vector()
                && (eligible || explicit.is_zero())
                && (!eligible || (closed.dimension == 1 && explicit.nonzero().count() == 1));
            if !ok {
                failures.push(format!("t={t} {seq}: explicit {explicit}, closed {closed}"));
            }
            checked += 1;
        }
    }
    report(4, "run-sequence homology, vertex count <= 14, t in 2..=4", &failures);
    println!("    {checked} run sequences checked");
    assert!(failures.is_empty());
}

fn complement_failures(field: FieldSpec) -> Vec<String> {
    let mut failures = Vec::new();
    for n in 3..=MAX_N {
        for t in 2..=n {
            let spec = PathFamilySpec::cycle(n, t).unwrap();
            let cx = build_path_complex(spec);
            let explicit = reduced_homology_dims(&cx.complement(cx.ambient()).unwrap(), field);
            let closed = homology_cycle_complement(spec).unwrap();
            if explicit.nonzero().count() != 1 || explicit != closed.to_vector() {
                failures.push(format!("{spec} over {field}: explicit {explicit}, closed {closed}"));
            }
        }
    }
    failures
}

#[test]
fn criterion_5_full_complement_homology() {
    let failures = complement_failures(FieldSpec::RATIONALS);
    report(5, "full-complement homology, 2<=t<=n<=12", &failures);
    assert!(failures.is_empty());
}

#[test]
fn criterion_6_vanishing_soundness() {
    let mut failures = Vec::new();
    for spec in cycle_range() {
        for e in rational_oracle().tables[&spec].iter() {
            if e.j > spec.t() * e.i {
                failures.push(format!("{spec}: β_{{{},{}}}={} violates j <= t·i", e.i, e.j, e.value));
            }
            if e.j < spec.n() && !nonzero_criterion(spec, e.i, e.j).unwrap() {
                failures.push(format!("{spec}: β_{{{},{}}}={} violates the vanishing conditions", e.i, e.j, e.value));
            }
        }
    }
    report(6, "vanishing soundness", &failures);
    assert!(failures.is_empty());
}

#[test]
fn criterion_7_field_independence() {
    let mut failures = Vec::new();
    for field in [FieldSpec::GF2, FieldSpec::GF32003] {
        for spec in cycle_range() {
            let table = betti_hochster(&build_path_complex(spec), field).unwrap();
            let closed = betti_closed_cycle(spec).unwrap();
            let reference = &rational_oracle().tables[&spec];
            if !table.same_values(reference) {
                failures.push(format!("{spec} over {field}: {:?} differs from QQ", table.diff(reference)));
            }
            if !table.same_values(&closed) {
                failures.push(describe_diff(spec, &closed.diff(&table)) + &format!(" over {field}"));
            }
        }
        failures.extend(complement_failures(field));
    }
    report(7, "field independence over GF(2), GF(32003)", &failures);
    assert!(failures.is_empty());
}

#[test]
fn criterion_8_boundary_cases() {
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let mut cases: Vec<PathFamilySpec> =
        vec![PathFamilySpec::cycle(3, 2).unwrap(), PathFamilySpec::cycle(4, 3).unwrap()];
    cases.extend((2..=MAX_N).map(|t| PathFamilySpec::line(t, t).unwrap()));
    for spec in cases {
        let cx = build_path_complex(spec);
        for field in FIELDS {
            let oracle = betti_hochster(&cx, field).unwrap();
            let closed = match spec.kind() {
                pathbetti_core::PathKind::Cycle => betti_closed_cycle(spec).unwrap(),
                pathbetti_core::PathKind::Line => betti_closed_line(spec).unwrap(),
            };
            let diff = closed.diff(&oracle);
            if diff.is_empty() {
                if field == FieldSpec::RATIONALS {
                    let entries: Vec<String> =
                        oracle.iter().map(|e| format!("β_{{{},{}}}={}", e.i, e.j, e.value)).collect();
                    notes.push(format!("{spec}: agree [{}]", entries.join(", ")));
                }
            } else {
                notes.push(format!("{spec} over {field}: DISCREPANCY {}", describe_diff(spec, &diff)));
            }
            // Only an oracle violating the vanishing invariants fails the build.
            for e in oracle.iter() {
                let bad_range = spec.kind() == pathbetti_core::PathKind::Cycle
                    && e.j < spec.n()
                    && !nonzero_criterion(spec, e.i, e.j).unwrap();
                if e.j > spec.t() * e.i || bad_range {
                    failures.push(format!("{spec} over {field}: oracle entry β_{{{},{}}} violates invariant 6", e.i, e.j));
                }
            }
        }
    }
    report(8, "boundary-case pinning", &failures);
    for n in &notes {
        println!("    {n}");
    }
    assert!(failures.is_empty());
}
