//! Graded Betti numbers of `R / I_t(G)` for cycles and lines.
//!
//! [`betti_hochster`] is the brute-force reference: for every vertex subset
//! `Y` whose induced subcollection `Γ` has support exactly `Y`, it adds
//! `dim H̃_{i-2}(Γ^c_Y)` to `β_{i,|Y|}`. Subsets with a smaller support
//! give a cone and contribute nothing.
//!
//! The closed route combines the top-degree formula (degree `n`) with a count
//! of eligible subcollections in every lower degree.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::homology::{reduced_homology_dims, FieldSpec, HomologyVector};
use crate::path_complex::{PathFamilySpec, PathKind, Placements, RunSequence};
use crate::simplicial::{SimplicialComplex, VertexSet};

/// Largest ambient vertex count the oracle accepts by default (2^22 subsets).
pub const DEFAULT_MAX_SUBSET_BITS: u32 = 22;

/// How an entry was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    ClosedForm,
    EligibleCount,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::ClosedForm => "closed_form",
            Method::EligibleCount => "eligible_count",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
    pub method: Method,
}

/// Sparse table of nonzero `β_{i,j}` with `i >= 1`.
///
/// `β_{0,0} = 1` is implicit. Absent entries are zero. Iteration is by
/// ascending `(j, i)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), (u64, Method)>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `value` to `β_{i,j}`. Zero values are ignored.
    pub fn add(&mut self, i: usize, j: usize, value: u64, method: Method) {
        if value == 0 {
            return;
        }
        self.entries.entry((j, i)).and_modify(|e| e.0 += value).or_insert((value, method));
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(j, i)).map_or(0, |e| e.0)
    }

    pub fn method(&self, i: usize, j: usize) -> Option<Method> {
        self.entries.get(&(j, i)).map(|e| e.1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries.iter().map(|(&(j, i), &(value, method))| BettiEntry { i, j, value, method })
    }

    /// Entry-wise sum; the method of the receiver wins on shared keys.
    pub fn merge(mut self, other: BettiTable) -> BettiTable {
        for e in other.iter() {
            self.add(e.i, e.j, e.value, e.method);
        }
        self
    }

    /// `(i, j, self, other)` for every key where the values differ.
    pub fn diff(&self, other: &BettiTable) -> Vec<(usize, usize, u64, u64)> {
        let mut keys: Vec<(usize, usize)> =
            self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(j, i)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some((i, j, a, b))
            })
            .collect()
    }

    /// Equal values everywhere, ignoring methods.
    pub fn same_values(&self, other: &BettiTable) -> bool {
        self.diff(other).is_empty()
    }

    /// Largest `i` with a nonzero entry (0 for an empty table).
    pub fn projective_dimension(&self) -> usize {
        self.iter().map(|e| e.i).max().unwrap_or(0)
    }

    /// Largest `j - i` over nonzero entries (0 for an empty table).
    pub fn regularity(&self) -> usize {
        self.iter().map(|e| e.j - e.i).max().unwrap_or(0)
    }
}

/// At most one nonzero reduced homology group, and its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HomologySummary {
    pub nonzero_degree: Option<i32>,
    pub dimension: usize,
}

impl HomologySummary {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(degree: i32, dimension: usize) -> Self {
        assert!(dimension >= 1, "a nonzero summary needs positive dimension");
        HomologySummary { nonzero_degree: Some(degree), dimension }
    }

    pub fn to_vector(self) -> HomologyVector {
        HomologyVector::from_pairs(self.nonzero_degree.map(|d| (d, self.dimension)))
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_vector().fmt(f)
    }
}

pub fn betti_hochster(cx: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    betti_hochster_with_cap(cx, field, DEFAULT_MAX_SUBSET_BITS)
}

/// Hochster's formula by exhaustive subset enumeration, refusing complexes
/// with more than `max_bits` ambient vertices.
pub fn betti_hochster_with_cap(
    cx: &SimplicialComplex,
    field: FieldSpec,
    max_bits: u32,
) -> Result<BettiTable> {
    let ambient: Vec<u64> = cx.ambient().iter().map(|v| 1u64 << (v - 1)).collect();
    let m = ambient.len() as u32;
    if m > max_bits.min(63) {
        return Err(Error::Resource(format!(
            "Hochster enumeration over {m} vertices exceeds the cap of {max_bits}"
        )));
    }
    let total: u64 = 1 << m;
    let chunk: u64 = 1 << m.saturating_sub(6).min(12);
    let chunks = total.div_ceil(chunk);
    let facets = cx.facets();

    let table = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut part = BettiTable::new();
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let y = ambient
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask >> k & 1 == 1)
                    .fold(0u64, |acc, (_, &b)| acc | b);
                let y = VertexSet::from_bits(y);
                let inside: Vec<VertexSet> =
                    facets.iter().copied().filter(|f| f.is_subset(y)).collect();
                if inside.is_empty() {
                    continue;
                }
                let support = inside.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
                if support != y {
                    continue;
                }
                let comp = SimplicialComplex::new(y, inside.iter().map(|f| y.difference(*f)))
                    .expect("complements lie in Y");
                for (deg, dim) in reduced_homology_dims(&comp, field).nonzero() {
                    part.add((deg + 2) as usize, y.len(), dim as u64, Method::Oracle);
                }
            }
            part
        })
        .reduce(BettiTable::new, BettiTable::merge);
    Ok(table)
}

/// Reduced homology of the run-sequence complement, in closed form.
///
/// Zero unless every run length is 1 or 2 mod `t + 1`; otherwise a single
/// `K` in degree `2(P+Q) + 2β + α - 2`.
pub fn homology_run_sequence(t: usize, seq: &RunSequence) -> HomologySummary {
    match seq.aggregates(t) {
        Some(agg) => HomologySummary::single(agg.homological_degree() as i32 - 2, 1),
        None => HomologySummary::zero(),
    }
}

/// Reduced homology of `Δ_t(C_n)^c` over all `n` vertices, in closed form.
pub fn homology_cycle_complement(spec: PathFamilySpec) -> Result<HomologySummary> {
    require_cycle(spec)?;
    let (p, d, t) = (spec.p() as i32, spec.d(), spec.t());
    Ok(if d == 0 {
        HomologySummary::single(2 * p - 2, t)
    } else {
        HomologySummary::single(2 * p - 1, 1)
    })
}

/// The unique nonzero `β_{i,n}` as `(i, value)`.
pub fn betti_top_degree(spec: PathFamilySpec) -> Result<(usize, u64)> {
    require_cycle(spec)?;
    let p = spec.p();
    Ok(if spec.d() == 0 { (2 * p, spec.t() as u64) } else { (2 * p + 1, 1) })
}

/// Number of `(i, j)`-eligible subcollections of `Δ_t(C_n)`, `i <= j < n`.
pub fn count_eligible(spec: PathFamilySpec, i: usize, j: usize) -> Result<u64> {
    require_cycle(spec)?;
    check_lower_degree(spec, i, j)?;
    if spec.t() == spec.n() {
        return Ok(0);
    }
    let t = spec.t();
    let count = Placements::new(spec)?
        .filter(|pl| {
            pl.sequence().aggregates(t).is_some_and(|a| {
                a.homological_degree() == i && a.internal_degree(t) == j
            })
        })
        .count();
    Ok(count as u64)
}

/// Counts of eligible subcollections keyed by `(i, j)`, in one pass over
/// all placements on the cycle. `keep` filters placements by their runs.
fn eligible_counts_where(
    spec: PathFamilySpec,
    keep: impl Fn(&[(usize, usize)]) -> bool,
) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut counts = BTreeMap::new();
    if spec.t() == spec.n() {
        return Ok(counts);
    }
    let t = spec.t();
    for pl in Placements::new(spec)? {
        if !keep(pl.runs()) {
            continue;
        }
        if let Some(a) = pl.sequence().aggregates(t) {
            *counts.entry((a.homological_degree(), a.internal_degree(t))).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

/// Necessary conditions for `β_{i,j} != 0`, stated for `i <= j < n`.
///
/// `false` guarantees the Betti number vanishes in that range. The
/// conditions are evaluated as-is for any other `(i, j)`.
pub fn nonzero_criterion(spec: PathFamilySpec, i: usize, j: usize) -> Result<bool> {
    require_cycle(spec)?;
    let (t, p, d) = (spec.t(), spec.p(), spec.d());
    let degree_bound = j <= i * t;
    let reg_bound = j as i64 - i as i64 <= ((t - 1) * p) as i64;
    let pd_bound = if d == 0 { i < 2 * p } else { i <= 2 * p + 1 };
    Ok(degree_bound && reg_bound && pd_bound)
}

/// Full table for the cycle from the closed forms.
pub fn betti_closed_cycle(spec: PathFamilySpec) -> Result<BettiTable> {
    require_cycle(spec)?;
    let n = spec.n();
    let counts = eligible_counts_where(spec, |_| true)?;
    let mut table = BettiTable::new();
    for j in 1..n {
        for i in 1..=j {
            if !nonzero_criterion(spec, i, j)? {
                continue;
            }
            if let Some(&c) = counts.get(&(i, j)) {
                table.add(i, j, c, Method::EligibleCount);
            }
        }
    }
    let (i, value) = betti_top_degree(spec)?;
    table.add(i, n, value, Method::ClosedForm);
    Ok(table)
}

/// Full table for the line, counting eligible subcollections of `Δ_t(L_n)`
/// embedded in `Δ_t(C_{n+t+1})`.
pub fn betti_closed_line(spec: PathFamilySpec) -> Result<BettiTable> {
    betti_closed_line_embedded(spec, spec.n() + spec.t() + 1)
}

/// As [`betti_closed_line`], embedding the line into a cycle on `m` vertices.
pub fn betti_closed_line_embedded(spec: PathFamilySpec, m: usize) -> Result<BettiTable> {
    if spec.kind() != PathKind::Line {
        return Err(domain!("expected a line, got {spec}"));
    }
    if m <= spec.n() + spec.t() {
        return Err(domain!("embedding cycle on {m} vertices is too small for {spec}"));
    }
    let cycle = PathFamilySpec::cycle(m, spec.t())?;
    let last = spec.facet_count();
    let counts = eligible_counts_where(cycle, |runs| runs.iter().all(|&(a, s)| a + s - 1 <= last))?;
    let mut table = BettiTable::new();
    for ((i, j), c) in counts {
        table.add(i, j, c, Method::EligibleCount);
    }
    Ok(table)
}

/// `(pd, reg)` of `R / I_t(C_n)`.
pub fn pd_reg(spec: PathFamilySpec) -> Result<(usize, usize)> {
    require_cycle(spec)?;
    let (t, p, d) = (spec.t(), spec.p(), spec.d());
    Ok(if d == 0 { (2 * p, (t - 1) * p) } else { (2 * p + 1, (t - 1) * p + d - 1) })
}

fn require_cycle(spec: PathFamilySpec) -> Result<()> {
    if spec.kind() != PathKind::Cycle {
        return Err(domain!("expected a cycle, got {spec}"));
    }
    Ok(())
}

fn check_lower_degree(spec: PathFamilySpec, i: usize, j: usize) -> Result<()> {
    if j >= spec.n() {
        return Err(domain!("degree j = {j} must be below n = {}; use the top-degree formula", spec.n()));
    }
    if i > j {
        return Err(domain!("homological degree {i} exceeds internal degree {j}"));
    }
    Ok(())
}
