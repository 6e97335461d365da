//! Path complexes of cycles and lines, and their decomposition into runs.
//!
//! On the cycle `C_n` the facets carry the standard labeling
//! `F_i = {x_i, ..., x_{i+t-1}}` (indices mod n). A *run* of length `s` is a
//! block of `s` consecutive facets; it spans `s + t - 1` consecutive vertices.
//! Every proper induced subcollection is a disjoint union of runs whose
//! vertex blocks are separated by at least one vertex.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::simplicial::{Face, SimplicialComplex, Vertex, VertexSet, MAX_VERTEX};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    Cycle,
    Line,
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathKind::Cycle => "cycle",
            PathKind::Line => "line",
        })
    }
}

impl std::str::FromStr for PathKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" => Ok(PathKind::Cycle),
            "line" => Ok(PathKind::Line),
            _ => Err(domain!("unknown path kind {s:?}")),
        }
    }
}

/// `Δ_t(C_n)` or `Δ_t(L_n)`, with `n = (t+1)p + d`, `0 <= d <= t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathFamilySpec {
    kind: PathKind,
    n: usize,
    t: usize,
}

impl PathFamilySpec {
    pub fn new(kind: PathKind, n: usize, t: usize) -> Result<Self> {
        if t < 2 || t > n {
            return Err(domain!("path length t = {t} must satisfy 2 <= t <= n = {n}"));
        }
        if kind == PathKind::Cycle && n < 3 {
            return Err(domain!("a cycle needs at least 3 vertices, got {n}"));
        }
        if n > MAX_VERTEX as usize {
            return Err(domain!("n = {n} exceeds the supported {MAX_VERTEX} vertices"));
        }
        Ok(PathFamilySpec { kind, n, t })
    }

    pub fn cycle(n: usize, t: usize) -> Result<Self> {
        Self::new(PathKind::Cycle, n, t)
    }

    pub fn line(n: usize, t: usize) -> Result<Self> {
        Self::new(PathKind::Line, n, t)
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Quotient of `n` by `t + 1`.
    pub fn p(&self) -> usize {
        self.n / (self.t + 1)
    }

    /// Remainder of `n` by `t + 1`; lies in `0..=t`.
    pub fn d(&self) -> usize {
        self.n % (self.t + 1)
    }

    /// Number of facets of the complex.
    pub fn facet_count(&self) -> usize {
        match self.kind {
            PathKind::Cycle if self.t == self.n => 1,
            PathKind::Cycle => self.n,
            PathKind::Line => self.n - self.t + 1,
        }
    }

    /// Facet `F_i` of the standard labeling (1-based `i`).
    pub fn facet(&self, i: usize) -> Face {
        let (n, t) = (self.n, self.t);
        let verts = (0..t).map(|k| match self.kind {
            PathKind::Cycle => ((i - 1 + k) % n + 1) as Vertex,
            PathKind::Line => (i + k) as Vertex,
        });
        VertexSet::new(verts).expect("spec bounds keep vertices in range")
    }

    fn ambient(&self) -> VertexSet {
        VertexSet::first_n(self.n as u32).expect("n is bounded by MAX_VERTEX")
    }
}

impl fmt::Display for PathFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, t={})", self.kind, self.n, self.t)
    }
}

pub fn build_path_complex(spec: PathFamilySpec) -> SimplicialComplex {
    let facets = (1..=spec.facet_count()).map(|i| spec.facet(i));
    SimplicialComplex::new(spec.ambient(), facets).expect("facets lie in 1..=n")
}

/// Aggregates of an eligible-shaped run sequence.
///
/// Runs have lengths `(t+1)p_k + 1` (`alpha` of them, `P = Σ p_k`) and
/// `(t+1)q_k + 2` (`beta` of them, `Q = Σ q_k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RunAggregates {
    pub p_sum: usize,
    pub q_sum: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl RunAggregates {
    /// Homological degree `i = 2(P+Q) + 2β + α` of the unique Betti contribution.
    pub fn homological_degree(&self) -> usize {
        2 * (self.p_sum + self.q_sum) + 2 * self.beta + self.alpha
    }

    /// Internal degree `j = (t+1)(P+Q) + t(α+β) + β`, the vertex count.
    pub fn internal_degree(&self, t: usize) -> usize {
        (t + 1) * (self.p_sum + self.q_sum) + t * (self.alpha + self.beta) + self.beta
    }
}

/// Lengths `s_1, ..., s_r` of a disjoint union of runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RunSequence {
    lengths: Vec<usize>,
}

impl RunSequence {
    pub fn new(lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(domain!("a run sequence needs at least one run"));
        }
        if lengths.contains(&0) {
            return Err(domain!("run lengths must be positive"));
        }
        Ok(RunSequence { lengths })
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// `(p_j, d_j)` with `s_j = (t+1)p_j + d_j`, `0 <= d_j <= t`.
    pub fn residues(&self, t: usize) -> Vec<(usize, usize)> {
        self.lengths.iter().map(|&s| (s / (t + 1), s % (t + 1))).collect()
    }

    pub fn is_eligible_shaped(&self, t: usize) -> bool {
        self.residues(t).iter().all(|&(_, d)| d == 1 || d == 2)
    }

    /// `None` unless every residue is 1 or 2.
    pub fn aggregates(&self, t: usize) -> Option<RunAggregates> {
        let mut agg = RunAggregates::default();
        for (p, d) in self.residues(t) {
            match d {
                1 => {
                    agg.alpha += 1;
                    agg.p_sum += p;
                }
                2 => {
                    agg.beta += 1;
                    agg.q_sum += p;
                }
                _ => return None,
            }
        }
        Some(agg)
    }
}

impl fmt::Display for RunSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(ToString::to_string).collect();
        write!(f, "E({})", parts.join(","))
    }
}

/// `Σ_j (s_j + t - 1)`.
pub fn vertex_count_of_runs(seq: &RunSequence, t: usize) -> usize {
    seq.lengths.iter().map(|&s| s + t - 1).sum()
}

/// The complement, within its own vertex set, of disjoint runs of the given
/// lengths placed on fresh consecutive vertex blocks.
pub fn build_run_complement(seq: &RunSequence, t: usize) -> Result<SimplicialComplex> {
    let total = vertex_count_of_runs(seq, t);
    if total > MAX_VERTEX as usize {
        return Err(Error::Resource(format!("{seq} needs {total} vertices, more than {MAX_VERTEX}")));
    }
    let mut facets = Vec::new();
    let mut offset = 0usize;
    for &s in &seq.lengths {
        for i in 0..s {
            let lo = (offset + i + 1) as Vertex;
            facets.push(VertexSet::range(lo, lo + t as Vertex - 1)?);
        }
        offset += s + t - 1;
    }
    let support = VertexSet::first_n(total as u32)?;
    SimplicialComplex::new(support, facets)?.complement(support)
}

/// Runs on the standard labeling as `(start facet, length)` pairs sorted by start.
///
/// On a cycle, the last run may wrap past facet `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RunPlacement {
    spec: PathFamilySpec,
    runs: Vec<(usize, usize)>,
}

impl RunPlacement {
    /// Validates indices and that the runs form an induced subcollection.
    pub fn new(spec: PathFamilySpec, mut runs: Vec<(usize, usize)>) -> Result<Self> {
        runs.sort_unstable();
        let nf = spec.facet_count();
        for &(a, s) in &runs {
            if a == 0 || a > nf || s == 0 {
                return Err(domain!("run ({a}, {s}) is out of range for {spec}"));
            }
            if spec.kind == PathKind::Line && a + s - 1 > nf {
                return Err(domain!("run ({a}, {s}) runs past the end of {spec}"));
            }
        }
        let placement = RunPlacement { spec, runs };
        if !placement.has_facet_gaps() {
            return Err(domain!("runs {:?} are not separated by {} facets", placement.runs, spec.t));
        }
        Ok(placement)
    }

    pub fn spec(&self) -> PathFamilySpec {
        self.spec
    }

    pub fn runs(&self) -> &[(usize, usize)] {
        &self.runs
    }

    /// Lengths, sorted descending.
    pub fn sequence(&self) -> RunSequence {
        let mut lengths: Vec<usize> = self.runs.iter().map(|r| r.1).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        RunSequence { lengths }
    }

    /// Facet indices covered, in run order.
    pub fn facet_indices(&self) -> Vec<usize> {
        let n = self.spec.n;
        self.runs
            .iter()
            .flat_map(|&(a, s)| (a..a + s).map(move |i| (i - 1) % n + 1))
            .collect()
    }

    /// Vertex block `x_a, ..., x_{a+s+t-2}` of one run.
    fn block(&self, (a, s): (usize, usize)) -> VertexSet {
        let n = self.spec.n;
        let verts = (a..a + s + self.spec.t - 1).map(|v| match self.spec.kind {
            PathKind::Cycle => ((v - 1) % n + 1) as Vertex,
            PathKind::Line => v as Vertex,
        });
        VertexSet::new(verts).expect("vertices bounded by n")
    }

    pub fn vertex_support(&self) -> VertexSet {
        self.runs.iter().fold(VertexSet::EMPTY, |acc, &r| acc.union(self.block(r)))
    }

    /// The complex formed by the covered facets.
    pub fn subcollection(&self) -> SimplicialComplex {
        let facets: Vec<Face> = self.facet_indices().into_iter().map(|i| self.spec.facet(i)).collect();
        let support = self.vertex_support();
        SimplicialComplex::new(support, facets).expect("facets lie in their support")
    }

    /// At least `t` uncovered facets between consecutive runs (cyclically on a cycle).
    pub fn has_facet_gaps(&self) -> bool {
        let t = self.spec.t;
        let adjacent_ok = self.runs.windows(2).all(|w| w[1].0 >= w[0].0 + w[0].1 + t);
        match (self.spec.kind, self.runs.first(), self.runs.last()) {
            (PathKind::Cycle, Some(&(first, _)), Some(&(a, s))) => {
                adjacent_ok && a + s + t <= first + self.spec.n
            }
            _ => adjacent_ok,
        }
    }

    /// Vertex blocks pairwise separated by at least one vertex and not
    /// covering the whole cycle.
    pub fn has_vertex_gaps(&self) -> bool {
        let n = self.spec.n;
        let blocks: Vec<VertexSet> = self.runs.iter().map(|&r| self.block(r)).collect();
        let widen = |b: VertexSet| -> VertexSet {
            let shift = |v: Vertex, up: bool| -> Option<Vertex> {
                match self.spec.kind {
                    PathKind::Cycle => Some(if up { v % n as Vertex + 1 } else { (v + n as Vertex - 2) % n as Vertex + 1 }),
                    PathKind::Line if up => (v < n as Vertex).then_some(v + 1),
                    PathKind::Line => (v > 1).then_some(v - 1),
                }
            };
            b.iter()
                .flat_map(|v| [Some(v), shift(v, true), shift(v, false)])
                .flatten()
                .fold(VertexSet::EMPTY, |acc, v| acc.with(v).expect("in range"))
        };
        let sizes_ok = self.runs.iter().all(|&(_, s)| s + self.spec.t - 1 < n)
            && blocks.iter().map(|b| b.len()).sum::<usize>() == self.runs.iter().map(|r| r.1 + self.spec.t - 1).sum::<usize>();
        sizes_ok
            && (0..blocks.len()).all(|i| {
                (i + 1..blocks.len()).all(|j| widen(blocks[i]).intersection(blocks[j]).is_empty())
            })
    }

    /// Shifts every run by `k` facets around the cycle.
    pub fn rotate(&self, k: usize) -> RunPlacement {
        assert_eq!(self.spec.kind, PathKind::Cycle, "only cycle placements rotate");
        let n = self.spec.n;
        let mut runs: Vec<(usize, usize)> =
            self.runs.iter().map(|&(a, s)| ((a - 1 + k) % n + 1, s)).collect();
        runs.sort_unstable();
        RunPlacement { spec: self.spec, runs }
    }
}

/// Splits a proper induced subcollection into runs.
pub fn run_decomposition(
    gamma: &SimplicialComplex,
    spec: PathFamilySpec,
) -> Result<(RunSequence, RunPlacement)> {
    if gamma.is_void() {
        return Err(domain!("cannot decompose the void complex"));
    }
    let nf = spec.facet_count();
    let index: HashMap<Face, usize> = (1..=nf).map(|i| (spec.facet(i), i)).collect();
    let mut ids: Vec<usize> = Vec::with_capacity(gamma.facets().len());
    for f in gamma.facets() {
        match index.get(f) {
            Some(&i) => ids.push(i),
            None => return Err(domain!("{f} is not a facet of {spec}")),
        }
    }
    if spec.kind == PathKind::Cycle && ids.len() == nf {
        return Err(domain!("the whole {spec} is not a proper subcollection"));
    }
    let mut runs = Vec::new();
    for comp in gamma.connected_components()? {
        let mut members: Vec<usize> = comp.facets().iter().map(|f| index[f]).collect();
        members.sort_unstable();
        let is_member = |i: usize| members.binary_search(&i).is_ok();
        let prev = |i: usize| if i == 1 { nf } else { i - 1 };
        let start = match spec.kind {
            PathKind::Cycle => members.iter().copied().find(|&i| !is_member(prev(i))),
            PathKind::Line => members.first().copied(),
        }
        .ok_or_else(|| Error::Structural(format!("component {comp:?} has no start")))?;
        let len = members.len();
        let consecutive = (0..len).all(|k| is_member(match spec.kind {
            PathKind::Cycle => (start - 1 + k) % nf + 1,
            PathKind::Line => start + k,
        }));
        if !consecutive {
            return Err(Error::Structural(format!("component {comp:?} is not a run of {spec}")));
        }
        runs.push((start, len));
    }
    let placement = RunPlacement::new(spec, runs)
        .map_err(|e| Error::Structural(format!("runs are not induced: {e}")))?;
    Ok((placement.sequence(), placement))
}

/// Every induced placement of disjoint runs on the cycle, each exactly once.
///
/// Placements are produced depth-first: starts strictly increase, each run
/// begins at least `t` facets after the previous one ends, and the last run
/// ends at least `t` facets before the first one (going around).
#[derive(Debug, Clone)]
pub struct Placements {
    spec: PathFamilySpec,
    runs: Vec<(usize, usize)>,
    started: bool,
}

impl Placements {
    pub fn new(spec: PathFamilySpec) -> Result<Self> {
        if spec.kind != PathKind::Cycle || spec.t >= spec.n {
            return Err(domain!("placements are enumerated on cycles with t < n, got {spec}"));
        }
        Ok(Placements { spec, runs: Vec::new(), started: false })
    }

    fn fits(&self, k: usize, a: usize, s: usize) -> bool {
        let (n, t) = (self.spec.n, self.spec.t);
        if k == 0 {
            a <= n && s + t <= n
        } else {
            a <= n && a + s + t <= self.runs[0].0 + n
        }
    }
}

impl Iterator for Placements {
    type Item = RunPlacement;

    fn next(&mut self) -> Option<RunPlacement> {
        let t = self.spec.t;
        if !self.started {
            self.started = true;
            self.runs.push((1, 1));
            return Some(RunPlacement { spec: self.spec, runs: self.runs.clone() });
        }
        if self.runs.is_empty() {
            return None;
        }
        let &(a, s) = self.runs.last().expect("nonempty");
        let b = a + s + t;
        if self.fits(self.runs.len(), b, 1) {
            self.runs.push((b, 1));
            return Some(RunPlacement { spec: self.spec, runs: self.runs.clone() });
        }
        while let Some(&(a, s)) = self.runs.last() {
            let k = self.runs.len() - 1;
            if self.fits(k, a, s + 1) {
                self.runs[k].1 += 1;
            } else if self.fits(k, a + 1, 1) {
                self.runs[k] = (a + 1, 1);
            } else {
                self.runs.pop();
                continue;
            }
            return Some(RunPlacement { spec: self.spec, runs: self.runs.clone() });
        }
        None
    }
}

/// Placements on the cycle whose run sequence satisfies `accept`.
pub fn enumerate_placements<F>(
    spec: PathFamilySpec,
    mut accept: F,
) -> Result<impl Iterator<Item = RunPlacement>>
where
    F: FnMut(&RunSequence) -> bool,
{
    Ok(Placements::new(spec)?.filter(move |pl| accept(&pl.sequence())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[Vertex]) -> VertexSet {
        VertexSet::new(v.iter().copied()).unwrap()
    }

    fn seq(v: &[usize]) -> RunSequence {
        RunSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn spec_validation_and_residues() {
        assert!(PathFamilySpec::cycle(5, 6).is_err());
        assert!(PathFamilySpec::cycle(5, 1).is_err());
        assert!(PathFamilySpec::line(2, 2).is_ok());
        assert!(PathFamilySpec::cycle(2, 2).is_err());
        let s = PathFamilySpec::cycle(7, 4).unwrap();
        assert_eq!((s.p(), s.d()), (1, 2));
        let s = PathFamilySpec::cycle(6, 2).unwrap();
        assert_eq!((s.p(), s.d()), (2, 0));
        // n ≡ t (mod t+1) gives d = t.
        let s = PathFamilySpec::cycle(9, 4).unwrap();
        assert_eq!((s.p(), s.d()), (1, 4));
        let s = PathFamilySpec::cycle(4, 4).unwrap();
        assert_eq!((s.p(), s.d()), (0, 4));
    }

    #[test]
    fn build_examples() {
        let c = build_path_complex(PathFamilySpec::cycle(7, 4).unwrap());
        let expected = [
            [1, 2, 3, 4], [2, 3, 4, 5], [3, 4, 5, 6], [4, 5, 6, 7],
            [5, 6, 7, 1], [6, 7, 1, 2], [7, 1, 2, 3],
        ];
        assert_eq!(c.facets().len(), 7);
        for f in expected {
            assert!(c.facets().contains(&vs(&f)));
        }
        let l = build_path_complex(PathFamilySpec::line(5, 2).unwrap());
        assert_eq!(l.facets(), &[vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4]), vs(&[4, 5])]);
        let s = build_path_complex(PathFamilySpec::cycle(3, 3).unwrap());
        assert_eq!(s.facets(), &[vs(&[1, 2, 3])]);
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(vertex_count_of_runs(&seq(&[1]), 4), 4);
        assert_eq!(vertex_count_of_runs(&seq(&[2]), 2), 3);
        assert_eq!(vertex_count_of_runs(&seq(&[3, 1]), 4), 10);
    }

    #[test]
    fn run_sequence_aggregates() {
        assert!(RunSequence::new(vec![]).is_err());
        assert!(RunSequence::new(vec![2, 0]).is_err());
        // t = 3: 1 -> d=1, 2 -> d=2, 6 -> p=1,d=2, 4 -> d=0.
        let s = seq(&[1, 2, 6]);
        assert_eq!(s.residues(3), vec![(0, 1), (0, 2), (1, 2)]);
        let a = s.aggregates(3).unwrap();
        assert_eq!(a, RunAggregates { p_sum: 0, q_sum: 1, alpha: 1, beta: 2 });
        assert!(seq(&[4]).aggregates(3).is_none());
        assert!(!seq(&[3]).is_eligible_shaped(2));
        assert!(seq(&[4]).is_eligible_shaped(2));
    }

    #[test]
    fn run_complement_examples() {
        assert!(build_run_complement(&seq(&[1]), 4).unwrap().is_irrelevant());
        let c = build_run_complement(&seq(&[2]), 2).unwrap();
        assert_eq!(c.facets(), &[vs(&[1]), vs(&[3])]);
        // Blocks {1,2} and {3,4}; each complement facet is the other block.
        let c = build_run_complement(&seq(&[1, 1]), 2).unwrap();
        assert_eq!(c.facets(), &[vs(&[1, 2]), vs(&[3, 4])]);
    }

    #[test]
    fn decomposition_examples() {
        let spec = PathFamilySpec::cycle(7, 4).unwrap();
        let cx = build_path_complex(spec);
        let g = cx.induced_subcollection(vs(&[1, 2, 3, 4, 5])).unwrap();
        let (s, p) = run_decomposition(&g, spec).unwrap();
        assert_eq!(s.lengths(), &[2]);
        assert_eq!(p.runs(), &[(1, 2)]);

        // F6, F7, F1 span x6..x2 (wrapping).
        let g = cx.induced_subcollection(vs(&[6, 7, 1, 2, 3, 4])).unwrap();
        let (s, p) = run_decomposition(&g, spec).unwrap();
        assert_eq!(s.lengths(), &[3]);
        assert_eq!(p.runs(), &[(6, 3)]);

        let spec = PathFamilySpec::cycle(6, 2).unwrap();
        let cx = build_path_complex(spec);
        let g = cx.induced_subcollection(vs(&[1, 2, 4, 5])).unwrap();
        let (s, p) = run_decomposition(&g, spec).unwrap();
        assert_eq!(s.lengths(), &[1, 1]);
        assert_eq!(p.runs(), &[(1, 1), (4, 1)]);
    }

    #[test]
    fn decomposition_rejects_bad_input() {
        let spec = PathFamilySpec::cycle(6, 2).unwrap();
        let cx = build_path_complex(spec);
        assert!(run_decomposition(&cx, spec).is_err());
        let void = SimplicialComplex::void(VertexSet::EMPTY);
        assert!(run_decomposition(&void, spec).is_err());
        // {1,2} and {3,4} touch at no vertex but are not induced: {2,3} is missing.
        let bad = SimplicialComplex::new(vs(&[1, 2, 3, 4]), [vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        assert!(matches!(run_decomposition(&bad, spec), Err(Error::Structural(_))));
    }

    #[test]
    fn placement_examples() {
        let spec = PathFamilySpec::cycle(7, 4).unwrap();
        let singles = enumerate_placements(spec, |s| s.lengths() == [1]).unwrap().count();
        assert_eq!(singles, 7);
        let pairs = enumerate_placements(spec, |s| s.lengths() == [1, 1]).unwrap().count();
        assert_eq!(pairs, 0);

        let spec = PathFamilySpec::cycle(5, 2).unwrap();
        assert_eq!(enumerate_placements(spec, |s| s.lengths() == [1, 1]).unwrap().count(), 0);
        assert_eq!(enumerate_placements(spec, |s| s.lengths() == [2]).unwrap().count(), 5);

        assert!(Placements::new(PathFamilySpec::line(5, 2).unwrap()).is_err());
        assert!(Placements::new(PathFamilySpec::cycle(4, 4).unwrap()).is_err());
    }

    #[test]
    fn placements_are_unique_and_induced() {
        for n in 3..=12 {
            for t in 2..n {
                let spec = PathFamilySpec::cycle(n, t).unwrap();
                let all: Vec<RunPlacement> = Placements::new(spec).unwrap().collect();
                let mut runs: Vec<_> = all.iter().map(|p| p.runs().to_vec()).collect();
                runs.sort();
                runs.dedup();
                assert_eq!(runs.len(), all.len(), "{spec}");
                for p in &all {
                    assert!(p.has_facet_gaps() && p.has_vertex_gaps(), "{spec} {p:?}");
                }
            }
        }
    }

    /// Brute force over all vertex subsets: supports of proper nonempty
    /// induced subcollections correspond one-to-one with placements.
    #[test]
    fn placements_biject_with_induced_supports() {
        for n in 3..=12 {
            for t in 2..n {
                let spec = PathFamilySpec::cycle(n, t).unwrap();
                let cx = build_path_complex(spec);
                let mut supports: Vec<u64> = Vec::new();
                for y in 1u64..(1 << n) - 1 {
                    let g = cx.induced_subcollection(VertexSet::from_bits(y)).unwrap();
                    if !g.is_void() && g.support().bits() == y {
                        let (sq, pl) = run_decomposition(&g, spec).unwrap();
                        assert_eq!(vertex_count_of_runs(&sq, t), y.count_ones() as usize);
                        assert_eq!(pl.vertex_support().bits(), y);
                        supports.push(y);
                    }
                }
                let mut from_placements: Vec<u64> =
                    Placements::new(spec).unwrap().map(|p| p.vertex_support().bits()).collect();
                supports.sort_unstable();
                from_placements.sort_unstable();
                assert_eq!(supports, from_placements, "{spec}");
            }
        }
    }

    #[test]
    fn gap_criteria_agree_on_arbitrary_run_lists() {
        for n in 3..=10 {
            for t in 2..n {
                let spec = PathFamilySpec::cycle(n, t).unwrap();
                for a1 in 1..=n {
                    for s1 in 1..n {
                        for a2 in a1 + 1..=n {
                            for s2 in 1..n {
                                let p = RunPlacement { spec, runs: vec![(a1, s1), (a2, s2)] };
                                // Overlapping facet ranges are not placements at all.
                                if a1 + s1 > a2 || a2 + s2 > a1 + n {
                                    continue;
                                }
                                assert_eq!(p.has_facet_gaps(), p.has_vertex_gaps(), "{spec} {p:?}");
                            }
                        }
                        let single = RunPlacement { spec, runs: vec![(a1, s1)] };
                        assert_eq!(single.has_facet_gaps(), single.has_vertex_gaps());
                    }
                }
            }
        }
    }

    #[test]
    fn rotation_preserves_sequence() {
        let spec = PathFamilySpec::cycle(11, 3).unwrap();
        for p in Placements::new(spec).unwrap() {
            let r = p.rotate(1);
            assert!(r.has_facet_gaps());
            assert_eq!(r.sequence(), p.sequence());
        }
    }

    #[test]
    fn line_placements_validate() {
        let spec = PathFamilySpec::line(6, 2).unwrap();
        assert!(RunPlacement::new(spec, vec![(1, 1), (4, 2)]).is_ok());
        assert!(RunPlacement::new(spec, vec![(1, 1), (3, 1)]).is_err());
        assert!(RunPlacement::new(spec, vec![(4, 3)]).is_err());
        let cx = build_path_complex(spec);
        let g = cx.induced_subcollection(vs(&[1, 2, 4, 5, 6])).unwrap();
        let (s, p) = run_decomposition(&g, spec).unwrap();
        assert_eq!(s.lengths(), &[2, 1]);
        assert_eq!(p.runs(), &[(1, 1), (4, 2)]);
    }
}
