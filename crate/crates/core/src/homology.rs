//! Reduced simplicial homology over a field, via exact boundary-matrix ranks.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg::{rank_mod_p, rank_rational, SparseMatrix};
use crate::simplicial::{Face, SimplicialComplex, VertexSet};

/// Coefficient field: the rationals (characteristic 0) or GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };
    pub const GF2: FieldSpec = FieldSpec { characteristic: 2 };
    pub const GF32003: FieldSpec = FieldSpec { characteristic: 32003 };

    /// `0` for Q, otherwise a prime below 2^32.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            return Ok(Self::RATIONALS);
        }
        if characteristic > u32::MAX as u64 {
            return Err(domain!("characteristic {characteristic} exceeds 2^32"));
        }
        if !is_prime(characteristic) {
            return Err(domain!("characteristic {characteristic} is neither 0 nor prime"));
        }
        Ok(FieldSpec { characteristic })
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic
    }

    pub fn rank(self, m: &SparseMatrix) -> usize {
        match self.characteristic {
            0 => rank_rational(m),
            p => rank_mod_p(m, p),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::RATIONALS
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;

    fn try_from(c: u64) -> Result<Self> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.characteristic
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c: u64 = s.trim().parse().map_err(|_| domain!("invalid characteristic {s:?}"))?;
        FieldSpec::new(c)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => f.write_str("QQ"),
            p => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The boundary map `∂_k` from `k`-faces (columns) to `(k-1)`-faces (rows).
///
/// `∂_0` is the augmentation onto the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: i32,
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    pub matrix: SparseMatrix,
}

impl BoundaryMatrix {
    fn build(degree: i32, rows: Vec<Face>, cols: Vec<Face>) -> Self {
        let index: HashMap<u64, usize> =
            rows.iter().enumerate().map(|(i, f)| (f.bits(), i)).collect();
        let columns = cols
            .iter()
            .map(|face| {
                let mut col: Vec<(usize, i64)> = face
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let without = face.bits() & !(1u64 << (v - 1));
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[&without], sign)
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        BoundaryMatrix {
            degree,
            matrix: SparseMatrix { nrows: rows.len(), cols: columns },
            rows,
            cols,
        }
    }
}

/// Faces of every dimension, bucketed by size and sorted lexicographically.
/// Index `s` holds faces with `s` vertices.
pub(crate) fn faces_by_size(cx: &SimplicialComplex) -> Vec<Vec<Face>> {
    let Some(dim) = cx.dim() else { return Vec::new() };
    let mut seen: HashSet<u64> = HashSet::new();
    for f in cx.facets() {
        let full = f.bits();
        let mut sub = full;
        loop {
            seen.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
    }
    let mut buckets: Vec<Vec<Face>> = vec![Vec::new(); (dim + 2) as usize];
    for bits in seen {
        buckets[bits.count_ones() as usize].push(VertexSet::from_bits(bits));
    }
    for b in buckets.iter_mut() {
        b.sort_unstable_by_key(|f| f.same_size_lex_key());
    }
    buckets
}

/// `∂_0, ..., ∂_dim`. `{∅}` yields no matrices; VOID is rejected.
pub fn boundary_matrices(cx: &SimplicialComplex) -> Result<Vec<BoundaryMatrix>> {
    if cx.is_void() {
        return Err(domain!("the void complex has no chain complex"));
    }
    let mut buckets = faces_by_size(cx);
    let dim = buckets.len() as i32 - 2;
    let mut out = Vec::with_capacity(dim.max(0) as usize + 1);
    for k in 0..=dim {
        let rows = std::mem::take(&mut buckets[k as usize]);
        let cols = buckets[k as usize + 1].clone();
        out.push(BoundaryMatrix::build(k, rows.clone(), cols));
        buckets[k as usize] = rows;
    }
    Ok(out)
}

pub fn matrix_rank(m: &BoundaryMatrix, field: FieldSpec) -> usize {
    field.rank(&m.matrix)
}

/// Dimensions of the nonzero reduced homology groups, keyed by degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyVector {
    dims: BTreeMap<i32, usize>,
}

impl HomologyVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i32, usize)>) -> Self {
        HomologyVector { dims: pairs.into_iter().filter(|&(_, d)| d > 0).collect() }
    }

    /// `dim H̃_degree`.
    pub fn get(&self, degree: i32) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Nonzero `(degree, dimension)` pairs in ascending degree.
    pub fn nonzero(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }

    /// Σ (-1)^i dim H̃_i.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero().map(|(i, d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

impl fmt::Display for HomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, d)) in self.nonzero().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "H~{i}=K^{d}")?;
        }
        Ok(())
    }
}

pub fn reduced_homology_dims(cx: &SimplicialComplex, field: FieldSpec) -> HomologyVector {
    if cx.is_void() {
        return HomologyVector::zero();
    }
    if cx.is_irrelevant() {
        return HomologyVector::from_pairs([(-1, 1)]);
    }
    let mats = boundary_matrices(cx).expect("non-void complex");
    let ranks: Vec<usize> = mats.iter().map(|m| matrix_rank(m, field)).collect();
    let dims = mats.iter().enumerate().map(|(k, m)| {
        let nullity = m.cols.len() - ranks[k];
        let next = ranks.get(k + 1).copied().unwrap_or(0);
        (k as i32, nullity - next)
    });
    // H̃_{-1} vanishes: a complex with a vertex has surjective augmentation.
    HomologyVector::from_pairs(dims)
}
