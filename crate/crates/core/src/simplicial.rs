//! Facet-represented simplicial complexes.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// A vertex label. Valid labels are `1..=MAX_VERTEX`.
pub type Vertex = u32;

/// Largest supported vertex label.
pub const MAX_VERTEX: Vertex = 64;

/// A finite set of vertices stored as a bit set (vertex `v` is bit `v - 1`).
///
/// Iteration is ascending. The derived ordering of the raw bits is *not*
/// exposed; [`Ord`] compares the ascending vertex lists lexicographically.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vertex>", try_from = "Vec<Vertex>")]
pub struct VertexSet(u64);

/// A face is just a set of vertices; the empty face is `VertexSet::EMPTY`.
pub type Face = VertexSet;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTEX {
                return Err(domain!("vertex {v} outside 1..={MAX_VERTEX}"));
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    /// `{1, ..., n}`.
    pub fn first_n(n: u32) -> Result<Self> {
        Self::range(1, n)
    }

    /// `{lo, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: Vertex, hi: Vertex) -> Result<Self> {
        if hi < lo {
            return Ok(Self::EMPTY);
        }
        if lo == 0 || hi > MAX_VERTEX {
            return Err(domain!("vertex range {lo}..={hi} outside 1..={MAX_VERTEX}"));
        }
        let width = hi - lo + 1;
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        Ok(VertexSet(mask << (lo - 1)))
    }

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, v: Vertex) -> Result<VertexSet> {
        Ok(self.union(VertexSet::new([v])?))
    }

    pub fn min(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Sort key realizing lexicographic order among sets of equal size.
    ///
    /// For two sets of the same cardinality, the smallest element of their
    /// symmetric difference decides the lexicographic comparison, and it is
    /// also the highest differing bit after bit reversal.
    #[inline]
    pub(crate) fn same_size_lex_key(self) -> std::cmp::Reverse<u64> {
        std::cmp::Reverse(self.0.reverse_bits())
    }
}

/// Ascending iterator over the vertices of a [`VertexSet`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Vertices;

    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<Vertex>> for VertexSet {
    type Error = crate::Error;

    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        VertexSet::new(v)
    }
}

/// A simplicial complex given by its facets over an ambient vertex set.
///
/// Facets are pairwise incomparable and kept in lexicographic order. The
/// VOID complex has no facets; the IRRELEVANT complex `{∅}` has exactly the
/// empty facet.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ambient: VertexSet,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex, dropping duplicate and non-maximal facets.
    pub fn new(ambient: VertexSet, facets: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut facets: Vec<Face> = facets.into_iter().collect();
        if let Some(bad) = facets.iter().find(|f| !f.is_subset(ambient)) {
            return Err(domain!("facet {bad} is not contained in ambient {ambient}"));
        }
        facets.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
        facets.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|g| f.is_subset(*g)) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        Ok(SimplicialComplex { ambient, facets: kept })
    }

    pub fn void(ambient: VertexSet) -> Self {
        SimplicialComplex { ambient, facets: Vec::new() }
    }

    pub fn irrelevant(ambient: VertexSet) -> Self {
        SimplicialComplex { ambient, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `face`.
    pub fn simplex(face: Face) -> Self {
        SimplicialComplex { ambient: face, facets: vec![face] }
    }

    pub fn ambient(&self) -> VertexSet {
        self.ambient
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Union of the facets (the vertices actually used).
    pub fn support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// Dimension; `None` for the VOID complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.len() as i32 - 1).max()
    }

    /// Facets contained in `y`; the result's ambient is their support.
    pub fn induced_subcollection(&self, y: VertexSet) -> Result<Self> {
        if !y.is_subset(self.ambient) {
            return Err(domain!("{y} is not contained in ambient {}", self.ambient));
        }
        let facets: Vec<Face> = self.facets.iter().copied().filter(|f| f.is_subset(y)).collect();
        let support = facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        Ok(SimplicialComplex { ambient: support, facets })
    }

    /// The complex generated by `x \ F` over the facets `F`.
    pub fn complement(&self, x: VertexSet) -> Result<Self> {
        if let Some(bad) = self.facets.iter().find(|f| !f.is_subset(x)) {
            return Err(domain!("facet {bad} is not contained in {x}"));
        }
        SimplicialComplex::new(x, self.facets.iter().map(|f| x.difference(*f)))
    }

    pub fn cone(&self, apex: Vertex) -> Result<Self> {
        if self.ambient.contains(apex) {
            return Err(domain!("apex {apex} already belongs to {}", self.ambient));
        }
        let a = VertexSet::new([apex])?;
        if self.is_void() {
            return Ok(SimplicialComplex::simplex(a).with_ambient(self.ambient.union(a)));
        }
        Ok(SimplicialComplex {
            ambient: self.ambient.union(a),
            facets: {
                let mut fs: Vec<Face> = self.facets.iter().map(|f| f.union(a)).collect();
                fs.sort_unstable();
                fs
            },
        })
    }

    fn with_ambient(mut self, ambient: VertexSet) -> Self {
        self.ambient = ambient;
        self
    }

    /// Blocks of facets under the transitive closure of "shares a vertex".
    pub fn connected_components(&self) -> Result<Vec<SimplicialComplex>> {
        if self.is_void() {
            return Err(domain!("the void complex has no components"));
        }
        let mut blocks: Vec<(VertexSet, Vec<Face>)> = Vec::new();
        for &f in &self.facets {
            let mut merged = (f, vec![f]);
            let mut k = 0;
            while k < blocks.len() {
                if !blocks[k].0.intersection(merged.0).is_empty() {
                    let (s, fs) = blocks.swap_remove(k);
                    merged.0 = merged.0.union(s);
                    merged.1.extend(fs);
                } else {
                    k += 1;
                }
            }
            blocks.push(merged);
        }
        let mut out: Vec<SimplicialComplex> = blocks
            .into_iter()
            .map(|(support, mut facets)| {
                facets.sort_unstable();
                SimplicialComplex { ambient: support, facets }
            })
            .collect();
        out.sort_by(|a, b| a.facets[0].cmp(&b.facets[0]));
        Ok(out)
    }

    /// All faces with `k + 1` vertices, in ascending lexicographic order.
    pub fn faces_of_dim(&self, k: i32) -> Vec<Face> {
        if k < -1 || self.is_void() {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut seen: HashSet<u64> = HashSet::new();
        for f in &self.facets {
            if f.len() >= size {
                for_each_subset_of_size(*f, size, |s| {
                    seen.insert(s.bits());
                });
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().map(VertexSet::from_bits).collect();
        faces.sort_unstable_by_key(|f| f.same_size_lex_key());
        faces
    }

    /// `f_k` for `k = -1 ..= dim`; index `k + 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (-1..=d).map(|k| self.faces_of_dim(k).len()).collect(),
        }
    }

    /// Applies a vertex renaming; `map` must be injective on the ambient set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<Self> {
        let image = |s: VertexSet| VertexSet::new(s.iter().map(&map));
        let ambient = image(self.ambient)?;
        if ambient.len() != self.ambient.len() {
            return Err(domain!("relabeling is not injective on {}", self.ambient));
        }
        let facets = self.facets.iter().map(|f| image(*f)).collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(ambient, facets)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "VOID on {}", self.ambient);
        }
        f.write_str("<")?;
        for (k, face) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "> on {}", self.ambient)
    }
}

/// Calls `visit` on every subset of `set` with exactly `size` elements.
pub(crate) fn for_each_subset_of_size(set: VertexSet, size: usize, mut visit: impl FnMut(VertexSet)) {
    let verts: Vec<u64> = set.iter().map(|v| 1u64 << (v - 1)).collect();
    if size > verts.len() {
        return;
    }
    if size == 0 {
        visit(VertexSet::EMPTY);
        return;
    }
    // Indices of the current combination, advanced in colex order.
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        visit(VertexSet::from_bits(idx.iter().fold(0, |acc, &i| acc | verts[i])));
        let mut k = size;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if idx[k] < verts.len() - size + k {
                break;
            }
        }
        idx[k] += 1;
        for m in k + 1..size {
            idx[m] = idx[m - 1] + 1;
        }
    }
}
