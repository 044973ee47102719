//! Quivers, dimension vectors and the Euler pairing.
//!
//! A quiver is a finite directed multigraph; loops and parallel edges are
//! allowed everywhere. Vertex ids are opaque strings, fixed in a canonical
//! sorted order at construction so that every downstream report is
//! deterministic. Edges are stored sorted by (source, target) with
//! multiplicity.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Opaque vertex label.
pub type VertexId = String;

/// Finite directed multigraph with canonically ordered vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<VertexId>,
    /// Edges as (source index, target index), sorted.
    edges: Vec<(usize, usize)>,
    /// counts[i][j] = number of edges i -> j.
    counts: Vec<Vec<usize>>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and (source, target) edge pairs.
    /// Vertex ids must be distinct and every edge endpoint declared.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Quiver> {
        let mut ids: Vec<VertexId> = vertices.iter().map(|v| v.as_ref().to_owned()).collect();
        ids.sort();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("duplicate vertex id"));
        }
        let index_of = |id: &str| -> Result<usize> {
            ids.binary_search_by(|v| v.as_str().cmp(id))
                .map_err(|_| Error::input(format!("edge endpoint `{id}` is not a declared vertex")))
        };
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (s, t) in edges {
            idx_edges.push((index_of(s.as_ref())?, index_of(t.as_ref())?));
        }
        idx_edges.sort_unstable();
        let n = ids.len();
        let mut counts = vec![vec![0usize; n]; n];
        for &(s, t) in &idx_edges {
            counts[s][t] += 1;
        }
        Ok(Quiver {
            vertices: ids,
            edges: idx_edges,
            counts,
        })
    }

    /// Quiver given directly by its edge-count matrix, with vertices named
    /// by the supplied ids (sorted internally).
    pub fn from_counts<S: AsRef<str>>(vertices: &[S], counts: &[Vec<usize>]) -> Result<Quiver> {
        let n = vertices.len();
        if counts.len() != n || counts.iter().any(|row| row.len() != n) {
            return Err(Error::input("edge-count matrix shape does not match vertex list"));
        }
        let mut edges = Vec::new();
        for (i, row) in counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                for _ in 0..c {
                    edges.push((vertices[i].as_ref(), vertices[j].as_ref()));
                }
            }
        }
        let vs: Vec<&str> = vertices.iter().map(|v| v.as_ref()).collect();
        Quiver::new(&vs, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(id)).ok()
    }

    /// Edges as (source index, target index), canonical order, multiplicity kept.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self, from: usize, to: usize) -> usize {
        self.counts[from][to]
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.counts[v][v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.counts[v].iter().sum()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.counts.iter().map(|row| row[v]).sum()
    }

    /// The dual quiver: every edge reversed. Involutive up to the canonical
    /// ordering.
    pub fn dual(&self) -> Quiver {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|&(s, t)| (t, s)).collect();
        edges.sort_unstable();
        let n = self.vertices.len();
        let mut counts = vec![vec![0usize; n]; n];
        for &(s, t) in &edges {
            counts[s][t] += 1;
        }
        Quiver {
            vertices: self.vertices.clone(),
            edges,
            counts,
        }
    }

    /// True iff the edge-count matrix is symmetric. Equivalently, the Euler
    /// pairing is a symmetric bilinear form.
    pub fn is_symmetric(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.counts[i][j] == self.counts[j][i]))
    }

    /// Full subquiver on the vertices where `m` is nonzero.
    pub fn support_subquiver(&self, m: &DimVector) -> Result<Quiver> {
        self.check_dim(m)?;
        let keep: Vec<usize> = (0..self.vertices.len()).filter(|&i| m.entry(i) > 0).collect();
        let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
        let vs: Vec<&str> = keep.iter().map(|&i| self.vertices[i].as_str()).collect();
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .filter(|(s, t)| keep_set.contains(s) && keep_set.contains(t))
            .map(|&(s, t)| (self.vertices[s].as_str(), self.vertices[t].as_str()))
            .collect();
        Quiver::new(&vs, &edges)
    }

    /// True iff every ordered vertex pair is joined by a directed path.
    /// A single vertex counts as strongly connected, with or without loops.
    pub fn is_strongly_connected(&self) -> Result<bool> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(Error::input("strong connectivity is undefined for the empty quiver"));
        }
        Ok(self.reachable(0, false).len() == n && self.reachable(0, true).len() == n)
    }

    /// Vertices reachable from `start` along zero or more edges
    /// (reversed edges when `backwards`).
    fn reachable(&self, start: usize, backwards: bool) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for &(s, t) in &self.edges {
                let (from, to) = if backwards { (t, s) } else { (s, t) };
                if from == v && !seen.contains(&to) {
                    stack.push(to);
                }
            }
        }
        seen
    }

    /// Existence of a directed path from `from` to `to` (possibly of
    /// length zero).
    pub fn has_path(&self, from: usize, to: usize) -> bool {
        self.reachable(from, false).contains(&to)
    }

    /// Euler pairing <m, m2> = sum_i m_i m2_i - sum_{e} m_{s(e)} m2_{t(e)}.
    /// Bilinear in each argument; symmetric iff the quiver is symmetric.
    pub fn euler_pairing(&self, m: &DimVector, m2: &DimVector) -> Result<i64> {
        self.check_dim(m)?;
        self.check_dim(m2)?;
        let mut acc: i64 = 0;
        for i in 0..self.vertices.len() {
            acc += m.entry(i) as i64 * m2.entry(i) as i64;
        }
        for &(s, t) in &self.edges {
            acc -= m.entry(s) as i64 * m2.entry(t) as i64;
        }
        Ok(acc)
    }

    /// Exponents of the determinant character cutting out the canonical
    /// bundle of the stable moduli: kappa_i = out-degree(i) - in-degree(i).
    /// Loops cancel and contribute zero; the entries always sum to zero.
    pub fn canonical_character(&self) -> Vec<i64> {
        (0..self.vertices.len())
            .map(|i| self.out_degree(i) as i64 - self.in_degree(i) as i64)
            .collect()
    }

    /// 1 - <m, m>, the dimension of the stable locus where it is nonempty
    /// and smooth. May be negative; callers interpret.
    pub fn expected_stable_dim(&self, m: &DimVector) -> Result<i64> {
        if m.is_zero() {
            return Err(Error::precondition("dimension vector must be nonzero"));
        }
        Ok(1 - self.euler_pairing(m, m)?)
    }

    /// Shape of the support of `m`: a single loop-free vertex, a single
    /// oriented cycle (one vertex with one loop when n = 1), or anything
    /// else.
    pub fn detect_trivial_type(&self, m: &DimVector) -> Result<TrivialType> {
        if m.is_zero() {
            return Err(Error::precondition("dimension vector must be nonzero"));
        }
        let supp = self.support_subquiver(m)?;
        let n = supp.vertex_count();
        if n == 1 && supp.loop_count(0) == 0 {
            return Ok(TrivialType::A1);
        }
        let cycle = (0..n).all(|v| supp.out_degree(v) == 1 && supp.in_degree(v) == 1)
            && supp.is_strongly_connected()?;
        if cycle {
            Ok(TrivialType::TildeAn(n))
        } else {
            Ok(TrivialType::Other)
        }
    }

    pub(crate) fn check_dim(&self, m: &DimVector) -> Result<()> {
        if m.len() != self.vertices.len() {
            return Err(Error::input(format!(
                "dimension vector has {} entries but the quiver has {} vertices",
                m.len(),
                self.vertices.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quiver[{}", self.vertices.join(","))?;
        write!(f, ";")?;
        for (k, &(s, t)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {}->{}", self.vertices[s], self.vertices[t])?;
        }
        write!(f, "]")
    }
}

/// Shape classification of a support subquiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrivialType {
    /// One vertex, no loops.
    A1,
    /// A single oriented n-cycle: one arrow between consecutive vertices and
    /// no other edges. n = 1 means one vertex with exactly one loop.
    TildeAn(usize),
    Other,
}

/// Nonnegative integer weight per vertex, aligned with a quiver's canonical
/// vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector {
    entries: Vec<u32>,
}

impl DimVector {
    pub fn new(entries: Vec<u32>) -> DimVector {
        DimVector { entries }
    }

    pub fn zero(len: usize) -> DimVector {
        DimVector { entries: vec![0; len] }
    }

    /// Unit vector at position i.
    pub fn unit(len: usize, i: usize) -> DimVector {
        let mut entries = vec![0; len];
        entries[i] = 1;
        DimVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// gcd of the entries is 1.
    pub fn is_primitive(&self) -> bool {
        let g = self.entries.iter().fold(0u32, |g, &e| num::integer::gcd(g, e));
        g == 1
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        assert_eq!(self.len(), other.len());
        DimVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference; None if any entry would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        assert_eq!(self.len(), other.len());
        let entries: Option<Vec<u32>> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_sub(*b))
            .collect();
        entries.map(|entries| DimVector { entries })
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&i| self.entries[i] > 0).collect()
    }

    /// Restriction to the given index subset (in order).
    pub fn restrict(&self, keep: &[usize]) -> DimVector {
        DimVector {
            entries: keep.iter().map(|&i| self.entries[i]).collect(),
        }
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
