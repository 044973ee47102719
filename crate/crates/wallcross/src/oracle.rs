//! Exhaustive finite-field representation oracle for tiny instances.
//!
//! Enumerates every representation of a quiver over F_p (p in {2, 3, 5})
//! in a fixed deterministic order, lists invariant subspace tuples, tests
//! absolute simplicity, and checks the generation conditions that
//! characterize stability on extended quivers with a one-dimensional
//! framing. Budgets refuse rather than sample: a partial enumeration would
//! silently weaken every soundness claim built on top of this module.
//!
//! Positive witnesses transfer to characteristic zero (the representation
//! space is an affine space over the integers, so a nonempty open locus
//! meeting a special fiber meets the generic fiber); negative results are
//! advisory only.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

/// Default enumeration budget: 3^12 candidates.
pub const DEFAULT_BUDGET: u128 = 531_441;

/// Dense matrix over F_p, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c));
            }
        }
        t
    }

    pub fn mat_mul(&self, rhs: &Mat, p: u32) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k) as u32;
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let cur = out.at(r, c) as u32;
                    out.set(r, c, ((cur + a * rhs.at(k, c) as u32) % p) as u8);
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &[u8], p: u32) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u32;
                for c in 0..self.cols {
                    acc = (acc + self.at(r, c) as u32 * v[c] as u32) % p;
                }
                acc as u8
            })
            .collect()
    }

    /// Inverse via Gauss-Jordan; None when singular.
    pub fn invert(&self, p: u32) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.at(r, col) != 0)?;
            for c in 0..n {
                a.data.swap(col * n + c, pivot * n + c);
                inv.data.swap(col * n + c, pivot * n + c);
            }
            let scale = mod_inv(a.at(col, col) as u32, p);
            for c in 0..n {
                a.set(col, c, ((a.at(col, c) as u32 * scale) % p) as u8);
                inv.set(col, c, ((inv.at(col, c) as u32 * scale) % p) as u8);
            }
            for r in 0..n {
                if r == col || a.at(r, col) == 0 {
                    continue;
                }
                let f = a.at(r, col) as u32;
                for c in 0..n {
                    let av = (a.at(r, c) as u32 + (p - f) * a.at(col, c) as u32) % p;
                    let iv = (inv.at(r, c) as u32 + (p - f) * inv.at(col, c) as u32) % p;
                    a.set(r, c, av as u8);
                    inv.set(r, c, iv as u8);
                }
            }
        }
        Some(inv)
    }
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // p is a small prime; Fermat
    let mut acc = 1u32;
    for _ in 0..p - 2 {
        acc = (acc * a) % p;
    }
    acc
}

/// Row-reduce in place; returns the rank.
pub fn rref(mat: &mut Vec<Vec<u8>>, p: u32) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let scale = mod_inv(mat[rank][col] as u32, p);
        for c in 0..cols {
            mat[rank][c] = ((mat[rank][c] as u32 * scale) % p) as u8;
        }
        for r in 0..rows {
            if r != rank && mat[r][col] != 0 {
                let f = mat[r][col] as u32;
                for c in 0..cols {
                    mat[r][c] = ((mat[r][c] as u32 + (p - f) * mat[rank][c] as u32) % p) as u8;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    mat.retain(|row| row.iter().any(|&x| x != 0));
    rank
}

/// A representation of a quiver over F_p: one matrix per edge, in the
/// quiver's canonical edge order, of shape (dim target) x (dim source).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteRep {
    pub p: u32,
    pub dims: Vec<u32>,
    pub mats: Vec<Mat>,
}

fn check_field(p: u32) -> Result<()> {
    if matches!(p, 2 | 3 | 5) {
        Ok(())
    } else {
        Err(Error::input(format!("field size must be one of 2, 3, 5; got {p}")))
    }
}

/// Number of scalar entries across all edge matrices.
fn entry_count(quiver: &Quiver, m: &DimVector) -> u64 {
    quiver
        .edges()
        .iter()
        .map(|&(s, t)| m.entry(s) as u64 * m.entry(t) as u64)
        .sum()
}

/// Total number of representations over F_p, i.e. p^entries.
pub fn rep_count(quiver: &Quiver, m: &DimVector, p: u32) -> Result<u128> {
    check_field(p)?;
    quiver.check_dim(m)?;
    let entries = entry_count(quiver, m);
    let mut acc: u128 = 1;
    for _ in 0..entries {
        acc = acc
            .checked_mul(p as u128)
            .ok_or(Error::Budget { required: u128::MAX, budget: 0 })?;
    }
    Ok(acc)
}

/// Deterministic exhaustive enumeration of all representations, last entry
/// of the flattened matrix list varying fastest. Refuses when the count
/// exceeds the budget.
pub fn enumerate_reps<'a>(
    quiver: &'a Quiver,
    m: &DimVector,
    p: u32,
    budget: u128,
) -> Result<RepEnumerator<'a>> {
    let total = rep_count(quiver, m, p)?;
    if total > budget {
        return Err(Error::Budget { required: total, budget });
    }
    Ok(RepEnumerator {
        quiver,
        p,
        dims: m.entries().to_vec(),
        total,
        next: 0,
    })
}

#[derive(Debug)]
pub struct RepEnumerator<'a> {
    quiver: &'a Quiver,
    p: u32,
    dims: Vec<u32>,
    total: u128,
    next: u128,
}

impl RepEnumerator<'_> {
    pub fn total(&self) -> u128 {
        self.total
    }
}

impl Iterator for RepEnumerator<'_> {
    type Item = FiniteRep;

    fn next(&mut self) -> Option<FiniteRep> {
        if self.next >= self.total {
            return None;
        }
        let entries = entry_count(self.quiver, &DimVector::new(self.dims.clone()));
        let mut digits = Vec::with_capacity(entries as usize);
        let mut k = self.next;
        for _ in 0..entries {
            digits.push((k % self.p as u128) as u8);
            k /= self.p as u128;
        }
        digits.reverse(); // most significant digit first: row-major order
        let mut mats = Vec::with_capacity(self.quiver.edges().len());
        let mut cursor = 0;
        for &(s, t) in self.quiver.edges() {
            let rows = self.dims[t] as usize;
            let cols = self.dims[s] as usize;
            let data = digits[cursor..cursor + rows * cols].to_vec();
            cursor += rows * cols;
            mats.push(Mat { rows, cols, data });
        }
        self.next += 1;
        Some(FiniteRep { p: self.p, dims: self.dims.clone(), mats })
    }
}

/// All subspaces of F_p^n as reduced-row-echelon bases, dimension 0 up to n.
fn all_subspaces(p: u32, n: usize) -> Vec<Vec<Vec<u8>>> {
    let mut spaces = vec![Vec::new()]; // the zero subspace
    for r in 1..=n {
        // choose pivot columns, then fill free entries
        let mut pivots = (0..r).collect::<Vec<usize>>();
        loop {
            let mut free_slots = Vec::new();
            for (row, &pc) in pivots.iter().enumerate() {
                for col in pc + 1..n {
                    if !pivots.contains(&col) {
                        free_slots.push((row, col));
                    }
                }
            }
            let combos = (p as u64).pow(free_slots.len() as u32);
            for combo in 0..combos {
                let mut basis = vec![vec![0u8; n]; r];
                for (row, &pc) in pivots.iter().enumerate() {
                    basis[row][pc] = 1;
                }
                let mut c = combo;
                for &(row, col) in &free_slots {
                    basis[row][col] = (c % p as u64) as u8;
                    c /= p as u64;
                }
                spaces.push(basis);
            }
            // next pivot combination
            let mut i = r;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if pivots[i] < n - (r - i) {
                    pivots[i] += 1;
                    for j in i + 1..r {
                        pivots[j] = pivots[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    pivots.clear();
                    break;
                }
            }
            if pivots.is_empty() {
                break;
            }
        }
    }
    spaces
}

/// Membership of v in the row space of an echelon basis.
fn in_span(basis: &[Vec<u8>], v: &[u8], p: u32) -> bool {
    let mut rows: Vec<Vec<u8>> = basis.to_vec();
    let before = rows.len();
    rows.push(v.to_vec());
    rref(&mut rows, p) == before
}

/// Dimension vectors realized by invariant subspace tuples of `rep`,
/// with the number of tuples realizing each. Includes the zero and full
/// tuples. Refuses when the tuple count exceeds the budget.
pub fn invariant_subspace_tuples(
    quiver: &Quiver,
    rep: &FiniteRep,
    budget: u128,
) -> Result<BTreeMap<DimVector, u64>> {
    check_field(rep.p)?;
    let n = quiver.vertex_count();
    let per_vertex: Vec<Vec<Vec<Vec<u8>>>> = rep
        .dims
        .iter()
        .map(|&d| all_subspaces(rep.p, d as usize))
        .collect();
    let mut tuple_count: u128 = 1;
    for s in &per_vertex {
        tuple_count = tuple_count
            .checked_mul(s.len() as u128)
            .ok_or(Error::Budget { required: u128::MAX, budget })?;
    }
    if tuple_count > budget {
        return Err(Error::Budget { required: tuple_count, budget });
    }

    let mut achieved: BTreeMap<DimVector, u64> = BTreeMap::new();
    let mut choice = vec![0usize; n];
    loop {
        let tuple: Vec<&Vec<Vec<u8>>> = (0..n).map(|i| &per_vertex[i][choice[i]]).collect();
        if tuple_invariant(quiver, rep, &tuple) {
            let dims = DimVector::new(tuple.iter().map(|b| b.len() as u32).collect());
            *achieved.entry(dims).or_insert(0) += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return Ok(achieved);
            }
            choice[i] += 1;
            if choice[i] < per_vertex[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Whether some invariant subspace tuple realizes exactly the given
/// dimension vector. Cheaper than a full tuple sweep: only subspaces of the
/// requested dimensions are enumerated, with early exit.
pub fn achieves_subdimension(
    quiver: &Quiver,
    rep: &FiniteRep,
    dims: &DimVector,
    budget: u128,
) -> Result<bool> {
    check_field(rep.p)?;
    let n = quiver.vertex_count();
    if dims.len() != n {
        return Err(Error::input("dimension vector length mismatch"));
    }
    let per_vertex: Vec<Vec<Vec<Vec<u8>>>> = (0..n)
        .map(|i| {
            all_subspaces(rep.p, rep.dims[i] as usize)
                .into_iter()
                .filter(|b| b.len() as u32 == dims.entry(i))
                .collect()
        })
        .collect();
    let mut tuple_count: u128 = 1;
    for s in &per_vertex {
        if s.is_empty() {
            return Ok(false); // requested dimension exceeds the fiber
        }
        tuple_count = tuple_count
            .checked_mul(s.len() as u128)
            .ok_or(Error::Budget { required: u128::MAX, budget })?;
    }
    if tuple_count > budget {
        return Err(Error::Budget { required: tuple_count, budget });
    }
    let mut choice = vec![0usize; n];
    loop {
        let tuple: Vec<&Vec<Vec<u8>>> = (0..n).map(|i| &per_vertex[i][choice[i]]).collect();
        if tuple_invariant(quiver, rep, &tuple) {
            return Ok(true);
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(false);
            }
            choice[i] += 1;
            if choice[i] < per_vertex[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn tuple_invariant(quiver: &Quiver, rep: &FiniteRep, tuple: &[&Vec<Vec<u8>>]) -> bool {
    for (e, &(s, t)) in quiver.edges().iter().enumerate() {
        for v in tuple[s].iter() {
            let image = rep.mats[e].mat_vec(v, rep.p);
            if image.iter().any(|&x| x != 0) && !in_span(tuple[t], &image, rep.p) {
                return false;
            }
        }
    }
    true
}

/// Absolute simplicity: the only invariant subspace tuples are zero and
/// full, and the endomorphism algebra consists of scalars. A positive
/// answer certifies nonemptiness of the simple locus in characteristic
/// zero.
pub fn is_simple_abs(quiver: &Quiver, rep: &FiniteRep) -> Result<bool> {
    check_field(rep.p)?;
    let n = quiver.vertex_count();
    if rep.dims.iter().all(|&d| d == 0) {
        return Ok(false);
    }
    let per_vertex: Vec<Vec<Vec<Vec<u8>>>> = rep
        .dims
        .iter()
        .map(|&d| all_subspaces(rep.p, d as usize))
        .collect();
    let mut choice = vec![0usize; n];
    'tuples: loop {
        let tuple: Vec<&Vec<Vec<u8>>> = (0..n).map(|i| &per_vertex[i][choice[i]]).collect();
        let zero = tuple.iter().all(|b| b.is_empty());
        let full = (0..n).all(|i| tuple[i].len() as u32 == rep.dims[i]);
        if !zero && !full && tuple_invariant(quiver, rep, &tuple) {
            return Ok(false);
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'tuples;
            }
            choice[i] += 1;
            if choice[i] < per_vertex[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
    Ok(endomorphism_dim(quiver, rep) == 1)
}

/// Dimension over F_p of the algebra of tuples (phi_i) commuting with every
/// edge map, computed by solving the linear commutation system.
pub fn endomorphism_dim(quiver: &Quiver, rep: &FiniteRep) -> usize {
    let p = rep.p;
    let dims: Vec<usize> = rep.dims.iter().map(|&d| d as usize).collect();
    let offsets: Vec<usize> = {
        let mut acc = 0;
        let mut out = Vec::with_capacity(dims.len());
        for &d in &dims {
            out.push(acc);
            acc += d * d;
        }
        out
    };
    let unknowns: usize = dims.iter().map(|&d| d * d).sum();
    if unknowns == 0 {
        return 0;
    }
    let mut system: Vec<Vec<u8>> = Vec::new();
    for (e, &(s, t)) in quiver.edges().iter().enumerate() {
        let a = &rep.mats[e];
        // phi_t A - A phi_s = 0, entry (r, c)
        for r in 0..dims[t] {
            for c in 0..dims[s] {
                let mut row = vec![0u8; unknowns];
                for k in 0..dims[t] {
                    // phi_t[r][k] * A[k][c]
                    let idx = offsets[t] + r * dims[t] + k;
                    row[idx] = ((row[idx] as u32 + a.at(k, c) as u32) % p) as u8;
                }
                for k in 0..dims[s] {
                    // - A[r][k] * phi_s[k][c]
                    let idx = offsets[s] + k * dims[s] + c;
                    row[idx] = ((row[idx] as u32 + (p - a.at(r, k) as u32 % p) % p) % p) as u8;
                }
                if row.iter().any(|&x| x != 0) {
                    system.push(row);
                }
            }
        }
    }
    let rank = rref(&mut system, p);
    unknowns - rank
}

/// Generation test behind plus-side stability of an extended quiver with a
/// one-dimensional framing at `framing`: the images of the framing edges
/// must generate every base vertex space under the base edge maps. The
/// closure grows in dimension each round, so it stabilizes within
/// sum(dims) iterations.
pub fn is_star_plus_stable(quiver: &Quiver, rep: &FiniteRep, framing: usize) -> Result<bool> {
    Ok(star_plus_closure(quiver, rep, framing)?.0)
}

/// The generation closure together with the number of growth rounds it
/// took; the total dimension increases every round, so rounds never exceed
/// the total of the base dimensions.
pub fn star_plus_closure(
    quiver: &Quiver,
    rep: &FiniteRep,
    framing: usize,
) -> Result<(bool, usize)> {
    check_field(rep.p)?;
    if rep.dims.get(framing) != Some(&1) {
        return Err(Error::precondition("framing vertex must have dimension one"));
    }
    let p = rep.p;
    let n = quiver.vertex_count();
    let mut spans: Vec<Vec<Vec<u8>>> = (0..n).map(|_| Vec::new()).collect();
    let insert = |spans: &mut Vec<Vec<Vec<u8>>>, v: usize, vec: Vec<u8>| -> bool {
        if vec.iter().all(|&x| x == 0) || in_span(&spans[v], &vec, p) {
            return false;
        }
        spans[v].push(vec);
        let r = rref(&mut spans[v], p);
        debug_assert_eq!(r, spans[v].len());
        true
    };

    for (e, &(s, t)) in quiver.edges().iter().enumerate() {
        if s == framing && t != framing {
            let image = rep.mats[e].mat_vec(&[1], p);
            insert(&mut spans, t, image);
        }
    }
    let mut rounds = 0;
    loop {
        let mut grew = false;
        for (e, &(s, t)) in quiver.edges().iter().enumerate() {
            if s == framing || t == framing {
                continue;
            }
            let basis = spans[s].clone();
            for v in basis {
                let image = rep.mats[e].mat_vec(&v, p);
                grew |= insert(&mut spans, t, image);
            }
        }
        if !grew {
            break;
        }
        rounds += 1;
    }
    let full = (0..n).all(|i| i == framing || spans[i].len() as u32 == rep.dims[i]);
    Ok((full, rounds))
}

/// Minus-side stability: the dual generation condition, evaluated by
/// transposing every matrix and running the plus test on the dual quiver.
pub fn is_star_minus_stable(quiver: &Quiver, rep: &FiniteRep, framing: usize) -> Result<bool> {
    let (dual_q, dual_rep) = dual_rep(quiver, rep);
    is_star_plus_stable(&dual_q, &dual_rep, framing)
}

/// The dual representation on the dual quiver: edges reversed, matrices
/// transposed, with matrices re-aligned to the dual's canonical edge order.
pub fn dual_rep(quiver: &Quiver, rep: &FiniteRep) -> (Quiver, FiniteRep) {
    let dual_q = quiver.dual();
    let mut tagged: Vec<((usize, usize), Mat)> = quiver
        .edges()
        .iter()
        .zip(&rep.mats)
        .map(|(&(s, t), m)| ((t, s), m.transpose()))
        .collect();
    tagged.sort_by_key(|(e, _)| *e);
    debug_assert!(tagged.iter().map(|(e, _)| *e).eq(dual_q.edges().iter().copied()));
    let mats = tagged.into_iter().map(|(_, m)| m).collect();
    (
        dual_q,
        FiniteRep { p: rep.p, dims: rep.dims.clone(), mats },
    )
}

/// Summary of an oracle sweep over all representations. The audit dump
/// keeps the per-edge matrices of the first witnesses, capped so reports
/// stay bounded.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleReport {
    pub enumerated: u64,
    pub witnesses: u64,
    /// Per-edge matrices of the first witnesses, up to `witness_cap`.
    pub witness_sample: Vec<Vec<Mat>>,
    pub witness_cap: u64,
}

/// Sweeps all representations and counts the ones passing `test`.
pub fn sweep<F: FnMut(&FiniteRep) -> Result<bool>>(
    quiver: &Quiver,
    m: &DimVector,
    p: u32,
    budget: u128,
    mut test: F,
) -> Result<OracleReport> {
    const WITNESS_CAP: u64 = 16;
    let mut report = OracleReport {
        enumerated: 0,
        witnesses: 0,
        witness_sample: Vec::new(),
        witness_cap: WITNESS_CAP,
    };
    for rep in enumerate_reps(quiver, m, p, budget)? {
        report.enumerated += 1;
        if test(&rep)? {
            if report.witnesses < WITNESS_CAP {
                report.witness_sample.push(rep.mats.clone());
            }
            report.witnesses += 1;
        }
    }
    Ok(report)
}
