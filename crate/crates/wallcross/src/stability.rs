//! Central charges, wall enumeration and exact on-wall tests.
//!
//! A central charge assigns to each vertex a Gaussian rational in the open
//! upper half-plane. Walls for a primitive dimension vector are indexed by
//! unordered decompositions m = m1 + m2 into nonzero nonnegative vectors;
//! distinct decompositions may cut out the same hypersurface and are kept
//! separate. Membership and side tests are exact rational comparisons,
//! never approximate.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{conj, gauss_display, rat, rat_int, sign, GaussRat, Rat};
use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

/// Per-vertex upper-half-plane values, aligned with a quiver's canonical
/// vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralCharge {
    values: Vec<GaussRat>,
}

impl CentralCharge {
    pub fn new(values: Vec<GaussRat>) -> Result<CentralCharge> {
        if values.iter().any(|z| !z.im.is_positive()) {
            return Err(Error::input(
                "central charge components must have strictly positive imaginary part",
            ));
        }
        Ok(CentralCharge { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[GaussRat] {
        &self.values
    }

    /// Z(m) = sum_i m_i xi_i.
    pub fn charge(&self, m: &DimVector) -> Result<GaussRat> {
        if m.len() != self.values.len() {
            return Err(Error::input(format!(
                "dimension vector has {} entries but the charge has {} components",
                m.len(),
                self.values.len()
            )));
        }
        let mut z = GaussRat::new(Rat::zero(), Rat::zero());
        for (i, xi) in self.values.iter().enumerate() {
            let c = rat_int(m.entry(i) as i64);
            z += GaussRat::new(&xi.re * &c, &xi.im * &c);
        }
        Ok(z)
    }

    /// Scales every component by a positive rational; changes no on-wall or
    /// side verdict.
    pub fn scale(&self, factor: &Rat) -> Result<CentralCharge> {
        if !factor.is_positive() {
            return Err(Error::input("scale factor must be positive"));
        }
        CentralCharge::new(
            self.values
                .iter()
                .map(|z| GaussRat::new(&z.re * factor, &z.im * factor))
                .collect(),
        )
    }
}

/// Unordered decomposition m = m1 + m2 of a primitive dimension vector into
/// nonzero nonnegative summands, stored with m1 <= m2 lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Wall {
    m1: DimVector,
    m2: DimVector,
}

impl Wall {
    pub fn new(m1: DimVector, m2: DimVector) -> Result<Wall> {
        if m1.len() != m2.len() {
            return Err(Error::input("wall summands must share an index set"));
        }
        if m1.is_zero() || m2.is_zero() {
            return Err(Error::input("wall summands must be nonzero"));
        }
        // Proportional summands would cut out all of charge space rather
        // than a hypersurface; primitivity of m1 + m2 rules them out.
        let proportional = (0..m1.len()).all(|i| {
            m1.entry(i) as u64 * m2.entry(0) as u64 == m2.entry(i) as u64 * m1.entry(0) as u64
        }) && {
            // cross-ratios against every coordinate, not just the first
            (0..m1.len()).all(|i| {
                (0..m1.len()).all(|j| {
                    m1.entry(i) as u64 * m2.entry(j) as u64 == m1.entry(j) as u64 * m2.entry(i) as u64
                })
            })
        };
        if proportional {
            return Err(Error::input("wall summands must not be proportional"));
        }
        if m1 <= m2 {
            Ok(Wall { m1, m2 })
        } else {
            Ok(Wall { m1: m2, m2: m1 })
        }
    }

    pub fn first(&self) -> &DimVector {
        &self.m1
    }

    pub fn second(&self) -> &DimVector {
        &self.m2
    }

    pub fn ambient(&self) -> DimVector {
        self.m1.add(&self.m2)
    }
}

/// All walls of a primitive dimension vector, in canonical order. The count
/// is exactly (prod_i (m_i + 1) - 2) / 2.
pub fn enumerate_walls(m: &DimVector) -> Result<Vec<Wall>> {
    if m.is_zero() {
        return Err(Error::input("dimension vector must be nonzero"));
    }
    if !m.is_primitive() {
        return Err(Error::input(format!(
            "walls are only defined for primitive dimension vectors, got {m}"
        )));
    }
    let mut walls = Vec::new();
    let mut current = DimVector::zero(m.len());
    loop {
        // advance `current` through the box  0 <= current <= m
        let mut i = 0;
        loop {
            if i == m.len() {
                walls.sort();
                return Ok(walls);
            }
            if current.entry(i) < m.entry(i) {
                let mut entries = current.entries().to_vec();
                entries[i] += 1;
                for e in entries.iter_mut().take(i) {
                    *e = 0;
                }
                current = DimVector::new(entries);
                break;
            }
            i += 1;
        }
        let rest = m.checked_sub(&current).expect("current stays within the box");
        if current.is_zero() || rest.is_zero() {
            continue;
        }
        if current <= rest {
            walls.push(Wall::new(current.clone(), rest)?);
        }
    }
}

/// Exact test for xi lying on the wall: Z(m1) is a positive real multiple
/// of Z(m2).
pub fn on_wall(xi: &CentralCharge, wall: &Wall) -> Result<bool> {
    let z1 = xi.charge(wall.first())?;
    let z2 = xi.charge(wall.second())?;
    let cross = z1 * conj(&z2);
    Ok(cross.im.is_zero() && cross.re.is_positive())
}

/// Sign of Im(Z(m1) conj(Z(m2))): +1 when the phase of Z(m1) exceeds that of
/// Z(m2), 0 on the wall locus, -1 otherwise. Antisymmetric under swapping
/// the summands.
pub fn wall_side(xi: &CentralCharge, wall: &Wall) -> Result<i8> {
    let z1 = xi.charge(wall.first())?;
    let z2 = xi.charge(wall.second())?;
    Ok(sign(&(z1 * conj(&z2)).im))
}

/// Builds the perturbed charge pair (xi+, xi-) with Re(xi+_i) = rho_i,
/// Re(xi-_i) = -rho_i and imaginary parts found by a deterministic search so
/// that neither charge lies on any wall of m.
///
/// The search walks the per-vertex sequence 1, 1+1/3, 1-1/3, 1+1/5, 1-1/5, ...
/// through at most 256 assignments; walls have measure zero so the first
/// candidate generically succeeds.
pub fn flop_charges(
    quiver: &Quiver,
    m: &DimVector,
    rho: &[i64],
) -> Result<(CentralCharge, CentralCharge)> {
    quiver.check_dim(m)?;
    if !quiver.is_symmetric() {
        return Err(Error::precondition("flop charges require a symmetric quiver"));
    }
    if !m.is_primitive() {
        return Err(Error::precondition("flop charges require a primitive dimension vector"));
    }
    if rho.len() != m.len() {
        return Err(Error::input("rho must assign an integer to every vertex"));
    }
    if rho.iter().all(|&r| r == 0) {
        return Err(Error::precondition("rho must be nonzero"));
    }
    let pairing: i64 = (0..m.len()).map(|i| m.entry(i) as i64 * rho[i]).sum();
    if pairing != 0 {
        return Err(Error::precondition(format!(
            "rho must pair to zero with m, got {pairing}"
        )));
    }

    let walls = enumerate_walls(m)?;
    // A wall whose first summand pairs to zero with rho contains the
    // charge slice Re = rho entirely: no imaginary assignment can leave
    // it. Report those walls instead of burning the search budget.
    let blocking: Vec<&Wall> = walls
        .iter()
        .filter(|w| (0..m.len()).map(|i| w.first().entry(i) as i64 * rho[i]).sum::<i64>() == 0)
        .collect();
    if !blocking.is_empty() {
        let listed: Vec<String> = blocking
            .iter()
            .map(|w| format!("{{{}, {}}}", w.first(), w.second()))
            .collect();
        return Err(Error::input(format!(
            "rho pairs to zero with a wall summand, so every imaginary assignment stays on \
             the wall; blocking walls: [{}]",
            listed.join(", ")
        )));
    }

    let n = m.len();
    // imaginary-part candidates per vertex: 1, 1±1/3, 1±1/5, ...
    let options: Vec<Rat> = std::iter::once(rat_int(1))
        .chain((1..5).flat_map(|k| {
            let d = 2 * k + 1;
            [rat_int(1) + rat(1, d), rat_int(1) - rat(1, d)]
        }))
        .collect();
    let base = options.len() as u64;

    'candidates: for k in 0..256u64 {
        let mut digits = k;
        let mut ims = Vec::with_capacity(n);
        for _ in 0..n {
            ims.push(options[(digits % base) as usize].clone());
            digits /= base;
        }
        if digits > 0 {
            break; // exhausted the assignment space before the budget
        }
        let plus = CentralCharge::new(
            (0..n)
                .map(|i| GaussRat::new(rat_int(rho[i]), ims[i].clone()))
                .collect(),
        )?;
        let minus = CentralCharge::new(
            (0..n)
                .map(|i| GaussRat::new(rat_int(-rho[i]), ims[i].clone()))
                .collect(),
        )?;
        for wall in &walls {
            if on_wall(&plus, wall)? || on_wall(&minus, wall)? {
                continue 'candidates;
            }
        }
        return Ok((plus, minus));
    }

    Err(Error::input(
        "no off-wall imaginary assignment found within the search budget".to_string(),
    ))
}

/// Charges for an extended quiver with distinguished vertex `0`: every
/// non-framing component is i, and the framing component is -theta + i on
/// the plus side, theta + i on the minus side.
pub fn star_charges(qstar: &Quiver, theta: &Rat) -> Result<(CentralCharge, CentralCharge)> {
    if !theta.is_positive() {
        return Err(Error::input("theta must be positive"));
    }
    let zero = qstar
        .vertex_index("0")
        .ok_or_else(|| Error::input("extended quiver must have a distinguished vertex `0`"))?;
    let build = |re0: Rat| -> Result<CentralCharge> {
        CentralCharge::new(
            (0..qstar.vertex_count())
                .map(|i| {
                    if i == zero {
                        GaussRat::new(re0.clone(), Rat::one())
                    } else {
                        GaussRat::new(Rat::zero(), Rat::one())
                    }
                })
                .collect(),
        )
    };
    Ok((build(-theta.clone())?, build(theta.clone())?))
}

/// One row of a wall report: the decomposition plus flags for a given
/// charge.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WallReportRow {
    pub m1: Vec<u32>,
    pub m2: Vec<u32>,
    pub on_wall: Option<bool>,
    pub side: Option<i8>,
}

/// Wall list in canonical order, with per-wall on-wall/side flags when a
/// charge is supplied.
pub fn wall_report(m: &DimVector, xi: Option<&CentralCharge>) -> Result<Vec<WallReportRow>> {
    let walls = enumerate_walls(m)?;
    walls
        .iter()
        .map(|w| {
            let (on, side) = match xi {
                Some(xi) => (Some(on_wall(xi, w)?), Some(wall_side(xi, w)?)),
                None => (None, None),
            };
            Ok(WallReportRow {
                m1: w.first().entries().to_vec(),
                m2: w.second().entries().to_vec(),
                on_wall: on,
                side,
            })
        })
        .collect()
}

/// Human-readable rendering of a charge component list.
pub fn charge_display(xi: &CentralCharge) -> Vec<String> {
    xi.values().iter().map(gauss_display).collect()
}

/// Rational rank of the stacked summand vectors.
fn stacked_rank(vectors: &[&DimVector]) -> usize {
    let cols = vectors[0].len();
    let mut rows: Vec<Vec<Rat>> = vectors
        .iter()
        .map(|v| (0..cols).map(|i| rat_int(v.entry(i) as i64)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &lead;
                for c in col..cols {
                    let sub = &factor * &rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Two walls cut out the same hypersurface exactly when their summands
/// span the same rational 2-plane. Distinct decompositions are still
/// reported separately; this feeds the coincidence note.
pub fn walls_coincide(w1: &Wall, w2: &Wall) -> bool {
    stacked_rank(&[w1.first(), w1.second(), w2.first(), w2.second()]) <= 2
}

/// Index pairs (i < j) of coincident walls, in canonical order.
pub fn coincident_wall_pairs(walls: &[Wall]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..walls.len() {
        for j in i + 1..walls.len() {
            if walls_coincide(&walls[i], &walls[j]) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}
