//! Existence of simple representations, with constructive certificates.
//!
//! The decision procedure is the classical two-case criterion: either the
//! support is a loop-free point or a single oriented cycle carrying all
//! ones, or it is strongly connected, not of those shapes, and the Euler
//! pairings of m against every unit vector are nonpositive on both sides.
//! Negative verdicts always carry a criterion-level certificate; they are
//! never delegated to the finite-field oracle, since absence over a small
//! field says nothing in characteristic zero.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver, TrivialType};

/// Which side of the representation a destabilizing unit vector lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Every representation surjects onto the simple at this vertex.
    Quotient,
    /// The simple at this vertex embeds into every representation.
    Sub,
}

/// Certificate attached to a simple-existence verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimpleCertificate {
    /// Support is a loop-free point or a single oriented cycle with all
    /// entries one.
    TypeI { shape: TrivialType },
    /// Case (ii): strongly connected support with all pairings <= 0.
    InequalitiesOk,
    /// Support is a point or cycle shape but some entry is at least two.
    TypeMismatch { vertex: String, entry: u32 },
    /// A unit pairing is positive; every representation of dimension m is
    /// destabilized at this vertex in the given direction.
    DestabilizingVertex { vertex: String, direction: Direction, pairing: i64 },
    /// All pairings pass but the support is not strongly connected; the
    /// witness pair has no directed path from the first to the second.
    NotStronglyConnected { from: String, to: String },
}

/// Verdict of the simple-locus nonemptiness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleVerdict {
    pub exists: bool,
    pub certificate: SimpleCertificate,
}

/// Decides whether a simple representation of dimension vector `m` exists,
/// returning a certificate that justifies the verdict.
pub fn has_simple(quiver: &Quiver, m: &DimVector) -> Result<SimpleVerdict> {
    if m.is_zero() {
        return Err(Error::precondition("dimension vector must be nonzero"));
    }
    quiver.check_dim(m)?;
    let support = m.support();
    let supp_quiver = quiver.support_subquiver(m)?;
    let supp_m = m.restrict(&support);
    let shape = quiver.detect_trivial_type(m)?;

    if shape != TrivialType::Other {
        // Case (i): cycle shapes admit a simple exactly when every entry is 1.
        if let Some(pos) = (0..supp_m.len()).find(|&i| supp_m.entry(i) >= 2) {
            return Ok(SimpleVerdict {
                exists: false,
                certificate: SimpleCertificate::TypeMismatch {
                    vertex: supp_quiver.vertices()[pos].clone(),
                    entry: supp_m.entry(pos),
                },
            });
        }
        return Ok(SimpleVerdict {
            exists: true,
            certificate: SimpleCertificate::TypeI { shape },
        });
    }

    // Case (ii). A violated pairing yields a universal destabilizing
    // subobject or quotient, which is the strongest certificate available,
    // so it is checked before connectivity. Vertices outside the support
    // satisfy the inequalities automatically; we evaluate over the support.
    for i in 0..supp_m.len() {
        let unit = DimVector::unit(supp_m.len(), i);
        let out = supp_quiver.euler_pairing(&supp_m, &unit)?;
        if out > 0 {
            return Ok(SimpleVerdict {
                exists: false,
                certificate: SimpleCertificate::DestabilizingVertex {
                    vertex: supp_quiver.vertices()[i].clone(),
                    direction: Direction::Quotient,
                    pairing: out,
                },
            });
        }
        let inc = supp_quiver.euler_pairing(&unit, &supp_m)?;
        if inc > 0 {
            return Ok(SimpleVerdict {
                exists: false,
                certificate: SimpleCertificate::DestabilizingVertex {
                    vertex: supp_quiver.vertices()[i].clone(),
                    direction: Direction::Sub,
                    pairing: inc,
                },
            });
        }
    }

    if !supp_quiver.is_strongly_connected()? {
        let witness = unreachable_pair(&supp_quiver);
        return Ok(SimpleVerdict {
            exists: false,
            certificate: SimpleCertificate::NotStronglyConnected {
                from: supp_quiver.vertices()[witness.0].clone(),
                to: supp_quiver.vertices()[witness.1].clone(),
            },
        });
    }

    Ok(SimpleVerdict {
        exists: true,
        certificate: SimpleCertificate::InequalitiesOk,
    })
}

fn unreachable_pair(q: &Quiver) -> (usize, usize) {
    for i in 0..q.vertex_count() {
        for j in 0..q.vertex_count() {
            if !q.has_path(i, j) {
                return (i, j);
            }
        }
    }
    unreachable!("called only on quivers that are not strongly connected")
}

/// For a symmetric quiver, nonemptiness of the stable locus is independent
/// of the charge and coincides with existence of a simple representation.
/// Rejects non-symmetric quivers: there the answer genuinely depends on
/// the chamber, and callers must combine `has_simple` with wall data.
pub fn symmetric_stable_nonempty(quiver: &Quiver, m: &DimVector) -> Result<SimpleVerdict> {
    if !quiver.is_symmetric() {
        return Err(Error::input(
            "stable-locus nonemptiness via the simple criterion needs a symmetric quiver; \
             for other quivers combine has_simple with chamber data",
        ));
    }
    has_simple(quiver, m)
}
