//! Symbolic models of Shilov boundaries.
//!
//! Each irreducible domain family has a known Shilov boundary:
//!
//! - `I(p,q)`: the complex Stiefel manifold `U(p)/U(p-q)` of orthonormal
//!   q-frames in complex p-space;
//! - `II(2q)`: `U(2q)/Sp(q)`, the orbit of a maximal-rank skew form;
//! - `II(2q+1)`: `U(2q+1)/(Sp(q) x S^1)`;
//! - `III(n)`: `U(n)/O(n)`, the Lagrangian-type orbit of a symmetric form;
//! - `IV(n)`: the Lie sphere `L^n = (S^1 x S^{n-1})/(Z/2)` with diagonal
//!   antipodal action;
//! - `V`: `SO(10)/SO(7)` (on the nose, not merely up to cover);
//! - `VI`: `S^1 x E6/F4`, known only up to a finite covering.
//!
//! These are used for dimension arithmetic and as the source of the cited
//! homotopy facts; no group elements are ever manipulated.

use std::fmt;

use crate::domains::{DomainSpec, Irreducible};

/// A named compact group with a total dimension formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompactGroup {
    /// `U(n)`, dimension `n^2`.
    Unitary(u32),
    /// `SU(n)`, dimension `n^2 - 1`.
    SpecialUnitary(u32),
    /// Compact symplectic `Sp(n)`, dimension `n(2n+1)`.
    Symplectic(u32),
    /// `O(n)`, dimension `n(n-1)/2`.
    Orthogonal(u32),
    /// `SO(n)`, dimension `n(n-1)/2`.
    SpecialOrthogonal(u32),
    /// Compact simply connected `E6`, dimension 78.
    E6,
    /// Compact `F4`, dimension 52.
    F4,
    /// The circle group, dimension 1.
    Circle,
}

impl CompactGroup {
    pub fn dim(&self) -> u64 {
        match *self {
            CompactGroup::Unitary(n) => u64::from(n) * u64::from(n),
            CompactGroup::SpecialUnitary(n) => u64::from(n) * u64::from(n) - 1,
            CompactGroup::Symplectic(n) => u64::from(n) * (2 * u64::from(n) + 1),
            CompactGroup::Orthogonal(n) | CompactGroup::SpecialOrthogonal(n) => {
                u64::from(n) * (u64::from(n).saturating_sub(1)) / 2
            }
            CompactGroup::E6 => 78,
            CompactGroup::F4 => 52,
            CompactGroup::Circle => 1,
        }
    }
}

impl fmt::Display for CompactGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CompactGroup::Unitary(n) => write!(f, "U({n})"),
            CompactGroup::SpecialUnitary(n) => write!(f, "SU({n})"),
            CompactGroup::Symplectic(n) => write!(f, "Sp({n})"),
            CompactGroup::Orthogonal(n) => write!(f, "O({n})"),
            CompactGroup::SpecialOrthogonal(n) => write!(f, "SO({n})"),
            CompactGroup::E6 => f.write_str("E6"),
            CompactGroup::F4 => f.write_str("F4"),
            CompactGroup::Circle => f.write_str("S^1"),
        }
    }
}

/// Symbolic Shilov boundary: a homogeneous quotient of compact groups, a Lie
/// sphere, or a product of such.
///
/// `exact = false` marks a quotient that describes the boundary only up to a
/// finite covering; among the irreducible families this happens for type VI
/// alone.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ShilovModel {
    Quotient {
        group: CompactGroup,
        subgroups: Vec<CompactGroup>,
        exact: bool,
    },
    LieSphere {
        n: u32,
    },
    Product(Vec<ShilovModel>),
}

impl ShilovModel {
    fn quotient(group: CompactGroup, subgroups: Vec<CompactGroup>) -> Self {
        ShilovModel::Quotient {
            group,
            subgroups,
            exact: true,
        }
    }

    /// Builds a product model, flattening nested products.
    pub fn product(factors: Vec<ShilovModel>) -> Self {
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                ShilovModel::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        ShilovModel::Product(flat)
    }

    /// Manifold dimension: `dim K - sum dim L_i` for quotients, `n` for the
    /// Lie sphere `L^n`, and the sum over factors for products.
    pub fn dim(&self) -> u64 {
        match self {
            ShilovModel::Quotient {
                group, subgroups, ..
            } => {
                let sub: u64 = subgroups.iter().map(CompactGroup::dim).sum();
                group
                    .dim()
                    .checked_sub(sub)
                    .expect("subgroup dimensions never exceed the group dimension")
            }
            ShilovModel::LieSphere { n } => u64::from(*n),
            ShilovModel::Product(factors) => factors.iter().map(ShilovModel::dim).sum(),
        }
    }

    /// False when any component is known only up to a finite covering.
    pub fn is_exact(&self) -> bool {
        match self {
            ShilovModel::Quotient { exact, .. } => *exact,
            ShilovModel::LieSphere { .. } => true,
            ShilovModel::Product(factors) => factors.iter().all(ShilovModel::is_exact),
        }
    }
}

impl fmt::Display for ShilovModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_bare(model: &ShilovModel, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match model {
                ShilovModel::Quotient {
                    group, subgroups, ..
                } => {
                    write!(f, "{group}")?;
                    let visible: Vec<_> = subgroups.iter().filter(|g| g.dim() > 0).collect();
                    match visible.len() {
                        0 => Ok(()),
                        1 => write!(f, "/{}", visible[0]),
                        _ => {
                            write!(f, "/(")?;
                            for (i, g) in visible.iter().enumerate() {
                                if i > 0 {
                                    write!(f, " x ")?;
                                }
                                write!(f, "{g}")?;
                            }
                            write!(f, ")")
                        }
                    }
                }
                ShilovModel::LieSphere { n } => write!(f, "L^{n}"),
                ShilovModel::Product(factors) => {
                    for (i, m) in factors.iter().enumerate() {
                        if i > 0 {
                            write!(f, " x ")?;
                        }
                        write_bare(m, f)?;
                    }
                    Ok(())
                }
            }
        }
        write_bare(self, f)?;
        if !self.is_exact() {
            f.write_str(" (up to finite cover)")?;
        }
        Ok(())
    }
}

fn irreducible_model(d: &Irreducible) -> ShilovModel {
    use CompactGroup::*;
    match *d {
        Irreducible::I { p, q } => ShilovModel::quotient(Unitary(p), vec![Unitary(p - q)]),
        Irreducible::II { n } => {
            if n % 2 == 0 {
                ShilovModel::quotient(Unitary(n), vec![Symplectic(n / 2)])
            } else {
                ShilovModel::quotient(Unitary(n), vec![Symplectic(n / 2), Circle])
            }
        }
        Irreducible::III { n } => ShilovModel::quotient(Unitary(n), vec![Orthogonal(n)]),
        Irreducible::IV { n } => ShilovModel::LieSphere { n },
        Irreducible::V => ShilovModel::quotient(SpecialOrthogonal(10), vec![SpecialOrthogonal(7)]),
        Irreducible::VI => ShilovModel::Product(vec![
            ShilovModel::quotient(Circle, vec![]),
            ShilovModel::Quotient {
                group: E6,
                subgroups: vec![F4],
                exact: false,
            },
        ]),
    }
}

/// Symbolic Shilov boundary model of a canonical domain spec.
pub fn shilov_model(d: &DomainSpec) -> ShilovModel {
    match d {
        DomainSpec::Irreducible(irr) => irreducible_model(irr),
        DomainSpec::Product(factors) => {
            ShilovModel::product(factors.iter().map(irreducible_model).collect())
        }
    }
}

/// Shilov boundary dimension of a canonical domain spec.
pub fn shilov_dim(d: &DomainSpec) -> u64 {
    shilov_model(d).dim()
}

/// Whether the Lie sphere `L^n` is orientable (`n >= 5`).
///
/// `L^n` is the quotient of `S^1 x S^{n-1}` by the diagonal antipodal
/// action; the action preserves orientation precisely when the antipodal map
/// of `S^{n-1}` does, i.e. when `n` is even.
pub fn lie_sphere_orientable(n: u32) -> bool {
    n % 2 == 0
}

/// Whether the sphere bundle `L^n -> S^1` with fiber `S^{n-1}` is trivial
/// (`n >= 5`): exactly when `n` is even, the parity for which the antipodal
/// gluing map lies in the trivial path component of the sphere's
/// homeomorphism group.
pub fn lie_sphere_bundle_trivial(n: u32) -> bool {
    n % 2 == 0
}
