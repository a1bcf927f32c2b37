//! The decision procedure: which invariant separates two Shilov boundaries.
//!
//! Given two canonical domain specs, [`distinguish`] evaluates a fixed
//! sequence of comparisons and stops at the first separator, producing a
//! [`Certificate`] that names the invariant, both values, and the fact the
//! comparison rests on. The sequence is
//!
//! 1. structural equality of canonical specs,
//! 2. free rank of pi_1 (the tube / non-tube split),
//! 3. Shilov boundary dimension,
//! 4. pi_9 nonvanishing (separates `VI` from `IV(27)`),
//! 5. pi_2 nonvanishing (separates type III),
//! 6. cohomology torsion (separates `V` from `I(5,4)` and `I(7,2)`),
//! 7. Poincaré polynomial of the canonical cover.
//!
//! Tri-state comparisons fire only when both sides are recorded; `Unknown`
//! never separates. For distinct irreducible specs one of the steps always
//! fires. Products can exhaust the list — `IV(2n)` against
//! `I(1,1) x I(n,1)` genuinely has a homeomorphic boundary — and then the
//! result is `Inconclusive`.

use std::fmt;

use serde_json::{json, Value};

use crate::domains::{DomainSpec, Irreducible};
use crate::graded::recover_generators;
use crate::invariants::{self, anchors, covers_comparable, InvariantVector};

/// The comparison that settled a certificate, in evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeparationStep {
    CanonicalSpec,
    Pi1FreeRank,
    ShilovDim,
    Pi9,
    Pi2,
    Torsion,
    CoverPoincare,
}

impl SeparationStep {
    pub fn number(self) -> u8 {
        match self {
            SeparationStep::CanonicalSpec => 1,
            SeparationStep::Pi1FreeRank => 2,
            SeparationStep::ShilovDim => 3,
            SeparationStep::Pi9 => 4,
            SeparationStep::Pi2 => 5,
            SeparationStep::Torsion => 6,
            SeparationStep::CoverPoincare => 7,
        }
    }

    /// Field name of the invariant the step compares.
    pub fn invariant_name(self) -> &'static str {
        match self {
            SeparationStep::CanonicalSpec => "canonical_spec",
            SeparationStep::Pi1FreeRank => "pi1_free_rank",
            SeparationStep::ShilovDim => "shilov_dim",
            SeparationStep::Pi9 => "pi9_nonzero",
            SeparationStep::Pi2 => "pi2_nonzero",
            SeparationStep::Torsion => "h_torsion_free",
            SeparationStep::CoverPoincare => "cover_poincare",
        }
    }

    /// The fact that makes the comparison a homotopy invariant.
    pub fn anchor(self) -> &'static str {
        match self {
            SeparationStep::CanonicalSpec => "canonical specs are structural normal forms",
            SeparationStep::Pi1FreeRank => anchors::TUBE_RANK_CRITERION,
            SeparationStep::ShilovDim => anchors::DIM_HOMOTOPY_INVARIANT,
            SeparationStep::Pi9 => anchors::PI9_EIV,
            SeparationStep::Pi2 => anchors::PI2_TYPE_III,
            SeparationStep::Torsion => anchors::TORSION_FREE_STIEFEL,
            SeparationStep::CoverPoincare => anchors::GENERATOR_PROGRESSIONS,
        }
    }
}

impl fmt::Display for SeparationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {} ({})", self.number(), self.invariant_name())
    }
}

/// Outcome of the decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The canonical specs coincide.
    Isomorphic { spec: DomainSpec },
    /// The named invariant takes different values on the two boundaries.
    SeparatedBy {
        step: SeparationStep,
        lhs: String,
        rhs: String,
        anchor: &'static str,
    },
    /// Every recorded invariant agrees; reachable only with products.
    Inconclusive {
        reason: String,
        anchor: Option<&'static str>,
    },
}

impl Certificate {
    pub fn step(&self) -> Option<SeparationStep> {
        match self {
            Certificate::SeparatedBy { step, .. } => Some(*step),
            _ => None,
        }
    }

    pub fn is_separated(&self) -> bool {
        matches!(self, Certificate::SeparatedBy { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Certificate::Inconclusive { .. })
    }

    /// JSON with the stable field set
    /// `{result, step, invariant, lhs, rhs, anchor, reason}`.
    pub fn to_json(&self, include_citations: bool) -> Value {
        match self {
            Certificate::Isomorphic { spec } => json!({
                "result": "isomorphic",
                "step": 1,
                "invariant": "canonical_spec",
                "lhs": spec.to_string(),
                "rhs": spec.to_string(),
                "anchor": Value::Null,
                "reason": Value::Null,
            }),
            Certificate::SeparatedBy {
                step,
                lhs,
                rhs,
                anchor,
            } => json!({
                "result": "separated",
                "step": step.number(),
                "invariant": step.invariant_name(),
                "lhs": lhs,
                "rhs": rhs,
                "anchor": if include_citations { Value::from(*anchor) } else { Value::Null },
                "reason": Value::Null,
            }),
            Certificate::Inconclusive { reason, anchor } => json!({
                "result": "inconclusive",
                "step": Value::Null,
                "invariant": Value::Null,
                "lhs": Value::Null,
                "rhs": Value::Null,
                "anchor": if include_citations { anchor.map(Value::from).unwrap_or(Value::Null) } else { Value::Null },
                "reason": reason,
            }),
        }
    }
}

fn separated(step: SeparationStep, lhs: impl ToString, rhs: impl ToString) -> Certificate {
    Certificate::SeparatedBy {
        step,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        anchor: step.anchor(),
    }
}

/// Renders a cover polynomial for a certificate, appending the recovered
/// exterior generator degrees when the polynomial factors as one.
fn render_cover(v: &InvariantVector) -> String {
    let poly = v
        .cover_poincare
        .as_ref()
        .expect("caller checked availability");
    match recover_generators(poly) {
        Ok(gens) => format!("{poly} = exterior algebra on degrees {gens}"),
        Err(_) => poly.to_string(),
    }
}

/// Detects the known boundary coincidence `IV(2n) ~ I(1,1) x I(n,1)`.
fn is_product_coincidence_pattern(a: &DomainSpec, b: &DomainSpec) -> bool {
    fn matches_pair(lie: &DomainSpec, product: &DomainSpec) -> bool {
        let Some(&Irreducible::IV { n }) = lie.as_irreducible() else {
            return false;
        };
        if n % 2 != 0 {
            return false;
        }
        product.factors()
            == [
                Irreducible::I { p: 1, q: 1 },
                Irreducible::I { p: n / 2, q: 1 },
            ]
    }
    matches_pair(a, b) || matches_pair(b, a)
}

pub(crate) fn distinguish_vectors(
    a: &DomainSpec,
    va: &InvariantVector,
    b: &DomainSpec,
    vb: &InvariantVector,
) -> Certificate {
    if a == b {
        return Certificate::Isomorphic { spec: a.clone() };
    }

    if va.pi1.free_rank != vb.pi1.free_rank {
        return separated(
            SeparationStep::Pi1FreeRank,
            va.pi1.free_rank,
            vb.pi1.free_rank,
        );
    }
    if va.shilov_dim != vb.shilov_dim {
        return separated(SeparationStep::ShilovDim, va.shilov_dim, vb.shilov_dim);
    }

    let tri_steps = [
        (SeparationStep::Pi9, va.pi9_nonzero, vb.pi9_nonzero),
        (SeparationStep::Pi2, va.pi2_nonzero, vb.pi2_nonzero),
        (
            SeparationStep::Torsion,
            va.h_torsion_free,
            vb.h_torsion_free,
        ),
    ];
    for (step, x, y) in tri_steps {
        if x.is_known() && y.is_known() && x != y {
            return separated(step, x, y);
        }
    }

    if covers_comparable(va, vb) && va.cover_poincare != vb.cover_poincare {
        return separated(
            SeparationStep::CoverPoincare,
            render_cover(va),
            render_cover(vb),
        );
    }

    let anchor =
        is_product_coincidence_pattern(a, b).then_some(anchors::REMARK_PRODUCT_COINCIDENCE);
    let reason = if a.is_irreducible() && b.is_irreducible() {
        // unreachable for canonical irreducibles unless the fact table is wrong
        "all recorded invariants agree on two distinct irreducible specs; this contradicts the \
         classification and indicates a defect in the fact table"
            .to_string()
    } else if anchor.is_some() {
        format!("{a} and {b} have homeomorphic Shilov boundaries; no invariant can separate them")
    } else {
        "every invariant recorded for both sides agrees; homotopy equivalence of product \
         boundaries is not decided by this table"
            .to_string()
    };
    Certificate::Inconclusive { reason, anchor }
}

/// Decides how the Shilov boundaries of two canonical domain specs differ,
/// or certifies that the specs coincide.
pub fn distinguish(a: &DomainSpec, b: &DomainSpec) -> Certificate {
    let va = invariants::invariant_vector(a);
    let vb = invariants::invariant_vector(b);
    distinguish_vectors(a, &va, b, &vb)
}

/// Human-readable account of a certificate; deterministic for a given value.
pub fn explain(c: &Certificate) -> String {
    match c {
        Certificate::Isomorphic { spec } => {
            format!("identical canonical type {spec}: the domains are isomorphic")
        }
        Certificate::SeparatedBy {
            step,
            lhs,
            rhs,
            anchor,
        } => {
            let name = match step {
                SeparationStep::CanonicalSpec => "canonical spec",
                SeparationStep::Pi1FreeRank => "free rank of pi_1 of the Shilov boundary",
                SeparationStep::ShilovDim => "dimension of the Shilov boundary",
                SeparationStep::Pi9 => "nonvanishing of pi_9",
                SeparationStep::Pi2 => "nonvanishing of pi_2",
                SeparationStep::Torsion => "torsion-freeness of the integral cohomology",
                SeparationStep::CoverPoincare => "Poincare polynomial of the canonical cover",
            };
            format!("separated at {step}: the {name} differs ({lhs} vs {rhs}). Basis: {anchor}.")
        }
        Certificate::Inconclusive { reason, anchor } => match anchor {
            Some(anchor) => format!("inconclusive: {reason}. Note: {anchor}."),
            None => format!("inconclusive: {reason}."),
        },
    }
}
