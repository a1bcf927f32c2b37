//! Bounded exhaustive verification.
//!
//! [`verify_theorem`] enumerates every canonical irreducible domain with
//! ambient dimension below a bound, runs the distinguisher on all unordered
//! pairs, and records any pair it fails to separate, together with a battery
//! of cross-module identity checks. An empty failure list reproduces, at
//! desk scale, the classification statement that irreducible domains are
//! determined by their Shilov boundaries.
//!
//! [`find_coincidences`] extends the enumeration to products and reports the
//! pairs the invariant table genuinely cannot separate — reducible domains
//! do collide.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::boundary;
use crate::distinguish::{distinguish_vectors, Certificate};
use crate::domains::{DomainSpec, Irreducible, TubeClass};
use crate::graded::GradedPoly;
use crate::invariants::{
    invariant_vector, type_v_alexander_check, CoverKind, InvariantVector, TriState,
};

/// A pair the sweep could not separate (or wrongly merged).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFailure {
    pub lhs: DomainSpec,
    pub rhs: DomainSpec,
    pub reason: String,
}

/// One cross-module identity verified over the enumerated range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Two structurally distinct specs whose recorded invariants all agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coincidence {
    pub lhs: DomainSpec,
    pub rhs: DomainSpec,
    /// The data both sides agree on; fields recorded on only one side are
    /// reported as unknown.
    pub shared: InvariantVector,
}

/// Outcome of a verification sweep.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub max_ambient_dim: u64,
    pub domain_count: usize,
    pub pair_count: usize,
    pub failures: Vec<PairFailure>,
    pub identity_checks: Vec<IdentityCheck>,
    /// How many pairs each step of the procedure settled.
    pub separations_by_step: BTreeMap<u8, usize>,
    pub coincidences: Vec<Coincidence>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// True when no pair failed and every identity check passed.
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.identity_checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_ambient_dim": self.max_ambient_dim,
            "domain_count": self.domain_count,
            "pair_count": self.pair_count,
            "failures": self.failures.iter().map(|f| json!({
                "lhs": f.lhs.to_string(),
                "rhs": f.rhs.to_string(),
                "reason": f.reason,
            })).collect::<Vec<_>>(),
            "identity_checks": self.identity_checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "separations_by_step": self.separations_by_step.iter()
                .map(|(step, count)| (step.to_string(), Value::from(*count)))
                .collect::<serde_json::Map<String, Value>>(),
            "coincidences": self.coincidences.iter().map(|c| json!({
                "lhs": c.lhs.to_string(),
                "rhs": c.rhs.to_string(),
                "shared": c.shared.to_json(false),
            })).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed.as_secs_f64() * 1e3,
            "verified": self.all_passed(),
        })
    }

    /// Plain-text rendering, one line per identity check and failure.
    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "sweep up to ambient dimension {}: {} domains, {} pairs",
            self.max_ambient_dim, self.domain_count, self.pair_count
        );
        for c in &self.identity_checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "  [{status}] {} ({})", c.name, c.detail);
        }
        if !self.separations_by_step.is_empty() {
            let hist: Vec<String> = self
                .separations_by_step
                .iter()
                .map(|(s, n)| format!("step {s}: {n}"))
                .collect();
            let _ = writeln!(out, "  separations: {}", hist.join(", "));
        }
        if self.failures.is_empty() {
            let _ = writeln!(out, "  failures: none");
        } else {
            let _ = writeln!(out, "  failures: {}", self.failures.len());
            for f in &self.failures {
                let _ = writeln!(out, "    {} vs {}: {}", f.lhs, f.rhs, f.reason);
            }
        }
        for c in &self.coincidences {
            let _ = writeln!(
                out,
                "  coincidence: {} ~ {} (shilov_dim {}, pi1 rank {})",
                c.lhs, c.rhs, c.shared.shilov_dim, c.shared.pi1.free_rank
            );
        }
        let _ = writeln!(out, "  elapsed: {:.3}s", self.elapsed.as_secs_f64());
        let _ = writeln!(
            out,
            "result: {}",
            if self.all_passed() {
                "verified"
            } else {
                "FAILED"
            }
        );
        out
    }
}

/// All canonical irreducible domains with `ambient_dim <= max_ambient_dim`,
/// in ascending family-then-parameter order.
pub fn enumerate_domains(max_ambient_dim: u64) -> Vec<Irreducible> {
    let bound = max_ambient_dim;
    let mut out = Vec::new();
    // I(p,q): 2pq <= bound, p >= q >= 1
    let p_max = (bound / 2) as u32;
    for p in 1..=p_max {
        for q in 1..=p {
            if 2 * u64::from(p) * u64::from(q) > bound {
                break;
            }
            out.push(Irreducible::I { p, q });
        }
    }
    // II(n), n >= 5: dimension n(n-1)
    let mut n = 5u32;
    while u64::from(n) * (u64::from(n) - 1) <= bound {
        out.push(Irreducible::II { n });
        n += 1;
    }
    // III(n), n >= 2: dimension n(n+1)
    let mut n = 2u32;
    while u64::from(n) * (u64::from(n) + 1) <= bound {
        out.push(Irreducible::III { n });
        n += 1;
    }
    // IV(n), n >= 5: dimension 2n
    let mut n = 5u32;
    while 2 * u64::from(n) <= bound {
        out.push(Irreducible::IV { n });
        n += 1;
    }
    if 32 <= bound {
        out.push(Irreducible::V);
    }
    if 54 <= bound {
        out.push(Irreducible::VI);
    }
    out
}

fn identity_checks(domains: &[Irreducible]) -> Vec<IdentityCheck> {
    let mut checks = Vec::new();

    let tube: Vec<&Irreducible> = domains.iter().filter(|d| d.is_tube()).collect();
    let halving_ok = tube.iter().all(|d| {
        let spec = DomainSpec::Irreducible(**d);
        2 * boundary::shilov_dim(&spec) == d.ambient_dim()
    });
    checks.push(IdentityCheck {
        name: "tube-halving",
        passed: halving_ok,
        detail: format!(
            "boundary dim = ambient dim / 2 on {} tube domains",
            tube.len()
        ),
    });

    let mut covers = 0usize;
    let mut degree_sum_ok = true;
    for d in domains {
        let v = invariant_vector(&DomainSpec::Irreducible(*d));
        if let Some(p) = &v.cover_poincare {
            covers += 1;
            degree_sum_ok &= p.top_degree() == Some(v.shilov_dim);
        }
    }
    checks.push(IdentityCheck {
        name: "cover-degree-sum",
        passed: degree_sum_ok,
        detail: format!("top degree = boundary dim on {covers} cover polynomials"),
    });

    let mut non_tube = 0usize;
    let column_ok = domains
        .iter()
        .filter(|d| d.tube_class() == TubeClass::NonTube)
        .all(|d| {
            non_tube += 1;
            let spec = DomainSpec::Irreducible(*d);
            let expected = match *d {
                Irreducible::I { p, q } => {
                    2 * u64::from(p) * u64::from(q) - u64::from(q) * u64::from(q)
                }
                Irreducible::II { n } => {
                    let q = u64::from(n / 2);
                    2 * q * q + 3 * q
                }
                Irreducible::V => 24,
                _ => unreachable!("non-tube families are I, II(odd), V"),
            };
            boundary::shilov_dim(&spec) == expected
        });
    checks.push(IdentityCheck {
        name: "non-tube-shilov-column",
        passed: column_ok,
        detail: format!("closed dimension formulas on {non_tube} non-tube domains"),
    });

    let lie_spheres: Vec<u32> = domains
        .iter()
        .filter_map(|d| match d {
            Irreducible::IV { n } => Some(*n),
            _ => None,
        })
        .collect();
    let parity_ok = lie_spheres.iter().all(|&n| {
        boundary::lie_sphere_bundle_trivial(n) == boundary::lie_sphere_orientable(n)
            && boundary::lie_sphere_bundle_trivial(n) == (n % 2 == 0)
    });
    checks.push(IdentityCheck {
        name: "lie-sphere-parity",
        passed: parity_ok,
        detail: format!(
            "bundle triviality = orientability = evenness on {} Lie spheres",
            lie_spheres.len()
        ),
    });

    checks.push(IdentityCheck {
        name: "type-v-duality",
        passed: type_v_alexander_check(),
        detail: "boundary sphere 31, Shilov dim 24, fiber dim 10, base dim 21, 29 > 21".into(),
    });

    checks
}

/// Runs the distinguisher on every unordered pair of enumerated irreducible
/// domains and collects failures plus the identity checks.
pub fn verify_theorem(max_ambient_dim: u64) -> VerificationReport {
    let start = Instant::now();
    let domains = enumerate_domains(max_ambient_dim);
    let specs: Vec<DomainSpec> = domains
        .iter()
        .map(|d| DomainSpec::Irreducible(*d))
        .collect();
    let vectors: Vec<InvariantVector> = specs.iter().map(invariant_vector).collect();

    let mut failures = Vec::new();
    let mut separations_by_step = BTreeMap::new();
    let mut pair_count = 0usize;
    for i in 0..specs.len() {
        for j in i + 1..specs.len() {
            pair_count += 1;
            match distinguish_vectors(&specs[i], &vectors[i], &specs[j], &vectors[j]) {
                Certificate::SeparatedBy { step, .. } => {
                    *separations_by_step.entry(step.number()).or_insert(0) += 1;
                }
                Certificate::Isomorphic { .. } => failures.push(PairFailure {
                    lhs: specs[i].clone(),
                    rhs: specs[j].clone(),
                    reason: "distinct canonical specs reported isomorphic".into(),
                }),
                Certificate::Inconclusive { reason, .. } => failures.push(PairFailure {
                    lhs: specs[i].clone(),
                    rhs: specs[j].clone(),
                    reason,
                }),
            }
        }
    }

    VerificationReport {
        max_ambient_dim,
        domain_count: domains.len(),
        pair_count,
        failures,
        identity_checks: identity_checks(&domains),
        separations_by_step,
        coincidences: Vec::new(),
        elapsed: start.elapsed(),
    }
}

fn shared_vector(a: &InvariantVector, b: &InvariantVector) -> InvariantVector {
    fn both_known(x: TriState, y: TriState) -> TriState {
        if x.is_known() && y.is_known() {
            debug_assert_eq!(x, y);
            x
        } else {
            TriState::Unknown
        }
    }
    let (cover_poincare, cover_kind): (Option<GradedPoly>, CoverKind) =
        if crate::invariants::covers_comparable(a, b) {
            let kind = if a.cover_kind == b.cover_kind {
                a.cover_kind
            } else {
                CoverKind::CanonicalZCover
            };
            (a.cover_poincare.clone(), kind)
        } else {
            (None, CoverKind::Unavailable)
        };
    let mut citations = a.citations.clone();
    for c in &b.citations {
        if !citations.contains(c) {
            citations.push(c.clone());
        }
    }
    InvariantVector {
        shilov_dim: a.shilov_dim,
        pi1: a.pi1,
        pi2_nonzero: both_known(a.pi2_nonzero, b.pi2_nonzero),
        pi9_nonzero: both_known(a.pi9_nonzero, b.pi9_nonzero),
        h_torsion_free: both_known(a.h_torsion_free, b.h_torsion_free),
        orientable: both_known(a.orientable, b.orientable),
        cover_poincare,
        cover_kind,
        citations,
    }
}

/// Enumerates products of up to `max_factors` canonical irreducibles within
/// the ambient dimension bound and reports every structurally distinct pair
/// whose recorded invariants all agree.
pub fn find_coincidences(max_ambient_dim: u64, max_factors: u32) -> Vec<Coincidence> {
    let irreducibles = enumerate_domains(max_ambient_dim);

    let mut specs: Vec<DomainSpec> = irreducibles
        .iter()
        .map(|d| DomainSpec::Irreducible(*d))
        .collect();
    // products of k factors, factors nondecreasing in the enumeration order
    let mut stack: Vec<Irreducible> = Vec::new();
    fn push_products(
        irreducibles: &[Irreducible],
        start: usize,
        remaining_dim: u64,
        factors_left: u32,
        stack: &mut Vec<Irreducible>,
        out: &mut Vec<DomainSpec>,
    ) {
        if stack.len() >= 2 {
            out.push(DomainSpec::product(stack.clone()).expect("nonempty"));
        }
        if factors_left == 0 {
            return;
        }
        for (offset, d) in irreducibles[start..].iter().enumerate() {
            let dim = d.ambient_dim();
            if dim > remaining_dim {
                continue;
            }
            stack.push(*d);
            push_products(
                irreducibles,
                start + offset,
                remaining_dim - dim,
                factors_left - 1,
                stack,
                out,
            );
            stack.pop();
        }
    }
    if max_factors >= 2 {
        push_products(
            &irreducibles,
            0,
            max_ambient_dim,
            max_factors,
            &mut stack,
            &mut specs,
        );
    }

    let vectors: Vec<InvariantVector> = specs.iter().map(invariant_vector).collect();

    // only pairs with equal pi_1 rank and boundary dimension can collide
    let mut buckets: BTreeMap<(u32, u64), Vec<usize>> = BTreeMap::new();
    for (idx, v) in vectors.iter().enumerate() {
        buckets
            .entry((v.pi1.free_rank, v.shilov_dim))
            .or_default()
            .push(idx);
    }

    let mut hits: Vec<(usize, usize)> = Vec::new();
    for indices in buckets.values() {
        for (a_pos, &i) in indices.iter().enumerate() {
            for &j in &indices[a_pos + 1..] {
                let cert = distinguish_vectors(&specs[i], &vectors[i], &specs[j], &vectors[j]);
                if cert.is_inconclusive() {
                    hits.push((i.min(j), i.max(j)));
                }
            }
        }
    }
    hits.sort_unstable();

    hits.into_iter()
        .map(|(i, j)| Coincidence {
            lhs: specs[i].clone(),
            rhs: specs[j].clone(),
            shared: shared_vector(&vectors[i], &vectors[j]),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> DomainSpec {
        DomainSpec::parse(s).unwrap()
    }

    #[test]
    fn enumeration_at_small_bounds() {
        let at = |bound: u64| -> Vec<String> {
            enumerate_domains(bound)
                .iter()
                .map(|d| d.to_string())
                .collect()
        };
        assert_eq!(
            at(10),
            ["I(1,1)", "I(2,1)", "I(2,2)", "I(3,1)", "I(4,1)", "I(5,1)", "III(2)", "IV(5)"]
        );
        assert_eq!(at(2), ["I(1,1)"]);
        assert_eq!(at(1), Vec::<String>::new());
    }

    #[test]
    fn enumeration_includes_the_exceptional_domains_at_their_dimensions() {
        let domains = enumerate_domains(54);
        assert_eq!(domains.iter().filter(|d| **d == Irreducible::VI).count(), 1);
        assert_eq!(domains.iter().filter(|d| **d == Irreducible::V).count(), 1);
        let domains = enumerate_domains(53);
        assert!(!domains.contains(&Irreducible::VI));
        let domains = enumerate_domains(31);
        assert!(!domains.contains(&Irreducible::V));
    }

    #[test]
    fn enumeration_respects_the_bound_and_order() {
        let bound = 120;
        let domains = enumerate_domains(bound);
        assert!(domains.iter().all(|d| d.ambient_dim() <= bound));
        assert!(domains.iter().all(|d| d.is_canonical()));
        // strictly ascending in the derived order, hence duplicate-free
        assert!(domains.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sweep_at_dimension_54_separates_everything() {
        let report = verify_theorem(54);
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        assert!(report.all_passed());
        assert_eq!(report.domain_count, enumerate_domains(54).len());
        assert_eq!(
            report.pair_count,
            report.domain_count * (report.domain_count - 1) / 2
        );
        // exactly one pair in range needs the pi_9 step: VI against IV(27)
        assert_eq!(report.separations_by_step.get(&4), Some(&1));
    }

    #[test]
    fn sweep_failures_are_monotone_under_the_bound() {
        let small = verify_theorem(40);
        let large = verify_theorem(80);
        assert!(small.failures.is_empty() && large.failures.is_empty());
        let small_domains = enumerate_domains(40);
        let large_domains = enumerate_domains(80);
        assert!(small_domains.iter().all(|d| large_domains.contains(d)));
    }

    #[test]
    fn reports_are_deterministic_modulo_elapsed() {
        let strip = |mut v: Value| {
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v
        };
        let a = strip(verify_theorem(60).to_json());
        let b = strip(verify_theorem(60).to_json());
        assert_eq!(a, b);
        let a = find_coincidences(20, 2);
        let b = find_coincidences(20, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn coincidences_reproduce_the_lie_ball_products() {
        let hits = find_coincidences(20, 2);
        let has = |a: &str, b: &str| {
            let (a, b) = (parse(a), parse(b));
            hits.iter()
                .any(|c| (c.lhs == a && c.rhs == b) || (c.lhs == b && c.rhs == a))
        };
        assert!(has("IV(6)", "I(1,1) x I(3,1)"), "{hits:?}");
        assert!(has("IV(8)", "I(1,1) x I(4,1)"), "{hits:?}");
        assert!(has("IV(10)", "I(1,1) x I(5,1)"), "{hits:?}");
    }

    #[test]
    fn irreducibles_alone_never_collide() {
        assert!(find_coincidences(8, 1).is_empty());
        assert!(find_coincidences(54, 1).is_empty());
    }

    #[test]
    fn two_factor_coincidences_with_a_lie_ball_match_the_product_pattern() {
        for c in find_coincidences(20, 2) {
            let members = [&c.lhs, &c.rhs];
            let lie = members.iter().find_map(|s| match s.as_irreducible() {
                Some(Irreducible::IV { n }) => Some(*n),
                _ => None,
            });
            if let Some(n) = lie {
                assert_eq!(n % 2, 0, "{c:?}");
                let product = members
                    .iter()
                    .find(|s| !s.is_irreducible())
                    .expect("a Lie ball only collides with a product");
                assert_eq!(
                    product.factors(),
                    [
                        Irreducible::I { p: 1, q: 1 },
                        Irreducible::I { p: n / 2, q: 1 }
                    ],
                    "{c:?}"
                );
            }
        }
    }

    #[test]
    fn shared_vectors_keep_only_mutual_knowledge() {
        let hits = find_coincidences(20, 2);
        let hit = hits
            .iter()
            .find(|c| c.lhs == parse("IV(8)") || c.rhs == parse("IV(8)"))
            .unwrap();
        // IV(8) knows orientable=yes, the product does not; torsion is the reverse
        assert_eq!(hit.shared.orientable, TriState::Unknown);
        assert_eq!(hit.shared.h_torsion_free, TriState::Unknown);
        assert_eq!(hit.shared.pi2_nonzero, TriState::No);
        assert_eq!(hit.shared.shilov_dim, 8);
        assert!(hit.shared.cover_poincare.is_some());
    }

    #[test]
    fn report_text_and_json_expose_the_checks() {
        let report = verify_theorem(40);
        let text = report.render_text();
        assert!(text.contains("tube-halving"));
        assert!(text.contains("type-v-duality"));
        assert!(text.contains("result: verified"));
        let j = report.to_json();
        assert_eq!(j["verified"], true);
        assert_eq!(j["failures"].as_array().unwrap().len(), 0);
        assert_eq!(j["identity_checks"].as_array().unwrap().len(), 5);
    }
}
