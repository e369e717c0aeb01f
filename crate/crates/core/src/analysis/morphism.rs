use serde::Serialize;

use crate::hom::Homomorphism;
use crate::identity::{Identity, IdentityWitness};
use crate::semigroup::{Element, FiniteSemigroup};

/// A fiber over an idempotent that violates one of the identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberWitness {
    pub idempotent: Element,
    pub fiber: Vec<Element>,
    pub identity: String,
    pub witness: IdentityWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VMorphismReport {
    pub verdict: bool,
    pub witness: Option<FiberWitness>,
}

/// Checks that `π⁻¹(e)` satisfies every identity, for each idempotent `e` of
/// the target hit by `π`.
pub fn is_v_morphism(
    source: &FiniteSemigroup,
    target: &FiniteSemigroup,
    pi: &Homomorphism,
    identities: &[Identity],
) -> VMorphismReport {
    for e in target.idempotents() {
        let fiber = pi.fiber(e);
        for id in identities {
            if let Some(witness) = id.counterexample_on(source, &fiber) {
                let witness = FiberWitness { idempotent: e, fiber, identity: id.to_string(), witness };
                return VMorphismReport { verdict: false, witness: Some(witness) };
            }
        }
    }
    VMorphismReport { verdict: true, witness: None }
}

/// First `(e, x)` with `x ∈ π⁻¹(e)` and `x^ω ≠ x^{ω+1}`, if any.
pub fn is_aperiodic_morphism(
    source: &FiniteSemigroup,
    target: &FiniteSemigroup,
    pi: &Homomorphism,
) -> Result<(), (Element, Element)> {
    for e in target.idempotents() {
        for x in pi.fiber(e) {
            if source.omega(x) != source.omega_power(x, 1) {
                return Err((e, x));
            }
        }
    }
    Ok(())
}
