use serde::Serialize;

use crate::alphabet::GeneratingMap;
use crate::semigroup::{Element, FiniteSemigroup, Side};

/// `u·a = v·b` (right) or `a·u = b·v` (left) with `a ≠ b` or `u ≠ v`.
/// `None` stands for the adjoined identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LscWitness {
    pub side: Side,
    pub u: Option<Element>,
    pub a: Element,
    pub v: Option<Element>,
    pub b: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LscReport {
    pub verdict: bool,
    pub witness: Option<LscWitness>,
}

/// Letter super-cancellativity of `S` with respect to the image of `φ`:
/// for letters `a, b` and `u, v ∈ S^I`, `ua = vb` forces `a = b` and
/// `u = v`, and dually on the left.
pub fn is_letter_super_cancellative(s: &FiniteSemigroup, phi: &GeneratingMap) -> LscReport {
    let mut image: Vec<Element> = phi.targets().to_vec();
    image.sort_unstable();
    image.dedup();
    let one = s.virtual_identity();
    // adjoined identity first
    let domain: Vec<Element> = std::iter::once(one).chain(s.elements()).collect();
    let opt = |x: Element| (x != one).then_some(x);
    for &a in &image {
        for &b in &image {
            for &u in &domain {
                for &v in &domain {
                    if a == b && u == v {
                        continue;
                    }
                    let side = if s.mul_i(u, a) == s.mul_i(v, b) {
                        Side::Right
                    } else if s.mul_i(a, u) == s.mul_i(b, v) {
                        Side::Left
                    } else {
                        continue;
                    };
                    let witness = LscWitness { side, u: opt(u), a, v: opt(v), b };
                    return LscReport { verdict: false, witness: Some(witness) };
                }
            }
        }
    }
    LscReport { verdict: true, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_fails_at_identity() {
        let s = catalog::trivial();
        let r = is_letter_super_cancellative(&s, &GeneratingMap::identity(&s));
        assert!(!r.verdict);
        let w = r.witness.unwrap();
        assert_eq!(w.side, Side::Right);
        assert_eq!((w.u, w.v), (None, Some(0)));
    }

    #[test]
    fn every_finite_semigroup_fails() {
        for s in [catalog::cyclic_group(3), catalog::semilattice2(), catalog::rectangular_band(2, 2)] {
            assert!(!is_letter_super_cancellative(&s, &GeneratingMap::identity(&s)).verdict);
        }
    }
}
