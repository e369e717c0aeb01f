use serde::Serialize;

use super::AnalysisError;
use crate::alphabet::GeneratingMap;
use crate::budget::{Budget, Meter};
use crate::hom::Homomorphism;
use crate::kr::{kr_expand, KrExpansion};
use crate::semigroup::{Element, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KrCoverReport {
    pub verdict: bool,
    pub expansion_order: usize,
    /// `θ: S → S_φ^KR` with `π∘θ = Id`, when one exists.
    pub theta: Option<Vec<Element>>,
    pub search_nodes: u64,
}

/// Decides whether the projection `S_φ^KR → S` splits, with `φ` the identity
/// generating map.
pub fn is_kr_cover(s: &FiniteSemigroup, budget: &Budget) -> Result<KrCoverReport, AnalysisError> {
    is_kr_cover_with(s, &GeneratingMap::identity(s), budget)
}

/// As [`is_kr_cover`] for an arbitrary generating map. The expansion and the
/// section search draw on separate meters of the same budget.
pub fn is_kr_cover_with(
    s: &FiniteSemigroup,
    phi: &GeneratingMap,
    budget: &Budget,
) -> Result<KrCoverReport, AnalysisError> {
    let exp = kr_expand(s, phi, budget)?;
    let mut meter = budget.meter();
    let mut search = Search::new(s, &exp);
    let found = search.run(&mut meter)?;
    let theta = if found {
        let map: Vec<Element> = search.theta.iter().map(|t| t.expect("complete assignment")).collect();
        let hom = Homomorphism::new(s, exp.result(), map.clone())?;
        debug_assert!(s.elements().all(|x| exp.projection().apply(hom.apply(x)) == x));
        Some(map)
    } else {
        None
    };
    Ok(KrCoverReport { verdict: found, expansion_order: exp.order(), theta, search_nodes: meter.used() })
}

/// Backtracking search for a section of the projection. Each assignment is
/// closed under products with all assigned elements before branching.
struct Search<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    theta: Vec<Option<Element>>,
    assigned: Vec<Element>,
    order: Vec<Element>,
    candidates: Vec<Vec<Element>>,
}

impl<'a> Search<'a> {
    fn new(s: &'a FiniteSemigroup, exp: &'a KrExpansion) -> Self {
        let t = exp.result();
        let pi = exp.projection();
        let candidates = s
            .elements()
            .map(|x| {
                let (index, period) = s.index_and_period(x);
                pi.fiber(x)
                    .into_iter()
                    .filter(|&c| {
                        if s.is_idempotent(x) {
                            t.is_idempotent(c)
                        } else {
                            t.power(c, index) == t.power(c, index + period)
                        }
                    })
                    .collect()
            })
            .collect();
        let greens = s.greens();
        let mut order = Vec::with_capacity(s.order());
        for &j in greens.j_classes_top_down() {
            let class = &greens.j_classes[j];
            order.extend(class.iter().copied().filter(|&x| s.is_idempotent(x)));
            order.extend(class.iter().copied().filter(|&x| !s.is_idempotent(x)));
        }
        Self { s, t, theta: vec![None; s.order()], assigned: Vec::new(), order, candidates }
    }

    fn run(&mut self, meter: &mut Meter<'_>) -> Result<bool, AnalysisError> {
        let Some(x) = self.order.iter().copied().find(|&x| self.theta[x].is_none()) else {
            return Ok(true);
        };
        for i in 0..self.candidates[x].len() {
            meter.tick(1)?;
            let c = self.candidates[x][i];
            let mark = self.assigned.len();
            if self.assign(x, c, meter)? && self.run(meter)? {
                return Ok(true);
            }
            for y in self.assigned.drain(mark..) {
                self.theta[y] = None;
            }
        }
        Ok(false)
    }

    /// Assigns `θ(x) = c` and everything it forces. Returns false on a
    /// conflict; the caller undoes the trail.
    fn assign(&mut self, x: Element, c: Element, meter: &mut Meter<'_>) -> Result<bool, AnalysisError> {
        let mut queue = vec![(x, c)];
        while let Some((x, c)) = queue.pop() {
            match self.theta[x] {
                Some(d) if d == c => continue,
                Some(_) => return Ok(false),
                None => {}
            }
            if !self.candidates[x].contains(&c) {
                return Ok(false);
            }
            meter.tick(1)?;
            self.theta[x] = Some(c);
            self.assigned.push(x);
            for i in 0..self.assigned.len() {
                let y = self.assigned[i];
                let d = self.theta[y].expect("assigned");
                queue.push((self.s.mul(x, y), self.t.mul(c, d)));
                queue.push((self.s.mul(y, x), self.t.mul(d, c)));
            }
        }
        Ok(true)
    }
}

/// Runs [`is_kr_cover`] on `S^I`, after confirming that `S` itself is a
/// cover. Returns the report for `S^I`.
pub fn check_identity_adjunction_preserves_cover(
    s: &FiniteSemigroup,
    budget: &Budget,
) -> Result<KrCoverReport, AnalysisError> {
    if !is_kr_cover(s, budget)?.verdict {
        return Err(AnalysisError::PreconditionFailed("the semigroup is not a KR-cover".into()));
    }
    is_kr_cover(&s.adjoin_identity(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn verdict(s: &FiniteSemigroup) -> bool {
        is_kr_cover(s, &Budget::default()).unwrap().verdict
    }

    #[test]
    fn semilattice_is_cover() {
        let r = is_kr_cover(&catalog::semilattice2(), &Budget::default()).unwrap();
        assert!(r.verdict);
        assert_eq!(r.expansion_order, 10);
        assert!(r.theta.is_some());
    }

    #[test]
    fn groups_with_zero_are_not() {
        assert!(!verdict(&catalog::z_n_zero(2)));
        assert!(!verdict(&catalog::z_n_zero(3)));
    }

    #[test]
    fn completely_simple_are_covers() {
        assert!(verdict(&catalog::rectangular_band(2, 2)));
        assert!(verdict(&catalog::cyclic_group(3)));
        let p = vec![vec![0, 0], vec![0, 1]];
        assert!(verdict(&FiniteSemigroup::rees_matrix(&catalog::cyclic_group(2), &p).unwrap()));
    }

    #[test]
    fn theta_is_a_section() {
        let s = catalog::rectangular_band(2, 2);
        let r = is_kr_cover(&s, &Budget::default()).unwrap();
        let exp = kr_expand(&s, &GeneratingMap::identity(&s), &Budget::default()).unwrap();
        let theta = Homomorphism::new(&s, exp.result(), r.theta.unwrap()).unwrap();
        for x in s.elements() {
            assert_eq!(exp.projection().apply(theta.apply(x)), x);
        }
    }

    #[test]
    fn tiny_budget_is_reported() {
        let e = is_kr_cover(&catalog::z_n_zero(3), &Budget::new(5)).unwrap_err();
        assert!(e.is_budget());
    }

    #[test]
    fn adjunction_refuses_non_covers() {
        let e = check_identity_adjunction_preserves_cover(&catalog::z_n_zero(2), &Budget::default());
        assert!(matches!(e, Err(AnalysisError::PreconditionFailed(_))));
        assert!(check_identity_adjunction_preserves_cover(&catalog::semilattice2(), &Budget::default())
            .unwrap()
            .verdict);
    }
}
