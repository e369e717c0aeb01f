use serde::Serialize;

use crate::semigroup::{Element, FiniteSemigroup};

/// Factorizations `uv = xy`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Quadruple {
    pub u: Element,
    pub v: Element,
    pub x: Element,
    pub y: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquidivisibilityReport {
    pub verdict: bool,
    pub witness: Option<Quadruple>,
}

/// `tables[a][b]`: bitset of `t ∈ S^I` with `a·t = b` (right) or `t·a = b`
/// (left).
struct Divisors {
    words: usize,
    right: Vec<u64>,
    left: Vec<u64>,
    n: usize,
}

impl Divisors {
    fn new(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        let words = (n + 1).div_ceil(64);
        let mut right = vec![0u64; n * n * words];
        let mut left = vec![0u64; n * n * words];
        for a in s.elements() {
            for t in s.elements_i() {
                let b = s.mul_i(a, t);
                right[(a * n + b) * words + t / 64] |= 1 << (t % 64);
                let b = s.mul_i(t, a);
                left[(a * n + b) * words + t / 64] |= 1 << (t % 64);
            }
        }
        Self { words, right, left, n }
    }

    fn right(&self, a: Element, b: Element) -> &[u64] {
        let i = (a * self.n + b) * self.words;
        &self.right[i..i + self.words]
    }

    fn left(&self, a: Element, b: Element) -> &[u64] {
        let i = (a * self.n + b) * self.words;
        &self.left[i..i + self.words]
    }

    fn meets(p: &[u64], q: &[u64]) -> bool {
        p.iter().zip(q).any(|(a, b)| a & b != 0)
    }

    /// Some `t ∈ S^I` has `u t = x ∧ v = t y`, or `u = x t ∧ t v = y`.
    fn refines(&self, u: Element, v: Element, x: Element, y: Element) -> bool {
        Self::meets(self.right(u, x), self.left(y, v)) || Self::meets(self.right(x, u), self.left(v, y))
    }
}

/// Direct check of the refinement condition for one quadruple, by scanning
/// `t` over `S^I`.
pub fn admits_refinement(s: &FiniteSemigroup, q: Quadruple) -> bool {
    let Quadruple { u, v, x, y } = q;
    s.elements_i().any(|t| {
        (s.mul_i(u, t) == x && v == s.mul_i(t, y)) || (u == s.mul_i(x, t) && s.mul_i(t, v) == y)
    })
}

/// For every `u, v, x, y` of `upper` with `uv = xy`, look for `t` in
/// `lower^I` refining the projected factorizations. Returns the first failure
/// in lexicographic order of `(u, v, x, y)`.
fn first_failure(upper: &FiniteSemigroup, lower: &FiniteSemigroup, proj: &[Element]) -> Option<Quadruple> {
    let m = upper.order();
    let div = Divisors::new(lower);
    let mut by_product: Vec<Vec<(Element, Element)>> = vec![Vec::new(); m];
    for x in upper.elements() {
        for y in upper.elements() {
            by_product[upper.mul(x, y)].push((x, y));
        }
    }
    for u in upper.elements() {
        for v in upper.elements() {
            for &(x, y) in &by_product[upper.mul(u, v)] {
                if !div.refines(proj[u], proj[v], proj[x], proj[y]) {
                    return Some(Quadruple { u, v, x, y });
                }
            }
        }
    }
    None
}

/// Brute-force equidivisibility test over all quadruples with `uv = xy`.
pub fn is_equidivisible(s: &FiniteSemigroup) -> EquidivisibilityReport {
    let id: Vec<Element> = s.elements().collect();
    let witness = first_failure(s, s, &id);
    if let Some(q) = witness {
        debug_assert!(!admits_refinement(s, q));
    }
    EquidivisibilityReport { verdict: witness.is_none(), witness }
}

/// For `π: T → S`, checks that every `uv = xy` in `T` admits `t ∈ S^I` with
/// `π(u)t = π(x) ∧ π(v) = tπ(y)` or `π(u) = π(x)t ∧ tπ(v) = π(y)`.
pub fn distance_one_equidivisibility(
    upper: &FiniteSemigroup,
    lower: &FiniteSemigroup,
    projection: &[Element],
) -> EquidivisibilityReport {
    let witness = first_failure(upper, lower, projection);
    EquidivisibilityReport { verdict: witness.is_none(), witness }
}
