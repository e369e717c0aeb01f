use serde::Serialize;

use crate::alphabet::{all_words, Letter};
use crate::kr::KrTower;
use crate::semigroup::Element;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelAbsorption {
    pub level: usize,
    /// `[b]_n^ω`.
    pub z: Element,
    pub in_minimal_ideal: bool,
    pub words_checked: usize,
    /// First `w` (empty for `z·z`) with `z[w]z ≠ z`.
    pub failure: Option<Vec<Letter>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsorptionReport {
    pub passed: bool,
    pub levels: Vec<LevelAbsorption>,
}

/// At each level, `z = [b]_n^ω` must satisfy `z·[w]_n·z = z` for every word
/// `w` with `|w| ≤ max_len` (including the empty word) and lie in the
/// minimal ideal.
pub fn check_absorption(tower: &KrTower, b: Letter, max_len: usize) -> AbsorptionReport {
    let k = tower.level_map(0).len();
    let words = all_words(k, max_len);
    let mut levels = Vec::with_capacity(tower.len());
    for n in 0..tower.len() {
        let s = tower.level(n);
        let z = s.omega(tower.level_map(n).target(b));
        let in_minimal_ideal = s.minimal_ideal().contains(&z);
        let failure = if s.mul(z, z) != z {
            Some(Vec::new())
        } else {
            words
                .iter()
                .find(|w| s.mul(s.mul(z, tower.class_at(n, w)), z) != z)
                .map(|w| w.letters().to_vec())
        };
        levels.push(LevelAbsorption { level: n, z, in_minimal_ideal, words_checked: words.len() + 1, failure });
    }
    let passed = levels.iter().all(|l| l.in_minimal_ideal && l.failure.is_none());
    AbsorptionReport { passed, levels }
}

/// Letter super-cancellativity violations counted over words: tuples
/// `(u, a, v, b)` with `|u|, |v| ≤ max_len` (empty allowed) and letters
/// `a, b` such that `[ua]_n = [vb]_n` (right) or `[au]_n = [bv]_n` (left)
/// while `a ≠ b` or `[u]_n ≠ [v]_n`. This is a finite probe, not a decision
/// procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelLsc {
    pub level: usize,
    pub right_violations: usize,
    pub left_violations: usize,
    pub approximate: bool,
}

impl LevelLsc {
    pub fn violations(&self) -> usize {
        self.right_violations + self.left_violations
    }
}

pub fn check_tower_lsc(tower: &KrTower, max_len: usize) -> Vec<LevelLsc> {
    let k = tower.level_map(0).len();
    let words = all_words(k, max_len);
    (0..tower.len())
        .map(|n| {
            let s = tower.level(n);
            let phi = tower.level_map(n);
            let one = s.virtual_identity();
            // empty word first
            let classes: Vec<Element> =
                std::iter::once(one).chain(words.iter().map(|w| phi.evaluate(s, w))).collect();
            let mut right = 0;
            let mut left = 0;
            for a in 0..k {
                let ea = phi.target(a);
                for b in 0..k {
                    let eb = phi.target(b);
                    for &u in &classes {
                        for &v in &classes {
                            if a == b && u == v {
                                continue;
                            }
                            if s.mul_i(u, ea) == s.mul_i(v, eb) {
                                right += 1;
                            }
                            if s.mul_i(ea, u) == s.mul_i(eb, v) {
                                left += 1;
                            }
                        }
                    }
                }
            }
            LevelLsc { level: n, right_violations: right, left_violations: left, approximate: true }
        })
        .collect()
}

/// Structural checks on a tower: every connecting map is onto and carries
/// `φ^{KR^{n+1}}` to `φ^{KR^n}` on letters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    pub passed: bool,
    /// First `(n, letter)` where a check fails; `letter` is `None` for
    /// surjectivity.
    pub failure: Option<(usize, Option<Letter>)>,
}

pub fn tower_coherence(tower: &KrTower) -> CoherenceReport {
    for n in 0..tower.len().saturating_sub(1) {
        let rho = tower.connecting(n);
        if !rho.is_onto() {
            return CoherenceReport { passed: false, failure: Some((n, None)) };
        }
        let upper = tower.level_map(n + 1);
        let lower = tower.level_map(n);
        for a in 0..upper.len() {
            if rho.apply(upper.target(a)) != lower.target(a) {
                return CoherenceReport { passed: false, failure: Some((n, Some(a))) };
            }
        }
    }
    CoherenceReport { passed: true, failure: None }
}
