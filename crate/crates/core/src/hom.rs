//! Homomorphisms between finite semigroups.

use thiserror::Error;

use crate::alphabet::{GeneratingMap, Letter, Word};
use crate::semigroup::{Element, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("map has {got} entries, source has order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("image {value} of {element} is out of range for target order {order}")]
    OutOfRange { element: Element, value: Element, order: usize },
    #[error("map is not multiplicative at ({x}, {y})")]
    NotMultiplicative { x: Element, y: Element },
    #[error("letter images are not well defined: {left:?} and {right:?} are equal in the source but not in the target")]
    NotWellDefined { left: Word, right: Word },
    #[error("expected {expected} letter images, got {got}")]
    ImageCount { expected: usize, got: usize },
}

/// A validated homomorphism, stored as an element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    map: Vec<Element>,
    target_order: usize,
}

impl Homomorphism {
    pub fn new(source: &FiniteSemigroup, target: &FiniteSemigroup, map: Vec<Element>) -> Result<Self, HomError> {
        if map.len() != source.order() {
            return Err(HomError::LengthMismatch { expected: source.order(), got: map.len() });
        }
        for (element, &value) in map.iter().enumerate() {
            if value >= target.order() {
                return Err(HomError::OutOfRange { element, value, order: target.order() });
            }
        }
        let h = Self { map, target_order: target.order() };
        h.check_multiplicative(source, target)?;
        Ok(h)
    }

    pub(crate) fn new_unchecked(map: Vec<Element>, target_order: usize) -> Self {
        Self { map, target_order }
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        Self { map: s.elements().collect(), target_order: s.order() }
    }

    pub fn check_multiplicative(&self, source: &FiniteSemigroup, target: &FiniteSemigroup) -> Result<(), HomError> {
        for x in source.elements() {
            for y in source.elements() {
                if self.map[source.mul(x, y)] != target.mul(self.map[x], self.map[y]) {
                    return Err(HomError::NotMultiplicative { x, y });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn source_order(&self) -> usize {
        self.map.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_onto(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        self.map.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Homomorphism) -> Homomorphism {
        assert_eq!(self.target_order, next.source_order(), "composable maps");
        Homomorphism { map: self.map.iter().map(|&x| next.map[x]).collect(), target_order: next.target_order }
    }

    /// `f⁻¹(t)` in increasing order.
    pub fn fiber(&self, t: Element) -> Vec<Element> {
        (0..self.map.len()).filter(|&x| self.map[x] == t).collect()
    }
}

/// Extends letter images to the unique homomorphism `source -> target`
/// compatible with the generating map, if one exists.
///
/// Elements are reached breadth first through right multiplication by
/// letters; a clash between a stored image and a recomputed one yields the
/// two source words that witness the failure.
pub fn hom_from_generator_images(
    source: &FiniteSemigroup,
    gens: &GeneratingMap,
    target: &FiniteSemigroup,
    images: &[Element],
) -> Result<Homomorphism, HomError> {
    if images.len() != gens.len() {
        return Err(HomError::ImageCount { expected: gens.len(), got: images.len() });
    }
    for (a, &img) in images.iter().enumerate() {
        if img >= target.order() {
            return Err(HomError::OutOfRange { element: gens.target(a), value: img, order: target.order() });
        }
    }
    let mut image: Vec<Option<Element>> = vec![None; source.order()];
    let mut witness: Vec<Option<Word>> = vec![None; source.order()];
    let mut queue = Vec::new();
    for a in 0..gens.len() {
        let x = gens.target(a);
        match image[x] {
            None => {
                image[x] = Some(images[a]);
                witness[x] = Some(Word::letter(a));
                queue.push(x);
            }
            Some(prev) if prev != images[a] => {
                return Err(HomError::NotWellDefined { left: witness[x].clone().unwrap(), right: Word::letter(a) });
            }
            Some(_) => {}
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        let fx = image[x].unwrap();
        for a in 0..gens.len() as Letter {
            let y = source.mul(x, gens.target(a));
            let fy = target.mul(fx, images[a]);
            let word = witness[x].as_ref().unwrap().pushed(a);
            match image[y] {
                None => {
                    image[y] = Some(fy);
                    witness[y] = Some(word);
                    queue.push(y);
                }
                Some(prev) if prev != fy => {
                    return Err(HomError::NotWellDefined { left: witness[y].clone().unwrap(), right: word });
                }
                Some(_) => {}
            }
        }
    }
    let map: Vec<Element> = image
        .into_iter()
        .map(|v| v.expect("generating map reaches every element"))
        .collect();
    Homomorphism::new(source, target, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_images_give_identity() {
        let s = catalog::rectangular_band(2, 2);
        let gens = GeneratingMap::identity(&s);
        let h = hom_from_generator_images(&s, &gens, &s, gens.targets()).unwrap();
        assert_eq!(h, Homomorphism::identity(&s));
    }

    #[test]
    fn collapse_to_trivial() {
        let s = catalog::semilattice2();
        let gens = GeneratingMap::identity(&s);
        let t = catalog::trivial();
        let h = hom_from_generator_images(&s, &gens, &t, &[0, 0]).unwrap();
        assert_eq!(h.map(), &[0, 0]);
        assert!(h.is_onto());
    }

    #[test]
    fn order_obstruction() {
        let z2 = catalog::cyclic_group(2);
        let gens = GeneratingMap::from_targets(&z2, vec![1]).unwrap();
        let z3 = catalog::cyclic_group(3);
        match hom_from_generator_images(&z2, &gens, &z3, &[1]) {
            Err(HomError::NotWellDefined { left, right }) => {
                assert_eq!(gens.evaluate(&z2, &left), gens.evaluate(&z2, &right));
                let img = |w: &Word| w.letters().iter().fold(z3.virtual_identity(), |acc, _| z3.mul_i(acc, 1));
                assert_ne!(img(&left), img(&right));
            }
            other => panic!("expected NotWellDefined, got {other:?}"),
        }
    }

    #[test]
    fn explicit_validation() {
        let z2 = catalog::cyclic_group(2);
        let t = catalog::trivial();
        assert!(Homomorphism::new(&z2, &t, vec![0, 0]).is_ok());
        assert!(matches!(Homomorphism::new(&t, &z2, vec![1]), Err(HomError::NotMultiplicative { .. })));
        assert!(matches!(Homomorphism::new(&z2, &t, vec![0]), Err(HomError::LengthMismatch { .. })));
    }
}
