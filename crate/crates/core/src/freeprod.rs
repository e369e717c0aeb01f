//! Truncated free products: the free product of finite semigroups with
//! every element of more than `cap` alternation blocks sent to a zero.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hom::{HomError, Homomorphism};
use crate::semigroup::{Element, FiniteSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeProductError {
    #[error("no factors given")]
    NoFactors,
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error("truncated product would have about {estimate} elements (limit {limit})")]
    TooLarge { estimate: u128, limit: usize },
    #[error("unknown symbol ({factor}, {element})")]
    UnknownSymbol { factor: usize, element: Element },
    #[error("empty word")]
    EmptyWord,
    #[error("adjacent entries {0} and {1} come from the same factor")]
    NotAlternating(usize, usize),
    #[error(transparent)]
    Table(#[from] SemigroupError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

/// `s_1 s_2 … s_m` with `s_i` in factor `f_i` and `f_i ≠ f_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlternatingForm(Vec<(usize, Element)>);

impl AlternatingForm {
    pub fn new(entries: Vec<(usize, Element)>) -> Result<Self, FreeProductError> {
        if entries.is_empty() {
            return Err(FreeProductError::EmptyWord);
        }
        if let Some(i) = entries.windows(2).position(|w| w[0].0 == w[1].0) {
            return Err(FreeProductError::NotAlternating(i, i + 1));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[(usize, Element)] {
        &self.0
    }

    /// Number of alternation blocks.
    pub fn blocks(&self) -> usize {
        self.0.len()
    }

    /// Product in the (untruncated) free product.
    pub fn multiply(&self, other: &AlternatingForm, factors: &[FiniteSemigroup]) -> AlternatingForm {
        let mut out = self.0.clone();
        let mut rest = other.0.iter();
        if let (Some(last), Some(&(f, y))) = (out.last_mut(), other.0.first()) {
            if last.0 == f {
                last.1 = factors[f].mul(last.1, y);
                rest.next();
            }
        }
        out.extend(rest);
        AlternatingForm(out)
    }

    pub fn display<'a>(&'a self, factors: &'a [FiniteSemigroup]) -> impl fmt::Display + 'a {
        FormDisplay { form: self, factors }
    }
}

struct FormDisplay<'a> {
    form: &'a AlternatingForm,
    factors: &'a [FiniteSemigroup],
}

impl fmt::Display for FormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(k, x)) in self.form.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}", k, self.factors[k].name(x))?;
        }
        Ok(())
    }
}

/// Reduces a word over the disjoint union of the factors to its
/// alternating form.
pub fn normal_form(symbols: &[(usize, Element)], factors: &[FiniteSemigroup]) -> Result<AlternatingForm, FreeProductError> {
    let mut out: Vec<(usize, Element)> = Vec::with_capacity(symbols.len());
    for &(f, x) in symbols {
        if f >= factors.len() || x >= factors[f].order() {
            return Err(FreeProductError::UnknownSymbol { factor: f, element: x });
        }
        match out.last_mut() {
            Some(last) if last.0 == f => last.1 = factors[f].mul(last.1, x),
            _ => out.push((f, x)),
        }
    }
    AlternatingForm::new(out)
}

#[derive(Debug, Clone)]
pub struct TruncatedFreeProduct {
    factors: Vec<FiniteSemigroup>,
    cap: usize,
    result: FiniteSemigroup,
    forms: Vec<AlternatingForm>,
    index: HashMap<AlternatingForm, Element>,
    embeddings: Vec<Homomorphism>,
}

impl TruncatedFreeProduct {
    pub const ORDER_LIMIT: usize = 100_000;

    pub fn factors(&self) -> &[FiniteSemigroup] {
        &self.factors
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn result(&self) -> &FiniteSemigroup {
        &self.result
    }

    /// The zero that absorbs forms with more than `cap` blocks.
    pub fn zero(&self) -> Element {
        self.forms.len()
    }

    /// Form of a nonzero element.
    pub fn form(&self, x: Element) -> Option<&AlternatingForm> {
        self.forms.get(x)
    }

    pub fn element_of(&self, form: &AlternatingForm) -> Element {
        self.index.get(form).copied().unwrap_or(self.zero())
    }

    /// Embedding of factor `i`.
    pub fn embedding(&self, i: usize) -> &Homomorphism {
        &self.embeddings[i]
    }

    pub fn embeddings(&self) -> &[Homomorphism] {
        &self.embeddings
    }
}

/// Number of alternating forms of at most `cap` blocks.
fn count_forms(sizes: &[usize], cap: usize) -> u128 {
    let mut ending: Vec<u128> = sizes.iter().map(|&n| n as u128).collect();
    let mut total: u128 = ending.iter().sum();
    for _ in 1..cap {
        let sum: u128 = ending.iter().sum();
        ending = ending.iter().zip(sizes).map(|(&e, &n)| (sum - e).saturating_mul(n as u128)).collect();
        total = total.saturating_add(ending.iter().sum());
        if total > u64::MAX as u128 {
            break;
        }
    }
    total
}

pub fn truncated_free_product(factors: &[FiniteSemigroup], cap: usize) -> Result<TruncatedFreeProduct, FreeProductError> {
    truncated_free_product_with_limit(factors, cap, TruncatedFreeProduct::ORDER_LIMIT)
}

/// As [`truncated_free_product`] with an explicit limit on the number of
/// elements.
pub fn truncated_free_product_with_limit(
    factors: &[FiniteSemigroup],
    cap: usize,
    limit: usize,
) -> Result<TruncatedFreeProduct, FreeProductError> {
    if factors.is_empty() {
        return Err(FreeProductError::NoFactors);
    }
    if cap == 0 {
        return Err(FreeProductError::ZeroCap);
    }
    let sizes: Vec<usize> = factors.iter().map(FiniteSemigroup::order).collect();
    let estimate = count_forms(&sizes, cap) + 1;
    if estimate > limit as u128 {
        return Err(FreeProductError::TooLarge { estimate, limit });
    }

    // by block count, then lexicographically
    let mut forms: Vec<AlternatingForm> = Vec::new();
    let mut layer: Vec<Vec<(usize, Element)>> =
        (0..factors.len()).flat_map(|f| factors[f].elements().map(move |x| vec![(f, x)])).collect();
    for blocks in 1..=cap {
        forms.extend(layer.iter().cloned().map(AlternatingForm));
        if blocks == cap {
            break;
        }
        let mut next = Vec::new();
        for w in &layer {
            let last = w.last().expect("nonempty").0;
            for f in (0..factors.len()).filter(|&f| f != last) {
                for x in factors[f].elements() {
                    let mut v = w.clone();
                    v.push((f, x));
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    let index: HashMap<AlternatingForm, Element> = forms.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let zero = forms.len();
    let order = zero + 1;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let z = if x == zero || y == zero {
                zero
            } else {
                let p = forms[x].multiply(&forms[y], factors);
                if p.blocks() > cap {
                    zero
                } else {
                    index[&p]
                }
            };
            table.push(z as u32);
        }
    }
    let mut names: Vec<String> = forms.iter().map(|f| f.display(factors).to_string()).collect();
    names.push("0".into());
    let result = FiniteSemigroup::from_flat_unchecked(order, table)?.with_names(Some(names))?;
    let mut gens: Vec<Element> = (0..zero).filter(|&x| forms[x].blocks() == 1).collect();
    gens.push(zero);
    result.check_associative_with_generators(&gens)?;

    let embeddings = factors
        .iter()
        .enumerate()
        .map(|(f, s)| Homomorphism::new(s, &result, s.elements().map(|x| index[&AlternatingForm(vec![(f, x)])]).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedFreeProduct { factors: factors.to_vec(), cap, result, forms, index, embeddings })
}

/// Outcome of [`separate`].
#[derive(Debug, Clone)]
pub enum Separation {
    Equal,
    /// A truncation in which the two forms are distinct nonzero elements.
    Separated { product: TruncatedFreeProduct, u: Element, v: Element },
}

/// Finds a finite quotient of the free product distinguishing `u` and `v`:
/// the truncation one past the larger block count.
pub fn separate(
    u: &AlternatingForm,
    v: &AlternatingForm,
    factors: &[FiniteSemigroup],
) -> Result<Separation, FreeProductError> {
    for form in [u, v] {
        normal_form(form.entries(), factors)?;
    }
    if u == v {
        return Ok(Separation::Equal);
    }
    let cap = u.blocks().max(v.blocks()) + 1;
    let product = truncated_free_product(factors, cap)?;
    let (eu, ev) = (product.element_of(u), product.element_of(v));
    debug_assert!(eu != ev && eu != product.zero() && ev != product.zero());
    Ok(Separation::Separated { product, u: eu, v: ev })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn two_trivial(cap: usize) -> TruncatedFreeProduct {
        let t = catalog::trivial();
        truncated_free_product(&[t.clone(), t], cap).unwrap()
    }

    #[test]
    fn two_trivial_factors_cap_three() {
        let p = two_trivial(3);
        assert_eq!(p.result().order(), 7);
        let e = AlternatingForm::new(vec![(0, 0)]).unwrap();
        let f = AlternatingForm::new(vec![(1, 0)]).unwrap();
        let ef = p.result().mul(p.element_of(&e), p.element_of(&f));
        let fe = p.result().mul(p.element_of(&f), p.element_of(&e));
        let efe = p.element_of(&AlternatingForm::new(vec![(0, 0), (1, 0), (0, 0)]).unwrap());
        assert_eq!(p.result().mul(ef, fe), efe);
        assert_eq!(p.result().mul(ef, ef), p.zero());
    }

    #[test]
    fn nonzero_count_is_twice_cap() {
        for cap in 1..6 {
            assert_eq!(two_trivial(cap).result().order(), 2 * cap + 1);
        }
    }

    #[test]
    fn count_matches_enumeration() {
        let f = [catalog::cyclic_group(2), catalog::semilattice2(), catalog::trivial()];
        for cap in 1..4 {
            let p = truncated_free_product(&f, cap).unwrap();
            assert_eq!(count_forms(&[2, 2, 1], cap) as usize + 1, p.result().order());
        }
    }

    #[test]
    fn embeddings_are_injective() {
        let f = [catalog::cyclic_group(3), catalog::semilattice2()];
        let p = truncated_free_product(&f, 2).unwrap();
        assert!(p.embeddings().iter().all(Homomorphism::is_injective));
    }

    #[test]
    fn guard_refuses_huge() {
        let f = [catalog::cyclic_group(3), catalog::cyclic_group(3)];
        let e = truncated_free_product(&f, 40).unwrap_err();
        assert!(matches!(e, FreeProductError::TooLarge { .. }));
    }

    #[test]
    fn normal_form_merges_and_checks() {
        let f = [catalog::cyclic_group(2), catalog::trivial()];
        let w = normal_form(&[(0, 1), (0, 1), (1, 0), (1, 0)], &f).unwrap();
        assert_eq!(w.entries(), &[(0, 0), (1, 0)]);
        assert!(matches!(normal_form(&[(2, 0)], &f), Err(FreeProductError::UnknownSymbol { .. })));
        assert!(matches!(normal_form(&[(1, 1)], &f), Err(FreeProductError::UnknownSymbol { .. })));
    }

    #[test]
    fn separates_distinct_forms() {
        let f = [catalog::trivial(), catalog::trivial()];
        let u = AlternatingForm::new(vec![(0, 0), (1, 0)]).unwrap();
        let v = AlternatingForm::new(vec![(0, 0), (1, 0), (0, 0)]).unwrap();
        match separate(&u, &v, &f).unwrap() {
            Separation::Separated { u, v, product } => {
                assert_ne!(u, v);
                assert_eq!(product.cap(), 4);
            }
            Separation::Equal => panic!("distinct forms"),
        }
        assert!(matches!(separate(&u, &u, &f).unwrap(), Separation::Equal));
    }
}
