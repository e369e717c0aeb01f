//! Finite semigroups stored as dense multiplication tables.
//!
//! Elements are indices `0..order`. Formulas that quantify over `S^I` use the
//! extended index `order` for a virtual identity `I`; see [`FiniteSemigroup::mul_i`].

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::hom::Homomorphism;

/// Index of an element in a [`FiniteSemigroup`].
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("multiplication table is empty")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row},{col}) = {value} is out of range for order {order}")]
    IndexOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("table is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NonAssociative { x: Element, y: Element, z: Element },
    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("sandwich matrix is malformed: {0}")]
    BadSandwich(String),
    #[error("partition is not a congruence: {x} ~ {y} but {side} multiplication by {z} separates them")]
    NotACongruence { x: Element, y: Element, z: Element, side: Side },
    #[error("subset is not an ideal: {element} in subset but {side} product with {multiplier} is not")]
    NotAnIdeal { element: Element, multiplier: Element, side: Side },
    #[error("ideal must be nonempty")]
    EmptyIdeal,
    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
}

/// Which side a multiplication happens on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

/// A finite semigroup given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u32>,
    names: Option<Vec<String>>,
    adjoined_identity: Option<Element>,
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("order", &self.order)
            .field("names", &self.names)
            .field("adjoined_identity", &self.adjoined_identity)
            .finish_non_exhaustive()
    }
}

impl FiniteSemigroup {
    /// Validates a square table and builds the semigroup. Associativity is
    /// checked on every triple.
    pub fn from_table(
        table: Vec<Vec<Element>>,
        names: Option<Vec<String>>,
    ) -> Result<Self, SemigroupError> {
        let order = table.len();
        if order == 0 {
            return Err(SemigroupError::EmptyTable);
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(SemigroupError::NotSquare { row, len: entries.len(), expected: order });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(SemigroupError::IndexOutOfRange { row, col, value, order });
                }
                flat.push(value as u32);
            }
        }
        let s = Self::from_flat_unchecked(order, flat)?.with_names(names)?;
        s.check_associative()?;
        Ok(s)
    }

    /// Builds a semigroup from a closure, validating associativity in full.
    pub fn from_fn(
        order: usize,
        mut f: impl FnMut(Element, Element) -> Element,
    ) -> Result<Self, SemigroupError> {
        let s = Self::from_fn_unchecked(order, &mut f)?;
        s.check_associative()?;
        Ok(s)
    }

    pub(crate) fn from_fn_unchecked(
        order: usize,
        mut f: impl FnMut(Element, Element) -> Element,
    ) -> Result<Self, SemigroupError> {
        if order == 0 {
            return Err(SemigroupError::EmptyTable);
        }
        let mut flat = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let value = f(x, y);
                if value >= order {
                    return Err(SemigroupError::IndexOutOfRange { row: x, col: y, value, order });
                }
                flat.push(value as u32);
            }
        }
        Self::from_flat_unchecked(order, flat)
    }

    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<u32>) -> Result<Self, SemigroupError> {
        if order == 0 {
            return Err(SemigroupError::EmptyTable);
        }
        debug_assert_eq!(table.len(), order * order);
        Ok(Self { order, table, names: None, adjoined_identity: None })
    }

    /// Attaches display names (one per element) or clears them with `None`.
    pub fn with_names(mut self, names: Option<Vec<String>>) -> Result<Self, SemigroupError> {
        if let Some(n) = &names {
            if n.len() != self.order {
                return Err(SemigroupError::NameCount { expected: self.order, got: n.len() });
            }
        }
        self.names = names;
        Ok(self)
    }

    pub(crate) fn with_adjoined_identity_flag(mut self, e: Option<Element>) -> Self {
        self.adjoined_identity = e;
        self
    }

    /// Full O(n³) associativity check.
    pub fn check_associative(&self) -> Result<(), SemigroupError> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(SemigroupError::NonAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Light's associativity test: it suffices that `(x a) y = x (a y)` for
    /// all `x, y` and every `a` in a generating set.
    pub fn check_associative_with_generators(&self, gens: &[Element]) -> Result<(), SemigroupError> {
        let n = self.order;
        for &a in gens {
            for x in 0..n {
                let xa = self.mul(x, a);
                for y in 0..n {
                    if self.mul(xa, y) != self.mul(x, self.mul(a, y)) {
                        return Err(SemigroupError::NonAssociative { x, y: a, z: y });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y] as Element
    }

    /// Product in `S^I`, where the index `self.order()` stands for the
    /// virtual identity `I`.
    #[inline]
    pub fn mul_i(&self, x: Element, y: Element) -> Element {
        if x == self.order {
            y
        } else if y == self.order {
            x
        } else {
            self.mul(x, y)
        }
    }

    /// Index used for the virtual identity of `S^I`.
    #[inline]
    pub fn virtual_identity(&self) -> Element {
        self.order
    }

    /// Iterates over `S^I`, virtual identity last.
    pub fn elements_i(&self) -> std::ops::RangeInclusive<Element> {
        0..=self.order
    }

    pub fn product(&self, elements: impl IntoIterator<Item = Element>) -> Option<Element> {
        elements.into_iter().reduce(|acc, x| self.mul(acc, x))
    }

    pub fn table_rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(|r| r.iter().map(|&v| v as Element).collect()).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name; falls back to the index.
    pub fn name(&self, x: Element) -> String {
        if x == self.order {
            return "I".to_string();
        }
        match &self.names {
            Some(n) => n[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn element_by_name(&self, name: &str) -> Option<Element> {
        match &self.names {
            Some(n) => n.iter().position(|m| m == name),
            None => name.parse().ok().filter(|&i: &usize| i < self.order),
        }
    }

    pub fn adjoined_identity(&self) -> Option<Element> {
        self.adjoined_identity
    }

    pub fn check_element(&self, x: Element) -> Result<(), SemigroupError> {
        if x < self.order {
            Ok(())
        } else {
            Err(SemigroupError::ElementOutOfRange { element: x, order: self.order })
        }
    }

    pub fn is_idempotent(&self, x: Element) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// A two-sided identity element, if the semigroup is a monoid.
    pub fn identity_element(&self) -> Option<Element> {
        self.elements().find(|&e| self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// `s^k` for `k >= 1`.
    pub fn power(&self, s: Element, k: usize) -> Element {
        assert!(k >= 1, "power exponent must be positive");
        let mut result = s;
        let mut base = s;
        let mut e = k - 1;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Index `i` and period `p` of the monogenic subsemigroup of `s`:
    /// `s^i = s^{i+p}` with `i` and `p` minimal.
    pub fn index_and_period(&self, s: Element) -> (usize, usize) {
        let mut seen = vec![0usize; self.order];
        let mut x = s;
        let mut k = 1;
        loop {
            if seen[x] != 0 {
                return (seen[x], k - seen[x]);
            }
            seen[x] = k;
            x = self.mul(x, s);
            k += 1;
        }
    }

    /// `s^{ω+k}`: the element `k` steps beyond the idempotent power of `s` in
    /// its cycle. Negative `k` walks backwards around the cycle. The virtual
    /// identity is its own ω-power.
    pub fn omega_power(&self, s: Element, k: i64) -> Element {
        if s == self.order {
            return s;
        }
        let (index, period) = self.index_and_period(s);
        // smallest multiple of the period that is >= index
        let omega = index.div_ceil(period) * period;
        let shift = k.rem_euclid(period as i64) as usize;
        self.power(s, omega + shift)
    }

    pub fn omega(&self, s: Element) -> Element {
        self.omega_power(s, 0)
    }

    /// Smallest `n >= 1` with `x^n = x^ω` for every element.
    pub fn exponent(&self) -> usize {
        let (mut period, mut index) = (1, 1);
        for s in self.elements() {
            let (i, p) = self.index_and_period(s);
            period = lcm(period, p);
            index = index.max(i);
        }
        index.div_ceil(period) * period
    }

    /// `S^I`: a fresh identity is appended at index `order`, even if `S` is
    /// already a monoid.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        let n = self.order;
        let table = (0..=n)
            .flat_map(|x| (0..=n).map(move |y| (x, y)))
            .map(|(x, y)| self.mul_i(x, y) as u32)
            .collect();
        let names = self.names.clone().map(|mut v| {
            v.push(fresh_name(&v, "I"));
            v
        });
        FiniteSemigroup { order: n + 1, table, names, adjoined_identity: Some(n) }
    }

    /// `S^0`: a fresh zero is appended at index `order`.
    pub fn adjoin_zero(&self) -> FiniteSemigroup {
        let n = self.order;
        let table = (0..=n)
            .flat_map(|x| (0..=n).map(move |y| (x, y)))
            .map(|(x, y)| if x == n || y == n { n as u32 } else { self.mul(x, y) as u32 })
            .collect();
        let names = self.names.clone().map(|mut v| {
            v.push(fresh_name(&v, "0"));
            v
        });
        FiniteSemigroup { order: n + 1, table, names, adjoined_identity: None }
    }

    /// Direct product; element `(x, y)` has index `x * other.order() + y`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let m = other.order;
        let order = self.order * m;
        let table = (0..order)
            .flat_map(|p| (0..order).map(move |q| (p, q)))
            .map(|(p, q)| (self.mul(p / m, q / m) * m + other.mul(p % m, q % m)) as u32)
            .collect();
        FiniteSemigroup { order, table, names: None, adjoined_identity: None }
    }

    /// Subsemigroup generated by `gens`, as a sorted element list.
    pub fn generated_by(&self, gens: &[Element]) -> Vec<Element> {
        let mut inside = vec![false; self.order];
        let mut queue: Vec<Element> = Vec::new();
        for &g in gens {
            if !inside[g] {
                inside[g] = true;
                queue.push(g);
            }
        }
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Subsemigroup closure of an arbitrary subset.
    pub fn closure(&self, subset: &[Element]) -> Vec<Element> {
        let mut inside = vec![false; self.order];
        let mut members: Vec<Element> = Vec::new();
        for &g in subset {
            if !inside[g] {
                inside[g] = true;
                members.push(g);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = members.clone();
            for &x in &snapshot {
                for &y in &snapshot {
                    let z = self.mul(x, y);
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                        changed = true;
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    pub fn is_subsemigroup(&self, subset: &[Element]) -> bool {
        let inside = self.indicator(subset);
        subset.iter().all(|&x| subset.iter().all(|&y| inside[self.mul(x, y)]))
    }

    /// The subsemigroup on `subset` re-indexed in the given order.
    pub fn restrict(&self, subset: &[Element]) -> Option<FiniteSemigroup> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in subset.iter().enumerate() {
            pos[x] = i;
        }
        let k = subset.len();
        if k == 0 {
            return None;
        }
        let mut table = Vec::with_capacity(k * k);
        for &x in subset {
            for &y in subset {
                let p = pos[self.mul(x, y)];
                if p == usize::MAX {
                    return None;
                }
                table.push(p as u32);
            }
        }
        let names = self.names.as_ref().map(|n| subset.iter().map(|&x| n[x].clone()).collect());
        Some(FiniteSemigroup { order: k, table, names, adjoined_identity: None })
    }

    pub(crate) fn indicator(&self, subset: &[Element]) -> Vec<bool> {
        let mut inside = vec![false; self.order];
        for &x in subset {
            inside[x] = true;
        }
        inside
    }

    /// Checks the group axioms and returns the identity.
    pub fn group_identity(&self) -> Result<Element, SemigroupError> {
        let e = self
            .identity_element()
            .ok_or_else(|| SemigroupError::NotAGroup("no identity element".into()))?;
        for x in self.elements() {
            if !self.elements().any(|y| self.mul(x, y) == e) {
                return Err(SemigroupError::NotAGroup(format!("element {} has no inverse", self.name(x))));
            }
        }
        Ok(e)
    }

    pub fn is_group(&self) -> bool {
        self.group_identity().is_ok()
    }

    /// Rees matrix semigroup `M[G; I, Λ; P]` with `P` given as a `Λ × I`
    /// matrix of group elements. The triple `(i, g, λ)` has index
    /// `(i * |G| + g) * |Λ| + λ`, and
    /// `(i, g, λ)(j, h, μ) = (i, g·P[λ][j]·h, μ)`.
    pub fn rees_matrix(group: &FiniteSemigroup, sandwich: &[Vec<Element>]) -> Result<FiniteSemigroup, SemigroupError> {
        group.group_identity()?;
        let lambdas = sandwich.len();
        if lambdas == 0 {
            return Err(SemigroupError::BadSandwich("no rows".into()));
        }
        let rows = sandwich[0].len();
        if rows == 0 {
            return Err(SemigroupError::BadSandwich("no columns".into()));
        }
        for (l, row) in sandwich.iter().enumerate() {
            if row.len() != rows {
                return Err(SemigroupError::BadSandwich(format!("row {l} has {} entries, expected {rows}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&p| p >= group.order) {
                return Err(SemigroupError::BadSandwich(format!("entry {bad} is not a group element")));
            }
        }
        let g = group.order;
        let encode = |i: usize, x: usize, l: usize| (i * g + x) * lambdas + l;
        let order = rows * g * lambdas;
        let s = Self::from_fn_unchecked(order, |p, q| {
            let (i, x, l) = (p / (g * lambdas), (p / lambdas) % g, p % lambdas);
            let (j, y, m) = (q / (g * lambdas), (q / lambdas) % g, q % lambdas);
            let mid = group.mul(group.mul(x, sandwich[l][j]), y);
            encode(i, mid, m)
        })?;
        let names = (0..order)
            .map(|p| {
                let (i, x, l) = (p / (g * lambdas), (p / lambdas) % g, p % lambdas);
                format!("({},{},{})", i, group.name(x), l)
            })
            .collect();
        s.with_names(Some(names))
    }

    /// Quotient by the partition whose class of `x` is `labels[x]`. Classes are
    /// renumbered by least member.
    pub fn quotient(&self, labels: &[usize]) -> Result<(FiniteSemigroup, Homomorphism), SemigroupError> {
        if labels.len() != self.order {
            return Err(SemigroupError::NameCount { expected: self.order, got: labels.len() });
        }
        let mut renumber = std::collections::HashMap::new();
        let mut class = vec![0usize; self.order];
        let mut reps = Vec::new();
        for x in self.elements() {
            let next = renumber.len();
            let c = *renumber.entry(labels[x]).or_insert(next);
            if c == reps.len() {
                reps.push(x);
            }
            class[x] = c;
        }
        for x in self.elements() {
            let r = reps[class[x]];
            if r == x {
                continue;
            }
            for z in self.elements() {
                if class[self.mul(x, z)] != class[self.mul(r, z)] {
                    return Err(SemigroupError::NotACongruence { x: r, y: x, z, side: Side::Right });
                }
                if class[self.mul(z, x)] != class[self.mul(z, r)] {
                    return Err(SemigroupError::NotACongruence { x: r, y: x, z, side: Side::Left });
                }
            }
        }
        let k = reps.len();
        let table = (0..k)
            .flat_map(|c| (0..k).map(move |d| (c, d)))
            .map(|(c, d)| class[self.mul(reps[c], reps[d])] as u32)
            .collect();
        let names = self.names.as_ref().map(|n| reps.iter().map(|&r| n[r].clone()).collect());
        let q = FiniteSemigroup { order: k, table, names, adjoined_identity: None };
        let hom = Homomorphism::new_unchecked(class, k);
        Ok((q, hom))
    }

    /// Rees quotient `S / J`, collapsing the two-sided ideal `J` to a zero.
    pub fn rees_quotient(&self, ideal: &[Element]) -> Result<(FiniteSemigroup, Homomorphism), SemigroupError> {
        if ideal.is_empty() {
            return Err(SemigroupError::EmptyIdeal);
        }
        for &x in ideal {
            self.check_element(x)?;
        }
        let inside = self.indicator(ideal);
        for &x in ideal {
            for s in self.elements() {
                if !inside[self.mul(x, s)] {
                    return Err(SemigroupError::NotAnIdeal { element: x, multiplier: s, side: Side::Right });
                }
                if !inside[self.mul(s, x)] {
                    return Err(SemigroupError::NotAnIdeal { element: x, multiplier: s, side: Side::Left });
                }
            }
        }
        let zero_label = self.order;
        let labels: Vec<usize> = self.elements().map(|x| if inside[x] { zero_label } else { x }).collect();
        self.quotient(&labels)
    }

    /// Checks whether `f: self -> other` given as a map is an isomorphism.
    pub fn is_isomorphism(&self, other: &FiniteSemigroup, map: &[Element]) -> bool {
        if self.order != other.order || map.len() != self.order {
            return false;
        }
        let mut seen = vec![false; other.order];
        for &y in map {
            if y >= other.order || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        self.elements().all(|x| self.elements().all(|y| map[self.mul(x, y)] == other.mul(map[x], map[y])))
    }

    pub fn elements_set(&self) -> BTreeSet<Element> {
        self.elements().collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn fresh_name(existing: &[String], base: &str) -> String {
    let mut candidate = base.to_string();
    while existing.iter().any(|n| *n == candidate) {
        candidate.push('\'');
    }
    candidate
}
